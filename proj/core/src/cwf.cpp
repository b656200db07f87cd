#include "psrecon/cwf.hpp"

#include <string>

#include "psrecon/error.hpp"

namespace psrecon {

WeightGrid::WeightGrid(int n, int h) : n_(n), h_(h) {
  if (n < 1 || h < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "grid needs n >= 1 and h >= 1, got n=" + std::to_string(n) +
                    ", h=" + std::to_string(h));
  }
  values_.assign(static_cast<std::size_t>(2 * h) * (n + 1), 0);
}

CwfCheck validate_cwf(const WeightGrid& g) {
  const int n = g.length();
  auto fail = [](int item, int l, int m, std::string msg) {
    return CwfCheck{item, l, m, std::move(msg)};
  };
  for (int m = 1; m <= g.rows(); ++m) {
    if (g.at(0, m) != 0) {
      return fail(1, 0, m, "f(0," + std::to_string(m) + ") != 0");
    }
  }
  for (int m = 1; m <= g.rows(); ++m) {
    for (int l = 1; l <= n; ++l) {
      const int step = g.at(l, m) - g.at(l - 1, m);
      if (step != 0 && step != 1) {
        return fail(2, l, m,
                    "f(" + std::to_string(l) + "," + std::to_string(m) +
                        ") - f(" + std::to_string(l - 1) + "," +
                        std::to_string(m) + ") = " + std::to_string(step));
      }
    }
  }
  for (int j = 1; j <= g.string_count(); ++j) {
    const int wj = g.at(0, 2 * j - 1) + g.at(n, 2 * j);
    for (int l = 1; l <= n; ++l) {
      if (g.at(l, 2 * j - 1) + g.at(n - l, 2 * j) != wj) {
        return fail(3, l, 2 * j - 1,
                    "f(l," + std::to_string(2 * j - 1) + ") + f(n-l," +
                        std::to_string(2 * j) + ") not constant at l=" +
                        std::to_string(l));
      }
    }
  }
  return {};
}

Cwf::Cwf(WeightGrid grid) : grid_(std::move(grid)) {
  if (auto check = validate_cwf(grid_); !check.ok()) {
    throw Error(ErrorCode::InvalidArgument,
                "not a cumulative weight function: " + check.message);
  }
}

std::optional<int> Cwf::constant_weight() const {
  const int w = string_weight(1);
  for (int j = 2; j <= string_count(); ++j) {
    if (string_weight(j) != w) return std::nullopt;
  }
  return w;
}

std::ostream& operator<<(std::ostream& os, const Cwf& f) {
  for (int m = 1; m <= f.rows(); ++m) {
    for (int l = 0; l <= f.length(); ++l) {
      if (l > 0) os << ' ';
      os << f.at(l, m);
    }
    os << '\n';
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const MaximalInterval& iv) {
  return os << '[' << iv.lo << ',' << iv.hi << ']';
}

Cwf induce(const StringMultiset& u) {
  const int n = u.length();
  WeightGrid g(n, u.size());
  int j = 1;
  for (const auto& t : u.members()) {
    for (int l = 1; l <= n; ++l) {
      g.at(l, 2 * j - 1) = g.at(l - 1, 2 * j - 1) + t.bit(l);
      g.at(l, 2 * j) = g.at(l - 1, 2 * j) + t.bit(n - l + 1);
    }
    ++j;
  }
  return Cwf(std::move(g));
}

StringMultiset corresponding_multiset(const Cwf& f) {
  std::vector<BitString> out;
  out.reserve(f.string_count());
  std::vector<int> bits(f.length());
  for (int j = 1; j <= f.string_count(); ++j) {
    for (int l = 1; l <= f.length(); ++l) {
      bits[l - 1] = f.at(l, 2 * j - 1) - f.at(l - 1, 2 * j - 1);
    }
    out.push_back(BitString::from_bits(bits));
  }
  return StringMultiset(std::move(out));
}

int median2(const Cwf& f, int m) {
  const int n = f.length();
  return f.at(n / 2, m) + f.at((n + 1) / 2, m);
}

std::vector<int> group_by_median(const Cwf& f, int med2) {
  std::vector<int> rows;
  for (int m = 1; m <= f.rows(); ++m) {
    if (median2(f, m) == med2) rows.push_back(m);
  }
  return rows;
}

std::vector<int> level_set(const Cwf& f, int l, int w) {
  std::vector<int> rows;
  if (l < 0 || l > f.length()) return rows;
  for (int m = 1; m <= f.rows(); ++m) {
    if (f.at(l, m) == w) rows.push_back(m);
  }
  return rows;
}

std::vector<MaximalInterval> maximal_intervals(const Cwf& f, int m1, int m2) {
  std::vector<MaximalInterval> out;
  const int n = f.length();
  int l = 1;
  while (l <= n) {
    if (f.at(l, m1) == f.at(l, m2)) {
      ++l;
      continue;
    }
    const int lo = l;
    while (l <= n && f.at(l, m1) != f.at(l, m2)) ++l;
    out.push_back({lo, l - 1});
  }
  return out;
}

namespace {

bool in_discrepancy(const Cwf& f, int l, int m1, int m2) {
  return l >= 1 && l <= f.length() && f.at(l, m1) != f.at(l, m2);
}

}  // namespace

Cwf swap(const Cwf& f, const MaximalInterval& iv, int m1, int m2) {
  const int n = f.length();
  if (m1 < 1 || m2 < 1 || m1 > f.rows() || m2 > f.rows() || m1 == m2) {
    throw Error(ErrorCode::InvalidArgument, "swap needs two distinct rows");
  }
  bool maximal = iv.lo >= 1 && iv.lo <= iv.hi && iv.hi <= n &&
                 !in_discrepancy(f, iv.lo - 1, m1, m2) &&
                 !in_discrepancy(f, iv.hi + 1, m1, m2);
  for (int l = iv.lo; maximal && l <= iv.hi; ++l) {
    maximal = in_discrepancy(f, l, m1, m2);
  }
  if (!maximal) {
    throw Error(ErrorCode::NotAMaximalInterval,
                "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) +
                    "] is not a maximal interval between rows " +
                    std::to_string(m1) + " and " + std::to_string(m2));
  }

  WeightGrid g = f.grid();
  const int m1s = partner(m1);
  const int m2s = partner(m2);
  if (m1s != m2) {
    if (!f.constant_weight()) {
      throw Error(ErrorCode::InvalidArgument,
                  "swap across strings requires a constant-weight CWF");
    }
    for (int l = iv.lo; l <= iv.hi; ++l) {
      g.at(l, m1) = f.at(l, m2);
      g.at(l, m2) = f.at(l, m1);
      g.at(n - l, m1s) = f.at(n - l, m2s);
      g.at(n - l, m2s) = f.at(n - l, m1s);
    }
  } else {
    // Rows m1 and m1* trade values on I ∪ Ī, which is mirror-symmetric.
    for (int l = 1; l <= n; ++l) {
      const bool in_i = l >= iv.lo && l <= iv.hi;
      const bool in_mirror = l >= n - iv.hi && l <= n - iv.lo;
      if (in_i || in_mirror) {
        g.at(l, m1) = f.at(l, m2);
        g.at(l, m2) = f.at(l, m1);
      }
    }
  }
  return Cwf(std::move(g));
}

bool is_solution(const Cwf& f, const CompositionMultiset& m) {
  const int n = f.length();
  if (n != m.length() || f.string_count() != m.string_count()) return false;
  std::vector<int> tally(static_cast<std::size_t>(n) + 1, 0);
  for (int l = 1; l <= n; ++l) {
    for (int row = 1; row <= f.rows(); ++row) ++tally[f.at(l, row)];
    bool match = true;
    for (const auto& e : m.level(l)) {
      if (tally[e.weight] != e.count) match = false;
    }
    // The level's counts sum to 2h, as do the tallies, so matching every
    // listed weight leaves nothing unaccounted for.
    for (int row = 1; row <= f.rows(); ++row) tally[f.at(l, row)] = 0;
    if (!match) return false;
  }
  return true;
}

namespace {

void check_point(const CountTables& t, int l, int w) {
  if (l < 0 || l > t.length() || w < 0 || w > t.length()) {
    throw Error(ErrorCode::InvalidArgument,
                "grid point (" + std::to_string(l) + "," + std::to_string(w) +
                    ") outside [0," + std::to_string(t.length()) + "]^2");
  }
}

}  // namespace

bool is_branching(const CountTables& t, int l, int w) {
  check_point(t, l, w);
  if (l == 0) return false;
  return t.b(l, w) > 0 && t.c(l, w) > 0;
}

bool is_merging(const CountTables& t, int l, int w) {
  check_point(t, l, w);
  if (l == t.length()) return false;
  return t.b(l + 1, w) > 0 && t.c(l + 1, w + 1) > 0;
}

}  // namespace psrecon
