#include "psrecon/compositions.hpp"

#include <algorithm>
#include <string>

#include "psrecon/error.hpp"

namespace psrecon {

namespace {

std::string at_string(int l, int w) {
  return "(l=" + std::to_string(l) + ", w=" + std::to_string(w) + ")";
}

std::vector<LevelCount> run_length(std::vector<int>& weights) {
  std::sort(weights.begin(), weights.end());
  std::vector<LevelCount> out;
  for (int w : weights) {
    if (out.empty() || out.back().weight != w) {
      out.push_back({w, 1});
    } else {
      ++out.back().count;
    }
  }
  return out;
}

// Suffix sums S(w) = Σ_{v >= w} a_{l,v} for w in 0..l+1.
std::vector<int> suffix_sums(std::span<const LevelCount> level, int l) {
  std::vector<int> s(static_cast<std::size_t>(l) + 2, 0);
  for (const auto& e : level) s[e.weight] += e.count;
  for (int w = l - 1; w >= 0; --w) s[w] += s[w + 1];
  return s;
}

}  // namespace

class CompositionBuilder {
 public:
  static CompositionMultiset make(int n, int h, int wbar,
                                  std::vector<std::vector<LevelCount>> levels) {
    CompositionMultiset m;
    m.n_ = n;
    m.h_ = h;
    m.wbar_ = wbar;
    m.levels_ = std::move(levels);
    return m;
  }
};

std::vector<CompositionPair> compose_string(const BitString& t) {
  const int n = static_cast<int>(t.size());
  std::vector<CompositionPair> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  int ones = 0;
  for (int l = 1; l <= n; ++l) {
    ones += t.bit(l);
    out.push_back({l - ones, ones});
  }
  ones = 0;
  for (int l = 1; l <= n; ++l) {
    ones += t.bit(n - l + 1);
    out.push_back({l - ones, ones});
  }
  return out;
}

int CompositionMultiset::count(int l, int w) const noexcept {
  if (l < 0 || l > n_) return 0;
  const auto& level = levels_[l];
  auto it = std::lower_bound(
      level.begin(), level.end(), w,
      [](const LevelCount& e, int value) { return e.weight < value; });
  return (it != level.end() && it->weight == w) ? it->count : 0;
}

std::vector<CompositionPair> CompositionMultiset::pairs() const {
  std::vector<CompositionPair> out;
  out.reserve(2 * static_cast<std::size_t>(n_) * h_);
  for (int l = 1; l <= n_; ++l) {
    for (const auto& e : levels_[l]) {
      out.insert(out.end(), e.count, CompositionPair{l - e.weight, e.weight});
    }
  }
  return out;
}

CompositionMultiset compose_multiset(const StringMultiset& u) {
  const int n = u.length();
  const int h = u.size();
  const int wbar = u.weight();
  std::vector<std::vector<int>> prefix(u.members().size());
  for (std::size_t j = 0; j < u.members().size(); ++j) {
    const auto& t = u.members()[j];
    auto& p = prefix[j];
    p.resize(static_cast<std::size_t>(n) + 1, 0);
    for (int l = 1; l <= n; ++l) p[l] = p[l - 1] + t.bit(l);
  }
  std::vector<std::vector<LevelCount>> levels(static_cast<std::size_t>(n) + 1);
  levels[0] = {{0, 2 * h}};
  std::vector<int> weights;
  for (int l = 1; l <= n; ++l) {
    weights.clear();
    for (const auto& p : prefix) {
      weights.push_back(p[l]);
      weights.push_back(wbar - p[n - l]);  // suffix of length l
    }
    levels[l] = run_length(weights);
  }
  return CompositionBuilder::make(n, h, wbar, std::move(levels));
}

CompositionMultiset parse_and_validate(std::span<const CompositionPair> raw,
                                       const Expectations& expect) {
  if (raw.empty()) {
    throw Error(ErrorCode::SizeMismatch, "composition multiset is empty");
  }
  int n = 0;
  for (const auto& p : raw) {
    if (p.zeros < 0 || p.ones < 0 || p.length() == 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "malformed pair (" + std::to_string(p.zeros) + "," +
                      std::to_string(p.ones) + ")");
    }
    n = std::max(n, p.length());
  }
  std::vector<std::vector<int>> by_length(static_cast<std::size_t>(n) + 1);
  for (const auto& p : raw) by_length[p.length()].push_back(p.ones);

  const int top = static_cast<int>(by_length[n].size());
  if (top % 2 != 0) {
    throw Error(ErrorCode::SizeMismatch,
                std::to_string(top) + " pairs of full length " +
                    std::to_string(n) + " is odd; expected 2h");
  }
  const int h = top / 2;
  if (expect.n && *expect.n != n) {
    throw Error(ErrorCode::SizeMismatch,
                "expected n=" + std::to_string(*expect.n) +
                    " but longest pair has length " + std::to_string(n));
  }
  if (expect.h && *expect.h != h) {
    throw Error(ErrorCode::SizeMismatch,
                "expected h=" + std::to_string(*expect.h) + ", so " +
                    std::to_string(2 * n * *expect.h) + " pairs, but " +
                    std::to_string(top) + " full-length pairs imply h=" +
                    std::to_string(h));
  }
  const auto total = static_cast<long long>(raw.size());
  if (total != 2LL * n * h) {
    throw Error(ErrorCode::SizeMismatch,
                std::to_string(total) + " pairs but 2nh = " +
                    std::to_string(2LL * n * h) + " for n=" +
                    std::to_string(n) + ", h=" + std::to_string(h));
  }
  for (int l = 1; l <= n; ++l) {
    if (static_cast<int>(by_length[l].size()) != 2 * h) {
      throw Error(ErrorCode::SizeMismatch,
                  std::to_string(by_length[l].size()) + " pairs of length " +
                      std::to_string(l) + ", expected 2h = " +
                      std::to_string(2 * h),
                  GridPoint{l, 0});
    }
  }
  const int wbar = by_length[n].front();
  for (int w : by_length[n]) {
    if (w != wbar) {
      throw Error(ErrorCode::NonConstantWeight,
                  "full-length pairs have weights " + std::to_string(wbar) +
                      " and " + std::to_string(w),
                  GridPoint{n, w});
    }
  }
  if (expect.wbar && *expect.wbar != wbar) {
    throw Error(ErrorCode::NonConstantWeight,
                "expected wbar=" + std::to_string(*expect.wbar) +
                    " but full-length pairs have weight " +
                    std::to_string(wbar),
                GridPoint{n, wbar});
  }

  std::vector<std::vector<LevelCount>> levels(static_cast<std::size_t>(n) + 1);
  levels[0] = {{0, 2 * h}};
  for (int l = 1; l <= n; ++l) levels[l] = run_length(by_length[l]);
  auto m = CompositionBuilder::make(n, h, wbar, std::move(levels));

  for (int l = 1; l < n; ++l) {
    for (const auto& e : m.level(l)) {
      if (m.count(n - l, wbar - e.weight) != e.count) {
        throw Error(ErrorCode::SymmetryViolation,
                    "a" + at_string(l, e.weight) + " = " +
                        std::to_string(e.count) + " but a" +
                        at_string(n - l, wbar - e.weight) + " = " +
                        std::to_string(m.count(n - l, wbar - e.weight)),
                    GridPoint{l, e.weight});
      }
    }
  }

  std::vector<int> prev = suffix_sums(m.level(0), 0);
  for (int l = 1; l <= n; ++l) {
    std::vector<int> cur = suffix_sums(m.level(l), l);
    for (int w = 0; w <= l; ++w) {
      const int b = (w <= l - 1 ? prev[w] : 0) - cur[w + 1];
      const int c = cur[w] - (w <= l - 1 ? prev[w] : 0);
      if (b < 0 || c < 0) {
        throw Error(ErrorCode::NegativeBC,
                    (b < 0 ? "b" : "c") + at_string(l, w) + " = " +
                        std::to_string(b < 0 ? b : c),
                    GridPoint{l, w});
      }
    }
    prev = std::move(cur);
  }
  return m;
}

CountTables count_tables(const CompositionMultiset& m) {
  CountTables t;
  const int n = m.length();
  t.n_ = n;
  t.h_ = m.string_count();
  t.wbar_ = m.weight();
  const auto cells = static_cast<std::size_t>(n + 1) * (n + 1);
  t.a_.assign(cells, 0);
  t.b_.assign(cells, 0);
  t.c_.assign(cells, 0);
  auto idx = [n](int l, int w) {
    return static_cast<std::size_t>(l) * (n + 1) + w;
  };
  for (int l = 0; l <= n; ++l) {
    for (const auto& e : m.level(l)) t.a_[idx(l, e.weight)] = e.count;
  }
  std::vector<int> prev = suffix_sums(m.level(0), 0);
  for (int l = 1; l <= n; ++l) {
    std::vector<int> cur = suffix_sums(m.level(l), l);
    for (int w = 0; w <= l; ++w) {
      const int upper = w <= l - 1 ? prev[w] : 0;
      t.b_[idx(l, w)] = upper - cur[w + 1];
      t.c_[idx(l, w)] = cur[w] - upper;
    }
    prev = std::move(cur);
  }
  return t;
}

}  // namespace psrecon
