#include "psrecon/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "psrecon/error.hpp"

namespace psrecon {

std::vector<MedianGroup> initial_partition(const CountTables& t) {
  const int n = t.length();
  const int wbar = t.weight();
  std::vector<MedianGroup> groups;
  if (n % 2 == 0) {
    for (int w = 0; w <= wbar; ++w) {
      if (int size = t.a(n / 2, w); size > 0) groups.push_back({2 * w, size});
    }
  } else {
    const int mid = (n + 1) / 2;
    for (int w = 0; w <= wbar; ++w) {
      // c at weight w: the value at ⌊n/2⌋ is w-1, median w - 1/2.
      if (int size = t.c(mid, w); w >= 1 && size > 0) {
        groups.push_back({2 * w - 1, size});
      }
      if (int size = t.b(mid, w); size > 0) groups.push_back({2 * w, size});
    }
  }
  return groups;
}

namespace {

void caps_rec(int remaining, std::span<const int> caps, std::size_t i,
              std::vector<int>& x, std::vector<std::vector<int>>& out) {
  if (i == caps.size()) {
    if (remaining == 0) out.push_back(x);
    return;
  }
  int tail = 0;
  for (std::size_t j = i + 1; j < caps.size(); ++j) tail += caps[j];
  const int lo = std::max(0, remaining - tail);
  const int hi = std::min(caps[i], remaining);
  for (int v = lo; v <= hi; ++v) {
    x[i] = v;
    caps_rec(remaining - v, caps, i + 1, x, out);
  }
  x[i] = 0;
}

}  // namespace

std::vector<std::vector<int>> compositions_with_caps(int total,
                                                     std::span<const int> caps) {
  std::vector<std::vector<int>> out;
  if (total < 0) return out;
  std::vector<int> x(caps.size(), 0);
  caps_rec(total, caps, 0, x, out);
  return out;
}

std::vector<HalfProfile> scan(const CountTables& t) {
  const int n = t.length();
  const int wbar = t.weight();
  const int half = n / 2;

  using State = std::vector<HalfClass>;
  State start;
  for (const auto& g : initial_partition(t)) {
    HalfClass cls;
    cls.graph.assign(static_cast<std::size_t>(half) + 1, -1);
    cls.graph[half] = g.median2 / 2;
    cls.median2 = g.median2;
    cls.count = g.count;
    start.push_back(std::move(cls));
  }
  std::sort(start.begin(), start.end());

  std::set<State> frontier{start};
  for (int l = half; l >= 1; --l) {
    for (int w = std::min(wbar, l); w >= 0; --w) {
      const int down = t.c(l, w);
      std::set<State> next;
      for (const State& state : frontier) {
        std::vector<std::size_t> group;
        std::vector<int> caps;
        for (std::size_t i = 0; i < state.size(); ++i) {
          if (state[i].graph[l] == w) {
            group.push_back(i);
            caps.push_back(state[i].count);
          }
        }
        for (const auto& x : compositions_with_caps(down, caps)) {
          State child;
          child.reserve(state.size() + group.size());
          std::size_t gi = 0;
          for (std::size_t i = 0; i < state.size(); ++i) {
            if (gi < group.size() && group[gi] == i) {
              const HalfClass& parent = state[i];
              const int moved = x[gi++];
              if (moved > 0) {
                HalfClass lower = parent;
                lower.graph[l - 1] = w - 1;
                lower.count = moved;
                child.push_back(std::move(lower));
              }
              if (parent.count - moved > 0) {
                HalfClass level = parent;
                level.graph[l - 1] = w;
                level.count = parent.count - moved;
                child.push_back(std::move(level));
              }
            } else {
              child.push_back(state[i]);
            }
          }
          std::sort(child.begin(), child.end());
          next.insert(std::move(child));
        }
      }
      frontier = std::move(next);
    }
  }

  std::vector<HalfProfile> profiles;
  profiles.reserve(frontier.size());
  for (const State& state : frontier) {
    profiles.push_back(HalfProfile{n, wbar, state});
  }
  return profiles;
}

namespace {

using Matrix = std::vector<std::vector<int>>;

void transport_rec(const std::vector<int>& rows, std::vector<int>& col_left,
                   std::size_t i, Matrix& y, std::vector<Matrix>& out) {
  if (i == rows.size()) {
    if (std::all_of(col_left.begin(), col_left.end(),
                    [](int v) { return v == 0; })) {
      out.push_back(y);
    }
    return;
  }
  for (const auto& x : compositions_with_caps(rows[i], col_left)) {
    y[i] = x;
    for (std::size_t j = 0; j < x.size(); ++j) col_left[j] -= x[j];
    transport_rec(rows, col_left, i + 1, y, out);
    for (std::size_t j = 0; j < x.size(); ++j) col_left[j] += x[j];
  }
}

std::vector<Matrix> transport(const std::vector<int>& rows,
                              const std::vector<int>& cols) {
  std::vector<Matrix> out;
  int rs = 0, cs = 0;
  for (int v : rows) rs += v;
  for (int v : cols) cs += v;
  if (rs != cs) return out;
  Matrix y(rows.size(), std::vector<int>(cols.size(), 0));
  std::vector<int> col_left = cols;
  transport_rec(rows, col_left, 0, y, out);
  return out;
}

void symmetric_rec(std::vector<int>& need, std::size_t i, Matrix& y,
                   std::vector<Matrix>& out) {
  const std::size_t r = need.size();
  if (i == r) {
    out.push_back(y);
    return;
  }
  const int own = need[i];
  std::vector<int> caps(need.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                        need.end());
  for (int diag = 0; diag <= own; diag += 2) {
    for (const auto& x : compositions_with_caps(own - diag, caps)) {
      y[i][i] = diag;
      for (std::size_t j = 0; j < x.size(); ++j) {
        y[i][i + 1 + j] = x[j];
        y[i + 1 + j][i] = x[j];
        need[i + 1 + j] -= x[j];
      }
      need[i] = 0;
      symmetric_rec(need, i + 1, y, out);
      need[i] = own;
      for (std::size_t j = 0; j < x.size(); ++j) {
        need[i + 1 + j] += x[j];
        y[i][i + 1 + j] = 0;
        y[i + 1 + j][i] = 0;
      }
      y[i][i] = 0;
    }
  }
}

std::vector<Matrix> symmetric_even_diagonal(const std::vector<int>& sizes) {
  std::vector<Matrix> out;
  std::vector<int> need = sizes;
  Matrix y(sizes.size(), std::vector<int>(sizes.size(), 0));
  symmetric_rec(need, 0, y, out);
  return out;
}

}  // namespace

std::vector<PairingBundle> pairings(const HalfProfile& profile) {
  const int wbar = profile.wbar;
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < profile.classes.size(); ++i) {
    groups[profile.classes[i].median2].push_back(static_cast<int>(i));
  }
  auto sizes_of = [&](const std::vector<int>& idx) {
    std::vector<int> s;
    for (int i : idx) s.push_back(profile.classes[i].count);
    return s;
  };
  for (const auto& [med2, idx] : groups) {
    if (med2 < 0 || med2 > 2 * wbar) {
      throw Error(ErrorCode::UnpairableProfile,
                  "median weight " + std::to_string(med2) +
                      "/2 outside [0, wbar]");
    }
  }

  // Per median group t <= w̄: all admissible blocks.
  std::vector<std::vector<PairingBlock>> factors;
  for (int t = 0; t <= wbar; ++t) {
    const int other = 2 * wbar - t;
    auto rows_it = groups.find(t);
    auto cols_it = groups.find(other);
    const std::vector<int> none;
    const auto& rows = rows_it == groups.end() ? none : rows_it->second;
    const auto& cols = cols_it == groups.end() ? none : cols_it->second;
    if (rows.empty() && cols.empty()) continue;

    std::vector<Matrix> ys = t == other
                                 ? symmetric_even_diagonal(sizes_of(rows))
                                 : transport(sizes_of(rows), sizes_of(cols));
    if (ys.empty()) {
      throw Error(ErrorCode::UnpairableProfile,
                  "no pairing between median groups " + std::to_string(t) +
                      "/2 and " + std::to_string(other) + "/2");
    }
    std::vector<PairingBlock> blocks;
    blocks.reserve(ys.size());
    for (auto& y : ys) {
      blocks.push_back(PairingBlock{t, rows, cols, std::move(y)});
    }
    factors.push_back(std::move(blocks));
  }

  std::vector<PairingBundle> bundles{PairingBundle{}};
  for (const auto& factor : factors) {
    std::vector<PairingBundle> grown;
    grown.reserve(bundles.size() * factor.size());
    for (const auto& partial : bundles) {
      for (const auto& block : factor) {
        PairingBundle b = partial;
        b.push_back(block);
        grown.push_back(std::move(b));
      }
    }
    bundles = std::move(grown);
  }
  return bundles;
}

Assembly assemble(const HalfProfile& profile, const PairingBundle& bundle) {
  const int n = profile.n;
  const int wbar = profile.wbar;
  const int half = n / 2;
  int total = 0;
  for (const auto& cls : profile.classes) total += cls.count;
  if (total % 2 != 0 || total == 0) {
    throw Error(ErrorCode::InvalidArgument, "profile has an odd label count");
  }
  const int h = total / 2;

  std::vector<std::pair<int, int>> pairs;
  for (const auto& block : bundle) {
    const bool self = block.median2 == wbar;
    for (std::size_t i = 0; i < block.y.size(); ++i) {
      for (std::size_t j = 0; j < block.y[i].size(); ++j) {
        int copies = block.y[i][j];
        if (self) {
          if (j < i) continue;
          if (j == i) copies /= 2;
        }
        for (int c = 0; c < copies; ++c) {
          pairs.emplace_back(block.row_classes[i], block.col_classes[j]);
        }
      }
    }
  }
  if (static_cast<int>(pairs.size()) != h) {
    throw Error(ErrorCode::InvalidArgument,
                "bundle pairs " + std::to_string(pairs.size()) +
                    " strings, expected " + std::to_string(h));
  }

  WeightGrid g(n, h);
  for (int j = 1; j <= h; ++j) {
    const auto& lower = profile.classes[pairs[j - 1].first].graph;
    const auto& upper = profile.classes[pairs[j - 1].second].graph;
    for (int l = 0; l <= half; ++l) {
      g.at(l, 2 * j - 1) = lower[l];
      g.at(l, 2 * j) = upper[l];
    }
  }
  for (int l = half + 1; l <= n; ++l) {
    for (int m = 1; m <= 2 * h; ++m) {
      g.at(l, m) = wbar - g.at(n - l, partner(m));
    }
  }
  Cwf f(std::move(g));
  StringMultiset strings = corresponding_multiset(f);
  return Assembly{std::move(f), std::move(strings)};
}

namespace {

struct Partial {
  std::set<ReversalClass> classes;
  EnumerationStats stats;
};

void enumerate_profiles(const std::vector<HalfProfile>& profiles,
                        std::size_t first, std::size_t stride, Partial& out) {
  for (std::size_t p = first; p < profiles.size(); p += stride) {
    std::vector<PairingBundle> bundles;
    try {
      bundles = pairings(profiles[p]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnpairableProfile) throw;
      ++out.stats.unpairable_profiles;
      continue;
    }
    for (const auto& bundle : bundles) {
      ++out.stats.bundles;
      auto cls = canonical_class(assemble(profiles[p], bundle).strings);
      if (!out.classes.insert(std::move(cls)).second) {
        ++out.stats.duplicate_classes;
      }
    }
  }
}

}  // namespace

EnumerationResult reconstruct_all(const CompositionMultiset& m,
                                  const EnumerateOptions& options) {
  const std::vector<HalfProfile> profiles = scan(count_tables(m));
  const std::size_t jobs = std::clamp<std::size_t>(
      options.jobs, 1, std::max<std::size_t>(1, profiles.size()));

  std::vector<Partial> parts(jobs);
  if (jobs == 1) {
    enumerate_profiles(profiles, 0, 1, parts[0]);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    {
      std::vector<std::jthread> workers;
      for (std::size_t j = 0; j < jobs; ++j) {
        workers.emplace_back([&, j] {
          try {
            enumerate_profiles(profiles, j, jobs, parts[j]);
          } catch (...) {
            errors[j] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  EnumerationResult result;
  result.stats.profiles = profiles.size();
  std::set<ReversalClass> merged;
  for (auto& part : parts) {
    result.stats.unpairable_profiles += part.stats.unpairable_profiles;
    result.stats.bundles += part.stats.bundles;
    result.stats.duplicate_classes += part.stats.duplicate_classes;
    for (auto& cls : part.classes) {
      if (!merged.insert(cls).second) ++result.stats.duplicate_classes;
    }
  }
  result.classes.assign(merged.begin(), merged.end());
  return result;
}

}  // namespace psrecon
