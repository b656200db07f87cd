#include "psrecon/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "psrecon/error.hpp"

namespace psrecon {

__extension__ using Wide = unsigned __int128;

std::uint64_t multiset_count(std::uint64_t pool, int h) {
  if (h < 0) return 0;
  if (h == 0) return 1;
  if (pool == 0) return 0;
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  // C(pool+i-1, i) built up one factor at a time; each step is exact.
  Wide acc = 1;
  for (int i = 1; i <= h; ++i) {
    acc = acc * (pool + static_cast<std::uint64_t>(i) - 1) /
          static_cast<std::uint64_t>(i);
    if (acc > cap) return cap;
  }
  return static_cast<std::uint64_t>(acc);
}

void for_each_multiset(std::span<const BitString> pool, int h,
                       const std::function<void(const StringMultiset&)>& visit) {
  if (h < 1) throw Error(ErrorCode::InvalidArgument, "h must be positive");
  if (pool.empty()) return;
  std::vector<std::size_t> idx(static_cast<std::size_t>(h), 0);
  while (true) {
    std::vector<BitString> members;
    members.reserve(idx.size());
    for (auto i : idx) members.push_back(pool[i]);
    visit(StringMultiset(std::move(members)));

    int k = h - 1;
    while (k >= 0 && idx[k] + 1 == pool.size()) --k;
    if (k < 0) return;
    ++idx[k];
    for (int j = k + 1; j < h; ++j) idx[j] = idx[k];
  }
}

namespace {

struct Search {
  int n = 0;
  int h = 0;
  std::vector<BitString> pool;
  // Per pool entry: flattened (l, w) cells it occupies, 2n of them.
  std::vector<std::vector<int>> cells;
  std::vector<int> remaining;  // (n+1) x (n+1), index l*(n+1)+w
  std::vector<std::size_t> chosen;
  std::set<ReversalClass> found;

  bool take(std::size_t i) {
    const auto& c = cells[i];
    std::size_t k = 0;
    for (; k < c.size(); ++k) {
      if (--remaining[c[k]] < 0) break;
    }
    if (k == c.size()) return true;
    for (std::size_t j = 0; j <= k; ++j) ++remaining[c[j]];
    return false;
  }

  void give(std::size_t i) {
    for (int cell : cells[i]) ++remaining[cell];
  }

  void run(std::size_t from) {
    if (static_cast<int>(chosen.size()) == h) {
      std::vector<BitString> members;
      for (auto i : chosen) members.push_back(pool[i]);
      found.insert(canonical_class(StringMultiset(std::move(members))));
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (!take(i)) continue;
      chosen.push_back(i);
      run(i);
      chosen.pop_back();
      give(i);
    }
  }
};

}  // namespace

std::vector<ReversalClass> brute_force_all(const CompositionMultiset& m,
                                           const OracleLimits& limits) {
  const int n = m.length();
  const int h = m.string_count();
  const int wbar = m.weight();
  if (n > limits.max_n || h > limits.max_h) {
    throw Error(ErrorCode::OverBudget,
                "oracle limited to n <= " + std::to_string(limits.max_n) +
                    ", h <= " + std::to_string(limits.max_h));
  }
  std::vector<BitString> all = enumerate_constant_weight(n, wbar);
  const std::uint64_t candidates = multiset_count(all.size(), h);
  if (candidates > limits.max_candidates) {
    throw Error(ErrorCode::OverBudget,
                std::to_string(candidates) + " candidate multisets exceed " +
                    std::to_string(limits.max_candidates));
  }

  Search s;
  s.n = n;
  s.h = h;
  const int side = n + 1;
  s.remaining.assign(static_cast<std::size_t>(side) * side, 0);
  for (int l = 1; l <= n; ++l) {
    for (const auto& e : m.level(l)) s.remaining[l * side + e.weight] = e.count;
  }

  for (auto& t : all) {
    std::vector<int> prefix(static_cast<std::size_t>(n) + 1, 0);
    for (int l = 1; l <= n; ++l) prefix[l] = prefix[l - 1] + t.bit(l);
    std::vector<int> c;
    c.reserve(2 * static_cast<std::size_t>(n));
    bool fits = true;
    for (int l = 1; l <= n && fits; ++l) {
      const int p = l * side + prefix[l];
      const int q = l * side + (wbar - prefix[n - l]);
      fits = s.remaining[p] > 0 && s.remaining[q] > (p == q ? 1 : 0);
      c.push_back(p);
      c.push_back(q);
    }
    if (!fits) continue;
    s.pool.push_back(std::move(t));
    s.cells.push_back(std::move(c));
  }

  s.run(0);
  return {s.found.begin(), s.found.end()};
}

bool brute_force_unique(const CompositionMultiset& m,
                        const OracleLimits& limits) {
  return brute_force_all(m, limits).size() == 1;
}

void for_each_instance(
    int n_max, int h_max,
    const std::function<void(const StringMultiset&, const CompositionMultiset&)>&
        visit) {
  for (int n = 1; n <= n_max; ++n) {
    for (int h = 1; h <= h_max; ++h) {
      for (int w = 0; w <= n; ++w) {
        const auto pool = enumerate_constant_weight(n, w);
        std::set<std::vector<CompositionPair>> seen;
        for_each_multiset(pool, h, [&](const StringMultiset& u) {
          CompositionMultiset m = compose_multiset(u);
          if (seen.insert(m.pairs()).second) visit(u, m);
        });
      }
    }
  }
}

StringMultiset random_multiset(std::mt19937_64& rng, int n, int h, int wbar) {
  if (n < 1 || h < 1 || wbar < 0 || wbar > n) {
    throw Error(ErrorCode::InvalidArgument,
                "random_multiset needs n >= 1, h >= 1, 0 <= wbar <= n");
  }
  std::vector<int> bits(static_cast<std::size_t>(n), 0);
  std::fill_n(bits.begin(), wbar, 1);
  std::vector<BitString> members;
  members.reserve(static_cast<std::size_t>(h));
  for (int j = 0; j < h; ++j) {
    std::shuffle(bits.begin(), bits.end(), rng);
    members.push_back(BitString::from_bits(bits));
  }
  return StringMultiset(std::move(members));
}

}  // namespace psrecon
