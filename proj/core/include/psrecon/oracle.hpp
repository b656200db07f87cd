#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "psrecon/bit_string.hpp"
#include "psrecon/compositions.hpp"

namespace psrecon {

struct OracleLimits {
  int max_n = 10;
  int max_h = 2;
  std::uint64_t max_candidates = 50'000'000;
};

/// Number of size-h multisets drawn from `pool` strings, saturating.
std::uint64_t multiset_count(std::uint64_t pool, int h);

/// Calls `visit` with every size-h multiset of `pool` (combinations with
/// repetition, indices non-decreasing).
void for_each_multiset(std::span<const BitString> pool, int h,
                       const std::function<void(const StringMultiset&)>& visit);

/// Exhaustive reference: every weight-w̄ length-n multiset of size h whose
/// compositions equal M, canonicalized, sorted.
/// Throws Error(OverBudget) outside `limits`.
std::vector<ReversalClass> brute_force_all(const CompositionMultiset& m,
                                           const OracleLimits& limits = {});

bool brute_force_unique(const CompositionMultiset& m,
                        const OracleLimits& limits = {});

/// Visits every distinct M(U) for constant-weight U with 1 <= n <= n_max,
/// 1 <= h <= h_max and all weights, once each, together with the first
/// generating multiset found. Order is deterministic.
void for_each_instance(
    int n_max, int h_max,
    const std::function<void(const StringMultiset&, const CompositionMultiset&)>&
        visit);

/// h independent uniform draws of weight-w̄ length-n strings.
StringMultiset random_multiset(std::mt19937_64& rng, int n, int h, int wbar);

}  // namespace psrecon
