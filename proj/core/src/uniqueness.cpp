#include "psrecon/uniqueness.hpp"

#include "psrecon/greedy.hpp"

namespace psrecon {

namespace {

// The interval whose swap is guaranteed to leave the reversal class.
// Partner pairs: the first of three or more intervals. Other pairs: one not
// covering both middle positions, of which at most one interval can fail.
MaximalInterval pick_swap_interval(const Cwf& f, int m1, int m2,
                                   const std::vector<MaximalInterval>& ivs) {
  if (partner(m1) == m2) return ivs.front();
  const int n = f.length();
  const int lo_mid = n / 2;
  const int hi_mid = (n + 1) / 2;
  for (const auto& iv : ivs) {
    const bool covers = iv.lo <= lo_mid && iv.hi >= hi_mid;
    if (!covers) return iv;
  }
  return ivs.front();
}

}  // namespace

UniquenessReport check_unique_cwf(const Cwf& f) {
  for (int m1 = 1; m1 <= f.rows(); ++m1) {
    for (int m2 = m1 + 1; m2 <= f.rows(); ++m2) {
      auto ivs = maximal_intervals(f, m1, m2);
      const std::size_t allowed = partner(m1) == m2 ? 2 : 1;
      if (ivs.size() <= allowed) continue;
      const MaximalInterval chosen = pick_swap_interval(f, m1, m2, ivs);
      Cwf g = swap(f, chosen, m1, m2);
      return UniquenessReport{
          false, UniquenessWitness{m1, m2, std::move(ivs), chosen,
                                   corresponding_multiset(g)}};
    }
  }
  return UniquenessReport{true, std::nullopt};
}

UniquenessReport check_unique(const CompositionMultiset& m) {
  return check_unique_cwf(reconstruct_one(m).cwf);
}

}  // namespace psrecon
