#pragma once

#include <optional>
#include <vector>

#include "psrecon/compositions.hpp"
#include "psrecon/cwf.hpp"

namespace psrecon {

struct UniquenessWitness {
  int m1 = 0;
  int m2 = 0;
  std::vector<MaximalInterval> intervals;
  /// The interval swapped to build the counterexample.
  MaximalInterval swapped;
  /// A compatible multiset outside the reversal class of the input.
  StringMultiset counterexample;
};

struct UniquenessReport {
  bool unique = true;
  std::optional<UniquenessWitness> witness;
};

/// Unique reconstruction holds iff every partner pair (m, m*) has at most
/// two maximal intervals and every other pair at most one. `f` must be a
/// constant-weight solution to some composition multiset.
UniquenessReport check_unique_cwf(const Cwf& f);

/// Runs reconstruct_one and checks its solution. The verdict does not
/// depend on which solution is examined.
UniquenessReport check_unique(const CompositionMultiset& m);

}  // namespace psrecon
