#pragma once

#include <cstddef>

#include "psrecon/compositions.hpp"
#include "psrecon/cwf.hpp"

namespace psrecon {

struct Reconstruction {
  Cwf cwf;
  StringMultiset strings;
  std::size_t grid_writes = 0;
};

/// Builds one solution to M in O(nh) grid writes.
///
/// Walking l from n-1 down to 1, odd rows 2k-1 take the largest weights
/// first: weight w is assigned to k in [1 + s, min(a_{l,w} + s, h)] where
/// s = Σ_{v>w} a_{l,v}, and the partner row 2k receives w̄ - w at n - l.
///
/// Throws Error(GreedyInfeasible) if the grid is not a solution to M.
Reconstruction reconstruct_one(const CompositionMultiset& m);

}  // namespace psrecon
