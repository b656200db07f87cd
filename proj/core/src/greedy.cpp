#include "psrecon/greedy.hpp"

#include <algorithm>

#include "psrecon/error.hpp"

namespace psrecon {

Reconstruction reconstruct_one(const CompositionMultiset& m) {
  const int n = m.length();
  const int h = m.string_count();
  const int wbar = m.weight();
  WeightGrid g(n, h);
  std::size_t writes = 0;

  for (int row = 1; row <= 2 * h; ++row) {
    g.at(0, row) = 0;
    g.at(n, row) = wbar;
    writes += 2;
  }
  for (int l = n - 1; l >= 1; --l) {
    const auto level = m.level(l);
    int above = 0;  // s_{l,w+1}
    for (auto it = level.rbegin(); it != level.rend() && above < h; ++it) {
      const int w = it->weight;
      const int last = std::min(it->count + above, h);
      for (int k = above + 1; k <= last; ++k) {
        g.at(l, 2 * k - 1) = w;
        g.at(n - l, 2 * k) = wbar - w;
        writes += 2;
      }
      above += it->count;
    }
  }

  if (auto check = validate_cwf(g); !check.ok()) {
    throw Error(ErrorCode::GreedyInfeasible,
                "constructed grid is not a CWF: " + check.message);
  }
  Cwf f(std::move(g));
  if (!is_solution(f, m)) {
    throw Error(ErrorCode::GreedyInfeasible,
                "constructed CWF does not reproduce the compositions");
  }
  StringMultiset strings = corresponding_multiset(f);
  return Reconstruction{std::move(f), std::move(strings), writes};
}

}  // namespace psrecon
