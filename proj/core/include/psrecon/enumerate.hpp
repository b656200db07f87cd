#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "psrecon/bit_string.hpp"
#include "psrecon/compositions.hpp"
#include "psrecon/cwf.hpp"

namespace psrecon {

/// Component functions sharing one graph over 0..⌊n/2⌋ and one median.
struct HalfClass {
  std::vector<int> graph;  // g(0..⌊n/2⌋)
  int median2 = 0;         // 2 * median weight
  int count = 0;

  friend bool operator==(const HalfClass&, const HalfClass&) = default;
  friend auto operator<=>(const HalfClass&, const HalfClass&) = default;
};

/// One reachable multiset of half strings. Classes are sorted and their
/// (graph, median2) signatures are distinct; counts sum to 2h.
struct HalfProfile {
  int n = 0;
  int wbar = 0;
  std::vector<HalfClass> classes;

  friend bool operator==(const HalfProfile&, const HalfProfile&) = default;
  friend auto operator<=>(const HalfProfile&, const HalfProfile&) = default;
};

struct MedianGroup {
  int median2 = 0;
  int count = 0;
  friend bool operator==(const MedianGroup&, const MedianGroup&) = default;
};

/// Sizes of the median groups P(t/2), nonzero only, ascending median2.
/// Even n reads a_{n/2,·}; odd n splits a_{⌊n/2⌋,·} by b/c at ⌈n/2⌉.
std::vector<MedianGroup> initial_partition(const CountTables& tables);

/// Every x with Σ x_i = total and 0 <= x_i <= caps_i, ascending
/// lexicographic order.
std::vector<std::vector<int>> compositions_with_caps(int total,
                                                     std::span<const int> caps);

/// Scan stage: breadth-first refinement of the median groups from
/// l = ⌊n/2⌋ down to 1. At (l, w) the classes sitting at w send
/// c_{l,w} members down to w-1 in every admissible split.
std::vector<HalfProfile> scan(const CountTables& tables);

/// Pairing of median group t (rows) with group 2w̄ - t (columns).
/// For t = w̄ rows and columns are the same group and y is symmetric with
/// an even diagonal.
struct PairingBlock {
  int median2 = 0;
  std::vector<int> row_classes;  // indices into HalfProfile::classes
  std::vector<int> col_classes;
  std::vector<std::vector<int>> y;
};

using PairingBundle = std::vector<PairingBlock>;

/// Y_0 × Y_{1/2} × ... × Y_{w̄/2} for one profile.
/// Throws Error(UnpairableProfile) if some factor is empty.
std::vector<PairingBundle> pairings(const HalfProfile& profile);

struct Assembly {
  Cwf cwf;
  StringMultiset strings;
};

/// Joins each paired (lower half, partner lower half) into a full string
/// via f(l, m) = w̄ - f(n - l, m*) for l > ⌊n/2⌋.
Assembly assemble(const HalfProfile& profile, const PairingBundle& bundle);

struct EnumerationStats {
  std::size_t profiles = 0;
  std::size_t unpairable_profiles = 0;
  std::size_t bundles = 0;
  std::size_t duplicate_classes = 0;
};

struct EnumerationResult {
  std::vector<ReversalClass> classes;  // sorted
  EnumerationStats stats;
};

struct EnumerateOptions {
  unsigned jobs = 1;
};

/// Every multiset compatible with M, one per reversal class.
EnumerationResult reconstruct_all(const CompositionMultiset& m,
                                  const EnumerateOptions& options = {});

}  // namespace psrecon
