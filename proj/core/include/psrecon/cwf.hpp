#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "psrecon/bit_string.hpp"
#include "psrecon/compositions.hpp"

namespace psrecon {

/// Partner row of m: 2j-1 <-> 2j. Rows are 1-indexed.
constexpr int partner(int m) noexcept { return m % 2 == 1 ? m + 1 : m - 1; }

/// Raw integer grid f(l, m), l in 0..n, m in 1..2h. No invariants.
class WeightGrid {
 public:
  WeightGrid(int n, int h);

  int length() const noexcept { return n_; }
  int string_count() const noexcept { return h_; }
  int rows() const noexcept { return 2 * h_; }

  int& at(int l, int m) { return values_[index(l, m)]; }
  int at(int l, int m) const { return values_[index(l, m)]; }
  std::span<const int> row(int m) const {
    return {values_.data() + index(0, m), static_cast<std::size_t>(n_ + 1)};
  }

  friend bool operator==(const WeightGrid&, const WeightGrid&) = default;

 private:
  std::size_t index(int l, int m) const noexcept {
    return static_cast<std::size_t>(m - 1) * (n_ + 1) + l;
  }

  int n_;
  int h_;
  std::vector<int> values_;
};

/// Outcome of checking the three cumulative-weight-function conditions:
/// (1) f(0,m) = 0, (2) unit steps, (3) f(l,2j-1) + f(n-l,2j) constant in l.
struct CwfCheck {
  int item = 0;  // 0 when valid, otherwise the first violated condition
  int l = 0;
  int m = 0;
  std::string message;

  bool ok() const noexcept { return item == 0; }
};

CwfCheck validate_cwf(const WeightGrid& grid);

/// A validated cumulative weight function.
class Cwf {
 public:
  /// Throws Error(InvalidArgument) when validate_cwf rejects the grid.
  explicit Cwf(WeightGrid grid);

  int length() const noexcept { return grid_.length(); }
  int string_count() const noexcept { return grid_.string_count(); }
  int rows() const noexcept { return grid_.rows(); }
  int at(int l, int m) const { return grid_.at(l, m); }
  std::span<const int> row(int m) const { return grid_.row(m); }
  const WeightGrid& grid() const noexcept { return grid_; }

  /// w_j of string j (1-indexed).
  int string_weight(int j) const { return grid_.at(length(), 2 * j - 1); }
  /// w̄ when every string has the same weight.
  std::optional<int> constant_weight() const;

  friend bool operator==(const Cwf&, const Cwf&) = default;

 private:
  WeightGrid grid_;
};

/// Debug dump: one line per row m = 1..2h, columns l = 0..n.
std::ostream& operator<<(std::ostream& os, const Cwf& f);

/// Rows 2j-1 and 2j hold the running prefix weights of h_j and of its
/// reversal.
Cwf induce(const StringMultiset& u);

/// H_f: string j reads its bits off the increments of row 2j-1.
StringMultiset corresponding_multiset(const Cwf& f);

/// 2 * med(f_m) = f(⌊n/2⌋, m) + f(⌈n/2⌉, m).
int median2(const Cwf& f, int m);
/// A_f(w) for w = median2 / 2.
std::vector<int> group_by_median(const Cwf& f, int median2);
/// A_f(l, w).
std::vector<int> level_set(const Cwf& f, int l, int w);

/// A maximal run [lo, hi] of the discrepancy between two rows.
struct MaximalInterval {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const MaximalInterval&,
                         const MaximalInterval&) = default;
  friend auto operator<=>(const MaximalInterval&,
                          const MaximalInterval&) = default;
};

std::ostream& operator<<(std::ostream& os, const MaximalInterval& iv);

/// The maximal intervals of D(m1, m2), sorted by lo.
std::vector<MaximalInterval> maximal_intervals(const Cwf& f, int m1, int m2);

/// φ(f, I, m1, m2). Rows m1/m2 exchange values on I and rows m1*/m2*
/// exchange on n - I; when m2 = m1* the pair exchanges on I ∪ Ī.
/// Throws Error(NotAMaximalInterval) if I is not maximal for (m1, m2).
Cwf swap(const Cwf& f, const MaximalInterval& interval, int m1, int m2);

/// |A_f(l, w)| = a_{l,w} for every (l, w).
bool is_solution(const Cwf& f, const CompositionMultiset& m);

/// b_{l,w} > 0 and c_{l,w} > 0. False at l = 0.
bool is_branching(const CountTables& tables, int l, int w);
/// b_{l+1,w} > 0 and c_{l+1,w+1} > 0. False at l = n.
bool is_merging(const CountTables& tables, int l, int w);

}  // namespace psrecon
