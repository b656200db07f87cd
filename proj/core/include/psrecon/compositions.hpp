#pragma once

#include <optional>
#include <span>
#include <vector>

#include "psrecon/bit_string.hpp"

namespace psrecon {

/// The composition (number of zeros, number of ones) of a prefix or suffix.
struct CompositionPair {
  int zeros = 0;
  int ones = 0;

  int length() const noexcept { return zeros + ones; }

  friend bool operator==(const CompositionPair&,
                         const CompositionPair&) = default;
  /// Canonical order: by length, then by number of ones.
  friend auto operator<=>(const CompositionPair& a, const CompositionPair& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return a.ones <=> b.ones;
  }
};

/// M(t) = M_p(t) ⊎ M_s(t): the n prefix compositions followed by the n
/// suffix compositions.
std::vector<CompositionPair> compose_string(const BitString& t);

/// One nonzero entry a_{l,w} of the affix count table.
struct LevelCount {
  int weight = 0;
  int count = 0;
  friend bool operator==(const LevelCount&, const LevelCount&) = default;
};

/// A validated prefix-suffix composition multiset M.
///
/// Stored as the a-table: for each length l in 0..n, the nonzero counts
/// a_{l,w} sorted by weight. Level 0 holds the single entry a_{0,0} = 2h.
/// Instances only come out of compose_multiset or parse_and_validate, so
/// every instance satisfies the size, symmetry and b/c >= 0 identities.
class CompositionMultiset {
 public:
  int length() const noexcept { return n_; }
  int string_count() const noexcept { return h_; }
  int weight() const noexcept { return wbar_; }

  /// a_{l,w}; zero outside the table.
  int count(int l, int w) const noexcept;
  std::span<const LevelCount> level(int l) const { return levels_.at(l); }

  /// The 2nh pairs in canonical order.
  std::vector<CompositionPair> pairs() const;

  friend bool operator==(const CompositionMultiset&,
                         const CompositionMultiset&) = default;

 private:
  friend class CompositionBuilder;
  int n_ = 0;
  int h_ = 0;
  int wbar_ = 0;
  std::vector<std::vector<LevelCount>> levels_;
};

CompositionMultiset compose_multiset(const StringMultiset& u);

/// Values a composition file may assert; a mismatch is an error, never
/// an override.
struct Expectations {
  std::optional<int> n;
  std::optional<int> h;
  std::optional<int> wbar;
};

/// Infers (n, h, w̄) from raw pairs and checks every consistency identity.
/// Throws Error with SizeMismatch, NonConstantWeight, SymmetryViolation or
/// NegativeBC; the error names the failing (l, w) where one exists.
CompositionMultiset parse_and_validate(std::span<const CompositionPair> raw,
                                       const Expectations& expect = {});

/// Dense a/b/c tables over l in 0..n, w in 0..n.
///
/// b_{l,w} counts length-l affixes of weight w whose length-(l-1) affix
/// keeps weight w; c_{l,w} those whose shorter affix has weight w-1.
/// Both are zero for l = 0 and for w outside 0..l.
class CountTables {
 public:
  int length() const noexcept { return n_; }
  int string_count() const noexcept { return h_; }
  int weight() const noexcept { return wbar_; }

  int a(int l, int w) const noexcept { return get(a_, l, w); }
  int b(int l, int w) const noexcept { return l == 0 ? 0 : get(b_, l, w); }
  int c(int l, int w) const noexcept { return l == 0 ? 0 : get(c_, l, w); }

 private:
  friend CountTables count_tables(const CompositionMultiset& m);
  int get(const std::vector<int>& t, int l, int w) const noexcept {
    if (l < 0 || l > n_ || w < 0 || w > l) return 0;
    return t[static_cast<std::size_t>(l) * (n_ + 1) + w];
  }

  int n_ = 0;
  int h_ = 0;
  int wbar_ = 0;
  std::vector<int> a_, b_, c_;
};

CountTables count_tables(const CompositionMultiset& m);

}  // namespace psrecon
