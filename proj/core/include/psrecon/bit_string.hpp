#pragma once

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psrecon {

enum class Side { Prefix, Suffix };

/// Immutable binary string t = t_1 t_2 ... t_n with n >= 1.
///
/// Text form is ASCII '0'/'1', position 1 leftmost. Comparison is
/// lexicographic on that text form.
class BitString {
 public:
  /// Throws Error(ParseError) on empty input or characters other than 0/1.
  static BitString parse(std::string_view text);
  static BitString from_bits(std::span<const int> bits);

  std::size_t size() const noexcept { return text_.size(); }
  int weight() const noexcept { return weight_; }
  /// 1-indexed: bit(1) is the leftmost position.
  int bit(std::size_t position) const;
  const std::string& str() const noexcept { return text_; }

  friend bool operator==(const BitString& a, const BitString& b) noexcept {
    return a.text_ == b.text_;
  }
  friend std::strong_ordering operator<=>(const BitString& a,
                                          const BitString& b) noexcept {
    return a.text_ <=> b.text_;
  }

 private:
  explicit BitString(std::string text);

  std::string text_;
  int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BitString& t);

int weight(const BitString& t) noexcept;
BitString reverse(const BitString& t);
/// t[l] or t[-l]; requires 1 <= l <= n.
BitString affix(const BitString& t, std::size_t length, Side side);

/// A nonempty multiset of strings sharing one length n and one weight w̄.
/// Member order is preserved as given; it carries no meaning.
class StringMultiset {
 public:
  /// Throws Error(InvalidArgument) if empty or lengths/weights differ.
  explicit StringMultiset(std::vector<BitString> members);

  int length() const noexcept { return length_; }
  int weight() const noexcept { return weight_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  const std::vector<BitString>& members() const noexcept { return members_; }

  friend bool operator==(const StringMultiset&,
                         const StringMultiset&) = default;

 private:
  std::vector<BitString> members_;
  int length_ = 0;
  int weight_ = 0;
};

/// Canonical representative of the reversal class [U]: every member is
/// replaced by min(t, reverse(t)) and the result is sorted.
class ReversalClass {
 public:
  const std::vector<BitString>& canonical() const noexcept {
    return canonical_;
  }
  StringMultiset representative() const {
    return StringMultiset(canonical_);
  }

  friend bool operator==(const ReversalClass&, const ReversalClass&) = default;
  friend auto operator<=>(const ReversalClass& a, const ReversalClass& b) {
    return a.canonical_ <=> b.canonical_;
  }

 private:
  friend ReversalClass canonical_class(const StringMultiset& u);
  std::vector<BitString> canonical_;
};

ReversalClass canonical_class(const StringMultiset& u);

/// All C(n, w) strings of length n and weight w, in descending
/// lexicographic order (ones first).
std::vector<BitString> enumerate_constant_weight(int n, int w);

}  // namespace psrecon
