#include "psrecon/bit_string.hpp"

#include <algorithm>

#include "psrecon/error.hpp"

namespace psrecon {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NonConstantWeight: return "NonConstantWeight";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::NegativeBC: return "NegativeBC";
    case ErrorCode::NotAMaximalInterval: return "NotAMaximalInterval";
    case ErrorCode::GreedyInfeasible: return "GreedyInfeasible";
    case ErrorCode::UnpairableProfile: return "UnpairableProfile";
    case ErrorCode::OverBudget: return "OverBudget";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<GridPoint> where)
    : std::runtime_error(std::string(psrecon::to_string(code)) + ": " +
                         message),
      code_(code),
      where_(where) {}

BitString::BitString(std::string text) : text_(std::move(text)) {
  weight_ = static_cast<int>(std::count(text_.begin(), text_.end(), '1'));
}

BitString BitString::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty bit string");
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw Error(ErrorCode::ParseError,
                  "bit string contains '" + std::string(1, ch) + "'");
    }
  }
  return BitString(std::string(text));
}

BitString BitString::from_bits(std::span<const int> bits) {
  std::string text;
  text.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) {
      throw Error(ErrorCode::InvalidArgument, "bit value out of range");
    }
    text.push_back(b == 1 ? '1' : '0');
  }
  return parse(text);
}

int BitString::bit(std::size_t position) const {
  if (position < 1 || position > text_.size()) {
    throw Error(ErrorCode::InvalidArgument, "bit position out of range");
  }
  return text_[position - 1] == '1' ? 1 : 0;
}

std::ostream& operator<<(std::ostream& os, const BitString& t) {
  return os << t.str();
}

int weight(const BitString& t) noexcept { return t.weight(); }

BitString reverse(const BitString& t) {
  return BitString::parse(std::string(t.str().rbegin(), t.str().rend()));
}

BitString affix(const BitString& t, std::size_t length, Side side) {
  if (length < 1 || length > t.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "affix length " + std::to_string(length) +
                    " outside [1, " + std::to_string(t.size()) + "]");
  }
  const std::string& s = t.str();
  return side == Side::Prefix ? BitString::parse(s.substr(0, length))
                              : BitString::parse(s.substr(s.size() - length));
}

StringMultiset::StringMultiset(std::vector<BitString> members)
    : members_(std::move(members)) {
  if (members_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "string multiset is empty");
  }
  length_ = static_cast<int>(members_.front().size());
  weight_ = members_.front().weight();
  for (const auto& t : members_) {
    if (static_cast<int>(t.size()) != length_) {
      throw Error(ErrorCode::InvalidArgument,
                  "strings of different lengths: " + members_.front().str() +
                      " and " + t.str());
    }
    if (t.weight() != weight_) {
      throw Error(ErrorCode::InvalidArgument,
                  "strings of different weights: " + members_.front().str() +
                      " and " + t.str());
    }
  }
}

ReversalClass canonical_class(const StringMultiset& u) {
  ReversalClass cls;
  cls.canonical_.reserve(u.members().size());
  for (const auto& t : u.members()) {
    cls.canonical_.push_back(std::min(t, reverse(t)));
  }
  std::sort(cls.canonical_.begin(), cls.canonical_.end());
  return cls;
}

std::vector<BitString> enumerate_constant_weight(int n, int w) {
  if (n < 1 || w < 0 || w > n) {
    throw Error(ErrorCode::InvalidArgument,
                "no strings of length " + std::to_string(n) + " and weight " +
                    std::to_string(w));
  }
  std::string text(static_cast<std::size_t>(w), '1');
  text.append(static_cast<std::size_t>(n - w), '0');
  std::vector<BitString> out;
  do {
    out.push_back(BitString::parse(text));
  } while (std::prev_permutation(text.begin(), text.end()));
  return out;
}

}  // namespace psrecon
