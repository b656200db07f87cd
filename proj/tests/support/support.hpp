#pragma once

// Generators and string-level reference computations for tests. The
// references work on plain std::string and never call the library's
// table or grid code, so they can serve as oracles for it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "psrecon/psrecon.hpp"

namespace psrecon::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  std::string bits(int n, int w) {
    std::string s(static_cast<std::size_t>(n), '0');
    std::fill_n(s.begin(), w, '1');
    std::shuffle(s.begin(), s.end(), rng_);
    return s;
  }

  std::vector<std::string> strings(int n, int h, int w) {
    std::vector<std::string> out;
    for (int j = 0; j < h; ++j) out.push_back(bits(n, w));
    // Bias toward repeated and reversed members, which stress ties.
    if (h >= 2 && uniform(0, 3) == 0) out[1] = out[0];
    if (h >= 2 && uniform(0, 3) == 0) {
      out[h - 1] = std::string(out[0].rbegin(), out[0].rend());
    }
    return out;
  }

  std::vector<std::string> instance(int n_max, int h_max) {
    const int n = uniform(1, n_max);
    const int h = uniform(1, h_max);
    return strings(n, h, uniform(0, n));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline StringMultiset to_multiset(const std::vector<std::string>& raw) {
  std::vector<BitString> members;
  for (const auto& s : raw) members.push_back(BitString::parse(s));
  return StringMultiset(std::move(members));
}

inline std::vector<std::string> to_strings(const StringMultiset& u) {
  std::vector<std::string> out;
  for (const auto& t : u.members()) out.push_back(t.str());
  return out;
}

inline int ones(const std::string& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), '1'));
}

/// (zeros, ones) -> multiplicity over every prefix and suffix.
inline std::map<std::pair<int, int>, int> ref_compositions(
    const std::vector<std::string>& u) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& s : u) {
    const int n = static_cast<int>(s.size());
    for (int l = 1; l <= n; ++l) {
      for (const auto& part : {s.substr(0, l), s.substr(n - l)}) {
        const int w = ones(part);
        ++out[{l - w, w}];
      }
    }
  }
  return out;
}

/// Rows 2j-1, 2j as prefix weights of s_j and of its reversal.
inline std::vector<std::vector<int>> ref_rows(const std::vector<std::string>& u) {
  std::vector<std::vector<int>> rows;
  for (const auto& s : u) {
    for (const auto& t : {s, std::string(s.rbegin(), s.rend())}) {
      std::vector<int> r{0};
      for (char ch : t) r.push_back(r.back() + (ch == '1'));
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

inline int ref_a(const std::vector<std::vector<int>>& rows, int l, int w) {
  int k = 0;
  for (const auto& r : rows) k += r[l] == w;
  return k;
}

/// |A(l,w) ∩ A(l-1,w)| with the l = 0 convention b = 0.
inline int ref_b(const std::vector<std::vector<int>>& rows, int l, int w) {
  if (l == 0) return 0;
  int k = 0;
  for (const auto& r : rows) k += r[l] == w && r[l - 1] == w;
  return k;
}

inline int ref_c(const std::vector<std::vector<int>>& rows, int l, int w) {
  if (l == 0) return 0;
  int k = 0;
  for (const auto& r : rows) k += r[l] == w && r[l - 1] == w - 1;
  return k;
}

inline std::vector<std::vector<int>> rows_of(const Cwf& f) {
  std::vector<std::vector<int>> rows;
  for (int m = 1; m <= f.rows(); ++m) {
    rows.emplace_back(f.row(m).begin(), f.row(m).end());
  }
  return rows;
}

/// Maximal runs of {l in 1..n : a[l] != b[l]}.
inline std::vector<std::pair<int, int>> ref_intervals(const std::vector<int>& a,
                                                      const std::vector<int>& b) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(a.size()) - 1;
  for (int l = 1; l <= n; ++l) {
    if (a[l] == b[l]) continue;
    if (!out.empty() && out.back().second == l - 1) {
      out.back().second = l;
    } else {
      out.emplace_back(l, l);
    }
  }
  return out;
}

/// Reversal class as sorted min(t, reverse t) strings.
inline std::vector<std::string> ref_class(std::vector<std::string> u) {
  for (auto& s : u) s = std::min(s, std::string(s.rbegin(), s.rend()));
  std::sort(u.begin(), u.end());
  return u;
}

inline std::vector<std::string> class_strings(const ReversalClass& c) {
  std::vector<std::string> out;
  for (const auto& t : c.canonical()) out.push_back(t.str());
  return out;
}

inline CompositionMultiset compose(const std::vector<std::string>& raw) {
  return compose_multiset(to_multiset(raw));
}

}  // namespace psrecon::testing
