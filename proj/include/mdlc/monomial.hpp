// Copyright 2026 The mdlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exponent vectors, monomial orders and staircases (order ideals of N_0^n).

#ifndef MDLC_MONOMIAL_HPP
#define MDLC_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mdlc/error.hpp"

namespace mdlc::monomial {

/// Exponents (j_1, ..., j_n) of the monomial X_1^{j_1} ... X_n^{j_n}.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<std::uint32_t> il) : e_(il) {}
  explicit ExponentVector(std::vector<std::uint32_t> v) : e_(std::move(v)) {}

  std::size_t size() const noexcept { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& values() const noexcept { return e_; }

  std::uint64_t degree() const noexcept {
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
  }

  bool is_zero() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
  }

  static ExponentVector unit(std::size_t n, std::size_t i) {
    ExponentVector v(n);
    v.e_[i] = 1;
    return v;
  }

  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) {
    if (a.size() != b.size()) throw DimensionError("exponent vectors of different length");
    for (std::size_t i = 0; i < a.size(); ++i) a.e_[i] += b.e_[i];
    return a;
  }

  /// Componentwise difference; requires b | a.
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) {
    if (a.size() != b.size()) throw DimensionError("exponent vectors of different length");
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (b.e_[i] > a.e_[i]) throw RangeError("negative exponent");
      a.e_[i] -= b.e_[i];
    }
    return a;
  }

  /// Plain lexicographic comparison of the raw vectors, for container keys only.
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < e_.size(); ++i) os << (i ? "," : "") << e_[i];
    os << ')';
    return os.str();
  }

 private:
  std::vector<std::uint32_t> e_;
};

/// Variable precedence is fixed as X_1 > X_2 > ... > X_n for both orders.
enum class MonomialOrder { grlex, lex };

inline std::string_view to_string(MonomialOrder o) {
  return o == MonomialOrder::grlex ? "grlex" : "lex";
}

inline MonomialOrder parse_order(std::string_view s) {
  if (s == "grlex") return MonomialOrder::grlex;
  if (s == "lex") return MonomialOrder::lex;
  throw RangeError("unknown monomial order '" + std::string(s) + "'");
}

inline std::strong_ordering compare(MonomialOrder order, const ExponentVector& a,
                                    const ExponentVector& b) {
  if (a.size() != b.size()) throw DimensionError("exponent vectors of different length");
  if (order == MonomialOrder::grlex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

/// Strict-weak-ordering adaptor for std containers and algorithms.
struct OrderLess {
  MonomialOrder order = MonomialOrder::grlex;
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return compare(order, a, b) < 0;
  }
};

/// a | b, i.e. X^a divides X^b.
inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw DimensionError("exponent vectors of different length");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// All j with 0 <= j_i <= bounds_i, ascending in `order`.
inline std::vector<ExponentVector> enumerate_box(const std::vector<std::uint32_t>& bounds,
                                                 MonomialOrder order) {
  if (bounds.empty()) throw DimensionError("empty bounds");
  std::size_t total = 1;
  for (auto b : bounds) {
    if (b < 1) throw DimensionError("box bounds must be positive");
    total *= b + 1;
  }
  std::vector<ExponentVector> out;
  out.reserve(total);
  ExponentVector cur(bounds.size());
  for (std::size_t k = 0; k < total; ++k) {
    out.push_back(cur);
    for (std::size_t i = bounds.size(); i-- > 0;) {
      if (++cur[i] <= bounds[i]) break;
      cur[i] = 0;
    }
  }
  std::sort(out.begin(), out.end(), OrderLess{order});
  return out;
}

/// A finite set of exponent vectors; a valid staircase is downward closed.
class Staircase {
 public:
  Staircase() = default;
  explicit Staircase(std::size_t n) : n_(n) {}
  Staircase(std::size_t n, const std::vector<ExponentVector>& members) : n_(n) {
    for (const auto& m : members) insert(m);
  }

  std::size_t dimension() const noexcept { return n_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(const ExponentVector& j) const { return members_.count(j) != 0; }

  void insert(const ExponentVector& j) {
    if (j.size() != n_) throw DimensionError("member has wrong dimension");
    members_.insert(j);
  }

  const std::set<ExponentVector>& members() const noexcept { return members_; }

  /// Members sorted ascending in grlex; the canonical encoding.
  std::vector<ExponentVector> sorted(MonomialOrder order = MonomialOrder::grlex) const {
    std::vector<ExponentVector> v(members_.begin(), members_.end());
    std::sort(v.begin(), v.end(), OrderLess{order});
    return v;
  }

  /// Checking one step down along each axis suffices.
  bool is_downward_closed() const {
    for (const auto& m : members_) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (m[i] == 0) continue;
        ExponentVector d = m;
        --d[i];
        if (!contains(d)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  std::size_t n_ = 0;
  std::set<ExponentVector> members_;
};

/// Minimal generators of the monomial ideal whose standard monomials are `s`,
/// i.e. the reduced Groebner basis of that ideal. Sorted ascending in grlex.
inline std::vector<ExponentVector> minimal_generators(const Staircase& s) {
  if (!s.is_downward_closed()) throw InvariantError("staircase is not downward closed");
  const std::size_t n = s.dimension();
  if (s.empty()) return {ExponentVector(n)};
  // Every minimal generator is e_i or m + e_i for some member m.
  std::set<ExponentVector> candidates;
  for (std::size_t i = 0; i < n; ++i) candidates.insert(ExponentVector::unit(n, i));
  for (const auto& m : s.members())
    for (std::size_t i = 0; i < n; ++i) candidates.insert(m + ExponentVector::unit(n, i));
  std::vector<ExponentVector> out;
  for (const auto& c : candidates) {
    if (s.contains(c)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      if (c[i] == 0) continue;
      ExponentVector d = c;
      --d[i];
      minimal = s.contains(d);
    }
    if (minimal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), OrderLess{MonomialOrder::grlex});
  return out;
}

/// N_d = C(n+d-1, n-1), the number of monomials of total degree d in n variables.
inline std::uint64_t count_monomials_of_degree(std::uint64_t n, std::uint64_t d) {
  if (n < 1) throw RangeError("need at least one variable");
  // C(n+d-1, k) with k = min(n-1, d), built incrementally; each prefix is an integer.
  const std::uint64_t top = n + d - 1;
  const std::uint64_t k = std::min(n - 1, d);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (top - k + i) / i;
    if (r > UINT64_MAX) throw RangeError("monomial count overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace mdlc::monomial

#endif  // MDLC_MONOMIAL_HPP
