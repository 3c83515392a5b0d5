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

// Exact arithmetic in F_q, q = p^e, and dense linear algebra over it.
//
// Elements of an extension field are residue vectors of length e (ascending
// degree) modulo a monic irreducible polynomial. Prime-field elements use only
// the first slot. Unused slots are always zero, so equality of the stored
// array is equality of field elements.

#ifndef MDLC_GF_HPP
#define MDLC_GF_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mdlc/error.hpp"
#include "mdlc/rng.hpp"

namespace mdlc::gf {

inline constexpr unsigned kMaxDegree = 16;
inline constexpr std::uint32_t kMaxPrime = 1u << 16;

class FieldElement {
 public:
  constexpr FieldElement() = default;

  /// Residue of the coefficient of x^i (i < e).
  constexpr std::uint32_t operator[](std::size_t i) const { return coeffs_[i]; }

  friend constexpr bool operator==(const FieldElement&, const FieldElement&) = default;
  friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;

 private:
  friend class FieldSpec;
  std::array<std::uint16_t, kMaxDegree> coeffs_{};
};

using Vector = std::vector<FieldElement>;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (x) {
    if (x & 1) r = r * b % p;
    b = b * b % p;
    x >>= 1;
  }
  return r;
}

// Dense polynomials over F_p, ascending degree, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

// Quotient and remainder of a by nonzero b.
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  const std::uint64_t lead_inv = pow_mod(b.back(), p - 2, p);
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const std::uint64_t c = a[k] * lead_inv % p;
    const std::size_t shift = k - (b.size() - 1);
    q[shift] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j)
        a[shift + j] = (a[shift + j] + p - c * b[j] % p) % p;
    if (k == 0) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  return poly_divmod(poly_mul(a, b, p), m, p).second;
}

// x^(p^i) mod f by repeated p-th powering.
inline Poly frobenius_power(const Poly& base, const Poly& f, std::uint64_t p) {
  Poly r{1};
  Poly b = poly_divmod(base, f, p).second;
  std::uint64_t x = p;
  while (x) {
    if (x & 1) r = poly_mulmod(r, b, f, p);
    b = poly_mulmod(b, b, f, p);
    x >>= 1;
  }
  return r;
}

// Ben-Or: a monic f of degree e is irreducible iff gcd(x^(p^i) - x, f) = 1 for
// every 1 <= i <= e/2.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t e = f.size() - 1;
  if (e <= 1) return e == 1;
  Poly h{0, 1};
  for (std::size_t i = 1; i <= e / 2; ++i) {
    h = frobenius_power(h, f, p);
    const Poly g = poly_gcd(f, poly_sub(h, Poly{0, 1}, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

/// The coefficient field F_q together with its defining modulus.
class FieldSpec {
 public:
  /// Builds F_{p^e}. Without a modulus, extension fields use the monic
  /// irreducible of degree e whose ascending coefficient vector is
  /// lexicographically smallest.
  static FieldSpec make(std::uint64_t p, unsigned e,
                        std::optional<std::vector<std::uint64_t>> modulus = std::nullopt) {
    if (p >= kMaxPrime) throw FieldError("characteristic " + std::to_string(p) + " exceeds 2^16");
    if (!detail::is_prime(p)) throw FieldError(std::to_string(p) + " is not prime");
    if (e < 1 || e > kMaxDegree)
      throw FieldError("extension degree " + std::to_string(e) + " outside [1, 16]");
    FieldSpec f;
    f.p_ = static_cast<std::uint32_t>(p);
    f.e_ = e;
    if (e == 1) {
      if (modulus && !modulus->empty()) {
        if (modulus->size() != 2 || (*modulus)[1] != 1 || (*modulus)[0] >= p)
          throw FieldError("prime-field modulus must be monic of degree 1");
      }
      return f;
    }
    if (modulus) {
      if (modulus->size() != e + 1)
        throw FieldError("modulus must have " + std::to_string(e + 1) + " coefficients");
      for (auto c : *modulus)
        if (c >= p) throw FieldError("modulus coefficient " + std::to_string(c) + " not reduced mod p");
      if (modulus->back() != 1) throw FieldError("modulus is not monic");
      if (!detail::is_irreducible(*modulus, p)) throw FieldError("modulus is reducible over F_p");
      f.modulus_.assign(modulus->begin(), modulus->end());
    } else {
      f.modulus_ = smallest_irreducible(p, e);
    }
    return f;
  }

  std::uint32_t p() const noexcept { return p_; }
  unsigned e() const noexcept { return e_; }
  bool is_prime_field() const noexcept { return e_ == 1; }

  /// Ascending coefficients, length e+1, monic. Empty for prime fields.
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  /// Field size, or nullopt when it does not fit in 63 bits.
  std::optional<std::uint64_t> q() const noexcept {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e_; ++i) {
      if (r > (std::uint64_t{1} << 62) / p_) return std::nullopt;
      r *= p_;
    }
    return r;
  }

  std::uint64_t q_or_throw() const {
    auto v = q();
    if (!v) throw RangeError("field size exceeds 63 bits");
    return *v;
  }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
  }

  // --- construction and inspection of elements ---

  FieldElement zero() const noexcept { return {}; }
  FieldElement one() const noexcept { return from_int(1); }

  /// Image of an integer in the prime subfield.
  FieldElement from_int(std::uint64_t v) const noexcept {
    FieldElement r;
    r.coeffs_[0] = static_cast<std::uint16_t>(v % p_);
    return r;
  }

  FieldElement from_coeffs(std::span<const std::uint64_t> c) const {
    if (c.size() != e_)
      throw FieldError("element needs " + std::to_string(e_) + " coefficients, got " +
                       std::to_string(c.size()));
    FieldElement r;
    for (unsigned i = 0; i < e_; ++i) {
      if (c[i] >= p_) throw FieldError("coefficient " + std::to_string(c[i]) + " not reduced mod p");
      r.coeffs_[i] = static_cast<std::uint16_t>(c[i]);
    }
    return r;
  }

  std::vector<std::uint64_t> to_coeffs(const FieldElement& a) const {
    return {a.coeffs_.begin(), a.coeffs_.begin() + e_};
  }

  /// Base-p integer with digit i the coefficient of x^i; a bijection onto [0, q).
  std::uint64_t index(const FieldElement& a) const {
    std::uint64_t r = 0;
    for (unsigned i = e_; i-- > 0;) r = r * p_ + a.coeffs_[i];
    return r;
  }

  FieldElement from_index(std::uint64_t v) const {
    FieldElement r;
    for (unsigned i = 0; i < e_; ++i) {
      r.coeffs_[i] = static_cast<std::uint16_t>(v % p_);
      v /= p_;
    }
    return r;
  }

  /// True iff every slot is reduced and slots past e are zero.
  bool is_canonical(const FieldElement& a) const noexcept {
    for (unsigned i = 0; i < kMaxDegree; ++i) {
      if (i < e_ ? a.coeffs_[i] >= p_ : a.coeffs_[i] != 0) return false;
    }
    return true;
  }

  bool is_zero(const FieldElement& a) const noexcept { return a == FieldElement{}; }
  bool is_one(const FieldElement& a) const noexcept { return a == one(); }

  FieldElement random(SplitMix64& rng) const {
    FieldElement r;
    for (unsigned i = 0; i < e_; ++i)
      r.coeffs_[i] = static_cast<std::uint16_t>(rng.uniform_below(p_));
    return r;
  }

  /// "3" for prime fields, "[1,0,1]" (ascending coefficients) otherwise.
  std::string to_string(const FieldElement& a) const {
    if (e_ == 1) return std::to_string(a.coeffs_[0]);
    std::ostringstream os;
    os << '[';
    for (unsigned i = 0; i < e_; ++i) os << (i ? "," : "") << a.coeffs_[i];
    os << ']';
    return os.str();
  }

  // --- arithmetic ---

  FieldElement add(const FieldElement& a, const FieldElement& b) const noexcept {
    FieldElement r;
    for (unsigned i = 0; i < e_; ++i) {
      std::uint32_t s = std::uint32_t{a.coeffs_[i]} + b.coeffs_[i];
      if (s >= p_) s -= p_;
      r.coeffs_[i] = static_cast<std::uint16_t>(s);
    }
    return r;
  }

  FieldElement neg(const FieldElement& a) const noexcept {
    FieldElement r;
    for (unsigned i = 0; i < e_; ++i)
      r.coeffs_[i] = static_cast<std::uint16_t>(a.coeffs_[i] == 0 ? 0 : p_ - a.coeffs_[i]);
    return r;
  }

  FieldElement sub(const FieldElement& a, const FieldElement& b) const noexcept {
    return add(a, neg(b));
  }

  FieldElement mul(const FieldElement& a, const FieldElement& b) const noexcept {
    FieldElement r;
    if (e_ == 1) {
      r.coeffs_[0] = static_cast<std::uint16_t>(std::uint32_t{a.coeffs_[0]} * b.coeffs_[0] % p_);
      return r;
    }
    std::array<std::uint64_t, 2 * kMaxDegree> prod{};
    for (unsigned i = 0; i < e_; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (unsigned j = 0; j < e_; ++j)
        prod[i + j] = (prod[i + j] + std::uint64_t{a.coeffs_[i]} * b.coeffs_[j]) % p_;
    }
    // x^e = -(m_0 + ... + m_{e-1} x^{e-1})
    for (unsigned k = 2 * e_ - 2; k >= e_; --k) {
      const std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      const unsigned shift = k - e_;
      for (unsigned j = 0; j < e_; ++j)
        prod[shift + j] = (prod[shift + j] + (p_ - c) * modulus_[j]) % p_;
    }
    for (unsigned i = 0; i < e_; ++i) r.coeffs_[i] = static_cast<std::uint16_t>(prod[i]);
    return r;
  }

  FieldElement inv(const FieldElement& a) const {
    if (is_zero(a)) throw DivisionByZero("inverse of zero");
    if (e_ == 1) return from_int(detail::pow_mod(a.coeffs_[0], p_ - 2, p_));
    // Extended Euclid in F_p[x]: find u with u*a = 1 mod modulus.
    using detail::Poly;
    Poly r0(modulus_.begin(), modulus_.end());
    Poly r1(a.coeffs_.begin(), a.coeffs_.begin() + e_);
    detail::trim(r1);
    Poly u0{}, u1{1};
    while (r1.size() > 1) {
      auto [q, r] = detail::poly_divmod(r0, r1, p_);
      Poly u = detail::poly_sub(u0, detail::poly_mul(q, u1, p_), p_);
      r0 = std::move(r1);
      r1 = std::move(r);
      u0 = std::move(u1);
      u1 = std::move(u);
    }
    // r1 is a nonzero constant since the modulus is irreducible.
    const std::uint64_t c = detail::pow_mod(r1[0], p_ - 2, p_);
    FieldElement out;
    for (std::size_t i = 0; i < u1.size(); ++i)
      out.coeffs_[i] = static_cast<std::uint16_t>(u1[i] * c % p_);
    return out;
  }

  FieldElement div(const FieldElement& a, const FieldElement& b) const {
    if (is_zero(b)) throw DivisionByZero("division by zero");
    return mul(a, inv(b));
  }

  FieldElement pow(FieldElement a, std::uint64_t x) const noexcept {
    FieldElement r = one();
    while (x) {
      if (x & 1) r = mul(r, a);
      a = mul(a, a);
      x >>= 1;
    }
    return r;
  }

 private:
  static std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned e) {
    // Counter over (c_0, ..., c_{e-1}) with c_0 most significant. Every
    // candidate with c_0 = 0 is divisible by x, so the count starts at c_0 = 1.
    std::vector<std::uint64_t> c(e + 1, 0);
    c[e] = 1;
    c[0] = 1;
    for (;;) {
      if (detail::is_irreducible(c, p)) return c;
      unsigned i = e;
      while (i-- > 0) {
        if (++c[i] < p) break;
        c[i] = 0;
      }
      if (i == static_cast<unsigned>(-1)) break;
    }
    throw FieldError("no irreducible polynomial found");  // unreachable
  }

  std::uint32_t p_ = 2;
  unsigned e_ = 1;
  std::vector<std::uint64_t> modulus_;
};

inline FieldSpec make_field(std::uint64_t p, unsigned e,
                            std::optional<std::vector<std::uint64_t>> modulus = std::nullopt) {
  return FieldSpec::make(p, e, std::move(modulus));
}

// ---------------------------------------------------------------------------
// Dense linear algebra

class MatrixFq {
 public:
  MatrixFq() = default;
  MatrixFq(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static MatrixFq from_rows(const std::vector<Vector>& rows) {
    MatrixFq m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_) throw DimensionError("ragged rows");
      std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + r * m.cols_);
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<FieldElement> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  friend bool operator==(const MatrixFq&, const MatrixFq&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> entries_;
};

struct RrefResult {
  MatrixFq matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form. Columns are scanned left to right; the pivot in
/// each column is the first nonzero entry at or below the current row.
inline RrefResult rref(const FieldSpec& f, MatrixFq m) {
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && f.is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const FieldElement scale = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = f.mul(m(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || f.is_zero(m(r, col))) continue;
      const FieldElement factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  out.matrix = std::move(m);
  return out;
}

/// Coefficients c with sum_i c_i * basis_i = v, or nullopt if v is outside the
/// span. When the basis is dependent, free coefficients are set to zero.
inline std::optional<Vector> solve_in_span(const FieldSpec& f, const std::vector<Vector>& basis,
                                           const Vector& v) {
  for (const auto& b : basis)
    if (b.size() != v.size()) throw DimensionError("basis and target lengths differ");
  // Columns are the basis vectors, followed by v.
  MatrixFq m(v.size(), basis.size() + 1);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t r = 0; r < v.size(); ++r) m(r, i) = basis[i][r];
  for (std::size_t r = 0; r < v.size(); ++r) m(r, basis.size()) = v[r];
  const auto red = rref(f, std::move(m));
  if (!red.pivot_columns.empty() && red.pivot_columns.back() == basis.size()) return std::nullopt;
  Vector c(basis.size(), f.zero());
  for (std::size_t r = 0; r < red.rank; ++r) c[red.pivot_columns[r]] = red.matrix(r, basis.size());
  return c;
}

}  // namespace mdlc::gf

#endif  // MDLC_GF_HPP
