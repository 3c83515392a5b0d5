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

#ifndef MDLC_POLYNOMIAL_HPP
#define MDLC_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mdlc/error.hpp"
#include "mdlc/gf.hpp"
#include "mdlc/monomial.hpp"

namespace mdlc {

using gf::FieldElement;
using gf::FieldSpec;
using monomial::ExponentVector;
using monomial::MonomialOrder;

/// Sparse polynomial in F_q[X_1..X_n]. Zero coefficients are never stored.
class PolynomialFq {
 public:
  using Terms = std::map<ExponentVector, FieldElement>;

  PolynomialFq() = default;
  explicit PolynomialFq(std::size_t n) : n_(n) {}

  static PolynomialFq monomial(const FieldSpec& f, const ExponentVector& j,
                               FieldElement c) {
    PolynomialFq p(j.size());
    p.add_term(f, j, c);
    return p;
  }

  static PolynomialFq constant(const FieldSpec& f, std::size_t n, FieldElement c) {
    return monomial(f, ExponentVector(n), c);
  }

  /// X_i^t - 1
  static PolynomialFq binomial(const FieldSpec& f, std::size_t n, std::size_t i, std::uint32_t t) {
    ExponentVector j(n);
    j[i] = t;
    PolynomialFq p(n);
    p.add_term(f, j, f.one());
    p.add_term(f, ExponentVector(n), f.neg(f.one()));
    return p;
  }

  std::size_t dimension() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  FieldElement coefficient(const ExponentVector& j) const {
    auto it = terms_.find(j);
    return it == terms_.end() ? FieldElement{} : it->second;
  }

  /// Adds c * X^j, dropping the term if it cancels.
  void add_term(const FieldSpec& f, const ExponentVector& j, const FieldElement& c) {
    if (j.size() != n_) throw DimensionError("monomial dimension does not match polynomial");
    if (f.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(j, c);
    if (!inserted) {
      it->second = f.add(it->second, c);
      if (f.is_zero(it->second)) terms_.erase(it);
    }
  }

  void set_coefficient(const FieldSpec& f, const ExponentVector& j, const FieldElement& c) {
    terms_.erase(j);
    add_term(f, j, c);
  }

  ExponentVector leading_monomial(MonomialOrder order) const {
    if (terms_.empty()) throw RangeError("zero polynomial has no leading monomial");
    auto it = std::max_element(terms_.begin(), terms_.end(), [order](const auto& a, const auto& b) {
      return monomial::compare(order, a.first, b.first) < 0;
    });
    return it->first;
  }

  FieldElement leading_coefficient(MonomialOrder order) const {
    return terms_.at(leading_monomial(order));
  }

  /// Terms sorted descending in `order`.
  std::vector<std::pair<ExponentVector, FieldElement>> sorted_terms(MonomialOrder order) const {
    std::vector<std::pair<ExponentVector, FieldElement>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [order](const auto& a, const auto& b) {
      return monomial::compare(order, a.first, b.first) > 0;
    });
    return v;
  }

  /// e.g. "X1 + X2", "X2^2 + 1", "2*X1*X2 + [0,1]".
  std::string to_string(const FieldSpec& f, MonomialOrder order) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, c] : sorted_terms(order)) {
      if (!first) os << " + ";
      first = false;
      const bool unit = f.is_one(c);
      if (j.is_zero()) {
        os << f.to_string(c);
        continue;
      }
      if (!unit) os << f.to_string(c) << '*';
      bool first_var = true;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i] == 0) continue;
        if (!first_var) os << '*';
        first_var = false;
        os << 'X' << (i + 1);
        if (j[i] > 1) os << '^' << j[i];
      }
    }
    return os.str();
  }

  friend bool operator==(const PolynomialFq&, const PolynomialFq&) = default;

 private:
  std::size_t n_ = 0;
  Terms terms_;
};

inline PolynomialFq add(const FieldSpec& f, PolynomialFq a, const PolynomialFq& b) {
  for (const auto& [j, c] : b.terms()) a.add_term(f, j, c);
  return a;
}

/// a - c * X^shift * b
inline PolynomialFq sub_scaled_shift(const FieldSpec& f, PolynomialFq a, const FieldElement& c,
                                     const ExponentVector& shift, const PolynomialFq& b) {
  for (const auto& [j, bc] : b.terms()) a.add_term(f, j + shift, f.neg(f.mul(c, bc)));
  return a;
}

inline PolynomialFq scale(const FieldSpec& f, const PolynomialFq& a, const FieldElement& c) {
  PolynomialFq r(a.dimension());
  for (const auto& [j, ac] : a.terms()) r.add_term(f, j, f.mul(c, ac));
  return r;
}

/// Remainder of `p` under full multivariate division by `divisors`. The first
/// divisor whose leading monomial divides a term is used.
inline PolynomialFq normal_form(const FieldSpec& f, PolynomialFq p,
                                const std::vector<PolynomialFq>& divisors, MonomialOrder order) {
  PolynomialFq rem(p.dimension());
  std::vector<ExponentVector> lms;
  std::vector<FieldElement> lc_inv;
  for (const auto& g : divisors) {
    if (g.is_zero()) continue;
    lms.push_back(g.leading_monomial(order));
    lc_inv.push_back(f.inv(g.coefficient(lms.back())));
  }
  std::vector<const PolynomialFq*> nz;
  for (const auto& g : divisors)
    if (!g.is_zero()) nz.push_back(&g);
  while (!p.is_zero()) {
    const ExponentVector lm = p.leading_monomial(order);
    const FieldElement lc = p.coefficient(lm);
    bool reduced = false;
    for (std::size_t i = 0; i < nz.size(); ++i) {
      if (!monomial::divides(lms[i], lm)) continue;
      p = sub_scaled_shift(f, std::move(p), f.mul(lc, lc_inv[i]), lm - lms[i], *nz[i]);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(f, lm, lc);
      p.set_coefficient(f, lm, f.zero());
    }
  }
  return rem;
}

}  // namespace mdlc

#endif  // MDLC_POLYNOMIAL_HPP
