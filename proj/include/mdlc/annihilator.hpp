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

// Reduced Groebner basis of the annihilator ideal I(s) of a periodic array,
// its Delta set, and the linear complexity L(s) = |Delta(s)|.
//
// P lies in I(s) iff sum_j a_j v_j = 0, where v_j = (s(m + j))_m ranges over
// the fundamental box. Since X_i^{T_i} - 1 is in I(s), Delta(s) sits inside
// prod [0, T_i - 1] and every minimal leading monomial inside prod [0, T_i].
// Scanning that box in ascending order and testing each shift vector against
// the span of those already accepted yields Delta(s) and, for each dependent
// monomial not divisible by an earlier leading monomial, the reduced basis
// element X^j - sum c_d X^d.

#ifndef MDLC_ANNIHILATOR_HPP
#define MDLC_ANNIHILATOR_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mdlc/error.hpp"
#include "mdlc/gf.hpp"
#include "mdlc/monomial.hpp"
#include "mdlc/polynomial.hpp"
#include "mdlc/seqarray.hpp"

namespace mdlc::annihilator {

using monomial::Staircase;
using seq::PeriodicArray;
using seq::Periods;

struct AnnihilatorResult {
  FieldSpec field;
  MonomialOrder order = MonomialOrder::grlex;
  Staircase delta;
  /// Sorted ascending by leading monomial.
  std::vector<PolynomialFq> basis;
  std::size_t complexity = 0;
};

namespace detail {

// Arithmetic on raw residues of a prime field.
struct PrimeArith {
  using T = std::uint32_t;
  std::uint32_t p;

  T from(const FieldElement& x) const { return x[0]; }
  FieldElement to(const FieldSpec& f, T x) const { return f.from_int(x); }
  static bool is_zero(T x) { return x == 0; }
  T one() const { return 1; }
  T neg(T x) const { return x ? p - x : 0; }
  T mul(T a, T b) const { return static_cast<T>(std::uint64_t{a} * b % p); }
  // a - c*b
  T sub_mul(T a, T c, T b) const { return static_cast<T>((a + std::uint64_t{p - c} * b) % p); }
  T add_mul(T a, T c, T b) const { return static_cast<T>((a + std::uint64_t{c} * b) % p); }
  T inv(T a) const { return static_cast<T>(gf::detail::pow_mod(a, p - 2, p)); }
};

struct ExtArith {
  using T = FieldElement;
  const FieldSpec* f;

  T from(const FieldElement& x) const { return x; }
  FieldElement to(const FieldSpec&, T x) const { return x; }
  static bool is_zero(const T& x) { return x == T{}; }
  T one() const { return f->one(); }
  T neg(const T& x) const { return f->neg(x); }
  T mul(const T& a, const T& b) const { return f->mul(a, b); }
  T sub_mul(const T& a, const T& c, const T& b) const { return f->sub(a, f->mul(c, b)); }
  T add_mul(const T& a, const T& c, const T& b) const { return f->add(a, f->mul(c, b)); }
  T inv(const T& a) const { return f->inv(a); }
};

// Echelon form of the accepted shift vectors. Each stored row is monic at its
// pivot and remembers its expression in terms of the original vectors, so a
// dependent vector comes back with its coefficients directly.
template <class Arith>
class IncrementalSpan {
 public:
  using T = typename Arith::T;

  explicit IncrementalSpan(Arith a) : ar_(a) {}

  std::size_t rank() const noexcept { return rows_.size(); }

  /// If v is a combination of the accepted vectors, returns the coefficients;
  /// otherwise accepts v and returns nullopt.
  std::optional<std::vector<T>> insert_or_solve(std::vector<T> v) {
    std::vector<T> comb(rows_.size(), T{});
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const T factor = v[pivots_[i]];
      if (Arith::is_zero(factor)) continue;
      const auto& r = rows_[i];
      for (std::size_t c = pivots_[i]; c < v.size(); ++c)
        if (!Arith::is_zero(r[c])) v[c] = ar_.sub_mul(v[c], factor, r[c]);
      const auto& k = combos_[i];
      for (std::size_t c = 0; c < k.size(); ++c)
        if (!Arith::is_zero(k[c])) comb[c] = ar_.add_mul(comb[c], factor, k[c]);
    }
    std::size_t piv = 0;
    while (piv < v.size() && Arith::is_zero(v[piv])) ++piv;
    if (piv == v.size()) return comb;
    // v_new = orig_new - sum comb_k orig_k; normalize so the pivot is one.
    const T s = ar_.inv(v[piv]);
    for (std::size_t c = piv; c < v.size(); ++c) v[c] = ar_.mul(v[c], s);
    for (auto& c : comb) c = ar_.mul(ar_.neg(c), s);
    comb.push_back(s);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    combos_.push_back(std::move(comb));
    return std::nullopt;
  }

 private:
  Arith ar_;
  std::vector<std::vector<T>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<T>> combos_;
};

template <class Arith>
AnnihilatorResult scan(const PeriodicArray& s, MonomialOrder order, Arith ar) {
  using T = typename Arith::T;
  const std::size_t n = s.dimension();
  const std::size_t N = s.volume();
  const auto& f = s.field();
  const auto& periods = s.periods();
  const auto& strides = s.strides();

  std::vector<T> values(N);
  for (std::size_t i = 0; i < N; ++i) values[i] = ar.from(s[i]);
  std::vector<std::uint32_t> coords(N * n);
  for (std::size_t lin = 0; lin < N; ++lin) {
    const auto m = s.coordinates(lin);
    for (std::size_t i = 0; i < n; ++i) coords[lin * n + i] = m[i];
  }

  AnnihilatorResult out{f, order, Staircase(n), {}, 0};
  std::vector<ExponentVector> delta_order;  // accepted in scan order
  std::vector<ExponentVector> lms;
  IncrementalSpan<Arith> span(ar);
  std::vector<T> v(N);

  for (const auto& j : monomial::enumerate_box(periods, order)) {
    if (std::any_of(lms.begin(), lms.end(), [&](const auto& lm) { return monomial::divides(lm, j); }))
      continue;
    for (std::size_t lin = 0; lin < N; ++lin) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < n; ++i) idx += ((coords[lin * n + i] + j[i]) % periods[i]) * strides[i];
      v[lin] = values[idx];
    }
    auto coeffs = span.insert_or_solve(v);
    if (!coeffs) {
      delta_order.push_back(j);
      out.delta.insert(j);
      continue;
    }
    PolynomialFq g(n);
    g.add_term(f, j, f.one());
    for (std::size_t k = 0; k < coeffs->size(); ++k)
      g.add_term(f, delta_order[k], f.neg(ar.to(f, (*coeffs)[k])));
    out.basis.push_back(std::move(g));
    lms.push_back(j);
  }
  out.complexity = out.delta.size();
  return out;
}

}  // namespace detail

/// Reduced Groebner basis of I(s), Delta(s) and L(s). The zero array gives the
/// unit ideal: basis {1}, empty Delta, L = 0.
inline AnnihilatorResult compute(const PeriodicArray& s, MonomialOrder order = MonomialOrder::grlex) {
  if (s.field().is_prime_field()) return detail::scan(s, order, detail::PrimeArith{s.field().p()});
  return detail::scan(s, order, detail::ExtArith{&s.field()});
}

inline std::size_t linear_complexity(const PeriodicArray& s) { return compute(s).complexity; }

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> problems;

  explicit operator bool() const noexcept { return ok; }
  void fail(std::string why) {
    ok = false;
    problems.push_back(std::move(why));
  }
};

/// Checks that `r` is the reduced Groebner basis of I(s) with consistent
/// Delta set and complexity.
inline VerifyReport verify(const PeriodicArray& s, const AnnihilatorResult& r) {
  VerifyReport rep;
  const auto& f = s.field();
  const std::size_t n = s.dimension();
  if (!(r.field == f)) rep.fail("result field differs from the array field");
  if (r.delta.dimension() != n) {
    rep.fail("delta has wrong dimension");
    return rep;
  }
  if (r.complexity != r.delta.size()) rep.fail("complexity differs from |delta|");
  if (r.complexity > s.volume()) rep.fail("complexity exceeds the period volume");
  if (!r.delta.is_downward_closed()) {
    rep.fail("delta is not downward closed");
    return rep;
  }
  for (const auto& d : r.delta.members())
    for (std::size_t i = 0; i < n; ++i)
      if (d[i] >= s.periods()[i]) rep.fail("delta member " + d.to_string() + " outside the period box");
  if (r.basis.empty()) {
    rep.fail("basis is empty");
    return rep;
  }

  std::vector<ExponentVector> lms;
  for (std::size_t b = 0; b < r.basis.size(); ++b) {
    const auto& g = r.basis[b];
    if (g.dimension() != n || g.is_zero()) {
      rep.fail("basis element " + std::to_string(b) + " is zero or has wrong dimension");
      return rep;
    }
    const auto lm = g.leading_monomial(r.order);
    lms.push_back(lm);
    if (!f.is_one(g.coefficient(lm))) rep.fail("basis element " + std::to_string(b) + " is not monic");
    if (r.delta.contains(lm)) rep.fail("leading monomial " + lm.to_string() + " lies in delta");
    for (const auto& [j, c] : g.terms())
      if (j != lm && !r.delta.contains(j))
        rep.fail("basis element " + std::to_string(b) + " has tail term " + j.to_string() + " outside delta");
  }
  for (std::size_t a = 0; a < lms.size(); ++a)
    for (std::size_t b = 0; b < lms.size(); ++b)
      if (a != b && monomial::divides(lms[a], lms[b]))
        rep.fail("leading monomial " + lms[a].to_string() + " divides " + lms[b].to_string());
  {
    auto expected = monomial::minimal_generators(r.delta);
    auto got = lms;
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    if (got != expected) rep.fail("leading monomials are not the minimal generators of the complement of delta");
  }
  for (std::size_t b = 0; b < r.basis.size(); ++b)
    if (!seq::apply_polynomial(r.basis[b], s).is_zero())
      rep.fail("basis element " + std::to_string(b) + " does not annihilate the array");
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = PolynomialFq::binomial(f, n, i, s.periods()[i]);
    if (!normal_form(f, x, r.basis, r.order).is_zero())
      rep.fail("X" + std::to_string(i + 1) + "^" + std::to_string(s.periods()[i]) +
               " - 1 does not reduce to zero");
  }
  return rep;
}

using InitialTerms = std::map<ExponentVector, FieldElement>;

/// The values s(j), j in Delta, that regenerate the array.
inline InitialTerms initial_terms(const PeriodicArray& s, const AnnihilatorResult& r) {
  InitialTerms init;
  for (const auto& d : r.delta.members()) init.emplace(d, seq::at(s, d));
  return init;
}

/// Rebuilds the fundamental period from the initial terms on Delta using the
/// recurrences of the basis. Each position outside Delta is expressed through
/// the first basis element whose leading monomial divides it, which refers only
/// to monomials smaller in the order.
inline PeriodicArray regenerate(const InitialTerms& initial, const AnnihilatorResult& r,
                                const Periods& periods) {
  const auto& f = r.field;
  const std::size_t n = periods.size();
  for (const auto& d : r.delta.members())
    if (!initial.count(d)) throw InconsistentBasisError("no initial value for delta member " + d.to_string());

  struct Rec {
    ExponentVector lm;
    FieldElement lc_inv;
    std::vector<std::pair<ExponentVector, FieldElement>> tail;
  };
  std::vector<Rec> recs;
  for (const auto& g : r.basis) {
    if (g.dimension() != n || g.is_zero()) throw InconsistentBasisError("malformed basis element");
    Rec rec{g.leading_monomial(r.order), {}, {}};
    rec.lc_inv = f.inv(g.coefficient(rec.lm));
    for (const auto& [j, c] : g.terms()) {
      if (j == rec.lm) continue;
      rec.tail.emplace_back(j, c);
    }
    recs.push_back(std::move(rec));
  }

  std::map<ExponentVector, FieldElement> memo;
  // Explicit stack: a position is finished once all its dependencies are.
  auto value_of = [&](const ExponentVector& target) -> FieldElement {
    std::vector<ExponentVector> stack{target};
    while (!stack.empty()) {
      const ExponentVector j = stack.back();
      if (memo.count(j)) {
        stack.pop_back();
        continue;
      }
      if (r.delta.contains(j)) {
        memo.emplace(j, initial.at(j));
        stack.pop_back();
        continue;
      }
      const Rec* rec = nullptr;
      for (const auto& c : recs)
        if (monomial::divides(c.lm, j)) {
          rec = &c;
          break;
        }
      if (!rec) throw InconsistentBasisError("position " + j.to_string() + " is not reachable by any leading monomial");
      const ExponentVector a = j - rec->lm;
      bool ready = true;
      FieldElement acc = f.zero();
      for (const auto& [t, c] : rec->tail) {
        ExponentVector dep = a + t;
        auto it = memo.find(dep);
        if (it == memo.end()) {
          ready = false;
          stack.push_back(std::move(dep));
        } else if (ready) {
          acc = f.sub(acc, f.mul(c, it->second));
        }
      }
      if (!ready) continue;
      memo.emplace(j, f.mul(acc, rec->lc_inv));
      stack.pop_back();
    }
    return memo.at(target);
  };

  for (const auto& rec : recs)
    for (const auto& [t, c] : rec.tail)
      if (monomial::compare(r.order, t, rec.lm) >= 0)
        throw InconsistentBasisError("tail term " + t.to_string() + " is not below its leading monomial");

  PeriodicArray out(f, periods);
  for (std::size_t lin = 0; lin < out.volume(); ++lin) out.set(lin, value_of(out.coordinates(lin)));
  return out;
}

/// Linear complexity of a one-dimensional periodic array by Berlekamp-Massey
/// over F_q, run on two full periods.
inline std::size_t berlekamp_massey(const PeriodicArray& t) {
  if (t.dimension() != 1) throw DimensionError("Berlekamp-Massey needs a one-dimensional array");
  const auto& f = t.field();
  const std::size_t T = t.volume();
  const std::size_t len = 2 * T;
  std::vector<FieldElement> C{f.one()}, B{f.one()};
  std::size_t L = 0, m = 1;
  FieldElement b = f.one();
  for (std::size_t i = 0; i < len; ++i) {
    FieldElement d = t[i % T];
    for (std::size_t k = 1; k <= L && k < C.size(); ++k) d = f.add(d, f.mul(C[k], t[(i - k) % T]));
    if (f.is_zero(d)) {
      ++m;
      continue;
    }
    const FieldElement coef = f.div(d, b);
    auto prev = C;
    if (C.size() < B.size() + m) C.resize(B.size() + m, f.zero());
    for (std::size_t k = 0; k < B.size(); ++k) C[k + m] = f.sub(C[k + m], f.mul(coef, B[k]));
    if (2 * L <= i) {
      L = i + 1 - L;
      B = std::move(prev);
      b = d;
      m = 1;
    } else {
      ++m;
    }
  }
  return L;
}

/// L^{m_2..m_n}(s): complexity of m -> s(m, m_2, ..., m_n) for every fixed tail.
struct SliceComplexities {
  Periods shape;  // (T_2, ..., T_n)
  std::vector<std::size_t> values;  // same layout as PeriodicArray

  std::size_t sum() const {
    std::size_t total = 0;
    for (auto v : values) total += v;
    return total;
  }
};

inline SliceComplexities slice_complexities(const PeriodicArray& s) {
  if (s.dimension() < 2) throw DimensionError("slice complexities need n >= 2");
  const auto& T = s.periods();
  SliceComplexities out{Periods(T.begin() + 1, T.end()), {}};
  const std::size_t inner = s.strides()[0];
  out.values.reserve(inner);
  for (std::size_t rest = 0; rest < inner; ++rest) {
    PeriodicArray line(s.field(), {T[0]});
    for (std::uint32_t m = 0; m < T[0]; ++m) line.set(m, s[m * inner + rest]);
    out.values.push_back(berlekamp_massey(line));
  }
  return out;
}

}  // namespace mdlc::annihilator

#endif  // MDLC_ANNIHILATOR_HPP
