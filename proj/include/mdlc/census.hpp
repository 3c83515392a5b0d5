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

// Exhaustive census of monomial ideals of colength K in n variables, i.e. of
// staircases (downsets of N_0^n) with exactly K members.

#ifndef MDLC_CENSUS_HPP
#define MDLC_CENSUS_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mdlc/error.hpp"
#include "mdlc/monomial.hpp"

namespace mdlc::census {

using BigInt = boost::multiprecision::cpp_int;
using monomial::ExponentVector;
using monomial::Staircase;

struct Limits {
  std::size_t max_n = 4;
  std::size_t max_K = 12;
};

namespace detail {

using Key = std::vector<ExponentVector>;  // members sorted in grlex

inline Key key_of(const Staircase& s) { return s.sorted(monomial::MonomialOrder::grlex); }

inline void check_limits(std::size_t n, std::size_t K, const Limits& lim) {
  if (n < 1 || K < 1) throw RangeError("census needs n >= 1 and K >= 1");
  if (n > lim.max_n || K > lim.max_K)
    throw BudgetExceeded("census limited to n <= " + std::to_string(lim.max_n) + ", K <= " +
                         std::to_string(lim.max_K) + "; got n = " + std::to_string(n) +
                         ", K = " + std::to_string(K));
}

}  // namespace detail

/// Every staircase of size exactly K, each once, sorted by canonical encoding
/// (members in grlex, compared lexicographically). Grown depth-first from the
/// origin by adding addable corners; duplicates are removed on the canonical key.
inline std::vector<Staircase> enumerate_staircases(std::size_t n, std::size_t K, const Limits& lim = {}) {
  detail::check_limits(n, K, lim);
  std::set<detail::Key> seen_at_size;  // keys of every staircase reached, any size
  std::map<detail::Key, Staircase> found;

  Staircase start(n);
  start.insert(ExponentVector(n));

  std::vector<Staircase> stack{start};
  seen_at_size.insert(detail::key_of(start));
  while (!stack.empty()) {
    Staircase s = std::move(stack.back());
    stack.pop_back();
    if (s.size() == K) {
      found.emplace(detail::key_of(s), s);
      continue;
    }
    for (const auto& corner : monomial::minimal_generators(s)) {
      Staircase grown = s;
      grown.insert(corner);
      if (seen_at_size.insert(detail::key_of(grown)).second) stack.push_back(std::move(grown));
    }
  }
  std::vector<Staircase> out;
  out.reserve(found.size());
  for (auto& [k, s] : found) out.push_back(std::move(s));
  return out;
}

/// K^n (K+n-2)^{(n-1)(K-1)} (2K-3)^{K-2}, and 1 for K = 1.
inline BigInt lemma1_bound(std::uint64_t n, std::uint64_t K) {
  if (n < 1 || K < 1) throw RangeError("lemma1_bound needs n >= 1 and K >= 1");
  if (K == 1) return 1;
  using boost::multiprecision::pow;
  const BigInt a = pow(BigInt(K), static_cast<unsigned>(n));
  const BigInt b = pow(BigInt(K + n - 2), static_cast<unsigned>((n - 1) * (K - 1)));
  const BigInt c = pow(BigInt(2 * K - 3), static_cast<unsigned>(K - 2));
  return a * b * c;
}

/// m_i = 1 + max exponent of X_i over the members, so X_i^{m_i} is the least
/// pure power of X_i in the ideal. For |s| = K >= 2 the vector satisfies
/// m_1 + ... + m_n + 1 - n <= K <= m_1 ... m_n.
inline std::vector<std::uint64_t> corner_exponents(const Staircase& s) {
  if (!s.is_downward_closed()) throw InvariantError("staircase is not downward closed");
  std::vector<std::uint64_t> m(s.dimension(), 0);
  for (const auto& j : s.members())
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::max<std::uint64_t>(m[i], j[i]);
  for (auto& x : m) ++x;
  const std::uint64_t K = s.size();
  if (K >= 2) {
    std::uint64_t sum = 0;
    BigInt prod = 1;
    for (auto x : m) {
      sum += x;
      prod *= x;
    }
    if (sum + 1 - m.size() > K || prod < K)
      throw InvariantError("corner exponents violate m_1+...+m_n+1-n <= K <= m_1...m_n");
  }
  return m;
}

struct CensusRecord {
  std::size_t n = 0;
  std::size_t K = 0;
  std::uint64_t count = 0;
  BigInt lemma1_bound;
  std::size_t max_generators = 0;
  std::size_t lemma2_bound = 0;
  std::uint64_t equality_count = 0;
  std::uint64_t distinct_corner_vectors = 0;
};

/// One record per K = 1..K_max. Throws InvariantError if a counting bound fails.
inline std::vector<CensusRecord> run_census(std::size_t n, std::size_t K_max, const Limits& lim = {}) {
  std::vector<CensusRecord> out;
  for (std::size_t K = 1; K <= K_max; ++K) {
    const auto all = enumerate_staircases(n, K, lim);
    CensusRecord r;
    r.n = n;
    r.K = K;
    r.count = all.size();
    r.lemma1_bound = lemma1_bound(n, K);
    r.lemma2_bound = (n - 1) * K + 1;
    std::set<std::vector<std::uint64_t>> corners;
    for (const auto& s : all) {
      const std::size_t g = monomial::minimal_generators(s).size();
      r.max_generators = std::max(r.max_generators, g);
      if (g == r.lemma2_bound) ++r.equality_count;
      if (g > r.lemma2_bound) throw InvariantError("generator count above (n-1)K+1");
      corners.insert(corner_exponents(s));
    }
    r.distinct_corner_vectors = corners.size();
    if (BigInt(r.count) > r.lemma1_bound) throw InvariantError("ideal count above the explicit bound");
    const bool expect_equality = (K == 1 || n == 1);
    if ((r.equality_count > 0) != expect_equality)
      throw InvariantError("equality in the generator bound for K = " + std::to_string(K) +
                           ", n = " + std::to_string(n) + " contradicts 'K = 1 or n = 1'");
    if (BigInt(r.distinct_corner_vectors) > boost::multiprecision::pow(BigInt(K), static_cast<unsigned>(n)))
      throw InvariantError("more corner vectors than K^n");
    out.push_back(std::move(r));
  }
  return out;
}

inline constexpr const char* kCsvHeader = "n,K,count,lemma1_bound,max_generators,lemma2_bound,equality_count";

inline void write_csv(std::ostream& os, const std::vector<CensusRecord>& records) {
  os << kCsvHeader << '\n';
  for (const auto& r : records)
    os << r.n << ',' << r.K << ',' << r.count << ',' << r.lemma1_bound.str() << ',' << r.max_generators << ','
       << r.lemma2_bound << ',' << r.equality_count << '\n';
}

}  // namespace mdlc::census

#endif  // MDLC_CENSUS_HPP
