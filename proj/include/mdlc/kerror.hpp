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

// k-error linear complexity: the least L(t) over arrays t that differ from s
// in at most k cells of one period.

#ifndef MDLC_KERROR_HPP
#define MDLC_KERROR_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mdlc/annihilator.hpp"
#include "mdlc/error.hpp"
#include "mdlc/rng.hpp"
#include "mdlc/seqarray.hpp"

namespace mdlc::kerror {

using BigInt = boost::multiprecision::cpp_int;
using seq::PeriodicArray;

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

enum class Mode { exact, sampled };

inline std::string_view to_string(Mode m) { return m == Mode::exact ? "exact" : "sampled"; }

inline Mode parse_mode(std::string_view s) {
  if (s == "exact") return Mode::exact;
  if (s == "sampled") return Mode::sampled;
  throw RangeError("unknown k-error mode '" + std::string(s) + "'");
}

struct KErrorResult {
  std::size_t k = 0;
  std::size_t value = 0;
  PeriodicArray witness;
  Mode mode = Mode::exact;
  std::uint64_t candidates_examined = 0;
};

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Number of arrays within Hamming distance k: sum_{i<=k} C(N,i) (q-1)^i.
inline BigInt ball_size(std::uint64_t N, std::uint64_t k, std::uint64_t q) {
  if (k > N) throw RangeError("k = " + std::to_string(k) + " exceeds N = " + std::to_string(N));
  if (q < 2) throw RangeError("q must be at least 2");
  BigInt total = 0, pw = 1;
  for (std::uint64_t i = 0; i <= k; ++i) {
    total += binomial(N, i) * pw;
    pw *= (q - 1);
  }
  return total;
}

namespace detail {

// Visits every error pattern of weight <= k_max: weights ascending, positions
// as ascending combinations in linear-index order, and per position the
// substituted values in ascending index order skipping the original. The
// visitor returns false to stop.
inline void for_each_candidate(const PeriodicArray& s, std::size_t k_max,
                               const std::function<bool(const PeriodicArray&, std::size_t)>& visit) {
  const auto& f = s.field();
  const std::uint64_t q = f.q_or_throw();
  const std::size_t N = s.volume();
  PeriodicArray cand = s;
  std::vector<std::size_t> pos;
  bool stop = false;

  // Assign values to pos[depth..] recursively.
  std::function<void(std::size_t)> assign = [&](std::size_t depth) {
    if (stop) return;
    if (depth == pos.size()) {
      if (!visit(cand, pos.size())) stop = true;
      return;
    }
    const std::size_t cell = pos[depth];
    const std::uint64_t orig = f.index(s[cell]);
    for (std::uint64_t v = 0; v < q && !stop; ++v) {
      if (v == orig) continue;
      cand.set(cell, f.from_index(v));
      assign(depth + 1);
    }
    cand.set(cell, s[cell]);
  };
  // Choose the next position strictly after `from`.
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t from, std::size_t w) {
    if (stop) return;
    if (pos.size() == w) {
      assign(0);
      return;
    }
    for (std::size_t c = from; c + (w - pos.size()) <= N && !stop; ++c) {
      pos.push_back(c);
      choose(c + 1, w);
      pos.pop_back();
    }
  };
  for (std::size_t w = 0; w <= k_max && !stop; ++w) choose(0, w);
}

inline void check_k(const PeriodicArray& s, std::size_t k) {
  if (k > s.volume())
    throw RangeError("k = " + std::to_string(k) + " exceeds the period volume " + std::to_string(s.volume()));
}

inline void check_budget(const PeriodicArray& s, std::size_t k, std::uint64_t budget) {
  const BigInt ball = ball_size(s.volume(), k, s.field().q_or_throw());
  if (ball > budget)
    throw BudgetExceeded("exact k-error search needs a ball of " + ball.str() +
                         " candidates, above the budget of " + std::to_string(budget));
}

}  // namespace detail

/// Exact L_k(s) for k = 0..k_max sharing one enumeration. Values are
/// non-increasing; ties keep the first candidate in enumeration order.
inline std::vector<KErrorResult> k_error_profile(const PeriodicArray& s, std::size_t k_max,
                                                 std::uint64_t budget = kDefaultBudget) {
  detail::check_k(s, k_max);
  detail::check_budget(s, k_max, budget);
  struct Best {
    std::size_t value;
    PeriodicArray witness;
    std::uint64_t seen = 0;
    bool found = false;
  };
  std::vector<Best> by_weight(k_max + 1, Best{0, s});
  std::uint64_t examined = 0;
  detail::for_each_candidate(s, k_max, [&](const PeriodicArray& c, std::size_t w) {
    ++examined;
    const std::size_t L = annihilator::linear_complexity(c);
    auto& b = by_weight[w];
    b.seen = examined;
    if (!b.found || L < b.value) {
      b.value = L;
      b.witness = c;
      b.found = true;
    }
    return L != 0;
  });

  std::vector<KErrorResult> out;
  const Best* best = nullptr;
  std::uint64_t seen = 0;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const auto& b = by_weight[k];
    if (b.found && (!best || b.value < best->value)) best = &b;
    if (b.found) seen = b.seen;
    out.push_back(KErrorResult{k, best->value, best->witness, Mode::exact, seen});
  }
  return out;
}

/// L_k(s). Exact mode enumerates the whole Hamming ball (at most `budget`
/// candidates). Sampled mode starts from s itself and draws `budget` patterns
/// uniformly from the ball; the result is an upper bound on L_k(s).
inline KErrorResult k_error_complexity(const PeriodicArray& s, std::size_t k, Mode mode,
                                       std::uint64_t budget = kDefaultBudget, std::uint64_t seed = 0) {
  detail::check_k(s, k);
  if (mode == Mode::exact) return k_error_profile(s, k, budget).back();

  const auto& f = s.field();
  const std::uint64_t q = f.q_or_throw();
  const std::size_t N = s.volume();
  std::vector<BigInt> cumulative;
  {
    BigInt acc = 0, pw = 1;
    for (std::size_t w = 0; w <= k; ++w) {
      acc += binomial(N, w) * pw;
      pw *= (q - 1);
      cumulative.push_back(acc);
    }
  }
  const BigInt& ball = cumulative.back();
  SplitMix64 rng(seed);
  auto draw_below = [&](const BigInt& bound) {
    // Rejection over the smallest power of two covering bound.
    const std::size_t bits = boost::multiprecision::msb(bound) + 1;
    for (;;) {
      BigInt x = 0;
      std::size_t have = 0;
      while (have < bits) {
        x = (x << 64) | BigInt(rng());
        have += 64;
      }
      x >>= (have - bits);
      if (x < bound) return x;
    }
  };

  KErrorResult best{k, annihilator::linear_complexity(s), s, Mode::sampled, 1};
  std::vector<std::size_t> cells(N);
  for (std::uint64_t t = 0; t < budget && best.value > 0; ++t) {
    const BigInt r = draw_below(ball);
    std::size_t w = 0;
    while (cumulative[w] <= r) ++w;
    PeriodicArray cand = s;
    for (std::size_t i = 0; i < N; ++i) cells[i] = i;
    for (std::size_t i = 0; i < w; ++i) {
      const std::size_t j = i + rng.uniform_below(N - i);
      std::swap(cells[i], cells[j]);
      const std::uint64_t orig = f.index(s[cells[i]]);
      const std::uint64_t shift = 1 + rng.uniform_below(q - 1);
      cand.set(cells[i], f.from_index((orig + shift) % q));
    }
    ++best.candidates_examined;
    const std::size_t L = annihilator::linear_complexity(cand);
    if (L < best.value) {
      best.value = L;
      best.witness = std::move(cand);
    }
  }
  return best;
}

}  // namespace mdlc::kerror

#endif  // MDLC_KERROR_HPP
