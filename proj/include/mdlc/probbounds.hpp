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

// Exhaustive and Monte Carlo checks of the probabilistic bounds on the linear
// complexity and k-error linear complexity of random periodic arrays.

#ifndef MDLC_PROBBOUNDS_HPP
#define MDLC_PROBBOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "json.hpp"
#include "mdlc/annihilator.hpp"
#include "mdlc/error.hpp"
#include "mdlc/kerror.hpp"
#include "mdlc/rng.hpp"
#include "mdlc/seqarray.hpp"
#include "mdlc/version.hpp"

namespace mdlc::prob {

using nlohmann::ordered_json;
using seq::PeriodicArray;
using seq::Periods;

inline constexpr std::uint64_t kExhaustiveLimit = std::uint64_t{1} << 20;
inline constexpr std::uint64_t kMuExhaustiveLimit = std::uint64_t{1} << 16;

enum class Mode { exhaustive, montecarlo };
enum class Experiment { upper_bound, lower_bound };

inline std::string_view to_string(Mode m) { return m == Mode::exhaustive ? "exhaustive" : "montecarlo"; }
inline std::string_view to_string(Experiment e) {
  return e == Experiment::upper_bound ? "upper_bound" : "lower_bound";
}

struct ExperimentConfig {
  Experiment experiment = Experiment::lower_bound;
  FieldSpec field = FieldSpec::make(2, 1);
  Periods periods;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t k = 0;
  double epsilon = 0.5;
  double epsilon1 = 0.5;
  double epsilon2 = 0.1;
  Mode mode = Mode::montecarlo;
  std::uint64_t kerror_budget = kerror::kDefaultBudget;
};

struct ProbReport {
  ordered_json config;
  Experiment experiment = Experiment::lower_bound;
  std::uint64_t samples = 0;
  std::optional<double> mu_estimate;
  std::optional<std::int64_t> threshold_H;
  double threshold = 0;
  double empirical_probability = 0;
  double paper_bound = 0;
  double statistical_slack = 0;
  std::map<std::size_t, std::uint64_t> distribution;
  bool satisfied = false;
  std::uint64_t slice_sum_violations = 0;
  std::uint64_t chain_violations = 0;
};

/// exp(-2 d eps^2 / (b - a)^2)
inline double hoeffding_rhs(std::uint64_t d, double epsilon, double a, double b) {
  if (!(b > a)) throw RangeError("hoeffding_rhs needs b > a");
  if (d < 1) throw RangeError("hoeffding_rhs needs d >= 1");
  if (!(epsilon > 0)) throw RangeError("hoeffding_rhs needs epsilon > 0");
  const double w = b - a;
  return std::exp(-2.0 * static_cast<double>(d) * epsilon * epsilon / (w * w));
}

/// floor(sqrt((1 - eps1) * T_1...T_n / (n - 1)))
inline std::int64_t threshold_H(const Periods& periods, std::size_t n, double epsilon1) {
  if (n < 2) throw RangeError("threshold_H needs n >= 2; the (n-1) divisor vanishes at n = 1");
  if (periods.size() != n) throw DimensionError("periods length differs from n");
  if (!(epsilon1 > 0 && epsilon1 < 1)) throw RangeError("epsilon1 must lie in (0, 1)");
  double N = 1;
  for (auto t : periods) N *= t;
  const double x = (1.0 - epsilon1) * N / static_cast<double>(n - 1);
  auto h = static_cast<std::int64_t>(std::floor(std::sqrt(x)));
  while (static_cast<double>(h + 1) * static_cast<double>(h + 1) <= x) ++h;
  while (h > 0 && static_cast<double>(h) * static_cast<double>(h) > x) --h;
  return h;
}

namespace detail {

inline std::uint64_t space_size(const FieldSpec& f, std::uint64_t N, std::uint64_t limit) {
  const std::uint64_t q = f.q_or_throw();
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < N; ++i) {
    if (total > limit / q) throw BudgetExceeded("exhaustive enumeration over q^N arrays exceeds 2^20");
    total *= q;
  }
  return total;
}

// The array whose cells are the base-q digits of `index`, cell 0 least significant.
inline PeriodicArray array_from_index(const FieldSpec& f, const Periods& periods, std::uint64_t index) {
  PeriodicArray s(f, periods);
  const std::uint64_t q = f.q_or_throw();
  for (std::size_t i = 0; i < s.volume(); ++i) {
    s.set(i, f.from_index(index % q));
    index /= q;
  }
  return s;
}

// Runs body(i) for i in [0, count) over `workers` threads, writing only slot i.
template <class Body>
void parallel_for(std::uint64_t count, unsigned workers, Body&& body) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::uint64_t i = w; i < count; i += workers) body(i);
    });
  for (auto& t : pool) t.join();
}

struct Sample {
  std::size_t L = 0;
  std::size_t Lk = 0;
  bool slice_ok = true;
  bool chain_ok = true;
};

inline Sample measure(const PeriodicArray& s, std::size_t k, std::uint64_t budget) {
  Sample out;
  out.L = annihilator::linear_complexity(s);
  out.slice_ok = out.L <= annihilator::slice_complexities(s).sum();
  if (k == 0) {
    out.Lk = out.L;
  } else {
    const auto profile = kerror::k_error_profile(s, std::min(k, s.volume()), budget);
    out.Lk = profile.back().value;
    for (std::size_t i = 1; i < profile.size(); ++i)
      if (profile[i].value > profile[i - 1].value) out.chain_ok = false;
    if (profile.front().value != out.L) out.chain_ok = false;
  }
  if (!(out.Lk <= out.L && out.L <= s.volume())) out.chain_ok = false;
  return out;
}

inline std::vector<Sample> draw_samples(const ExperimentConfig& cfg, unsigned workers) {
  std::uint64_t count = cfg.trials;
  std::size_t N = 1;
  for (auto t : cfg.periods) N *= t;
  if (cfg.mode == Mode::exhaustive) count = space_size(cfg.field, N, kExhaustiveLimit);
  if (cfg.k > 0) {
    // Fail fast rather than inside a worker thread.
    const auto ball = kerror::ball_size(N, std::min<std::uint64_t>(cfg.k, N), cfg.field.q_or_throw());
    if (ball > cfg.kerror_budget)
      throw BudgetExceeded("exact k-error search needs a ball of " + ball.str() + " candidates, above the budget of " +
                           std::to_string(cfg.kerror_budget));
  }
  std::vector<Sample> out(count);
  parallel_for(count, workers, [&](std::uint64_t i) {
    const PeriodicArray s = cfg.mode == Mode::exhaustive
                                ? array_from_index(cfg.field, cfg.periods, i)
                                : seq::random_array(cfg.field, cfg.periods, SplitMix64::stream(cfg.seed, i)());
    out[i] = measure(s, cfg.k, cfg.kerror_budget);
  });
  return out;
}

inline void validate(const ExperimentConfig& cfg) {
  if (cfg.periods.size() < 2) throw RangeError("experiments need n >= 2");
  for (auto t : cfg.periods)
    if (t < 1) throw DimensionError("periods must be positive");
  if (cfg.trials < 1) throw RangeError("trials must be at least 1");
  if (!(cfg.epsilon > 0)) throw RangeError("epsilon must be positive");
  if (!(cfg.epsilon1 > 0 && cfg.epsilon1 < 1)) throw RangeError("epsilon1 must lie in (0, 1)");
  if (!(cfg.epsilon2 > 0 && cfg.epsilon2 < 1)) throw RangeError("epsilon2 must lie in (0, 1)");
  std::size_t N = 1;
  for (auto t : cfg.periods) N *= t;
  if (cfg.k > N) throw RangeError("k exceeds the period volume");
}

inline void tally(ProbReport& rep, const std::vector<Sample>& samples) {
  rep.samples = samples.size();
  for (const auto& s : samples) {
    ++rep.distribution[s.Lk];
    rep.slice_sum_violations += !s.slice_ok;
    rep.chain_violations += !s.chain_ok;
  }
}

}  // namespace detail

inline ordered_json config_to_json(const ExperimentConfig& cfg) {
  ordered_json j;
  j["experiment"] = to_string(cfg.experiment);
  j["field"] = seq::field_to_json(cfg.field);
  j["periods"] = cfg.periods;
  j["mode"] = to_string(cfg.mode);
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  j["k"] = cfg.k;
  j["epsilon"] = cfg.epsilon;
  j["epsilon1"] = cfg.epsilon1;
  j["epsilon2"] = cfg.epsilon2;
  j["kerror_budget"] = cfg.kerror_budget;
  return j;
}

/// Inverse of config_to_json. Missing optional keys take the struct defaults.
inline ExperimentConfig config_from_json(const ordered_json& j) {
  if (!j.is_object()) throw FormatError("config: expected an object");
  ExperimentConfig cfg;
  try {
    if (!j.contains("experiment")) throw FormatError("config: missing key 'experiment'");
    const auto kind = j.at("experiment").get<std::string>();
    if (kind == "upper_bound") cfg.experiment = Experiment::upper_bound;
    else if (kind == "lower_bound") cfg.experiment = Experiment::lower_bound;
    else throw FormatError("config.experiment: unknown value '" + kind + "'");
    if (!j.contains("field")) throw FormatError("config: missing key 'field'");
    cfg.field = seq::field_from_json(j.at("field"));
    if (!j.contains("periods")) throw FormatError("config: missing key 'periods'");
    cfg.periods = seq::periods_from_json(j.at("periods"));
    if (j.contains("mode")) {
      const auto m = j.at("mode").get<std::string>();
      if (m == "exhaustive") cfg.mode = Mode::exhaustive;
      else if (m == "montecarlo") cfg.mode = Mode::montecarlo;
      else throw FormatError("config.mode: unknown value '" + m + "'");
    }
    if (j.contains("trials")) cfg.trials = j.at("trials").get<std::uint64_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("k")) cfg.k = j.at("k").get<std::size_t>();
    if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<double>();
    if (j.contains("epsilon1")) cfg.epsilon1 = j.at("epsilon1").get<double>();
    if (j.contains("epsilon2")) cfg.epsilon2 = j.at("epsilon2").get<double>();
    if (j.contains("kerror_budget")) cfg.kerror_budget = j.at("kerror_budget").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("config: ") + e.what());
  }
  return cfg;
}

/// Mean 1-D linear complexity of a uniform T1-periodic sequence: exact over all
/// q^T1 sequences when q^T1 <= 2^16, otherwise the mean of `trials` draws.
inline double estimate_mu(const FieldSpec& field, std::uint32_t T1, std::uint64_t trials, std::uint64_t seed) {
  if (T1 < 1) throw RangeError("T1 must be positive");
  std::uint64_t space = 0;
  try {
    space = detail::space_size(field, T1, kMuExhaustiveLimit);
  } catch (const BudgetExceeded&) {
    space = 0;
  }
  long double total = 0;
  if (space > 0) {
    for (std::uint64_t i = 0; i < space; ++i)
      total += annihilator::berlekamp_massey(detail::array_from_index(field, {T1}, i));
    return static_cast<double>(total / space);
  }
  if (trials < 1) throw RangeError("trials must be at least 1");
  for (std::uint64_t i = 0; i < trials; ++i)
    total += annihilator::berlekamp_massey(seq::random_array(field, {T1}, SplitMix64::stream(seed, i)()));
  return static_cast<double>(total / trials);
}

/// Histogram of L(s) over every array of the given shape.
inline std::map<std::size_t, std::uint64_t> exact_distribution(const FieldSpec& field, const Periods& periods) {
  std::size_t N = 1;
  for (auto t : periods) N *= t;
  const std::uint64_t total = detail::space_size(field, N, kExhaustiveLimit);
  std::map<std::size_t, std::uint64_t> hist;
  for (std::uint64_t i = 0; i < total; ++i)
    ++hist[annihilator::linear_complexity(detail::array_from_index(field, periods, i))];
  return hist;
}

/// Event L_k(s) < (mu + eps) T_2...T_n against 1 - exp(-2 eps^2 T_2...T_n / T_1^2).
/// Monte Carlo runs allow three-sigma slack 3 sqrt(p(1-p)/trials), p the
/// empirical probability; exhaustive runs allow none.
inline ProbReport run_upper_bound_experiment(const ExperimentConfig& cfg, unsigned workers = 1) {
  detail::validate(cfg);
  ProbReport rep;
  rep.config = config_to_json(cfg);
  rep.experiment = Experiment::upper_bound;
  const std::uint32_t T1 = cfg.periods[0];
  std::uint64_t rest = 1;
  for (std::size_t i = 1; i < cfg.periods.size(); ++i) rest *= cfg.periods[i];

  rep.mu_estimate = estimate_mu(cfg.field, T1, cfg.trials, SplitMix64::mix(cfg.seed ^ 0x6D75ULL));
  rep.threshold = (*rep.mu_estimate + cfg.epsilon) * static_cast<double>(rest);
  rep.paper_bound = 1.0 - hoeffding_rhs(rest, cfg.epsilon, 0.0, T1);

  const auto samples = detail::draw_samples(cfg, workers);
  detail::tally(rep, samples);
  std::uint64_t hits = 0;
  for (const auto& s : samples) hits += static_cast<double>(s.Lk) < rep.threshold;
  rep.empirical_probability = static_cast<double>(hits) / static_cast<double>(samples.size());
  const double p = rep.empirical_probability;
  rep.statistical_slack =
      cfg.mode == Mode::exhaustive ? 0.0 : 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples.size()));
  rep.satisfied = rep.empirical_probability >= rep.paper_bound - rep.statistical_slack;
  return rep;
}

/// Event L_k(s) > H, H = floor(sqrt((1 - eps1) T_1...T_n / (n - 1))), which
/// should hold with probability above 1 - eps2.
inline ProbReport run_lower_bound_experiment(const ExperimentConfig& cfg, unsigned workers = 1) {
  detail::validate(cfg);
  ProbReport rep;
  rep.config = config_to_json(cfg);
  rep.experiment = Experiment::lower_bound;
  rep.threshold_H = threshold_H(cfg.periods, cfg.periods.size(), cfg.epsilon1);
  rep.threshold = static_cast<double>(*rep.threshold_H);
  rep.paper_bound = 1.0 - cfg.epsilon2;

  const auto samples = detail::draw_samples(cfg, workers);
  detail::tally(rep, samples);
  std::uint64_t hits = 0;
  for (const auto& s : samples) hits += static_cast<std::int64_t>(s.Lk) > *rep.threshold_H;
  rep.empirical_probability = static_cast<double>(hits) / static_cast<double>(samples.size());
  rep.satisfied = rep.empirical_probability > rep.paper_bound;
  return rep;
}

inline ProbReport run_experiment(const ExperimentConfig& cfg, unsigned workers = 1) {
  return cfg.experiment == Experiment::upper_bound ? run_upper_bound_experiment(cfg, workers)
                                                   : run_lower_bound_experiment(cfg, workers);
}

inline ordered_json to_json(const ProbReport& r) {
  ordered_json j;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["experiment"] = to_string(r.experiment);
  j["config"] = r.config;
  j["samples"] = r.samples;
  j["mu_estimate"] = r.mu_estimate ? ordered_json(*r.mu_estimate) : ordered_json(nullptr);
  j["threshold_H"] = r.threshold_H ? ordered_json(*r.threshold_H) : ordered_json(nullptr);
  j["threshold"] = r.threshold;
  j["empirical_probability"] = r.empirical_probability;
  j["paper_bound"] = r.paper_bound;
  j["statistical_slack"] = r.statistical_slack;
  ordered_json dist = ordered_json::object();
  for (const auto& [L, c] : r.distribution) dist[std::to_string(L)] = c;
  j["distribution"] = std::move(dist);
  j["satisfied"] = r.satisfied;
  j["checks"] = {{"slice_sum_violations", r.slice_sum_violations}, {"chain_violations", r.chain_violations}};
  return j;
}

}  // namespace mdlc::prob

#endif  // MDLC_PROBBOUNDS_HPP
