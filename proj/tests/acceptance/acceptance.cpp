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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion; exit status
// is non-zero when any selected criterion fails. `--only AC7` runs a single one.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mdlc/mdlc.hpp"
#include "oracles.hpp"

namespace {

namespace fs = std::filesystem;
using mdlc::FieldSpec;
using mdlc::SplitMix64;
using mdlc::monomial::MonomialOrder;
using mdlc::seq::PeriodicArray;
using mdlc::seq::Periods;
namespace ann = mdlc::annihilator;

constexpr double kAc1Seconds = 60;
constexpr double kAc4Seconds = 120;
constexpr double kAc6Seconds = 10;
constexpr double kAc10Seconds = 600;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << s << "s";
  return os.str();
}

std::uint32_t draw(SplitMix64& rng, std::uint32_t lo, std::uint32_t hi) {
  return lo + static_cast<std::uint32_t>(rng.uniform_below(hi - lo + 1));
}

// Random shapes with n in {2,3} and volume <= 64, fields F_2 and F_3.
std::vector<PeriodicArray> structure_corpus() {
  SplitMix64 rng(0xA11CE);
  std::vector<PeriodicArray> out;
  while (out.size() < 1000) {
    const std::size_t n = 2 + rng.uniform_below(2);
    Periods T(n);
    std::uint64_t vol = 1;
    for (auto& t : T) {
      t = draw(rng, 1, 8);
      vol *= t;
    }
    if (vol > 64) continue;
    const auto f = mdlc::gf::make_field(rng.uniform_below(2) ? 3 : 2, 1);
    out.push_back(mdlc::seq::random_array(f, T, rng()));
  }
  return out;
}

std::vector<PeriodicArray> fold_corpus() {
  const std::vector<Periods> shapes{{2, 3}, {3, 5}, {2, 3, 5}, {4, 3}, {5, 7}};
  const std::vector<std::uint64_t> primes{2, 3, 5};
  SplitMix64 rng(0xF01D);
  std::vector<PeriodicArray> out;
  for (std::size_t i = 0; i < 500; ++i) {
    const auto f = mdlc::gf::make_field(primes[i % primes.size()], 1);
    out.push_back(mdlc::seq::random_array(f, shapes[(i / primes.size()) % shapes.size()], rng()));
  }
  return out;
}

// AC1 ----------------------------------------------------------------------

Outcome ac1() {
  Stopwatch sw;
  const auto F2 = mdlc::gf::make_field(2, 1);
  std::size_t checked = 0, mismatches = 0;
  for (std::uint32_t T = 1; T <= 8; ++T)
    oracle::for_each_array(F2, {T}, [&](const PeriodicArray& s) {
      ++checked;
      mismatches += ann::compute(s).complexity != ann::berlekamp_massey(s);
    });
  SplitMix64 rng(0xB3);
  const std::vector<std::uint64_t> primes{2, 3, 5};
  for (int i = 0; i < 1000; ++i) {
    const auto f = mdlc::gf::make_field(primes[rng.uniform_below(3)], 1);
    const auto s = mdlc::seq::random_array(f, {draw(rng, 1, 32)}, rng());
    ++checked;
    mismatches += ann::compute(s).complexity != ann::berlekamp_massey(s);
  }
  const double t = sw.seconds();
  return {mismatches == 0 && t < kAc1Seconds, std::to_string(checked) + " sequences, " + std::to_string(mismatches) +
                                                  " mismatches, " + fmt_seconds(t) + " (limit 60s)"};
}

// AC2 ----------------------------------------------------------------------

Outcome ac2() {
  std::size_t failures = 0;
  std::string first;
  for (const auto& s : structure_corpus()) {
    const auto r = ann::compute(s);
    std::string why;
    const auto rep = ann::verify(s, r);
    if (!rep) why = rep.problems.front();
    else if (r.complexity != r.delta.size() || r.complexity > s.volume()) why = "L differs from |delta| or exceeds N";
    else if (!r.delta.is_downward_closed()) why = "delta not downward closed";
    else if (!(ann::regenerate(ann::initial_terms(s, r), r, s.periods()) == s)) why = "regeneration differs";
    if (!why.empty()) {
      if (first.empty()) first = "; first: " + mdlc::seq::serialize(s) + " " + why;
      ++failures;
    }
  }
  return {failures == 0, "1000 arrays, " + std::to_string(failures) + " failures" + first};
}

// AC3 ----------------------------------------------------------------------

Outcome ac3() {
  SplitMix64 rng(0x0D3);
  std::size_t differ = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng.uniform_below(2);
    Periods T(n);
    for (auto& t : T) t = draw(rng, 1, n == 2 ? 6 : 4);
    const auto f = mdlc::gf::make_field(rng.uniform_below(2) ? 3 : 2, 1 + rng.uniform_below(2));
    const auto s = mdlc::seq::random_array(f, T, rng());
    differ += ann::compute(s, MonomialOrder::grlex).delta.size() != ann::compute(s, MonomialOrder::lex).delta.size();
  }
  return {differ == 0, "200 arrays, " + std::to_string(differ) + " with |delta| depending on the order"};
}

// AC4 ----------------------------------------------------------------------

Outcome ac4() {
  Stopwatch sw;
  std::size_t ideals = 0, above = 0, wrong_equality = 0;
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t K = 1; K <= 8; ++K) {
      const std::size_t bound = (n - 1) * K + 1;
      const bool expect_equality = K == 1 || n == 1;
      for (const auto& st : mdlc::census::enumerate_staircases(n, K)) {
        ++ideals;
        const std::size_t g = mdlc::monomial::minimal_generators(st).size();
        above += g > bound;
        wrong_equality += (g == bound) != expect_equality;
      }
    }
  const double t = sw.seconds();
  return {above == 0 && wrong_equality == 0 && t < kAc4Seconds,
          std::to_string(ideals) + " ideals, " + std::to_string(above) + " above (n-1)K+1, " +
              std::to_string(wrong_equality) + " equality exceptions, " + fmt_seconds(t) + " (limit 120s)"};
}

// AC5 ----------------------------------------------------------------------

Outcome ac5() {
  const std::vector<std::uint64_t> expect2{1, 2, 3, 5, 7, 11, 15, 22};
  const std::vector<std::uint64_t> expect3{1, 3, 6, 13, 24, 48, 86, 160};
  const auto p = oracle::partition_numbers(8);
  const auto pp = oracle::plane_partition_numbers(8);
  std::vector<std::string> problems;
  for (std::size_t n = 2; n <= 3; ++n) {
    const auto recs = mdlc::census::run_census(n, 8);
    for (const auto& r : recs) {
      const std::uint64_t brute = oracle::brute_force_downsets(n, r.K).size();
      const std::uint64_t gen = n == 2 ? p[r.K] : pp[r.K];
      const std::uint64_t listed = n == 2 ? expect2[r.K - 1] : expect3[r.K - 1];
      if (r.count != brute || r.count != gen || r.count != listed)
        problems.push_back("n=" + std::to_string(n) + " K=" + std::to_string(r.K) + " count " + std::to_string(r.count));
      if (mdlc::census::BigInt(r.count) > r.lemma1_bound)
        problems.push_back("n=" + std::to_string(n) + " K=" + std::to_string(r.K) + " above bound");
    }
  }
  for (std::size_t n = 1; n <= 4; ++n)
    if (mdlc::census::enumerate_staircases(n, 1).size() != 1) problems.push_back("|M_" + std::to_string(n) + "(1)| != 1");
  return {problems.empty(), problems.empty() ? "counts n=2: 1,2,3,5,7,11,15,22; n=3: 1,3,6,13,24,48,86,160; all within bound"
                                             : problems.front()};
}

// AC6 ----------------------------------------------------------------------

bool chain_ok(const std::vector<mdlc::kerror::KErrorResult>& prof, const PeriodicArray& s) {
  if (prof.empty() || prof.front().value != ann::linear_complexity(s)) return false;
  for (std::size_t k = 1; k < prof.size(); ++k)
    if (prof[k].value > prof[k - 1].value) return false;
  return prof.size() != s.volume() + 1 || prof.back().value == 0;
}

Outcome ac6() {
  Stopwatch sw;
  const auto F2 = mdlc::gf::make_field(2, 1);
  std::size_t mismatches = 0, chain_failures = 0, profiles = 0;
  oracle::for_each_array(F2, {2, 2}, [&](const PeriodicArray& s) {
    const auto prof = mdlc::kerror::k_error_profile(s, 4);
    ++profiles;
    chain_failures += !chain_ok(prof, s);
    for (std::size_t k = 0; k <= 4; ++k) {
      const auto r = mdlc::kerror::k_error_complexity(s, k, mdlc::kerror::Mode::exact);
      mismatches += r.value != oracle::brute_force_kerror(s, k) || r.value != prof[k].value ||
                    mdlc::seq::hamming_distance(s, r.witness) > k ||
                    ann::linear_complexity(r.witness) != r.value;
    }
  });
  const auto imp = PeriodicArray::from_ints(F2, {2, 2}, {1, 0, 0, 0});
  const auto ip = mdlc::kerror::k_error_profile(imp, 4);
  ++profiles;
  chain_failures += !chain_ok(ip, imp);
  std::string values;
  for (const auto& r : ip) values += (values.empty() ? "" : ",") + std::to_string(r.value);
  const double t = sw.seconds();
  return {mismatches == 0 && chain_failures == 0 && values == "4,0,0,0,0" && t < kAc6Seconds,
          "80 (array,k) pairs, " + std::to_string(mismatches) + " mismatches; impulse profile (" + values + "); " +
              std::to_string(chain_failures) + "/" + std::to_string(profiles) + " chain failures; " + fmt_seconds(t) +
              " (limit 10s)"};
}

// AC7 ----------------------------------------------------------------------

Outcome ac7() {
  std::size_t violations = 0;
  for (const auto& s : fold_corpus()) {
    const auto t = mdlc::seq::crt_fold(s);
    violations += ann::linear_complexity(s) > ann::linear_complexity(t);
  }
  return {violations == 0, "500 arrays, " + std::to_string(violations) + " with L(s) > L(fold(s))"};
}

// AC8 ----------------------------------------------------------------------

Outcome ac8() {
  std::size_t total = 0, violations = 0;
  std::string first;
  auto check = [&](const PeriodicArray& s) {
    ++total;
    const std::size_t L = ann::linear_complexity(s);
    const std::size_t sum = ann::slice_complexities(s).sum();
    if (L > sum) {
      if (first.empty())
        first = "; first: " + mdlc::seq::serialize(s) + " L=" + std::to_string(L) + " > " + std::to_string(sum);
      ++violations;
    }
  };
  for (const auto& s : structure_corpus()) check(s);
  for (const auto& s : fold_corpus()) check(s);
  return {violations == 0, std::to_string(total) + " arrays, " + std::to_string(violations) +
                               " with L(s) > sum of slice complexities" + first};
}

// AC9 ----------------------------------------------------------------------

Outcome ac9() {
  const auto F2 = mdlc::gf::make_field(2, 1);
  const auto H = mdlc::prob::threshold_H({2, 2}, 2, 0.75);
  const auto dist = mdlc::prob::exact_distribution(F2, {2, 2});
  std::uint64_t total = 0, above = 0;
  for (const auto& [L, c] : dist) {
    total += c;
    if (static_cast<std::int64_t>(L) > H) above += c;
  }
  const double prob = static_cast<double>(above) / static_cast<double>(total);
  return {H == 1 && above == 14 && total == 16 && prob == 0.875,
          "H=" + std::to_string(H) + ", P(L > H) = " + std::to_string(above) + "/" + std::to_string(total)};
}

// AC10 ---------------------------------------------------------------------

Outcome ac10() {
  Stopwatch sw;
  mdlc::prob::ExperimentConfig cfg;
  cfg.experiment = mdlc::prob::Experiment::upper_bound;
  cfg.field = mdlc::gf::make_field(2, 1);
  cfg.periods = {8, 8};
  cfg.k = 0;
  cfg.epsilon = 0.5;
  cfg.trials = 10000;
  cfg.seed = 20261016;
  cfg.mode = mdlc::prob::Mode::montecarlo;
  const unsigned many = std::max(2u, std::thread::hardware_concurrency());
  const auto rep = mdlc::prob::run_upper_bound_experiment(cfg, 1);
  const auto one = mdlc::prob::to_json(rep).dump(2);
  const auto again = mdlc::prob::to_json(mdlc::prob::run_upper_bound_experiment(cfg, 1)).dump(2);
  const auto parallel = mdlc::prob::to_json(mdlc::prob::run_upper_bound_experiment(cfg, many)).dump(2);
  const double expected_bound = 1.0 - std::exp(-2.0 * 0.25 * 8.0 / 64.0);
  const bool bound_ok = std::abs(rep.paper_bound - expected_bound) < 1e-12;
  const bool identical = one == again && one == parallel;
  const double t = sw.seconds();
  std::ostringstream os;
  os << "empirical " << rep.empirical_probability << " >= " << rep.paper_bound << " - " << rep.statistical_slack
     << "; mu " << *rep.mu_estimate << "; reports " << (identical ? "identical" : "DIFFER") << " (1,1," << many
     << " workers); " << fmt_seconds(t) << " for three runs (limit 600s)";
  return {rep.satisfied && bound_ok && identical && rep.chain_violations == 0 && t < kAc10Seconds, os.str()};
}

// AC11 ---------------------------------------------------------------------

// `args` carries its own stdout redirection.
int run_cli(const std::string& args) {
  const std::string cmd = std::string(MDLC_CLI_PATH) + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome ac11() {
  const auto dir = fs::temp_directory_path() / "mdlc_acceptance";
  fs::create_directories(dir);
  const std::string samples = MDLC_SAMPLES_DIR;
  auto p = [&](const std::string& name) { return (dir / name).string(); };
  const std::vector<std::pair<std::string, std::function<std::string(const std::string&)>>> commands{
      {"random", [&](const std::string& out) { return "random --p 3 --e 2 --periods 5,4 --seed 99 --out " + out + " >/dev/null"; }},
      {"kerror-sampled",
       [&](const std::string& out) {
         return "kerror " + p("random_a") + " --k 3 --mode sampled --budget 2000 --seed 5 --json > " + out;
       }},
      {"experiment-upper",
       [&](const std::string& out) {
         return "experiment --config " + samples + "/upper_bound_8x8.json --workers 2 --report " + out + " >/dev/null";
       }},
      {"experiment-lower",
       [&](const std::string& out) {
         return "experiment --config " + samples + "/lower_bound_2x2.json --report " + out + " >/dev/null";
       }},
  };
  // kerror reads the array written by the first command.
  if (run_cli(commands[0].second(p("random_a"))) != 0) return {false, "random failed"};
  std::vector<std::string> problems;
  for (const auto& [name, make] : commands) {
    const std::string a = p(name + "_1"), b = p(name + "_2");
    const int ca = run_cli(make(a));
    const int cb = run_cli(make(b));
    if (ca != 0 || cb != 0) problems.push_back(name + " exited non-zero");
    else if (slurp(a).empty() || slurp(a) != slurp(b)) problems.push_back(name + " output differs");
  }
  fs::remove_all(dir);
  return {problems.empty(), problems.empty() ? "random, kerror --mode sampled, experiment (upper, lower): "
                                               "byte-identical on rerun"
                                             : problems.front()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::pair<std::string, Outcome (*)()>>> criteria{
      {"AC1", {"1-D equivalence with Berlekamp-Massey", ac1}},
      {"AC2", {"structure of Delta and the reduced basis", ac2}},
      {"AC3", {"complexity independent of the monomial order", ac3}},
      {"AC4", {"generator-count bound and its equality cases", ac4}},
      {"AC5", {"ideal counts against the explicit bound and partition oracles", ac5}},
      {"AC6", {"k-error complexity against whole-space brute force", ac6}},
      {"AC7", {"complexity does not exceed that of the folded sequence", ac7}},
      {"AC8", {"complexity bounded by the sum of slice complexities", ac8}},
      {"AC9", {"lower-bound event, exhaustive 2x2 instance", ac9}},
      {"AC10", {"upper-bound event, Monte Carlo 8x8", ac10}},
      {"AC11", {"randomized commands are reproducible", ac11}},
  };
  std::set<std::string> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only.insert(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only ACn]...\n";
      return 2;
    }
  }
  int failed = 0, ran = 0;
  for (const auto& [id, entry] : criteria) {
    if (!only.empty() && !only.count(id)) continue;
    ++ran;
    Outcome o;
    try {
      o = entry.second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << id << " " << entry.first << ": " << o.detail << std::endl;
  }
  if (ran == 0) {
    std::cerr << "no criterion selected\n";
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
