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

// Command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 data/format error, 3 budget exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mdlc/mdlc.hpp"

namespace {

using mdlc::seq::PeriodicArray;
using nlohmann::ordered_json;

enum Exit : int { kOk = 0, kUsage = 1, kData = 2, kBudget = 3 };

ordered_json header(const std::string& command) {
  ordered_json j;
  j["tool"] = mdlc::kToolName;
  j["version"] = mdlc::kVersion;
  j["command"] = command;
  return j;
}

std::string header_line(const std::string& command) {
  return std::string(mdlc::kToolName) + " " + mdlc::kVersion + " " + command + "\n";
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw mdlc::FormatError("cannot write " + path);
  out << text;
}

std::string join_delta(const mdlc::monomial::Staircase& delta, mdlc::monomial::MonomialOrder order) {
  std::string out;
  for (const auto& d : delta.sorted(order)) out += (out.empty() ? "" : " ") + d.to_string();
  return out.empty() ? "(empty)" : out;
}

// --- complexity ---

struct ComplexityArgs {
  std::string input;
  std::string order = "grlex";
  bool json = false;
};

int run_complexity(const ComplexityArgs& a) {
  const auto order = mdlc::monomial::parse_order(a.order);
  const PeriodicArray s = mdlc::seq::read_array(a.input);
  const auto r = mdlc::annihilator::compute(s, order);
  if (a.json) {
    auto j = header("complexity");
    j["input"] = a.input;
    j["order"] = a.order;
    j["periods"] = s.periods();
    j["complexity"] = r.complexity;
    ordered_json delta = ordered_json::array();
    for (const auto& d : r.delta.sorted(order)) delta.push_back(d.values());
    j["delta"] = std::move(delta);
    ordered_json basis = ordered_json::array();
    for (const auto& g : r.basis) basis.push_back(g.to_string(s.field(), order));
    j["basis"] = std::move(basis);
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::ostringstream os;
  os << header_line("complexity") << "input: " << a.input << "\norder: " << a.order << "\nL(s) = " << r.complexity
     << "\ndelta: " << join_delta(r.delta, order) << "\nbasis:\n";
  for (const auto& g : r.basis) os << "  " << g.to_string(s.field(), order) << "\n";
  std::cout << os.str();
  return kOk;
}

// --- kerror ---

struct KErrorArgs {
  std::string input;
  std::size_t k = 0;
  std::string mode = "exact";
  std::uint64_t budget = mdlc::kerror::kDefaultBudget;
  std::uint64_t seed = 0;
  bool json = false;
};

int run_kerror(const KErrorArgs& a) {
  const auto mode = mdlc::kerror::parse_mode(a.mode);
  const PeriodicArray s = mdlc::seq::read_array(a.input);
  const auto r = mdlc::kerror::k_error_complexity(s, a.k, mode, a.budget, a.seed);
  if (a.json) {
    auto j = header("kerror");
    j["input"] = a.input;
    j["k"] = a.k;
    j["mode"] = a.mode;
    j["budget"] = a.budget;
    j["seed"] = a.seed;
    j["value"] = r.value;
    j["upper_bound_only"] = mode == mdlc::kerror::Mode::sampled;
    j["candidates_examined"] = r.candidates_examined;
    j["witness_distance"] = mdlc::seq::hamming_distance(s, r.witness);
    j["witness"] = mdlc::seq::to_json(r.witness);
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::ostringstream os;
  os << header_line("kerror") << "input: " << a.input << "\nk: " << a.k << "\nmode: " << a.mode
     << "\nbudget: " << a.budget << "\nseed: " << a.seed << "\n"
     << (mode == mdlc::kerror::Mode::sampled ? "L_k(s) <= " : "L_k(s) = ") << r.value
     << "\ncandidates examined: " << r.candidates_examined
     << "\nwitness distance: " << mdlc::seq::hamming_distance(s, r.witness)
     << "\nwitness: " << mdlc::seq::serialize(r.witness) << "\n";
  std::cout << os.str();
  return kOk;
}

// --- fold ---

struct FoldArgs {
  std::string input;
  std::string out;
  bool json = false;
};

int run_fold(const FoldArgs& a) {
  const PeriodicArray s = mdlc::seq::read_array(a.input);
  const PeriodicArray t = mdlc::seq::crt_fold(s);
  const std::size_t Ls = mdlc::annihilator::linear_complexity(s);
  const std::size_t Lt = mdlc::annihilator::berlekamp_massey(t);
  if (!a.out.empty()) mdlc::seq::write_array(t, a.out);
  if (a.json) {
    auto j = header("fold");
    j["input"] = a.input;
    j["L_s"] = Ls;
    j["L_t"] = Lt;
    j["bound_holds"] = Ls <= Lt;
    j["folded"] = mdlc::seq::to_json(t);
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::ostringstream os;
  os << header_line("fold") << "input: " << a.input << "\nL(s) = " << Ls << "\nL(t) = " << Lt
     << "\nL(s) <= L(t): " << (Ls <= Lt ? "yes" : "NO") << "\nfolded: " << mdlc::seq::serialize(t) << "\n";
  std::cout << os.str();
  return kOk;
}

// --- census ---

struct CensusArgs {
  std::size_t n = 2;
  std::size_t kmax = 5;
  std::string csv;
};

int run_census(const CensusArgs& a) {
  const auto records = mdlc::census::run_census(a.n, a.kmax);
  std::ostringstream os;
  mdlc::census::write_csv(os, records);
  write_text(a.csv, os.str());
  return kOk;
}

// --- random ---

struct RandomArgs {
  std::uint64_t p = 2;
  unsigned e = 1;
  std::vector<std::uint64_t> modulus;
  std::vector<std::uint32_t> periods;
  std::uint64_t seed = 0;
  std::string out;
};

int run_random(const RandomArgs& a) {
  std::optional<std::vector<std::uint64_t>> modulus;
  if (!a.modulus.empty()) modulus = a.modulus;
  mdlc::gf::FieldSpec f;
  try {
    f = mdlc::gf::make_field(a.p, a.e, modulus);
  } catch (const mdlc::FieldError& err) {
    throw mdlc::RangeError(err.what());
  }
  const auto s = mdlc::seq::random_array(f, a.periods, a.seed);
  if (a.out.empty() || a.out == "-") {
    std::cout << mdlc::seq::serialize(s) << "\n";
    return kOk;
  }
  mdlc::seq::write_array(s, a.out);
  std::string shape;
  for (auto t : a.periods) shape += (shape.empty() ? "" : ",") + std::to_string(t);
  std::cout << header_line("random") << "wrote " << a.out << " p=" << a.p << " e=" << a.e << " periods=" << shape
            << " seed=" << a.seed << "\n";
  return kOk;
}

// --- experiment ---

struct ExperimentArgs {
  std::string config;
  std::string report;
  unsigned workers = 1;
  bool text = false;
};

int run_experiment(const ExperimentArgs& a) {
  std::ifstream in(a.config, std::ios::binary);
  if (!in) throw mdlc::FormatError("cannot open " + a.config);
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw mdlc::FormatError(std::string("malformed config: ") + e.what());
  }
  const auto cfg = mdlc::prob::config_from_json(doc);
  auto rep = mdlc::prob::run_experiment(cfg, a.workers);
  rep.config = doc;
  if (!a.text) {
    write_text(a.report, mdlc::prob::to_json(rep).dump(2) + "\n");
    return kOk;
  }
  std::ostringstream os;
  os << header_line("experiment") << "experiment: " << mdlc::prob::to_string(rep.experiment)
     << "\nconfig: " << doc.dump() << "\nsamples: " << rep.samples;
  if (rep.mu_estimate) os << "\nmu estimate: " << *rep.mu_estimate;
  if (rep.threshold_H) os << "\nthreshold H: " << *rep.threshold_H;
  os << "\nthreshold: " << rep.threshold << "\nempirical probability: " << rep.empirical_probability
     << "\nbound: " << rep.paper_bound << "\nslack: " << rep.statistical_slack
     << "\nsatisfied: " << (rep.satisfied ? "yes" : "no") << "\ndistribution:";
  for (const auto& [L, c] : rep.distribution) os << " " << L << ":" << c;
  os << "\nslice-sum violations: " << rep.slice_sum_violations << "\nchain violations: " << rep.chain_violations
     << "\n";
  write_text(a.report, os.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear complexity of multidimensional periodic sequences over finite fields"};
  app.set_version_flag("--version", std::string(mdlc::kVersion));
  app.require_subcommand(1);

  ComplexityArgs ca;
  auto* complexity = app.add_subcommand("complexity", "Groebner basis, Delta set and linear complexity of an array");
  complexity->add_option("input", ca.input, "array file")->required();
  complexity->add_option("--order", ca.order, "monomial order")->check(CLI::IsMember({"grlex", "lex"}));
  auto* c_json = complexity->add_flag("--json", ca.json, "machine-readable output");
  complexity->add_flag("--text", "human-readable output (default)")->excludes(c_json);

  KErrorArgs ka;
  auto* kerr = app.add_subcommand("kerror", "k-error linear complexity");
  kerr->add_option("input", ka.input, "array file")->required();
  kerr->add_option("--k", ka.k, "number of errors per period")->required();
  kerr->add_option("--mode", ka.mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
  kerr->add_option("--budget", ka.budget, "ball-size limit (exact) or number of draws (sampled)");
  kerr->add_option("--seed", ka.seed, "seed for sampled mode");
  auto* k_json = kerr->add_flag("--json", ka.json, "machine-readable output");
  kerr->add_flag("--text", "human-readable output (default)")->excludes(k_json);

  FoldArgs fa;
  auto* fold = app.add_subcommand("fold", "fold an array with pairwise coprime periods to one dimension");
  fold->add_option("input", fa.input, "array file")->required();
  fold->add_option("--out", fa.out, "write the folded array here");
  auto* f_json = fold->add_flag("--json", fa.json, "machine-readable output");
  fold->add_flag("--text", "human-readable output (default)")->excludes(f_json);

  CensusArgs cea;
  auto* census = app.add_subcommand("census", "count monomial ideals of colength 1..kmax");
  census->add_option("--n", cea.n, "number of variables")->required()->check(CLI::PositiveNumber);
  census->add_option("--kmax", cea.kmax, "largest colength")->required()->check(CLI::PositiveNumber);
  census->add_option("--csv", cea.csv, "output CSV path (stdout if omitted)");

  RandomArgs ra;
  auto* random = app.add_subcommand("random", "draw a uniform random array");
  random->add_option("--p", ra.p, "characteristic")->required();
  random->add_option("--e", ra.e, "extension degree");
  random->add_option("--modulus", ra.modulus, "ascending modulus coefficients")->delimiter(',');
  random->add_option("--periods", ra.periods, "periods, comma separated")->required()->delimiter(',');
  random->add_option("--seed", ra.seed, "generator seed (default 0)");
  random->add_option("--out", ra.out, "output array file (stdout if omitted)");

  ExperimentArgs ea;
  auto* experiment = app.add_subcommand("experiment", "run a probabilistic-bound experiment");
  experiment->add_option("--config", ea.config, "experiment config (JSON)")->required();
  experiment->add_option("--report", ea.report, "report path (stdout if omitted)");
  experiment->add_option("--workers", ea.workers, "worker threads; output does not depend on it")
      ->check(CLI::PositiveNumber);
  experiment->add_flag("--text", ea.text, "human-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*complexity) return run_complexity(ca);
    if (*kerr) return run_kerror(ka);
    if (*fold) return run_fold(fa);
    if (*census) return run_census(cea);
    if (*random) return run_random(ra);
    if (*experiment) return run_experiment(ea);
  } catch (const mdlc::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const mdlc::RangeError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const mdlc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  }
  return kUsage;
}
