// Copyright 2026 The bireg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. run_cli() is the whole program; tools/bireg_cli.cpp
// only forwards argv, which lets the tests drive it in-process.
//
// Exit codes: 0 all verified, 1 usage/IO error (also a rejected
// certificate), 2 conjecture violation found, 3 lemma violation.

#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bireg/campaign.hpp"
#include "bireg/certificate.hpp"
#include "bireg/certificate_check.hpp"
#include "bireg/core.hpp"
#include "bireg/inequality.hpp"
#include "bireg/involution.hpp"
#include "bireg/json_io.hpp"
#include "bireg/matching.hpp"
#include "bireg/oracle.hpp"
#include "bireg/random.hpp"
#include "bireg/tensor.hpp"

namespace bireg {

enum ExitCode { kExitOk = 0, kExitUsage = 1, kExitConjecture = 2, kExitLemma = 3 };

// Default worker count for campaigns when --workers is not given.
inline constexpr const char* kWorkersEnv = "BIREG_WORKERS";

namespace cli_detail {

struct Output {
  std::string path;    // empty: stdout
  std::string format;  // "json" or "csv"
  std::ostream* out;

  void emit(const std::string& text) const {
    if (path.empty()) {
      *out << text;
    } else {
      write_text_file(path, text);
    }
  }
  void emit(const json& j) const { emit(canonical(j) + "\n"); }
};

inline std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

// Records as JSON lines plus summary, or CSV over `columns` with the summary
// as trailing "# key=value" comments.
inline std::string render_report(const std::vector<json>& records, const json& summary,
                                 const std::vector<std::string>& columns,
                                 const std::string& format) {
  std::string out;
  if (format == "csv") {
    for (std::size_t i = 0; i < columns.size(); ++i)
      out += (i ? "," : "") + columns[i];
    out += "\n";
    for (const auto& r : records) {
      for (std::size_t i = 0; i < columns.size(); ++i)
        out += (i ? "," : "") + (r.contains(columns[i]) ? csv_cell(r[columns[i]]) : "");
      out += "\n";
    }
    for (const auto& [key, value] : summary.items())
      out += "# " + key + "=" + csv_cell(value) + "\n";
    return out;
  }
  for (const auto& r : records) out += canonical(r) + "\n";
  out += canonical(summary) + "\n";
  return out;
}

// Members of B(n, k): all of them, or `samples` random draws.
inline std::vector<WeightMatrix> verify_population(int n, int k, bool exhaustive,
                                                   int samples, std::uint64_t seed) {
  std::vector<WeightMatrix> out;
  if (exhaustive) {
    EnumerationOptions opts;
    opts.max_count = 2'000'000;
    enumerate_bnk(n, k, [&](const WeightMatrix& m) { out.push_back(m); }, opts);
    return out;
  }
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) out.push_back(random_bnk(n, k, rng));
  return out;
}

// Binary n x k matrices: all 2^(nk) of them, or random draws.
inline std::vector<WeightMatrix> binary_population(int n, int k, bool exhaustive,
                                                   int samples, std::uint64_t seed) {
  std::vector<WeightMatrix> out;
  const int cells = n * k;
  if (exhaustive) {
    if (cells > 20) throw BudgetExceeded("too many binary matrices to enumerate", 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
      WeightMatrix m(n, k);
      for (int i = 0; i < cells; ++i) m.data[i] = (mask >> i) & 1;
      out.push_back(std::move(m));
    }
    return out;
  }
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    WeightMatrix m(n, k);
    for (auto& x : m.data) x = static_cast<std::int64_t>(rng.below(2));
    out.push_back(std::move(m));
  }
  return out;
}

struct VerifyArgs {
  std::string conjecture;
  int n = 0, k = 0;
  bool exhaustive = false;
  int samples = 100;
  std::uint64_t seed = 0;
  int max_t = 9;
};

inline int run_verify(const VerifyArgs& a, const Output& o) {
  std::vector<WeightMatrix> population =
      a.conjecture == "higgins"
          ? binary_population(a.n, a.k, a.exhaustive, a.samples, a.seed)
          : verify_population(a.n, a.k, a.exhaustive, a.samples, a.seed);
  std::vector<json> records;
  std::uint64_t violations = 0, vacuous = 0;
  for (std::size_t i = 0; i < population.size(); ++i) {
    const auto& b = population[i];
    json rec = {{"index", i}, {"matrix", matrix_to_json(b)["data"]}};
    std::string verdict;
    std::optional<json> cert;
    if (a.conjecture == "balls") {
      const auto g = instance_from_matrix(b);
      const auto iota = brute_force_involution(g);
      verdict = iota ? "passed" : "violated";
      if (iota) {
        cert = balls_certificate(g, *iota, "brute-force");
      } else {
        cert = json{{"kind", "balls-counterexample"}, {"instance", instance_to_json(g)}};
      }
    } else if (a.conjecture == "weak-balls") {
      const auto v = verify_weak_balls(b);
      verdict = v.holds ? "passed" : "violated";
      cert = loop_matching_certificate(as_loop_graph(symmetric_product(b)), v.matching);
    } else if (a.conjecture == "higgins") {
      const auto v = verify_higgins(b);
      verdict = v.status == HigginsStatus::kCounterexample ? "violated"
                : v.status == HigginsStatus::kVacuous      ? "vacuous"
                                                           : "passed";
      if (v.status == HigginsStatus::kVacuous) ++vacuous;
      if (v.status == HigginsStatus::kCounterexample)
        cert = loop_matching_certificate(as_loop_graph(symmetric_product(b)),
                                         v.ordinary);
    } else {  // inequality
      const auto rep = exhaustive_check(RationalMatrix(b), a.max_t);
      verdict = rep.violated ? "violated" : "passed";
      if (rep.max_excess) rec["max_excess"] = to_string(*rep.max_excess);
      rec["subsets"] = rep.subsets;
      if (rep.violated)
        cert = inequality_certificate({RationalMatrix(b), rep.worst});
    }
    rec["verdict"] = verdict;
    if (verdict == "violated") {
      ++violations;
      if (cert) rec["certificate"] = *cert;
    }
    records.push_back(std::move(rec));
  }
  const json summary = {{"summary", true},
                        {"conjecture", a.conjecture},
                        {"n", a.n},
                        {"k", a.k},
                        {"exhaustive", a.exhaustive},
                        {"instances", population.size()},
                        {"passed", population.size() - violations - vacuous},
                        {"vacuous", vacuous},
                        {"violations", violations}};
  o.emit(render_report(records, summary, {"index", "verdict"}, o.format));
  return violations ? kExitConjecture : kExitOk;
}

inline std::pair<int, int> parse_shape(const std::string& s) {
  const auto x = s.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(s);
    std::size_t used = 0;
    const int r = std::stoi(s.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(s);
    const int c = std::stoi(s.substr(x + 1), &used);
    if (used != s.size() - x - 1) throw std::invalid_argument(s);
    return {r, c};
  } catch (const std::logic_error&) {
    throw PreconditionError("shape must look like RxC, got '" + s + "'");
  }
}

}  // namespace cli_detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  using namespace cli_detail;
  CLI::App app{"Balls-and-colors involutions, tensor-product matchings and "
               "certificate tooling"};
  app.require_subcommand(1);
  app.fallthrough();  // --format and --out may follow the subcommand
  std::string format = "json", out_path;
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write the result here instead of stdout");

  int n = 0, k = 0, burn_in = 2000;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "random member of A(n,k)");
  gen->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  gen->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed)->required();
  gen->add_option("--burn-in", burn_in)->check(CLI::NonNegativeNumber);

  std::string instance_path;
  std::optional<int> epsilon;
  bool board = false;
  auto* balls = app.add_subcommand("solve-balls", "involution certificate for an instance");
  balls->add_option("instance", instance_path)->required();
  balls->add_option("--epsilon", epsilon, "force k = m n + epsilon");
  balls->add_flag("--board", board, "use the board method when n = k");

  std::string first_path, second_path;
  auto* four = app.add_subcommand("solve-4parts", "bijection certificate for two instances");
  four->add_option("first", first_path)->required();
  four->add_option("second", second_path)->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a conjecture over B(n,k)");
  verify->add_option("--conjecture", va.conjecture)
      ->required()
      ->check(CLI::IsMember({"balls", "weak-balls", "higgins", "inequality"}));
  verify->add_option("--n", va.n)->required()->check(CLI::PositiveNumber);
  verify->add_option("--k", va.k)->required()->check(CLI::PositiveNumber);
  verify->add_flag("--exhaustive", va.exhaustive, "every instance instead of samples");
  verify->add_option("--samples", va.samples)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", va.seed);
  verify->add_option("--max-t", va.max_t)->check(CLI::PositiveNumber);

  std::string matrix_path, cells_path, shape = "6x6";
  bool search = false;
  std::uint64_t trials = 1000;
  double density = 0.3;
  int max_t = 9;
  auto* ineq = app.add_subcommand("inequality", "evaluate or search the cell inequality");
  auto* matrix_opt = ineq->add_option("--matrix", matrix_path);
  auto* cells_opt = ineq->add_option("--cells", cells_path);
  auto* search_opt = ineq->add_flag("--search", search);
  ineq->add_option("--shape", shape);
  ineq->add_option("--trials", trials);
  ineq->add_option("--seed", seed);
  ineq->add_option("--density", density)->check(CLI::Range(0.0, 1.0));
  ineq->add_option("--max-t", max_t)->check(CLI::PositiveNumber);
  matrix_opt->needs(cells_opt)->excludes(search_opt);
  cells_opt->needs(matrix_opt);

  std::string graph_path;
  int max_left = 20;
  auto* hall = app.add_subcommand("h", "exact Hall coefficient of a bipartite graph");
  hall->add_option("--graph", graph_path)->required();
  hall->add_option("--max-left", max_left)->check(CLI::PositiveNumber);

  auto* tensor = app.add_subcommand("tensor", "cell product of a matrix");
  tensor->add_option("--matrix", matrix_path)->required();

  std::string config_path;
  std::optional<int> workers;
  bool timing = false;
  auto* campaign = app.add_subcommand("campaign", "enumeration campaign");
  campaign->add_option("--config", config_path)->required();
  campaign->add_option("--workers", workers)->check(CLI::PositiveNumber);
  campaign->add_flag("--timing", timing, "record per-instance milliseconds");

  std::string cert_path;
  auto* check = app.add_subcommand("check", "validate a certificate file");
  check->add_option("certificate", cert_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ExtrasError& e) {
    err << "unknown flag or argument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const Output o{out_path, format, &out};
  try {
    if (*gen) {
      o.emit(instance_to_json(random_instance(n, k, seed, burn_in)));
      return kExitOk;
    }
    if (*balls) {
      BallsOptions opts;
      opts.epsilon = epsilon;
      opts.board_for_square = board;
      const auto g = instance_from_json(read_json_file(instance_path));
      o.emit(balls_certificate(g, solve_balls(g, opts)));
      return kExitOk;
    }
    if (*four) {
      const auto g1 = instance_from_json(read_json_file(first_path));
      const auto g2 = instance_from_json(read_json_file(second_path));
      o.emit(four_parts_certificate(g1, g2, solve_4parts(g1, g2)));
      return kExitOk;
    }
    if (*verify) return run_verify(va, o);
    if (*ineq) {
      if (search) {
        const auto [rows, cols] = parse_shape(shape);
        const auto rep =
            random_counterexample_search(rows, cols, density, trials, seed, max_t);
        json report = {{"shape", shape},
                       {"density", density},
                       {"trials", rep.trials},
                       {"seed", rep.seed},
                       {"evaluated", rep.evaluated},
                       {"violations", rep.violations}};
        if (rep.min_slack) report["min_slack"] = to_string(*rep.min_slack);
        if (rep.witness) {
          const auto sides = inequality_sides(*rep.witness);
          report["witness"] = sides.holds() ? inequality_report_json(*rep.witness, sides)
                                            : inequality_certificate(*rep.witness);
        }
        o.emit(report);
        return rep.violations ? kExitConjecture : kExitOk;
      }
      if (matrix_path.empty())
        throw PreconditionError("inequality needs --matrix and --cells, or --search");
      InequalityInstance inst{rational_matrix_from_json(read_json_file(matrix_path)),
                              cells_from_json(read_json_file(cells_path))};
      const auto sides = inequality_sides(inst);
      o.emit(sides.holds() ? inequality_report_json(inst, sides)
                           : inequality_certificate(inst));
      return sides.holds() ? kExitOk : kExitConjecture;
    }
    if (*hall) {
      const auto g = matrix_from_json(read_json_file(graph_path));
      const auto h = hall_coefficient(g, max_left);
      o.emit(json{{"h", to_string(h.value)}, {"witness", h.witness}});
      return kExitOk;
    }
    if (*tensor) {
      o.emit(product_to_json(symmetric_product(matrix_from_json(read_json_file(matrix_path)))));
      return kExitOk;
    }
    if (*campaign) {
      auto config = campaign_config_from_json(read_json_file(config_path));
      if (workers) {
        config.workers = *workers;
      } else if (const char* env = std::getenv(kWorkersEnv)) {
        try {
          config.workers = std::max(1, std::stoi(env));
        } catch (const std::logic_error&) {
          throw PreconditionError(std::string(kWorkersEnv) + " is not an integer");
        }
      }
      config.timing = config.timing || timing;
      const auto report = conjecture_campaign(config);
      if (format == "json") {
        o.emit(report.jsonl());
      } else {
        o.emit(render_report(report.records, report.summary.to_json(),
                             {"index", "n", "k", "weak_balls", "higgins", "h",
                              "brute_force", "solve_balls", "agree",
                              "certificates_ok", "ms"},
                             "csv"));
      }
      return report.summary.exit_code();
    }
    if (*check) {
      const auto result = certificate_check(read_json_file(cert_path));
      if (!result) {
        err << "certificate rejected: " << result.reason << "\n";
        return kExitUsage;
      }
      out << "certificate ok\n";
      return kExitOk;
    }
  } catch (const LemmaViolation& e) {
    err << "lemma violation: " << e.what() << "\n";
    json artifact = {{"kind", "lemma-violation"}, {"what", e.what()},
                     {"artifact", e.artifact()}};
    try {
      o.emit(artifact);
    } catch (const Error&) {
      err << canonical(artifact) << "\n";
    }
    return kExitLemma;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (progress " << e.progress() << ")\n";
    return kExitUsage;
  } catch (const UncoveredParameters& e) {
    err << "uncovered parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "io error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bireg
