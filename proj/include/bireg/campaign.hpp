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

// Enumeration campaign over B(n, k): every member is run through the
// conjecture verifiers, the brute-force involution search and the
// constructive solver, with cross-agreement and certificate re-checks.
// The report is JSON lines: one record per matrix, then a summary.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bireg/certificate.hpp"
#include "bireg/certificate_check.hpp"
#include "bireg/core.hpp"
#include "bireg/involution.hpp"
#include "bireg/json_io.hpp"
#include "bireg/oracle.hpp"
#include "bireg/random.hpp"

namespace bireg {

struct CampaignConfig {
  std::vector<std::pair<int, int>> ranges;
  std::uint64_t seed = 0;
  std::uint64_t max_instances_per_range = 1'000'000;
  BruteForceOptions brute_force;
  int hall_max_left = 20;
  int workers = 1;
  bool timing = false;  // adds "ms" to records; off keeps reports reproducible
};

// {"ranges":[[n,k],...],"seed":S,"max_instances_per_range":N,
//  "brute_force":{"max_edges":E,"node_budget":B},"hall_max_left":H,
//  "workers":W,"timing":false}; everything but "ranges" is optional.
inline CampaignConfig campaign_config_from_json(const json& j) {
  CampaignConfig c;
  if (!j.is_object() || !j.contains("ranges") || !j["ranges"].is_array())
    throw PreconditionError("campaign config needs a \"ranges\" array");
  for (const auto& r : j["ranges"]) {
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() ||
        !r[1].is_number_integer())
      throw PreconditionError("ranges must be [n, k] integer pairs");
    const int n = r[0].get<int>(), k = r[1].get<int>();
    if (n < 1 || k < 1) throw PreconditionError("ranges need n, k >= 1");
    c.ranges.emplace_back(n, k);
  }
  try {
    c.seed = j.value("seed", c.seed);
    c.max_instances_per_range =
        j.value("max_instances_per_range", c.max_instances_per_range);
    c.hall_max_left = j.value("hall_max_left", c.hall_max_left);
    c.workers = j.value("workers", c.workers);
    c.timing = j.value("timing", c.timing);
    if (j.contains("brute_force")) {
      const auto& b = j["brute_force"];
      c.brute_force.max_edges = b.value("max_edges", c.brute_force.max_edges);
      c.brute_force.node_budget = b.value("node_budget", c.brute_force.node_budget);
    }
  } catch (const json::exception&) {
    throw PreconditionError("malformed campaign config field");
  }
  if (c.workers < 1) throw PreconditionError("workers must be >= 1");
  return c;
}

struct CampaignSummary {
  std::uint64_t instances = 0;
  std::uint64_t weak_balls_counterexamples = 0;
  std::uint64_t higgins_counterexamples = 0;
  std::uint64_t balls_counterexamples = 0;  // brute force proved none exists
  std::uint64_t hall_not_one = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t lemma_violations = 0;
  std::uint64_t certificate_failures = 0;
  std::uint64_t budget_flags = 0;
  std::uint64_t uncovered = 0;

  std::uint64_t conjecture_violations() const {
    return weak_balls_counterexamples + higgins_counterexamples +
           balls_counterexamples;
  }
  // Proven statements that failed, or tools contradicting each other.
  std::uint64_t implementation_failures() const {
    return hall_not_one + disagreements + lemma_violations + certificate_failures;
  }
  // 0 all verified, 2 conjecture violation, 3 lemma violation.
  int exit_code() const {
    if (implementation_failures() > 0) return 3;
    if (conjecture_violations() > 0) return 2;
    return 0;
  }

  json to_json() const {
    return {{"summary", true},
            {"instances", instances},
            {"weak_balls_counterexamples", weak_balls_counterexamples},
            {"higgins_counterexamples", higgins_counterexamples},
            {"balls_counterexamples", balls_counterexamples},
            {"hall_not_one", hall_not_one},
            {"disagreements", disagreements},
            {"lemma_violations", lemma_violations},
            {"certificate_failures", certificate_failures},
            {"budget_flags", budget_flags},
            {"uncovered", uncovered},
            {"exit_code", exit_code()}};
  }
};

struct CampaignReport {
  std::vector<json> records;
  CampaignSummary summary;

  std::string jsonl() const {
    std::string out;
    for (const auto& r : records) out += canonical(r) + "\n";
    out += canonical(summary.to_json()) + "\n";
    return out;
  }
};

namespace detail {

struct Tally {
  bool weak_counter = false, higgins_counter = false, balls_counter = false;
  bool hall_not_one = false, disagree = false, lemma = false, cert_fail = false;
  bool budget = false, uncovered = false;
};

inline std::uint64_t item_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step so neighbouring indices get unrelated streams
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::pair<json, Tally> campaign_item(const WeightMatrix& b, std::uint64_t index,
                                            const CampaignConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  json rec = {{"index", index}, {"n", b.rows}, {"k", b.cols},
              {"matrix", matrix_to_json(b)["data"]}};
  json counterexamples = json::array();
  Tally t;
  bool certs_ok = true;
  auto recheck = [&](const json& cert) {
    if (!certificate_check(cert)) certs_ok = false;
  };

  try {
    const auto weak = verify_weak_balls(b);
    const auto cert = loop_matching_certificate(
        as_loop_graph(symmetric_product(b)), weak.matching);
    recheck(cert);
    rec["weak_balls"] = weak.holds ? "holds" : "counterexample";
    if (!weak.holds) {
      t.weak_counter = true;
      counterexamples.push_back(cert);
    }
  } catch (const LemmaViolation& e) {
    rec["weak_balls"] = "lemma-violation";
    rec["artifact"] = e.artifact();
    t.lemma = true;
  }

  if (b.binary()) {
    try {
      const auto h = verify_higgins(b);
      rec["higgins"] = to_string(h.status);
      if (h.status == HigginsStatus::kCounterexample) {
        t.higgins_counter = true;
        const auto product = symmetric_product(b);
        const auto cert = loop_matching_certificate(as_loop_graph(product), h.ordinary);
        recheck(cert);
        counterexamples.push_back(cert);
      }
    } catch (const LemmaViolation& e) {
      rec["higgins"] = "lemma-violation";
      rec["artifact"] = e.artifact();
      t.lemma = true;
    }
  } else {
    rec["higgins"] = "n/a";
  }

  try {
    const auto h = verify_equivalence_direction(b, config.hall_max_left);
    rec["h"] = to_string(h.value);
    if (h.value != Rational(1)) t.hall_not_one = true;
  } catch (const BudgetExceeded&) {
    rec["h"] = "budget";
    t.budget = true;
  }

  auto g = instance_from_matrix(b);
  Rng rng(item_seed(config.seed, index));
  rng.shuffle(g.edges);

  std::optional<bool> brute;
  try {
    const auto found = brute_force_involution(g, config.brute_force);
    brute = found.has_value();
    rec["brute_force"] = *brute ? "found" : "none";
    if (found) {
      recheck(balls_certificate(g, *found, "brute-force"));
    } else {
      t.balls_counter = true;
      counterexamples.push_back({{"kind", "balls-counterexample"},
                                 {"instance", instance_to_json(g)}});
    }
  } catch (const BudgetExceeded&) {
    rec["brute_force"] = "budget";
    t.budget = true;
  }

  std::optional<bool> solved;
  try {
    const auto s = solve_balls(g);
    const auto cert = balls_certificate(g, s);
    if (!certificate_check(cert)) {
      certs_ok = false;
      rec["certificate"] = cert;
    }
    rec["solve_balls"] = "verified";
    rec["method"] = s.method;
    solved = true;
  } catch (const UncoveredParameters&) {
    rec["solve_balls"] = "uncovered";
    t.uncovered = true;
  } catch (const LemmaViolation& e) {
    rec["solve_balls"] = "lemma-violation";
    rec["artifact"] = e.artifact();
    t.lemma = true;
    solved = false;
  }

  if (brute && solved) {
    rec["agree"] = *brute == *solved;
    t.disagree = *brute != *solved;
  } else {
    rec["agree"] = nullptr;
  }
  rec["certificates_ok"] = certs_ok;
  t.cert_fail = !certs_ok;
  if (!counterexamples.empty()) rec["counterexamples"] = counterexamples;
  if (config.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    rec["ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  return {std::move(rec), t};
}

}  // namespace detail

// Items are processed by `workers` threads and merged by index, so the
// report does not depend on scheduling.
inline CampaignReport conjecture_campaign(const CampaignConfig& config) {
  std::vector<WeightMatrix> items;
  for (const auto& [n, k] : config.ranges) {
    EnumerationOptions opts;
    opts.max_count = config.max_instances_per_range;
    enumerate_bnk(n, k, [&](const WeightMatrix& m) { items.push_back(m); }, opts);
  }

  std::vector<std::pair<json, detail::Tally>> results(items.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++)
      results[i] = detail::campaign_item(items[i], i, config);
  };
  const int workers = std::max(1, std::min<int>(config.workers,
                                                static_cast<int>(items.size())));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  CampaignReport report;
  auto& s = report.summary;
  for (auto& [rec, t] : results) {
    ++s.instances;
    s.weak_balls_counterexamples += t.weak_counter;
    s.higgins_counterexamples += t.higgins_counter;
    s.balls_counterexamples += t.balls_counter;
    s.hall_not_one += t.hall_not_one;
    s.disagreements += t.disagree;
    s.lemma_violations += t.lemma;
    s.certificate_failures += t.cert_fail;
    s.budget_flags += t.budget;
    s.uncovered += t.uncovered;
    report.records.push_back(std::move(rec));
  }
  return report;
}

}  // namespace bireg
