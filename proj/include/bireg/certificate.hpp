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

// Certificate builders. Every solver and verifier result converts to a
// {"kind": ...} document that certificate_check() validates on its own.

#pragma once

#include <json.hpp>

#include "bireg/core.hpp"
#include "bireg/inequality.hpp"
#include "bireg/involution.hpp"
#include "bireg/json_io.hpp"
#include "bireg/matching.hpp"

namespace bireg {

inline json balls_certificate(const LabeledBigraph& g, const BallsSolution& s) {
  json cert = {{"kind", "balls-involution"},
               {"instance", instance_to_json(g)},
               {"involution", s.iota.map},
               {"method", s.method}};
  if (s.coloring) cert["coloring"] = coloring_to_json(*s.coloring);
  if (s.alpha) cert["alpha"] = s.alpha->map;
  if (s.params) cert["params"] = {{"m", s.params->m}, {"epsilon", s.params->epsilon}};
  return cert;
}

// Certificate for an involution found by any means.
inline json balls_certificate(const LabeledBigraph& g, const Involution& iota,
                              const std::string& method) {
  return {{"kind", "balls-involution"},
          {"instance", instance_to_json(g)},
          {"involution", iota.map},
          {"method", method}};
}

inline json four_parts_certificate(const LabeledBigraph& g1, const LabeledBigraph& g2,
                                   const FourPartsSolution& s) {
  return {{"kind", "four-parts-bijection"},
          {"instance1", instance_to_json(g1)},
          {"instance2", instance_to_json(g2)},
          {"psi", s.psi},
          {"w1", coloring_to_json(s.w1)},
          {"w2", coloring_to_json(s.w2)},
          {"sigma1", s.sigma1.map},
          {"sigma2", s.sigma2.map},
          {"params", {{"m", s.params.m}, {"epsilon", s.params.epsilon}}}};
}

// "matching" with theta, or "tutte-obstruction" with the set U.
inline json loop_matching_certificate(const LoopGraph& g, const LoopMatchingResult& r) {
  if (r.success())
    return {{"kind", "matching"}, {"graph", loop_graph_to_json(g)},
            {"theta", r.matching->map}};
  return {{"kind", "tutte-obstruction"},
          {"graph", loop_graph_to_json(g)},
          {"set", r.obstruction},
          {"odd_components", r.odd_components}};
}

// "bipartite-matching" when left-perfect, else "deficient-set".
inline json bipartite_certificate(const BipGraph& g, const BipartiteMatching& m) {
  if (m.left_perfect())
    return {{"kind", "bipartite-matching"}, {"graph", matrix_to_json(g)},
            {"mate", m.mate_left}};
  return {{"kind", "deficient-set"}, {"graph", matrix_to_json(g)},
          {"set", m.deficient_set}};
}

inline json inequality_certificate(const InequalityInstance& inst) {
  const auto sides = inequality_sides(inst);
  auto cert = inequality_report_json(inst, sides);
  cert["kind"] = "inequality-violation";
  return cert;
}

}  // namespace bireg
