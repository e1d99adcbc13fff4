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

// JSON forms of the data model. Object keys are kept sorted and canonical()
// prints without whitespace, so re-serializing a parsed document reproduces
// it byte for byte.
//
//   instance   {"edges":[[l,r],...],"k":K,"n":N}
//   matrix     {"cols":C,"data":[[...],...],"rows":R}
//   coloring   {"colors":[...],"palette":F}
//   product    {"data":[[...],...],"k":K,"linearization":"row-major","n":N}
//   loop graph {"adjacency":[[...],...],"vertices":V}

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "bireg/coloring.hpp"
#include "bireg/core.hpp"
#include "bireg/inequality.hpp"
#include "bireg/matching.hpp"
#include "bireg/tensor.hpp"

namespace bireg {

using nlohmann::json;

inline std::string canonical(const json& j) { return j.dump(); }

namespace detail {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw PreconditionError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw PreconditionError(std::string("malformed field '") + key + "'");
  }
}

inline json grid(const WeightMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline WeightMatrix from_grid(const json& data, int rows, int cols) {
  if (!data.is_array() || static_cast<int>(data.size()) != rows)
    throw PreconditionError("matrix data does not match its row count");
  WeightMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!data[r].is_array() || static_cast<int>(data[r].size()) != cols)
      throw PreconditionError("matrix row does not match its column count");
    for (int c = 0; c < cols; ++c) {
      if (!data[r][c].is_number_integer())
        throw PreconditionError("matrix entries must be integers");
      m(r, c) = data[r][c].get<std::int64_t>();
    }
  }
  return m;
}

}  // namespace detail

inline json instance_to_json(const LabeledBigraph& g) {
  json edges = json::array();
  for (const auto& [l, r] : g.edges) edges.push_back({l, r});
  return {{"n", g.left_size}, {"k", g.right_size}, {"edges", edges}};
}

inline LabeledBigraph instance_from_json(const json& j) {
  LabeledBigraph g;
  g.left_size = detail::field<int>(j, "n");
  g.right_size = detail::field<int>(j, "k");
  for (const auto& e : detail::field<json>(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw PreconditionError("edges must be [left, right] integer pairs");
    g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  g.validate();
  return g;
}

inline json matrix_to_json(const WeightMatrix& m) {
  return {{"rows", m.rows}, {"cols", m.cols}, {"data", detail::grid(m)}};
}

inline WeightMatrix matrix_from_json(const json& j) {
  const int rows = detail::field<int>(j, "rows");
  const int cols = detail::field<int>(j, "cols");
  if (rows < 1 || cols < 1) throw PreconditionError("matrix must be non-empty");
  auto m = detail::from_grid(detail::field<json>(j, "data"), rows, cols);
  if (!m.non_negative()) throw PreconditionError("matrix entries must be >= 0");
  return m;
}

inline json coloring_to_json(const Coloring& w) {
  return {{"palette", w.palette}, {"colors", w.colors}};
}

inline Coloring coloring_from_json(const json& j) {
  Coloring w{detail::field<int>(j, "palette"),
             detail::field<std::vector<int>>(j, "colors")};
  for (int c : w.colors)
    if (c < 0 || c >= w.palette) throw PreconditionError("color out of palette");
  return w;
}

inline json product_to_json(const CellIndexedMatrix& p) {
  return {{"n", p.base_rows},
          {"k", p.base_cols},
          {"linearization", "row-major"},
          {"data", detail::grid(p.data)}};
}

inline CellIndexedMatrix product_from_json(const json& j) {
  if (detail::field<std::string>(j, "linearization") != "row-major")
    throw PreconditionError("unsupported linearization");
  CellIndexedMatrix p;
  p.base_rows = detail::field<int>(j, "n");
  p.base_cols = detail::field<int>(j, "k");
  const int size = p.base_rows * p.base_cols;
  p.data = detail::from_grid(detail::field<json>(j, "data"), size, size);
  return p;
}

inline json loop_graph_to_json(const LoopGraph& g) {
  return {{"vertices", g.size}, {"adjacency", detail::grid(g.adjacency)}};
}

inline json rational_matrix_to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows}, {"cols", m.cols}, {"data", rows}};
}

// Accepts integer entries or "p/q" strings.
inline RationalMatrix rational_matrix_from_json(const json& j) {
  const int rows = detail::field<int>(j, "rows");
  const int cols = detail::field<int>(j, "cols");
  const auto data = detail::field<json>(j, "data");
  if (rows < 1 || cols < 1 || !data.is_array() ||
      static_cast<int>(data.size()) != rows)
    throw PreconditionError("matrix data does not match its shape");
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!data[r].is_array() || static_cast<int>(data[r].size()) != cols)
      throw PreconditionError("matrix row does not match its column count");
    for (int c = 0; c < cols; ++c) {
      const auto& x = data[r][c];
      if (x.is_number_integer()) {
        m(r, c) = Rational(x.get<std::int64_t>());
      } else if (x.is_string()) {
        m(r, c) = parse_rational(x.get<std::string>());
      } else {
        throw PreconditionError("matrix entries must be integers or \"p/q\"");
      }
    }
  }
  return m;
}

inline json cells_to_json(const std::vector<Cell>& cells) {
  json out = json::array();
  for (const auto& [x, y] : cells) out.push_back({x, y});
  return out;
}

inline std::vector<Cell> cells_from_json(const json& j) {
  const json& list = j.is_object() ? detail::field<json>(j, "cells") : j;
  if (!list.is_array()) throw PreconditionError("cells must be an array");
  std::vector<Cell> out;
  for (const auto& c : list) {
    if (!c.is_array() || c.size() != 2)
      throw PreconditionError("cells must be [row, col] pairs");
    out.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  return out;
}

// {"matrix", "cells", "lhs", "rhs", "slack", "violated"}.
inline json inequality_report_json(const InequalityInstance& inst,
                                   const InequalitySides& sides) {
  return {{"matrix", rational_matrix_to_json(inst.matrix)},
          {"cells", cells_to_json(inst.cells)},
          {"lhs", to_string(sides.lhs)},
          {"rhs", to_string(sides.rhs)},
          {"slack", to_string(sides.slack())},
          {"violated", !sides.holds()}};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw PreconditionError("malformed JSON in " + path + ": " + e.what());
  }
}

// Writes via a temporary file and rename.
inline void write_text_file(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path);
    out << text;
    if (!out) throw Error("cannot write " + path);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error("cannot rename onto " + path);
}

inline void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, canonical(j) + "\n");
}

}  // namespace bireg
