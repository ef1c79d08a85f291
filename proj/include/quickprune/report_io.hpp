// Copyright 2026 The Authors.
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

#pragma once

// File formats: newline-delimited id files, JSON reports and CSV / JSON-lines
// metric records.
//
// EvalRecord CSV columns, in order:
//   pruner,budget,n,n_pruned,value_full,value_pruned,p_r,p_g,combined,
//   p_r_defined,budget_in_range,oracle_calls_prune,oracle_calls_solve

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "quickprune/common.hpp"
#include "quickprune/graph.hpp"
#include "quickprune/metrics.hpp"
#include "quickprune/pruning.hpp"
#include "quickprune/solvers.hpp"

namespace qprune {

using Json = nlohmann::ordered_json;

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string format_ids(std::span<const ElementId> ids) {
  std::string text;
  for (ElementId e : ids) {
    text += std::to_string(e);
    text += '\n';
  }
  return text;
}

inline void write_id_file(const std::string& path,
                          std::span<const ElementId> ids) {
  write_text_file(path, format_ids(ids));
}

// One non-negative id per line; blank and '#' lines are skipped.
inline ElementSet read_id_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  ElementSet ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto token = detail::trim(line);
    if (token.empty() || token.front() == '#') continue;
    std::int64_t id = 0;
    if (!detail::parse_label(token, id) ||
        id > std::numeric_limits<ElementId>::max())
      throw ParseError(line_no, "bad element id '" + std::string(token) + "'");
    ids.push_back(static_cast<ElementId>(id));
  }
  return ids;
}

inline Json to_json(const PruneReport& report) {
  Json budgets = Json::array();
  for (const auto& b : report.budgets) {
    budgets.push_back({
        {"tau", b.tau},
        {"size", b.pruned.size()},
        {"working_size", b.working_size},
        {"deletions", b.deletions},
        {"checkpoints", b.checkpoints},
        {"oracle_calls", b.queries},
        {"c_min", b.c_min},
        {"best_singleton",
         b.best_singleton ? Json(*b.best_singleton) : Json(nullptr)},
    });
  }
  Json events = Json::array();
  for (const auto& e : report.events) {
    events.push_back({
        {"tau", e.tau},
        {"position", e.position},
        {"removed", e.removed},
        {"kept", e.kept},
        {"value_before", e.value_before},
        {"value_after", e.value_after},
    });
  }
  return {
      {"algorithm", report.algorithm},
      {"params",
       {{"kappa_min", report.kappa_min},
        {"kappa_max", report.kappa_max},
        {"eta", report.eta},
        {"delta", report.delta},
        {"epsilon", report.epsilon}}},
      {"n", report.n},
      {"pruned_size", report.pruned.size()},
      {"oracle_calls", report.oracle_calls},
      {"deletions", report.deletions},
      {"budgets", std::move(budgets)},
      {"deletion_log", std::move(events)},
      {"elapsed_seconds", report.elapsed_seconds},
  };
}

inline Json to_json(const Solution& sol) {
  return {{"ids", sol.set},
          {"value", sol.value},
          {"cost", sol.cost},
          {"oracle_calls", sol.oracle_calls}};
}

inline Json to_json(const EvalRecord& r) {
  return {{"pruner", r.pruner},
          {"budget", r.budget},
          {"n", r.n},
          {"n_pruned", r.n_pruned},
          {"value_full", r.value_full},
          {"value_pruned", r.value_pruned},
          {"p_r", r.p_r_defined ? Json(r.p_r) : Json(nullptr)},
          {"p_g", r.p_g},
          {"combined", r.p_r_defined ? Json(r.combined) : Json(nullptr)},
          {"p_r_defined", r.p_r_defined},
          {"budget_in_range", r.budget_in_range},
          {"oracle_calls_prune", r.oracle_calls_prune},
          {"oracle_calls_solve", r.oracle_calls_solve}};
}

inline const char* eval_csv_header() {
  return "pruner,budget,n,n_pruned,value_full,value_pruned,p_r,p_g,combined,"
         "p_r_defined,budget_in_range,oracle_calls_prune,oracle_calls_solve";
}

namespace detail {

inline std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace detail

inline std::string to_csv_row(const EvalRecord& r) {
  using detail::num;
  return r.pruner + ',' + num(r.budget) + ',' + std::to_string(r.n) + ',' +
         std::to_string(r.n_pruned) + ',' + num(r.value_full) + ',' +
         num(r.value_pruned) + ',' + num(r.p_r) + ',' + num(r.p_g) + ',' +
         num(r.combined) + ',' + (r.p_r_defined ? "1" : "0") + ',' +
         (r.budget_in_range ? "1" : "0") + ',' +
         std::to_string(r.oracle_calls_prune) + ',' +
         std::to_string(r.oracle_calls_solve);
}

inline void write_eval_csv(std::ostream& out,
                           std::span<const EvalRecord> records) {
  out << eval_csv_header() << '\n';
  for (const auto& r : records) out << to_csv_row(r) << '\n';
}

inline void write_eval_jsonl(std::ostream& out,
                             std::span<const EvalRecord> records) {
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

inline Json graph_metadata(const Graph& g, const std::string& edge_path) {
  double lo = 0.0;
  double hi = 0.0;
  double sum = 0.0;
  const auto costs = g.costs();
  if (!costs.empty()) {
    lo = hi = costs.front();
    for (double c : costs) {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
      sum += c;
    }
  }
  return {{"n", g.num_nodes()},
          {"m", g.num_edges()},
          {"directed", g.directed()},
          {"edge_list", edge_path},
          {"cost_min", lo},
          {"cost_max", hi},
          {"cost_mean", costs.empty() ? 0.0 : sum / costs.size()}};
}

}  // namespace qprune
