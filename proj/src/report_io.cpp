// Copyright 2026 The qyao Authors.
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

#include "qyao/report_io.hpp"

#include <ctime>

namespace qyao {

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rational_json(r));
  return out;
}

Json ledger(const QueryLedger& q) {
  return {{"grover", q.grover}, {"verification", q.verification}, {"total", q.total()}};
}

Json profile_json(const ConstantsProfile& p) {
  return {{"name", p.name},
          {"i_min", p.i_min},
          {"size_factor", p.size_factor},
          {"cap", p.cap},
          {"coverage", rational_json(p.coverage)},
          {"initial_bound_factor", p.initial_bound_factor},
          {"seed", p.seed},
          {"enumerate_limit", p.enumerate_limit},
          {"sample_count", p.sample_count},
          {"verify_candidates", p.verify_candidates}};
}

}  // namespace

Json rational_json(const Rational& r) { return {{"exact", to_string(r)}, {"float", to_double(r)}}; }

Json to_json(const SubsetCertificate& c) {
  return {{"mask", c.mask.to_string()},
          {"size", c.mask.weight()},
          {"property", c.property == CoverageProperty::weight_window ? "weight_window" : "hit"},
          {"t", c.t},
          {"window", c.window},
          {"c", c.c},
          {"size_factor", c.size_factor},
          {"cap", c.cap},
          {"target", rational_json(c.target)},
          {"coverage", rational_json(c.coverage)},
          {"fallback", c.fallback},
          {"meets_target", c.meets_target},
          {"search", c.search},
          {"candidates", c.candidates}};
}

Json to_json(const InputRecord& r) {
  return {{"input", r.input.to_string()},
          {"weight", rational_json(r.weight)},
          {"expected", r.expected},
          {"acceptance", r.acceptance},
          {"certain", r.certain},
          {"worst_queries", ledger(r.worst)},
          {"pruned", r.pruned}};
}

Json to_json(const AlgorithmReport& r, bool per_input) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  Json out = {{"algorithm", r.algorithm},
              {"function", r.function},
              {"distribution", r.distribution},
              {"profile", profile_json(r.profile)},
              {"parameters", params},
              {"weak_fraction", rational_json(r.weak_fraction)},
              {"target", rational_json(r.target)},
              {"meets_target", r.meets_target()},
              {"worst_queries", {{"grover", r.worst_grover}, {"verification", r.worst_verification}, {"total", r.worst_total}}},
              {"envelope", {{"formula", r.envelope.formula}, {"value", r.envelope.value}, {"ratio", r.envelope_ratio()}}},
              {"certificates", certs},
              {"fallback", r.fallback},
              {"pruned_mass", r.pruned_mass},
              {"inputs", r.records.size()}};
  if (per_input) {
    Json records = Json::array();
    for (const auto& rec : r.records) records.push_back(to_json(rec));
    out["records"] = records;
  }
  return out;
}

Json to_json(const FindAllReport& r) {
  Json branches = Json::array();
  for (const auto& b : r.outcomes.branches()) {
    branches.push_back({{"found", b.value.to_string()}, {"probability", b.probability}, {"queries", ledger(b.queries)}});
  }
  return {{"input", r.input.to_string()},
          {"k", r.k},
          {"exact", r.exact},
          {"grover_bound", r.grover_bound},
          {"max_grover", r.outcomes.max_grover()},
          {"max_total", r.outcomes.max_total()},
          {"pruned", r.outcomes.pruned()},
          {"branches", branches}};
}

Json to_json(const sim::BranchTree& tree) {
  Json nodes = Json::array();
  for (const auto& n : tree.nodes) {
    nodes.push_back({{"parent", n.parent},
                     {"label", n.label},
                     {"outcome", n.outcome},
                     {"probability", n.probability},
                     {"queries", n.queries}});
  }
  Json leaves = Json::array();
  for (const auto& l : tree.leaves) {
    Json leaf = {{"probability", l.probability},
                 {"outcomes", l.outcomes},
                 {"search_queries", l.search_queries},
                 {"verification_queries", l.verification_queries}};
    leaf["output"] = l.output ? Json(*l.output) : Json(nullptr);
    leaves.push_back(leaf);
  }
  return {{"nodes", nodes},
          {"leaves", leaves},
          {"pruned_mass", tree.pruned_mass},
          {"leaf_mass", tree.leaf_mass()},
          {"max_queries", tree.max_queries()}};
}

Json to_json(const GameSolution& s) {
  Json out = {{"value", s.value},
              {"row_strategy", s.row_strategy},
              {"column_strategy", s.column_strategy},
              {"gap", s.gap},
              {"sum_residual", s.sum_residual},
              {"min_entry", s.min_entry},
              {"max_min", s.max_min},
              {"min_max", s.min_max},
              {"pivots", s.pivots},
              {"reduced_rows", s.reduced_rows},
              {"reduced_cols", s.reduced_cols}};
  if (s.exact_value) {
    out["exact_value"] = rational_json(*s.exact_value);
    out["exact_row_strategy"] = rationals(s.exact_row_strategy);
    out["exact_column_strategy"] = rationals(s.exact_column_strategy);
  }
  return out;
}

Json to_json(const YaoReport& r) {
  Json inputs = Json::array();
  for (const auto& x : r.inputs) inputs.push_back(x.to_string());
  Json sweep = Json::array();
  for (const auto& row : r.sweep) {
    sweep.push_back({{"depth", row.depth},
                     {"trees", row.trees},
                     {"value", rational_json(row.value)},
                     {"hardest_mu", rationals(row.mu)},
                     {"distributional", row.distributional},
                     {"gap", row.solution.gap}});
  }
  return {{"function", r.function},
          {"arity", r.arity},
          {"epsilon", rational_json(r.epsilon)},
          {"inputs", inputs},
          {"sweep", sweep},
          {"randomized", r.randomized},
          {"max_distributional", r.max_distributional},
          {"witness", rationals(r.witness)},
          {"equal", r.equal},
          {"random_checks", r.random_checks},
          {"counterexample", r.counterexample},
          {"max_gap", r.max_gap}};
}

Json to_json(const FloorPayoff& p) {
  Json rows = Json::array();
  for (int i = 0; i < p.matrix.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < p.matrix.cols(); ++j) row.push_back(p.matrix.at(i, j) == 0 ? 0 : 1);
    rows.push_back(row);
  }
  return {{"row_labels", p.matrix.row_labels},
          {"col_labels", p.matrix.col_labels},
          {"matrix", rows},
          {"solution", to_json(p.solution)},
          {"hardest_mu", rationals(p.hardest_mu)}};
}

Json envelope(Json body, const std::string& command, bool timestamp) {
  body["schema_version"] = kSchemaVersion;
  body["command"] = command;
  if (timestamp) {
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
    body["timestamp"] = buffer;
  }
  return body;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qyao
