// Copyright 2026 The magicpovm Authors
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

// JSON reports. Keys keep insertion order so output is byte-stable.

#ifndef MAGICPOVM_REPORT_HPP
#define MAGICPOVM_REPORT_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "magicpovm/contextuality.hpp"
#include "magicpovm/geometry.hpp"
#include "magicpovm/graph.hpp"
#include "magicpovm/literal.hpp"
#include "magicpovm/povm.hpp"

namespace magicpovm {

using Json = nlohmann::ordered_json;

inline Json to_json(const ExactVector& v) {
  Json a = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) a.push_back(to_string(v[i]));
  return a;
}

inline Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Eigenvalue -> multiplicity, largest eigenvalue first, zero multiplicities dropped.
inline Json spectrum_json(const std::map<long, std::size_t>& m) {
  Json o = Json::object();
  for (auto it = m.rbegin(); it != m.rend(); ++it)
    if (it->second) o[std::to_string(it->first)] = it->second;
  return o;
}

inline std::map<long, std::size_t> spectrum_from_json(const Json& j) {
  std::map<long, std::size_t> m;
  for (const auto& [k, v] : j.items()) m[std::stol(k)] = v.get<std::size_t>();
  return m;
}

inline std::string to_string(PhaseRule r) { return r == PhaseRule::weyl ? "weyl" : "bare"; }

inline PhaseRule parse_phase_rule(const std::string& s) {
  if (s == "weyl") return PhaseRule::weyl;
  if (s == "bare") return PhaseRule::bare;
  throw ParseError("unknown phase rule: " + s);
}

inline std::string to_string(PhaseFilter f) {
  switch (f) {
    case PhaseFilter::none: return "none";
    case PhaseFilter::pm1: return "pm1";
    case PhaseFilter::omega3: return "omega3";
    case PhaseFilter::any: return "any";
  }
  return "none";
}

inline PhaseFilter parse_phase_filter(const std::string& s) {
  if (s == "none") return PhaseFilter::none;
  if (s == "pm1") return PhaseFilter::pm1;
  if (s == "omega3") return PhaseFilter::omega3;
  if (s == "any") return PhaseFilter::any;
  throw ParseError("unknown phase filter: " + s);
}

inline Json to_json(const PauliSpec& s) {
  return Json{{"factors", s.factors}, {"rule", to_string(s.rule)}};
}

inline PauliSpec pauli_spec_from_json(const Json& j) {
  return PauliSpec(j.at("factors").get<std::vector<int>>(), parse_phase_rule(j.value("rule", std::string("weyl"))));
}

// ---------------------------------------------------------------- analyze

inline Json analyze_report(const Povm& p) {
  Json r;
  r["dimension"] = p.dimension();
  r["factors"] = p.spec().factors;
  r["conductor"] = p.conductor();
  r["field_degree"] = p.field_degree();
  r["fiducial"] = to_json(p.fiducial_vector());
  r["povm_valid"] = p.valid();
  r["gram_rank"] = p.gram_rank();
  r["classification"] = p.classification().str();
  Json pairs = Json::array();
  for (const auto& v : p.pair_spectrum())
    pairs.push_back({{"value_exact", to_string(v.value)}, {"value_float", v.value.to_complex().real()}, {"multiplicity", v.multiplicity}});
  r["pair_spectrum"] = std::move(pairs);
  Json angles = Json::array();
  for (const auto& a : p.angle_spectrum()) {
    Json e{{"norm_exact", to_string(a.norm)}, {"angle_float", a.angle_float}};
    e["angle_sq_exact"] = a.angle_sq ? Json(to_string(*a.angle_sq)) : Json(nullptr);
    e["angle_sq_float"] = a.angle_sq_float;
    e["multiplicity"] = a.multiplicity;
    angles.push_back(std::move(e));
  }
  r["angle_spectrum"] = std::move(angles);
  return r;
}

// ---------------------------------------------------------------- geometry

struct GeometryRequest {
  TupleQuery query;
  PhaseFilter phases = PhaseFilter::none;
  bool list_blocks = true;
  /// graph name -> claimed spectrum; graphs: collinearity, incidence, intersection1, intersection2
  std::vector<std::pair<std::string, std::map<long, std::size_t>>> spectra;
  std::optional<std::string> clique_graph;
};

struct GeometryResult {
  std::vector<Block> candidates;  // trace matches before the phase filter
  std::vector<Block> lines;
  IncidenceStructure structure;
};

inline GeometryResult run_geometry(const Povm& p, const TupleQuery& q, PhaseFilter f) {
  GeometryResult g;
  g.candidates = tuple_traces(p, q);
  g.lines = filter_blocks(g.candidates, p, f);
  g.structure = make_structure(p, g.lines);
  return g;
}

inline SimpleGraph named_graph(const IncidenceStructure& s, const std::string& name) {
  if (name == "collinearity") return collinearity_graph(s);
  if (name == "incidence") return incidence_graph(s);
  if (name == "intersection1") return intersection_graph(s, 1);
  if (name == "intersection2") return intersection_graph(s, 2);
  throw std::invalid_argument("unknown graph: " + name);
}

/// Spectrum against a claim, or against every integer in [-maxdeg, maxdeg] without one.
inline Json spectrum_report(const SimpleGraph& g, const std::map<long, std::size_t>& claimed) {
  Json r;
  r["vertices"] = g.order();
  r["edges"] = g.size();
  if (claimed.empty()) {
    std::size_t maxdeg = 0;
    for (auto [d, c] : g.degree_histogram()) maxdeg = std::max(maxdeg, d);
    std::vector<long> cand;
    for (long v = -static_cast<long>(maxdeg); v <= static_cast<long>(maxdeg); ++v) cand.push_back(v);
    auto s = graph_spectrum(g, cand);
    r["computed"] = spectrum_json(s.multiplicity);
    r["accounted"] = s.accounted;
    r["complete"] = s.complete();
    return r;
  }
  auto c = check_spectrum(g, claimed);
  r["claimed"] = spectrum_json(c.claimed);
  r["claimed_sum"] = c.claimed_sum;
  r["computed"] = spectrum_json(c.computed.multiplicity);
  r["accounted"] = c.computed.accounted;
  r["complete"] = c.computed.complete();
  r["claim_consistent"] = c.claim_consistent;
  r["claim_matches"] = c.claim_matches;
  return r;
}

inline Json block_json(const Block& b, const std::vector<std::string>& labels) {
  Json j;
  j["indices"] = b.indices;
  Json names = Json::array();
  for (std::size_t i : b.indices) names.push_back(labels.at(i));
  j["labels"] = std::move(names);
  j["trace"] = to_string(b.trace);
  j["cycle"] = b.cycle;
  if (b.op_phase) {
    j["witness"] = b.witness;
    j["phase"] = to_string(*b.op_phase);
  }
  return j;
}

inline Json structure_json(const IncidenceStructure& s) {
  Json j;
  j["config"] = config_type(s).str();
  j["points"] = s.points.size();
  j["lines"] = s.lines.size();
  j["named"] = named_detectors(s);
  return j;
}

/// Clique histogram of a line graph plus the number of 4-cliques whose lines form a Pasch configuration.
inline Json clique_report(const IncidenceStructure& s, const std::string& graph) {
  SimpleGraph g = named_graph(s, graph);
  auto cliques = maximal_cliques(g);
  std::map<std::size_t, std::size_t> hist;
  for (const auto& c : cliques) ++hist[c.size()];
  Json h = Json::object();
  for (auto [k, v] : hist) h[std::to_string(k)] = v;
  Json r{{"graph", graph}, {"histogram", h}};
  if (graph == "intersection1" || graph == "intersection2") {
    std::size_t pasch = 0;
    for (const auto& c : cliques)
      if (c.size() == 4 && is_pasch(restrict_lines(s, c))) ++pasch;
    r["pasch_4cliques"] = pasch;
  }
  return r;
}

inline Json geometry_report(const Povm& p, const GeometryResult& g, const GeometryRequest& req) {
  Json r;
  r["dimension"] = p.dimension();
  r["factors"] = p.spec().factors;
  r["conductor"] = p.conductor();
  Json q;
  q["k"] = req.query.k;
  Json traces = Json::array();
  for (const auto& t : req.query.targets) traces.push_back(to_string(t));
  q["traces"] = std::move(traces);
  q["phases"] = to_string(req.phases);
  q["mode"] = req.query.mode == CycleMode::any ? "any" : "sorted";
  r["query"] = std::move(q);
  r["candidates"] = g.candidates.size();
  r["lines"] = g.lines.size();
  const auto labels = operator_labels(p);
  if (req.list_blocks) {
    Json blocks = Json::array();
    for (const auto& b : g.lines) blocks.push_back(block_json(b, labels));
    r["blocks"] = std::move(blocks);
  }
  Json st = structure_json(g.structure);
  Json comps = Json::array();
  for (const auto& c : components(g.structure)) {
    Json cj = structure_json(c);
    cj["labels"] = c.point_labels;
    comps.push_back(std::move(cj));
  }
  st["components"] = std::move(comps);
  r["structure"] = std::move(st);
  if (!req.spectra.empty()) {
    Json sp = Json::array();
    for (const auto& [name, claim] : req.spectra) {
      Json e = spectrum_report(named_graph(g.structure, name), claim);
      e["graph"] = name;
      sp.push_back(std::move(e));
    }
    r["spectra"] = std::move(sp);
  }
  if (req.clique_graph) r["cliques"] = clique_report(g.structure, *req.clique_graph);
  return r;
}

// ---------------------------------------------------------------- certificates

inline Json certificate_json(const KSCertificate& c) {
  Json j;
  j["spec"] = to_json(c.spec);
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back({{"label", p.label}, {"operator", to_string(p.op)}});
  j["points"] = std::move(pts);
  Json lines = Json::array();
  for (const auto& l : c.lines) {
    Json lj{{"order", l.order}};
    lj["expected_phase"] = l.expected_phase ? Json(to_string(*l.expected_phase)) : Json(nullptr);
    lines.push_back(std::move(lj));
  }
  j["lines"] = std::move(lines);
  j["value_group_order"] = c.value_group_order;
  return j;
}

inline KSCertificate certificate_from_json(const Json& j) {
  KSCertificate c;
  try {
    c.spec = pauli_spec_from_json(j.at("spec"));
    for (const auto& p : j.at("points"))
      c.points.push_back({p.at("label").get<std::string>(), parse_operator(p.at("operator").get<std::string>(), c.spec)});
    for (const auto& l : j.at("lines")) {
      KSLine line;
      line.order = l.at("order").get<std::vector<std::string>>();
      if (l.contains("expected_phase") && !l["expected_phase"].is_null())
        line.expected_phase = parse_cyclotomic(l["expected_phase"].get<std::string>());
      c.lines.push_back(std::move(line));
    }
    c.value_group_order = j.value("value_group_order", 2);
  } catch (const nlohmann::json::exception& e) {
    throw CertificateError(std::string("malformed certificate: ") + e.what());
  }
  return c;
}

inline Json verdict_json(const KSVerdict& v) {
  Json j;
  Json phases = Json::array();
  for (const auto& s : v.line_phases) phases.push_back(to_string(s));
  j["line_phases"] = std::move(phases);
  j["line_expected_ok"] = v.line_expected_ok;
  j["line_commuting"] = v.line_commuting;
  j["global_phase"] = to_string(v.global_phase);
  j["value_side"] = v.value_side ? Json(to_string(*v.value_side)) : Json(nullptr);
  Json mult = Json::object();
  for (const auto& [k, m] : v.multiplicity) mult[k] = m;
  j["multiplicity"] = std::move(mult);
  j["multiplicities_divisible"] = v.multiplicities_divisible;
  j["operator_orders_ok"] = v.operator_orders_ok;
  j["expectations_met"] = v.expectations_met;
  j["contradiction"] = v.contradiction;
  j["proof_strength"] = to_string(v.proof_strength);
  return j;
}

}  // namespace magicpovm

#endif  // MAGICPOVM_REPORT_HPP
