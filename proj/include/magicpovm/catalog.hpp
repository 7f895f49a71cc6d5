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

// Preset catalog: loading, state construction, and the signature checks that
// compare computed results with the expectations recorded in the catalog.

#ifndef MAGICPOVM_CATALOG_HPP
#define MAGICPOVM_CATALOG_HPP

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "magicpovm/contextuality.hpp"
#include "magicpovm/geometry.hpp"
#include "magicpovm/graph.hpp"
#include "magicpovm/literal.hpp"
#include "magicpovm/permutation.hpp"
#include "magicpovm/povm.hpp"
#include "magicpovm/report.hpp"

namespace magicpovm {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Preset {
  std::string name;
  int table_row = 0;
  std::size_t dimension = 0;
  PauliSpec spec;
  int conductor = 1;
  Json fiducial;
  std::vector<std::string> generators;
  bool relaxed = false;
  Json expected = Json::object();
  Json geometry = Json::array();
  Json certificate;  // null when absent
};

struct Catalog {
  int version = 0;
  std::vector<Preset> presets;

  const Preset& find(const std::string& name) const {
    for (const auto& p : presets)
      if (p.name == name) return p;
    throw CatalogError("unknown preset: " + name);
  }
};

inline Preset parse_preset(const Json& j) {
  Preset p;
  try {
    p.name = j.at("name").get<std::string>();
    p.table_row = j.value("table_row", 0);
    p.dimension = j.at("dimension").get<std::size_t>();
    p.spec = PauliSpec(j.at("factors").get<std::vector<int>>(), parse_phase_rule(j.value("rule", std::string("weyl"))));
    p.conductor = j.value("conductor", 1);
    p.fiducial = j.at("fiducial");
    if (j.contains("generators")) p.generators = j["generators"].get<std::vector<std::string>>();
    p.relaxed = j.value("relaxed", false);
    if (j.contains("expected")) p.expected = j["expected"];
    if (j.contains("geometry")) p.geometry = j["geometry"];
    if (j.contains("certificate")) p.certificate = j["certificate"];
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(std::string("malformed preset: ") + e.what());
  }
  if (p.spec.dimension() != p.dimension) throw CatalogError("preset " + p.name + ": factors do not multiply to the dimension");
  return p;
}

inline Catalog parse_catalog(const Json& j) {
  Catalog c;
  c.version = j.value("catalog_version", 0);
  if (!j.contains("presets") || !j["presets"].is_array()) throw CatalogError("catalog has no preset list");
  for (const auto& p : j["presets"]) c.presets.push_back(parse_preset(p));
  return c;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw CatalogError(path + ": " + e.what());
  }
}

inline Catalog load_catalog(const std::string& path) { return parse_catalog(read_json_file(path)); }

inline ExactVector parse_vector(const std::vector<std::string>& entries, int hint = 1) {
  ExactVector v(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) v[i] = parse_cyclotomic(entries[i], hint);
  return v;
}

/// "(0, 1, -z6, z6 - 1)"
inline ExactVector parse_vector_literal(std::string_view text, int hint = 1) {
  auto parts = split_tuple(text);
  if (parts.empty()) throw ParseError("empty state literal");
  return parse_vector(parts, hint);
}

inline ExactMatrix parse_matrix(const Json& rows, int hint = 1) {
  const std::size_t n = rows.size();
  ExactMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw ParseError("projector must be square");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_cyclotomic(rows[r][c].get<std::string>(), hint);
  }
  return m;
}

/// {"vector": [...]} or {"projector": [[...]]}.
inline Fiducial fiducial_from_json(const Json& j, const PauliSpec& spec, int conductor, const std::string& name = {}) {
  Fiducial f;
  if (j.contains("vector")) {
    f = Fiducial::from_vector(parse_vector(j["vector"].get<std::vector<std::string>>(), conductor), spec, name);
  } else if (j.contains("projector")) {
    f = Fiducial::from_projector(parse_matrix(j["projector"], conductor), spec, name);
  } else {
    throw ParseError("fiducial needs a vector or a projector");
  }
  f.conductor = conductor;
  return f;
}

inline Fiducial preset_fiducial(const Preset& p) { return fiducial_from_json(p.fiducial, p.spec, p.conductor, p.name); }

inline KSCertificate preset_certificate(const Preset& p) {
  if (p.certificate.is_null()) throw CatalogError("preset " + p.name + " has no certificate");
  Json j = p.certificate;
  if (!j.contains("spec")) j["spec"] = to_json(p.spec);
  return certificate_from_json(j);
}

/// Query and filter of one geometry entry.
inline std::pair<TupleQuery, PhaseFilter> geometry_query(const Json& g, int conductor = 1) {
  TupleQuery q;
  q.k = g.value("k", std::size_t{3});
  for (const auto& t : g.at("traces")) q.targets.push_back(parse_cyclotomic(t.get<std::string>(), conductor));
  q.mode = g.value("mode", std::string("any")) == "sorted" ? CycleMode::sorted : CycleMode::any;
  return {q, parse_phase_filter(g.value("phases", std::string("none")))};
}

// ---------------------------------------------------------------- signature checks

struct SignatureCheck {
  std::string field;
  Json expected;
  Json computed;
  std::string source;
  bool pass = false;
};

namespace detail {

inline bool same_exact_set(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a)
    if (std::none_of(b.begin(), b.end(), [&](const Cyclotomic& y) { return x == y; })) return false;
  return true;
}

inline std::vector<Cyclotomic> literals(const Json& arr, int hint) {
  std::vector<Cyclotomic> out;
  for (const auto& s : arr) out.push_back(parse_cyclotomic(s.get<std::string>(), hint));
  return out;
}

inline Json literal_array(const std::vector<Cyclotomic>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline std::set<std::set<std::string>> label_sets(const Json& j) {
  std::set<std::set<std::string>> out;
  for (const auto& comp : j) {
    auto v = comp.get<std::vector<std::string>>();
    out.insert(std::set<std::string>(v.begin(), v.end()));
  }
  return out;
}

// Collects checks for the fields present in an "expected" object.
class Checker {
 public:
  Checker(std::vector<SignatureCheck>& out, std::string prefix) : out_(out), prefix_(std::move(prefix)) {}

  /// compute(expected value) -> (computed json, pass)
  void field(const Json& expected, const std::string& key, const std::function<std::pair<Json, bool>(const Json&)>& compute) {
    if (!expected.contains(key)) return;
    const Json& e = expected[key];
    SignatureCheck c;
    c.field = prefix_ + key;
    c.expected = e.at("value");
    c.source = e.value("source", std::string());
    try {
      auto [computed, pass] = compute(c.expected);
      c.computed = std::move(computed);
      c.pass = pass;
    } catch (const std::exception& ex) {
      c.computed = std::string("error: ") + ex.what();
      c.pass = false;
    }
    out_.push_back(std::move(c));
  }

  /// Plain equality between the expected JSON value and a computed one.
  void equal(const Json& expected, const std::string& key, const std::function<Json()>& compute) {
    field(expected, key, [&](const Json& want) {
      Json got = compute();
      return std::make_pair(got, got == want);
    });
  }

 private:
  std::vector<SignatureCheck>& out_;
  std::string prefix_;
};

inline Json orders_json(const GroupFingerprint& f) {
  Json o = Json::object();
  for (auto [k, v] : f.element_orders) o[std::to_string(k)] = v;
  return o;
}

}  // namespace detail

inline void check_group(const Preset& p, const Povm& povm, std::vector<SignatureCheck>& out) {
  if (p.generators.size() != 2) return;
  detail::Checker ck(out, "group.");
  const int degree = static_cast<int>(p.dimension);
  MagicGroup g = generate_group(parse_permutation(p.generators[0], degree), parse_permutation(p.generators[1], degree), 1u << 20);
  ck.equal(p.expected, "group_order", [&] { return Json(g.fingerprint.order); });
  ck.equal(p.expected, "element_orders", [&] { return detail::orders_json(g.fingerprint); });
  ck.equal(p.expected, "magic_generators", [&] { return Json(g.magic_generators); });
  ck.equal(p.expected, "state_in_candidates", [&] {
    const ExactVector& target = povm.fiducial_vector();
    for (const auto& c : candidate_states(g, 1, p.spec)) {
      const int m = std::lcm(c.vector.conductor(), target.conductor());
      if (projectively_equal(c.vector.embedded(m), target.embedded(m))) return Json(true);
    }
    return Json(false);
  });
}

inline void check_povm(const Preset& p, const Povm& povm, std::vector<SignatureCheck>& out) {
  detail::Checker ck(out, "");
  const Json& e = p.expected;
  ck.equal(e, "povm_valid", [&] { return Json(povm.valid()); });
  ck.equal(e, "gram_rank", [&] { return Json(povm.gram_rank()); });
  ck.equal(e, "classification", [&] { return Json(povm.classification().str()); });
  ck.equal(e, "pair_value_count", [&] { return Json(povm.pair_spectrum().size()); });
  ck.field(e, "pair_values", [&](const Json& want) {
    std::vector<Cyclotomic> got;
    for (const auto& v : povm.pair_spectrum()) got.push_back(v.value);
    return std::make_pair(detail::literal_array(got), detail::same_exact_set(got, detail::literals(want, p.conductor)));
  });
  ck.field(e, "angle_sq", [&](const Json& want) {
    std::vector<Cyclotomic> got;
    Json shown = Json::array();
    bool exact = true;
    for (const auto& a : povm.angle_spectrum()) {
      if (a.angle_sq) {
        got.emplace_back(*a.angle_sq);
        shown.push_back(to_string(*a.angle_sq));
      } else {
        exact = false;
        shown.push_back(a.angle_sq_float);
      }
    }
    return std::make_pair(shown, exact && detail::same_exact_set(got, detail::literals(want, 1)));
  });
}

inline void check_geometry_entry(const Preset& p, const Povm& povm, const Json& g, std::size_t index,
                                 std::vector<SignatureCheck>& out) {
  const std::string prefix = "geometry[" + std::to_string(index) + "].";
  detail::Checker ck(out, prefix);
  auto [query, filter] = geometry_query(g, p.conductor);
  GeometryResult r = run_geometry(povm, query, filter);
  const Json e = g.value("expected", Json::object());
  const auto comps = components(r.structure);

  ck.equal(e, "candidates", [&] { return Json(r.candidates.size()); });
  ck.equal(e, "blocks", [&] { return Json(r.lines.size()); });
  ck.equal(e, "config", [&] { return Json(config_type(r.structure).str()); });
  ck.field(e, "named", [&](const Json& want) {
    auto names = named_detectors(r.structure);
    bool pass = true;
    for (const auto& w : want) pass = pass && std::find(names.begin(), names.end(), w.get<std::string>()) != names.end();
    return std::make_pair(Json(names), pass);
  });
  ck.equal(e, "components", [&] { return Json(comps.size()); });
  ck.equal(e, "component_points", [&] {
    std::vector<std::size_t> sizes;
    for (const auto& c : comps) sizes.push_back(c.points.size());
    std::sort(sizes.begin(), sizes.end());
    return Json(sizes);
  });
  ck.field(e, "component_config", [&](const Json& want) {
    std::set<std::string> seen;
    for (const auto& c : comps) seen.insert(config_type(c).str());
    return std::make_pair(Json(seen), seen.size() == 1 && *seen.begin() == want.get<std::string>());
  });
  ck.field(e, "component_named", [&](const Json& want) {
    std::size_t hits = 0;
    for (const auto& c : comps) {
      auto names = named_detectors(c);
      hits += std::find(names.begin(), names.end(), want.get<std::string>()) != names.end();
    }
    return std::make_pair(Json(std::to_string(hits) + "/" + std::to_string(comps.size())), !comps.empty() && hits == comps.size());
  });
  ck.field(e, "component_labels", [&](const Json& want) {
    Json got = Json::array();
    for (const auto& c : comps) got.push_back(c.point_labels);
    return std::make_pair(got, detail::label_sets(got) == detail::label_sets(want));
  });
  ck.field(e, "component_pair_values", [&](const Json& want) {
    auto allowed = detail::literals(want, p.conductor);
    std::vector<Cyclotomic> seen;
    for (const auto& c : comps)
      for (std::size_t a = 0; a < c.points.size(); ++a)
        for (std::size_t b = a + 1; b < c.points.size(); ++b) {
          Cyclotomic v = povm.pair_trace(c.points[a], c.points[b]);
          if (std::none_of(seen.begin(), seen.end(), [&](const Cyclotomic& x) { return x == v; })) seen.push_back(v);
        }
    bool subset = std::all_of(seen.begin(), seen.end(), [&](const Cyclotomic& v) {
      return std::any_of(allowed.begin(), allowed.end(), [&](const Cyclotomic& x) { return x == v; });
    });
    return std::make_pair(detail::literal_array(seen), subset);
  });
  if (e.contains("shared2_components") || e.contains("petersen_components")) {
    SimpleGraph shared2 = intersection_graph(r.structure, 2);
    auto groups = component_vertices(shared2);
    ck.equal(e, "shared2_components", [&] { return Json(groups.size()); });
    ck.equal(e, "petersen_components", [&] {
      std::size_t count = 0;
      for (const auto& lines : groups) count += is_petersen(intersection_graph(restrict_lines(r.structure, lines), 1));
      return Json(count);
    });
  }

  if (g.contains("spectra")) {
    for (const auto& sp : g["spectra"]) {
      const std::string name = sp.at("graph").get<std::string>();
      detail::Checker sck(out, prefix + "spectrum." + name + ".");
      auto check = check_spectrum(named_graph(r.structure, name), spectrum_from_json(sp.at("claimed")));
      const Json se = sp.value("expected", Json::object());
      sck.equal(se, "claim_consistent", [&] { return Json(check.claim_consistent); });
      sck.equal(se, "claim_matches", [&] { return Json(check.claim_matches); });
      sck.equal(se, "computed", [&] { return spectrum_json(check.computed.multiplicity); });
    }
  }
  if (g.contains("cliques")) {
    const Json& cq = g["cliques"];
    Json rep = clique_report(r.structure, cq.value("graph", std::string("intersection1")));
    detail::Checker cck(out, prefix + "cliques.");
    const Json ce = cq.value("expected", Json::object());
    cck.equal(ce, "histogram", [&] { return rep.at("histogram"); });
    cck.equal(ce, "pasch_4cliques", [&] { return rep.value("pasch_4cliques", Json(nullptr)); });
  }
  if (g.contains("certificate")) {
    const Json& cj = g["certificate"];
    const Orientation o = cj.value("orientation", std::string("witness")) == "nontrivial" ? Orientation::nontrivial : Orientation::witness;
    std::vector<IncidenceStructure> parts;
    if (cj.value("per_component", false)) {
      parts = comps;
    } else {
      parts.push_back(r.structure);
    }
    std::vector<KSVerdict> verdicts;
    for (const auto& s : parts) verdicts.push_back(verify(certificate_from_geometry(s, povm, o)));
    detail::Checker kck(out, prefix + "certificate.");
    const Json ke = cj.value("expected", Json::object());
    kck.field(ke, "global_phase", [&](const Json& want) {
      std::set<std::string> phases;
      for (const auto& v : verdicts) phases.insert(to_string(v.global_phase));
      const Cyclotomic w = parse_cyclotomic(want.get<std::string>());
      bool pass = !verdicts.empty();
      for (const auto& v : verdicts) pass = pass && v.global_phase == w;
      return std::make_pair(Json(phases), pass);
    });
    kck.field(ke, "contradiction", [&](const Json& want) {
      std::size_t yes = 0;
      for (const auto& v : verdicts) yes += v.contradiction;
      bool all = !verdicts.empty() && yes == verdicts.size();
      bool none = yes == 0;
      return std::make_pair(Json(std::to_string(yes) + "/" + std::to_string(verdicts.size())), want.get<bool>() ? all : none);
    });
  }
}

inline void check_certificate(const Preset& p, std::vector<SignatureCheck>& out) {
  if (p.certificate.is_null()) return;
  KSVerdict v = verify(preset_certificate(p));
  detail::Checker ck(out, "certificate.");
  const Json e = p.certificate.value("expected", Json::object());
  ck.field(e, "line_phases", [&](const Json& want) {
    auto exp = detail::literals(want, 1);
    bool pass = exp.size() == v.line_phases.size();
    for (std::size_t i = 0; pass && i < exp.size(); ++i) pass = exp[i] == v.line_phases[i];
    return std::make_pair(detail::literal_array(v.line_phases), pass);
  });
  ck.field(e, "global_phase", [&](const Json& want) {
    return std::make_pair(Json(to_string(v.global_phase)), v.global_phase == parse_cyclotomic(want.get<std::string>()));
  });
  ck.equal(e, "contradiction", [&] { return Json(v.contradiction); });
}

/// Every check recorded for one preset, in catalog order.
inline std::vector<SignatureCheck> check_preset(const Preset& p) {
  std::vector<SignatureCheck> out;
  Povm povm = build_povm(preset_fiducial(p));
  check_povm(p, povm, out);
  check_group(p, povm, out);
  for (std::size_t i = 0; i < p.geometry.size(); ++i) check_geometry_entry(p, povm, p.geometry[i], i, out);
  check_certificate(p, out);
  return out;
}

inline Json check_json(const SignatureCheck& c) {
  return Json{{"field", c.field}, {"source", c.source}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
}

/// Consolidated pass/fail matrix over the whole catalog.
inline Json table1_report(const Catalog& cat, const std::function<void(const std::string&)>& progress = {}) {
  Json rows = Json::array();
  bool all = true;
  for (const auto& p : cat.presets) {
    if (progress) progress(p.name);
    Json row;
    row["preset"] = p.name;
    row["dimension"] = p.dimension;
    row["table_row"] = p.table_row;
    Json checks = Json::array();
    bool pass = true;
    try {
      for (const auto& c : check_preset(p)) {
        pass = pass && c.pass;
        checks.push_back(check_json(c));
      }
    } catch (const std::exception& ex) {
      pass = false;
      row["error"] = ex.what();
    }
    row["checks"] = std::move(checks);
    row["pass"] = pass;
    all = all && pass;
    rows.push_back(std::move(row));
  }
  return Json{{"catalog_version", cat.version}, {"rows", rows}, {"pass", all}};
}

}  // namespace magicpovm

#endif  // MAGICPOVM_CATALOG_HPP
