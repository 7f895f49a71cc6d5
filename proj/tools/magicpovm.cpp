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

// Command-line front end. Exit codes: 0 success, 1 verification failed, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "magicpovm/catalog.hpp"
#include "magicpovm/contextuality.hpp"
#include "magicpovm/geometry.hpp"
#include "magicpovm/parallel.hpp"
#include "magicpovm/report.hpp"
#include "magicpovm/search.hpp"

#ifndef MAGICPOVM_DATA_DIR
#define MAGICPOVM_DATA_DIR "data"
#endif

namespace mp = magicpovm;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StateArgs {
  std::string preset;
  std::string state;
  std::size_t dim = 0;
  std::string factors;
  std::string rule;
  int conductor = 0;
};

struct Common {
  std::string catalog = std::string(MAGICPOVM_DATA_DIR) + "/presets.json";
  unsigned threads = 0;
  bool json = false;
};

void add_state_options(CLI::App* cmd, StateArgs& s) {
  cmd->add_option("--preset", s.preset, "preset name from the catalog");
  cmd->add_option("--state", s.state, "state literal such as \"(0,1,-1)\" or a JSON file");
  cmd->add_option("--dim", s.dim, "dimension");
  cmd->add_option("--factors", s.factors, "qudit factors, e.g. 2,2,3");
  cmd->add_option("--rule", s.rule, "phase rule: weyl or bare");
  cmd->add_option("--conductor", s.conductor, "minimum working conductor");
}

std::vector<int> parse_factors(const std::string& text) {
  std::vector<int> out;
  for (const auto& part : mp::split_tuple(text)) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw InputError("bad factor list: " + text);
    }
  }
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct ResolvedState {
  mp::Fiducial fiducial;
  std::optional<mp::Preset> preset;
};

ResolvedState resolve_state(const StateArgs& a, const Common& c) {
  if (a.preset.empty() == a.state.empty()) throw InputError("give exactly one of --preset and --state");
  if (!a.preset.empty()) {
    mp::Catalog cat = mp::load_catalog(c.catalog);
    mp::Preset p = cat.find(a.preset);
    if (a.dim && a.dim != p.dimension) throw InputError("dimension mismatch: --dim " + std::to_string(a.dim) + " but preset has " + std::to_string(p.dimension));
    ResolvedState r{mp::preset_fiducial(p), p};
    if (a.conductor) r.fiducial.conductor = std::lcm(r.fiducial.conductor, a.conductor);
    return r;
  }
  mp::Json file;
  const bool from_file = ends_with(a.state, ".json");
  if (from_file) file = mp::read_json_file(a.state);
  std::vector<int> factors;
  if (!a.factors.empty()) {
    factors = parse_factors(a.factors);
  } else if (from_file && file.contains("factors")) {
    factors = file["factors"].get<std::vector<int>>();
  }
  std::string rule = a.rule;
  if (rule.empty() && from_file) rule = file.value("rule", std::string());
  int conductor = a.conductor ? a.conductor : (from_file ? file.value("conductor", 1) : 1);

  mp::Fiducial f;
  std::size_t size = 0;
  if (from_file) {
    mp::PauliSpec placeholder({2});
    f = mp::fiducial_from_json(file, placeholder, conductor);
    size = f.vector ? f.vector->size() : f.projector->rows();
  } else {
    f.vector = mp::parse_vector_literal(a.state, conductor);
    f.conductor = conductor;
    size = f.vector->size();
  }
  const std::size_t dim = a.dim ? a.dim : size;
  if (dim != size) throw InputError("dimension mismatch: --dim " + std::to_string(dim) + " but the state has " + std::to_string(size) + " entries");
  mp::PauliSpec spec = mp::default_spec(dim);
  if (!factors.empty()) {
    bool weyl_ok = std::all_of(factors.begin(), factors.end(), [](int x) { return x == 2 || x % 2 == 1; });
    spec = mp::PauliSpec(factors, weyl_ok ? mp::PhaseRule::weyl : mp::PhaseRule::bare);
  }
  if (!rule.empty()) spec = mp::PauliSpec(spec.factors, mp::parse_phase_rule(rule));
  if (spec.dimension() != dim) throw InputError("dimension mismatch: factors multiply to " + std::to_string(spec.dimension()) + ", state has " + std::to_string(dim));
  f.spec = spec;
  return {f, std::nullopt};
}

mp::Povm build(const ResolvedState& s) {
  try {
    return mp::build_povm(s.fiducial);
  } catch (const mp::ShapeError& e) {
    throw InputError(std::string("dimension mismatch: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

mp::Json with_preset(const std::string& name, const mp::Json& r) {
  mp::Json out{{"preset", name}};
  out.update(r);
  return out;
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const StateArgs& a, const Common& c) {
  ResolvedState s = resolve_state(a, c);
  mp::Povm p = build(s);
  mp::Json r = mp::analyze_report(p);
  if (s.preset) r = with_preset(s.preset->name, r);
  if (c.json) {
    std::cout << r.dump(2) << "\n";
  } else {
    if (s.preset) std::cout << "preset " << s.preset->name << "\n";
    std::cout << "dimension " << p.dimension() << "  factors " << mp::Json(p.spec().factors).dump() << "  conductor " << p.conductor()
              << " (degree " << p.field_degree() << ")\n";
    std::cout << "povm_valid " << (p.valid() ? "yes" : "no") << "  gram_rank " << p.gram_rank() << "/" << p.size()
              << "  classification " << p.classification().str() << "\n";
    std::cout << "pair traces:\n";
    for (const auto& v : r["pair_spectrum"])
      std::cout << "  " << v["value_exact"].get<std::string>() << "  ~" << v["value_float"].get<double>() << "  x" << v["multiplicity"] << "\n";
    std::cout << "field-norm angles:\n";
    for (const auto& v : r["angle_spectrum"]) {
      std::cout << "  angle^2 " << (v["angle_sq_exact"].is_null() ? "~" + std::to_string(v["angle_sq_float"].get<double>()) : v["angle_sq_exact"].get<std::string>())
                << "  norm " << v["norm_exact"].get<std::string>() << "  x" << v["multiplicity"] << "\n";
    }
  }
  return p.informationally_complete() ? kOk : kFailed;
}

// ---------------------------------------------------------------- geometry

struct GeometryArgs {
  std::size_t k = 3;
  std::vector<std::string> traces;
  std::string phases = "none";
  std::string mode = "any";
  std::vector<std::string> spectra;
  std::vector<std::string> claims;
  std::string cliques;
  bool no_blocks = false;
  std::string dot;
  std::string edges;
  std::string graph = "collinearity";
  std::string certificate_out;
  std::string orientation = "witness";
};

std::vector<mp::Cyclotomic> parse_traces(const std::vector<std::string>& raw, int hint) {
  std::vector<mp::Cyclotomic> out;
  for (std::string t : raw) {
    bool both = false;
    for (const std::string prefix : {"+-", "\xC2\xB1"}) {  // "+-" or U+00B1
      if (t.rfind(prefix, 0) == 0) {
        both = true;
        t = t.substr(prefix.size());
      }
    }
    mp::Cyclotomic v = mp::parse_cyclotomic(t, hint);
    out.push_back(v);
    if (both) out.push_back(-v);
  }
  return out;
}

// "collinearity=6:1,3:31" -> (graph, claim)
std::pair<std::string, std::map<long, std::size_t>> parse_claim(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw InputError("claim must look like graph=value:mult,...");
  std::map<long, std::size_t> m;
  for (const auto& part : mp::split_tuple(text.substr(eq + 1))) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw InputError("bad claim entry: " + part);
    m[std::stol(part.substr(0, colon))] = std::stoul(part.substr(colon + 1));
  }
  return {text.substr(0, eq), m};
}

bool same_targets(const std::vector<mp::Cyclotomic>& a, const std::vector<mp::Cyclotomic>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a)
    if (std::none_of(b.begin(), b.end(), [&](const mp::Cyclotomic& y) { return x == y; })) return false;
  return true;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

int cmd_geometry(const StateArgs& a, const GeometryArgs& g, const Common& c) {
  ResolvedState s = resolve_state(a, c);
  mp::Povm p = build(s);
  if (!p.valid()) {
    std::cerr << "error: the orbit is not a POVM\n";
    return kFailed;
  }
  if (g.k < 3 || g.k > 4) throw InputError("--k must be 3 or 4");
  if (g.traces.empty()) throw InputError("--trace is required");
  mp::GeometryRequest req;
  req.query.k = g.k;
  req.query.targets = parse_traces(g.traces, p.conductor());
  if (g.mode != "any" && g.mode != "sorted") throw InputError("--mode must be any or sorted");
  req.query.mode = g.mode == "any" ? mp::CycleMode::any : mp::CycleMode::sorted;
  req.phases = mp::parse_phase_filter(g.phases);
  req.list_blocks = !g.no_blocks;

  // A preset geometry entry with the same query contributes its claims.
  if (s.preset) {
    for (const auto& entry : s.preset->geometry) {
      auto [q, f] = mp::geometry_query(entry, p.conductor());
      if (q.k != req.query.k || f != req.phases || !same_targets(q.targets, req.query.targets)) continue;
      if (entry.contains("spectra"))
        for (const auto& sp : entry["spectra"]) req.spectra.emplace_back(sp.at("graph").get<std::string>(), mp::spectrum_from_json(sp.at("claimed")));
      if (entry.contains("cliques")) req.clique_graph = entry["cliques"].value("graph", std::string("intersection1"));
    }
  }
  for (const auto& name : g.spectra) req.spectra.emplace_back(name, std::map<long, std::size_t>{});
  for (const auto& text : g.claims) {
    auto claim = parse_claim(text);
    auto it = std::find_if(req.spectra.begin(), req.spectra.end(), [&](const auto& e) { return e.first == claim.first; });
    if (it == req.spectra.end()) {
      req.spectra.push_back(claim);
    } else {
      it->second = claim.second;
    }
  }
  if (!g.cliques.empty()) req.clique_graph = g.cliques;
  for (const auto& [name, claim] : req.spectra) mp::named_graph({}, name);  // validates the name early

  mp::GeometryResult res = mp::run_geometry(p, req.query, req.phases);
  mp::Json r = mp::geometry_report(p, res, req);
  if (s.preset) r = with_preset(s.preset->name, r);

  if (!g.dot.empty()) write_file(g.dot, mp::to_dot(mp::named_graph(res.structure, g.graph)));
  if (!g.edges.empty()) write_file(g.edges, mp::to_edge_list(mp::named_graph(res.structure, g.graph)));
  if (!g.certificate_out.empty()) {
    auto o = g.orientation == "nontrivial" ? mp::Orientation::nontrivial : mp::Orientation::witness;
    try {
      write_file(g.certificate_out, mp::certificate_json(mp::certificate_from_geometry(res.structure, p, o)).dump(2) + "\n");
    } catch (const mp::CertificateError& e) {
      std::cerr << "error: " << e.what() << " (use --phases to attach operator witnesses)\n";
      return kFailed;
    }
  }

  if (c.json) {
    std::cout << r.dump(2) << "\n";
    return kOk;
  }
  if (s.preset) std::cout << "preset " << s.preset->name << "\n";
  std::cout << "dimension " << p.dimension() << "  factors " << mp::Json(p.spec().factors).dump() << "\n";
  std::cout << "query k=" << req.query.k << " traces " << r["query"]["traces"].dump() << " phases " << g.phases << " mode " << g.mode << "\n";
  std::cout << "trace matches " << res.candidates.size() << "  lines after phase filter " << res.lines.size() << "\n";
  const auto& st = r["structure"];
  std::cout << "structure " << st["config"].get<std::string>() << "  named " << st["named"].dump() << "\n";
  std::cout << "components " << st["components"].size() << "\n";
  std::size_t idx = 0;
  for (const auto& comp : st["components"]) {
    std::cout << "  #" << idx++ << " " << comp["config"].get<std::string>() << " named " << comp["named"].dump() << "\n";
    std::cout << "     labels " << comp["labels"].dump() << "\n";
  }
  if (r.contains("spectra")) {
    for (const auto& sp : r["spectra"]) {
      std::cout << "spectrum " << sp["graph"].get<std::string>() << " (" << sp["vertices"] << " vertices): computed " << sp["computed"].dump()
                << (sp["complete"].get<bool>() ? "" : "  [integer part only: " + std::to_string(sp["accounted"].get<std::size_t>()) + " of " + std::to_string(sp["vertices"].get<std::size_t>()) + "]") << "\n";
      if (sp.contains("claimed")) {
        std::cout << "  claimed " << sp["claimed"].dump() << " sum " << sp["claimed_sum"] << (sp["claim_consistent"].get<bool>() ? "" : "  [INCONSISTENT: sum differs from vertex count]")
                  << "  matches " << (sp["claim_matches"].get<bool>() ? "yes" : "no") << "\n";
      }
    }
  }
  if (r.contains("cliques")) {
    std::cout << "maximal cliques of " << r["cliques"]["graph"].get<std::string>() << ": " << r["cliques"]["histogram"].dump();
    if (r["cliques"].contains("pasch_4cliques")) std::cout << "  Pasch 4-cliques " << r["cliques"]["pasch_4cliques"];
    std::cout << "\n";
  }
  if (r.contains("blocks")) {
    for (const auto& b : r["blocks"]) {
      std::cout << "  " << b["labels"].dump() << " trace " << b["trace"].get<std::string>();
      if (b.contains("phase")) std::cout << " phase " << b["phase"].get<std::string>() << " order " << b["witness"].dump();
      std::cout << "\n";
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  std::size_t dim = 0;
  std::string factors;
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  std::size_t order_cap = 2000;
  int combo_depth = 1;
  bool exhaustive = false;
  bool relaxed = false;
};

int cmd_search(const SearchArgs& a, const Common& c) {
  if (a.dim < 3) throw InputError("search needs --dim of at least 3");
  mp::SearchOptions o;
  o.dimension = a.dim;
  o.spec = a.factors.empty() ? mp::default_spec(a.dim) : mp::PauliSpec(parse_factors(a.factors), mp::default_spec(a.dim).rule);
  if (o.spec.dimension() != a.dim) throw InputError("dimension mismatch: factors do not multiply to --dim");
  o.samples = a.samples;
  o.seed = a.seed;
  o.order_cap = a.order_cap;
  o.combo_depth = a.combo_depth;
  if (o.combo_depth < 0 || o.combo_depth > 1) throw InputError("--combo-depth must be 0 or 1");
  o.exhaustive = a.exhaustive;
  o.relaxed = a.relaxed;
  if (o.exhaustive && a.dim > 7) throw InputError("--exhaustive is limited to dimension 7");
  mp::Json r = mp::run_search(o);
  if (c.json) {
    std::cout << r.dump(2) << "\n";
    return kOk;
  }
  std::cout << "dimension " << a.dim << "  factors " << r["factors"].dump() << "  mode " << r["mode"].get<std::string>() << "  pairs " << r["pairs"]
            << "  over cap " << r["capped"] << "\n";
  std::size_t gi = 0;
  for (const auto& g : r["groups"])
    std::cout << "group " << gi++ << " <" << g["generators"][0].get<std::string>() << ", " << g["generators"][1].get<std::string>() << "> order "
              << g["order"] << " element orders " << g["element_orders"].dump() << " candidates " << g["candidates"] << "\n";
  for (const auto& s : r["states"])
    std::cout << (s["ic"].get<bool>() ? "IC     " : "not IC ") << s["state"].dump() << "  rank " << s["gram_rank"] << "  "
              << s["classification"].get<std::string>() << "  group " << s["group"] << "\n";
  std::cout << "IC states " << r["ic_states"] << " of " << r["states"].size() << "\n";
  return kOk;
}

// ---------------------------------------------------------------- table1

int cmd_table1(const Common& c, const std::vector<std::string>& only) {
  mp::Catalog cat = mp::load_catalog(c.catalog);
  if (!only.empty()) {
    std::vector<mp::Preset> keep;
    for (const auto& name : only) keep.push_back(cat.find(name));
    cat.presets = keep;
  }
  mp::Json r = mp::table1_report(cat);
  if (c.json) {
    std::cout << r.dump(2) << "\n";
  } else {
    for (const auto& row : r["rows"]) {
      std::size_t passed = 0;
      for (const auto& ck : row["checks"]) passed += ck["pass"].get<bool>();
      std::cout << (row["pass"].get<bool>() ? "PASS " : "FAIL ") << "d=" << row["dimension"] << "  " << row["preset"].get<std::string>() << "  ("
                << passed << "/" << row["checks"].size() << " checks)\n";
      if (row.contains("error")) std::cout << "     error: " << row["error"].get<std::string>() << "\n";
      for (const auto& ck : row["checks"])
        if (!ck["pass"].get<bool>())
          std::cout << "     " << ck["field"].get<std::string>() << ": expected " << ck["expected"].dump() << " computed " << ck["computed"].dump() << "\n";
    }
    std::cout << (r["pass"].get<bool>() ? "all rows pass" : "some rows fail") << "\n";
  }
  return r["pass"].get<bool>() ? kOk : kFailed;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& certificate, const std::string& preset, bool emit, const Common& c) {
  if (certificate.empty() == preset.empty()) throw InputError("give exactly one of --certificate and --preset");
  mp::KSCertificate cert = certificate.empty() ? mp::preset_certificate(mp::load_catalog(c.catalog).find(preset))
                                               : mp::certificate_from_json(mp::read_json_file(certificate));
  if (emit) {
    std::cout << mp::certificate_json(cert).dump(2) << "\n";
    return kOk;
  }
  mp::KSVerdict v = mp::verify(cert);
  if (c.json) {
    std::cout << mp::verdict_json(v).dump(2) << "\n";
  } else {
    for (std::size_t l = 0; l < cert.lines.size(); ++l) {
      std::cout << "line " << l << " " << mp::Json(cert.lines[l].order).dump() << " phase " << mp::to_string(v.line_phases[l])
                << (v.line_commuting[l] ? " commuting" : " non-commuting") << (v.line_expected_ok[l] ? "" : "  [differs from expected]") << "\n";
    }
    std::cout << "global phase " << mp::to_string(v.global_phase) << "\n";
    std::cout << "multiplicities divisible by " << cert.value_group_order << ": " << (v.multiplicities_divisible ? "yes" : "no")
              << "  operator orders ok: " << (v.operator_orders_ok ? "yes" : "no") << "\n";
    std::cout << "contradiction " << (v.contradiction ? "yes" : "no") << "  strength " << mp::to_string(v.proof_strength) << "\n";
  }
  return v.contradiction && v.expectations_met ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact IC-POVMs from permutation-generated magic states"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--catalog", common.catalog, "preset catalog file");
  app.add_option("--threads", common.threads, "worker threads (default: available parallelism)");

  StateArgs analyze_state;
  auto* analyze = app.add_subcommand("analyze", "build the POVM of a fiducial and report its signature");
  add_state_options(analyze, analyze_state);
  analyze->add_flag("--json", common.json, "machine-readable report");

  StateArgs geo_state;
  GeometryArgs geo;
  auto* geometry = app.add_subcommand("geometry", "tuple traces, incidence structure, graphs");
  add_state_options(geometry, geo_state);
  geometry->add_option("--k", geo.k, "tuple size (3 or 4)");
  geometry->add_option("--trace", geo.traces, "target trace literal; repeat or prefix with +- for both signs")->allow_extra_args(false);
  geometry->add_option("--phases", geo.phases, "operator phase filter: none, pm1, omega3, any");
  geometry->add_option("--mode", geo.mode, "cyclic orders examined: any or sorted");
  geometry->add_option("--spectrum", geo.spectra, "graph whose integer spectrum to compute (collinearity, incidence, intersection1, intersection2)");
  geometry->add_option("--claim", geo.claims, "claimed spectrum, e.g. collinearity=6:1,3:31");
  geometry->add_option("--cliques", geo.cliques, "graph whose maximal cliques to count");
  geometry->add_flag("--no-blocks", geo.no_blocks, "omit the block list");
  geometry->add_option("--dot", geo.dot, "write a Graphviz file of --graph");
  geometry->add_option("--edges", geo.edges, "write an edge list of --graph");
  geometry->add_option("--graph", geo.graph, "graph for --dot and --edges");
  geometry->add_option("--certificate-out", geo.certificate_out, "write a contextuality certificate built from the lines");
  geometry->add_option("--orientation", geo.orientation, "certificate orderings: witness or nontrivial");
  geometry->add_flag("--json", common.json, "machine-readable report");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "sample magic-gate pairs and test candidate states");
  search->add_option("--dim", sa.dim, "dimension")->required();
  search->add_option("--factors", sa.factors, "qudit factors");
  search->add_option("--samples", sa.samples, "random generator pairs");
  search->add_option("--seed", sa.seed, "random seed");
  search->add_option("--order-cap", sa.order_cap, "skip groups larger than this");
  search->add_option("--combo-depth", sa.combo_depth, "0: eigenbasis vectors, 1: also pairwise sums and differences");
  search->add_flag("--exhaustive", sa.exhaustive, "all pairs of magic gates");
  search->add_flag("--relaxed", sa.relaxed, "allow generators that are not magic gates");
  search->add_flag("--json", common.json, "machine-readable report");

  std::vector<std::string> table_only;
  auto* table1 = app.add_subcommand("table1", "run every preset and compare with the catalog expectations");
  table1->add_option("--preset", table_only, "restrict to these presets");
  table1->add_flag("--json", common.json, "machine-readable matrix");

  std::string cert_file, cert_preset;
  bool emit = false;
  auto* verify = app.add_subcommand("verify", "check a Kochen-Specker certificate");
  verify->alias("ks");
  verify->add_option("--certificate", cert_file, "certificate JSON file");
  verify->add_option("--preset", cert_preset, "use the certificate stored with a preset");
  verify->add_flag("--emit", emit, "print the certificate instead of verifying it");
  verify->add_flag("--json", common.json, "machine-readable verdict");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  if (common.threads) mp::set_thread_count(common.threads);
  std::cout.precision(12);
  try {
    if (*analyze) return cmd_analyze(analyze_state, common);
    if (*geometry) return cmd_geometry(geo_state, geo, common);
    if (*search) return cmd_search(sa, common);
    if (*table1) return cmd_table1(common, table_only);
    if (*verify) return cmd_verify(cert_file, cert_preset, emit, common);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const mp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const mp::CatalogError& e) {
    std::cerr << "catalog error: " << e.what() << "\n";
    return kInputError;
  } catch (const mp::CertificateError& e) {
    std::cerr << "certificate error: " << e.what() << "\n";
    return kFailed;
  } catch (const mp::ShapeError& e) {
    std::cerr << "dimension mismatch: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
