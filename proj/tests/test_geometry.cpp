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

#include <numeric>

#include "catch_amalgamated.hpp"
#include "magicpovm/report.hpp"
#include "support.hpp"

using namespace magicpovm;
using testsupport::Gen;
using testsupport::preset_povm;

namespace {

IncidenceStructure structure(const std::vector<std::vector<std::size_t>>& lines, std::size_t points) {
  std::vector<Block> blocks;
  for (auto l : lines) {
    std::sort(l.begin(), l.end());
    Block b;
    b.indices = l;
    b.cycle = l;
    blocks.push_back(b);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points; ++i) labels.push_back("p" + std::to_string(i));
  return make_structure(blocks, labels);
}

std::vector<std::vector<std::size_t>> relabel(const std::vector<std::vector<std::size_t>>& lines, const std::vector<std::size_t>& perm) {
  auto out = lines;
  for (auto& l : out)
    for (auto& x : l) x = perm[x];
  return out;
}

TupleQuery query(std::initializer_list<const char*> traces, std::size_t k = 3) {
  TupleQuery q;
  q.k = k;
  for (const char* t : traces) q.targets.push_back(parse_cyclotomic(t));
  return q;
}

// Triples whose dense matrix-product trace equals t or its conjugate.
std::size_t dense_count(const Povm& p, const Cyclotomic& t) {
  std::vector<ExactMatrix> proj;
  for (std::size_t i = 0; i < p.size(); ++i) proj.push_back(p.projector(i));
  std::size_t n = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      for (std::size_t c = b + 1; c < p.size(); ++c) {
        Cyclotomic v = testsupport::matrix_triple_trace(proj[a], proj[b], proj[c]);
        n += v == t || v.conj() == t;
      }
  return n;
}

const std::vector<std::vector<std::size_t>> kPappus = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 4, 6}, {1, 3, 6},
                                                        {0, 5, 7}, {2, 3, 7}, {1, 5, 8}, {2, 4, 8}};

}  // namespace

TEST_CASE("qutrit (0,1,-1): the -1/8 triples form the Hesse configuration") {
  Povm p = preset_povm("hesse-minus");
  auto g = run_geometry(p, query({"-1/8"}), PhaseFilter::none);
  CHECK(g.candidates.size() == 12);
  CHECK(dense_count(p, parse_cyclotomic("-1/8")) == 12);
  CHECK(config_type(g.structure).str() == "[9_4, 12_3]");
  CHECK(is_hesse(g.structure));
  CHECK(named_detectors(g.structure) == std::vector<std::string>{"Hesse"});
  // No triple of this orbit has trace +1/8.
  CHECK(run_geometry(p, query({"1/8"}), PhaseFilter::none).candidates.empty());
  CHECK(dense_count(p, parse_cyclotomic("1/8")) == 0);
}

TEST_CASE("qutrit (0,1,1): +1/8 gives Pappus, both signs give Hesse") {
  Povm p = preset_povm("hesse-plus");
  auto plus = run_geometry(p, query({"1/8"}), PhaseFilter::none);
  CHECK(plus.lines.size() == 9);
  CHECK(dense_count(p, parse_cyclotomic("1/8")) == 9);
  CHECK(config_type(plus.structure).str() == "[9_3]");
  CHECK(is_pappus(plus.structure));
  auto both = run_geometry(p, query({"1/8", "-1/8"}), PhaseFilter::none);
  CHECK(both.lines.size() == 12);
  CHECK(is_hesse(both.structure));
}

TEST_CASE("Pappus detection is invariant under relabeling and rejects the other 9_3") {
  Gen g(53);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::size_t> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = 8; i > 0; --i) std::swap(perm[i], perm[static_cast<std::size_t>(g.integer(0, static_cast<long>(i)))]);
    auto s = structure(relabel(kPappus, perm), 9);
    auto iso = pappus_isomorphism(s);
    REQUIRE(iso.has_value());
    // The bijection really maps lines to lines.
    std::set<std::vector<std::size_t>> canon(kPappus.begin(), kPappus.end());
    for (const auto& b : s.lines) {
      std::vector<std::size_t> img;
      for (std::size_t x : b.indices) img.push_back((*iso)[s.point_position(x)]);
      std::sort(img.begin(), img.end());
      CHECK(canon.count(img) == 1);
    }
  }
  std::vector<std::vector<std::size_t>> cyclic;
  for (std::size_t i = 0; i < 9; ++i) cyclic.push_back({i, (i + 1) % 9, (i + 3) % 9});
  auto c = structure(cyclic, 9);
  CHECK(config_type(c).str() == "[9_3]");
  CHECK_FALSE(is_pappus(c));
}

TEST_CASE("Pasch configuration") {
  auto s = structure({{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}}, 6);
  CHECK(is_pasch(s));
  CHECK(config_type(s).str() == "[6_2, 4_3]");
  CHECK_FALSE(is_pasch(structure({{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {0, 4, 5}}, 6)));
  CHECK_FALSE(is_pasch(structure({{0, 1, 2}, {3, 4, 5}}, 6)));
}

TEST_CASE("configuration strings") {
  CHECK(config_type(structure(kPappus, 9)).str() == "[9_3]");
  auto odd = structure({{0, 1, 2}, {0, 3}}, 4);
  CHECK_FALSE(config_type(odd).uniform);
  CHECK(config_type(odd).str().rfind("non-uniform", 0) == 0);
}

TEST_CASE("two-qubit state: the Mermin square") {
  Povm p = preset_povm("d4");
  auto g = run_geometry(p, query({"1/27", "-1/27"}), PhaseFilter::pm1);
  CHECK(g.candidates.size() == 96);
  CHECK(dense_count(p, parse_cyclotomic("1/27")) + dense_count(p, parse_cyclotomic("-1/27")) == 96);
  CHECK(g.lines.size() == 6);
  CHECK(config_type(g.structure).str() == "[9_2, 6_3]");
  CHECK(is_mermin_square(g.structure));
  for (const auto& b : g.lines) {
    REQUIRE(b.op_phase.has_value());
    CHECK((*b.op_phase == Cyclotomic(1) || *b.op_phase == Cyclotomic(-1)));
    CHECK(operators_commute(p, b));
  }
}

TEST_CASE("trace census accounts for every triple") {
  Povm p = preset_povm("d4");
  std::size_t total = 0, pm = 0;
  for (const auto& c : trace_census(p, 3)) {
    total += c.count;
    if (c.value == Cyclotomic(Rational(1, 27)) || c.value == Cyclotomic(Rational(-1, 27))) pm += c.count;
  }
  CHECK(total == 560);
  CHECK(pm == 96);
}

TEST_CASE("graphs derived from an incidence structure") {
  auto s = structure(kPappus, 9);
  CHECK(collinearity_graph(s).size() == 27);
  SimpleGraph inc = incidence_graph(s);
  CHECK(inc.order() == 18);
  CHECK(inc.size() == 27);
  CHECK(intersection_graph(s, 1).size() == 27);
  CHECK(components(s).size() == 1);
  auto two = structure({{0, 1, 2}, {3, 4, 5}}, 6);
  CHECK(components(two).size() == 2);
  auto sub = restrict_lines(s, {0, 1});
  CHECK(sub.lines.size() == 2);
  CHECK(sub.points.size() == 6);
}

TEST_CASE("tuple queries validate their input") {
  Povm p = preset_povm("hesse-minus");
  CHECK_THROWS_AS(tuple_traces(p, query({"1/8"}, 5)), std::invalid_argument);
  CHECK(phase_allowed(PhaseFilter::omega3, Cyclotomic::zeta(3)));
  CHECK_FALSE(phase_allowed(PhaseFilter::pm1, Cyclotomic::zeta(3)));
  CHECK(phase_allowed(PhaseFilter::any, Cyclotomic::zeta(7)));
}
