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
#include "magicpovm/search.hpp"
#include "support.hpp"

using namespace magicpovm;
using testsupport::catalog;
using testsupport::Gen;

namespace {

PermGate random_perm(Gen& g, int d) {
  std::vector<int> im(static_cast<std::size_t>(d));
  std::iota(im.begin(), im.end(), 0);
  for (int i = d - 1; i > 0; --i) std::swap(im[static_cast<std::size_t>(i)], im[static_cast<std::size_t>(g.integer(0, i))]);
  return PermGate(im);
}

std::size_t derangements(int n) { return n == 0 ? 1 : n == 1 ? 0 : (n - 1) * (derangements(n - 1) + derangements(n - 2)); }

}  // namespace

TEST_CASE("permutation parsing in cycle and one-line notation") {
  CHECK(parse_permutation("(1,2,3)", 4).image() == std::vector<int>{1, 2, 0, 3});
  CHECK(parse_permutation("(1,2)(3,4)", 4).image() == std::vector<int>{1, 0, 3, 2});
  CHECK(parse_permutation("(2,3,1)", 3).image() == std::vector<int>{1, 2, 0});
  CHECK(parse_permutation("[2,3,4,5,1]", 5).order() == 5);
  CHECK(parse_permutation("(1,2,3,4,5)", 5) == PermGate::identity(5));
  CHECK(parse_permutation("()", 3) == PermGate::identity(3));
  CHECK_THROWS(parse_permutation("(1,7)", 4));
  CHECK_THROWS(parse_permutation("(1,2", 4));
  CHECK_THROWS(parse_permutation("[1,1,2]", 3));
}

TEST_CASE("cycles, printing and composition") {
  Gen g(41);
  for (int t = 0; t < 100; ++t) {
    const int d = static_cast<int>(g.integer(2, 9));
    PermGate a = random_perm(g, d), b = random_perm(g, d);
    CHECK(parse_permutation(to_string(a), d) == a);
    CHECK((a * b).matrix() == mat_mul(a.matrix(), b.matrix()));
    CHECK(a * a.inverse() == PermGate::identity(d));
    std::size_t covered = 0;
    int order = 1;
    for (const auto& c : a.cycles()) {
      covered += c.size();
      order = std::lcm(order, static_cast<int>(c.size()));
      CHECK(c.front() == *std::min_element(c.begin(), c.end()));
    }
    CHECK(covered == static_cast<std::size_t>(d));
    CHECK(a.order() == order);
    PermGate p = PermGate::identity(d);
    for (int k = 0; k < order; ++k) p = p * a;
    CHECK(p == PermGate::identity(d));
  }
}

TEST_CASE("magic gates have exactly one fixed point") {
  for (int d : {3, 4, 5, 6}) {
    auto gates = detail::all_gates(d, true);
    CHECK(gates.size() == static_cast<std::size_t>(d) * derangements(d - 1));
    for (const auto& p : gates) CHECK(p.fixed_points() == 1);
  }
  CHECK(detail::all_gates(3, true).size() == 3);
  CHECK(detail::all_gates(4, true).size() == 8);
  CHECK(detail::all_gates(5, true).size() == 45);
}

TEST_CASE("eigenstates are eigenvectors of the permutation matrix") {
  Gen g(43);
  for (int t = 0; t < 40; ++t) {
    const int d = static_cast<int>(g.integer(2, 8));
    PermGate p = random_perm(g, d);
    std::size_t total = 0;
    for (const auto& space : eigenstates(p)) {
      for (const auto& v : space.basis) {
        ExactVector pv = mat_vec(p.matrix(), v);
        ExactVector lv(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) lv[i] = space.eigenvalue * v[i];
        CHECK(pv == lv);
        ++total;
      }
    }
    CHECK(total == static_cast<std::size_t>(d));
  }
}

TEST_CASE("groups generated by the catalog generators have the listed orders") {
  for (const auto& preset : catalog().presets) {
    if (preset.generators.size() != 2 || !preset.expected.contains("group_order")) continue;
    const int d = static_cast<int>(preset.dimension);
    PermGate a = parse_permutation(preset.generators[0], d), b = parse_permutation(preset.generators[1], d);
    if (!preset.relaxed) {
      CHECK(is_magic_gate(a));
      CHECK(is_magic_gate(b));
    }
    MagicGroup grp = generate_group(a, b, 5000);
    INFO(preset.name);
    CHECK(grp.fingerprint.order == preset.expected.at("group_order").at("value").get<std::size_t>());
    CHECK(grp.elements.front() == PermGate::identity(d));
    // Closed under products.
    std::set<PermGate> elems(grp.elements.begin(), grp.elements.end());
    for (std::size_t k = 0; k < std::min<std::size_t>(grp.elements.size(), 20); ++k)
      CHECK(elems.count(grp.elements[k] * a) == 1);
  }
  CHECK(generate_group(parse_permutation("(2,3)", 3), parse_permutation("(1,2)", 3), 100).fingerprint.order == 6);
  CHECK_THROWS_AS(generate_group(parse_permutation("(1,2)", 6), parse_permutation("[2,3,4,5,6,1]", 6), 100), GroupCapExceeded);
}

TEST_CASE("stabilizer detection") {
  PauliSpec q({3});
  CHECK(is_stabilizer_state(testsupport::vec("(1,0,0)"), q));
  CHECK(is_stabilizer_state(testsupport::vec("(1,1,1)"), q));
  CHECK_FALSE(is_stabilizer_state(testsupport::vec("(0,1,-1)"), q));
  CHECK(stabilizer_count(testsupport::vec("(0,1,-1)"), q) < 3);
  PauliSpec qq({2, 2});
  CHECK(is_stabilizer_state(testsupport::vec("(1,0,0,1)"), qq));
}

TEST_CASE("the qutrit magic states appear among S3 candidates") {
  MagicGroup g = generate_group(parse_permutation("(2,3)", 3), parse_permutation("(1,2)", 3), 100);
  auto cands = candidate_states(g, 1, PauliSpec({3}));
  bool minus = false;
  for (const auto& c : cands) {
    CHECK_FALSE(is_stabilizer_state(c.vector, PauliSpec({3})));
    minus = minus || projectively_equal(c.vector, testsupport::vec("(0,1,-1)"));
  }
  CHECK(minus);
  CHECK(projective_normal_form(testsupport::vec("(0, 2, -2)")) == testsupport::vec("(0, 1, -1)"));
}
