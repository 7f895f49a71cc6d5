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

#include "catch_amalgamated.hpp"
#include "support.hpp"

using namespace magicpovm;
using testsupport::preset_povm;
using testsupport::vec;

namespace {

ExactMatrix projector_sum(const Povm& p) {
  ExactMatrix s(p.dimension(), p.dimension());
  for (std::size_t i = 0; i < p.size(); ++i) s = s + p.projector(i);
  return s;
}

std::vector<Cyclotomic> values(const Povm& p) {
  std::vector<Cyclotomic> out;
  for (const auto& v : p.pair_spectrum()) out.push_back(v.value);
  return out;
}

bool same_set(std::vector<Cyclotomic> a, const std::vector<std::string>& literals) {
  if (a.size() != literals.size()) return false;
  for (const auto& l : literals) {
    Cyclotomic x = parse_cyclotomic(l);
    auto it = std::find(a.begin(), a.end(), x);
    if (it == a.end()) return false;
    a.erase(it);
  }
  return true;
}

}  // namespace

TEST_CASE("qubit T orbit is a SIC") {
  Povm p = preset_povm("T-qubit");
  CHECK(projector_sum(p) == Cyclotomic(2) * ExactMatrix::identity(2));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(trace(mat_mul(p.projector(i), p.projector(j))) == Cyclotomic(Rational(1, 3)));
  CHECK(p.gram_rank() == 4);
  CHECK(p.classification().str() == "SIC");
  CHECK(p.informationally_complete());
}

TEST_CASE("Born probabilities and reconstruction for the qubit SIC") {
  Povm p = preset_povm("T-qubit");
  ExactMatrix rho = p.projector(0);
  auto probs = born(rho, p);
  CHECK(probs[0] == Cyclotomic(Rational(1, 2)));
  for (std::size_t i = 1; i < 4; ++i) CHECK(probs[i] == Cyclotomic(Rational(1, 6)));
  Cyclotomic total;
  for (const auto& x : probs) total += x;
  CHECK(total == Cyclotomic(1));
  CHECK(reconstruct(p, probs) == rho);
  ExactMatrix mixed = Cyclotomic(Rational(1, 2)) * ExactMatrix::identity(2);
  for (const auto& x : born(mixed, p)) CHECK(x == Cyclotomic(Rational(1, 4)));
  CHECK_THROWS_AS(born(ExactMatrix::identity(2), p), std::invalid_argument);
}

TEST_CASE("qubit H orbit is a POVM that is not informationally complete") {
  Povm p = preset_povm("H-qubit");
  CHECK(p.valid());
  CHECK(projector_sum(p) == Cyclotomic(2) * ExactMatrix::identity(2));
  CHECK(p.gram_rank() == 3);
  CHECK(p.classification().str() == "not_ic");
  CHECK_THROWS_AS(reconstruct(p, std::vector<Cyclotomic>(4, Cyclotomic(Rational(1, 4)))), std::invalid_argument);
}

TEST_CASE("qutrit magic states give the Hesse SIC") {
  for (const char* name : {"hesse-minus", "hesse-plus"}) {
    Povm p = preset_povm(name);
    CHECK(p.classification().str() == "SIC");
    CHECK(p.gram_rank() == 9);
    CHECK(same_set(values(p), {"1/4"}));
    CHECK(projector_sum(p) == Cyclotomic(3) * ExactMatrix::identity(3));
    CHECK(p.pair_spectrum().front().multiplicity == 36);
  }
}

TEST_CASE("d=5 real state has three trace values of one field-norm angle") {
  Povm p = preset_povm("d5-equi-real");
  CHECK(p.gram_rank() == 25);
  CHECK(same_set(values(p), {"1/16", "(7 + 3*(z5 - z5^2 - z5^3 + z5^4))/32", "(7 - 3*(z5 - z5^2 - z5^3 + z5^4))/32"}));
  // sqrt 5 appears as z5 - z5^2 - z5^3 + z5^4.
  Cyclotomic s5 = parse_cyclotomic("z5 - z5^2 - z5^3 + z5^4");
  CHECK(s5 * s5 == Cyclotomic(5));
  REQUIRE(p.angle_spectrum().size() == 1);
  CHECK(p.angle_spectrum().front().angle_sq == Rational(1, 16));
  CHECK(p.classification().str() == "equiangular_by_norm");
}

TEST_CASE("(0,1,1,1,1) has two field-norm angle classes") {
  Povm p = preset_povm("d5-ones");
  CHECK(p.informationally_complete());
  CHECK(p.pair_spectrum().size() == 4);
  REQUIRE(p.angle_spectrum().size() == 2);
  CHECK(p.angle_spectrum()[0].angle_sq == Rational(1, 16));
  CHECK(p.angle_spectrum()[1].angle_sq == Rational(9, 16));
  CHECK(p.classification().str() == "dichotomic_by_norm");
}

TEST_CASE("stabilizer fiducials are not informationally complete") {
  Povm p = build_povm(Fiducial::from_vector(vec("(1, 0, 0)"), PauliSpec({3})));
  CHECK(p.valid());
  CHECK(p.gram_rank() < 9);
  CHECK(p.classification().str() == "not_ic");
}

TEST_CASE("a partial orbit is not a POVM") {
  PauliSpec s({3});
  auto reps = cosets(s);
  reps.resize(4);
  Povm p = build_povm(Fiducial::from_vector(vec("(0, 1, -1)"), s), reps);
  CHECK_FALSE(p.valid());
  CHECK(p.classification().str() == "not_povm");
}

TEST_CASE("pair and cycle traces follow the inner-product shortcut") {
  Povm p = preset_povm("d4");
  for (std::size_t i = 0; i < p.size(); i += 5)
    for (std::size_t j = 0; j < p.size(); j += 3) {
      if (i == j) continue;
      CHECK(p.pair_trace(i, j) == trace(mat_mul(p.projector(i), p.projector(j))));
      CHECK(p.cycle_trace({i, j}) == p.pair_trace(i, j));
    }
  CHECK_THROWS_AS(p.pair_trace(0, 16), std::out_of_range);
  CHECK_THROWS_AS(p.hermitian_angle(1, 1), std::invalid_argument);
}

TEST_CASE("Hermitian angle of the d=7 preset is uniform") {
  Povm p = preset_povm("d7");
  CHECK(p.gram_rank() == 49);
  REQUIRE(p.angle_spectrum().size() == 1);
  CHECK(p.angle_spectrum().front().angle_sq == Rational(1, 36));
  auto [norm, angle] = p.hermitian_angle(0, 1);
  CHECK(std::abs(angle * angle - 1.0 / 36) < 1e-9);
  (void)norm;
}

TEST_CASE("fiducial input errors") {
  CHECK_THROWS_AS(build_povm(Fiducial::from_vector(vec("(0, 1)"), PauliSpec({3}))), ShapeError);
  CHECK_THROWS_AS(build_povm(Fiducial::from_vector(vec("(0, 0, 0)"), PauliSpec({3}))), std::invalid_argument);
  ExactMatrix notproj = ExactMatrix::identity(2);
  CHECK_THROWS_AS(build_povm(Fiducial::from_projector(notproj, PauliSpec({2}))), std::invalid_argument);
}
