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
using testsupport::Gen;
using testsupport::rational_rank_oracle;

namespace {

ExactMatrix random_matrix(Gen& g, std::size_t rows, std::size_t cols, int n) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = g.cyclotomic(n, 2);
  return m;
}

// Rank over Q of the matrix with every entry replaced by its multiplication
// matrix on the power basis; equals phi(n) times the rank over Q(zeta_n).
std::size_t realified_rank(const ExactMatrix& a, int n) {
  const int phi = totient(n);
  std::vector<std::vector<Rational>> big(a.rows() * phi, std::vector<Rational>(a.cols() * phi));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      for (int t = 0; t < phi; ++t) {
        Cyclotomic col = (a(r, c) * Cyclotomic::zeta(n, t)).embed(n);
        for (int s = 0; s < phi; ++s) big[r * phi + s][c * phi + t] = col.coeff(s);
      }
  return rational_rank_oracle(std::move(big));
}

}  // namespace

TEST_CASE("rational rank agrees with plain Gauss-Jordan") {
  Gen g(3);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = static_cast<std::size_t>(g.integer(1, 7)), cols = static_cast<std::size_t>(g.integer(1, 7));
    const std::size_t inner_dim = static_cast<std::size_t>(g.integer(1, 7));
    ExactMatrix b = random_matrix(g, rows, inner_dim, 1), c = random_matrix(g, inner_dim, cols, 1);
    ExactMatrix a = mat_mul(b, c);
    std::vector<std::vector<Rational>> q(rows, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t k = 0; k < cols; ++k) q[r][k] = a(r, k).rational_value();
    CHECK(exact_rank(a) == rational_rank_oracle(q));
    CHECK(exact_rank(a) <= inner_dim);
  }
}

TEST_CASE("cyclotomic rank agrees with the realified rational rank") {
  Gen g(4);
  for (int n : {3, 4, 5, 8, 12}) {
    for (int t = 0; t < 12; ++t) {
      const std::size_t rows = static_cast<std::size_t>(g.integer(1, 5)), cols = static_cast<std::size_t>(g.integer(1, 5));
      const std::size_t k = static_cast<std::size_t>(g.integer(1, 4));
      ExactMatrix a = mat_mul(random_matrix(g, rows, k, n), random_matrix(g, k, cols, n));
      const std::size_t rank = exact_rank(a);
      INFO("n=" << n << " shape " << rows << "x" << cols << " inner " << k);
      CHECK(rank * static_cast<std::size_t>(totient(n)) == realified_rank(a, n));
    }
  }
}

TEST_CASE("basic matrix identities") {
  Gen g(8);
  ExactMatrix a = random_matrix(g, 3, 3, 12), b = random_matrix(g, 3, 3, 12);
  CHECK(adjoint(mat_mul(a, b)) == mat_mul(adjoint(b), adjoint(a)));
  CHECK(trace(mat_mul(a, b)) == trace(mat_mul(b, a)));
  CHECK(mat_mul(ExactMatrix::identity(3), a) == a);
  ExactMatrix k = kron(ExactMatrix::identity(2), a);
  CHECK(k.rows() == 6);
  CHECK(exact_rank(k) == 2 * exact_rank(a));
  ExactVector v = g.vector(3, 12);
  CHECK(mat_vec(outer(v, v), v) == ExactVector([&] {
          std::vector<Cyclotomic> e;
          Cyclotomic s = inner(v, v);
          for (const auto& x : v) e.push_back(x * s);
          return e;
        }()));
  CHECK(is_hermitian(outer(v, v)));
  CHECK(identity_multiple(Cyclotomic(Rational(3, 2)) * ExactMatrix::identity(4)) == Cyclotomic(Rational(3, 2)));
  CHECK_FALSE(identity_multiple(a).has_value());
  CHECK_THROWS_AS(mat_mul(random_matrix(g, 2, 3, 1), random_matrix(g, 2, 3, 1)), ShapeError);
}

TEST_CASE("integer spectrum of small graphs") {
  // K4: eigenvalues 3, -1^3
  ExactMatrix k4(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) k4(r, c) = r == c ? 0 : 1;
  auto s = integer_spectrum(k4, {3, -1, 0, 1});
  CHECK(s.multiplicity[3] == 1);
  CHECK(s.multiplicity[-1] == 3);
  CHECK(s.multiplicity[0] == 0);
  CHECK(s.complete());
  // 5-cycle has irrational eigenvalues besides 2.
  ExactMatrix c5(5, 5);
  for (std::size_t i = 0; i < 5; ++i) c5(i, (i + 1) % 5) = c5((i + 1) % 5, i) = 1;
  auto t = integer_spectrum(c5, {-2, -1, 0, 1, 2});
  CHECK(t.multiplicity[2] == 1);
  CHECK(t.accounted == 1);
  CHECK_FALSE(t.complete());
  ExactMatrix asym(2, 2);
  asym(0, 1) = 1;
  CHECK_THROWS_AS(integer_spectrum(asym, {0}), std::invalid_argument);
}
