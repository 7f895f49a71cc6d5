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
using testsupport::evaluate;
using testsupport::Gen;

namespace {

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

}  // namespace

TEST_CASE("cyclotomic polynomials have the expected low-order coefficients") {
  CHECK(detail::cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(detail::cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
  CHECK(detail::cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(detail::cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (int n : {5, 7, 8, 9, 20, 21, 24}) CHECK(static_cast<int>(detail::cyclotomic_polynomial(n).size()) == totient(n) + 1);
}

TEST_CASE("roots of unity obey their defining relations") {
  CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(-1));
  Cyclotomic w = Cyclotomic::zeta(3);
  CHECK(Cyclotomic(1) + w + w * w == Cyclotomic(0));
  CHECK(Cyclotomic::zeta(6) == -(w * w));
  CHECK(Cyclotomic::zeta(12, 3) == Cyclotomic::zeta(4));
  CHECK(Cyclotomic::zeta(8) * Cyclotomic::zeta(8, -1) == Cyclotomic(1));
  // sqrt(2) = z8 + z8^7, sqrt(5) = 1 + 2(z5 + z5^4)
  Cyclotomic s2 = Cyclotomic::zeta(8) + Cyclotomic::zeta(8, 7);
  CHECK(s2 * s2 == Cyclotomic(2));
  Cyclotomic s5 = Cyclotomic(1) + Cyclotomic(2) * (Cyclotomic::zeta(5) + Cyclotomic::zeta(5, 4));
  CHECK(s5 * s5 == Cyclotomic(5));
}

TEST_CASE("ring operations agree with numeric evaluation") {
  Gen g(11);
  for (int n : {3, 4, 5, 8, 9, 12, 15, 20, 21, 24}) {
    for (int t = 0; t < 40; ++t) {
      Cyclotomic a = g.cyclotomic(n), b = g.nonzero_cyclotomic(n);
      INFO("n=" << n << " a=" << to_string(a) << " b=" << to_string(b));
      CHECK(close((a + b).to_complex(), evaluate(a) + evaluate(b)));
      CHECK(close((a - b).to_complex(), evaluate(a) - evaluate(b)));
      CHECK(close((a * b).to_complex(), evaluate(a) * evaluate(b)));
      CHECK(close((a / b).to_complex(), evaluate(a) / evaluate(b), 1e-7));
      CHECK(close(a.conj().to_complex(), std::conj(evaluate(a))));
      CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("mixed conductors compare through a common embedding") {
  Gen g(5);
  for (int t = 0; t < 50; ++t) {
    Cyclotomic a = g.cyclotomic(3), b = g.cyclotomic(4);
    Cyclotomic s = a + b;
    CHECK(s.conductor() % 12 == 0);
    CHECK(s - b == a);
    CHECK(a.embed(12) == a);
    CHECK(a.embed(24).conductor() == 24);
  }
  CHECK(Cyclotomic(Rational(1, 2)) == Cyclotomic(Rational(1, 2), 20));
  CHECK_FALSE(Cyclotomic::zeta(3) == Cyclotomic::zeta(3).conj());
}

TEST_CASE("galois action is a ring automorphism") {
  Gen g(17);
  for (int n : {5, 12, 21}) {
    for (int t = 0; t < 30; ++t) {
      Cyclotomic a = g.cyclotomic(n).embed(n), b = g.cyclotomic(n).embed(n);
      for (long k = 1; k < n; ++k) {
        if (std::gcd(k, static_cast<long>(n)) != 1) continue;
        CHECK((a * b).embed(n).galois(k) == a.galois(k) * b.galois(k));
        CHECK(close(a.galois(k).to_complex(), evaluate(a, k)));
      }
    }
  }
  CHECK_THROWS_AS(Cyclotomic::zeta(12).galois(3), std::invalid_argument);
}

TEST_CASE("field norm matches the product of numeric embeddings") {
  Gen g(23);
  for (int n : {3, 4, 5, 7, 8, 12, 20}) {
    for (int t = 0; t < 30; ++t) {
      Cyclotomic a = g.cyclotomic(n).embed(n);
      const double num = testsupport::numeric_norm(a);
      CHECK(std::abs(field_norm(a).get_d() - num) <= 1e-6 * std::max(1.0, std::abs(num)));
    }
  }
  CHECK(field_norm(Cyclotomic(Rational(1, 2), 5)) == Rational(1, 16));
  CHECK(field_norm(Cyclotomic::zeta(7)) == 1);
}

TEST_CASE("inverse of zero is rejected") {
  CHECK_THROWS_AS(Cyclotomic(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Cyclotomic::zero(5) / Cyclotomic::zero(5), std::domain_error);
}

TEST_CASE("literals parse and print round trip") {
  CHECK(parse_cyclotomic("i^2") == Cyclotomic(-1));
  CHECK(parse_cyclotomic("w3 + w3^2") == Cyclotomic(-1));
  CHECK(parse_cyclotomic("z6 - 1") == parse_cyclotomic("z3"));
  CHECK(parse_cyclotomic("-1/27") == Cyclotomic(Rational(-1, 27)));
  CHECK(parse_cyclotomic("(1 + i)^-1") == parse_cyclotomic("(1 - i)/2"));
  CHECK(parse_cyclotomic("2*(3 - z5)^0") == Cyclotomic(2));
  CHECK(parse_cyclotomic("1/2", 12).conductor() == 12);
  Gen g(29);
  for (int n : {3, 4, 8, 12, 20, 21}) {
    for (int t = 0; t < 25; ++t) {
      Cyclotomic a = g.cyclotomic(n);
      CHECK(parse_cyclotomic(to_string(a)) == a);
    }
  }
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
}

TEST_CASE("malformed literals raise parse errors") {
  for (const char* bad : {"", "1 +", "z", "(1", "1)", "q", "2^x", "z0", "1/0"}) {
    INFO(bad);
    CHECK_THROWS(parse_cyclotomic(bad));
  }
  CHECK_THROWS_AS(parse_rational("i"), ParseError);
}

TEST_CASE("tuple splitting respects nesting") {
  CHECK(split_tuple("(0, 1, -1)") == std::vector<std::string>{"0", "1", "-1"});
  CHECK(split_tuple("(1+i)/2, (z3 - 1)") == std::vector<std::string>{"(1+i)/2", "(z3 - 1)"});
  CHECK(split_tuple("()").empty());
}
