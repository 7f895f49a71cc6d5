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

// Shared test helpers: catalog access, hand-rolled generators, and oracles
// that avoid the library code paths they check.

#ifndef MAGICPOVM_TESTS_SUPPORT_HPP
#define MAGICPOVM_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "magicpovm/catalog.hpp"
#include "magicpovm/cyclotomic.hpp"
#include "magicpovm/literal.hpp"
#include "magicpovm/matrix.hpp"
#include "magicpovm/povm.hpp"

namespace testsupport {

using namespace magicpovm;
using cplx = std::complex<double>;

inline const Catalog& catalog() {
  static const Catalog c = load_catalog(std::string(MAGICPOVM_DATA_DIR) + "/presets.json");
  return c;
}

inline Povm preset_povm(const std::string& name) { return build_povm(preset_fiducial(catalog().find(name))); }

inline ExactVector vec(const std::string& literal, int hint = 1) { return parse_vector_literal(literal, hint); }

// ---------------------------------------------------------------- generators

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }

  Rational rational(long num_bound = 9, long den_bound = 6) {
    Rational q(Integer(integer(-num_bound, num_bound)), Integer(integer(1, den_bound)));
    q.canonicalize();
    return q;
  }

  /// Random element of Q(zeta_n) with small coefficients on powers 0..n-1.
  Cyclotomic cyclotomic(int n, int terms = 3) {
    std::vector<Rational> raw(static_cast<std::size_t>(n));
    for (int t = 0; t < terms; ++t) raw[static_cast<std::size_t>(integer(0, n - 1))] += rational();
    return Cyclotomic::from_powers(n, raw);
  }

  Cyclotomic nonzero_cyclotomic(int n, int terms = 3) {
    for (;;) {
      Cyclotomic c = cyclotomic(n, terms);
      if (!c.is_zero()) return c;
    }
  }

  ExactVector vector(std::size_t d, int n, int terms = 2) {
    for (;;) {
      ExactVector v(d);
      bool nonzero = false;
      for (auto& e : v) {
        e = cyclotomic(n, terms);
        nonzero = nonzero || !e.is_zero();
      }
      if (nonzero) return v;
    }
  }

  /// Density matrix: convex combination of 1 to 3 rank-one projectors with rational weights.
  ExactMatrix density(std::size_t d, int n) {
    const int parts = static_cast<int>(integer(1, 3));
    std::vector<Rational> w;
    Rational total = 0;
    for (int k = 0; k < parts; ++k) {
      w.emplace_back(Integer(integer(1, 5)));
      total += w.back();
    }
    ExactMatrix rho(d, d);
    for (int k = 0; k < parts; ++k) {
      ExactVector v = vector(d, n);
      Cyclotomic scale = Cyclotomic(Rational(w[static_cast<std::size_t>(k)] / total)) / inner(v, v);
      rho = rho + scale * outer(v, v);
    }
    return rho;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------- oracles

/// Evaluates the power-basis coefficients at exp(2 pi i k / n) directly.
inline cplx evaluate(const Cyclotomic& a, long k = 1) {
  const int n = a.conductor();
  cplx acc = 0;
  for (int i = 0; i < a.degree(); ++i) {
    const double c = a.coeff(i).get_d();
    if (c == 0) continue;
    const double angle = 2 * std::numbers::pi * static_cast<double>((static_cast<long>(i) * k) % n) / n;
    acc += c * cplx(std::cos(angle), std::sin(angle));
  }
  return acc;
}

/// Product of all complex embeddings, computed numerically.
inline double numeric_norm(const Cyclotomic& a) {
  const int n = a.conductor();
  cplx prod = 1;
  for (long k = 1; k <= n; ++k)
    if (std::gcd(k, static_cast<long>(n)) == 1) prod *= evaluate(a, k);
  return prod.real();
}

/// Rank over Q by plain Gauss-Jordan on mpq entries (no fraction-free tricks).
inline std::size_t rational_rank_oracle(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Dense complex matrix of an exact one.
inline std::vector<std::vector<cplx>> numeric(const ExactMatrix& a) {
  std::vector<std::vector<cplx>> out(a.rows(), std::vector<cplx>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r][c] = evaluate(a(r, c));
  return out;
}

/// tr(P_a P_b P_c) from dense exact projector matrices.
inline Cyclotomic matrix_triple_trace(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c) {
  ExactMatrix ab = mat_mul(a, b);
  Cyclotomic t;
  for (std::size_t i = 0; i < ab.rows(); ++i)
    for (std::size_t k = 0; k < ab.cols(); ++k)
      if (!ab(i, k).is_zero() && !c(k, i).is_zero()) t += ab(i, k) * c(k, i);
  return t;
}

}  // namespace testsupport

#endif  // MAGICPOVM_TESTS_SUPPORT_HPP
