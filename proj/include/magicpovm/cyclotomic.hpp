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

#ifndef MAGICPOVM_CYCLOTOMIC_HPP
#define MAGICPOVM_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace magicpovm {

using Rational = mpq_class;
using Integer = mpz_class;

/// Euler's totient.
inline int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

/// Per-conductor lookup tables. Built once, never mutated afterwards.
struct FieldTable {
  int n = 1;
  int phi = 1;
  std::vector<long> cyclotomic_poly;          // Phi_n, low degree first, monic
  std::vector<std::vector<long>> power;       // x^k mod Phi_n for 0 <= k < n
  std::vector<int> units;                     // 1 <= k < n, gcd(k, n) = 1 (k=1 first)
  std::vector<std::complex<double>> zeta_pow; // exp(2 pi i k / n)
};

// Exact division of integer polynomials by a monic divisor.
inline std::vector<long> poly_divide_monic(std::vector<long> num,
                                           const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t k = num.size() - 1; k + 1 > dn; --k) {
    long c = num[k];
    quot[k - dn] = c;
    if (c != 0) {
      for (std::size_t t = 0; t <= dn; ++t) num[k - dn + t] -= c * den[t];
    }
    if (k == dn) break;
  }
  for (std::size_t t = 0; t < dn; ++t) {
    if (num[t] != 0) throw std::logic_error("cyclotomic polynomial division is not exact");
  }
  return quot;
}

inline std::vector<long> cyclotomic_polynomial(int n);

inline std::vector<long> cyclotomic_polynomial_uncached(int n) {
  std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) poly = poly_divide_monic(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

inline std::unique_ptr<FieldTable> build_field(int n) {
  auto table = std::make_unique<FieldTable>();
  table->n = n;
  table->phi = totient(n);
  table->cyclotomic_poly = cyclotomic_polynomial_uncached(n);
  const int phi = table->phi;
  table->power.assign(static_cast<std::size_t>(n), std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (int k = 0; k < n; ++k) {
    table->power[k] = cur;
    // cur <- x * cur mod Phi_n
    long top = cur[phi - 1];
    for (int t = phi - 1; t > 0; --t) cur[t] = cur[t - 1];
    cur[0] = 0;
    if (top != 0) {
      for (int t = 0; t < phi; ++t) cur[t] -= top * table->cyclotomic_poly[t];
    }
  }
  for (int k = 1; k <= std::max(1, n - 1); ++k) {
    if (std::gcd(k, n) == 1) table->units.push_back(k);
  }
  table->zeta_pow.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n;
    table->zeta_pow[k] = {std::cos(angle), std::sin(angle)};
  }
  return table;
}

inline std::mutex& field_registry_mutex() {
  static std::mutex m;
  return m;
}

inline std::map<int, std::unique_ptr<FieldTable>>& field_registry() {
  static std::map<int, std::unique_ptr<FieldTable>> registry;
  return registry;
}

inline const FieldTable& field(int n) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  {
    std::lock_guard<std::mutex> lock(field_registry_mutex());
    auto it = field_registry().find(n);
    if (it != field_registry().end()) return *it->second;
  }
  // Built outside the lock: construction recurses into smaller conductors.
  auto built = build_field(n);
  std::lock_guard<std::mutex> lock(field_registry_mutex());
  auto [it, inserted] = field_registry().try_emplace(n, std::move(built));
  return *it->second;
}

inline std::vector<long> cyclotomic_polynomial(int n) { return field(n).cyclotomic_poly; }

inline void addmul_si(mpz_class& acc, const mpz_class& x, long c) {
  if (c > 0) {
    mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(c));
  } else if (c < 0) {
    mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-c));
  }
}

}  // namespace detail

/// Exact element of the cyclotomic field Q(zeta_n).
///
/// Stored as integer numerators over a common positive denominator in the
/// power basis 1, z, ..., z^(phi(n)-1) reduced modulo Phi_n. The numerators and
/// denominator are kept coprime, so the representation at a fixed conductor is
/// canonical. Operands at different conductors are embedded into the lcm field.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(rationals()) {}
  Cyclotomic(long value) : Cyclotomic(Rational(value)) {}  // NOLINT
  Cyclotomic(int value) : Cyclotomic(Rational(value)) {}   // NOLINT
  Cyclotomic(const Rational& value, int conductor = 1)     // NOLINT
      : field_(&detail::field(conductor)), num_(field_->phi) {
    Rational q = value;
    q.canonicalize();
    num_[0] = q.get_num();
    den_ = q.get_den();
  }

  static Cyclotomic zero(int conductor) { return Cyclotomic(&detail::field(conductor)); }

  /// zeta_n^k.
  static Cyclotomic zeta(int n, long k = 1) {
    const auto& f = detail::field(n);
    long e = ((k % n) + n) % n;
    Cyclotomic r = zero(n);
    const auto& row = f.power[static_cast<std::size_t>(e)];
    for (int t = 0; t < f.phi; ++t) r.num_[t] = row[t];
    return r;
  }

  /// Reduces sum_k raw[k] zeta_n^k to canonical form. raw may have any length.
  static Cyclotomic from_powers(int n, std::span<const Rational> raw) {
    const auto& f = detail::field(n);
    Integer den = 1;
    for (const auto& q : raw) den = lcm(den, Integer(q.get_den()));
    Cyclotomic r = zero(n);
    r.den_ = den;
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (sgn(raw[k]) == 0) continue;
      Integer scaled = raw[k].get_num() * (den / raw[k].get_den());
      const auto& row = f.power[k % static_cast<std::size_t>(n)];
      for (int t = 0; t < f.phi; ++t) detail::addmul_si(r.num_[t], scaled, row[t]);
    }
    r.normalize();
    return r;
  }

  /// Builds from coefficients already in the reduced basis (length phi(n)).
  static Cyclotomic from_basis(int n, std::span<const Rational> coeffs) {
    const auto& f = detail::field(n);
    if (static_cast<int>(coeffs.size()) != f.phi) {
      throw std::invalid_argument("basis coefficient count must equal phi(n)");
    }
    return from_powers(n, coeffs);
  }

  int conductor() const noexcept { return field_->n; }
  int degree() const noexcept { return field_->phi; }
  const Integer& denominator() const noexcept { return den_; }
  const std::vector<Integer>& numerators() const noexcept { return num_; }

  Rational coeff(int i) const {
    Rational q(num_.at(static_cast<std::size_t>(i)), den_);
    q.canonicalize();
    return q;
  }

  std::vector<Rational> coeffs() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (int i = 0; i < degree(); ++i) out.push_back(coeff(i));
    return out;
  }

  bool is_zero() const noexcept {
    for (const auto& c : num_) {
      if (sgn(c) != 0) return false;
    }
    return true;
  }

  bool is_one() const noexcept { return is_rational() && num_[0] == 1 && den_ == 1; }

  bool is_rational() const noexcept {
    for (std::size_t i = 1; i < num_.size(); ++i) {
      if (sgn(num_[i]) != 0) return false;
    }
    return true;
  }

  Rational rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
    return coeff(0);
  }

  /// Same number represented over Q(zeta_m). Requires n | m.
  Cyclotomic embed(int m) const {
    const int n = conductor();
    if (m == n) return *this;
    if (m < 1 || m % n != 0) throw std::invalid_argument("embed: conductor must divide target");
    const auto& f = detail::field(m);
    const long step = m / n;
    Cyclotomic r = zero(m);
    r.den_ = den_;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (sgn(num_[i]) == 0) continue;
      const auto& row = f.power[static_cast<std::size_t>((static_cast<long>(i) * step) % m)];
      for (int t = 0; t < f.phi; ++t) detail::addmul_si(r.num_[t], num_[i], row[t]);
    }
    r.normalize();
    return r;
  }

  /// Field automorphism zeta_n -> zeta_n^k.
  Cyclotomic galois(long k) const {
    const int n = conductor();
    long kk = ((k % n) + n) % n;
    if (std::gcd(kk, static_cast<long>(n)) != 1) {
      throw std::invalid_argument("galois: exponent must be coprime to the conductor");
    }
    if (is_rational()) return *this;
    Cyclotomic r(field_);
    r.den_ = den_;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (sgn(num_[i]) == 0) continue;
      const auto& row = field_->power[static_cast<std::size_t>((static_cast<long>(i) * kk) % n)];
      for (int t = 0; t < field_->phi; ++t) detail::addmul_si(r.num_[t], num_[i], row[t]);
    }
    r.normalize();
    return r;
  }

  Cyclotomic conj() const { return conductor() <= 2 ? *this : galois(conductor() - 1); }

  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return Cyclotomic(1 / coeff(0), conductor());
    Cyclotomic cofactor(Rational(1), conductor());
    for (int k : field_->units) {
      if (k != 1) cofactor *= galois(k);
    }
    Rational norm = (*this * cofactor).rational_value();
    return cofactor * Cyclotomic(1 / norm, conductor());
  }

  std::complex<double> to_complex() const {
    std::complex<double> acc = 0;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (sgn(num_[i]) == 0) continue;
      acc += Rational(num_[i], den_).get_d() * field_->zeta_pow[i];
    }
    return acc;
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = add(*this, o, false); }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = add(*this, o, true); }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = mul(*this, o); }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = mul(*this, o.inverse()); }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) { return add(a, b, false); }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return add(a, b, true); }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) { return mul(a, b); }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return mul(a, b.inverse()); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.field_ == b.field_) return a.den_ == b.den_ && a.num_ == b.num_;
    const int m = std::lcm(a.conductor(), b.conductor());
    Cyclotomic ea = a.embed(m);
    Cyclotomic eb = b.embed(m);
    return ea.den_ == eb.den_ && ea.num_ == eb.num_;
  }

  /// Total order on representations (conductor, denominator, numerators); not numeric.
  bool representation_before(const Cyclotomic& b) const {
    if (conductor() != b.conductor()) return conductor() < b.conductor();
    if (den_ != b.den_) return den_ < b.den_;
    for (std::size_t i = 0; i < num_.size(); ++i) {
      int c = cmp(num_[i], b.num_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

 private:
  const detail::FieldTable* field_;
  std::vector<Integer> num_;
  Integer den_{1};

  explicit Cyclotomic(const detail::FieldTable* f) : field_(f), num_(f->phi) {}

  static const detail::FieldTable* rationals() {
    static const detail::FieldTable* q = &detail::field(1);
    return q;
  }

  void normalize() {
    bool zero = true;
    for (const auto& c : num_) {
      if (sgn(c) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) {
      den_ = 1;
      return;
    }
    if (sgn(den_) < 0) {
      den_ = -den_;
      for (auto& c : num_) c = -c;
    }
    if (den_ == 1) return;
    Integer g = den_;
    for (const auto& c : num_) {
      if (sgn(c) == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) return;
    }
    den_ /= g;
    for (auto& c : num_) {
      if (sgn(c) != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }

  static void align(const Cyclotomic*& a, const Cyclotomic*& b, std::optional<Cyclotomic>& sa,
                    std::optional<Cyclotomic>& sb) {
    if (a->field_ == b->field_) return;
    const int m = std::lcm(a->conductor(), b->conductor());
    if (a->conductor() != m) {
      sa = a->embed(m);
      a = &*sa;
    }
    if (b->conductor() != m) {
      sb = b->embed(m);
      b = &*sb;
    }
  }

  static Cyclotomic add(const Cyclotomic& x, const Cyclotomic& y, bool subtract) {
    const Cyclotomic* a = &x;
    const Cyclotomic* b = &y;
    std::optional<Cyclotomic> sa, sb;
    align(a, b, sa, sb);
    Cyclotomic r(a->field_);
    if (a->den_ == b->den_) {
      r.den_ = a->den_;
      for (std::size_t i = 0; i < r.num_.size(); ++i) {
        if (subtract) {
          mpz_sub(r.num_[i].get_mpz_t(), a->num_[i].get_mpz_t(), b->num_[i].get_mpz_t());
        } else {
          mpz_add(r.num_[i].get_mpz_t(), a->num_[i].get_mpz_t(), b->num_[i].get_mpz_t());
        }
      }
    } else {
      Integer g = gcd(a->den_, b->den_);
      Integer fa = b->den_ / g;
      Integer fb = a->den_ / g;
      r.den_ = a->den_ * fa;
      for (std::size_t i = 0; i < r.num_.size(); ++i) {
        r.num_[i] = a->num_[i] * fa;
        if (subtract) {
          mpz_submul(r.num_[i].get_mpz_t(), b->num_[i].get_mpz_t(), fb.get_mpz_t());
        } else {
          mpz_addmul(r.num_[i].get_mpz_t(), b->num_[i].get_mpz_t(), fb.get_mpz_t());
        }
      }
    }
    r.normalize();
    return r;
  }

  static Cyclotomic mul(const Cyclotomic& x, const Cyclotomic& y) {
    const Cyclotomic* a = &x;
    const Cyclotomic* b = &y;
    std::optional<Cyclotomic> sa, sb;
    align(a, b, sa, sb);
    const auto& f = *a->field_;
    Cyclotomic r(a->field_);
    if (a->is_zero() || b->is_zero()) return r;
    r.den_ = a->den_ * b->den_;
    if (a->is_rational() || b->is_rational()) {
      const Cyclotomic* scalar = a->is_rational() ? a : b;
      const Cyclotomic* other = a->is_rational() ? b : a;
      for (std::size_t i = 0; i < r.num_.size(); ++i) r.num_[i] = other->num_[i] * scalar->num_[0];
      r.normalize();
      return r;
    }
    const int phi = f.phi;
    std::vector<Integer> prod(static_cast<std::size_t>(2 * phi - 1));
    for (int i = 0; i < phi; ++i) {
      if (sgn(a->num_[i]) == 0) continue;
      for (int j = 0; j < phi; ++j) {
        if (sgn(b->num_[j]) == 0) continue;
        mpz_addmul(prod[i + j].get_mpz_t(), a->num_[i].get_mpz_t(), b->num_[j].get_mpz_t());
      }
    }
    for (int k = 0; k < phi; ++k) r.num_[k] = std::move(prod[k]);
    for (int k = phi; k < 2 * phi - 1; ++k) {
      if (sgn(prod[k]) == 0) continue;
      const auto& row = f.power[static_cast<std::size_t>(k % f.n)];
      for (int t = 0; t < phi; ++t) detail::addmul_si(r.num_[t], prod[k], row[t]);
    }
    r.normalize();
    return r;
  }
};

inline bool representation_less(const Cyclotomic& a, const Cyclotomic& b) { return a.representation_before(b); }

/// Product of all Galois conjugates; always rational.
inline Rational field_norm(const Cyclotomic& a) {
  if (a.is_rational()) {
    Rational q = a.rational_value();
    Rational out = 1;
    for (int i = 0; i < a.degree(); ++i) out *= q;
    return out;
  }
  const auto& f = detail::field(a.conductor());
  Cyclotomic acc(Rational(1), a.conductor());
  for (int k : f.units) acc *= a.galois(k);
  if (!acc.is_rational()) throw std::logic_error("field norm did not reduce to a rational");
  return acc.rational_value();
}

/// Smallest conductor m such that both values embed in Q(zeta_m).
inline int common_conductor(int a, int b) { return std::lcm(a, b); }

}  // namespace magicpovm

#endif  // MAGICPOVM_CYCLOTOMIC_HPP
