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

// Generalized Pauli (Heisenberg-Weyl) operators on single and multipartite
// qudits. An operator is stored as phase * (Z^m1 X^j1) (x) (Z^m2 X^j2) ...
// with the shift X|k> = |k+1> and clock Z|k> = w^k |k>, w = exp(2 pi i / d).

#ifndef MAGICPOVM_PAULI_HPP
#define MAGICPOVM_PAULI_HPP

#include <cctype>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "magicpovm/cyclotomic.hpp"
#include "magicpovm/literal.hpp"
#include "magicpovm/matrix.hpp"

namespace magicpovm {

/// Phase attached to the coset representative Z^m X^j.
enum class PhaseRule {
  weyl,  // i^(jm) for qubits, w^(-jm/2) for odd dimensions
  bare,  // no phase; the only choice for even dimensions above two
};

struct PauliSpec {
  std::vector<int> factors;
  PhaseRule rule = PhaseRule::weyl;

  PauliSpec() = default;
  explicit PauliSpec(std::vector<int> f, PhaseRule r = PhaseRule::weyl) : factors(std::move(f)), rule(r) {
    if (factors.empty()) throw std::invalid_argument("Pauli spec needs at least one factor");
    for (int d : factors) {
      if (d < 2) throw std::invalid_argument("qudit dimension must be at least 2");
      if (rule == PhaseRule::weyl && d > 2 && d % 2 == 0) {
        throw std::invalid_argument("the half-exponent phase rule is undefined for even dimension " +
                                    std::to_string(d) + "; use the bare rule");
      }
    }
  }

  std::size_t dimension() const {
    std::size_t d = 1;
    for (int f : factors) d *= static_cast<std::size_t>(f);
    return d;
  }

  /// Smallest conductor holding every matrix entry and phase of the coset representatives.
  int conductor() const {
    int n = 1;
    for (int f : factors) n = std::lcm(n, (f == 2 && rule == PhaseRule::weyl) ? 4 : f);
    return n;
  }

  std::size_t coset_count() const { return dimension() * dimension(); }

  friend bool operator==(const PauliSpec& a, const PauliSpec& b) {
    return a.factors == b.factors && a.rule == b.rule;
  }
};

/// Monomial matrix: column k maps to row target[k] with coefficient value[k].
struct MonomialMatrix {
  std::vector<std::size_t> target;
  std::vector<Cyclotomic> value;

  ExactVector apply(const ExactVector& v) const {
    ExactVector out(v.size());
    for (std::size_t k = 0; k < target.size(); ++k) {
      if (!v[k].is_zero()) out[target[k]] = value[k] * v[k];
    }
    return out;
  }

  ExactMatrix dense() const {
    ExactMatrix m(target.size(), target.size());
    for (std::size_t k = 0; k < target.size(); ++k) m(target[k], k) = value[k];
    return m;
  }
};

struct FactorExponent {
  int m = 0;  // clock power
  int j = 0;  // shift power
  friend bool operator==(const FactorExponent&, const FactorExponent&) = default;
};

class WeylOperator {
 public:
  WeylOperator() = default;
  WeylOperator(PauliSpec spec, std::vector<FactorExponent> exps, Cyclotomic phase = Cyclotomic(1))
      : spec_(std::move(spec)), exps_(std::move(exps)), phase_(std::move(phase)) {
    if (exps_.size() != spec_.factors.size()) throw std::invalid_argument("one exponent pair per factor");
    for (std::size_t f = 0; f < exps_.size(); ++f) {
      const int d = spec_.factors[f];
      exps_[f].m = ((exps_[f].m % d) + d) % d;
      exps_[f].j = ((exps_[f].j % d) + d) % d;
    }
  }

  static WeylOperator identity(const PauliSpec& spec) {
    return WeylOperator(spec, std::vector<FactorExponent>(spec.factors.size()));
  }

  const PauliSpec& spec() const noexcept { return spec_; }
  const std::vector<FactorExponent>& exponents() const noexcept { return exps_; }
  const Cyclotomic& phase() const noexcept { return phase_; }

  bool is_identity_class() const {
    for (const auto& e : exps_) {
      if (e.m != 0 || e.j != 0) return false;
    }
    return true;
  }

  WeylOperator stripped() const { return WeylOperator(spec_, exps_); }

  WeylOperator with_phase(Cyclotomic p) const { return WeylOperator(spec_, exps_, std::move(p)); }

  /// Operator product this * other.
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
    if (!(a.spec_.factors == b.spec_.factors)) throw std::invalid_argument("Weyl product across different specs");
    Cyclotomic phase = a.phase_ * b.phase_;
    std::vector<FactorExponent> exps(a.exps_.size());
    for (std::size_t f = 0; f < exps.size(); ++f) {
      const int d = a.spec_.factors[f];
      // X^j1 Z^m2 = w^(-j1 m2) Z^m2 X^j1
      long twist = static_cast<long>(a.exps_[f].j) * b.exps_[f].m % d;
      if (twist != 0) phase *= Cyclotomic::zeta(d, -twist);
      exps[f] = {a.exps_[f].m + b.exps_[f].m, a.exps_[f].j + b.exps_[f].j};
    }
    return WeylOperator(a.spec_, std::move(exps), std::move(phase));
  }

  /// Inverse; for the unitary representatives this is the adjoint.
  WeylOperator inverse() const {
    WeylOperator bare_inv(spec_, [&] {
      std::vector<FactorExponent> e(exps_.size());
      for (std::size_t f = 0; f < e.size(); ++f) e[f] = {-exps_[f].m, -exps_[f].j};
      return e;
    }());
    // (Z^m X^j)(Z^-m X^-j) = w^(j m) I
    WeylOperator prod = stripped() * bare_inv;
    return bare_inv.with_phase(phase_.inverse() * prod.phase_.inverse());
  }

  MonomialMatrix monomial() const {
    const std::size_t dim = spec_.dimension();
    MonomialMatrix out;
    out.target.assign(dim, 0);
    out.value.assign(dim, phase_);
    // Mixed radix, first factor most significant.
    for (std::size_t col = 0; col < dim; ++col) {
      std::size_t rem = col;
      std::size_t stride = dim;
      std::size_t row = 0;
      Cyclotomic value = phase_;
      for (std::size_t f = 0; f < exps_.size(); ++f) {
        const int d = spec_.factors[f];
        stride /= static_cast<std::size_t>(d);
        const int k = static_cast<int>(rem / stride);
        rem %= stride;
        const int shifted = (k + exps_[f].j) % d;
        row += static_cast<std::size_t>(shifted) * stride;
        const long e = static_cast<long>(exps_[f].m) * shifted % d;
        if (e != 0) value *= Cyclotomic::zeta(d, e);
      }
      out.target[col] = row;
      out.value[col] = std::move(value);
    }
    return out;
  }

  ExactMatrix matrix() const { return monomial().dense(); }

  ExactVector apply(const ExactVector& v) const { return monomial().apply(v); }

  friend bool operator==(const WeylOperator& a, const WeylOperator& b) {
    return a.spec_ == b.spec_ && a.exps_ == b.exps_ && a.phase_ == b.phase_;
  }

 private:
  PauliSpec spec_;
  std::vector<FactorExponent> exps_;
  Cyclotomic phase_{1};
};

/// Shift and clock matrices in dimension d.
inline std::pair<ExactMatrix, ExactMatrix> shift_clock(int d) {
  if (d < 2) throw std::invalid_argument("shift/clock need d >= 2");
  ExactMatrix x(d, d), z(d, d);
  for (int k = 0; k < d; ++k) {
    x((k + 1) % d, k) = Cyclotomic(1);
    z(k, k) = Cyclotomic::zeta(d, k);
  }
  return {x, z};
}

/// Coset representative phase for one factor.
inline Cyclotomic weyl_factor_phase(int d, PhaseRule rule, const FactorExponent& e) {
  if (rule == PhaseRule::bare) return Cyclotomic(1);
  const long jm = static_cast<long>(e.j) * e.m;
  if (d == 2) return Cyclotomic::zeta(4, jm % 4);
  if (d % 2 == 0) throw std::invalid_argument("half-exponent phase undefined for even d > 2");
  const long half = (d + 1) / 2;  // inverse of 2 mod d
  return Cyclotomic::zeta(d, -(jm % d) * half);
}

/// The phased representative T_(m,j) for each factor, combined by Kronecker product.
inline WeylOperator weyl(const PauliSpec& spec, const std::vector<FactorExponent>& exps) {
  if (exps.size() != spec.factors.size()) throw std::invalid_argument("one exponent pair per factor");
  Cyclotomic phase(1);
  for (std::size_t f = 0; f < exps.size(); ++f) {
    const int d = spec.factors[f];
    if (exps[f].m < 0 || exps[f].m >= d || exps[f].j < 0 || exps[f].j >= d) {
      throw std::out_of_range("Weyl exponent out of range");
    }
    phase *= weyl_factor_phase(d, spec.rule, exps[f]);
  }
  return WeylOperator(spec, exps, phase);
}

/// Exponents for coset index idx: per factor (m, j) at m*d + j, first factor most significant.
inline std::vector<FactorExponent> coset_exponents(const PauliSpec& spec, std::size_t idx) {
  std::vector<FactorExponent> exps(spec.factors.size());
  for (std::size_t f = spec.factors.size(); f-- > 0;) {
    const std::size_t d = static_cast<std::size_t>(spec.factors[f]);
    const std::size_t local = idx % (d * d);
    idx /= d * d;
    exps[f] = {static_cast<int>(local / d), static_cast<int>(local % d)};
  }
  return exps;
}

inline std::size_t coset_index(const PauliSpec& spec, const std::vector<FactorExponent>& exps) {
  std::size_t idx = 0;
  for (std::size_t f = 0; f < spec.factors.size(); ++f) {
    const std::size_t d = static_cast<std::size_t>(spec.factors[f]);
    idx = idx * d * d + static_cast<std::size_t>(exps[f].m) * d + static_cast<std::size_t>(exps[f].j);
  }
  return idx;
}

/// The d^2 coset representatives in lexicographic exponent order.
inline std::vector<WeylOperator> cosets(const PauliSpec& spec) {
  std::vector<WeylOperator> out;
  out.reserve(spec.coset_count());
  for (std::size_t idx = 0; idx < spec.coset_count(); ++idx) out.push_back(weyl(spec, coset_exponents(spec, idx)));
  return out;
}

/// Scalar s when the ordered product equals s * I.
inline std::optional<Cyclotomic> product_phase(const std::vector<WeylOperator>& ops) {
  if (ops.empty()) return Cyclotomic(1);
  WeylOperator acc = ops.front();
  for (std::size_t i = 1; i < ops.size(); ++i) acc = acc * ops[i];
  if (!acc.is_identity_class()) return std::nullopt;
  return acc.phase();
}

// ---------------------------------------------------------------------------
// Labels: "Z^2X x ZX^3", with an optional phase prefix "-" or "(<literal>)*".
// Input words may use products and powers such as "(XZ^2)2" or "XZ2".

inline std::string factor_label(const FactorExponent& e) {
  if (e.m == 0 && e.j == 0) return "I";
  std::string s;
  if (e.m != 0) s += e.m == 1 ? "Z" : "Z^" + std::to_string(e.m);
  if (e.j != 0) s += e.j == 1 ? "X" : "X^" + std::to_string(e.j);
  return s;
}

inline std::string bare_label(const WeylOperator& op) {
  std::string s;
  for (std::size_t f = 0; f < op.exponents().size(); ++f) {
    if (f) s += " x ";
    s += factor_label(op.exponents()[f]);
  }
  return s;
}

inline std::string to_string(const WeylOperator& op) {
  std::string prefix;
  if (op.phase() == Cyclotomic(-1)) {
    prefix = "-";
  } else if (!op.phase().is_one()) {
    prefix = "(" + to_string(op.phase()) + ")*";
  }
  return prefix + bare_label(op);
}

namespace detail {

struct FactorWord {
  Cyclotomic c{1};
  int m = 0;
  int j = 0;
};

inline FactorWord word_mul(const FactorWord& a, const FactorWord& b, int d) {
  FactorWord r;
  r.c = a.c * b.c;
  long twist = static_cast<long>(a.j) * b.m % d;
  if (twist != 0) r.c *= Cyclotomic::zeta(d, -twist);
  r.m = (a.m + b.m) % d;
  r.j = (a.j + b.j) % d;
  return r;
}

class LabelParser {
 public:
  LabelParser(std::string_view text, const PauliSpec& spec) : s_(text), spec_(spec) {}

  WeylOperator parse() {
    skip();
    Cyclotomic phase(1);
    if (peek() == '-') {
      ++pos_;
      phase = Cyclotomic(-1);
    }
    skip();
    if (peek() == '(' && looks_like_phase()) {
      std::size_t close = matching(pos_);
      phase *= parse_cyclotomic(s_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
      skip();
      if (peek() != '*') fail("expected '*' after phase");
      ++pos_;
    }
    std::vector<FactorExponent> exps;
    for (std::size_t f = 0; f < spec_.factors.size(); ++f) {
      if (f > 0) {
        skip();
        if (peek() == 'x') {
          ++pos_;
        } else if (s_.substr(pos_, 3) == "\xE2\x8A\x97") {  // U+2297
          pos_ += 3;
        } else {
          fail("expected factor separator 'x'");
        }
      }
      FactorWord w = word(spec_.factors[f]);
      phase *= w.c;
      exps.push_back({w.m, w.j});
    }
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return WeylOperator(spec_, std::move(exps), std::move(phase));
  }

 private:
  std::string_view s_;
  const PauliSpec& spec_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse operator label \"" + std::string(s_) + "\": " + what);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::size_t matching(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < s_.size(); ++i) {
      if (s_[i] == '(') ++depth;
      if (s_[i] == ')' && --depth == 0) return i;
    }
    fail("unbalanced parentheses");
  }
  // "(...)*" is a phase; "(...)" followed by a power or another item is a word.
  bool looks_like_phase() const {
    std::size_t close = matching(pos_);
    std::size_t k = close + 1;
    while (k < s_.size() && std::isspace(static_cast<unsigned char>(s_[k]))) ++k;
    return k < s_.size() && s_[k] == '*';
  }

  int exponent() {
    skip();
    bool caret = false;
    if (peek() == '^') {
      caret = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) {
      if (caret) fail("expected exponent after '^'");
      return 1;
    }
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  FactorWord word(int d) {
    FactorWord acc;
    bool any = false;
    for (;;) {
      skip();
      char c = peek();
      FactorWord item;
      if (c == 'I') {
        ++pos_;
      } else if (c == 'X') {
        ++pos_;
        item.j = 1;
      } else if (c == 'Z') {
        ++pos_;
        item.m = 1;
      } else if (c == '(') {
        ++pos_;
        item = word(d);
        skip();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
      } else {
        break;
      }
      // Exponents bind only when written immediately after the item.
      int e = 1;
      if (peek() == '^' || std::isdigit(static_cast<unsigned char>(peek()))) e = exponent();
      FactorWord powered;
      for (int k = 0; k < e; ++k) powered = word_mul(powered, item, d);
      acc = word_mul(acc, powered, d);
      any = true;
    }
    if (!any) fail("expected an operator word");
    return acc;
  }
};

}  // namespace detail

inline WeylOperator parse_operator(std::string_view text, const PauliSpec& spec) {
  return detail::LabelParser(text, spec).parse();
}

}  // namespace magicpovm

#endif  // MAGICPOVM_PAULI_HPP
