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

// Pauli-covariant rank-one POVMs. The orbit of a fiducial under the d^2 Weyl
// coset representatives is kept as unnormalized vectors v_i together with
// their squared norms, so no square roots ever leave the cyclotomic field:
//
//   Pi_i = v_i v_i^dagger / <v_i, v_i>,   tr(Pi_i Pi_j) = |<v_i, v_j>|^2 / (N_i N_j).

#ifndef MAGICPOVM_POVM_HPP
#define MAGICPOVM_POVM_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "magicpovm/cyclotomic.hpp"
#include "magicpovm/literal.hpp"
#include "magicpovm/matrix.hpp"
#include "magicpovm/parallel.hpp"
#include "magicpovm/pauli.hpp"

namespace magicpovm {

/// Fiducial state given either as an unnormalized vector or as a rank-one projector.
struct Fiducial {
  std::optional<ExactVector> vector;
  std::optional<ExactMatrix> projector;
  PauliSpec spec;
  std::string name;
  int conductor = 1;  // minimum working conductor requested by the caller

  static Fiducial from_vector(ExactVector v, PauliSpec spec, std::string name = {}) {
    Fiducial f;
    f.vector = std::move(v);
    f.spec = std::move(spec);
    f.name = std::move(name);
    return f;
  }

  static Fiducial from_projector(ExactMatrix p, PauliSpec spec, std::string name = {}) {
    Fiducial f;
    f.projector = std::move(p);
    f.spec = std::move(spec);
    f.name = std::move(name);
    return f;
  }
};

enum class Classification { sic, equiangular_by_norm, dichotomic, dichotomic_by_norm, multivalued, not_povm, not_ic };

struct ClassLabel {
  Classification kind = Classification::not_ic;
  std::size_t values = 0;  // distinct trace values, reported for multivalued

  std::string str() const {
    switch (kind) {
      case Classification::sic: return "SIC";
      case Classification::equiangular_by_norm: return "equiangular_by_norm";
      case Classification::dichotomic: return "dichotomic";
      case Classification::dichotomic_by_norm: return "dichotomic_by_norm";
      case Classification::multivalued: return "multivalued(" + std::to_string(values) + ")";
      case Classification::not_povm: return "not_povm";
      case Classification::not_ic: return "not_ic";
    }
    return "unknown";
  }
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// One distinct off-diagonal value of tr(Pi_i Pi_j) and how many unordered pairs take it.
struct PairValue {
  Cyclotomic value;
  std::size_t multiplicity = 0;
};

/// Hermitian angle class: angle^2 = norm^(1/deg).
struct AngleValue {
  Rational norm;                    // field norm of the pair trace at the working conductor
  int degree = 1;                   // phi(working conductor)
  std::optional<Rational> angle_sq; // exact when norm is a perfect deg-th power
  double angle_sq_float = 0;
  double angle_float = 0;
  std::size_t multiplicity = 0;
};

namespace detail {

// Exact k-th root of a nonnegative rational when it exists.
inline std::optional<Rational> rational_root(const Rational& q, int k) {
  if (sgn(q) < 0) return std::nullopt;
  Integer num, den;
  if (mpz_root(num.get_mpz_t(), q.get_num().get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), q.get_den().get_mpz_t(), static_cast<unsigned long>(k)) == 0) return std::nullopt;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline double rational_pow(const Rational& q, double e) {
  // log-domain keeps huge norms (deg up to 12) in range
  double lg = std::log(mpz_get_d(q.get_num().get_mpz_t())) - std::log(mpz_get_d(q.get_den().get_mpz_t()));
  if (!std::isfinite(lg)) {
    long exp_num = 0, exp_den = 0;
    double mn = mpz_get_d_2exp(&exp_num, q.get_num().get_mpz_t());
    double md = mpz_get_d_2exp(&exp_den, q.get_den().get_mpz_t());
    lg = std::log(mn) - std::log(md) + (exp_num - exp_den) * std::log(2.0);
  }
  return std::exp(lg * e);
}

}  // namespace detail

class Povm {
 public:
  const PauliSpec& spec() const noexcept { return spec_; }
  std::size_t dimension() const noexcept { return spec_.dimension(); }
  std::size_t size() const noexcept { return vectors_.size(); }
  int conductor() const noexcept { return conductor_; }
  int field_degree() const noexcept { return totient(conductor_); }
  const ExactVector& fiducial_vector() const noexcept { return fiducial_; }
  const std::vector<WeylOperator>& labels() const noexcept { return labels_; }
  const std::vector<ExactVector>& vectors() const noexcept { return vectors_; }
  const std::vector<Cyclotomic>& norms() const noexcept { return norms_; }
  bool valid() const noexcept { return valid_; }
  std::size_t gram_rank() const noexcept { return rank_; }
  const ExactMatrix& gram() const noexcept { return gram_; }
  const std::vector<PairValue>& pair_spectrum() const noexcept { return pair_spectrum_; }
  const std::vector<AngleValue>& angle_spectrum() const noexcept { return angle_spectrum_; }
  ClassLabel classification() const noexcept { return class_; }
  bool informationally_complete() const noexcept { return valid_ && rank_ == size(); }

  /// <v_i, v_j>.
  const Cyclotomic& overlap(std::size_t i, std::size_t j) const { return overlaps_[i * size() + j]; }

  ExactMatrix projector(std::size_t i) const {
    return Cyclotomic(norms_.at(i).inverse()) * outer(vectors_[i], vectors_[i]);
  }

  /// tr(Pi_i Pi_j) via the inner-product shortcut.
  Cyclotomic pair_trace(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) throw std::out_of_range("projector index out of range");
    return gram_(i, j);
  }

  /// tr(Pi_i1 ... Pi_ik) for the cyclic order given.
  Cyclotomic cycle_trace(const std::vector<std::size_t>& idx) const {
    Cyclotomic num(1);
    Cyclotomic den(1);
    for (std::size_t t = 0; t < idx.size(); ++t) {
      num *= overlap(idx[t], idx[(t + 1) % idx.size()]);
      den *= norms_[idx[t]];
    }
    return num / den;
  }

  /// (exact norm, float angle) with angle^2 = (N(s conj s) / N(N_i N_j))^(1/deg), s = <v_i, v_j>.
  std::pair<Rational, double> hermitian_angle(std::size_t i, std::size_t j) const {
    if (i == j) throw std::invalid_argument("Hermitian angle needs distinct projectors");
    const Cyclotomic& s = overlap(i, j);
    Cyclotomic num = (s * s.conj()).embed(conductor_);
    Cyclotomic den = (norms_[i] * norms_[j]).embed(conductor_);
    Rational norm = field_norm(num) / field_norm(den);
    return {norm, detail::rational_pow(norm, 0.5 / field_degree())};
  }

  /// Field-norm Hermitian angle class of an exact pair value.
  AngleValue angle_of(const Cyclotomic& pair_value) const {
    AngleValue a;
    a.degree = field_degree();
    a.norm = field_norm(pair_value.embed(conductor_));
    a.angle_sq = detail::rational_root(a.norm, a.degree);
    a.angle_sq_float = detail::rational_pow(a.norm, 1.0 / a.degree);
    a.angle_float = std::sqrt(a.angle_sq_float);
    return a;
  }

  friend Povm build_povm(const Fiducial& f, std::optional<std::vector<WeylOperator>> labels);

 private:
  PauliSpec spec_;
  int conductor_ = 1;
  ExactVector fiducial_;
  std::vector<WeylOperator> labels_;
  std::vector<ExactVector> vectors_;
  std::vector<Cyclotomic> norms_;
  std::vector<Cyclotomic> overlaps_;
  ExactMatrix gram_;
  bool valid_ = false;
  std::size_t rank_ = 0;
  std::vector<PairValue> pair_spectrum_;
  std::vector<AngleValue> angle_spectrum_;
  ClassLabel class_;

  void fill_spectra();
  void classify_self();
};

namespace detail {

inline bool is_projector(const ExactMatrix& p) {
  return p.square() && is_hermitian(p) && trace(p) == Cyclotomic(1) && mat_mul(p, p) == p;
}

inline ExactVector vector_from_projector(const ExactMatrix& p) {
  for (std::size_t c = 0; c < p.cols(); ++c) {
    if (p(c, c).is_zero()) continue;
    ExactVector v(p.rows());
    for (std::size_t r = 0; r < p.rows(); ++r) v[r] = p(r, c);
    return v;
  }
  throw std::invalid_argument("projector is zero");
}

// Sorts exact values by their float rendering, with the representation order as tiebreak.
inline bool value_order(const Cyclotomic& a, const Cyclotomic& b) {
  auto fa = a.to_complex(), fb = b.to_complex();
  if (std::abs(fa.real() - fb.real()) > 1e-12) return fa.real() < fb.real();
  if (std::abs(fa.imag() - fb.imag()) > 1e-12) return fa.imag() < fb.imag();
  return representation_less(a, b);
}

}  // namespace detail

/// Builds Pi_i = T_i Pi T_i^dagger over the coset representatives (or the given labels),
/// then certifies sum Pi_i = d I, the Gram rank, the spectra and the classification.
inline Povm build_povm(const Fiducial& f, std::optional<std::vector<WeylOperator>> labels = std::nullopt) {
  Povm p;
  p.spec_ = f.spec;
  const std::size_t d = f.spec.dimension();
  ExactVector v;
  if (f.vector) {
    v = *f.vector;
  } else if (f.projector) {
    if (!detail::is_projector(*f.projector)) throw std::invalid_argument("fiducial matrix is not a rank-one projector");
    v = detail::vector_from_projector(*f.projector);
  } else {
    throw std::invalid_argument("fiducial has neither vector nor projector");
  }
  if (v.size() != d) {
    throw ShapeError("fiducial dimension " + std::to_string(v.size()) + " does not match Pauli dimension " +
                     std::to_string(d));
  }
  p.conductor_ = std::lcm(std::lcm(f.spec.conductor(), v.conductor()), std::max(1, f.conductor));
  p.fiducial_ = v.embedded(p.conductor_);
  if (inner(p.fiducial_, p.fiducial_).is_zero()) throw std::invalid_argument("fiducial vector is zero");

  p.labels_ = labels ? std::move(*labels) : cosets(f.spec);
  const std::size_t count = p.labels_.size();
  p.vectors_.resize(count);
  p.norms_.resize(count);
  parallel_for(0, count, [&](std::size_t i) {
    p.vectors_[i] = p.labels_[i].apply(p.fiducial_).embedded(p.conductor_);
    p.norms_[i] = inner(p.vectors_[i], p.vectors_[i]);
  });

  // sum_i Pi_i == d I, entry by entry.
  std::vector<Cyclotomic> inv_norms(count);
  for (std::size_t i = 0; i < count; ++i) inv_norms[i] = p.norms_[i].inverse();
  std::vector<char> row_ok(d, 1);
  const Cyclotomic target(static_cast<long>(d));
  parallel_for(0, d, [&](std::size_t a) {
    for (std::size_t b = 0; b < d && row_ok[a]; ++b) {
      Cyclotomic acc;
      for (std::size_t i = 0; i < count; ++i) {
        const auto& x = p.vectors_[i][a];
        const auto& y = p.vectors_[i][b];
        if (x.is_zero() || y.is_zero()) continue;
        acc += x * y.conj() * inv_norms[i];
      }
      if (!(acc == (a == b ? target : Cyclotomic()))) row_ok[a] = 0;
    }
  });
  p.valid_ = std::all_of(row_ok.begin(), row_ok.end(), [](char c) { return c != 0; });

  p.overlaps_.assign(count * count, Cyclotomic());
  parallel_for(0, count, [&](std::size_t i) {
    for (std::size_t j = i; j < count; ++j) {
      Cyclotomic s = j == i ? p.norms_[i] : inner(p.vectors_[i], p.vectors_[j]);
      p.overlaps_[j * count + i] = s.conj();
      p.overlaps_[i * count + j] = std::move(s);
    }
  });
  p.gram_ = ExactMatrix(count, count);
  parallel_for(0, count, [&](std::size_t i) {
    p.gram_(i, i) = Cyclotomic(1);
    for (std::size_t j = 0; j < count; ++j) {
      if (j == i) continue;
      const auto& s = p.overlaps_[i * count + j];
      p.gram_(i, j) = s * s.conj() * inv_norms[i] * inv_norms[j];
    }
  });
  p.rank_ = exact_rank(p.gram_);
  p.fill_spectra();
  p.classify_self();
  return p;
}

inline void Povm::fill_spectra() {
  std::map<Cyclotomic, std::size_t, decltype(&representation_less)> counts(&representation_less);
  const std::size_t count = size();
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j) ++counts[gram_(i, j).embed(conductor_)];
  pair_spectrum_.clear();
  for (auto& [value, mult] : counts) pair_spectrum_.push_back({value, mult});
  std::sort(pair_spectrum_.begin(), pair_spectrum_.end(),
            [](const PairValue& a, const PairValue& b) { return detail::value_order(a.value, b.value); });

  std::map<Rational, AngleValue> angles;
  for (const auto& pv : pair_spectrum_) {
    AngleValue a = angle_of(pv.value);
    auto [it, inserted] = angles.try_emplace(a.norm, a);
    if (inserted) {
      it->second.multiplicity = pv.multiplicity;
    } else {
      it->second.multiplicity += pv.multiplicity;
    }
  }
  angle_spectrum_.clear();
  for (auto& [norm, a] : angles) angle_spectrum_.push_back(a);
}

inline void Povm::classify_self() {
  const std::size_t d = dimension();
  if (!valid_) {
    class_ = {Classification::not_povm, pair_spectrum_.size()};
    return;
  }
  if (rank_ < size() || size() != d * d) {
    class_ = {Classification::not_ic, pair_spectrum_.size()};
    return;
  }
  const Cyclotomic sic_value(Rational(1, static_cast<long>(d + 1)));
  if (pair_spectrum_.size() == 1 && pair_spectrum_.front().value == sic_value) {
    class_ = {Classification::sic, 1};
  } else if (pair_spectrum_.size() == 2) {
    class_ = {Classification::dichotomic, 2};
  } else if (angle_spectrum_.size() == 1) {
    class_ = {Classification::equiangular_by_norm, pair_spectrum_.size()};
  } else if (angle_spectrum_.size() == 2) {
    class_ = {Classification::dichotomic_by_norm, pair_spectrum_.size()};
  } else {
    class_ = {Classification::multivalued, pair_spectrum_.size()};
  }
}

/// Outcome probabilities p(i) = tr(rho Pi_i) / d.
inline std::vector<Cyclotomic> born(const ExactMatrix& rho, const Povm& p) {
  const std::size_t d = p.dimension();
  if (rho.rows() != d || rho.cols() != d) throw ShapeError("density matrix dimension mismatch");
  if (!(trace(rho) == Cyclotomic(1))) throw std::invalid_argument("density matrix must have unit trace");
  if (!is_hermitian(rho)) throw std::invalid_argument("density matrix must be Hermitian");
  std::vector<Cyclotomic> probs(p.size());
  const Cyclotomic inv_d(Rational(1, static_cast<long>(d)));
  parallel_for(0, p.size(), [&](std::size_t i) {
    // <v_i| rho |v_i> / N_i
    ExactVector rv = mat_vec(rho, p.vectors()[i]);
    probs[i] = inner(p.vectors()[i], rv) * p.norms()[i].inverse() * inv_d;
  });
  return probs;
}

/// rho = sum_i [(d + 1) p(i) - 1/d] Pi_i; defined for SIC classifications only.
inline ExactMatrix reconstruct(const Povm& p, const std::vector<Cyclotomic>& probs) {
  if (p.classification().kind != Classification::sic) {
    throw std::invalid_argument("linear reconstruction requires a SIC");
  }
  if (probs.size() != p.size()) throw ShapeError("probability vector length must be d^2");
  const long d = static_cast<long>(p.dimension());
  ExactMatrix rho(p.dimension(), p.dimension());
  const Cyclotomic inv_d(Rational(1, d));
  for (std::size_t i = 0; i < p.size(); ++i) {
    Cyclotomic w = Cyclotomic(d + 1) * probs[i] - inv_d;
    if (w.is_zero()) continue;
    rho = rho + (w * p.norms()[i].inverse()) * outer(p.vectors()[i], p.vectors()[i]);
  }
  return rho;
}

}  // namespace magicpovm

#endif  // MAGICPOVM_POVM_HPP
