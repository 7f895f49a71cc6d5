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

#ifndef MAGICPOVM_MATRIX_HPP
#define MAGICPOVM_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "magicpovm/cyclotomic.hpp"
#include "magicpovm/parallel.hpp"

namespace magicpovm {

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense column vector over the cyclotomics.
class ExactVector {
 public:
  ExactVector() = default;
  explicit ExactVector(std::size_t dim) : entries_(dim) {}
  ExactVector(std::initializer_list<Cyclotomic> init) : entries_(init) {}
  explicit ExactVector(std::vector<Cyclotomic> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  Cyclotomic& operator[](std::size_t i) { return entries_[i]; }
  const Cyclotomic& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }

  /// Lcm of the entry conductors.
  int conductor() const {
    int m = 1;
    for (const auto& e : entries_) m = std::lcm(m, e.conductor());
    return m;
  }

  ExactVector embedded(int m) const {
    ExactVector out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = entries_[i].embed(m);
    return out;
  }

  friend bool operator==(const ExactVector& a, const ExactVector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Cyclotomic> entries_;
};

/// Dense row-major matrix over the cyclotomics.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<Cyclotomic>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw ShapeError("ragged matrix initializer");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static ExactMatrix identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Cyclotomic& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Cyclotomic& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<Cyclotomic>& entries() const noexcept { return entries_; }

  int conductor() const {
    int m = 1;
    for (const auto& e : entries_) m = std::lcm(m, e.conductor());
    return m;
  }

  bool is_rational() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Cyclotomic& e) { return e.is_rational(); });
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cyclotomic> entries_;
};

inline ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum shape mismatch");
  ExactMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

inline ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix difference shape mismatch");
  ExactMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

inline ExactMatrix operator*(const Cyclotomic& s, const ExactMatrix& a) {
  ExactMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = s * a(r, c);
  return out;
}

inline ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
  ExactMatrix out(a.rows(), b.cols());
  parallel_for(0, a.rows(), [&](std::size_t r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Cyclotomic acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(r, k).is_zero() || b(k, c).is_zero()) continue;
        acc += a(r, k) * b(k, c);
      }
      out(r, c) = std::move(acc);
    }
  });
  return out;
}

inline ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mat_mul(a, b); }

inline ExactVector mat_vec(const ExactMatrix& a, const ExactVector& v) {
  if (a.cols() != v.size()) throw ShapeError("matrix-vector shape mismatch");
  ExactVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Cyclotomic acc;
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero() || v[k].is_zero()) continue;
      acc += a(r, k) * v[k];
    }
    out[r] = std::move(acc);
  }
  return out;
}

inline ExactMatrix adjoint(const ExactMatrix& a) {
  ExactMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c).conj();
  return out;
}

inline Cyclotomic trace(const ExactMatrix& a) {
  if (!a.square()) throw ShapeError("trace of a non-square matrix");
  Cyclotomic acc;
  for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i);
  return acc;
}

inline ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      if (a(ar, ac).is_zero()) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
    }
  return out;
}

/// <u, v> = sum conj(u_k) v_k.
inline Cyclotomic inner(const ExactVector& u, const ExactVector& v) {
  if (u.size() != v.size()) throw ShapeError("inner product dimension mismatch");
  Cyclotomic acc;
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k].is_zero() || v[k].is_zero()) continue;
    acc += u[k].conj() * v[k];
  }
  return acc;
}

/// u v^dagger.
inline ExactMatrix outer(const ExactVector& u, const ExactVector& v) {
  ExactMatrix out(u.size(), v.size());
  for (std::size_t r = 0; r < u.size(); ++r) {
    if (u[r].is_zero()) continue;
    for (std::size_t c = 0; c < v.size(); ++c) out(r, c) = u[r] * v[c].conj();
  }
  return out;
}

inline bool is_hermitian(const ExactMatrix& a) { return a.square() && adjoint(a) == a; }

/// Scalar s with a == s * I, if any.
inline std::optional<Cyclotomic> identity_multiple(const ExactMatrix& a) {
  if (!a.square() || a.rows() == 0) return std::nullopt;
  const Cyclotomic& s = a(0, 0);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r == c ? !(a(r, c) == s) : !a(r, c).is_zero()) return std::nullopt;
    }
  return s;
}

namespace detail {

// Fraction-free (Bareiss) rank of an integer matrix; rows are consumed.
inline std::size_t bareiss_rank(std::vector<std::vector<Integer>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (sgn(m[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const auto& prow = m[rank];
    const Integer& p = prow[col];
    parallel_for(rank + 1, rows, [&](std::size_t r) {
      auto& row = m[r];
      const Integer f = row[col];
      Integer t;
      for (std::size_t c = col + 1; c < cols; ++c) {
        t = p * row[c];
        if (sgn(f) != 0) mpz_submul(t.get_mpz_t(), f.get_mpz_t(), prow[c].get_mpz_t());
        mpz_divexact(row[c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[col] = 0;
    }, 8);
    prev = p;
    ++rank;
  }
  return rank;
}

// Gaussian elimination over Q(zeta_n) with normalized pivot rows.
inline std::size_t field_rank(std::vector<std::vector<Cyclotomic>> m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (!m[r][col].is_zero() && m[r][col].is_rational()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) {
      for (std::size_t r = rank; r < rows; ++r) {
        if (!m[r][col].is_zero()) {
          pivot = r;
          break;
        }
      }
    }
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    auto& prow = m[rank];
    const Cyclotomic inv = prow[col].inverse();
    for (std::size_t c = col + 1; c < cols; ++c) {
      if (!prow[c].is_zero()) prow[c] *= inv;
    }
    prow[col] = Cyclotomic(1);
    parallel_for(rank + 1, rows, [&](std::size_t r) {
      auto& row = m[r];
      if (row[col].is_zero()) return;
      const Cyclotomic f = row[col];
      for (std::size_t c = col + 1; c < cols; ++c) {
        if (!prow[c].is_zero()) row[c] -= f * prow[c];
      }
      row[col] = Cyclotomic();
    }, 4);
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank over Q(zeta_n). Integer Bareiss elimination when every entry is
/// rational, otherwise Gaussian elimination over the cyclotomic field with
/// rational pivots preferred. Deterministic.
inline std::size_t exact_rank(const ExactMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  if (a.is_rational()) {
    std::vector<std::vector<Integer>> m(a.rows(), std::vector<Integer>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Integer den = 1;
      for (std::size_t c = 0; c < a.cols(); ++c) den = lcm(den, a(r, c).denominator());
      for (std::size_t c = 0; c < a.cols(); ++c) {
        Rational q = a(r, c).rational_value();
        m[r][c] = q.get_num() * (den / q.get_den());
      }
    }
    return detail::bareiss_rank(std::move(m), a.cols());
  }
  const int n = a.conductor();
  std::vector<std::vector<Cyclotomic>> m(a.rows(), std::vector<Cyclotomic>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = a(r, c).embed(n);
  return detail::field_rank(std::move(m), a.cols());
}

/// Integer eigenvalue multiplicities of a symmetric integer matrix.
struct IntegerSpectrum {
  std::map<long, std::size_t> multiplicity;  // candidate -> nullity of (A - lambda I)
  std::size_t dimension = 0;
  std::size_t accounted = 0;                 // sum of multiplicities
  bool complete() const noexcept { return accounted == dimension; }
};

inline IntegerSpectrum integer_spectrum(const ExactMatrix& adj, const std::vector<long>& candidates) {
  if (!adj.square()) throw ShapeError("spectrum of a non-square matrix");
  const std::size_t n = adj.rows();
  std::vector<std::vector<Integer>> base(n, std::vector<Integer>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const auto& e = adj(r, c);
      if (!e.is_rational() || e.denominator() != 1) throw std::invalid_argument("spectrum input must be an integer matrix");
      if (!(e == adj(c, r))) throw std::invalid_argument("spectrum input must be symmetric");
      base[r][c] = e.numerators()[0];
    }
  IntegerSpectrum out;
  out.dimension = n;
  std::vector<long> sorted = candidates;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (long lambda : sorted) {
    auto m = base;
    for (std::size_t i = 0; i < n; ++i) m[i][i] -= lambda;
    std::size_t nullity = n - detail::bareiss_rank(std::move(m), n);
    out.multiplicity[lambda] = nullity;
    out.accounted += nullity;
  }
  return out;
}

}  // namespace magicpovm

#endif  // MAGICPOVM_MATRIX_HPP
