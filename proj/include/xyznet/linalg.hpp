// Copyright 2026 The xyznet Authors
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

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "xyznet/error.hpp"
#include "xyznet/graph.hpp"

namespace xyznet {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Row-major dense square matrix. Sizes here are small (n <= a few hundred),
/// so plain triple loops are adequate.
template <typename T>
class DenseMatrix {
 public:
  using value_type = T;

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, T{}) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static DenseMatrix from(const IntSymMatrix& h) {
    DenseMatrix m(h.size());
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = 0; j < h.size(); ++j) m(i, j) = static_cast<T>(h(i, j));
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const T> data() const noexcept { return data_; }

  DenseMatrix& operator+=(const DenseMatrix& other) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
  }

  DenseMatrix& operator-=(const DenseMatrix& other) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
  }

  DenseMatrix& operator*=(T s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(T s, DenseMatrix a) { return a *= s; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t n = a.n_;
    DenseMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const DenseMatrix& a, std::span<const T> x) {
    std::vector<T> y(a.n_, T{});
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  /// Conjugate transpose (plain transpose for real T).
  DenseMatrix adjoint() const {
    DenseMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if constexpr (std::is_same_v<T, Complex>)
          r(j, i) = std::conj((*this)(i, j));
        else
          r(j, i) = (*this)(i, j);
      }
    return r;
  }

  double max_abs() const {
    double best = 0.0;
    for (const auto& v : data_) best = std::max(best, static_cast<double>(std::abs(v)));
    return best;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
  }

  /// Induced infinity norm (max absolute row sum).
  double inf_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n_; ++j) s += std::abs((*this)(i, j));
      best = std::max(best, s);
    }
    return best;
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using RealMatrix = DenseMatrix<double>;
using ComplexMatrix = DenseMatrix<Complex>;

template <typename T>
double max_abs_diff(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "matrix order mismatch");
  double best = 0.0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    best = std::max(best, static_cast<double>(std::abs(a.data()[k] - b.data()[k])));
  return best;
}

/// ||U^dagger U - I||_max.
inline double unitarity_defect(const ComplexMatrix& u) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.size()));
}

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  RealMatrix vectors;          // column k pairs with values[k]

  /// V diag(values) V^T.
  RealMatrix reconstruct() const {
    const std::size_t n = values.size();
    RealMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k) s += vectors(i, k) * values[k] * vectors(j, k);
        r(i, j) = s;
      }
    return r;
  }
};

inline constexpr double kDefaultEigenTolerance = 1e-12;
inline constexpr int kJacobiSweepLimit = 100;

/// Cyclic Jacobi eigensolver for a real symmetric matrix. Rotations are
/// applied until the off-diagonal Frobenius norm drops below
/// tol * ||A||_F; throws EigensolverDiverged after kJacobiSweepLimit sweeps.
inline EigenDecomposition symmetric_eigendecomposition(RealMatrix a,
                                                       double tol = kDefaultEigenTolerance) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const std::size_t n = a.size();
  RealMatrix v = RealMatrix::identity(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  const double threshold = tol * a.frobenius_norm();
  int sweep = 0;
  while (off_norm() > threshold) {
    if (++sweep > kJacobiSweepLimit)
      throw Error(ErrorCode::EigensolverDiverged,
                  "no convergence after " + std::to_string(kJacobiSweepLimit) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Symmetric 2x2 Schur decomposition (Golub & Van Loan, sym.schur2).
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenDecomposition out{std::vector<double>(n), RealMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

inline EigenDecomposition symmetric_eigendecomposition(const IntSymMatrix& h,
                                                       double tol = kDefaultEigenTolerance) {
  return symmetric_eigendecomposition(RealMatrix::from(h), tol);
}

/// exp(-i t H) by truncated Taylor series with scaling and squaring.
/// Independent of the eigensolver; used as a cross-check oracle.
inline ComplexMatrix matrix_exponential_series(const IntSymMatrix& h, double t) {
  if (!std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "time must be finite");
  const std::size_t n = h.size();
  ComplexMatrix a = ComplexMatrix::from(h);
  a *= Complex(0.0, -t);

  int squarings = 0;
  double norm = a.inf_norm();
  while (norm > 0.5) {
    norm *= 0.5;
    ++squarings;
  }
  a *= Complex(std::ldexp(1.0, -squarings), 0.0);

  ComplexMatrix sum = ComplexMatrix::identity(n);
  ComplexMatrix term = ComplexMatrix::identity(n);
  for (int k = 1; k < 200; ++k) {
    term = term * a;
    term *= Complex(1.0 / k, 0.0);
    sum += term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace xyznet
