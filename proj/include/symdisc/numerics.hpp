/*
   Copyright 2026 The symdisc developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace symdisc {

using cplx = std::complex<double>;

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: non-finite values, out-of-range sizes, malformed records.
class input_error : public error {
 public:
  using error::error;
};

/// The root oracle failed to converge to the requested residual.
class oracle_error : public error {
 public:
  using error::error;
};

/// |p| too close to the unit circle for the reduction to be well posed.
class reduction_error : public error {
 public:
  using error::error;
};

/// A theorem hypothesis required by the operation does not hold.
class hypothesis_error : public error {
 public:
  using error::error;
};

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(double x, const char* what) {
  if (!is_finite(x)) throw input_error(std::string(what) + ": non-finite value");
}
inline void require_finite(cplx z, const char* what) {
  if (!is_finite(z)) throw input_error(std::string(what) + ": non-finite value");
}

/// Exact binomial coefficient C(n, k) for 0 <= k <= n <= 62.
/// The cap keeps every intermediate product inside uint64.
inline std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > 62)
    throw input_error("binomial: require 0 <= k <= n <= 62");
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

/// Minimal dense complex matrix, row-major. Used for the Toeplitz factors
/// of the Schur-Cohn construction; not a general linear algebra type.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {
    if (dim < 1) throw input_error("ComplexMatrix: dim must be positive");
  }

  int dim() const { return dim_; }
  cplx at(int i, int j) const { return data_[idx(i, j)]; }
  void set(int i, int j, cplx v) { data_[idx(i, j)] = v; }

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
      throw input_error("ComplexMatrix: index out of range");
    return static_cast<std::size_t>(i) * dim_ + j;
  }

  int dim_;
  std::vector<cplx> data_;
};

/// Small dense Hermitian matrix. Symmetry is enforced by construction:
/// the only mutator writes (i,j) and conj(i,j) together, and diagonal
/// writes keep a zero imaginary part. Entries must be finite.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim) {
    if (dim < 1) throw input_error("HermitianMatrix: dim must be positive");
  }

  static HermitianMatrix identity(int dim) {
    HermitianMatrix h(dim);
    for (int i = 0; i < dim; ++i) h.set(i, i, 1.0);
    return h;
  }

  int dim() const { return dim_; }

  cplx at(int i, int j) const { return data_[idx(i, j)]; }

  /// Stores v at (i, j) and conj(v) at (j, i). For i == j the imaginary
  /// part of v must vanish (it is dropped exactly).
  void set(int i, int j, cplx v) {
    require_finite(v, "HermitianMatrix::set");
    if (i == j) {
      data_[idx(i, i)] = cplx(v.real(), 0.0);
    } else {
      data_[idx(i, j)] = v;
      data_[idx(j, i)] = std::conj(v);
    }
  }

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
      throw input_error("HermitianMatrix: index out of range");
    return static_cast<std::size_t>(i) * dim_ + j;
  }

  int dim_;
  std::vector<cplx> data_;
};

enum class Definiteness { PositiveDefinite, SemidefiniteBand, Indefinite };

/// Three-valued definiteness result. min_pivot_or_eig is the quantity that
/// drove the verdict: the smallest Cholesky pivot when the factorization
/// completes, otherwise the most negative remaining diagonal entry or
/// 2x2-minor eigenvalue bound found.
struct DefinitenessVerdict {
  Definiteness kind;
  double min_pivot_or_eig;
};

inline const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive_definite";
    case Definiteness::SemidefiniteBand: return "semidefinite_band";
    case Definiteness::Indefinite: return "indefinite";
  }
  return "?";
}

/// Decides the sign of H by pivoted Cholesky (largest remaining diagonal
/// entry as pivot). Deterministic, O(dim^3); intended for dim <= 16.
///
///   PositiveDefinite  — the factorization completes with every pivot > tol
///   Indefinite        — evidence of an eigenvalue < -tol
///   SemidefiniteBand  — everything remaining sits inside [-tol, tol]
///
/// When the largest remaining diagonal falls inside the band the routine
/// still has to rule out hidden negative directions: a Hermitian matrix
/// with near-zero diagonal but a large off-diagonal entry is indefinite
/// (the 2x2 principal minor [[a,b],[conj(b),c]] has an eigenvalue
/// (a+c)/2 - sqrt(((a-c)/2)^2 + |b|^2), which interlaces the spectrum).
inline DefinitenessVerdict definiteness(const HermitianMatrix& h, double tol) {
  if (!(tol > 0.0)) throw input_error("definiteness: tol must be positive");
  const int n = h.dim();
  std::vector<cplx> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx v = h.at(i, j);
      require_finite(v, "definiteness");
      a[static_cast<std::size_t>(i) * n + j] = v;
    }
  auto at = [&](int i, int j) -> cplx& { return a[static_cast<std::size_t>(i) * n + j]; };

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  auto swap_index = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < n; ++k) std::swap(at(i, k), at(j, k));
    for (int k = 0; k < n; ++k) std::swap(at(k, i), at(k, j));
    std::swap(perm[i], perm[j]);
  };

  double min_pivot = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    int m = k;
    for (int j = k + 1; j < n; ++j)
      if (at(j, j).real() > at(m, m).real()) m = j;
    const double d = at(m, m).real();

    if (d <= tol) {
      // No usable pivot left. Scan the remaining block for negativity.
      double worst = d;
      for (int i = k; i < n; ++i) worst = std::min(worst, at(i, i).real());
      if (worst < -tol) return {Definiteness::Indefinite, worst};
      for (int i = k; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const double ai = at(i, i).real();
          const double aj = at(j, j).real();
          const double b = std::abs(at(i, j));
          const double lam = 0.5 * (ai + aj) - std::hypot(0.5 * (ai - aj), b);
          worst = std::min(worst, lam);
        }
      if (worst < -tol) return {Definiteness::Indefinite, worst};
      return {Definiteness::SemidefiniteBand, worst};
    }

    swap_index(k, m);
    min_pivot = std::min(min_pivot, d);
    for (int i = k + 1; i < n; ++i) {
      const cplx lik = at(i, k) / d;
      for (int j = k + 1; j <= i; ++j) {
        const cplx v = at(i, j) - lik * std::conj(at(j, k));
        at(i, j) = v;
        at(j, i) = std::conj(v);
      }
      at(i, i) = cplx(at(i, i).real(), 0.0);
    }
  }
  return {Definiteness::PositiveDefinite, min_pivot};
}

}  // namespace symdisc
