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

#include <complex>

#include "symdisc/numerics.hpp"
#include "symdisc/point.hpp"
#include "symdisc/polynomial.hpp"

namespace symdisc {

/// Toeplitz factors of the Schur-Cohn form of a monic polynomial
/// p(z) = z^n + a_1 z^(n-1) + ... + a_n (a_0 = 1):
///
///   U[i][i+t] = conj(a_t)   for t = 0..n-1-i   (upper triangular)
///   L[i][i+t] = a_{n-t}     for t = 0..n-1-i   (upper triangular)
///   H = U^H U - L^H L
///
/// All zeros of p lie in the open unit disc exactly when H is positive
/// definite; H is singular exactly when p shares a zero with its
/// reflected conjugate (in particular when a zero sits on the circle).
struct SchurMatrixPair {
  ComplexMatrix U;
  ComplexMatrix L;
  HermitianMatrix H;
};

inline SchurMatrixPair schur_factors(const MonicPoly& p) {
  const int n = p.degree();
  ComplexMatrix u(n);
  ComplexMatrix l(n);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t + i < n; ++t) {
      const cplx at = (t == 0) ? cplx(1.0) : p.coeff(t);
      u.set(i, i + t, std::conj(at));
      l.set(i, i + t, p.coeff(n - t));
    }

  HermitianMatrix h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      // (U^H U - L^H L)[i][j]; accumulated in extended precision so exact
      // cancellations (boundary polynomials) survive the subtraction.
      std::complex<long double> acc(0.0L);
      for (int k = 0; k < n; ++k) {
        const cplx uk_i = u.at(k, i);
        const cplx uk_j = u.at(k, j);
        const cplx lk_i = l.at(k, i);
        const cplx lk_j = l.at(k, j);
        acc += std::complex<long double>(std::conj(uk_i)) * std::complex<long double>(uk_j);
        acc -= std::complex<long double>(std::conj(lk_i)) * std::complex<long double>(lk_j);
      }
      if (i == j)
        h.set(i, i, static_cast<double>(acc.real()));
      else
        h.set(i, j, cplx(static_cast<double>(acc.real()), static_cast<double>(acc.imag())));
    }
  return {std::move(u), std::move(l), std::move(h)};
}

/// The Hermitian Schur-Cohn matrix H = U^H U - L^H L of p.
inline HermitianMatrix schur_cohn_matrix(const MonicPoly& p) {
  return schur_factors(p).H;
}

enum class DiscLocation { Inside, Band, NotInside };

inline const char* to_string(DiscLocation v) {
  switch (v) {
    case DiscLocation::Inside: return "inside";
    case DiscLocation::Band: return "band";
    case DiscLocation::NotInside: return "not_inside";
  }
  return "?";
}

/// Whether all zeros of p lie in the open unit disc, decided from the
/// definiteness of the Schur-Cohn matrix at the given tolerance.
inline DiscLocation zeros_in_open_disc(const MonicPoly& p, double tol) {
  const DefinitenessVerdict v = definiteness(schur_cohn_matrix(p), tol);
  switch (v.kind) {
    case Definiteness::PositiveDefinite: return DiscLocation::Inside;
    case Definiteness::SemidefiniteBand: return DiscLocation::Band;
    case Definiteness::Indefinite: return DiscLocation::NotInside;
  }
  return DiscLocation::Band;
}

/// The membership test matrix of a symmetrized point (n >= 2): the
/// Schur-Cohn matrix of its associated polynomial. Corner entries have
/// the closed forms H[0][0] = 1 - |p|^2 and
/// H[1][1] = 1 + |s_1|^2 - |s_{n-1}|^2 - |p|^2.
inline HermitianMatrix gn_matrix(const SymPoint& x) {
  if (x.n() < 2) throw input_error("gn_matrix: point dimension must be at least 2");
  return schur_cohn_matrix(associated_polynomial(x));
}

}  // namespace symdisc
