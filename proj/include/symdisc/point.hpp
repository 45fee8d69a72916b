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

#include <utility>
#include <vector>

#include "symdisc/numerics.hpp"
#include "symdisc/polynomial.hpp"

namespace symdisc {

/// A point of C^n in symmetrized coordinates (s_1, ..., s_{n-1}, p):
/// the first n-1 elementary symmetric values plus the product p = e_n.
/// For n = 1 there is no s part and the point is just p.
class SymPoint {
 public:
  SymPoint(std::vector<cplx> s, cplx p) : s_(std::move(s)), p_(p) {
    if (s_.size() + 1 > static_cast<std::size_t>(kMaxDegree))
      throw input_error("SymPoint: dimension must be between 1 and 16");
    for (const cplx& v : s_) require_finite(v, "SymPoint");
    require_finite(p_, "SymPoint");
  }

  /// Builds from the flat coordinate list (s_1, ..., s_{n-1}, p).
  static SymPoint from_coords(std::vector<cplx> coords) {
    if (coords.empty()) throw input_error("SymPoint: empty coordinate list");
    const cplx p = coords.back();
    coords.pop_back();
    return SymPoint(std::move(coords), p);
  }

  int n() const { return static_cast<int>(s_.size()) + 1; }
  std::span<const cplx> s() const { return s_; }
  cplx p() const { return p_; }

  /// s_j for 1 <= j <= n-1.
  cplx s(int j) const {
    if (j < 1 || j >= n()) throw input_error("SymPoint::s: index out of range");
    return s_[static_cast<std::size_t>(j - 1)];
  }

  /// The flat coordinate list (s_1, ..., s_{n-1}, p).
  std::vector<cplx> coords() const {
    std::vector<cplx> c(s_);
    c.push_back(p_);
    return c;
  }

 private:
  std::vector<cplx> s_;
  cplx p_;
};

/// A point of C^n in plain coordinates, i.e. a candidate preimage tuple.
class PreimagePoint {
 public:
  explicit PreimagePoint(std::vector<cplx> z) : z_(std::move(z)) {
    if (z_.empty() || z_.size() > static_cast<std::size_t>(kMaxDegree))
      throw input_error("PreimagePoint: dimension must be between 1 and 16");
    for (const cplx& v : z_) require_finite(v, "PreimagePoint");
  }

  int n() const { return static_cast<int>(z_.size()); }
  std::span<const cplx> z() const { return z_; }

 private:
  std::vector<cplx> z_;
};

/// Every numerical threshold used by the classifiers, in one place.
/// All members must be strictly positive.
struct ToleranceConfig {
  /// Half-width of the indeterminate band around region boundaries.
  double boundary_band = 1e-9;
  /// Pivot threshold of the definiteness test.
  double matrix_tol = 1e-10;
  /// Normalized residual the root oracle must certify.
  double root_residual = 1e-12;
  /// Half-width of the band around |p| = 1 inside which the reduction
  /// step is ill conditioned and refuses to run.
  double p_unimodular_band = 1e-9;

  void validate() const {
    if (!(boundary_band > 0.0) || !(matrix_tol > 0.0) || !(root_residual > 0.0) ||
        !(p_unimodular_band > 0.0))
      throw input_error("ToleranceConfig: all tolerances must be strictly positive");
  }
};

/// The symmetrization map: z -> (e_1(z), ..., e_{n-1}(z), e_n(z)).
inline SymPoint symmetrize(const PreimagePoint& pt) {
  std::vector<cplx> e = elementary_symmetric(pt.z());
  const cplx p = e.back();
  e.pop_back();
  return SymPoint(std::move(e), p);
}

/// The monic polynomial whose root multiset is the preimage of x:
/// f(z) = z^n - s_1 z^(n-1) + s_2 z^(n-2) - ... + (-1)^n p,
/// returned in MonicPoly form with a_j = (-1)^j s_j and a_n = (-1)^n p.
inline MonicPoly associated_polynomial(const SymPoint& x) {
  const int n = x.n();
  std::vector<cplx> a(static_cast<std::size_t>(n));
  double sign = -1.0;
  for (int j = 1; j < n; ++j) {
    a[static_cast<std::size_t>(j - 1)] = sign * x.s(j);
    sign = -sign;
  }
  a[static_cast<std::size_t>(n - 1)] = sign * x.p();
  return MonicPoly(std::move(a));
}

/// Lifts a point beta of dimension n-1 together with a product value p
/// to dimension n via s_j = beta_j + conj(beta_{n-j}) p for j = 1..n-1,
/// where (beta_1, ..., beta_{n-1}) is beta's flat coordinate list. This
/// is the exact inverse of beta_reduce at the same p.
inline SymPoint reconstruct(const SymPoint& beta, cplx p) {
  require_finite(p, "reconstruct");
  const int n = beta.n() + 1;
  const std::vector<cplx> b = beta.coords();  // beta_1, ..., beta_{n-1}
  std::vector<cplx> s(static_cast<std::size_t>(n - 1));
  for (int j = 1; j <= n - 1; ++j)
    s[static_cast<std::size_t>(j - 1)] =
        b[static_cast<std::size_t>(j - 1)] + std::conj(b[static_cast<std::size_t>(n - j - 1)]) * p;
  return SymPoint(std::move(s), p);
}

}  // namespace symdisc
