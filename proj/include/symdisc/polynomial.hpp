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
#include <numbers>
#include <span>
#include <utility>
#include <vector>

#include "symdisc/numerics.hpp"

namespace symdisc {

/// Degree cap shared by the polynomial and point types. Everything in this
/// library is exact combinatorics plus dense O(n^2)..O(n^3) kernels, all
/// sized for small n; 16 keeps binomial sums far inside double range.
inline constexpr int kMaxDegree = 16;

/// Monic polynomial z^n + a_1 z^(n-1) + ... + a_n, stored as [a_1, ..., a_n].
/// The leading coefficient 1 is implicit. 1 <= n <= 16, all a_j finite.
class MonicPoly {
 public:
  explicit MonicPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty() || coeffs_.size() > static_cast<std::size_t>(kMaxDegree))
      throw input_error("MonicPoly: degree must be between 1 and 16");
    for (const cplx& c : coeffs_) require_finite(c, "MonicPoly");
  }

  int degree() const { return static_cast<int>(coeffs_.size()); }
  std::span<const cplx> coeffs() const { return coeffs_; }

  /// a_k for 1 <= k <= degree.
  cplx coeff(int k) const {
    if (k < 1 || k > degree()) throw input_error("MonicPoly::coeff: index out of range");
    return coeffs_[static_cast<std::size_t>(k - 1)];
  }

 private:
  std::vector<cplx> coeffs_;
};

/// Elementary symmetric polynomials e_1..e_n of the given points, computed
/// by the stable one-point-at-a-time recurrence e_k += z * e_{k-1}.
inline std::vector<cplx> elementary_symmetric(std::span<const cplx> points) {
  const std::size_t n = points.size();
  if (n < 1 || n > static_cast<std::size_t>(kMaxDegree))
    throw input_error("elementary_symmetric: require 1 <= n <= 16 points");
  for (const cplx& z : points) require_finite(z, "elementary_symmetric");
  std::vector<cplx> e(n + 1, cplx(0.0));
  e[0] = cplx(1.0);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t k = std::min(m + 1, n); k >= 1; --k) e[k] += points[m] * e[k - 1];
  }
  return std::vector<cplx>(e.begin() + 1, e.end());
}

/// Horner evaluation of p at z.
inline cplx evaluate(const MonicPoly& p, cplx z) {
  require_finite(z, "evaluate");
  cplx acc(1.0);
  for (const cplx& c : p.coeffs()) acc = acc * z + c;
  return acc;
}

/// Roots with multiplicity plus a convergence certificate.
///
/// residual is the largest normalized residual over the returned roots,
///   max_j |p(r_j)| / s(r_j),   s(r) = max(1, sum_k |a_k| |r|^(n-k)),
/// i.e. the coefficient-wise backward error of accepting r_j as a root.
/// The normalization makes the certificate meaningful for polynomials of
/// any coefficient scale; for |a_k| and |r| of order one it coincides with
/// the raw residual. converged means residual <= the requested bound.
struct RootSet {
  std::vector<cplx> roots;
  double residual;
  bool converged;
};

namespace detail {

using lcplx = std::complex<long double>;

/// Horner in extended precision; coeffs holds [a_1..a_n] of a monic poly.
inline lcplx horner_l(std::span<const lcplx> coeffs, lcplx z) {
  lcplx acc(1.0L);
  for (const lcplx& c : coeffs) acc = acc * z + c;
  return acc;
}

/// Derivative of the same monic polynomial at z.
inline lcplx horner_deriv_l(std::span<const lcplx> coeffs, lcplx z) {
  const int n = static_cast<int>(coeffs.size());
  lcplx acc(static_cast<long double>(n));
  for (int k = 1; k < n; ++k)
    acc = acc * z + static_cast<long double>(n - k) * coeffs[static_cast<std::size_t>(k - 1)];
  return acc;
}

inline long double residual_scale(std::span<const lcplx> coeffs, long double r) {
  long double s = 1.0L;  // leading term |z|^n / |z|^n normalization anchor
  long double pw = 1.0L;
  const int n = static_cast<int>(coeffs.size());
  long double acc = 0.0L;
  for (int k = n; k >= 1; --k) {
    acc += std::abs(coeffs[static_cast<std::size_t>(k - 1)]) * pw;
    pw *= r;
  }
  acc += pw;  // the monic leading term
  return std::max(s, acc);
}

/// One Aberth-Ehrlich sweep over all current approximations.
/// Returns the largest relative displacement of the sweep.
inline long double aberth_sweep(std::span<const lcplx> coeffs, std::vector<lcplx>& z) {
  const int d = static_cast<int>(z.size());
  long double worst = 0.0L;
  for (int i = 0; i < d; ++i) {
    const lcplx pv = horner_l(coeffs, z[i]);
    if (pv == lcplx(0.0L)) continue;
    lcplx dv = horner_deriv_l(coeffs, z[i]);
    if (dv == lcplx(0.0L)) {
      // Stationary point; nudge off it deterministically.
      z[i] += lcplx(1e-3L, 1e-3L) * (1.0L + std::abs(z[i]));
      worst = std::max(worst, 1e-3L);
      continue;
    }
    const lcplx ratio = pv / dv;
    lcplx s(0.0L);
    for (int j = 0; j < d; ++j) {
      if (j == i) continue;
      const lcplx diff = z[i] - z[j];
      if (diff == lcplx(0.0L)) continue;
      s += 1.0L / diff;
    }
    const lcplx denom = 1.0L - ratio * s;
    const lcplx w = (denom == lcplx(0.0L)) ? ratio : ratio / denom;
    z[i] -= w;
    worst = std::max(worst, std::abs(w) / (1.0L + std::abs(z[i])));
  }
  return worst;
}

inline std::vector<lcplx> initial_guesses(std::span<const lcplx> coeffs, long double radius) {
  const int d = static_cast<int>(coeffs.size());
  std::vector<lcplx> z(static_cast<std::size_t>(d));
  const long double phase = 0.43L;  // fixed offset keeps guesses off the axes
  for (int i = 0; i < d; ++i) {
    const long double frac =
        static_cast<long double>(i) * 0.6180339887498949L - std::floor(static_cast<long double>(i) * 0.6180339887498949L);
    const long double r = radius * (1.0L + 0.05L * frac);
    const long double t = 2.0L * std::numbers::pi_v<long double> * i / d + phase;
    z[static_cast<std::size_t>(i)] = lcplx(r * std::cos(t), r * std::sin(t));
  }
  return z;
}

}  // namespace detail

/// Simultaneous root refinement (Aberth-Ehrlich) in extended precision.
///
/// Deterministic: initial guesses sit on a fixed perturbed circle, sweeps
/// run in index order, and no randomness is involved. If the first run
/// fails to reach the bound the iteration restarts once from a different
/// radius; a still-unmet bound is reported via converged = false rather
/// than an exception, so callers can decide how much residual they accept.
inline RootSet find_roots(const MonicPoly& p, double residual_bound, int max_iters = 400) {
  if (!(residual_bound > 0.0)) throw input_error("find_roots: residual_bound must be positive");
  if (max_iters < 1) throw input_error("find_roots: max_iters must be positive");

  const int n = p.degree();
  std::vector<detail::lcplx> full(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k)
    full[static_cast<std::size_t>(k - 1)] = detail::lcplx(p.coeff(k).real(), p.coeff(k).imag());

  // Exact zero roots deflate exactly: while a_n == 0, p(z) = z * q(z).
  int zero_roots = 0;
  std::vector<detail::lcplx> work = full;
  while (!work.empty() && work.back() == detail::lcplx(0.0L)) {
    work.pop_back();
    ++zero_roots;
  }

  auto assemble = [&](const std::vector<detail::lcplx>& approx) {
    std::vector<detail::lcplx> rl(approx);
    rl.insert(rl.end(), static_cast<std::size_t>(zero_roots), detail::lcplx(0.0L));
    long double worst = 0.0L;
    for (const detail::lcplx& r : rl) {
      const long double res = std::abs(detail::horner_l(full, r));
      worst = std::max(worst, res / detail::residual_scale(full, std::abs(r)));
    }
    RootSet out;
    out.roots.reserve(rl.size());
    for (const detail::lcplx& r : rl)
      out.roots.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    out.residual = static_cast<double>(worst);
    out.converged = out.residual <= residual_bound;
    return out;
  };

  const int d = static_cast<int>(work.size());
  if (d == 0) return assemble({});
  if (d == 1) return assemble({-work[0]});

  long double maxabs = 0.0L;
  for (const detail::lcplx& c : work) maxabs = std::max(maxabs, std::abs(c));
  const long double cauchy = 1.0L + maxabs;  // all roots lie inside this circle

  RootSet best{{}, std::numeric_limits<double>::infinity(), false};
  for (const long double radius : {cauchy, 0.5L + 0.5L * std::min(cauchy, 2.0L)}) {
    std::vector<detail::lcplx> z = detail::initial_guesses(work, radius);
    for (int it = 0; it < max_iters; ++it) {
      const long double moved = detail::aberth_sweep(work, z);
      if (moved < 1e-18L) break;
    }
    RootSet cand = assemble(z);
    if (cand.residual < best.residual) best = std::move(cand);
    if (best.converged) break;
  }
  return best;
}

/// Largest root modulus, via the converged oracle. Throws oracle_error if
/// the residual bound cannot be certified.
inline double max_root_modulus(const MonicPoly& p, double residual_bound) {
  const RootSet rs = find_roots(p, residual_bound);
  if (!rs.converged)
    throw oracle_error("max_root_modulus: root refinement did not reach the residual bound");
  double m = 0.0;
  for (const cplx& r : rs.roots) m = std::max(m, std::abs(r));
  return m;
}

}  // namespace symdisc
