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

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symdisc/numerics.hpp"
#include "symdisc/point.hpp"
#include "symdisc/polynomial.hpp"
#include "symdisc/schur.hpp"

namespace symdisc {

/// Classification of a point relative to the symmetrized polydisc:
/// interior of the open region, boundary of the closed region, the
/// distinguished (torus-image) part of that boundary, outside the closed
/// region, or numerically undecidable at the configured tolerances.
enum class Region {
  InteriorGn,
  BoundaryGamma,
  DistinguishedBoundary,
  Outside,
  ToleranceBand,
};

/// Stable integer codes used in grid output.
inline int region_code(Region r) {
  switch (r) {
    case Region::Outside: return 0;
    case Region::InteriorGn: return 1;
    case Region::BoundaryGamma: return 2;
    case Region::DistinguishedBoundary: return 3;
    case Region::ToleranceBand: return 4;
  }
  return 4;
}

inline const char* to_string(Region r) {
  switch (r) {
    case Region::InteriorGn: return "interior";
    case Region::BoundaryGamma: return "boundary";
    case Region::DistinguishedBoundary: return "distinguished_boundary";
    case Region::Outside: return "outside";
    case Region::ToleranceBand: return "tolerance_band";
  }
  return "?";
}

/// Membership in the closed region (boundary classes included).
inline bool region_member(Region r) {
  return r == Region::InteriorGn || r == Region::BoundaryGamma ||
         r == Region::DistinguishedBoundary;
}

/// Method-specific evidence attached to a verdict. Only the fields the
/// deciding method actually produced are populated.
struct Certificate {
  std::optional<double> max_root_modulus;
  std::optional<double> min_root_modulus;
  std::vector<cplx> roots;                    // oracle evidence
  std::vector<std::vector<cplx>> beta_chain;  // reduction evidence, coords per level
  std::optional<double> min_pivot_or_eig;     // matrix evidence
  std::optional<double> margin;  // signed distance of the deciding quantity from its threshold
  bool delegated = false;        // the reduction handed the final call to the oracle
  bool not_applicable = false;   // the method's precondition did not hold
};

struct RegionVerdict {
  Region region;
  const char* method;
  Certificate certificate;
};

/// Definitional classifier: roots of the associated polynomial.
/// The point is interior exactly when every root lies in the open unit
/// disc, on the distinguished boundary exactly when every root is
/// unimodular; the deciding quantity is the max root modulus m, with
/// bands of half-width boundary_band around m = 1.
inline RegionVerdict classify_oracle(const SymPoint& pt, const ToleranceConfig& cfg) {
  cfg.validate();
  const RootSet rs = find_roots(associated_polynomial(pt), cfg.root_residual);
  if (!rs.converged)
    throw oracle_error("classify_oracle: root refinement did not reach the residual bound");
  double maxm = 0.0;
  double minm = std::numeric_limits<double>::infinity();
  for (const cplx& r : rs.roots) {
    const double a = std::abs(r);
    maxm = std::max(maxm, a);
    minm = std::min(minm, a);
  }
  Certificate cert;
  cert.roots = rs.roots;
  cert.max_root_modulus = maxm;
  cert.min_root_modulus = minm;
  cert.margin = maxm - 1.0;
  Region region;
  if (maxm < 1.0 - cfg.boundary_band)
    region = Region::InteriorGn;
  else if (maxm > 1.0 + cfg.boundary_band)
    region = Region::Outside;
  else
    region = (minm >= 1.0 - cfg.boundary_band) ? Region::DistinguishedBoundary
                                               : Region::BoundaryGamma;
  return {region, "oracle", std::move(cert)};
}

/// One reduction step: the unique beta with s_j = beta_j + conj(beta_{n-j}) p,
/// i.e. beta_j = (s_j - conj(s_{n-j}) p) / (1 - |p|^2). Well posed whenever
/// |p| is bounded away from 1; classification validity additionally needs
/// |p| < 1 (callers enforce it).
inline SymPoint beta_reduce(const SymPoint& pt, const ToleranceConfig& cfg) {
  cfg.validate();
  const int n = pt.n();
  if (n < 2) throw input_error("beta_reduce: dimension must be at least 2");
  const cplx p = pt.p();
  const double m = std::abs(p);
  if (std::abs(m - 1.0) <= cfg.p_unimodular_band)
    throw reduction_error("beta_reduce: |p| within the unimodular band, system is singular");
  const double denom = 1.0 - m * m;
  std::vector<cplx> beta(static_cast<std::size_t>(n - 1));
  for (int j = 1; j <= n - 1; ++j)
    beta[static_cast<std::size_t>(j - 1)] = (pt.s(j) - std::conj(pt.s(n - j)) * p) / denom;
  return SymPoint::from_coords(std::move(beta));
}

/// Membership in the closed region by dimension descent: reduce while
/// |p| is safely away from the unit circle, delegate to the oracle when
/// it is not (there, membership forces all roots onto the circle, so the
/// oracle is definitive), and read the verdict off the dimension-1 tail.
/// Interiority lifts through strict levels; a boundary or distinguished
/// verdict below the top level lifts to a plain boundary verdict.
inline RegionVerdict in_gamma_recursive(const SymPoint& pt, const ToleranceConfig& cfg) {
  cfg.validate();
  Certificate cert;
  SymPoint cur = pt;
  int depth = 0;
  while (true) {
    const double m = std::abs(cur.p());
    if (cur.n() == 1) {
      cert.margin = m - 1.0;
      Region region;
      if (m > 1.0 + cfg.boundary_band)
        region = Region::Outside;
      else if (m >= 1.0 - cfg.boundary_band)
        region = Region::BoundaryGamma;
      else
        region = Region::InteriorGn;
      return {region, "gamma_recursive", std::move(cert)};
    }
    if (m > 1.0 + cfg.p_unimodular_band) {
      cert.margin = m - 1.0;
      return {Region::Outside, "gamma_recursive", std::move(cert)};
    }
    if (std::abs(m - 1.0) <= cfg.p_unimodular_band) {
      RegionVerdict inner = classify_oracle(cur, cfg);
      cert.delegated = true;
      cert.roots = std::move(inner.certificate.roots);
      cert.max_root_modulus = inner.certificate.max_root_modulus;
      cert.min_root_modulus = inner.certificate.min_root_modulus;
      cert.margin = inner.certificate.margin;
      Region region = inner.region;
      if (depth > 0 && region == Region::DistinguishedBoundary) region = Region::BoundaryGamma;
      return {region, "gamma_recursive", std::move(cert)};
    }
    SymPoint next = beta_reduce(cur, cfg);
    cert.beta_chain.push_back(next.coords());
    cur = std::move(next);
    ++depth;
  }
}

/// Membership in the open region by the strict form of the same descent.
/// Never delegates: whenever |p| cannot be strictly separated from 1 the
/// verdict is ToleranceBand. Possible regions: InteriorGn, Outside,
/// ToleranceBand.
inline RegionVerdict in_gn_recursive(const SymPoint& pt, const ToleranceConfig& cfg) {
  cfg.validate();
  Certificate cert;
  SymPoint cur = pt;
  while (true) {
    const double m = std::abs(cur.p());
    if (cur.n() == 1) {
      cert.margin = m - 1.0;
      Region region;
      if (m < 1.0 - cfg.boundary_band)
        region = Region::InteriorGn;
      else if (m > 1.0 + cfg.boundary_band)
        region = Region::Outside;
      else
        region = Region::ToleranceBand;
      return {region, "gn_recursive", std::move(cert)};
    }
    if (m > 1.0 + cfg.p_unimodular_band) {
      cert.margin = m - 1.0;
      return {Region::Outside, "gn_recursive", std::move(cert)};
    }
    if (m >= 1.0 - cfg.p_unimodular_band) {
      cert.margin = m - 1.0;
      return {Region::ToleranceBand, "gn_recursive", std::move(cert)};
    }
    SymPoint next = beta_reduce(cur, cfg);
    cert.beta_chain.push_back(next.coords());
    cur = std::move(next);
  }
}

/// Membership in the open region by positive definiteness of the test
/// matrix. Applicable only for |p| < 1 - p_unimodular_band; otherwise the
/// verdict is ToleranceBand with not_applicable set, and callers fall
/// back to the other methods. Indefiniteness beyond the tolerance rules
/// the point out of the closed region as well (the matrix is positive
/// semidefinite on all of it where |p| < 1), so that verdict is Outside.
inline RegionVerdict in_gn_schur(const SymPoint& pt, const ToleranceConfig& cfg) {
  cfg.validate();
  Certificate cert;
  const double m = std::abs(pt.p());
  if (!(m < 1.0 - cfg.p_unimodular_band)) {
    cert.not_applicable = true;
    cert.margin = m - 1.0;
    return {Region::ToleranceBand, "gn_schur", std::move(cert)};
  }
  DefinitenessVerdict v{};
  if (pt.n() == 1) {
    HermitianMatrix h(1);
    h.set(0, 0, 1.0 - m * m);
    v = definiteness(h, cfg.matrix_tol);
  } else {
    v = definiteness(gn_matrix(pt), cfg.matrix_tol);
  }
  cert.min_pivot_or_eig = v.min_pivot_or_eig;
  cert.margin = v.min_pivot_or_eig;
  Region region;
  switch (v.kind) {
    case Definiteness::PositiveDefinite: region = Region::InteriorGn; break;
    case Definiteness::SemidefiniteBand: region = Region::ToleranceBand; break;
    default: region = Region::Outside; break;
  }
  return {region, "gn_schur", std::move(cert)};
}

/// Boolean distinguished-boundary verdict with evidence.
struct BoundaryCheck {
  bool on_boundary;
  Certificate certificate;  // roots; margin = max_j ||root_j| - 1|
  /// Witness data for the linear system s_j = beta_j + conj(beta_{n-j}) p
  /// at unimodular p, produced only when |p| is inside the band around 1:
  /// the least-squares beta, its reconstruction residual, and the
  /// consistency defect max_j |s_j - conj(s_{n-j}) p_hat|.
  std::optional<std::vector<cplx>> beta_witness;
  std::optional<double> witness_residual;
  std::optional<double> consistency_defect;
};

/// Whether the point lies on the distinguished boundary: every root of
/// the associated polynomial unimodular to within boundary_band.
inline BoundaryCheck on_distinguished_boundary(const SymPoint& pt, const ToleranceConfig& cfg) {
  cfg.validate();
  const RootSet rs = find_roots(associated_polynomial(pt), cfg.root_residual);
  if (!rs.converged)
    throw oracle_error(
        "on_distinguished_boundary: root refinement did not reach the residual bound");
  BoundaryCheck out;
  double dev = 0.0;
  double maxm = 0.0;
  double minm = std::numeric_limits<double>::infinity();
  for (const cplx& r : rs.roots) {
    const double a = std::abs(r);
    dev = std::max(dev, std::abs(a - 1.0));
    maxm = std::max(maxm, a);
    minm = std::min(minm, a);
  }
  out.on_boundary = dev <= cfg.boundary_band;
  out.certificate.roots = rs.roots;
  out.certificate.max_root_modulus = maxm;
  out.certificate.min_root_modulus = minm;
  out.certificate.margin = dev;

  const int n = pt.n();
  const double pm = std::abs(pt.p());
  if (n >= 2 && std::abs(pm - 1.0) <= cfg.p_unimodular_band) {
    // The system is singular at |p| = 1; solve it in the least-squares
    // sense pair by pair. Equations j and n-j couple only each other:
    // both residuals depend on w = beta_j + conj(beta_{n-j}) p alone, so
    // the optimum is the midpoint of the two right-hand sides, split
    // symmetrically. The self-paired equation (n even, j = n/2) projects
    // s_j onto the attainable line exp(i arg(p)/2) * R.
    const cplx phat = pt.p() / pm;
    std::vector<cplx> beta(static_cast<std::size_t>(n - 1));
    double defect = 0.0;
    for (int j = 1; j <= n - 1; ++j)
      defect = std::max(defect, std::abs(pt.s(j) - std::conj(pt.s(n - j)) * phat));
    for (int j = 1; j <= n - 1; ++j) {
      const int k = n - j;
      if (j < k) {
        const cplx w = 0.5 * (pt.s(j) + std::conj(pt.s(k)) * phat);
        beta[static_cast<std::size_t>(j - 1)] = 0.5 * w;
        beta[static_cast<std::size_t>(k - 1)] = 0.5 * std::conj(w) * phat;
      } else if (j == k) {
        const cplx q = std::polar(1.0, std::arg(pt.p()) / 2.0);
        beta[static_cast<std::size_t>(j - 1)] = 0.5 * q * (std::conj(q) * pt.s(j)).real();
      }
    }
    double wres = 0.0;
    for (int j = 1; j <= n - 1; ++j) {
      const cplx lhs = beta[static_cast<std::size_t>(j - 1)] +
                       std::conj(beta[static_cast<std::size_t>(n - j - 1)]) * phat;
      wres = std::max(wres, std::abs(lhs - pt.s(j)));
    }
    out.beta_witness = std::move(beta);
    out.witness_residual = wres;
    out.consistency_defect = defect;
  }
  return out;
}

/// Fast strict rejection filter: |s_j| < C(n,j) for every j and |p| < 1
/// are necessary for membership in the open region.
inline bool necessary_bounds(const SymPoint& pt) {
  const int n = pt.n();
  if (!(std::abs(pt.p()) < 1.0)) return false;
  for (int j = 1; j <= n - 1; ++j)
    if (!(std::abs(pt.s(j)) < static_cast<double>(binomial(n, j)))) return false;
  return true;
}

/// Pairwise hypothesis of the kernel criterion: every two coordinates
/// satisfy |z_i + z_j| < 2 and |z_i z_j| < 1.
inline bool pairwise_bounds(const PreimagePoint& z, const ToleranceConfig& cfg) {
  cfg.validate();
  const auto v = z.z();
  const int n = z.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!(std::abs(v[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(j)]) < 2.0))
        return false;
      if (!(std::abs(v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(j)]) < 1.0))
        return false;
    }
  return true;
}

/// Kernel-product criterion: under the hypotheses (binomial bounds on the
/// symmetrization, pairwise bounds on the coordinates), the point's image
/// is interior exactly when prod_j (1 - |z_j|^2) > 0. The product is
/// evaluated as a sign plus a sum of log magnitudes so that neither
/// underflow nor sign loss occurs near the dimension cap; "positive" means
/// the sign is positive and the product clears boundary_band^n.
/// Hypothesis violations are errors, not verdicts.
inline bool kernel_criterion(const PreimagePoint& z, const ToleranceConfig& cfg) {
  cfg.validate();
  if (!necessary_bounds(symmetrize(z)))
    throw hypothesis_error(
        "kernel_criterion: binomial bound (|s_j| < C(n,j), |p| < 1) violated");
  if (!pairwise_bounds(z, cfg))
    throw hypothesis_error(
        "kernel_criterion: pairwise bound (|z_i+z_j| < 2, |z_i z_j| < 1) violated");
  int sign = 1;
  double logmag = 0.0;
  for (const cplx& v : z.z()) {
    const double f = 1.0 - std::norm(v);
    if (f < 0.0) sign = -sign;
    logmag += std::log(std::abs(f));
  }
  return sign > 0 && logmag > static_cast<double>(z.n()) * std::log(cfg.boundary_band);
}

/// Outcome of one method inside a consensus run.
struct MethodOutcome {
  const char* method;
  std::optional<RegionVerdict> verdict;  // absent when the method errored
  std::string error;                     // non-empty exactly when verdict is absent
};

/// Cross-validation report. Methods run in a fixed order (oracle, then
/// the two reductions, then the matrix test when applicable); per-method
/// errors are recorded without aborting the rest. agreed_region is the
/// common region of all non-band verdicts, or ToleranceBand when every
/// method abstained. A disagreement among non-band verdicts is an anomaly
/// only when one method places the point strictly inside and another
/// strictly outside: boundary-class verdicts measure band proximity with
/// different functionals and may legitimately differ near the boundary.
struct ConsensusReport {
  std::vector<MethodOutcome> methods;
  std::optional<Region> agreed_region;
  bool disagreement = false;
  bool anomaly = false;
  std::string note;
};

inline ConsensusReport classify_consensus(const SymPoint& pt, const ToleranceConfig& cfg) {
  cfg.validate();
  ConsensusReport rep;
  const auto run = [&rep](const char* name, auto&& fn) {
    MethodOutcome mo;
    mo.method = name;
    try {
      mo.verdict = fn();
    } catch (const error& e) {
      mo.error = e.what();
    }
    rep.methods.push_back(std::move(mo));
  };
  run("oracle", [&] { return classify_oracle(pt, cfg); });
  run("gamma_recursive", [&] { return in_gamma_recursive(pt, cfg); });
  run("gn_recursive", [&] { return in_gn_recursive(pt, cfg); });
  if (std::abs(pt.p()) < 1.0 - cfg.p_unimodular_band)
    run("gn_schur", [&] { return in_gn_schur(pt, cfg); });

  bool saw_interior = false;
  bool saw_outside = false;
  bool mixed = false;
  std::optional<Region> agreed;
  for (const MethodOutcome& mo : rep.methods) {
    if (!mo.verdict) continue;
    const Region r = mo.verdict->region;
    if (r == Region::ToleranceBand) continue;
    saw_interior = saw_interior || r == Region::InteriorGn;
    saw_outside = saw_outside || r == Region::Outside;
    if (!agreed)
      agreed = r;
    else if (*agreed != r)
      mixed = true;
  }
  if (!agreed) {
    rep.agreed_region = Region::ToleranceBand;
    rep.note = "no decisive verdict (tolerance bands or method errors only)";
  } else if (!mixed) {
    rep.agreed_region = *agreed;
    rep.note = "unanimous modulo tolerance bands";
  } else {
    rep.disagreement = true;
    rep.anomaly = saw_interior && saw_outside;
    rep.note = rep.anomaly ? "anomaly: interior vs outside beyond tolerance"
                           : "boundary-class verdicts differ within band semantics";
  }
  return rep;
}

}  // namespace symdisc
