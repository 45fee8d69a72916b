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

#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "symdisc/numerics.hpp"
#include "symdisc/point.hpp"
#include "symdisc/polynomial.hpp"

namespace symdisc {

/// Deterministic sample source. The generator is std::mt19937_64 seeded
/// directly with the given seed; uniform doubles in [0,1) are
/// (next() >> 11) * 2^-53. Every drawing routine below consumes draws in
/// a fixed documented order, so a (kind, n, count, seed) corpus is fully
/// reproducible.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0,1), 53 bits.
  double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  /// Uniform over the open unit disc, by rejection from the square
  /// [-1,1)^2; two draws per attempt.
  cplx unit_disc() {
    while (true) {
      const double x = 2.0 * u01() - 1.0;
      const double y = 2.0 * u01() - 1.0;
      if (x * x + y * y < 1.0) return {x, y};
    }
  }

  /// Uniform over the unit circle; one draw (the angle).
  cplx unit_circle() {
    const double t = 2.0 * std::numbers::pi * u01();
    return {std::cos(t), std::sin(t)};
  }

 private:
  std::mt19937_64 eng_;
};

enum class SampleKind { Interior, Torus, Exterior, UniformBox };

inline const char* to_string(SampleKind k) {
  switch (k) {
    case SampleKind::Interior: return "interior";
    case SampleKind::Torus: return "torus";
    case SampleKind::Exterior: return "exterior";
    case SampleKind::UniformBox: return "uniform-box";
  }
  return "?";
}

/// z in D^n, coordinates drawn in index order.
inline std::vector<cplx> draw_disc_tuple(int n, SampleStream& rng) {
  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (auto& v : z) v = rng.unit_disc();
  return z;
}

/// z in T^n, coordinates drawn in index order.
inline std::vector<cplx> draw_torus_tuple(int n, SampleStream& rng) {
  std::vector<cplx> z(static_cast<std::size_t>(n));
  for (auto& v : z) v = rng.unit_circle();
  return z;
}

/// A disc tuple with one coordinate pushed outside: index k = floor(u*n),
/// modulus 2 - u' in (1,2], angle 2*pi*u''. Draw order: the n disc
/// coordinates, then k, then modulus, then angle.
inline std::vector<cplx> draw_exterior_tuple(int n, SampleStream& rng) {
  std::vector<cplx> z = draw_disc_tuple(n, rng);
  int k = static_cast<int>(rng.u01() * n);
  if (k >= n) k = n - 1;
  const double m = 2.0 - rng.u01();
  const double t = 2.0 * std::numbers::pi * rng.u01();
  z[static_cast<std::size_t>(k)] = cplx(m * std::cos(t), m * std::sin(t));
  return z;
}

/// One sample point of the given kind. Interior, torus, and exterior
/// kinds symmetrize a coordinate tuple; uniform-box draws the
/// symmetrized coordinates directly, s_j with re/im uniform in
/// [-C(n,j), C(n,j)] (re before im, j ascending) and p in [-1,1]^2.
inline SymPoint draw_sample(SampleKind kind, int n, SampleStream& rng) {
  if (n < 1 || n > kMaxDegree) throw input_error("draw_sample: require 1 <= n <= 16");
  switch (kind) {
    case SampleKind::Interior: return symmetrize(PreimagePoint(draw_disc_tuple(n, rng)));
    case SampleKind::Torus: return symmetrize(PreimagePoint(draw_torus_tuple(n, rng)));
    case SampleKind::Exterior: return symmetrize(PreimagePoint(draw_exterior_tuple(n, rng)));
    case SampleKind::UniformBox: {
      std::vector<cplx> coords(static_cast<std::size_t>(n));
      for (int j = 1; j <= n; ++j) {
        const double bound = static_cast<double>(binomial(n, j));
        const double re = bound * (2.0 * rng.u01() - 1.0);
        const double im = bound * (2.0 * rng.u01() - 1.0);
        coords[static_cast<std::size_t>(j - 1)] = cplx(re, im);
      }
      return SymPoint::from_coords(std::move(coords));
    }
  }
  throw input_error("draw_sample: unknown kind");
}

inline std::vector<SymPoint> make_corpus(SampleKind kind, int n, int count, std::uint64_t seed) {
  if (count < 1) throw input_error("make_corpus: count must be at least 1");
  SampleStream rng(seed);
  std::vector<SymPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(draw_sample(kind, n, rng));
  return out;
}

}  // namespace symdisc
