#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "symdisc/point.hpp"
#include "symdisc/polynomial.hpp"
#include "symdisc/schur.hpp"

using symdisc::cplx;
using symdisc::DiscLocation;
using symdisc::gn_matrix;
using symdisc::HermitianMatrix;
using symdisc::MonicPoly;
using symdisc::schur_cohn_matrix;
using symdisc::SymPoint;
using symdisc::zeros_in_open_disc;

namespace {

SymPoint random_point(std::mt19937_64& eng, int n, double p_radius) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> s(n - 1);
  for (auto& c : s) c = 2.0 * cplx(u(eng), u(eng));
  cplx p;
  do {
    p = cplx(u(eng), u(eng));
  } while (std::abs(p) >= p_radius);
  return SymPoint(s, p);
}

}  // namespace

TEST_CASE("Schur-Cohn matrix of degree-1 polynomials") {
  const auto h0 = schur_cohn_matrix(MonicPoly({cplx(0.0)}));  // z
  REQUIRE(h0.dim() == 1);
  CHECK(h0.at(0, 0) == cplx(1.0));

  const cplx c(0.3, 0.4);
  const auto h1 = schur_cohn_matrix(MonicPoly({-c}));  // z - c
  CHECK(std::abs(h1.at(0, 0) - cplx(1.0 - std::norm(c))) < 1e-15);
}

TEST_CASE("Schur-Cohn matrix corners at degree 2") {
  const cplx s(0.7, 0.1);
  const cplx p(0.3, -0.2);
  const auto h = schur_cohn_matrix(MonicPoly({-s, p}));  // z^2 - s z + p
  REQUIRE(h.dim() == 2);
  CHECK(std::abs(h.at(0, 0) - cplx(1.0 - std::norm(p))) < 1e-15);
  CHECK(std::abs(h.at(1, 1) - cplx(1.0 - std::norm(p))) < 1e-15);
}

TEST_CASE("zeros_in_open_disc on hand cases") {
  const double tol = 1e-10;
  CHECK(zeros_in_open_disc(MonicPoly({cplx(0.0), cplx(0.0)}), tol) ==
        DiscLocation::Inside);
  CHECK(zeros_in_open_disc(MonicPoly({cplx(-2.0)}), tol) == DiscLocation::NotInside);
  // Double zero at 1: the form is singular there.
  CHECK(zeros_in_open_disc(MonicPoly({cplx(-2.0), cplx(1.0)}), tol) !=
        DiscLocation::Inside);
}

TEST_CASE("gn_matrix small cases") {
  const auto id2 = gn_matrix(SymPoint({cplx(0.0)}, cplx(0.0)));
  REQUIRE(id2.dim() == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(id2.at(i, j) == cplx(i == j ? 1.0 : 0.0));

  const auto dg = gn_matrix(SymPoint({cplx(0.0)}, cplx(0.5)));
  CHECK(std::abs(dg.at(0, 0) - cplx(0.75)) < 1e-15);
  CHECK(std::abs(dg.at(1, 1) - cplx(0.75)) < 1e-15);
  CHECK(std::abs(dg.at(0, 1)) < 1e-15);

  const auto id3 = gn_matrix(SymPoint({cplx(0.0), cplx(0.0)}, cplx(0.0)));
  REQUIRE(id3.dim() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(id3.at(i, j) == cplx(i == j ? 1.0 : 0.0));

  CHECK_THROWS_AS(gn_matrix(SymPoint({}, cplx(0.5))), symdisc::input_error);
}

TEST_CASE("gn_matrix at n=2 equals the closed-form 2x2 matrix") {
  std::mt19937_64 eng(5);
  for (int rep = 0; rep < 500; ++rep) {
    const SymPoint pt = random_point(eng, 2, 1.0);
    const cplx s = pt.s(1);
    const cplx p = pt.p();
    const auto h = gn_matrix(pt);
    CHECK(std::abs(h.at(0, 0) - cplx(1.0 - std::norm(p))) < 1e-14);
    CHECK(std::abs(h.at(1, 1) - cplx(1.0 - std::norm(p))) < 1e-14);
    CHECK(std::abs(h.at(0, 1) - (-std::conj(s) + s * std::conj(p))) < 1e-14);
    CHECK(std::abs(h.at(1, 0) - (-s + std::conj(s) * p)) < 1e-14);
  }
}

TEST_CASE("gn_matrix corner entries match their closed forms") {
  std::mt19937_64 eng(17);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 2 + static_cast<int>(eng() % 7);
    const SymPoint pt = random_point(eng, n, 1.0);
    const auto h = gn_matrix(pt);
    REQUIRE(h.dim() == n);
    const cplx s1 = pt.s(1);
    const cplx sn1 = pt.s(n - 1);
    const cplx p = pt.p();
    const double scale = 1.0 + std::norm(s1) + std::norm(sn1) + std::norm(p);
    CHECK(std::abs(h.at(0, 0) - cplx(1.0 - std::norm(p))) <= 1e-13 * scale);
    CHECK(std::abs(h.at(1, 1) - cplx(1.0 + std::norm(s1) - std::norm(sn1) - std::norm(p))) <=
          1e-13 * scale);
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    const cplx corner = sign * (std::conj(sn1) - s1 * std::conj(p));
    CHECK(std::abs(h.at(0, n - 1) - corner) <= 1e-13 * scale);
  }
}

TEST_CASE("every matrix returned is exactly Hermitian") {
  std::mt19937_64 eng(29);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + static_cast<int>(eng() % 7);
    const auto h = gn_matrix(random_point(eng, n, 1.0));
    for (int i = 0; i < n; ++i) {
      CHECK(h.at(i, i).imag() == 0.0);
      for (int j = 0; j < n; ++j) CHECK(h.at(i, j) == std::conj(h.at(j, i)));
    }
  }
}

TEST_CASE("zeros_in_open_disc agrees with the root oracle") {
  std::mt19937_64 eng(41);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  int done = 0;
  while (done < 500) {
    const int n = 1 + static_cast<int>(eng() % 8);
    std::vector<cplx> a(n);
    for (auto& c : a) {
      do {
        c = cplx(u(eng), u(eng));
      } while (std::abs(c) >= 2.0);
    }
    const MonicPoly poly(a);
    double m = 0.0;
    try {
      m = symdisc::max_root_modulus(poly, 1e-12);
    } catch (const symdisc::oracle_error&) {
      continue;
    }
    if (std::abs(m - 1.0) <= 1e-6) continue;
    ++done;
    const auto loc = zeros_in_open_disc(poly, 1e-10);
    if (m < 1.0)
      CHECK(loc == DiscLocation::Inside);
    else
      CHECK(loc == DiscLocation::NotInside);
  }
}
