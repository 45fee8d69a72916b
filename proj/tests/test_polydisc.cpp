#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "symdisc/polydisc.hpp"
#include "symdisc/sampling.hpp"

using symdisc::cplx;
using symdisc::PreimagePoint;
using symdisc::Region;
using symdisc::SymPoint;
using symdisc::ToleranceConfig;

namespace {

const ToleranceConfig kTol;

SymPoint zeros(int n) {
  return SymPoint(std::vector<cplx>(static_cast<std::size_t>(n) - 1, cplx(0.0)), cplx(0.0));
}

}  // namespace

TEST_CASE("region codes and membership") {
  CHECK(symdisc::region_code(Region::Outside) == 0);
  CHECK(symdisc::region_code(Region::InteriorGn) == 1);
  CHECK(symdisc::region_code(Region::BoundaryGamma) == 2);
  CHECK(symdisc::region_code(Region::DistinguishedBoundary) == 3);
  CHECK(symdisc::region_code(Region::ToleranceBand) == 4);
  CHECK(symdisc::region_member(Region::InteriorGn));
  CHECK(symdisc::region_member(Region::BoundaryGamma));
  CHECK(symdisc::region_member(Region::DistinguishedBoundary));
  CHECK_FALSE(symdisc::region_member(Region::Outside));
  CHECK_FALSE(symdisc::region_member(Region::ToleranceBand));
  CHECK(std::string_view(symdisc::to_string(Region::DistinguishedBoundary)) ==
        "distinguished_boundary");
}

TEST_CASE("tolerance configuration validates") {
  ToleranceConfig bad;
  bad.matrix_tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), symdisc::input_error);
  CHECK_NOTHROW(ToleranceConfig{}.validate());
}

TEST_CASE("symmetrize hand cases") {
  const auto z3 = symmetrize(PreimagePoint({cplx(0.0), cplx(0.0), cplx(0.0)}));
  CHECK(z3.n() == 3);
  CHECK(z3.s(1) == cplx(0.0));
  CHECK(z3.s(2) == cplx(0.0));
  CHECK(z3.p() == cplx(0.0));

  const auto ones = symmetrize(PreimagePoint({cplx(1.0), cplx(1.0)}));
  CHECK(ones.s(1) == cplx(2.0));
  CHECK(ones.p() == cplx(1.0));

  const cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const auto cube = symmetrize(PreimagePoint({cplx(1.0), w, w * w}));
  CHECK(std::abs(cube.s(1)) < 1e-15);
  CHECK(std::abs(cube.s(2)) < 1e-15);
  CHECK(std::abs(cube.p() - cplx(1.0)) < 1e-15);
}

TEST_CASE("associated polynomial applies alternating signs") {
  const auto zn = associated_polynomial(zeros(4));
  for (int k = 1; k <= 4; ++k) CHECK(zn.coeff(k) == cplx(0.0));

  const auto sq = associated_polynomial(SymPoint({cplx(2.0)}, cplx(1.0)));
  CHECK(sq.coeff(1) == cplx(-2.0));
  CHECK(sq.coeff(2) == cplx(1.0));

  const auto cube = associated_polynomial(SymPoint({cplx(0.0), cplx(0.0)}, cplx(1.0)));
  CHECK(cube.coeff(1) == cplx(0.0));
  CHECK(cube.coeff(2) == cplx(0.0));
  CHECK(cube.coeff(3) == cplx(-1.0));
}

TEST_CASE("beta reduction hand cases") {
  // p = 0 reduces to the identity on s.
  const SymPoint pt({cplx(0.3, 0.1), cplx(-0.2, 0.4), cplx(0.1)}, cplx(0.0));
  const auto b = beta_reduce(pt, kTol);
  REQUIRE(b.n() == 3);
  CHECK(b.s(1) == pt.s(1));
  CHECK(b.s(2) == pt.s(2));
  CHECK(b.p() == pt.s(3));

  const auto b2 = beta_reduce(SymPoint({cplx(1.0)}, cplx(0.5)), kTol);
  REQUIRE(b2.n() == 1);
  CHECK(std::abs(b2.p() - cplx(2.0 / 3.0)) < 1e-15);

  // n = 3 pair system, checked through the reconstruction identity.
  const SymPoint pt3({cplx(1.0, 1.0), cplx(1.0, -1.0)}, cplx(0.0, 0.5));
  const auto b3 = beta_reduce(pt3, kTol);
  const auto back = reconstruct(b3, pt3.p());
  CHECK(std::abs(back.s(1) - pt3.s(1)) < 1e-12);
  CHECK(std::abs(back.s(2) - pt3.s(2)) < 1e-12);
}

TEST_CASE("beta reduction refuses near-unimodular p") {
  CHECK_THROWS_AS(beta_reduce(SymPoint({cplx(0.0)}, cplx(1.0)), kTol),
                  symdisc::reduction_error);
  CHECK_THROWS_AS(beta_reduce(SymPoint({cplx(0.5)}, std::polar(1.0, 1.1)), kTol),
                  symdisc::reduction_error);
}

TEST_CASE("reconstruct hand cases") {
  const SymPoint beta({cplx(0.4, -0.2)}, cplx(0.7, 0.1));
  const auto at0 = reconstruct(beta, cplx(0.0));
  CHECK(at0.s(1) == beta.s(1));
  CHECK(at0.s(2) == beta.p());
  CHECK(at0.p() == cplx(0.0));

  const auto one = reconstruct(SymPoint({}, cplx(2.0 / 3.0)), cplx(0.5));
  CHECK(std::abs(one.s(1) - cplx(1.0)) < 1e-15);
  CHECK(one.p() == cplx(0.5));
}

TEST_CASE("beta reduction round-trips against reconstruct") {
  std::mt19937_64 eng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 2 + static_cast<int>(eng() % 7);
    // beta is the (n-1)-dimensional point; reconstruct lifts it to n.
    std::vector<cplx> bs(n - 2);
    for (auto& c : bs) c = 2.0 * cplx(u(eng), u(eng));
    cplx bp = 2.0 * cplx(u(eng), u(eng));
    cplx p;
    do {
      p = cplx(u(eng), u(eng));
    } while (std::abs(p) > 0.99);
    const SymPoint beta(bs, bp);
    const auto round = beta_reduce(reconstruct(beta, p), kTol);
    REQUIRE(round.n() == n - 1);
    double err = std::abs(round.p() - beta.p());
    for (int j = 1; j <= n - 2; ++j) err = std::max(err, std::abs(round.s(j) - beta.s(j)));
    CHECK(err <= 1e-11);
  }
}

TEST_CASE("gamma membership by recursion on hand cases") {
  for (int n = 1; n <= 6; ++n) {
    const auto v = in_gamma_recursive(n == 1 ? SymPoint({}, cplx(0.0)) : zeros(n), kTol);
    CHECK(symdisc::region_member(v.region));
  }

  const auto edge = in_gamma_recursive(SymPoint({cplx(2.0)}, cplx(1.0)), kTol);
  CHECK(symdisc::region_member(edge.region));
  CHECK((edge.region == Region::BoundaryGamma ||
         edge.region == Region::DistinguishedBoundary));
  CHECK(edge.certificate.delegated);

  const auto out = in_gamma_recursive(SymPoint({cplx(3.0)}, cplx(1.0)), kTol);
  CHECK(out.region == Region::Outside);
}

TEST_CASE("gamma recursion records its beta chain") {
  const SymPoint pt({cplx(0.2, 0.1), cplx(-0.1, 0.05)}, cplx(0.3, -0.2));
  const auto v = in_gamma_recursive(pt, kTol);
  CHECK(symdisc::region_member(v.region));
  // One reduced level per descent step: dimensions 2 and 1.
  REQUIRE(v.certificate.beta_chain.size() == 2);
  CHECK(v.certificate.beta_chain.front().size() == 2);
  CHECK(v.certificate.beta_chain.back().size() == 1);
}

TEST_CASE("gamma recursion at n=1") {
  CHECK(in_gamma_recursive(SymPoint({}, cplx(0.5)), kTol).region == Region::InteriorGn);
  CHECK(in_gamma_recursive(SymPoint({}, cplx(2.0)), kTol).region == Region::Outside);
  CHECK(in_gamma_recursive(SymPoint({}, cplx(0.0, 1.0)), kTol).region ==
        Region::BoundaryGamma);
}

TEST_CASE("open membership by recursion on hand cases") {
  CHECK(in_gn_recursive(zeros(3), kTol).region == Region::InteriorGn);
  CHECK(in_gn_recursive(SymPoint({cplx(0.0)}, cplx(0.5)), kTol).region ==
        Region::InteriorGn);
  const auto edge = in_gn_recursive(SymPoint({cplx(2.0)}, cplx(1.0)), kTol);
  CHECK(edge.region != Region::InteriorGn);
}

TEST_CASE("open membership by matrix on hand cases") {
  CHECK(in_gn_schur(zeros(4), kTol).region == Region::InteriorGn);

  const auto near = in_gn_schur(SymPoint({cplx(0.0)}, cplx(0.999)), kTol);
  CHECK(near.region == Region::InteriorGn);
  REQUIRE(near.certificate.min_pivot_or_eig.has_value());
  CHECK(*near.certificate.min_pivot_or_eig ==
        Catch::Approx(1.0 - 0.999 * 0.999).margin(1e-12));

  const auto out = in_gn_schur(SymPoint({cplx(1.9)}, cplx(0.0)), kTol);
  const auto rec = in_gn_recursive(SymPoint({cplx(1.9)}, cplx(0.0)), kTol);
  CHECK(out.region == rec.region);
  CHECK(out.region == Region::Outside);
}

TEST_CASE("matrix method reports not-applicable at unimodular p") {
  const auto v = in_gn_schur(SymPoint({cplx(2.0)}, cplx(1.0)), kTol);
  CHECK(v.region == Region::ToleranceBand);
  CHECK(v.certificate.not_applicable);
}

TEST_CASE("oracle classification on hand cases") {
  const auto in = classify_oracle(zeros(4), kTol);
  CHECK(in.region == Region::InteriorGn);
  REQUIRE(in.certificate.max_root_modulus.has_value());
  CHECK(*in.certificate.max_root_modulus == Catch::Approx(0.0).margin(1e-12));
  CHECK(in.certificate.roots.size() == 4);

  const auto db = classify_oracle(SymPoint({cplx(2.0)}, cplx(1.0)), kTol);
  CHECK(db.region == Region::DistinguishedBoundary);
  CHECK(*db.certificate.max_root_modulus == Catch::Approx(1.0).margin(1e-9));

  const auto out = classify_oracle(SymPoint({cplx(0.0)}, cplx(2.0)), kTol);
  CHECK(out.region == Region::Outside);
  CHECK(*out.certificate.max_root_modulus ==
        Catch::Approx(std::sqrt(2.0)).margin(1e-9));
}

TEST_CASE("distinguished boundary hand cases") {
  const auto cube = on_distinguished_boundary(SymPoint({cplx(0.0), cplx(0.0)}, cplx(1.0)), kTol);
  CHECK(cube.on_boundary);

  const auto dbl = on_distinguished_boundary(SymPoint({cplx(2.0)}, cplx(1.0)), kTol);
  CHECK(dbl.on_boundary);
  REQUIRE(dbl.beta_witness.has_value());
  REQUIRE(dbl.witness_residual.has_value());
  CHECK(*dbl.witness_residual < 1e-9);

  const auto off = on_distinguished_boundary(SymPoint({cplx(0.0)}, cplx(0.25)), kTol);
  CHECK_FALSE(off.on_boundary);
}

TEST_CASE("torus samples land on the distinguished boundary with a consistent witness") {
  for (int n = 2; n <= 5; ++n) {
    symdisc::SampleStream rng(1000 + static_cast<std::uint64_t>(n));
    for (int rep = 0; rep < 100; ++rep) {
      auto z = symdisc::draw_torus_tuple(n, rng);
      const auto pt = symmetrize(PreimagePoint(z));
      const auto bc = on_distinguished_boundary(pt, kTol);
      CHECK(bc.on_boundary);
      REQUIRE(bc.consistency_defect.has_value());
      CHECK(*bc.consistency_defect < 1e-12);
      REQUIRE(bc.beta_witness.has_value());
      CHECK(*bc.witness_residual < 1e-12);

      z[0] *= 0.9;
      CHECK_FALSE(on_distinguished_boundary(symmetrize(PreimagePoint(z)), kTol).on_boundary);
    }
  }
}

TEST_CASE("necessary coefficient bounds") {
  CHECK(necessary_bounds(zeros(5)));
  CHECK_FALSE(necessary_bounds(SymPoint({cplx(3.0)}, cplx(0.5))));
  CHECK_FALSE(necessary_bounds(
      SymPoint({cplx(4.1), cplx(0.0), cplx(0.0)}, cplx(0.5))));
  CHECK_FALSE(necessary_bounds(SymPoint({cplx(0.5)}, cplx(1.0))));
}

TEST_CASE("pairwise sum and product bounds") {
  CHECK(pairwise_bounds(PreimagePoint({cplx(0.5), cplx(0.0, 0.5)}), kTol));
  CHECK_FALSE(pairwise_bounds(PreimagePoint({cplx(1.2), cplx(1.1)}), kTol));
  CHECK_FALSE(pairwise_bounds(PreimagePoint({cplx(1.5), cplx(-1.5)}), kTol));
}

TEST_CASE("kernel criterion hand cases") {
  CHECK(kernel_criterion(PreimagePoint({cplx(0.5), cplx(0.5)}), kTol));
  CHECK(classify_oracle(symmetrize(PreimagePoint({cplx(0.5), cplx(0.5)})), kTol).region ==
        Region::InteriorGn);
  CHECK(kernel_criterion(PreimagePoint({cplx(0.5), cplx(0.5), cplx(0.5)}), kTol));

  // One factor negative under valid hypotheses: decision and oracle agree.
  const PreimagePoint mixed({cplx(1.05), cplx(0.1)});
  CHECK(pairwise_bounds(mixed, kTol));
  CHECK_FALSE(kernel_criterion(mixed, kTol));
  CHECK(classify_oracle(symmetrize(mixed), kTol).region == Region::Outside);
}

TEST_CASE("kernel criterion rejects hypothesis violations") {
  CHECK_THROWS_AS(kernel_criterion(PreimagePoint({cplx(1.5), cplx(-1.5)}), kTol),
                  symdisc::hypothesis_error);
  CHECK_THROWS_AS(kernel_criterion(PreimagePoint({cplx(1.2), cplx(1.1)}), kTol),
                  symdisc::hypothesis_error);
}

TEST_CASE("consensus is unanimous on canonical points") {
  const auto in = classify_consensus(zeros(3), kTol);
  REQUIRE(in.agreed_region.has_value());
  CHECK(*in.agreed_region == Region::InteriorGn);
  CHECK_FALSE(in.disagreement);
  CHECK_FALSE(in.anomaly);
  CHECK(in.methods.size() == 4);

  const auto db = classify_consensus(SymPoint({cplx(2.0)}, cplx(1.0)), kTol);
  REQUIRE(db.agreed_region.has_value());
  CHECK(symdisc::region_member(*db.agreed_region));
  CHECK_FALSE(db.anomaly);

  const auto out = classify_consensus(SymPoint({cplx(0.0)}, cplx(2.0)), kTol);
  REQUIRE(out.agreed_region.has_value());
  CHECK(*out.agreed_region == Region::Outside);
  CHECK_FALSE(out.anomaly);
}

TEST_CASE("consensus on random interior points") {
  symdisc::SampleStream rng(77);
  for (int rep = 0; rep < 100; ++rep) {
    auto z = symdisc::draw_disc_tuple(3, rng);
    for (auto& c : z) c *= 0.99;
    const auto rep3 = classify_consensus(symmetrize(PreimagePoint(z)), kTol);
    REQUIRE(rep3.agreed_region.has_value());
    CHECK(*rep3.agreed_region == Region::InteriorGn);
    CHECK_FALSE(rep3.disagreement);
    CHECK_FALSE(rep3.anomaly);
  }
}

TEST_CASE("interior points stay interior when the preimage shrinks") {
  symdisc::SampleStream rng(123);
  for (int rep = 0; rep < 50; ++rep) {
    auto z = symdisc::draw_disc_tuple(4, rng);
    for (auto& c : z) c *= 0.99;
    for (double r : {0.2, 0.5, 0.9}) {
      auto scaled = z;
      for (auto& c : scaled) c *= r;
      CHECK(classify_oracle(symmetrize(PreimagePoint(scaled)), kTol).region ==
            Region::InteriorGn);
    }
  }
}

TEST_CASE("method labels appear in fixed order") {
  const auto rep = classify_consensus(zeros(2), kTol);
  REQUIRE(rep.methods.size() == 4);
  CHECK(std::string_view(rep.methods[0].method) == "oracle");
  CHECK(std::string_view(rep.methods[1].method) == "gamma_recursive");
  CHECK(std::string_view(rep.methods[2].method) == "gn_recursive");
  CHECK(std::string_view(rep.methods[3].method) == "gn_schur");
}
