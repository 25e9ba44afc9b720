#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <string>

using namespace test_support;

namespace {

constexpr double kPi = 3.14159265358979323846;

QuadratureSpec spec_with(int nodes) {
  QuadratureSpec spec;
  spec.nodes = nodes;
  return spec;
}

} // namespace

TEST_SUITE_BEGIN("invariants");

TEST_CASE("curvature integrals reproduce Euler characteristic and signature "
          "of every compact zoo space") {
  struct Row {
    const char* name;
    long chi;
    long tau;
  };
  const Row rows[] = {
      {"round_s4", 2, 0},
      {"fubini_study_cp2", 3, 1},
      {"product_s2xs2", 4, 0},
      {"flat_t4", 0, 0},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name);
    const ZooBuild build = zoo_build(row.name);
    const InvariantReport rep = invariant_report(build.atlas, spec_with(10));
    CHECK(rep.chi_int == row.chi);
    CHECK(rep.tau_int == row.tau);
    CHECK(rep.gb_defect < 1e-6);
    CHECK(rep.sig_defect < 1e-6);
    const ZooReference ref = zoo_reference(row.name);
    REQUIRE(ref.volume.has_value());
    CHECK(rep.volume.value == doctest::Approx(*ref.volume).epsilon(1e-8));
  }
}

TEST_CASE("reports are invariant under constant metric rescaling") {
  struct Row {
    const char* name;
    const char* key;
    double small;
    double large;
  };
  const Row rows[] = {
      {"round_s4", "r", 1.4, 2.8},
      {"fubini_study_cp2", "lambda", 4.0, 16.0},
  };
  for (const Row& row : rows) {
    CAPTURE(row.name);
    const InvariantReport a =
        invariant_report(zoo_build(row.name, {{row.key, row.small}}).atlas,
                         spec_with(8));
    const InvariantReport b =
        invariant_report(zoo_build(row.name, {{row.key, row.large}}).atlas,
                         spec_with(8));
    const double tol = 2.0 * (a.chi.error + b.chi.error) + 1e-10;
    CHECK(std::abs(a.chi.value - b.chi.value) < tol);
    CHECK(std::abs(a.tau.value - b.tau.value) <
          2.0 * (a.tau.error + b.tau.error) + 1e-10);
    CHECK(a.chi_int == b.chi_int);
    CHECK(a.tau_int == b.tau_int);
  }
}

TEST_CASE("defects decrease under refinement and are tiny at moderate "
          "orders") {
  const ChartAtlas atlas = zoo_build("fubini_study_cp2").atlas;
  const InvariantReport coarse = invariant_report(atlas, spec_with(4));
  const InvariantReport fine = invariant_report(atlas, spec_with(16));
  // a 1e-9 floor keeps the comparison meaningful when both sit at the
  // rounding noise of millions of accumulated nodes
  CHECK(fine.gb_defect <= coarse.gb_defect + 1e-9);
  CHECK(fine.gb_defect < 1e-9);
  CHECK(fine.sig_defect < 1e-9);
  CHECK(fine.chi.error <= coarse.chi.error + 1e-9);
}

TEST_CASE("signed invariant combinations are nonnegative on the Einstein "
          "examples") {
  for (const char* name : {"round_s4", "fubini_study_cp2", "product_s2xs2"}) {
    CAPTURE(name);
    const InvariantReport rep =
        invariant_report(zoo_build(name).atlas, spec_with(8));
    CHECK(rep.two_chi_plus_3abs_tau.value > -1e-6);
    CHECK(rep.two_chi_minus_3abs_tau.value > -1e-6);
  }
}

TEST_CASE("orientation flip negates the signature but keeps the absolute "
          "combinations") {
  ChartAtlas atlas = zoo_build("fubini_study_cp2").atlas;
  const InvariantReport rep = invariant_report(atlas, spec_with(8));
  REQUIRE(rep.tau_int == 1);

  for (MetricChart& chart : atlas.charts)
    chart.orientation = -chart.orientation;
  const InvariantReport flipped = invariant_report(atlas, spec_with(8));
  CHECK(flipped.tau_int == -1);
  CHECK(flipped.chi_int == rep.chi_int);
  CHECK(flipped.two_chi_plus_3abs_tau.value ==
        doctest::Approx(rep.two_chi_plus_3abs_tau.value).epsilon(1e-9));
  CHECK(flipped.two_chi_minus_3abs_tau.value ==
        doctest::Approx(rep.two_chi_minus_3abs_tau.value).epsilon(1e-9));
  CHECK(flipped.two_chi_plus_3tau.value ==
        doctest::Approx(rep.two_chi_minus_3tau.value).epsilon(1e-9));
}

TEST_CASE("excess integrals carry the sign of the corresponding topological "
          "combination on normalized Einstein spaces") {
  for (const char* name : {"round_s4", "fubini_study_cp2", "product_s2xs2"}) {
    CAPTURE(name);
    const InvariantReport rep =
        invariant_report(zoo_build(name).atlas, spec_with(8));
    // residual vanishes here, so excess = 48 pi^2 (2 chi +/- 3 tau)
    CHECK(std::abs(rep.energy_identity_residual.value) <
          1e-8 * rep.volume.value);
    const double expect_plus = 48.0 * kPi * kPi * rep.two_chi_plus_3tau.value;
    const double expect_minus =
        48.0 * kPi * kPi * rep.two_chi_minus_3tau.value;
    CHECK(rep.ht_excess_plus.value ==
          doctest::Approx(expect_plus).epsilon(1e-7));
    CHECK(rep.ht_excess_minus.value ==
          doctest::Approx(expect_minus).epsilon(1e-7));
    CHECK(rep.ht_excess_plus.value > 0.0);
    CHECK(rep.ht_excess_minus.value > 0.0);
  }
}

TEST_CASE("the two sigma2 routes agree on normalized Einstein metrics") {
  for (const char* name : {"round_s4", "fubini_study_cp2", "product_s2xs2"}) {
    CAPTURE(name);
    const ChartAtlas atlas = zoo_build(name).atlas;
    const InvariantReport rep = invariant_report(atlas, spec_with(8));
    const Estimate direct = sigma2_integral(atlas, spec_with(8));
    const Estimate via_volume = sigma2_via_volume(rep);
    const double tol =
        10.0 * (rep.sigma2.error + direct.error + via_volume.error) + 1e-10;
    CHECK(std::abs(rep.sigma2.value - direct.value) < tol);
    CHECK(std::abs(rep.sigma2.value - via_volume.value) < tol);
    // pointwise sigma2 = 1/6 on these, so the integral is Vol / 6
    CHECK(rep.sigma2.value ==
          doctest::Approx(rep.volume.value / 6.0).epsilon(1e-9));
  }
}

TEST_CASE("the flat torus zeroes every curvature integral") {
  const InvariantReport rep =
      invariant_report(zoo_build("flat_t4").atlas, spec_with(4));
  CHECK(std::abs(rep.chi.value) < 1e-12);
  CHECK(std::abs(rep.tau.value) < 1e-12);
  CHECK(std::abs(rep.scalar_sq.value) < 1e-12);
  CHECK(std::abs(rep.ricci_sq.value) < 1e-12);
  CHECK(std::abs(rep.weyl_sq.value) < 1e-12);
  CHECK(std::abs(rep.sigma2.value) < 1e-12);
  CHECK(rep.volume.value ==
        doctest::Approx(std::pow(2.0 * kPi, 4)).epsilon(1e-10));
  // steady background: the shrinker energy identity misses by exactly -Vol
  CHECK(rep.energy_identity_residual.value ==
        doctest::Approx(-rep.volume.value).epsilon(1e-10));
}

TEST_CASE("half-conformal-flatness holds pointwise for the Kahler examples "
          "and fails on the round sphere") {
  const DerdzinskiReport cp2 =
      derdzinski_check(zoo_build("fubini_study_cp2").atlas, 200);
  CHECK(cp2.samples == 200);
  CHECK(cp2.guarded == 0);
  CHECK(cp2.holds());
  CHECK(cp2.max_rel_dev < 1e-8);

  const DerdzinskiReport prod =
      derdzinski_check(zoo_build("product_s2xs2").atlas, 200);
  CHECK(prod.holds());

  const DerdzinskiReport s4 = derdzinski_check(zoo_build("round_s4").atlas, 64);
  CHECK_FALSE(s4.holds());
  CHECK(s4.max_rel_dev == doctest::Approx(1.0).epsilon(1e-9));

  const DerdzinskiReport torus = derdzinski_check(zoo_build("flat_t4").atlas, 32);
  CHECK(torus.guarded == torus.samples);
  CHECK(torus.max_abs_dev == 0.0);
}

TEST_CASE("sampling is deterministic for a fixed seed and stays interior") {
  const ChartAtlas atlas = zoo_build("fubini_study_cp2").atlas;
  const auto a = sample_points(atlas, 100, 0x5eed);
  const auto b = sample_points(atlas, 100, 0x5eed);
  REQUIRE(a.size() == 100);
  REQUIRE(b.size() == 100);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].chart == b[i].chart);
    CHECK((a[i].x - b[i].x).cwiseAbs().maxCoeff() == 0.0);
    CHECK(atlas.charts[a[i].chart].contains(a[i].x));
  }
  const DerdzinskiReport r1 = derdzinski_check(atlas, 64, 7);
  const DerdzinskiReport r2 = derdzinski_check(atlas, 64, 7);
  CHECK(r1.max_rel_dev == r2.max_rel_dev);
  CHECK(r1.max_abs_dev == r2.max_abs_dev);
}

TEST_SUITE_END();
