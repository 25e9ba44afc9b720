#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace test_support;

TEST_SUITE_BEGIN("two_forms");

TEST_CASE("pair components and antisymmetric matrices are inverse maps") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    Vec6 w;
    for (int i = 0; i < 6; ++i)
      w[i] = 2.0 * unit_draw(rng) - 1.0;
    const Mat4 a = two_form_matrix(w);
    CHECK((a + a.transpose()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((two_form_components(a) - w).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("flat Hodge star swaps the dual pair slots") {
  const HodgeStar star = hodge_star(Mat4::Identity(), +1);
  Mat6 expected = Mat6::Zero();
  for (int k = 0; k < 3; ++k) {
    expected(k, k + 3) = 1.0;
    expected(k + 3, k) = 1.0;
  }
  CHECK((star.matrix - expected).cwiseAbs().maxCoeff() < 1e-14);

  const HodgeStar rev = hodge_star(Mat4::Identity(), -1);
  CHECK((rev.matrix + expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("Hodge star is an involution for random positive metrics") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 1000; ++trial) {
    const Mat4 g = random_spd(rng);
    const HodgeStar star = hodge_star(g, trial % 2 ? +1 : -1);
    const Mat6 sq = star.matrix * star.matrix;
    CHECK((sq - Mat6::Identity()).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("star is self-adjoint for the 2-form inner product with "
          "eigenvalues +1 and -1, three each") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat4 g = random_spd(rng);
    const HodgeStar star = hodge_star(g, +1);
    const Mat6 gs = star.gram * star.matrix;
    CHECK((gs - gs.transpose()).cwiseAbs().maxCoeff() < 1e-10);

    Eigen::GeneralizedSelfAdjointEigenSolver<Mat6> eig(
        0.5 * (gs + gs.transpose()), star.gram, Eigen::EigenvaluesOnly);
    const auto& vals = eig.eigenvalues();
    for (int i = 0; i < 3; ++i)
      CHECK(vals[i] == doctest::Approx(-1.0).epsilon(1e-8));
    for (int i = 3; i < 6; ++i)
      CHECK(vals[i] == doctest::Approx(1.0).epsilon(1e-8));
  }
}

TEST_CASE("gram matrix realizes the half-contraction inner product") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const Mat4 g = random_spd(rng);
    const Mat4 ginv = g.inverse();
    Vec6 wa, wb;
    for (int i = 0; i < 6; ++i) {
      wa[i] = 2.0 * unit_draw(rng) - 1.0;
      wb[i] = 2.0 * unit_draw(rng) - 1.0;
    }
    const Mat4 A = two_form_matrix(wa);
    const Mat4 B = two_form_matrix(wb);
    double direct = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d)
            direct += 0.5 * A(a, b) * B(c, d) * ginv(a, c) * ginv(b, d);
    const double via_gram = wa.dot(two_form_gram(g) * wb);
    CHECK(via_gram == doctest::Approx(direct).epsilon(1e-10));
  }
}

TEST_CASE("duality projectors are complementary idempotents of rank 3") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const Mat4 g = random_spd(rng);
    const auto [plus, minus] = sd_projectors(hodge_star(g, +1));
    CHECK((plus + minus - Mat6::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((plus * plus - plus).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((minus * minus - minus).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((plus * minus).cwiseAbs().maxCoeff() < 1e-10);
    Eigen::FullPivLU<Mat6> lu_p(plus), lu_m(minus);
    lu_p.setThreshold(1e-7);
    lu_m.setThreshold(1e-7);
    CHECK(lu_p.rank() == 3);
    CHECK(lu_m.rank() == 3);
  }
}

TEST_CASE("projectors are invariant under conformal rescaling") {
  std::mt19937_64 rng(53);
  for (const double lambda : {2.0, 6.0}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Mat4 g = random_spd(rng);
      const HodgeStar s0 = hodge_star(g, +1);
      const HodgeStar s1 = hodge_star((lambda * g).eval(), +1);
      CHECK((s0.matrix - s1.matrix).cwiseAbs().maxCoeff() < 1e-11);
    }
  }
}

TEST_CASE("inconsistent star input is rejected by the projector factory") {
  HodgeStar star = hodge_star(Mat4::Identity(), +1);
  star.matrix(0, 3) += 1e-3;
  CHECK_THROWS_AS(sd_projectors(star), InconsistencyError);
  CHECK_THROWS_AS(hodge_star((-Mat4::Identity()).eval(), +1),
                  DegenerateMetricError);
  CHECK_THROWS_AS(hodge_star(Mat4::Identity(), 2), std::invalid_argument);
}

TEST_CASE("operator blocks: both diagonal traces equal a quarter of the "
          "scalar curvature") {
  const char* names[] = {"round_s4", "fubini_study_cp2", "product_s2xs2"};
  std::mt19937_64 rng(59);
  for (const char* name : names) {
    CAPTURE(name);
    ParamMap params;
    if (std::string(name) == "product_s2xs2")
      params = {{"a", std::sqrt(2.0)}, {"b", 1.0}};
    const MetricChart chart = zoo_build(name, params).atlas.charts[0];
    for (int trial = 0; trial < 10; ++trial) {
      const Vec4 x = random_interior(rng, chart.box);
      const CurvatureBundle b = curvature_bundle(chart, x);
      const CurvatureOperator op = curvature_operator(b, chart.orientation);
      CHECK(op.sd_block().trace() ==
            doctest::Approx(b.scalar / 4.0).epsilon(1e-9));
      CHECK(op.asd_block().trace() ==
            doctest::Approx(b.scalar / 4.0).epsilon(1e-9));
      CHECK(op.scalar == doctest::Approx(b.scalar).epsilon(1e-9));
      CHECK((op.matrix - op.matrix.transpose()).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }
}

TEST_CASE("mixed block vanishes exactly for Einstein metrics and carries "
          "|rc0|^2/4 otherwise") {
  std::mt19937_64 rng(61);

  SUBCASE("Einstein examples") {
    for (const char* name : {"round_s4", "fubini_study_cp2"}) {
      CAPTURE(name);
      const MetricChart chart = zoo_build(name).atlas.charts[0];
      for (int trial = 0; trial < 10; ++trial) {
        const Vec4 x = random_interior(rng, chart.box);
        const CurvatureBundle b = curvature_bundle(chart, x);
        const CurvatureOperator op = curvature_operator(b, chart.orientation);
        CHECK(op.mixed_block().cwiseAbs().maxCoeff() < 1e-9);
      }
    }
  }

  SUBCASE("non-Einstein product") {
    const MetricChart chart =
        zoo_build("product_s2xs2", {{"a", std::sqrt(2.0)}, {"b", 1.0}})
            .atlas.charts[0];
    for (int trial = 0; trial < 10; ++trial) {
      const Vec4 x = random_interior(rng, chart.box);
      const CurvatureBundle b = curvature_bundle(chart, x);
      const CurvatureOperator op = curvature_operator(b, chart.orientation);
      const double mixed2 = op.mixed_block().squaredNorm();
      const double rc02 = norm2(b.g, b.rc0);
      CHECK(mixed2 > 1e-4);
      CHECK(mixed2 == doctest::Approx(rc02 / 4.0).epsilon(1e-9));
    }
  }

  SUBCASE("generic bump metric via finite differences") {
    MetricChart chart;
    chart.box = {Interval{0, 1}, Interval{0, 1}, Interval{0, 1},
                 Interval{0, 1}};
    chart.g = [](const Vec4& x) {
      Mat4 g = Mat4::Identity();
      g(0, 0) += 0.3 * std::sin(x[0] + 2 * x[1]);
      g(1, 1) += 0.2 * std::cos(x[2]);
      g(2, 2) += 0.25 * std::sin(x[3] + x[0]);
      g(0, 1) = g(1, 0) = 0.1 * std::sin(x[2] + x[3]);
      g(2, 3) = g(3, 2) = 0.15 * std::cos(x[0] - x[1]);
      return g;
    };
    chart = with_fd_derivatives(chart, 1e-4);
    for (int trial = 0; trial < 5; ++trial) {
      const Vec4 x = random_interior(rng, chart.box, 0.25);
      const CurvatureBundle b = curvature_bundle(chart, x);
      const CurvatureOperator op = curvature_operator(b, chart.orientation);
      const double mixed2 = op.mixed_block().squaredNorm();
      const double rc02 = norm2(b.g, b.rc0);
      CHECK(mixed2 == doctest::Approx(rc02 / 4.0).epsilon(1e-5));
      CHECK(op.sd_block().trace() ==
            doctest::Approx(b.scalar / 4.0).epsilon(1e-5));
    }
  }
}

TEST_CASE("endomorphism and 4-tensor Weyl norms differ by the fixed factor "
          "of four") {
  const char* names[] = {"round_s4", "fubini_study_cp2", "product_s2xs2"};
  std::mt19937_64 rng(67);
  for (const char* name : names) {
    CAPTURE(name);
    ParamMap params;
    if (std::string(name) == "product_s2xs2")
      params = {{"a", std::sqrt(2.0)}, {"b", 1.0}};
    const MetricChart chart = zoo_build(name, params).atlas.charts[0];
    for (int trial = 0; trial < 5; ++trial) {
      const Vec4 x = random_interior(rng, chart.box);
      const CurvatureBundle b = curvature_bundle(chart, x);
      const WeylNorms w =
          weyl_sd_norms(curvature_operator(b, chart.orientation));
      const double tensor_norm = norm2(b.g, b.weyl);
      CHECK(tensor_norm ==
            doctest::Approx(4.0 * (w.plus2 + w.minus2)).epsilon(1e-8));
    }
  }
}

TEST_CASE("complex orientation puts the whole projective-plane Weyl "
          "curvature on the self-dual side") {
  const MetricChart chart = zoo_build("fubini_study_cp2").atlas.charts[0];
  REQUIRE(chart.orientation == -1);
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const Vec4 x = random_interior(rng, chart.box);
    const CurvatureBundle b = curvature_bundle(chart, x);
    const WeylNorms w = weyl_sd_norms(curvature_operator(b, -1));
    // scalar curvature is 2, so |W+|^2 = R^2/24 = 1/6
    CHECK(w.plus2 == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    CHECK(w.minus2 < 1e-10);
    const WeylNorms rev = weyl_sd_norms(curvature_operator(b, +1));
    CHECK(rev.plus2 < 1e-10);
    CHECK(rev.minus2 == doctest::Approx(1.0 / 6.0).epsilon(1e-9));
  }
}

TEST_SUITE_END();
