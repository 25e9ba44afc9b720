#include "shrinker/soliton.hpp"

#include <cmath>

namespace shrinker {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kExtremaRandomSamples = 10000;

BoundCheck make_bound(double lhs, double rhs, double band) {
  BoundCheck b;
  b.lhs = lhs;
  b.rhs = rhs;
  b.margin = rhs - lhs;
  if (std::abs(b.margin) <= band)
    b.verdict = Verdict::boundary;
  else
    b.verdict = b.margin > 0.0 ? Verdict::pass : Verdict::fail;
  return b;
}

Verdict sign_verdict(double value, double band) {
  if (std::abs(value) <= band)
    return Verdict::boundary;
  return value > 0.0 ? Verdict::pass : Verdict::fail;
}

Verdict sign_verdict(long value) {
  if (value == 0)
    return Verdict::boundary;
  return value > 0 ? Verdict::pass : Verdict::fail;
}

} // namespace

Residual residual(const SolitonCandidate& c, const AtlasPoint& p) {
  const MetricChart& chart = c.atlas.charts.at(p.chart);
  const CurvatureBundle b = curvature_bundle(chart, p.x);
  const HessianData h = hessian_laplacian(chart, c.f, p.x);
  Residual out;
  out.tensor = b.rc + h.hessian - c.rho * b.g;
  out.norm = std::sqrt(std::max(0.0, norm2(b.g, out.tensor)));
  return out;
}

IdentityDeviations identity_suite(const SolitonCandidate& c,
                                  std::span<const AtlasPoint> points) {
  IdentityDeviations dev;
  double qmin = 0.0, qmax = 0.0;
  bool first = true;
  for (const AtlasPoint& p : points) {
    const MetricChart& chart = c.atlas.charts.at(p.chart);
    const CurvatureBundle b = curvature_bundle(chart, p.x);
    const HessianData h = hessian_laplacian(chart, c.f, p.x);

    dev.trace_max = std::max(
        dev.trace_max, std::abs(b.scalar + h.laplacian - 4.0 * c.rho));

    const Vec4 dr = scalar_curvature_gradient(chart, p.x);
    const Vec4 v = 0.5 * dr - b.rc * (b.ginv * h.df);
    dev.gradient_max =
        std::max(dev.gradient_max, std::sqrt(std::max(0.0, v.dot(b.ginv * v))));

    const double q = h.grad_norm2 + b.scalar - 2.0 * c.rho * c.f.f(p.x);
    if (first) {
      qmin = qmax = q;
      first = false;
    } else {
      qmin = std::min(qmin, q);
      qmax = std::max(qmax, q);
    }
  }
  dev.conserved_spread = first ? 0.0 : qmax - qmin;
  return dev;
}

IdentityDeviations identity_suite(const SolitonCandidate& c, int count,
                                  std::uint64_t seed) {
  const auto pts = sample_points(c.atlas, count, seed);
  return identity_suite(c, pts);
}

SolitonCandidate normalize(const SolitonCandidate& c) {
  if (!c.shrinking())
    throw NotShrinkingError(
        "normalization requires rho > 0 (steady and expanding cases reduce "
        "to Einstein metrics)");
  const double lambda = 2.0 * c.rho;
  SolitonCandidate out;
  out.atlas = scale_metric(c.atlas, lambda);
  out.f = c.f;
  out.rho = 0.5;
  return out;
}

SufficientReport sufficient_report(const SolitonCandidate& c,
                                   const QuadratureSpec& spec,
                                   const InvariantReport* precomputed) {
  if (!c.normalized())
    throw NormalizationError("the report requires the rho = 1/2 normalization");
  if (!c.atlas.compact)
    throw UnsupportedError("the report requires a compact atlas");
  spec.validate();

  SufficientReport rep;
  rep.invariants = precomputed ? *precomputed : invariant_report(c.atlas, spec);

  const auto pts = sample_points(c.atlas, 100, 0x5eed);
  for (const AtlasPoint& p : pts)
    rep.residual_max = std::max(rep.residual_max, residual(c, p).norm);
  rep.identities = identity_suite(c, pts);

  // Extrema scan: every base-pass quadrature node plus random samples.
  bool first = true;
  auto scan = [&](std::size_t ci, const Vec4& x) {
    const MetricChart& chart = c.atlas.charts[ci];
    const double fv = c.f.f(x);
    const CurvatureBundle b = curvature_bundle(chart, x);
    Eigen::GeneralizedSelfAdjointEigenSolver<Mat4> eig(b.rc, b.g,
                                                       Eigen::EigenvaluesOnly);
    const double mineig = eig.eigenvalues().minCoeff();
    if (first) {
      rep.f_min = rep.f_max = fv;
      rep.min_scalar = b.scalar;
      rep.min_ricci_eigenvalue = mineig;
      first = false;
    } else {
      rep.f_min = std::min(rep.f_min, fv);
      rep.f_max = std::max(rep.f_max, fv);
      rep.min_scalar = std::min(rep.min_scalar, b.scalar);
      rep.min_ricci_eigenvalue = std::min(rep.min_ricci_eigenvalue, mineig);
    }
  };

  const GaussLegendreRule& rule = gauss_legendre(spec.nodes);
  for (std::size_t ci = 0; ci < c.atlas.charts.size(); ++ci) {
    const Box& box = c.atlas.charts[ci].box;
    Vec4 x;
    for (int i0 = 0; i0 < spec.nodes; ++i0) {
      x[0] = box[0].lo + 0.5 * box[0].width() * (rule.nodes[i0] + 1.0);
      for (int i1 = 0; i1 < spec.nodes; ++i1) {
        x[1] = box[1].lo + 0.5 * box[1].width() * (rule.nodes[i1] + 1.0);
        for (int i2 = 0; i2 < spec.nodes; ++i2) {
          x[2] = box[2].lo + 0.5 * box[2].width() * (rule.nodes[i2] + 1.0);
          for (int i3 = 0; i3 < spec.nodes; ++i3) {
            x[3] = box[3].lo + 0.5 * box[3].width() * (rule.nodes[i3] + 1.0);
            scan(ci, x);
          }
        }
      }
    }
  }
  for (const AtlasPoint& p :
       sample_points(c.atlas, kExtremaRandomSamples, 0xacc01ade))
    scan(p.chart, p.x);

  const double vol = rep.invariants.volume.value;
  rep.scalar_positive = sign_verdict(rep.min_scalar, 1e-10);
  rep.energy = make_bound(rep.invariants.scalar_sq.value, 6.0 * vol,
                          1e-8 * std::max(1.0, 6.0 * std::abs(vol)));
  rep.oscillation = make_bound(rep.f_max - rep.f_min, std::log(5.0), 1e-8);

  rep.sigma2_value = rep.invariants.sigma2.value;
  const Verdict sig =
      sign_verdict(rep.sigma2_value, 1e-8 * std::max(1.0, std::abs(vol)));
  if (rep.scalar_positive == Verdict::fail || sig == Verdict::fail)
    rep.positive_class = Verdict::fail;
  else if (rep.scalar_positive == Verdict::boundary || sig == Verdict::boundary)
    rep.positive_class = Verdict::boundary;
  else
    rep.positive_class = Verdict::pass;

  rep.ricci_checked = rep.positive_class == Verdict::pass;
  rep.ricci_positive = sign_verdict(rep.min_ricci_eigenvalue, 1e-10);

  rep.chi_weyl_slack = 8.0 * kPi * kPi * rep.invariants.chi.value -
                       rep.invariants.weyl_sq.value -
                       vol * (5.0 - std::exp(rep.f_max - rep.f_min)) / 24.0;

  rep.oscillation_implies_energy = !(rep.oscillation.verdict == Verdict::pass &&
                                     rep.energy.verdict == Verdict::fail);

  const long abs_tau = std::labs(rep.invariants.tau_int);
  rep.ht_plus = 2 * rep.invariants.chi_int + 3 * abs_tau;
  rep.ht_minus = 2 * rep.invariants.chi_int - 3 * abs_tau;
  rep.ht_plus_verdict = sign_verdict(rep.ht_plus);
  rep.ht_minus_verdict = sign_verdict(rep.ht_minus);
  return rep;
}

} // namespace shrinker
