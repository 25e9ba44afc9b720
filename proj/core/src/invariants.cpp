#include "shrinker/invariants.hpp"

#include <cmath>
#include <random>

namespace shrinker {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Linear-combination assembly over the two quadrature passes.
struct PassPair {
  double fine = 0.0;
  double coarse = 0.0;
};

Estimate assemble(const PassPair& p, double floor_scale) {
  Estimate e;
  e.value = p.fine;
  e.coarse = p.coarse;
  e.error = std::max(std::abs(p.fine - p.coarse),
                     floor_scale * std::max(1.0, std::abs(p.fine)));
  return e;
}

PassPair lin(std::initializer_list<std::pair<double, const Estimate*>> terms) {
  PassPair out;
  for (const auto& [c, e] : terms) {
    out.fine += c * e->value;
    out.coarse += c * e->coarse;
  }
  return out;
}

} // namespace

std::vector<AtlasPoint> sample_points(const ChartAtlas& atlas, int count,
                                      std::uint64_t seed) {
  if (atlas.charts.empty())
    throw std::invalid_argument("atlas has no charts");
  std::mt19937_64 rng(seed);
  auto unit = [&rng] {
    // 53 uniform bits in (0,1); platform-independent mapping.
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  // Polar-style charts degenerate on the box boundary; points drawn too
  // close to it amplify rounding noise in curvature quantities (inverse
  // metric factors ~ 1/sin^2).  A 2.5% inset keeps pointwise checks at full
  // precision while still covering the manifold densely.
  constexpr double margin = 0.025;
  std::vector<AtlasPoint> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    AtlasPoint p;
    p.chart = static_cast<std::size_t>(i) % atlas.charts.size();
    const Box& box = atlas.charts[p.chart].box;
    for (int k = 0; k < 4; ++k) {
      const double u = margin + (1.0 - 2.0 * margin) * unit();
      p.x[k] = box[k].lo + u * box[k].width();
    }
    out.push_back(p);
  }
  return out;
}

InvariantReport invariant_report(const ChartAtlas& atlas,
                                 const QuadratureSpec& spec) {
  // Basis integrals: 1, s^2, |Rc|^2, |W+|^2, |W-|^2; every report field is an
  // exact linear combination of these.
  auto fields = [&atlas](std::size_t ci, const Vec4& p, std::span<double> out) {
    const MetricChart& chart = atlas.charts[ci];
    const CurvatureBundle b = curvature_bundle(chart, p);
    const CurvatureOperator op = curvature_operator(b, chart.orientation);
    const WeylNorms w = weyl_sd_norms(op);
    const Mat4 up = b.ginv * b.rc;
    out[0] = 1.0;
    out[1] = b.scalar * b.scalar;
    out[2] = (up * up).trace();
    out[3] = w.plus2;
    out[4] = w.minus2;
  };
  const auto basis = integrate_fields(atlas, 5, fields, spec);
  const Estimate& vol = basis[0];
  const Estimate& r2 = basis[1];
  const Estimate& rc2 = basis[2];
  const Estimate& wp = basis[3];
  const Estimate& wm = basis[4];

  const double fl = spec.abs_floor;
  const double c8 = 1.0 / (8.0 * kPi * kPi);
  const double c12 = 1.0 / (12.0 * kPi * kPi);
  const double c4 = 1.0 / (4.0 * kPi * kPi);

  InvariantReport rep;
  rep.volume = vol;
  rep.scalar_sq = r2;
  rep.ricci_sq = rc2;
  rep.weyl_sq = assemble(lin({{1, &wp}, {1, &wm}}), fl);

  // chi integrand |W|^2 + s^2/6 - |Rc|^2/2; tau integrand |W+|^2 - |W-|^2.
  rep.chi = assemble(
      lin({{c8, &wp}, {c8, &wm}, {c8 / 6.0, &r2}, {-c8 / 2.0, &rc2}}), fl);
  rep.tau = assemble(lin({{c12, &wp}, {-c12, &wm}}), fl);
  rep.chi_int = std::lround(rep.chi.value);
  rep.tau_int = std::lround(rep.tau.value);
  rep.gb_defect = std::abs(rep.chi.value - static_cast<double>(rep.chi_int));
  rep.sig_defect = std::abs(rep.tau.value - static_cast<double>(rep.tau_int));

  rep.sigma2 = assemble(lin({{1.0 / 6.0, &r2}, {-0.5, &rc2}}), fl);
  rep.energy_identity_residual =
      assemble(lin({{0.5, &r2}, {-1.0, &rc2}, {-1.0, &vol}}), fl);
  rep.ht_excess_plus =
      assemble(lin({{24.0, &wp}, {-1.0, &r2}, {6.0, &vol}}), fl);
  rep.ht_excess_minus =
      assemble(lin({{24.0, &wm}, {-1.0, &r2}, {6.0, &vol}}), fl);

  rep.two_chi_plus_3tau = assemble(
      lin({{2.0 * c4, &wp}, {c4 / 6.0, &r2}, {-c4 / 2.0, &rc2}}), fl);
  rep.two_chi_minus_3tau = assemble(
      lin({{2.0 * c4, &wm}, {c4 / 6.0, &r2}, {-c4 / 2.0, &rc2}}), fl);

  if (rep.tau.value >= 0.0) {
    rep.two_chi_plus_3abs_tau = rep.two_chi_plus_3tau;
    rep.two_chi_minus_3abs_tau = rep.two_chi_minus_3tau;
  } else {
    rep.two_chi_plus_3abs_tau = rep.two_chi_minus_3tau;
    rep.two_chi_minus_3abs_tau = rep.two_chi_plus_3tau;
  }
  return rep;
}

Estimate sigma2_integral(const ChartAtlas& atlas, const QuadratureSpec& spec) {
  return integrate_scalar(
      atlas,
      [&atlas](std::size_t ci, const Vec4& p) {
        const CurvatureBundle b = curvature_bundle(atlas.charts[ci], p);
        const Mat4 up = b.ginv * b.rc;
        return (b.scalar * b.scalar - 3.0 * (up * up).trace()) / 6.0;
      },
      spec);
}

Estimate sigma2_via_volume(const InvariantReport& report) {
  Estimate e;
  e.value = 0.5 * (report.volume.value - report.scalar_sq.value / 6.0);
  e.coarse = 0.5 * (report.volume.coarse - report.scalar_sq.coarse / 6.0);
  e.error = std::max(0.5 * (report.volume.error + report.scalar_sq.error / 6.0),
                     1e-12 * std::max(1.0, std::abs(e.value)));
  return e;
}

DerdzinskiReport derdzinski_check(const ChartAtlas& atlas, int samples,
                                  std::uint64_t seed) {
  constexpr double guard = 1e-12;
  DerdzinskiReport rep;
  rep.samples = samples;
  for (const AtlasPoint& p : sample_points(atlas, samples, seed)) {
    const MetricChart& chart = atlas.charts[p.chart];
    const CurvatureBundle b = curvature_bundle(chart, p.x);
    const CurvatureOperator op = curvature_operator(b, chart.orientation);
    const WeylNorms w = weyl_sd_norms(op);
    const double s2 = b.scalar * b.scalar;
    const double dev = std::abs(24.0 * w.plus2 - s2);
    rep.max_abs_dev = std::max(rep.max_abs_dev, dev);
    if (s2 < guard)
      ++rep.guarded;
    else
      rep.max_rel_dev = std::max(rep.max_rel_dev, dev / s2);
  }
  return rep;
}

} // namespace shrinker
