#include "shrinker/chart.hpp"

#include <cmath>
#include <sstream>

namespace shrinker {

namespace {

std::string format_point(const Vec4& p) {
  std::ostringstream os;
  os << "(" << p[0] << ", " << p[1] << ", " << p[2] << ", " << p[3] << ")";
  return os.str();
}

} // namespace

void MetricChart::require_inside(const Vec4& p) const {
  if (!contains(p))
    throw ChartDomainError("point " + format_point(p) +
                           " lies outside the open chart box");
}

PotentialField PotentialField::constant(double c) {
  PotentialField out;
  out.f = [c](const Vec4&) { return c; };
  out.df = [](const Vec4&) { return Vec4::Zero().eval(); };
  out.d2f = [](const Vec4&) { return Mat4::Zero().eval(); };
  return out;
}

MetricChart with_fd_derivatives(MetricChart chart, double rel_step) {
  const auto g = chart.g;
  const Box box = chart.box;

  // Largest per-axis step keeping a two-step central stencil inside the box.
  auto step = [box, rel_step](const Vec4& p, int k) {
    double h = rel_step * box[k].width();
    double room = std::min(p[k] - box[k].lo, box[k].hi - p[k]) / 2.5;
    return std::min(h, room);
  };

  chart.dg = [g, step](const Vec4& p) {
    Dg out;
    for (int k = 0; k < 4; ++k) {
      const double h = step(p, k);
      Vec4 p1 = p, p2 = p, m1 = p, m2 = p;
      p1[k] += h;
      p2[k] += 2 * h;
      m1[k] -= h;
      m2[k] -= 2 * h;
      out[k] = (8.0 * (g(p1) - g(m1)) - (g(p2) - g(m2))) / (12.0 * h);
    }
    return out;
  };

  chart.d2g = [g, step](const Vec4& p) {
    D2g out;
    for (int k = 0; k < 4; ++k) {
      const double hk = step(p, k);
      {
        Vec4 p1 = p, p2 = p, m1 = p, m2 = p;
        p1[k] += hk;
        p2[k] += 2 * hk;
        m1[k] -= hk;
        m2[k] -= 2 * hk;
        out[k][k] = (-(g(p2) + g(m2)) + 16.0 * (g(p1) + g(m1)) - 30.0 * g(p)) /
                    (12.0 * hk * hk);
      }
      for (int l = k + 1; l < 4; ++l) {
        const double hl = step(p, l);
        Vec4 pp = p, pm = p, mp = p, mm = p;
        pp[k] += hk;
        pp[l] += hl;
        pm[k] += hk;
        pm[l] -= hl;
        mp[k] -= hk;
        mp[l] += hl;
        mm[k] -= hk;
        mm[l] -= hl;
        out[k][l] = (g(pp) - g(pm) - g(mp) + g(mm)) / (4.0 * hk * hl);
        out[l][k] = out[k][l];
      }
    }
    return out;
  };

  return chart;
}

MetricChart scale_metric(const MetricChart& chart, double lambda) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("metric scale factor must be positive");
  MetricChart out = chart;
  const auto g = chart.g;
  const auto dg = chart.dg;
  const auto d2g = chart.d2g;
  out.g = [g, lambda](const Vec4& p) { return (lambda * g(p)).eval(); };
  out.dg = [dg, lambda](const Vec4& p) {
    Dg v = dg(p);
    for (auto& m : v)
      m *= lambda;
    return v;
  };
  out.d2g = [d2g, lambda](const Vec4& p) {
    D2g v = d2g(p);
    for (auto& row : v)
      for (auto& m : row)
        m *= lambda;
    return v;
  };
  return out;
}

ChartAtlas scale_metric(const ChartAtlas& atlas, double lambda) {
  ChartAtlas out = atlas;
  for (auto& chart : out.charts)
    chart = scale_metric(chart, lambda);
  return out;
}

} // namespace shrinker
