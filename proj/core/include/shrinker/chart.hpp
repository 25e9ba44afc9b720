#pragma once

#include "shrinker/types.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace shrinker {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double width() const { return hi - lo; }
  bool contains(double t) const { return t > lo && t < hi; }
};

using Box = std::array<Interval, 4>;

// A single coordinate chart carrying the metric and its first two coordinate
// derivatives as callables over an open box.  `orientation` fixes the sign of
// the volume form relative to the coordinate order (+1 or -1).
struct MetricChart {
  Box box;
  std::function<Mat4(const Vec4&)> g;
  std::function<Dg(const Vec4&)> dg;
  std::function<D2g(const Vec4&)> d2g;
  int orientation = +1;

  bool contains(const Vec4& p) const {
    for (int i = 0; i < 4; ++i)
      if (!box[i].contains(p[i]))
        return false;
    return true;
  }

  // Throws ChartDomainError when p is not strictly inside the box.
  void require_inside(const Vec4& p) const;
};

// Point on a manifold described by an atlas: chart index plus coordinates.
struct AtlasPoint {
  std::size_t chart = 0;
  Vec4 x = Vec4::Zero();
};

// Collection of charts covering the manifold up to a measure-zero set; the
// integration layer treats the chart boxes as disjoint up to measure zero.
struct ChartAtlas {
  std::string name;
  std::vector<MetricChart> charts;
  bool compact = true;
  bool kahler = false;
};

// Scalar potential with analytic first and second coordinate derivatives.
struct PotentialField {
  std::function<double(const Vec4&)> f;
  std::function<Vec4(const Vec4&)> df;
  std::function<Mat4(const Vec4&)> d2f;

  static PotentialField constant(double c);
};

// Fills dg / d2g of a chart by central finite differences of chart.g.
// Step sizes shrink near the box boundary so all stencil points stay inside.
MetricChart with_fd_derivatives(MetricChart chart, double rel_step = 1e-5);

// Homothety g -> lambda * g applied to every chart of the atlas.
ChartAtlas scale_metric(const ChartAtlas& atlas, double lambda);
MetricChart scale_metric(const MetricChart& chart, double lambda);

} // namespace shrinker
