#pragma once

#include "shrinker/chart.hpp"
#include "shrinker/types.hpp"

#include <functional>
#include <span>
#include <vector>

namespace shrinker {

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Throws std::invalid_argument for n < 2.  Rules are cached per n.
const GaussLegendreRule& gauss_legendre(int n);

struct QuadratureSpec {
  int nodes = 24;          // per axis on the base pass
  double refinement = 2.0; // node multiplier for the error pass
  double tolerance = 1e-6; // absolute target used by report consumers
  double abs_floor = 1e-12;

  int refined_nodes() const;
  void validate() const; // throws std::invalid_argument
};

struct Estimate {
  double value = 0.0;   // refined-pass result
  double error = 0.0;   // |base - refined| with absolute floor
  double coarse = 0.0;  // base-pass result
};

// Evaluates all K integrands of `fields` in one pass per node against the
// Riemannian measure sqrt(det g) dx and returns one Estimate per integrand.
// `fields` writes K values to `out` for the node (chart, x).
//
// Throws UnsupportedError for non-compact atlases and EvaluationError (with
// the offending point in the message) when an integrand returns NaN.
std::vector<Estimate>
integrate_fields(const ChartAtlas& atlas, int count,
                 const std::function<void(std::size_t chart, const Vec4& x,
                                          std::span<double> out)>& fields,
                 const QuadratureSpec& spec = {});

// Single scalar field against the Riemannian measure.
Estimate integrate_scalar(const ChartAtlas& atlas,
                          const std::function<double(std::size_t, const Vec4&)>& field,
                          const QuadratureSpec& spec = {});

} // namespace shrinker
