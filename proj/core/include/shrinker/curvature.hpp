#pragma once

#include "shrinker/chart.hpp"
#include "shrinker/types.hpp"

#include <span>
#include <vector>

namespace shrinker {

// Pointwise curvature data of a metric chart.  All tensors are in the
// coordinate basis; rm, weyl carry four lower indices.
struct CurvatureBundle {
  Mat4 g;
  Mat4 ginv;
  Christoffel gamma;
  Ten4 rm;        // rm(a,b,c,d) = g_ae R^e_bcd
  Mat4 rc;        // rc(b,d) = g^ac rm(a,b,c,d)
  double scalar;  // g^bd rc(b,d)
  Mat4 rc0;       // trace-free part rc - (scalar/4) g
  Ten4 weyl;      // conformal curvature
};

// Christoffel symbols of the Levi-Civita connection at p.
// Throws DegenerateMetricError when g(p) is not positive definite and
// ChartDomainError when p is outside the chart box.
Christoffel levi_civita(const MetricChart& chart, const Vec4& p);

// Full curvature decomposition at p (same error contract as levi_civita).
CurvatureBundle curvature_bundle(const MetricChart& chart, const Vec4& p);

struct HessianData {
  Vec4 df;         // coordinate gradient (index down)
  Mat4 hessian;    // covariant Hessian
  double laplacian;
  double grad_norm2; // g^{ab} d_a f d_b f
};

HessianData hessian_laplacian(const MetricChart& chart, const PotentialField& f,
                              const Vec4& p);

// Full metric contraction <T,S> of two tensors with r lower indices each,
// stored row-major with extent 4 per index (size 4^r).  Throws ShapeError
// when the sizes differ or are not a power of four.
double inner_product(const Mat4& g, std::span<const double> T,
                     std::span<const double> S);

double inner_product(const Mat4& g, const Vec4& T, const Vec4& S);
double inner_product(const Mat4& g, const Mat4& T, const Mat4& S);
double inner_product(const Mat4& g, const Ten4& T, const Ten4& S);

inline double norm2(const Mat4& g, const Mat4& T) { return inner_product(g, T, T); }
inline double norm2(const Mat4& g, const Ten4& T) { return inner_product(g, T, T); }

// Coordinate gradient of the scalar curvature by fourth-order central
// differences of curvature_bundle; steps shrink near the chart boundary.
Vec4 scalar_curvature_gradient(const MetricChart& chart, const Vec4& p,
                               double rel_step = 1e-3);

} // namespace shrinker
