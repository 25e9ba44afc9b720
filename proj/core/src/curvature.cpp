#include "shrinker/curvature.hpp"

#include <cmath>
#include <sstream>

namespace shrinker {

namespace {

Mat4 checked_inverse(const Mat4& g) {
  Eigen::LLT<Mat4> llt(g);
  if (llt.info() != Eigen::Success)
    throw DegenerateMetricError("metric is not positive definite");
  return llt.solve(Mat4::Identity());
}

Christoffel christoffel(const Mat4& ginv, const Dg& dg) {
  Christoffel gam;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = b; c < 4; ++c) {
        double s = 0.0;
        for (int d = 0; d < 4; ++d)
          s += ginv(a, d) * (dg[b](d, c) + dg[c](d, b) - dg[d](b, c));
        gam(a, b, c) = 0.5 * s;
        gam(a, c, b) = gam(a, b, c);
      }
  return gam;
}

} // namespace

Christoffel levi_civita(const MetricChart& chart, const Vec4& p) {
  chart.require_inside(p);
  const Mat4 g = chart.g(p);
  const Mat4 ginv = checked_inverse(g);
  return christoffel(ginv, chart.dg(p));
}

CurvatureBundle curvature_bundle(const MetricChart& chart, const Vec4& p) {
  chart.require_inside(p);

  CurvatureBundle out;
  out.g = chart.g(p);
  out.ginv = checked_inverse(out.g);
  const Dg dg = chart.dg(p);
  const D2g d2g = chart.d2g(p);
  out.gamma = christoffel(out.ginv, dg);

  // d_e g^{ad} = -(ginv dg[e] ginv)(a,d)
  Dg dginv;
  for (int e = 0; e < 4; ++e)
    dginv[e] = (-out.ginv * dg[e] * out.ginv).eval();

  // dgam[e](a,b,c) = d_e Gamma^a_{bc}
  double dgam[4][4][4][4];
  for (int e = 0; e < 4; ++e)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = b; c < 4; ++c) {
          double s = 0.0;
          for (int d = 0; d < 4; ++d) {
            s += dginv[e](a, d) * (dg[b](d, c) + dg[c](d, b) - dg[d](b, c));
            s += out.ginv(a, d) *
                 (d2g[e][b](d, c) + d2g[e][c](d, b) - d2g[e][d](b, c));
          }
          dgam[e][a][b][c] = 0.5 * s;
          dgam[e][a][c][b] = dgam[e][a][b][c];
        }

  // R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb}
  //           + Gamma^a_{ce} Gamma^e_{db} - Gamma^a_{de} Gamma^e_{cb}
  double rup[4][4][4][4];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        rup[a][b][c][c] = 0.0;
        for (int d = c + 1; d < 4; ++d) {
          double s = dgam[c][a][d][b] - dgam[d][a][c][b];
          for (int e = 0; e < 4; ++e)
            s += out.gamma(a, c, e) * out.gamma(e, d, b) -
                 out.gamma(a, d, e) * out.gamma(e, c, b);
          rup[a][b][c][d] = s;
          rup[a][b][d][c] = -s;
        }
      }

  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double s = 0.0;
          for (int e = 0; e < 4; ++e)
            s += out.g(a, e) * rup[e][b][c][d];
          out.rm(a, b, c, d) = s;
        }

  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      double s = 0.0;
      for (int a = 0; a < 4; ++a)
        s += rup[a][b][a][d];
      out.rc(b, d) = s;
    }
  out.rc = (0.5 * (out.rc + out.rc.transpose())).eval();

  out.scalar = (out.ginv * out.rc).trace();
  out.rc0 = out.rc - 0.25 * out.scalar * out.g;

  // W = Rm - 1/2 (rc0 kn g) - (s/12) (g kn g)/2 with
  // (A kn B)_abcd = A_ac B_bd + A_bd B_ac - A_ad B_bc - A_bc B_ad.
  const Mat4& g = out.g;
  const Mat4& e = out.rc0;
  const double k = out.scalar / 12.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const double kn = e(a, c) * g(b, d) + e(b, d) * g(a, c) -
                            e(a, d) * g(b, c) - e(b, c) * g(a, d);
          out.weyl(a, b, c, d) = out.rm(a, b, c, d) - 0.5 * kn -
                                 k * (g(a, c) * g(b, d) - g(a, d) * g(b, c));
        }

  return out;
}

HessianData hessian_laplacian(const MetricChart& chart, const PotentialField& f,
                              const Vec4& p) {
  chart.require_inside(p);
  const Mat4 g = chart.g(p);
  const Mat4 ginv = checked_inverse(g);
  const Christoffel gam = christoffel(ginv, chart.dg(p));

  HessianData out;
  out.df = f.df(p);
  const Mat4 ddf = f.d2f(p);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = ddf(a, b);
      for (int c = 0; c < 4; ++c)
        s -= gam(c, a, b) * out.df[c];
      out.hessian(a, b) = s;
    }
  out.laplacian = (ginv * out.hessian).trace();
  out.grad_norm2 = out.df.dot(ginv * out.df);
  return out;
}

double inner_product(const Mat4& g, std::span<const double> T,
                     std::span<const double> S) {
  if (T.size() != S.size())
    throw ShapeError("tensor contraction requires equal valences");
  std::size_t n = T.size();
  int rank = 0;
  std::size_t m = 1;
  while (m < n) {
    m *= 4;
    ++rank;
  }
  if (m != n || n == 0)
    throw ShapeError("tensor storage size must be a power of four");

  const Mat4 ginv = checked_inverse(g);
  std::vector<double> cur(S.begin(), S.end());
  std::vector<double> next(n);
  std::size_t stride = n / 4;
  for (int pass = 0; pass < rank; ++pass, stride /= 4) {
    for (std::size_t idx = 0; idx < n; ++idx) {
      const std::size_t i = (idx / stride) % 4;
      const std::size_t base = idx - i * stride;
      double s = 0.0;
      for (std::size_t j = 0; j < 4; ++j)
        s += ginv(static_cast<int>(i), static_cast<int>(j)) * cur[base + j * stride];
      next[idx] = s;
    }
    cur.swap(next);
  }
  double dot = 0.0;
  for (std::size_t idx = 0; idx < n; ++idx)
    dot += T[idx] * cur[idx];
  return dot;
}

double inner_product(const Mat4& g, const Vec4& T, const Vec4& S) {
  const Mat4 ginv = checked_inverse(g);
  return T.dot(ginv * S);
}

double inner_product(const Mat4& g, const Mat4& T, const Mat4& S) {
  const Mat4 ginv = checked_inverse(g);
  return (T.cwiseProduct(ginv * S * ginv)).sum();
}

double inner_product(const Mat4& g, const Ten4& T, const Ten4& S) {
  return inner_product(g, std::span<const double>(&T.v[0][0][0][0], 256),
                       std::span<const double>(&S.v[0][0][0][0], 256));
}

Vec4 scalar_curvature_gradient(const MetricChart& chart, const Vec4& p,
                               double rel_step) {
  chart.require_inside(p);
  Vec4 out;
  for (int k = 0; k < 4; ++k) {
    double h = rel_step * chart.box[k].width();
    const double room =
        std::min(p[k] - chart.box[k].lo, chart.box[k].hi - p[k]) / 2.5;
    h = std::min(h, room);
    Vec4 p1 = p, p2 = p, m1 = p, m2 = p;
    p1[k] += h;
    p2[k] += 2 * h;
    m1[k] -= h;
    m2[k] -= 2 * h;
    const double r1 = curvature_bundle(chart, p1).scalar;
    const double r2 = curvature_bundle(chart, p2).scalar;
    const double s1 = curvature_bundle(chart, m1).scalar;
    const double s2 = curvature_bundle(chart, m2).scalar;
    out[k] = (8.0 * (r1 - s1) - (r2 - s2)) / (12.0 * h);
  }
  return out;
}

} // namespace shrinker
