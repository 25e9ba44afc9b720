#include "shrinker/two_forms.hpp"

#include <cmath>

namespace shrinker {

namespace {

// Totally antisymmetric symbol with eps[0][1][2][3] = +1.
const auto kEps = [] {
  std::array<std::array<std::array<std::array<int, 4>, 4>, 4>, 4> e{};
  int idx[4];
  for (idx[0] = 0; idx[0] < 4; ++idx[0])
    for (idx[1] = 0; idx[1] < 4; ++idx[1])
      for (idx[2] = 0; idx[2] < 4; ++idx[2])
        for (idx[3] = 0; idx[3] < 4; ++idx[3]) {
          int sign = 1;
          bool repeat = false;
          for (int i = 0; i < 4 && !repeat; ++i)
            for (int j = i + 1; j < 4; ++j) {
              if (idx[i] == idx[j]) {
                repeat = true;
                break;
              }
              if (idx[i] > idx[j])
                sign = -sign;
            }
          e[idx[0]][idx[1]][idx[2]][idx[3]] = repeat ? 0 : sign;
        }
  return e;
}();

Eigen::LLT<Mat4> checked_llt(const Mat4& g) {
  Eigen::LLT<Mat4> llt(g);
  if (llt.info() != Eigen::Success)
    throw DegenerateMetricError("metric is not positive definite");
  return llt;
}

} // namespace

Mat4 two_form_matrix(const Vec6& w) {
  Mat4 a = Mat4::Zero();
  for (int i = 0; i < 6; ++i) {
    a(kPairs[i][0], kPairs[i][1]) = w[i];
    a(kPairs[i][1], kPairs[i][0]) = -w[i];
  }
  return a;
}

Vec6 two_form_components(const Mat4& a) {
  Vec6 w;
  for (int i = 0; i < 6; ++i)
    w[i] = a(kPairs[i][0], kPairs[i][1]);
  return w;
}

Mat6 two_form_gram(const Mat4& g) {
  const Mat4 ginv = checked_llt(g).solve(Mat4::Identity());
  Mat6 gram;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const int a = kPairs[i][0], b = kPairs[i][1];
      const int c = kPairs[j][0], d = kPairs[j][1];
      gram(i, j) = ginv(a, c) * ginv(b, d) - ginv(a, d) * ginv(b, c);
    }
  return gram;
}

HodgeStar hodge_star(const Mat4& g, int orientation) {
  if (orientation != 1 && orientation != -1)
    throw std::invalid_argument("orientation must be +1 or -1");
  const auto llt = checked_llt(g);
  const Mat4 ginv = llt.solve(Mat4::Identity());
  const Mat4 L = llt.matrixL();
  double sqrt_det = 1.0;
  for (int i = 0; i < 4; ++i)
    sqrt_det *= L(i, i);

  HodgeStar out;
  out.orientation = orientation;
  out.gram = two_form_gram(g);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const int a = kPairs[i][0], b = kPairs[i][1];
      const int aj = kPairs[j][0], bj = kPairs[j][1];
      double s = 0.0;
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          s += kEps[a][b][c][d] * ginv(c, aj) * ginv(d, bj);
      out.matrix(i, j) = orientation * sqrt_det * s;
    }
  return out;
}

std::pair<Mat6, Mat6> sd_projectors(const HodgeStar& star, double tol) {
  const Mat6 sq = star.matrix * star.matrix;
  const double dev = (sq - Mat6::Identity()).cwiseAbs().maxCoeff();
  if (!(dev <= tol))
    throw InconsistencyError("Hodge star fails to square to the identity");
  const Mat6 id = Mat6::Identity();
  return {0.5 * (id + star.matrix), 0.5 * (id - star.matrix)};
}

Mat3 CurvatureOperator::weyl_plus() const {
  const Mat3 b = sd_block();
  return b - (b.trace() / 3.0) * Mat3::Identity();
}

Mat3 CurvatureOperator::weyl_minus() const {
  const Mat3 b = asd_block();
  return b - (b.trace() / 3.0) * Mat3::Identity();
}

CurvatureOperator curvature_operator(const CurvatureBundle& bundle,
                                     int orientation) {
  if (orientation != 1 && orientation != -1)
    throw std::invalid_argument("orientation must be +1 or -1");

  // Orthonormal coframe from the Cholesky factor: columns of L^{-T} are the
  // frame vectors, so curvature components transform by E on every slot.
  const auto llt = checked_llt(bundle.g);
  const Mat4 L = llt.matrixL();
  const Mat4 E = L.inverse().transpose();

  double t1[4][4][4][4];
  double t2[4][4][4][4];
  // contract slot by slot: rm(a,b,c,d) E(a,i) E(b,j) E(c,k) E(d,l)
  for (int i = 0; i < 4; ++i)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double s = 0.0;
          for (int a = 0; a < 4; ++a)
            s += bundle.rm(a, b, c, d) * E(a, i);
          t1[i][b][c][d] = s;
        }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          double s = 0.0;
          for (int b = 0; b < 4; ++b)
            s += t1[i][b][c][d] * E(b, j);
          t2[i][j][c][d] = s;
        }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int d = 0; d < 4; ++d) {
          double s = 0.0;
          for (int c = 0; c < 4; ++c)
            s += t2[i][j][c][d] * E(c, k);
          t1[i][j][k][d] = s;
        }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          double s = 0.0;
          for (int d = 0; d < 4; ++d)
            s += t1[i][j][k][d] * E(d, l);
          t2[i][j][k][l] = s;
        }

  Mat6 m6;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      m6(i, j) =
          t2[kPairs[i][0]][kPairs[i][1]][kPairs[j][0]][kPairs[j][1]];

  // Split basis: s_k = (E_k + or E_{k+3})/sqrt2, a_k = (E_k - or E_{k+3})/sqrt2.
  Mat6 q = Mat6::Zero();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k < 3; ++k) {
    q(k, k) = inv_sqrt2;
    q(k + 3, k) = orientation * inv_sqrt2;
    q(k, k + 3) = inv_sqrt2;
    q(k + 3, k + 3) = -orientation * inv_sqrt2;
  }

  CurvatureOperator out;
  const Mat6 conj = q.transpose() * m6 * q;
  out.matrix = 0.5 * (conj + conj.transpose());
  out.orientation = orientation;
  out.scalar = 2.0 * out.matrix.trace();
  return out;
}

WeylNorms weyl_sd_norms(const CurvatureOperator& op) {
  WeylNorms out;
  out.plus2 = kWeylNormCalibration * op.weyl_plus().squaredNorm();
  out.minus2 = kWeylNormCalibration * op.weyl_minus().squaredNorm();
  return out;
}

} // namespace shrinker
