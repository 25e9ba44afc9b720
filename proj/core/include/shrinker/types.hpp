#pragma once

#include <Eigen/Dense>

#include <array>
#include <stdexcept>
#include <string>

namespace shrinker {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;
using Mat3 = Eigen::Matrix3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

// dg[k](i,j) = d_k g_ij
using Dg = std::array<Mat4, 4>;
// d2g[k][l](i,j) = d_k d_l g_ij
using D2g = std::array<std::array<Mat4, 4>, 4>;

// Gamma^a_{bc}, symmetric in (b,c)
struct Christoffel {
  double v[4][4][4] = {};
  double& operator()(int a, int b, int c) { return v[a][b][c]; }
  double operator()(int a, int b, int c) const { return v[a][b][c]; }
};

// rank-4 tensor with all indices down
struct Ten4 {
  double v[4][4][4][4] = {};
  double& operator()(int a, int b, int c, int d) { return v[a][b][c][d]; }
  double operator()(int a, int b, int c, int d) const { return v[a][b][c][d]; }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateMetricError : Error {
  using Error::Error;
};
struct ChartDomainError : Error {
  using Error::Error;
};
struct ShapeError : Error {
  using Error::Error;
};
struct InconsistencyError : Error {
  using Error::Error;
};
struct UnsupportedError : Error {
  using Error::Error;
};
struct EvaluationError : Error {
  using Error::Error;
};
struct NotShrinkingError : Error {
  using Error::Error;
};
struct NormalizationError : Error {
  using Error::Error;
};
struct InconsistentClassError : Error {
  using Error::Error;
};

enum class Verdict { pass, boundary, fail };

inline const char* to_string(Verdict v) {
  switch (v) {
  case Verdict::pass:
    return "pass";
  case Verdict::boundary:
    return "boundary";
  default:
    return "fail";
  }
}

} // namespace shrinker
