#pragma once

#include "shrinker/shrinker.hpp"

#include <random>
#include <vector>

namespace test_support {

using namespace shrinker;

inline double unit_draw(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

// Random symmetric positive definite matrix A A^T + eps I.
inline Mat4 random_spd(std::mt19937_64& rng, double eps = 0.1) {
  Mat4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      a(i, j) = 2.0 * unit_draw(rng) - 1.0;
  return a * a.transpose() + eps * Mat4::Identity();
}

inline Vec4 random_interior(std::mt19937_64& rng, const Box& box,
                            double margin = 0.05) {
  Vec4 x;
  for (int k = 0; k < 4; ++k) {
    const double u = margin + (1.0 - 2.0 * margin) * unit_draw(rng);
    x[k] = box[k].lo + u * box[k].width();
  }
  return x;
}

// Keeps the closed-form metric but replaces both derivative callables with
// finite differences of g; used to cross-check analytic derivatives.
inline MetricChart fd_only(const MetricChart& chart, double rel_step = 1e-5) {
  MetricChart stripped = chart;
  stripped.dg = nullptr;
  stripped.d2g = nullptr;
  return with_fd_derivatives(stripped, rel_step);
}

inline double max_abs_ten4(const Ten4& t) {
  double m = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          m = std::max(m, std::abs(t(a, b, c, d)));
  return m;
}

} // namespace test_support
