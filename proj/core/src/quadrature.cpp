#include "shrinker/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace shrinker {

namespace {

GaussLegendreRule make_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration from the Chebyshev-based initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15)
        break;
    }
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

std::string format_point(std::size_t chart, const Vec4& p) {
  std::ostringstream os;
  os << "chart " << chart << ", point (" << p[0] << ", " << p[1] << ", "
     << p[2] << ", " << p[3] << ")";
  return os.str();
}

// One full tensor-product pass at `n` nodes per axis.
std::vector<double>
run_pass(const ChartAtlas& atlas, int count, int n,
         const std::function<void(std::size_t, const Vec4&, std::span<double>)>&
             fields) {
  const GaussLegendreRule& rule = gauss_legendre(n);
  std::vector<KahanSum> acc(count);
  std::vector<double> vals(count);

  for (std::size_t ci = 0; ci < atlas.charts.size(); ++ci) {
    const MetricChart& chart = atlas.charts[ci];
    std::array<std::vector<double>, 4> xs, ws;
    for (int k = 0; k < 4; ++k) {
      xs[k].resize(n);
      ws[k].resize(n);
      const double mid = 0.5 * (chart.box[k].lo + chart.box[k].hi);
      const double half = 0.5 * chart.box[k].width();
      for (int i = 0; i < n; ++i) {
        xs[k][i] = mid + half * rule.nodes[i];
        ws[k][i] = half * rule.weights[i];
      }
    }

    Vec4 p;
    for (int i0 = 0; i0 < n; ++i0) {
      p[0] = xs[0][i0];
      for (int i1 = 0; i1 < n; ++i1) {
        p[1] = xs[1][i1];
        const double w01 = ws[0][i0] * ws[1][i1];
        for (int i2 = 0; i2 < n; ++i2) {
          p[2] = xs[2][i2];
          const double w012 = w01 * ws[2][i2];
          for (int i3 = 0; i3 < n; ++i3) {
            p[3] = xs[3][i3];
            const double w = w012 * ws[3][i3];

            const Mat4 g = chart.g(p);
            Eigen::LLT<Mat4> llt(g);
            if (llt.info() != Eigen::Success)
              throw DegenerateMetricError(
                  "metric is not positive definite at " + format_point(ci, p));
            const Mat4 L = llt.matrixL();
            const double sqrt_det =
                L(0, 0) * L(1, 1) * L(2, 2) * L(3, 3);

            fields(ci, p, std::span<double>(vals.data(), count));
            for (int k = 0; k < count; ++k) {
              if (!std::isfinite(vals[k]))
                throw EvaluationError("integrand " + std::to_string(k) +
                                      " is not finite at " +
                                      format_point(ci, p));
              acc[k].add(w * sqrt_det * vals[k]);
            }
          }
        }
      }
    }
  }

  std::vector<double> out(count);
  for (int k = 0; k < count; ++k)
    out[k] = acc[k].sum;
  return out;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int n) {
  if (n < 2)
    throw std::invalid_argument("Gauss-Legendre rule needs at least 2 nodes");
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, make_rule(n)).first;
  return it->second;
}

int QuadratureSpec::refined_nodes() const {
  const int m = static_cast<int>(std::lround(nodes * refinement));
  return std::max(m, nodes);
}

void QuadratureSpec::validate() const {
  if (nodes < 2)
    throw std::invalid_argument("node count must be at least 2");
  if (!(refinement >= 1.0))
    throw std::invalid_argument("refinement factor must be at least 1");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("tolerance must be positive");
}

std::vector<Estimate>
integrate_fields(const ChartAtlas& atlas, int count,
                 const std::function<void(std::size_t chart, const Vec4& x,
                                          std::span<double> out)>& fields,
                 const QuadratureSpec& spec) {
  spec.validate();
  if (!atlas.compact)
    throw UnsupportedError("integration requires a compact atlas");
  if (count <= 0)
    throw std::invalid_argument("at least one integrand is required");

  const std::vector<double> coarse = run_pass(atlas, count, spec.nodes, fields);
  std::vector<double> fine = coarse;
  if (spec.refined_nodes() != spec.nodes)
    fine = run_pass(atlas, count, spec.refined_nodes(), fields);

  std::vector<Estimate> out(count);
  for (int k = 0; k < count; ++k) {
    out[k].value = fine[k];
    out[k].coarse = coarse[k];
    out[k].error = std::max(std::abs(fine[k] - coarse[k]),
                            spec.abs_floor * std::max(1.0, std::abs(fine[k])));
  }
  return out;
}

Estimate integrate_scalar(
    const ChartAtlas& atlas,
    const std::function<double(std::size_t, const Vec4&)>& field,
    const QuadratureSpec& spec) {
  auto fields = [&field](std::size_t ci, const Vec4& p, std::span<double> out) {
    out[0] = field(ci, p);
  };
  return integrate_fields(atlas, 1, fields, spec)[0];
}

} // namespace shrinker
