#include "shrinker/zoo.hpp"

#include <cmath>
#include <sstream>

namespace shrinker {

namespace {

constexpr double kPi = 3.14159265358979323846;

double param(const ParamMap& params, const ZooEntry& entry,
             const std::string& key) {
  const auto it = params.find(key);
  if (it != params.end())
    return it->second;
  for (const ZooParam& p : entry.params)
    if (p.key == key)
      return p.def;
  throw std::invalid_argument("missing parameter " + key);
}

void check_known_keys(const ParamMap& params, const ZooEntry& entry) {
  for (const auto& [key, value] : params) {
    (void)value;
    bool known = false;
    for (const ZooParam& p : entry.params)
      known = known || p.key == key;
    if (!known)
      throw std::invalid_argument("unknown parameter " + key + " for " +
                                  entry.name);
  }
}

void require_positive(const std::string& key, double v) {
  if (!(v > 0.0)) {
    std::ostringstream os;
    os << "parameter " << key << " must be positive, got " << v;
    throw std::invalid_argument(os.str());
  }
}

MetricChart round_s4_chart(double r) {
  MetricChart chart;
  chart.box = {Interval{0, kPi}, Interval{0, kPi}, Interval{0, kPi},
               Interval{0, 2 * kPi}};
  const double r2 = r * r;
  chart.g = [r2](const Vec4& x) {
    const double s0 = std::sin(x[0]), s1 = std::sin(x[1]), s2 = std::sin(x[2]);
    Mat4 g = Mat4::Zero();
    g(0, 0) = r2;
    g(1, 1) = r2 * s0 * s0;
    g(2, 2) = r2 * s0 * s0 * s1 * s1;
    g(3, 3) = r2 * s0 * s0 * s1 * s1 * s2 * s2;
    return g;
  };
  chart.dg = [r2](const Vec4& x) {
    const double s0 = std::sin(x[0]), s1 = std::sin(x[1]), s2 = std::sin(x[2]);
    const double t0 = std::sin(2 * x[0]), t1 = std::sin(2 * x[1]),
                 t2 = std::sin(2 * x[2]);
    Dg d;
    for (auto& m : d)
      m = Mat4::Zero();
    d[0](1, 1) = r2 * t0;
    d[0](2, 2) = r2 * t0 * s1 * s1;
    d[0](3, 3) = r2 * t0 * s1 * s1 * s2 * s2;
    d[1](2, 2) = r2 * s0 * s0 * t1;
    d[1](3, 3) = r2 * s0 * s0 * t1 * s2 * s2;
    d[2](3, 3) = r2 * s0 * s0 * s1 * s1 * t2;
    return d;
  };
  chart.d2g = [r2](const Vec4& x) {
    const double s0 = std::sin(x[0]), s1 = std::sin(x[1]), s2 = std::sin(x[2]);
    const double t0 = std::sin(2 * x[0]), t1 = std::sin(2 * x[1]),
                 t2 = std::sin(2 * x[2]);
    const double c0 = std::cos(2 * x[0]), c1 = std::cos(2 * x[1]),
                 c2 = std::cos(2 * x[2]);
    D2g d;
    for (auto& row : d)
      for (auto& m : row)
        m = Mat4::Zero();
    d[0][0](1, 1) = 2 * r2 * c0;
    d[0][0](2, 2) = 2 * r2 * c0 * s1 * s1;
    d[0][0](3, 3) = 2 * r2 * c0 * s1 * s1 * s2 * s2;
    d[0][1](2, 2) = r2 * t0 * t1;
    d[0][1](3, 3) = r2 * t0 * t1 * s2 * s2;
    d[0][2](3, 3) = r2 * t0 * s1 * s1 * t2;
    d[1][1](2, 2) = 2 * r2 * s0 * s0 * c1;
    d[1][1](3, 3) = 2 * r2 * s0 * s0 * c1 * s2 * s2;
    d[1][2](3, 3) = r2 * s0 * s0 * t1 * t2;
    d[2][2](3, 3) = 2 * r2 * s0 * s0 * s1 * s1 * c2;
    d[1][0] = d[0][1];
    d[2][0] = d[0][2];
    d[2][1] = d[1][2];
    return d;
  };
  return chart;
}

MetricChart product_s2xs2_chart(double a, double b) {
  MetricChart chart;
  chart.box = {Interval{0, kPi}, Interval{0, 2 * kPi}, Interval{0, kPi},
               Interval{0, 2 * kPi}};
  const double a2 = a * a, b2 = b * b;
  chart.g = [a2, b2](const Vec4& x) {
    Mat4 g = Mat4::Zero();
    const double s0 = std::sin(x[0]), s2 = std::sin(x[2]);
    g(0, 0) = a2;
    g(1, 1) = a2 * s0 * s0;
    g(2, 2) = b2;
    g(3, 3) = b2 * s2 * s2;
    return g;
  };
  chart.dg = [a2, b2](const Vec4& x) {
    Dg d;
    for (auto& m : d)
      m = Mat4::Zero();
    d[0](1, 1) = a2 * std::sin(2 * x[0]);
    d[2](3, 3) = b2 * std::sin(2 * x[2]);
    return d;
  };
  chart.d2g = [a2, b2](const Vec4& x) {
    D2g d;
    for (auto& row : d)
      for (auto& m : row)
        m = Mat4::Zero();
    d[0][0](1, 1) = 2 * a2 * std::cos(2 * x[0]);
    d[2][2](3, 3) = 2 * b2 * std::cos(2 * x[2]);
    return d;
  };
  return chart;
}

// Polar form of the dense affine chart: coordinates (rho, theta, phi, psi).
// The orientation flag -1 selects the complex orientation, under which the
// self-dual Weyl part carries the whole conformal curvature.
MetricChart fubini_study_chart(double lambda) {
  MetricChart chart;
  chart.box = {Interval{0, kPi / 2}, Interval{0, kPi}, Interval{0, 2 * kPi},
               Interval{0, 4 * kPi}};
  chart.orientation = -1;
  const double q = lambda / 4.0;
  chart.g = [lambda, q](const Vec4& x) {
    const double A = std::sin(x[0]) * std::sin(x[0]);
    const double s2r = std::sin(2 * x[0]);
    const double B = s2r * s2r / 4.0;
    const double C = std::cos(x[1]);
    const double S = std::sin(x[1]) * std::sin(x[1]);
    Mat4 g = Mat4::Zero();
    g(0, 0) = lambda;
    g(1, 1) = q * A;
    g(2, 2) = q * (A * S + B * C * C);
    g(3, 3) = q * B;
    g(2, 3) = g(3, 2) = q * B * C;
    return g;
  };
  chart.dg = [q](const Vec4& x) {
    const double A = std::sin(x[0]) * std::sin(x[0]);
    const double Ap = std::sin(2 * x[0]);
    const double B = Ap * Ap / 4.0;
    const double Bp = std::sin(4 * x[0]) / 2.0;
    const double C = std::cos(x[1]);
    const double Cp = -std::sin(x[1]);
    const double S = std::sin(x[1]) * std::sin(x[1]);
    const double Sp = std::sin(2 * x[1]);
    const double C2p = -Sp; // d/dtheta cos^2
    Dg d;
    for (auto& m : d)
      m = Mat4::Zero();
    d[0](1, 1) = q * Ap;
    d[0](2, 2) = q * (Ap * S + Bp * C * C);
    d[0](3, 3) = q * Bp;
    d[0](2, 3) = d[0](3, 2) = q * Bp * C;
    d[1](2, 2) = q * (A * Sp + B * C2p);
    d[1](2, 3) = d[1](3, 2) = q * B * Cp;
    return d;
  };
  chart.d2g = [q](const Vec4& x) {
    const double A = std::sin(x[0]) * std::sin(x[0]);
    const double Ap = std::sin(2 * x[0]);
    const double App = 2 * std::cos(2 * x[0]);
    const double B = Ap * Ap / 4.0;
    const double Bp = std::sin(4 * x[0]) / 2.0;
    const double Bpp = 2 * std::cos(4 * x[0]);
    const double C = std::cos(x[1]);
    const double Cp = -std::sin(x[1]);
    const double Cpp = -std::cos(x[1]);
    const double S = std::sin(x[1]) * std::sin(x[1]);
    const double Sp = std::sin(2 * x[1]);
    const double Spp = 2 * std::cos(2 * x[1]);
    const double C2p = -Sp;
    const double C2pp = -Spp;
    D2g d;
    for (auto& row : d)
      for (auto& m : row)
        m = Mat4::Zero();
    d[0][0](1, 1) = q * App;
    d[0][0](2, 2) = q * (App * S + Bpp * C * C);
    d[0][0](3, 3) = q * Bpp;
    d[0][0](2, 3) = d[0][0](3, 2) = q * Bpp * C;
    d[0][1](2, 2) = q * (Ap * Sp + Bp * C2p);
    d[0][1](2, 3) = d[0][1](3, 2) = q * Bp * Cp;
    d[1][1](2, 2) = q * (A * Spp + B * C2pp);
    d[1][1](2, 3) = d[1][1](3, 2) = q * B * Cpp;
    d[1][0] = d[0][1];
    return d;
  };
  return chart;
}

MetricChart flat_chart(const Box& box) {
  MetricChart chart;
  chart.box = box;
  chart.g = [](const Vec4&) { return Mat4::Identity().eval(); };
  chart.dg = [](const Vec4&) {
    Dg d;
    for (auto& m : d)
      m = Mat4::Zero();
    return d;
  };
  chart.d2g = [](const Vec4&) {
    D2g d;
    for (auto& row : d)
      for (auto& m : row)
        m = Mat4::Zero();
    return d;
  };
  return chart;
}

PotentialField gaussian_potential() {
  PotentialField f;
  f.f = [](const Vec4& x) { return 0.25 * x.squaredNorm(); };
  f.df = [](const Vec4& x) { return (0.5 * x).eval(); };
  f.d2f = [](const Vec4&) { return (0.5 * Mat4::Identity()).eval(); };
  return f;
}

const std::vector<ZooEntry>& entries() {
  static const std::vector<ZooEntry> table = {
      {"round_s4",
       true,
       {{"r", std::sqrt(6.0), "radius; r = sqrt(6) gives the rho = 1/2 form"}},
       "round 4-sphere in polar coordinates"},
      {"fubini_study_cp2",
       true,
       {{"lambda", 12.0, "scale; lambda = 12 gives the rho = 1/2 form"}},
       "complex projective plane, dense polar chart, complex orientation"},
      {"product_s2xs2",
       true,
       {{"a", std::sqrt(2.0), "radius of the first sphere"},
        {"b", std::sqrt(2.0), "radius of the second sphere"}},
       "product of two round 2-spheres; Einstein exactly when a = b"},
      {"flat_t4",
       true,
       {{"L0", 2 * kPi, "period of axis 0"},
        {"L1", 2 * kPi, "period of axis 1"},
        {"L2", 2 * kPi, "period of axis 2"},
        {"L3", 2 * kPi, "period of axis 3"}},
       "flat 4-torus"},
      {"gaussian_shrinker",
       true,
       {{"half", 1.0, "half-width of the sampling box"}},
       "flat non-compact model with f = |x|^2/4; pointwise checks only"},
      {"koiso_cao",
       false,
       {},
       "existence-only record of the non-Einstein Kahler shrinker on "
       "CP2 # CP2bar; no closed-form metric is known"},
      {"wang_zhu",
       false,
       {},
       "existence-only record of the non-Einstein Kahler shrinker on "
       "CP2 # 2 CP2bar; no closed-form metric is known"},
  };
  return table;
}

} // namespace

const std::vector<ZooEntry>& zoo_entries() { return entries(); }

const ZooEntry& zoo_entry(const std::string& name) {
  for (const ZooEntry& e : entries())
    if (e.name == name)
      return e;
  std::string known;
  for (const ZooEntry& e : entries())
    known += (known.empty() ? "" : ", ") + e.name;
  throw std::invalid_argument("unknown zoo metric " + name + " (known: " +
                              known + ")");
}

ZooBuild zoo_build(const std::string& name, const ParamMap& params) {
  const ZooEntry& entry = zoo_entry(name);
  if (!entry.buildable)
    throw std::invalid_argument(name +
                                " is an existence-only record with no atlas");
  check_known_keys(params, entry);

  ZooBuild out;
  out.atlas.name = name;

  if (name == "round_s4") {
    const double r = param(params, entry, "r");
    require_positive("r", r);
    out.atlas.charts = {round_s4_chart(r)};
    out.soliton = SolitonData{PotentialField::constant(0.0), 3.0 / (r * r)};
  } else if (name == "fubini_study_cp2") {
    const double lambda = param(params, entry, "lambda");
    require_positive("lambda", lambda);
    out.atlas.charts = {fubini_study_chart(lambda)};
    out.atlas.kahler = true;
    out.soliton = SolitonData{PotentialField::constant(0.0), 6.0 / lambda};
  } else if (name == "product_s2xs2") {
    const double a = param(params, entry, "a");
    const double b = param(params, entry, "b");
    require_positive("a", a);
    require_positive("b", b);
    out.atlas.charts = {product_s2xs2_chart(a, b)};
    out.atlas.kahler = true;
    if (a == b)
      out.soliton = SolitonData{PotentialField::constant(0.0), 1.0 / (a * a)};
  } else if (name == "flat_t4") {
    Box box;
    const char* keys[4] = {"L0", "L1", "L2", "L3"};
    for (int k = 0; k < 4; ++k) {
      const double L = param(params, entry, keys[k]);
      require_positive(keys[k], L);
      box[k] = Interval{0, L};
    }
    out.atlas.charts = {flat_chart(box)};
    out.atlas.kahler = true;
  } else if (name == "gaussian_shrinker") {
    const double h = param(params, entry, "half");
    require_positive("half", h);
    Box box;
    for (int k = 0; k < 4; ++k)
      box[k] = Interval{-h, h};
    out.atlas.charts = {flat_chart(box)};
    out.atlas.compact = false;
    out.atlas.kahler = true;
    out.soliton = SolitonData{gaussian_potential(), 0.5};
  }
  return out;
}

ZooReference zoo_reference(const std::string& name, const ParamMap& params) {
  const ZooEntry& entry = zoo_entry(name);
  check_known_keys(params, entry);

  ZooReference ref;
  ref.name = name;
  if (name == "round_s4") {
    const double r = param(params, entry, "r");
    ref.chi = 2;
    ref.tau = 0;
    ref.spin = true;
    ref.einstein = true;
    ref.volume = (8.0 * kPi * kPi / 3.0) * r * r * r * r;
  } else if (name == "fubini_study_cp2") {
    const double lambda = param(params, entry, "lambda");
    ref.chi = 3;
    ref.tau = 1;
    ref.spin = false;
    ref.einstein = true;
    ref.kahler = true;
    ref.volume = lambda * lambda * kPi * kPi / 2.0;
  } else if (name == "product_s2xs2") {
    const double a = param(params, entry, "a");
    const double b = param(params, entry, "b");
    ref.chi = 4;
    ref.tau = 0;
    ref.spin = true;
    ref.einstein = a == b;
    ref.kahler = true;
    ref.volume = 16.0 * kPi * kPi * a * a * b * b;
  } else if (name == "flat_t4") {
    double v = 1.0;
    for (const char* key : {"L0", "L1", "L2", "L3"})
      v *= param(params, entry, key);
    ref.chi = 0;
    ref.tau = 0;
    ref.b1 = 4;
    ref.spin = true;
    ref.simply_connected = false;
    ref.einstein = true;
    ref.kahler = true;
    ref.volume = v;
  } else if (name == "gaussian_shrinker") {
    ref.chi = 1;
    ref.tau = 0;
    ref.spin = true;
    ref.einstein = true;
    ref.kahler = true;
    ref.compact = false;
    ref.note = "contractible model space; curvature integrals unsupported";
  } else if (name == "koiso_cao") {
    ref.chi = 4;
    ref.tau = 0;
    ref.spin = false;
    ref.einstein = false;
    ref.kahler = true;
    ref.note = entry.doc;
  } else if (name == "wang_zhu") {
    ref.chi = 5;
    ref.tau = -1;
    ref.spin = false;
    ref.einstein = false;
    ref.kahler = true;
    ref.note = entry.doc;
  }
  return ref;
}

SolitonCandidate zoo_candidate(const std::string& name, const ParamMap& params) {
  ZooBuild build = zoo_build(name, params);
  if (!build.soliton)
    throw std::invalid_argument(name + " ships no soliton data");
  SolitonCandidate c;
  c.atlas = std::move(build.atlas);
  c.f = std::move(build.soliton->f);
  c.rho = build.soliton->rho;
  return c;
}

} // namespace shrinker
