#pragma once

#include "shrinker/invariants.hpp"

#include <span>

namespace shrinker {

// Candidate triple (g, f, rho) for Rc + Hess f = rho g.
struct SolitonCandidate {
  ChartAtlas atlas;
  PotentialField f;
  double rho = 0.5;

  bool shrinking() const { return rho > 0.0; }
  bool normalized(double tol = 1e-9) const { return std::abs(rho - 0.5) <= tol; }
};

struct Residual {
  Mat4 tensor; // Rc + Hess f - rho g
  double norm; // metric norm of the tensor
};

Residual residual(const SolitonCandidate& c, const AtlasPoint& p);

// Maximum deviations of the three consequences of the soliton equation:
//   trace:     R + Lap f = 4 rho
//   gradient:  (1/2) dR = Rc(grad f, .)
//   conserved: |grad f|^2 + R - 2 rho f constant
struct IdentityDeviations {
  double trace_max = 0.0;
  double gradient_max = 0.0;
  double conserved_spread = 0.0;
};

IdentityDeviations identity_suite(const SolitonCandidate& c,
                                  std::span<const AtlasPoint> points);
IdentityDeviations identity_suite(const SolitonCandidate& c, int count = 100,
                                  std::uint64_t seed = 0x5eed);

// Rescales to (2 rho g, f, 1/2); the residual tensor is unchanged.
// Throws NotShrinkingError for rho <= 0.
SolitonCandidate normalize(const SolitonCandidate& c);

// One inequality check lhs <= rhs with a verdict; `boundary` when the margin
// is inside the band around zero.
struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0; // rhs - lhs
  Verdict verdict = Verdict::fail;
};

// Sufficient-condition dashboard for a normalized compact candidate.
struct SufficientReport {
  InvariantReport invariants;
  double residual_max = 0.0;
  IdentityDeviations identities;

  double min_scalar = 0.0;      // over quadrature nodes + random samples
  Verdict scalar_positive = Verdict::fail; // surrogate for Yamabe positivity
  bool scalar_surrogate = true;

  BoundCheck energy;            // Integral s^2 vs 6 Vol
  double f_min = 0.0;
  double f_max = 0.0;
  BoundCheck oscillation;       // f_max - f_min vs log 5

  Verdict positive_class = Verdict::fail; // scalar_positive and sigma2 > 0
  double sigma2_value = 0.0;

  bool ricci_checked = false;   // evaluated when positive_class passes
  double min_ricci_eigenvalue = 0.0;
  Verdict ricci_positive = Verdict::fail;

  // 8 pi^2 chi - Integral |W|^2 - Vol (5 - e^{f_max - f_min}) / 24;
  // zero in the Einstein case, expected nonnegative on normalized shrinkers.
  double chi_weyl_slack = 0.0;

  bool oscillation_implies_energy = true;

  long ht_plus = 0;  // 2 chi + 3 |tau| from snapped integers
  long ht_minus = 0; // 2 chi - 3 |tau|
  Verdict ht_plus_verdict = Verdict::fail;
  Verdict ht_minus_verdict = Verdict::fail;
};

// Throws NormalizationError unless rho = 1/2 within 1e-9 and
// UnsupportedError for non-compact atlases.  When `precomputed` is given it
// is used instead of re-running invariant_report with `spec`.
SufficientReport sufficient_report(const SolitonCandidate& c,
                                   const QuadratureSpec& spec = {},
                                   const InvariantReport* precomputed = nullptr);

} // namespace shrinker
