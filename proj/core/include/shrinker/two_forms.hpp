#pragma once

#include "shrinker/curvature.hpp"
#include "shrinker/types.hpp"

#include <utility>

namespace shrinker {

// Index pairs (a,b) enumerating the six coordinate 2-forms dx^a ^ dx^b.
// The order pairs the first three slots with their duals: with the flat
// metric and positive orientation the Hodge star sends slot k to slot k+3.
inline constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                     {2, 3}, {3, 1}, {1, 2}};

// Antisymmetric 4x4 component matrix of a 2-form from its six pair
// components, and the inverse map.
Mat4 two_form_matrix(const Vec6& w);
Vec6 two_form_components(const Mat4& a);

// Gram matrix of the pair basis under <phi,psi> = 1/2 phi_ab psi_cd g^ac g^bd.
Mat6 two_form_gram(const Mat4& g);

struct HodgeStar {
  Mat6 matrix; // action on pair components
  Mat6 gram;
  int orientation = +1;
};

// Hodge star on 2-forms for metric g and the given orientation sign.
// Throws DegenerateMetricError when g is not positive definite.
HodgeStar hodge_star(const Mat4& g, int orientation = +1);

// Projectors (I + S)/2, (I - S)/2 onto the self-dual / anti-self-dual
// eigenspaces.  Throws InconsistencyError when star.matrix^2 deviates from
// the identity beyond tol.
std::pair<Mat6, Mat6> sd_projectors(const HodgeStar& star, double tol = 1e-10);

// Curvature viewed as a symmetric endomorphism of 2-forms, expressed in an
// orthonormal frame basis split into self-dual and anti-self-dual triples:
//
//   [ W+ + s/12   ric0      ]
//   [ ric0^T      W- + s/12 ]
//
// with s the scalar curvature and both diagonal blocks of trace s/4.
struct CurvatureOperator {
  Mat6 matrix;
  double scalar = 0.0;
  int orientation = +1;

  Mat3 sd_block() const { return matrix.topLeftCorner<3, 3>(); }
  Mat3 asd_block() const { return matrix.bottomRightCorner<3, 3>(); }
  Mat3 mixed_block() const { return matrix.topRightCorner<3, 3>(); }
  Mat3 weyl_plus() const;  // sd_block minus its trace part
  Mat3 weyl_minus() const; // asd_block minus its trace part
};

CurvatureOperator curvature_operator(const CurvatureBundle& bundle,
                                     int orientation = +1);

struct WeylNorms {
  double plus2 = 0.0;  // |W+|^2
  double minus2 = 0.0; // |W-|^2
  double total2() const { return plus2 + minus2; }
};

// Norm convention: |W+|^2 is the plain Frobenius square of the trace-free
// self-dual block, i.e. the endomorphism norm on 2-forms.  This is the
// calibration under which tau = (1/12 pi^2) Integral(|W+|^2 - |W-|^2)
// reproduces the signature on the complex projective plane.
inline constexpr double kWeylNormCalibration = 1.0;

WeylNorms weyl_sd_norms(const CurvatureOperator& op);

} // namespace shrinker
