#pragma once

#include <array>
#include <utility>

#include "fsslab/tensor.hpp"

namespace fss {

// One-parameter isochoric plane-strain shear motions
//   x1 = a(alpha) X1 + b(alpha) X2,  x2 = c(alpha) X2,  a c = 1.
//
// LFSS (left finite simple shear) satisfies a^2 + b^2 = c^2 and keeps the
// left stretch tensor coaxial with the fixed 45-degree frame; RFSS satisfies
// a^2 = b^2 + c^2 and does the same for the right stretch tensor. SimpleShear
// is the classical motion x1 = X1 + gamma X2 with gamma = alpha.
enum class ShearMode { LFSS, RFSS, SimpleShear };

struct MotionParameters {
  double a = 1.0;
  double b = 0.0;
  double c = 1.0;
};

// LFSS: (1, sinh 2a, cosh 2a)/sqrt(cosh 2a) pattern; RFSS mirrored;
// SimpleShear: (1, alpha, 1).
MotionParameters motion_parameters(ShearMode mode, double alpha);

// Rotation factor shared by the LFSS and RFSS polar decompositions:
// [[cosh a, sinh a], [-sinh a, cosh a]] / sqrt(cosh 2a).
Tensor2 shear_rotation(double alpha);

// F = [[a, b], [0, c]]; det F = 1 for all three modes.
Tensor2 deformation_gradient(ShearMode mode, double alpha);

// Closed-form kinematics of a shear configuration. For LFSS `stretch` is the
// left stretch V, for RFSS the right stretch U; both equal
// [[cosh a, sinh a], [sinh a, cosh a]] with principal stretches e^a, e^-a on
// the fixed 45-degree eigenprojections. For SimpleShear the factors come from
// the polar decomposition and `stretch` is the left stretch V.
struct KinematicState {
  ShearMode mode = ShearMode::LFSS;
  double alpha = 0.0;
  Tensor2 f;
  Tensor2 r;
  SymTensor2 stretch;
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  SymTensor2 p1;
  SymTensor2 p2;
  // Shear angles and amounts: gamma_star = tanh 2a with theta_star its
  // arctangent (the LFSS pair), gamma = sinh 2a with theta its arctangent
  // (the RFSS pair). SimpleShear carries gamma = gamma_star = alpha.
  double gamma_star = 0.0;
  double gamma = 0.0;
  double theta_star = 0.0;  // radians
  double theta = 0.0;       // radians
};

KinematicState kinematic_state(ShearMode mode, double alpha);

// Velocity gradient l = dF/dt F^-1 and derived rates for alpha(t) with the
// given rate alpha_dot. d = sym l, w = skew l; D_hat = R^T d R is the rotated
// (Lagrangian) stretching. All are traceless for these isochoric motions.
struct RateTensors {
  Tensor2 l;
  SymTensor2 d;
  SkewTensor2 w;
  SymTensor2 d_hat;
  double alpha_dot = 1.0;
};

RateTensors rate_tensors(ShearMode mode, double alpha, double alpha_dot = 1.0);

// Left Cauchy-Green tensor c = F F^T and its inverse. For LFSS these are
// [[cosh 2a, +-sinh 2a], [+-sinh 2a, cosh 2a]] in closed form.
std::pair<SymTensor2, SymTensor2> left_cg(ShearMode mode, double alpha);

// Spin tensors assembled from central finite differences of the polar
// factors with step h:
//   omega_R = dR/dt R^T,   W = skew(dU/dt U^-1),   w = omega_R + R W R^T.
// Serves as an independent check of the analytic rate tensors; the error is
// O(h^2).
struct NumericSpins {
  SkewTensor2 omega_r;
  SkewTensor2 w;
  SkewTensor2 w_lagrangian;
};

NumericSpins numeric_spins(ShearMode mode, double alpha, double h = 1e-5);

// Images of the unit-square corners (0,0), (1,0), (1,1), (0,1) under x = F X.
std::array<std::array<double, 2>, 4> deform_unit_square(ShearMode mode,
                                                        double alpha);

}  // namespace fss
