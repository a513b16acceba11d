#pragma once

#include <utility>
#include <vector>

#include "fsslab/hyperelastic.hpp"
#include "fsslab/kinematics.hpp"
#include "fsslab/tensor.hpp"

namespace fss {

// Corotational spin choices for Hooke-like hypoelastic laws
// sigma^rate = 2 mu d + lambda (tr d) I.
enum class SpinKind { ZJ, GN, GS, Log };

enum class RateFamily { Corotational, UpperOldroyd, LowerOldroyd };

struct RateKind {
  RateFamily family = RateFamily::Corotational;
  SpinKind spin = SpinKind::ZJ;

  static RateKind corotational(SpinKind s) {
    return {RateFamily::Corotational, s};
  }
  static RateKind upper_oldroyd() { return {RateFamily::UpperOldroyd, {}}; }
  static RateKind lower_oldroyd() { return {RateFamily::LowerOldroyd, {}}; }
};

// g-version spin scalar on the LFSS path, with the principal stretches
// e^alpha, e^-alpha substituted:
//   ZJ: 0;  GN: -tanh a;  GS: -coth 2a;  Log: -coth 2a + 1/(2a).
// GS and Log are singular at alpha = 0; the products entering the governing
// system stay finite there (see k_factor).
double g12(SpinKind spin, double alpha);

// r-version spin scalar for arbitrary positive stretches:
//   ZJ: (l1 - l2)/(l1 + l2);  GN: 0;  GS: 2 l1 l2 / (l2^2 - l1^2);
//   Log: GS value + 1/(log l1 - log l2).
// Satisfies r12 - g12 = (l1 - l2)/(l1 + l2).
double r12(SpinKind spin, double lambda1, double lambda2);

// k = 1 + g12 * tanh 2a, the spin factor of the LFSS governing system:
//   ZJ: 1;  GN: 1/cosh 2a;  GS: 0 (identically);  Log: tanh(2a)/(2a), k(0)=1.
// Implemented as the exact limits, so alpha = 0 is regular for every spin.
double k_factor(SpinKind spin, double alpha);

// Right-hand side of the reduced LFSS system (valid under sigma22 = -sigma11):
//   d sigma11 / d alpha =  2 k sigma12 - 2 mu tanh 2a
//   d sigma12 / d alpha = -2 k sigma11 + 2 mu
std::pair<double, double> lfss_ode_rhs(SpinKind spin, double alpha,
                                       double sigma11, double sigma12,
                                       double mu);

struct HypoProblem {
  RateKind rate;
  ShearMode mode = ShearMode::LFSS;
  double mu = 1.0;
  double lambda = 0.0;
  SymTensor2 sigma0{};  // initial Cauchy stress
  double alpha_max = 1.5;
  int steps = 10000;
};

struct TrajectorySample {
  double alpha = 0.0;
  SymTensor2 sigma;
  SymTensor2 sigma_bar;
};

struct StressTrajectory {
  std::vector<TrajectorySample> samples;

  TrajectorySample back() const { return samples.back(); }
};

// Classical fourth-order Runge-Kutta integration of the reduced LFSS system
// on a uniform alpha grid. Corotational rates under LFSS only; the initial
// stress must satisfy sigma11^0 = -sigma22^0, in which case the solution is
// the zero-start trajectory plus the rotated initial stress (the system is
// linear with stress-independent forcing).
StressTrajectory integrate_lfss(const HypoProblem& problem);

// Rotation angle of the stress axes under LFSS, theta' = k(alpha):
//   ZJ: alpha;  GN: arctan(tanh alpha);  GS: 0;
//   Log: quadrature of tanh(2b)/(2b) (adaptive composite Simpson rule,
//   absolute tolerance 1e-10).
double theta_angle(SpinKind spin, double alpha);

// Homogeneous LFSS solution carrying an initial stress:
// sigma_a = Q sigma0 Q^T with Q the rotation by theta_angle. Requires a
// deviatoric initial stress (sigma11^0 = -sigma22^0).
SymTensor2 initial_stress_solution(SpinKind spin, const SymTensor2& sigma0,
                                   double alpha);

// Closed-form RFSS solution shared by every corotational spin with zero
// initial stress: Lagrangian pure shear sigma_bar12 = 2 mu alpha; the Cauchy
// components follow by rotation.
StressPair rfss_solution(double mu, double alpha);

// Incrementally objective midpoint integrator, the generic oracle for all
// rates and modes. Per step the rate tensors come from deformation-gradient
// differences at the step midpoint; corotational stresses are transported by
// the exact exponential of the midpoint spin, Oldroyd stresses by the
// relative deformation gradient (upper) or its inverse transpose (lower).
// Second-order accurate in the step size. Accepts any initial stress.
StressTrajectory incremental_integrate(const HypoProblem& problem);

// Counts strict sign alternations of a sampled series, ignoring entries with
// magnitude at or below the threshold.
int count_sign_changes(const std::vector<double>& values, double threshold);

}  // namespace fss
