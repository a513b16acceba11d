#pragma once

#include <string>

#include "fsslab/kinematics.hpp"
#include "fsslab/strain.hpp"
#include "fsslab/tensor.hpp"

namespace fss {

// Hooke-like isotropic hyperelastic models evaluated in closed form.
//
//   Hlih          tau = sum_i g_i f'(l_i) l_i P_i,
//                 g_i = lambda (f_1 + f_2) + 2 mu f_i   (plane strain, f_3 = 0)
//   OgdenA        tau = mu (c - I)        + lambda log J I   (neo-Hookean /
//                                                             Simo-Pister)
//   OgdenB        tau = mu (I - c^-1)     + lambda log J I
//   Obi(r)        tau = 2 mu e_r          + lambda log J I   (two-power Ogden
//                 on the Bazant-Itskov measure; r = 0 is the Hencky model)
//   MooneyRivlin  tau = mu1 (c - I) + mu2 (I - c^-1) + lambda log J I
//
// c is the squared stretch tensor; mu is the shear modulus and lambda the
// second Lame parameter (irrelevant on the isochoric shear paths for the
// symmetrically physical measures).
struct HyperelasticModel {
  enum class Kind { Hlih, OgdenA, OgdenB, Obi, MooneyRivlin };

  Kind kind = Kind::Hlih;
  ScaleFunction scale = ScaleFunction::doyle_ericksen(0.0);  // Hlih only
  double obi_r = 0.0;                                        // Obi only
  double mu1 = 0.0, mu2 = 0.0;                               // MooneyRivlin
  double mu = 1.0;
  double lambda = 0.0;
  std::string label;

  static HyperelasticModel hlih(ScaleFunction f, double mu = 1.0,
                                double lambda = 0.0);
  static HyperelasticModel ogden_a(double mu = 1.0, double lambda = 0.0);
  static HyperelasticModel ogden_b(double mu = 1.0, double lambda = 0.0);
  static HyperelasticModel obi(double r, double mu = 1.0, double lambda = 0.0);
  // mu = mu1 + mu2.
  static HyperelasticModel mooney_rivlin(double mu1, double mu2,
                                         double lambda = 0.0);
};

// Kirchhoff stress tau = J sigma from the stretch tensor: Eulerian when given
// V, Lagrangian (the rotated stress) when given U. J = 1 on every shear path
// handled here, so tau coincides with the Cauchy stress.
SymTensor2 kirchhoff_stress(const HyperelasticModel& model,
                            const SymTensor2& stretch, double j = 1.0);

// Cauchy stress and its rotated counterpart sigma_bar = R^T sigma R.
struct StressPair {
  SymTensor2 sigma;
  SymTensor2 sigma_bar;
};

// Evaluates the model on the mode's stretch tensor (V for LFSS, U for RFSS)
// and completes the pair by rotation. LFSS and RFSS only.
StressPair shear_stress(const HyperelasticModel& model, ShearMode mode,
                        double alpha);

// Literal closed-form stress components, bypassing the tensor pipeline.
// Available for the pure-shear-capable models (Hlih on the Hencky, Pelzer or
// Mooney measure, Obi(r)) where the LFSS Cauchy stress is s(alpha) times the
// off-diagonal unit tensor:
//   Hencky s = 2 mu a;  Pelzer s = mu/2 (e^2a - e^-2a);
//   Mooney s = mu/4 (e^4a - e^-4a);  Obi(r > 0) s = mu/r (e^ra - e^-ra);
// and for Ogden-A/B where LFSS gives sigma12 = mu sinh 2a,
// sigma11 = sigma22 = +-mu (cosh 2a - 1). Throws for other models.
StressPair analytic_shear_oracle(const HyperelasticModel& model,
                                 ShearMode mode, double alpha);

// True when both normal components vanish relative to the shear component:
// |S11|, |S22| <= tol * max(1, |S12|).
bool is_pure_shear(const SymTensor2& s, double tol);

// Potential energy of the compressible Mooney-Rivlin model,
//   W = mu1 (tr e2 - log J) - mu2 (tr em2 - log J) + lambda/2 (log J)^2,
// with e2 = (c - I)/2 and em2 = (I - c^-1)/2. Plane-strain trace convention:
// the out-of-plane stretch is 1 and contributes nothing.
double mr_energy(double mu1, double mu2, double lambda, const Tensor2& f);

// Kirchhoff stress assembled from the energy: tau_i = l_i dW/dl_i on the
// eigenprojections of V, the derivative taken by central differences with
// step h on the principal-stretch form of W. Requires distinct stretches.
SymTensor2 stress_from_energy(double mu1, double mu2, double lambda,
                              const Tensor2& f, double h = 1e-5);

// Zaremba-Jaumann rate of the Mooney-Rivlin Kirchhoff stress:
//   d.(mu1 c + mu2 c^-1) + (mu1 c + mu2 c^-1).d + lambda (tr d) I.
SymTensor2 mr_zj_rate(const SymTensor2& d, const SymTensor2& c, double mu1,
                      double mu2, double lambda);

}  // namespace fss
