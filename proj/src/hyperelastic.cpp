#include "fsslab/hyperelastic.hpp"

#include <cmath>
#include <stdexcept>

namespace fss {

namespace {

void check_spd(const SymTensor2& s, const char* where) {
  if (!(s.det() > 0.0 && s.trace() > 0.0))
    throw std::domain_error(std::string(where) +
                            ": stretch must be positive definite");
}

// Classifies a Hlih scale function as one of the three measures with a
// closed-form shear solution; returns -1 when it is none of them.
// 0 = Hencky, 1 = Pelzer, 2 = Mooney.
int hlih_closed_form_id(const ScaleFunction& f) {
  if (f.parameter() == 0.0) return 0;  // log branch in either family
  if (f.family() == ScaleFunction::Family::BazantItskov) {
    if (f.parameter() == 1.0) return 1;
    if (f.parameter() == 2.0) return 2;
  }
  return -1;
}

// sigma_bar of a pure-shear Eulerian stress s under the shared shear
// rotation: (s / cosh 2a) [[-sinh 2a, 1], [1, sinh 2a]].
SymTensor2 rotated_pure_shear(double s, double alpha) {
  const double c2 = std::cosh(2.0 * alpha);
  const double s2 = std::sinh(2.0 * alpha);
  return {-s * s2 / c2, s * s2 / c2, s / c2};
}

// Backward rotation R^T . S . R written out against the closed-form rotation
// factor, independent of the tensor pipeline it cross-checks.
SymTensor2 rotate_back_closed_form(const SymTensor2& s, double alpha) {
  const double n = 1.0 / std::sqrt(std::cosh(2.0 * alpha));
  const double ch = std::cosh(alpha) * n;
  const double sh = std::sinh(alpha) * n;
  // R = [[ch, sh], [-sh, ch]]; sigma_bar = R^T S R.
  const double b11 =
      ch * (ch * s.s11 - sh * s.s12) - sh * (ch * s.s12 - sh * s.s22);
  const double b22 =
      sh * (sh * s.s11 + ch * s.s12) + ch * (sh * s.s12 + ch * s.s22);
  const double b12 =
      ch * (sh * s.s11 + ch * s.s12) - sh * (sh * s.s12 + ch * s.s22);
  return {b11, b22, b12};
}

double mr_energy_of_stretches(double mu1, double mu2, double lambda, double l1,
                              double l2) {
  const double logj = std::log(l1 * l2);
  const double tr_e2 = 0.5 * (l1 * l1 - 1.0) + 0.5 * (l2 * l2 - 1.0);
  const double tr_em2 =
      0.5 * (1.0 - 1.0 / (l1 * l1)) + 0.5 * (1.0 - 1.0 / (l2 * l2));
  return mu1 * (tr_e2 - logj) - mu2 * (tr_em2 - logj) +
         0.5 * lambda * logj * logj;
}

}  // namespace

HyperelasticModel HyperelasticModel::hlih(ScaleFunction f, double mu,
                                          double lambda) {
  HyperelasticModel m;
  m.kind = Kind::Hlih;
  m.scale = std::move(f);
  m.mu = mu;
  m.lambda = lambda;
  m.label = "hlih:" + m.scale.name();
  return m;
}

HyperelasticModel HyperelasticModel::ogden_a(double mu, double lambda) {
  HyperelasticModel m;
  m.kind = Kind::OgdenA;
  m.mu = mu;
  m.lambda = lambda;
  m.label = "ogden-a";
  return m;
}

HyperelasticModel HyperelasticModel::ogden_b(double mu, double lambda) {
  HyperelasticModel m;
  m.kind = Kind::OgdenB;
  m.mu = mu;
  m.lambda = lambda;
  m.label = "ogden-b";
  return m;
}

HyperelasticModel HyperelasticModel::obi(double r, double mu, double lambda) {
  if (!(r >= 0.0)) throw std::invalid_argument("obi: r must be >= 0");
  HyperelasticModel m;
  m.kind = Kind::Obi;
  m.obi_r = r;
  m.mu = mu;
  m.lambda = lambda;
  m.label = "obi:" + std::to_string(r);
  return m;
}

HyperelasticModel HyperelasticModel::mooney_rivlin(double mu1, double mu2,
                                                   double lambda) {
  if (!(mu1 >= 0.0) || !(mu2 >= 0.0))
    throw std::invalid_argument("mooney_rivlin: mu1, mu2 must be >= 0");
  HyperelasticModel m;
  m.kind = Kind::MooneyRivlin;
  m.mu1 = mu1;
  m.mu2 = mu2;
  m.mu = mu1 + mu2;
  m.lambda = lambda;
  m.label = "mr:" + std::to_string(mu1) + "," + std::to_string(mu2);
  return m;
}

SymTensor2 kirchhoff_stress(const HyperelasticModel& model,
                            const SymTensor2& stretch, double j) {
  check_spd(stretch, "kirchhoff_stress");
  if (!(j > 0.0)) throw std::domain_error("kirchhoff_stress: J must be > 0");
  const double logj = std::log(j);
  const SymTensor2 vol = (model.lambda * logj) * SymTensor2::identity();

  switch (model.kind) {
    case HyperelasticModel::Kind::Hlih: {
      const Spectral2 sp = spectral_decompose(stretch);
      const ScaleFunction& f = model.scale;
      if (sp.eigenindex == 1) {
        const double fi = f.value(sp.lambda1);
        const double g = model.lambda * 2.0 * fi + 2.0 * model.mu * fi;
        return (g * f.derivative(sp.lambda1) * sp.lambda1) *
               SymTensor2::identity();
      }
      const double f1 = f.value(sp.lambda1);
      const double f2 = f.value(sp.lambda2);
      const double g1 = model.lambda * (f1 + f2) + 2.0 * model.mu * f1;
      const double g2 = model.lambda * (f1 + f2) + 2.0 * model.mu * f2;
      return (g1 * f.derivative(sp.lambda1) * sp.lambda1) * sp.p1 +
             (g2 * f.derivative(sp.lambda2) * sp.lambda2) * sp.p2;
    }
    case HyperelasticModel::Kind::OgdenA: {
      const SymTensor2 c = stretch.square();
      return model.mu * (c - SymTensor2::identity()) + vol;
    }
    case HyperelasticModel::Kind::OgdenB: {
      const SymTensor2 c_inv = stretch.square().inverse();
      return model.mu * (SymTensor2::identity() - c_inv) + vol;
    }
    case HyperelasticModel::Kind::Obi: {
      const ScaleFunction f = ScaleFunction::bazant_itskov(model.obi_r);
      return 2.0 * model.mu * strain_from_stretch(f, stretch) + vol;
    }
    case HyperelasticModel::Kind::MooneyRivlin: {
      const SymTensor2 c = stretch.square();
      return model.mu1 * (c - SymTensor2::identity()) +
             model.mu2 * (SymTensor2::identity() - c.inverse()) + vol;
    }
  }
  throw std::logic_error("kirchhoff_stress: unreachable");
}

StressPair shear_stress(const HyperelasticModel& model, ShearMode mode,
                        double alpha) {
  if (mode == ShearMode::SimpleShear)
    throw std::invalid_argument("shear_stress: mode must be LFSS or RFSS");

  const KinematicState st = kinematic_state(mode, alpha);
  StressPair out;
  if (mode == ShearMode::LFSS) {
    out.sigma = kirchhoff_stress(model, st.stretch, 1.0);
    out.sigma_bar = rotate(out.sigma, st.r, RotateDirection::Backward);
  } else {
    out.sigma_bar = kirchhoff_stress(model, st.stretch, 1.0);
    out.sigma = rotate(out.sigma_bar, st.r, RotateDirection::Forward);
  }
  return out;
}

StressPair analytic_shear_oracle(const HyperelasticModel& model,
                                 ShearMode mode, double alpha) {
  if (mode == ShearMode::SimpleShear)
    throw std::invalid_argument(
        "analytic_shear_oracle: mode must be LFSS or RFSS");
  if (alpha < 0.0) throw std::invalid_argument("analytic_shear_oracle: alpha < 0");

  const double mu = model.mu;
  const double c2 = std::cosh(2.0 * alpha);
  const double s2 = std::sinh(2.0 * alpha);

  // Ogden-A/B: not pure shear in either description.
  if (model.kind == HyperelasticModel::Kind::OgdenA ||
      model.kind == HyperelasticModel::Kind::OgdenB) {
    const double sgn = model.kind == HyperelasticModel::Kind::OgdenA ? 1.0 : -1.0;
    const SymTensor2 lfss_sigma{sgn * mu * (c2 - 1.0), sgn * mu * (c2 - 1.0),
                                mu * s2};
    StressPair out;
    if (mode == ShearMode::LFSS) {
      out.sigma = lfss_sigma;
      out.sigma_bar = rotate_back_closed_form(lfss_sigma, alpha);
    } else {
      // sigma_bar under RFSS equals the LFSS Cauchy stress; the Cauchy
      // components follow from the forward rotation.
      out.sigma_bar = lfss_sigma;
      const double c4 = std::cosh(4.0 * alpha);
      if (model.kind == HyperelasticModel::Kind::OgdenA)
        out.sigma = {mu * (c4 / c2 - 1.0), mu * (1.0 / c2 - 1.0),
                     mu * std::tanh(2.0 * alpha)};
      else
        out.sigma = {mu * (1.0 - 1.0 / c2), mu * (1.0 - c4 / c2),
                     mu * std::tanh(2.0 * alpha)};
    }
    return out;
  }

  // Pure-shear family: s(alpha) per model.
  double s = 0.0;
  if (model.kind == HyperelasticModel::Kind::Hlih) {
    switch (hlih_closed_form_id(model.scale)) {
      case 0:
        s = 2.0 * mu * alpha;
        break;
      case 1:
        s = 0.5 * mu * (std::exp(2.0 * alpha) - std::exp(-2.0 * alpha));
        break;
      case 2:
        s = 0.25 * mu * (std::exp(4.0 * alpha) - std::exp(-4.0 * alpha));
        break;
      default:
        throw std::invalid_argument(
            "analytic_shear_oracle: no closed form for hlih measure '" +
            model.scale.name() + "'");
    }
  } else if (model.kind == HyperelasticModel::Kind::Obi) {
    const double r = model.obi_r;
    s = r == 0.0 ? 2.0 * mu * alpha
                 : mu / r * (std::exp(r * alpha) - std::exp(-r * alpha));
  } else {
    throw std::invalid_argument("analytic_shear_oracle: no closed form");
  }

  StressPair out;
  if (mode == ShearMode::LFSS) {
    out.sigma = {0.0, 0.0, s};
    out.sigma_bar = rotated_pure_shear(s, alpha);
  } else {
    out.sigma_bar = {0.0, 0.0, s};
    out.sigma = {s * s2 / c2, -s * s2 / c2, s / c2};
  }
  return out;
}

bool is_pure_shear(const SymTensor2& s, double tol) {
  if (tol < 0.0) throw std::invalid_argument("is_pure_shear: tol < 0");
  const double ref = tol * std::max(1.0, std::abs(s.s12));
  return std::abs(s.s11) <= ref && std::abs(s.s22) <= ref;
}

double mr_energy(double mu1, double mu2, double lambda, const Tensor2& f) {
  const double j = f.det();
  if (!(j > 0.0)) throw std::domain_error("mr_energy: det F must be positive");
  const double logj = std::log(j);
  const SymTensor2 c = sym(f * f.transpose());
  const double tr_e2 = 0.5 * (c.trace() - 2.0);
  const double tr_em2 = 0.5 * (2.0 - c.inverse().trace());
  return mu1 * (tr_e2 - logj) - mu2 * (tr_em2 - logj) +
         0.5 * lambda * logj * logj;
}

SymTensor2 stress_from_energy(double mu1, double mu2, double lambda,
                              const Tensor2& f, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("stress_from_energy: h <= 0");
  const PolarFactors pf = polar_decompose(f);
  const Spectral2 sp = spectral_decompose(pf.v);
  if (sp.eigenindex == 1)
    throw std::domain_error(
        "stress_from_energy: principal stretches coincide");

  const double l1 = sp.lambda1;
  const double l2 = sp.lambda2;
  const double dw1 = (mr_energy_of_stretches(mu1, mu2, lambda, l1 + h, l2) -
                      mr_energy_of_stretches(mu1, mu2, lambda, l1 - h, l2)) /
                     (2.0 * h);
  const double dw2 = (mr_energy_of_stretches(mu1, mu2, lambda, l1, l2 + h) -
                      mr_energy_of_stretches(mu1, mu2, lambda, l1, l2 - h)) /
                     (2.0 * h);
  return (l1 * dw1) * sp.p1 + (l2 * dw2) * sp.p2;
}

SymTensor2 mr_zj_rate(const SymTensor2& d, const SymTensor2& c, double mu1,
                      double mu2, double lambda) {
  check_spd(c, "mr_zj_rate");
  const SymTensor2 m = mu1 * c + mu2 * c.inverse();
  return sym(d * m + m * d) + (lambda * d.trace()) * SymTensor2::identity();
}

}  // namespace fss
