#include "fsslab/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace fss {

namespace {

void check_alpha(double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw std::invalid_argument("shear parameter must be finite and >= 0");
}

SymTensor2 shear_stretch(double alpha) {
  return {std::cosh(alpha), std::cosh(alpha), std::sinh(alpha)};
}

}  // namespace

Tensor2 shear_rotation(double alpha) {
  const double n = 1.0 / std::sqrt(std::cosh(2.0 * alpha));
  const double ch = std::cosh(alpha) * n;
  const double sh = std::sinh(alpha) * n;
  return {ch, sh, -sh, ch};
}

MotionParameters motion_parameters(ShearMode mode, double alpha) {
  check_alpha(alpha);
  switch (mode) {
    case ShearMode::LFSS: {
      const double root = std::sqrt(std::cosh(2.0 * alpha));
      return {1.0 / root, std::sinh(2.0 * alpha) / root, root};
    }
    case ShearMode::RFSS: {
      const double root = std::sqrt(std::cosh(2.0 * alpha));
      return {root, std::sinh(2.0 * alpha) / root, 1.0 / root};
    }
    case ShearMode::SimpleShear:
      return {1.0, alpha, 1.0};
  }
  throw std::logic_error("motion_parameters: unreachable");
}

Tensor2 deformation_gradient(ShearMode mode, double alpha) {
  const MotionParameters p = motion_parameters(mode, alpha);
  return {p.a, p.b, 0.0, p.c};
}

KinematicState kinematic_state(ShearMode mode, double alpha) {
  check_alpha(alpha);

  KinematicState st;
  st.mode = mode;
  st.alpha = alpha;
  st.f = deformation_gradient(mode, alpha);

  if (mode == ShearMode::SimpleShear) {
    const PolarFactors pf = polar_decompose(st.f);
    st.r = pf.r;
    st.stretch = pf.v;
    const Spectral2 sp = spectral_decompose(pf.v);
    st.lambda1 = sp.lambda1;
    st.lambda2 = sp.lambda2;
    st.p1 = sp.p1;
    st.p2 = sp.p2;
    st.gamma_star = alpha;
    st.gamma = alpha;
    st.theta_star = std::atan(alpha);
    st.theta = std::atan(alpha);
    return st;
  }

  st.r = shear_rotation(alpha);
  st.stretch = shear_stretch(alpha);
  st.lambda1 = std::exp(alpha);
  st.lambda2 = std::exp(-alpha);
  st.p1 = {0.5, 0.5, 0.5};
  st.p2 = {0.5, 0.5, -0.5};
  st.gamma_star = std::tanh(2.0 * alpha);
  st.gamma = std::sinh(2.0 * alpha);
  st.theta_star = std::atan(st.gamma_star);
  st.theta = std::atan(st.gamma);
  return st;
}

RateTensors rate_tensors(ShearMode mode, double alpha, double alpha_dot) {
  check_alpha(alpha);
  if (!std::isfinite(alpha_dot))
    throw std::invalid_argument("rate_tensors: non-finite alpha_dot");

  RateTensors rt;
  rt.alpha_dot = alpha_dot;

  switch (mode) {
    case ShearMode::LFSS: {
      const double g = std::tanh(2.0 * alpha);
      rt.l = {-alpha_dot * g, 2.0 * alpha_dot, 0.0, alpha_dot * g};
      rt.d = {-alpha_dot * g, alpha_dot * g, alpha_dot};
      rt.w = {alpha_dot};
      rt.d_hat = rotate(rt.d, shear_rotation(alpha), RotateDirection::Backward);
      return rt;
    }
    case ShearMode::RFSS: {
      const double g = std::tanh(2.0 * alpha);
      const double sech = 1.0 / std::cosh(2.0 * alpha);
      rt.l = {alpha_dot * g, 2.0 * alpha_dot * sech, 0.0, -alpha_dot * g};
      rt.d = {alpha_dot * g, -alpha_dot * g, alpha_dot * sech};
      rt.w = {alpha_dot * sech};
      rt.d_hat = {0.0, 0.0, alpha_dot};
      return rt;
    }
    case ShearMode::SimpleShear: {
      rt.l = {0.0, alpha_dot, 0.0, 0.0};
      rt.d = {0.0, 0.0, 0.5 * alpha_dot};
      rt.w = {0.5 * alpha_dot};
      const PolarFactors pf = polar_decompose(deformation_gradient(mode, alpha));
      rt.d_hat = rotate(rt.d, pf.r, RotateDirection::Backward);
      return rt;
    }
  }
  throw std::logic_error("rate_tensors: unreachable");
}

std::pair<SymTensor2, SymTensor2> left_cg(ShearMode mode, double alpha) {
  check_alpha(alpha);
  if (mode == ShearMode::LFSS) {
    const double c2 = std::cosh(2.0 * alpha);
    const double s2 = std::sinh(2.0 * alpha);
    return {SymTensor2{c2, c2, s2}, SymTensor2{c2, c2, -s2}};
  }
  const Tensor2 f = deformation_gradient(mode, alpha);
  const SymTensor2 c = sym(f * f.transpose());
  return {c, c.inverse()};
}

NumericSpins numeric_spins(ShearMode mode, double alpha, double h) {
  check_alpha(alpha);
  if (!(h > 0.0) || !(alpha > h))
    throw std::invalid_argument("numeric_spins: requires alpha > h > 0");

  const PolarFactors p0 = polar_decompose(deformation_gradient(mode, alpha));
  const PolarFactors pp = polar_decompose(deformation_gradient(mode, alpha + h));
  const PolarFactors pm = polar_decompose(deformation_gradient(mode, alpha - h));

  const double inv2h = 1.0 / (2.0 * h);
  const Tensor2 r_dot = inv2h * (pp.r - pm.r);
  const Tensor2 u_dot = inv2h * (pp.u.full() - pm.u.full());

  NumericSpins ns;
  ns.omega_r = skew(r_dot * p0.r.transpose());
  const Tensor2 r_u = u_dot * p0.u.full().inverse();
  ns.w_lagrangian = skew(r_u);
  // w = omega_R + R.W.R^T
  ns.w = skew(ns.omega_r.full() +
              p0.r * ns.w_lagrangian.full() * p0.r.transpose());
  return ns;
}

std::array<std::array<double, 2>, 4> deform_unit_square(ShearMode mode,
                                                        double alpha) {
  const Tensor2 f = deformation_gradient(mode, alpha);
  const std::array<std::array<double, 2>, 4> corners{
      {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}}};
  std::array<std::array<double, 2>, 4> out{};
  for (int i = 0; i < 4; ++i) {
    out[i][0] = f.m11 * corners[i][0] + f.m12 * corners[i][1];
    out[i][1] = f.m21 * corners[i][0] + f.m22 * corners[i][1];
  }
  return out;
}

}  // namespace fss
