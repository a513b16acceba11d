#include "fsslab/hypoelastic.hpp"

#include <cmath>
#include <stdexcept>

namespace fss {

namespace {

void check_problem(const HypoProblem& p) {
  if (p.steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (!(p.alpha_max >= 0.0) || !std::isfinite(p.alpha_max))
    throw std::invalid_argument("alpha_max must be finite and >= 0");
  if (!(p.mu > 0.0)) throw std::invalid_argument("mu must be > 0");
  if (!p.sigma0.finite())
    throw std::invalid_argument("non-finite initial stress");
}

bool deviatoric(const SymTensor2& s) {
  return std::abs(s.s11 + s.s22) <= 1e-12 * std::max(1.0, s.max_abs());
}

double adaptive_simpson(double (*f)(double), double a, double b, double fa,
                        double fm, double fb, double whole, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double log_spin_integrand(double beta) { return k_factor(SpinKind::Log, beta); }

}  // namespace

double g12(SpinKind spin, double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw std::invalid_argument("g12: alpha must be finite and >= 0");
  switch (spin) {
    case SpinKind::ZJ:
      return 0.0;
    case SpinKind::GN:
      return -std::tanh(alpha);
    case SpinKind::GS:
      if (alpha == 0.0) throw std::domain_error("g12: GS singular at alpha=0");
      return -1.0 / std::tanh(2.0 * alpha);
    case SpinKind::Log:
      if (alpha == 0.0)
        throw std::domain_error("g12: Log singular at alpha=0");
      return -1.0 / std::tanh(2.0 * alpha) + 1.0 / (2.0 * alpha);
  }
  throw std::logic_error("g12: unreachable");
}

double r12(SpinKind spin, double lambda1, double lambda2) {
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0))
    throw std::invalid_argument("r12: stretches must be positive");
  switch (spin) {
    case SpinKind::ZJ:
      return (lambda1 - lambda2) / (lambda1 + lambda2);
    case SpinKind::GN:
      return 0.0;
    case SpinKind::GS:
    case SpinKind::Log: {
      const double den = lambda2 * lambda2 - lambda1 * lambda1;
      if (den == 0.0)
        throw std::domain_error("r12: coincident stretches for GS/Log");
      double r = 2.0 * lambda1 * lambda2 / den;
      if (spin == SpinKind::Log)
        r += 1.0 / (std::log(lambda1) - std::log(lambda2));
      return r;
    }
  }
  throw std::logic_error("r12: unreachable");
}

double k_factor(SpinKind spin, double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw std::invalid_argument("k_factor: alpha must be finite and >= 0");
  switch (spin) {
    case SpinKind::ZJ:
      return 1.0;
    case SpinKind::GN:
      return 1.0 / std::cosh(2.0 * alpha);
    case SpinKind::GS:
      return 0.0;
    case SpinKind::Log: {
      const double x = 2.0 * alpha;
      // tanh(x)/x -> 1 - x^2/3 + 2x^4/15 near zero.
      if (x < 1e-4) return 1.0 - x * x / 3.0 + 2.0 * x * x * x * x / 15.0;
      return std::tanh(x) / x;
    }
  }
  throw std::logic_error("k_factor: unreachable");
}

std::pair<double, double> lfss_ode_rhs(SpinKind spin, double alpha,
                                       double sigma11, double sigma12,
                                       double mu) {
  const double k = k_factor(spin, alpha);
  const double g = std::tanh(2.0 * alpha);
  return {2.0 * k * sigma12 - 2.0 * mu * g, -2.0 * k * sigma11 + 2.0 * mu};
}

StressTrajectory integrate_lfss(const HypoProblem& problem) {
  check_problem(problem);
  if (problem.rate.family != RateFamily::Corotational)
    throw std::invalid_argument("integrate_lfss: corotational rates only");
  if (problem.mode != ShearMode::LFSS)
    throw std::invalid_argument("integrate_lfss: LFSS only");
  if (!deviatoric(problem.sigma0))
    throw std::invalid_argument(
        "integrate_lfss: initial stress must satisfy sigma11 = -sigma22");

  if (problem.alpha_max == 0.0)
    return StressTrajectory{{{0.0, problem.sigma0, problem.sigma0}}};

  const SpinKind spin = problem.rate.spin;
  const double mu = problem.mu;
  const bool with_sigma0 = problem.sigma0.max_abs() > 0.0;
  const double h = problem.alpha_max / problem.steps;

  // State: zero-start stress pair plus the rotation angle theta' = k(alpha)
  // used to transport the initial stress (superposition of the linear
  // system's homogeneous and particular solutions).
  struct State {
    double s11, s12, theta;
  };
  auto rhs = [&](double a, const State& y) {
    const auto [d11, d12] = lfss_ode_rhs(spin, a, y.s11, y.s12, mu);
    return State{d11, d12, k_factor(spin, a)};
  };

  StressTrajectory traj;
  traj.samples.reserve(problem.steps + 1);

  auto emit = [&](double a, const State& y) {
    SymTensor2 sigma{y.s11, -y.s11, y.s12};
    if (with_sigma0) {
      const Tensor2 q = Tensor2::rotation(y.theta);
      sigma = sigma + rotate(problem.sigma0, q, RotateDirection::Forward);
    }
    const SymTensor2 bar =
        rotate(sigma, shear_rotation(a), RotateDirection::Backward);
    traj.samples.push_back({a, sigma, bar});
  };

  State y{0.0, 0.0, 0.0};
  emit(0.0, y);
  for (int i = 0; i < problem.steps; ++i) {
    const double a = i * h;
    const State k1 = rhs(a, y);
    const State k2 = rhs(a + 0.5 * h, {y.s11 + 0.5 * h * k1.s11,
                                       y.s12 + 0.5 * h * k1.s12,
                                       y.theta + 0.5 * h * k1.theta});
    const State k3 = rhs(a + 0.5 * h, {y.s11 + 0.5 * h * k2.s11,
                                       y.s12 + 0.5 * h * k2.s12,
                                       y.theta + 0.5 * h * k2.theta});
    const State k4 = rhs(a + h, {y.s11 + h * k3.s11, y.s12 + h * k3.s12,
                                 y.theta + h * k3.theta});
    y.s11 += h / 6.0 * (k1.s11 + 2.0 * k2.s11 + 2.0 * k3.s11 + k4.s11);
    y.s12 += h / 6.0 * (k1.s12 + 2.0 * k2.s12 + 2.0 * k3.s12 + k4.s12);
    y.theta += h / 6.0 * (k1.theta + 2.0 * k2.theta + 2.0 * k3.theta + k4.theta);
    emit((i + 1) * h, y);
  }
  return traj;
}

double theta_angle(SpinKind spin, double alpha) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw std::invalid_argument("theta_angle: alpha must be finite and >= 0");
  switch (spin) {
    case SpinKind::ZJ:
      return alpha;
    case SpinKind::GN:
      return std::atan(std::tanh(alpha));
    case SpinKind::GS:
      return 0.0;
    case SpinKind::Log: {
      if (alpha == 0.0) return 0.0;
      const double fa = log_spin_integrand(0.0);
      const double fb = log_spin_integrand(alpha);
      const double fm = log_spin_integrand(0.5 * alpha);
      const double whole = alpha / 6.0 * (fa + 4.0 * fm + fb);
      return adaptive_simpson(&log_spin_integrand, 0.0, alpha, fa, fm, fb,
                              whole, 1e-10, 48);
    }
  }
  throw std::logic_error("theta_angle: unreachable");
}

SymTensor2 initial_stress_solution(SpinKind spin, const SymTensor2& sigma0,
                                   double alpha) {
  if (!deviatoric(sigma0))
    throw std::invalid_argument(
        "initial_stress_solution: sigma11^0 = -sigma22^0 required");
  const Tensor2 q = Tensor2::rotation(theta_angle(spin, alpha));
  return rotate(sigma0, q, RotateDirection::Forward);
}

StressPair rfss_solution(double mu, double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("rfss_solution: alpha < 0");
  const double s = 2.0 * mu * alpha;
  const double c2 = std::cosh(2.0 * alpha);
  const double t2 = std::tanh(2.0 * alpha);
  StressPair out;
  out.sigma_bar = {0.0, 0.0, s};
  out.sigma = {s * t2, -s * t2, s / c2};
  return out;
}

StressTrajectory incremental_integrate(const HypoProblem& problem) {
  check_problem(problem);
  if (problem.alpha_max == 0.0)
    return StressTrajectory{{{0.0, problem.sigma0, problem.sigma0}}};

  const double h = problem.alpha_max / problem.steps;
  const double mu = problem.mu;
  const double lambda = problem.lambda;

  auto rotation_of = [&](double a) {
    if (problem.mode == ShearMode::SimpleShear)
      return polar_decompose(deformation_gradient(problem.mode, a)).r;
    return shear_rotation(a);
  };

  StressTrajectory traj;
  traj.samples.reserve(problem.steps + 1);
  SymTensor2 sigma = problem.sigma0;
  traj.samples.push_back({0.0, sigma, sigma});  // R(0) = I

  Tensor2 f0 = deformation_gradient(problem.mode, 0.0);
  for (int i = 0; i < problem.steps; ++i) {
    const double a1 = (i + 1) * h;
    const double am = (i + 0.5) * h;
    const Tensor2 f1 = deformation_gradient(problem.mode, a1);
    const Tensor2 fm = deformation_gradient(problem.mode, am);
    const Tensor2 fm_inv = fm.inverse();

    const Tensor2 l = (1.0 / h) * (f1 - f0) * fm_inv;
    const SymTensor2 d = sym(l);
    const SymTensor2 forcing =
        2.0 * mu * d + (lambda * d.trace()) * SymTensor2::identity();

    switch (problem.rate.family) {
      case RateFamily::Corotational: {
        const PolarFactors pf = polar_decompose(fm);
        const Spectral2 sp = spectral_decompose(pf.v);
        double spin12 = skew(l).w12;
        if (sp.eigenindex == 2) {
          const double g =
              r12(problem.rate.spin, sp.lambda1, sp.lambda2) -
              (sp.lambda1 - sp.lambda2) / (sp.lambda1 + sp.lambda2);
          spin12 += spin_from_projections(sp, d, g).w12;
        }
        const double phi = spin12 * h;
        const Tensor2 q = Tensor2::rotation(phi);
        const Tensor2 qh = Tensor2::rotation(0.5 * phi);
        sigma = rotate(sigma, q, RotateDirection::Forward) +
                rotate(h * forcing, qh, RotateDirection::Forward);
        break;
      }
      case RateFamily::UpperOldroyd: {
        const Tensor2 f_rel = f1 * f0.inverse();
        const Tensor2 f_half = f1 * fm_inv;
        sigma = sym(f_rel * sigma.full() * f_rel.transpose()) +
                sym(f_half * (h * forcing).full() * f_half.transpose());
        break;
      }
      case RateFamily::LowerOldroyd: {
        const Tensor2 g_rel = (f1 * f0.inverse()).inverse().transpose();
        const Tensor2 g_half = (f1 * fm_inv).inverse().transpose();
        sigma = sym(g_rel * sigma.full() * g_rel.transpose()) +
                sym(g_half * (h * forcing).full() * g_half.transpose());
        break;
      }
    }

    const SymTensor2 bar =
        rotate(sigma, rotation_of(a1), RotateDirection::Backward);
    traj.samples.push_back({a1, sigma, bar});
    f0 = f1;
  }
  return traj;
}

int count_sign_changes(const std::vector<double>& values, double threshold) {
  int changes = 0;
  int last = 0;
  for (const double v : values) {
    const int s = v > threshold ? 1 : (v < -threshold ? -1 : 0);
    if (s != 0) {
      if (last != 0 && s != last) ++changes;
      last = s;
    }
  }
  return changes;
}

}  // namespace fss
