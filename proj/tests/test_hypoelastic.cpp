#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "fsslab/hypoelastic.hpp"

using namespace fss;

namespace {

const SpinKind kSpins[] = {SpinKind::ZJ, SpinKind::GN, SpinKind::GS,
                           SpinKind::Log};

HypoProblem lfss_problem(SpinKind spin, double alpha_max, int steps,
                         double sigma12_0 = 0.0) {
  HypoProblem p;
  p.rate = RateKind::corotational(spin);
  p.mode = ShearMode::LFSS;
  p.alpha_max = alpha_max;
  p.steps = steps;
  p.sigma0 = {0.0, 0.0, sigma12_0};
  return p;
}

std::vector<double> sigma12_series(const StressTrajectory& t) {
  std::vector<double> v;
  v.reserve(t.samples.size());
  for (const auto& s : t.samples) v.push_back(s.sigma.s12);
  return v;
}

}  // namespace

TEST_CASE("g12 values") {
  CHECK(g12(SpinKind::ZJ, 0.7) == 0.0);
  CHECK(g12(SpinKind::GN, 0.5) == doctest::Approx(-0.46211716).epsilon(1e-7));
  CHECK(g12(SpinKind::GS, 0.5) == doctest::Approx(-1.0 / std::tanh(1.0)));
  // From the generating expression with l1 = e^a, l2 = e^-a:
  // g12_log = -coth(2a) + 1/(2a).
  CHECK(g12(SpinKind::Log, 0.5) ==
        doctest::Approx(-1.0 / std::tanh(1.0) + 1.0).epsilon(1e-12));
  CHECK_THROWS_AS(g12(SpinKind::GS, 0.0), std::domain_error);
  CHECK_THROWS_AS(g12(SpinKind::Log, 0.0), std::domain_error);
}

TEST_CASE("r12 values") {
  const double l1 = std::exp(0.5), l2 = std::exp(-0.5);
  CHECK(r12(SpinKind::GN, l1, l2) == 0.0);
  CHECK(r12(SpinKind::ZJ, l1, l2) == doctest::Approx(std::tanh(0.5)));
  CHECK(r12(SpinKind::Log, l1, l2) ==
        doctest::Approx(0.14908187).epsilon(1e-7));
  CHECK_THROWS_AS(r12(SpinKind::GS, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(r12(SpinKind::ZJ, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("r12 - g12 equals the Zaremba-Jaumann generating scalar") {
  for (const SpinKind spin : kSpins) {
    for (const double a : {0.1, 0.5, 1.0, 2.0, 3.0}) {
      const double l1 = std::exp(a), l2 = std::exp(-a);
      const double gap = (l1 - l2) / (l1 + l2);
      CHECK(std::abs(r12(spin, l1, l2) - g12(spin, a) - gap) < 1e-12);
    }
  }
}

TEST_CASE("k_factor values and consistency with g12") {
  CHECK(k_factor(SpinKind::ZJ, 1.3) == 1.0);
  CHECK(k_factor(SpinKind::GN, 0.5) ==
        doctest::Approx(0.64805427).epsilon(1e-7));
  CHECK(k_factor(SpinKind::GN, 0.5) ==
        doctest::Approx(1.0 - std::tanh(0.5) * std::tanh(1.0)));
  CHECK(k_factor(SpinKind::GS, 0.0) == 0.0);
  CHECK(k_factor(SpinKind::GS, 2.7) == 0.0);
  CHECK(k_factor(SpinKind::Log, 0.0) == 1.0);
  CHECK(k_factor(SpinKind::Log, 0.5) == doctest::Approx(std::tanh(1.0)));

  for (const SpinKind spin : kSpins) {
    for (const double a : {0.05, 0.4, 1.1, 2.2, 3.0}) {
      const double k = 1.0 + g12(spin, a) * std::tanh(2.0 * a);
      CHECK(std::abs(k_factor(spin, a) - k) < 1e-12);
    }
  }
}

TEST_CASE("lfss_ode_rhs anchors") {
  for (const SpinKind spin : kSpins) {
    const auto [d11, d12] = lfss_ode_rhs(spin, 0.0, 0.0, 0.0, 1.0);
    CHECK(d11 == 0.0);
    CHECK(d12 == 2.0);
  }
  // GS decouples: the rhs does not feed the stress back.
  const auto [g11, g12v] = lfss_ode_rhs(SpinKind::GS, 0.5, 4.2, -3.7, 1.0);
  CHECK(g11 == doctest::Approx(-2.0 * std::tanh(1.0)));
  CHECK(g12v == 2.0);
  // ZJ with k = 1.
  const auto [z11, z12] = lfss_ode_rhs(SpinKind::ZJ, 0.5, 0.0, 1.0, 1.0);
  CHECK(z11 == doctest::Approx(2.0 - 2.0 * std::tanh(1.0)));
  CHECK(z12 == 2.0);
}

TEST_CASE("Gurtin-Spear trajectory hits its exact solution") {
  const StressTrajectory t = integrate_lfss(lfss_problem(SpinKind::GS, 0.5, 10000));
  const TrajectorySample& last = t.back();
  CHECK(std::abs(last.sigma.s12 - 1.0) < 1e-8);
  CHECK(std::abs(last.sigma.s11 + std::log(std::cosh(1.0))) < 1e-8);
  CHECK(last.sigma.s22 == doctest::Approx(-last.sigma.s11));
}

TEST_CASE("logarithmic spin reproduces the Hencky stress under LFSS") {
  const TrajectorySample& last =
      integrate_lfss(lfss_problem(SpinKind::Log, 1.5, 10000)).back();
  CHECK(std::abs(last.sigma.s12 - 3.0) < 3e-5);
  CHECK(std::abs(last.sigma.s11) < 1e-5);
}

TEST_CASE("Zaremba-Jaumann LFSS stress oscillates without crossing zero") {
  const StressTrajectory t =
      integrate_lfss(lfss_problem(SpinKind::ZJ, 6.0, 100000));
  const std::vector<double> s12 = sigma12_series(t);
  CHECK(count_sign_changes(s12, 1e-9) == 0);
  // Pronounced oscillation: the component repeatedly swings between the
  // neighborhood of zero and roughly twice the shear modulus.
  double lo = 1e300, hi = -1e300;
  for (size_t i = s12.size() / 3; i < s12.size(); ++i) {
    lo = std::min(lo, s12[i]);
    hi = std::max(hi, s12[i]);
  }
  CHECK(lo < 0.25);
  CHECK(hi > 1.7);
  CHECK(lo > 0.0);
}

TEST_CASE("trajectory sampling is uniform and starts at the initial stress") {
  const StressTrajectory t =
      integrate_lfss(lfss_problem(SpinKind::GN, 1.5, 300, -0.5));
  CHECK(t.samples.size() == 301);
  CHECK(t.samples.front().alpha == 0.0);
  CHECK(t.samples.front().sigma.s12 == doctest::Approx(-0.5));
  CHECK(t.samples[100].alpha == doctest::Approx(0.5));
}

TEST_CASE("sigma_bar of the trajectory is the back-rotated sigma") {
  const StressTrajectory t =
      integrate_lfss(lfss_problem(SpinKind::GN, 1.0, 100));
  const TrajectorySample& s = t.samples[40];
  const KinematicState st = kinematic_state(ShearMode::LFSS, s.alpha);
  CHECK((rotate(s.sigma, st.r, RotateDirection::Backward) - s.sigma_bar)
            .max_abs() < 1e-13);
}

TEST_CASE("integrate_lfss validates its problem") {
  HypoProblem p = lfss_problem(SpinKind::ZJ, 1.0, 100);
  p.mode = ShearMode::RFSS;
  CHECK_THROWS_AS(integrate_lfss(p), std::invalid_argument);
  p = lfss_problem(SpinKind::ZJ, 1.0, 0);
  CHECK_THROWS_AS(integrate_lfss(p), std::invalid_argument);
  p = lfss_problem(SpinKind::ZJ, 1.0, 100);
  p.rate = RateKind::upper_oldroyd();
  CHECK_THROWS_AS(integrate_lfss(p), std::invalid_argument);
  p = lfss_problem(SpinKind::ZJ, 1.0, 100);
  p.sigma0 = {1.0, 0.5, 0.0};  // not deviatoric
  CHECK_THROWS_AS(integrate_lfss(p), std::invalid_argument);
}

TEST_CASE("RK4 trajectory converges at fourth order") {
  auto final_sigma = [](int steps) {
    return integrate_lfss(lfss_problem(SpinKind::GN, 1.5, steps)).back().sigma;
  };
  const SymTensor2 ref = final_sigma(64000);
  const double e1 = (final_sigma(250) - ref).max_abs();
  const double e2 = (final_sigma(500) - ref).max_abs();
  CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.15));
}

TEST_CASE("theta_angle closed forms and quadrature") {
  CHECK(theta_angle(SpinKind::ZJ, 0.7) == 0.7);
  CHECK(theta_angle(SpinKind::GS, 2.3) == 0.0);
  CHECK(theta_angle(SpinKind::GN, 0.5) ==
        doctest::Approx(0.43288474).epsilon(1e-8));
  // Quadrature of tanh(2b)/(2b); reference values from 30-digit arithmetic.
  CHECK(theta_angle(SpinKind::Log, 0.5) ==
        doctest::Approx(0.454837376806).epsilon(1e-9));
  CHECK(theta_angle(SpinKind::Log, 1.5) ==
        doctest::Approx(0.959055822566).epsilon(1e-9));
  CHECK(theta_angle(SpinKind::Log, 0.0) == 0.0);
  // d theta / d alpha = k(alpha).
  const double h = 1e-5;
  for (const SpinKind spin : kSpins) {
    const double fd =
        (theta_angle(spin, 0.8 + h) - theta_angle(spin, 0.8 - h)) / (2.0 * h);
    CHECK(fd == doctest::Approx(k_factor(spin, 0.8)).epsilon(1e-6));
  }
}

TEST_CASE("initial_stress_solution rotates the initial stress") {
  const SymTensor2 s0{0.0, 0.0, -0.5};
  CHECK((initial_stress_solution(SpinKind::GS, s0, 1.9) - s0).max_abs() ==
        0.0);
  // ZJ at alpha = pi/4 rotates the shear into the normal components.
  const SymTensor2 a = initial_stress_solution(SpinKind::ZJ, s0, M_PI / 4.0);
  CHECK(a.s11 == doctest::Approx(-0.5));
  CHECK(a.s22 == doctest::Approx(0.5));
  CHECK(std::abs(a.s12) < 1e-15);
  CHECK_THROWS_AS(initial_stress_solution(SpinKind::ZJ,
                                          SymTensor2{1.0, 0.5, 0.0}, 0.5),
                  std::invalid_argument);
}

TEST_CASE("superposition: trajectory with initial stress equals zero-start "
          "plus rotated initial stress") {
  for (const SpinKind spin : kSpins) {
    const double s0 = -0.5;
    const StressTrajectory with =
        integrate_lfss(lfss_problem(spin, 1.5, 3000, s0));
    const StressTrajectory without =
        integrate_lfss(lfss_problem(spin, 1.5, 3000));
    for (const size_t i : {size_t(600), size_t(1800), size_t(3000)}) {
      const SymTensor2 expected =
          without.samples[i].sigma +
          initial_stress_solution(spin, SymTensor2{0.0, 0.0, s0},
                                  with.samples[i].alpha);
      CHECK((with.samples[i].sigma - expected).max_abs() < 1e-8);
    }
  }
}

TEST_CASE("rfss_solution anchors") {
  const StressPair a = rfss_solution(1.0, 0.75);
  CHECK(a.sigma_bar.s12 == 1.5);
  CHECK(a.sigma_bar.s11 == 0.0);

  const StressPair b = rfss_solution(1.0, 0.5);
  CHECK(b.sigma.s12 == doctest::Approx(0.64805427).epsilon(1e-7));
  CHECK(b.sigma.s11 == doctest::Approx(0.76159416).epsilon(1e-7));
  CHECK(b.sigma.s22 == doctest::Approx(-b.sigma.s11));

  const StressPair zero = rfss_solution(1.0, 0.0);
  CHECK(zero.sigma.max_abs() == 0.0);
  CHECK(zero.sigma_bar.max_abs() == 0.0);
}

TEST_CASE("incremental integrator agrees with the LFSS ODE for every spin") {
  for (const SpinKind spin : kSpins) {
    HypoProblem p = lfss_problem(spin, 1.5, 10000);
    const SymTensor2 ode = integrate_lfss(p).back().sigma;
    const SymTensor2 incr = incremental_integrate(p).back().sigma;
    CHECK((ode - incr).max_abs() < 1e-6);
  }
}

TEST_CASE("incremental integrator collapses RFSS to Lagrangian pure shear") {
  for (const SpinKind spin : kSpins) {
    HypoProblem p;
    p.rate = RateKind::corotational(spin);
    p.mode = ShearMode::RFSS;
    p.alpha_max = 1.5;
    p.steps = 10000;
    const TrajectorySample& last = incremental_integrate(p).back();
    CHECK(std::abs(last.sigma_bar.s12 - 3.0) < 3e-5);
    CHECK(std::abs(last.sigma_bar.s11) < 1e-6);
    CHECK(std::abs(last.sigma_bar.s22) < 1e-6);
    // Cauchy components follow the shared closed form.
    const StressPair exact = rfss_solution(1.0, 1.5);
    CHECK((last.sigma - exact.sigma).max_abs() < 1e-4);
  }
}

TEST_CASE("upper and lower Oldroyd rates integrate their hyperelastic twins") {
  HypoProblem p;
  p.mode = ShearMode::LFSS;
  p.alpha_max = 1.0;
  p.steps = 10000;

  p.rate = RateKind::upper_oldroyd();
  const SymTensor2 upper = incremental_integrate(p).back().sigma;
  CHECK(std::abs(upper.s12 - std::sinh(2.0)) / std::sinh(2.0) < 1e-5);
  CHECK(std::abs(upper.s11 - (std::cosh(2.0) - 1.0)) /
            (std::cosh(2.0) - 1.0) <
        1e-5);

  p.rate = RateKind::lower_oldroyd();
  const SymTensor2 lower = incremental_integrate(p).back().sigma;
  CHECK(std::abs(lower.s12 - std::sinh(2.0)) / std::sinh(2.0) < 1e-5);
  CHECK(std::abs(lower.s11 - (1.0 - std::cosh(2.0))) /
            (std::cosh(2.0) - 1.0) <
        1e-5);
}

TEST_CASE("classical simple shear solutions of the oracle") {
  // Zaremba-Jaumann: sigma12 = mu sin(gamma), sigma11 = mu (1 - cos(gamma)).
  HypoProblem p;
  p.rate = RateKind::corotational(SpinKind::ZJ);
  p.mode = ShearMode::SimpleShear;
  p.alpha_max = 2.0;
  p.steps = 10000;
  const TrajectorySample& zj = incremental_integrate(p).back();
  CHECK(std::abs(zj.sigma.s12 - std::sin(2.0)) < 1e-5);
  CHECK(std::abs(zj.sigma.s11 - (1.0 - std::cos(2.0))) < 1e-5);

  // Upper Oldroyd: sigma = mu (F F^T - I) = [[g^2, g], [g, 0]].
  p.rate = RateKind::upper_oldroyd();
  const TrajectorySample& up = incremental_integrate(p).back();
  CHECK(std::abs(up.sigma.s12 - 2.0) < 1e-5);
  CHECK(std::abs(up.sigma.s11 - 4.0) < 2e-4);
  CHECK(std::abs(up.sigma.s22) < 1e-5);

  // The Zaremba-Jaumann shear stress oscillates through zero on [0, 10].
  p.rate = RateKind::corotational(SpinKind::ZJ);
  p.alpha_max = 10.0;
  p.steps = 20000;
  const StressTrajectory t = incremental_integrate(p);
  CHECK(count_sign_changes(sigma12_series(t), 1e-9) >= 2);
}

TEST_CASE("incremental integrator converges at second order") {
  auto final_sigma = [](int steps) {
    HypoProblem p;
    p.rate = RateKind::corotational(SpinKind::Log);
    p.alpha_max = 1.5;
    p.steps = steps;
    return incremental_integrate(p).back().sigma;
  };
  const SymTensor2 ref = final_sigma(64000);
  const double e1 = (final_sigma(1000) - ref).max_abs();
  const double e2 = (final_sigma(2000) - ref).max_abs();
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("oscillation signatures over the wide parameter range") {
  auto changes = [](SpinKind spin, double s0) {
    const StressTrajectory t =
        integrate_lfss(lfss_problem(spin, 6.0, 100000, s0));
    return count_sign_changes(sigma12_series(t), 1e-9);
  };
  CHECK(changes(SpinKind::GN, 0.0) == 0);
  CHECK(changes(SpinKind::GS, 0.0) == 0);
  CHECK(changes(SpinKind::Log, 0.0) == 0);
  // With the reference initial stress the logarithmic model oscillates in
  // sigma11 and the Zaremba-Jaumann model in sigma12.
  CHECK(changes(SpinKind::ZJ, -0.5) >= 1);
  const StressTrajectory log_t =
      integrate_lfss(lfss_problem(SpinKind::Log, 6.0, 100000, -0.5));
  std::vector<double> s11;
  for (const auto& s : log_t.samples) s11.push_back(s.sigma.s11);
  CHECK(count_sign_changes(s11, 1e-9) >= 1);
}

TEST_CASE("zero-length paths return the initial state") {
  HypoProblem p = lfss_problem(SpinKind::ZJ, 0.0, 100, -0.5);
  const StressTrajectory a = integrate_lfss(p);
  REQUIRE(a.samples.size() == 1);
  CHECK(a.samples[0].sigma.s12 == -0.5);
  p.rate = RateKind::upper_oldroyd();
  const StressTrajectory b = incremental_integrate(p);
  REQUIRE(b.samples.size() == 1);
  CHECK(b.samples[0].sigma_bar.s12 == -0.5);
}

TEST_CASE("count_sign_changes") {
  CHECK(count_sign_changes({0.0, 1.0, 2.0, 1.0, 3.0}, 1e-12) == 0);
  CHECK(count_sign_changes({0.0, 1.0, -1.0, 1.0}, 1e-12) == 2);
  CHECK(count_sign_changes({-1.0, 0.0, 1.0}, 1e-12) == 1);
  CHECK(count_sign_changes({-1e-10, 1e-10}, 1e-9) == 0);
  CHECK(count_sign_changes({}, 1e-9) == 0);
}
