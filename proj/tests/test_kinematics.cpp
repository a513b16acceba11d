#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "fsslab/kinematics.hpp"

using namespace fss;

namespace {

const double kAlphaGrid[] = {0.0, 0.1, 0.25, 0.5, 0.75, 1.0, 1.5, 2.5};

}  // namespace

TEST_CASE("motion parameters reproduce the tabulated values") {
  const MotionParameters lfss = motion_parameters(ShearMode::LFSS, 0.5);
  CHECK(lfss.a == doctest::Approx(0.80501818).epsilon(1e-6));
  CHECK(lfss.b == doctest::Approx(0.94605833).epsilon(1e-6));
  CHECK(lfss.c == doctest::Approx(1.24220803).epsilon(1e-6));

  const MotionParameters rfss = motion_parameters(ShearMode::RFSS, 1.0);
  CHECK(rfss.a == doctest::Approx(1.93963805).epsilon(1e-6));
  CHECK(rfss.b == doctest::Approx(1.86986459).epsilon(1e-6));
  CHECK(rfss.c == doctest::Approx(0.51556011).epsilon(1e-6));

  for (const ShearMode mode :
       {ShearMode::LFSS, ShearMode::RFSS, ShearMode::SimpleShear}) {
    const MotionParameters p = motion_parameters(mode, 0.0);
    CHECK(p.a == 1.0);
    CHECK(p.b == 0.0);
    CHECK(p.c == 1.0);
  }
}

TEST_CASE("motion constraints hold along the parameter range") {
  for (const double a : kAlphaGrid) {
    const MotionParameters l = motion_parameters(ShearMode::LFSS, a);
    CHECK(std::abs(l.a * l.c - 1.0) < 1e-12);
    CHECK(std::abs(l.a * l.a + l.b * l.b - l.c * l.c) <
          1e-12 * std::max(1.0, l.c * l.c));
    const MotionParameters r = motion_parameters(ShearMode::RFSS, a);
    CHECK(std::abs(r.a * r.c - 1.0) < 1e-12);
    CHECK(std::abs(r.a * r.a - r.b * r.b - r.c * r.c) <
          1e-12 * std::max(1.0, r.a * r.a));
  }
}

TEST_CASE("deformation gradients are unimodular and upper triangular") {
  for (const ShearMode mode :
       {ShearMode::LFSS, ShearMode::RFSS, ShearMode::SimpleShear}) {
    for (const double a : kAlphaGrid) {
      const Tensor2 f = deformation_gradient(mode, a);
      CHECK(std::abs(f.det() - 1.0) < 1e-12);
      CHECK(f.m21 == 0.0);
    }
  }
  const Tensor2 fl = deformation_gradient(ShearMode::LFSS, 0.5);
  const double n = 1.0 / std::sqrt(std::cosh(1.0));
  CHECK(fl.m11 == doctest::Approx(n));
  CHECK(fl.m12 == doctest::Approx(n * std::sinh(1.0)));
  CHECK(fl.m22 == doctest::Approx(n * std::cosh(1.0)));

  const Tensor2 fr = deformation_gradient(ShearMode::RFSS, 0.5);
  CHECK(fr.m11 == doctest::Approx(n * std::cosh(1.0)));
  CHECK(fr.m12 == doctest::Approx(n * std::sinh(1.0)));
  CHECK(fr.m22 == doctest::Approx(n));

  const Tensor2 fs = deformation_gradient(ShearMode::SimpleShear, 2.0);
  CHECK(fs.m11 == 1.0);
  CHECK(fs.m12 == 2.0);
  CHECK(fs.m22 == 1.0);
}

TEST_CASE("kinematic state at alpha = 0 is the undeformed configuration") {
  for (const ShearMode mode :
       {ShearMode::LFSS, ShearMode::RFSS, ShearMode::SimpleShear}) {
    const KinematicState st = kinematic_state(mode, 0.0);
    CHECK((st.f - Tensor2::identity()).max_abs() < 1e-15);
    CHECK((st.r - Tensor2::identity()).max_abs() < 1e-15);
    CHECK((st.stretch - SymTensor2::identity()).max_abs() < 1e-15);
    CHECK(st.lambda1 == doctest::Approx(1.0));
  }
}

TEST_CASE("kinematic state carries the tabulated stretches and angles") {
  const KinematicState l = kinematic_state(ShearMode::LFSS, 0.5);
  CHECK(l.lambda1 == doctest::Approx(std::exp(0.5)));
  CHECK(l.gamma_star == doctest::Approx(std::tanh(1.0)));
  CHECK(l.theta_star * 180.0 / M_PI == doctest::Approx(37.29).epsilon(2e-4));

  const KinematicState r = kinematic_state(ShearMode::RFSS, 1.5);
  CHECK(r.gamma == doctest::Approx(std::sinh(3.0)));
  CHECK(r.theta * 180.0 / M_PI == doctest::Approx(84.30).epsilon(2e-4));
}

TEST_CASE("closed-form factors agree with the polar decomposition") {
  for (const ShearMode mode : {ShearMode::LFSS, ShearMode::RFSS}) {
    for (const double a : kAlphaGrid) {
      const KinematicState st = kinematic_state(mode, a);
      const PolarFactors pf = polar_decompose(st.f);
      CHECK((st.r - pf.r).max_abs() < 1e-12);
      const SymTensor2& expected =
          mode == ShearMode::LFSS ? pf.v : pf.u;
      CHECK((st.stretch - expected).max_abs() < 1e-12);
    }
  }
}

TEST_CASE("LFSS and RFSS share the rotation and stretch matrices") {
  for (const double a : kAlphaGrid) {
    const KinematicState l = kinematic_state(ShearMode::LFSS, a);
    const KinematicState r = kinematic_state(ShearMode::RFSS, a);
    CHECK((l.r - r.r).max_abs() == 0.0);
    CHECK((l.stretch - r.stretch).max_abs() == 0.0);
  }
}

TEST_CASE("shear angles approach their limits") {
  const KinematicState st = kinematic_state(ShearMode::LFSS, 10.0);
  CHECK(std::abs(st.gamma_star - 1.0) < 1e-8);
  CHECK(std::abs(st.theta_star - M_PI / 4.0) < 1e-8);
  for (const double a : kAlphaGrid)
    CHECK(kinematic_state(ShearMode::RFSS, a).gamma ==
          doctest::Approx(std::sinh(2.0 * a)));
}

TEST_CASE("rate tensors match their closed forms") {
  const RateTensors lfss = rate_tensors(ShearMode::LFSS, 0.5, 1.0);
  CHECK(lfss.d.s11 == doctest::Approx(-std::tanh(1.0)));
  CHECK(lfss.d.s22 == doctest::Approx(std::tanh(1.0)));
  CHECK(lfss.d.s12 == doctest::Approx(1.0));
  CHECK(lfss.w.w12 == doctest::Approx(1.0));

  for (const double a : kAlphaGrid) {
    const RateTensors r = rate_tensors(ShearMode::RFSS, a, 1.0);
    CHECK(std::abs(r.d_hat.s12 - 1.0) < 1e-12);
    CHECK(std::abs(r.d_hat.s11) < 1e-12);
    CHECK(std::abs(r.d.trace()) < 1e-12);
  }

  const RateTensors zero = rate_tensors(ShearMode::LFSS, 0.0, 1.0);
  CHECK(zero.d.s11 == 0.0);
  CHECK(zero.d.s12 == 1.0);
  CHECK(zero.w.w12 == 1.0);

  const RateTensors ss = rate_tensors(ShearMode::SimpleShear, 1.0, 2.0);
  CHECK(ss.l.m12 == 2.0);
  CHECK(ss.d.s12 == 1.0);
  CHECK(ss.w.w12 == 1.0);
}

TEST_CASE("d is the rotated D_hat for every mode") {
  for (const ShearMode mode :
       {ShearMode::LFSS, ShearMode::RFSS, ShearMode::SimpleShear}) {
    for (const double a : {0.3, 0.9, 1.4}) {
      const KinematicState st = kinematic_state(mode, a);
      const RateTensors rt = rate_tensors(mode, a, 1.0);
      const SymTensor2 rotated =
          rotate(rt.d_hat, st.r, RotateDirection::Forward);
      CHECK((rotated - rt.d).max_abs() < 1e-13);
    }
  }
}

TEST_CASE("velocity gradient is consistent with dF/dalpha") {
  const double h = 1e-6;
  for (const ShearMode mode :
       {ShearMode::LFSS, ShearMode::RFSS, ShearMode::SimpleShear}) {
    for (const double a : {0.3, 0.8, 1.3}) {
      const Tensor2 fdot = (1.0 / (2.0 * h)) *
                           (deformation_gradient(mode, a + h) -
                            deformation_gradient(mode, a - h));
      const Tensor2 expected =
          rate_tensors(mode, a, 1.0).l * deformation_gradient(mode, a);
      CHECK((fdot - expected).max_abs() < 1e-8);
    }
  }
}

TEST_CASE("left Cauchy-Green closed form under LFSS") {
  const auto [c0, c0i] = left_cg(ShearMode::LFSS, 0.0);
  CHECK((c0 - SymTensor2::identity()).max_abs() == 0.0);
  CHECK((c0i - SymTensor2::identity()).max_abs() == 0.0);

  const auto [c, ci] = left_cg(ShearMode::LFSS, 0.5);
  CHECK(c.s11 == doctest::Approx(1.54308063).epsilon(1e-7));
  CHECK(c.s12 == doctest::Approx(1.17520119).epsilon(1e-7));
  CHECK(ci.s12 == doctest::Approx(-c.s12));
  CHECK(sym(c * ci).s11 == doctest::Approx(1.0));
  CHECK(std::abs(sym(c * ci).s12) < 1e-14);

  for (const ShearMode mode : {ShearMode::RFSS, ShearMode::SimpleShear}) {
    const Tensor2 f = deformation_gradient(mode, 0.7);
    const auto [cc, cci] = left_cg(mode, 0.7);
    CHECK((cc - sym(f * f.transpose())).max_abs() < 1e-13);
    CHECK(sym(cc * cci).s22 == doctest::Approx(1.0));
  }
}

TEST_CASE("numeric spins recover the analytic vorticity") {
  for (const ShearMode mode : {ShearMode::LFSS, ShearMode::RFSS}) {
    for (const double a : {0.5, 1.0}) {
      const NumericSpins ns = numeric_spins(mode, a, 1e-5);
      const RateTensors rt = rate_tensors(mode, a, 1.0);
      CHECK(std::abs(ns.w.w12 - rt.w.w12) < 1e-8);
    }
  }
}

TEST_CASE("RFSS has no Lagrangian vorticity") {
  for (const double a : {0.3, 0.8, 1.4})
    CHECK(std::abs(numeric_spins(ShearMode::RFSS, a, 1e-5).w_lagrangian.w12) <
          1e-8);
}

TEST_CASE("numeric spins converge at second order") {
  const double a = 0.5;
  const RateTensors rt = rate_tensors(ShearMode::LFSS, a, 1.0);
  const double e1 =
      std::abs(numeric_spins(ShearMode::LFSS, a, 2e-3).w.w12 - rt.w.w12);
  const double e2 =
      std::abs(numeric_spins(ShearMode::LFSS, a, 1e-3).w.w12 - rt.w.w12);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("numeric spins validate their step") {
  CHECK_THROWS_AS(numeric_spins(ShearMode::LFSS, 0.5, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(numeric_spins(ShearMode::LFSS, 1e-6, 1e-5),
                  std::invalid_argument);
}

TEST_CASE("unit square corners map through F") {
  const auto rest = deform_unit_square(ShearMode::LFSS, 0.0);
  CHECK(rest[2][0] == 1.0);
  CHECK(rest[2][1] == 1.0);

  const auto lfss = deform_unit_square(ShearMode::LFSS, 0.5);
  CHECK(lfss[2][0] == doctest::Approx(1.75107651).epsilon(1e-6));
  CHECK(lfss[2][1] == doctest::Approx(1.24220803).epsilon(1e-6));

  const auto rfss = deform_unit_square(ShearMode::RFSS, 0.5);
  CHECK(rfss[2][0] == doctest::Approx(2.18826636).epsilon(1e-6));
  CHECK(rfss[2][1] == doctest::Approx(0.80501818).epsilon(1e-6));
}

TEST_CASE("deformed quadrilateral keeps unit area") {
  for (const ShearMode mode :
       {ShearMode::LFSS, ShearMode::RFSS, ShearMode::SimpleShear}) {
    for (const double a : kAlphaGrid) {
      const auto q = deform_unit_square(mode, a);
      double area = 0.0;  // shoelace
      for (int i = 0; i < 4; ++i) {
        const int j = (i + 1) % 4;
        area += q[i][0] * q[j][1] - q[j][0] * q[i][1];
      }
      CHECK(std::abs(0.5 * area - 1.0) < 1e-12);
    }
  }
}

// Objective-counterpart properties of the tensor rates, checked with
// finite-difference material rates along the LFSS path. Fields h = R H R^T
// are transported with the Eulerian rate, H with its Lagrangian twin; the
// two results must again be counterparts of each other.
namespace {

struct PathPoint {
  Tensor2 r;
  SymTensor2 u, v;
};

PathPoint path_at(double a) {
  const PolarFactors pf = polar_decompose(deformation_gradient(ShearMode::LFSS, a));
  return {pf.r, pf.u, pf.v};
}

Tensor2 fd_rate(const SymTensor2& plus, const SymTensor2& minus, double h) {
  return (1.0 / (2.0 * h)) * (plus.full() - minus.full());
}

}  // namespace

TEST_CASE("upper Oldroyd rates of counterpart strains are counterparts") {
  const double h = 1e-5;
  auto green = [](const SymTensor2& stretch) {
    return 0.5 * (stretch.square() - SymTensor2::identity());
  };
  for (const double a : {0.4, 0.9, 1.3}) {
    const PathPoint p0 = path_at(a);
    const PathPoint pp = path_at(a + h);
    const PathPoint pm = path_at(a - h);
    const RateTensors rt = rate_tensors(ShearMode::LFSS, a, 1.0);

    // Eulerian: e = (V^2 - I)/2, e_sharp = de/dt - e.l^T - l.e = d.
    const Tensor2 e_dot = fd_rate(green(pp.v), green(pm.v), h);
    const Tensor2 e = green(p0.v).full();
    const Tensor2 e_sharp = e_dot - e * rt.l.transpose() - rt.l * e;
    CHECK((sym(e_sharp) - rt.d).max_abs() < 1e-8);

    // Lagrangian: E = (U^2 - I)/2 with r_U in place of l; E_sharp = D_hat.
    const Tensor2 r_u =
        fd_rate(pp.u, pm.u, h) * p0.u.full().inverse();
    const Tensor2 e_big_dot = fd_rate(green(pp.u), green(pm.u), h);
    const Tensor2 e_big = green(p0.u).full();
    const Tensor2 e_big_sharp =
        e_big_dot - e_big * r_u.transpose() - r_u * e_big;
    CHECK((sym(e_big_sharp) - rt.d_hat).max_abs() < 1e-8);

    // Counterpart relation between the two rates.
    const SymTensor2 pushed =
        rotate(sym(e_big_sharp), p0.r, RotateDirection::Forward);
    CHECK((pushed - sym(e_sharp)).max_abs() < 1e-8);
  }
}

TEST_CASE("lower Oldroyd rate of the Almansi strain is the stretching") {
  const double h = 1e-5;
  auto almansi = [](const SymTensor2& stretch) {
    return 0.5 * (SymTensor2::identity() - stretch.square().inverse());
  };
  for (const double a : {0.4, 1.1}) {
    const RateTensors rt = rate_tensors(ShearMode::LFSS, a, 1.0);
    const Tensor2 e_dot =
        fd_rate(almansi(path_at(a + h).v), almansi(path_at(a - h).v), h);
    const Tensor2 e = almansi(path_at(a).v).full();
    const Tensor2 e_flat = e_dot + e * rt.l + rt.l.transpose() * e;
    CHECK((sym(e_flat) - rt.d).max_abs() < 1e-8);
  }
}

TEST_CASE("corotational rates with related spins are counterparts") {
  // Spins omega = omega_R + R Omega R^T built from the same generating
  // scalar produce counterpart corotational rates. Exercised with an
  // arbitrary scalar on the Hencky strain field.
  const double h = 1e-5;
  const double r_scalar = 0.83;
  auto hencky = [](const SymTensor2& stretch) {
    return apply_isotropic(stretch, [](double l) { return std::log(l); });
  };
  for (const double a : {0.5, 1.2}) {
    const PathPoint p0 = path_at(a);
    const RateTensors rt = rate_tensors(ShearMode::LFSS, a, 1.0);
    const NumericSpins ns = numeric_spins(ShearMode::LFSS, a, h);

    const Tensor2 omega_big =
        spin_from_projections(spectral_decompose(p0.u), rt.d_hat, r_scalar)
            .full();
    const Tensor2 omega =
        ns.omega_r.full() +
        spin_from_projections(spectral_decompose(p0.v), rt.d, r_scalar).full();

    const Tensor2 h_dot = fd_rate(hencky(path_at(a + h).v),
                                  hencky(path_at(a - h).v), h);
    const Tensor2 hh = hencky(p0.v).full();
    const SymTensor2 eulerian = sym(h_dot + hh * omega - omega * hh);

    const Tensor2 big_dot = fd_rate(hencky(path_at(a + h).u),
                                    hencky(path_at(a - h).u), h);
    const Tensor2 big = hencky(p0.u).full();
    const SymTensor2 lagrangian =
        sym(big_dot + big * omega_big - omega_big * big);

    CHECK((rotate(lagrangian, p0.r, RotateDirection::Forward) - eulerian)
              .max_abs() < 1e-8);
  }
}

TEST_CASE("A : dB/dt equals a : (Green-Naghdi rate of b) for counterparts") {
  const double h = 1e-5;
  auto green = [](const SymTensor2& stretch) {
    return 0.5 * (stretch.square() - SymTensor2::identity());
  };
  auto hencky = [](const SymTensor2& stretch) {
    return apply_isotropic(stretch, [](double l) { return std::log(l); });
  };
  for (const double a : {0.4, 0.9, 1.3}) {
    const PathPoint p0 = path_at(a);
    const NumericSpins ns = numeric_spins(ShearMode::LFSS, a, h);

    const SymTensor2 big_a = green(p0.u);
    const Tensor2 big_b_dot =
        fd_rate(hencky(path_at(a + h).u), hencky(path_at(a - h).u), h);
    const double lhs = ddot(big_a.full(), big_b_dot);

    const SymTensor2 a_eul = green(p0.v);
    const Tensor2 b_dot =
        fd_rate(hencky(path_at(a + h).v), hencky(path_at(a - h).v), h);
    const Tensor2 b = hencky(p0.v).full();
    const Tensor2 b_gn = b_dot + b * ns.omega_r.full() - ns.omega_r.full() * b;
    const double rhs = ddot(a_eul.full(), b_gn);

    CHECK(std::abs(lhs - rhs) < 1e-8 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("RFSS spin function vanishes for every generating scalar") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> coeff(-5.0, 5.0);
  for (const double a : {0.2, 0.7, 1.3}) {
    const KinematicState st = kinematic_state(ShearMode::RFSS, a);
    const RateTensors rt = rate_tensors(ShearMode::RFSS, a, 1.0);
    Spectral2 sp;
    sp.lambda1 = st.lambda1;
    sp.lambda2 = st.lambda2;
    sp.p1 = st.p1;
    sp.p2 = st.p2;
    sp.eigenindex = 2;
    for (int i = 0; i < 20; ++i)
      CHECK(std::abs(spin_from_projections(sp, rt.d_hat, coeff(rng)).w12) <
            1e-14);
  }
}

TEST_CASE("negative shear parameters are rejected") {
  CHECK_THROWS_AS(motion_parameters(ShearMode::LFSS, -0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(kinematic_state(ShearMode::RFSS, -1.0),
                  std::invalid_argument);
}
