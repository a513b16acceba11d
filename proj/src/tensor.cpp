#include "fsslab/tensor.hpp"

#include <algorithm>

namespace fss {

Spectral2 spectral_decompose(const SymTensor2& s, double tol) {
  if (!s.finite())
    throw std::invalid_argument("spectral_decompose: non-finite components");
  if (tol < 0.0) throw std::invalid_argument("spectral_decompose: tol < 0");

  const double mean = 0.5 * (s.s11 + s.s22);
  const double rad = std::hypot(0.5 * (s.s11 - s.s22), s.s12);

  Spectral2 sp;
  sp.lambda1 = mean + rad;
  sp.lambda2 = mean - rad;

  if (2.0 * rad <= tol * std::max(1.0, std::abs(sp.lambda1))) {
    sp.eigenindex = 1;
    sp.p1 = SymTensor2::identity();
    sp.p2 = SymTensor2{};
    return sp;
  }

  sp.eigenindex = 2;
  const double gap = sp.lambda1 - sp.lambda2;  // = 2*rad > 0
  // Sylvester's formula, written out for the 2x2 case.
  sp.p1 = {(s.s11 - sp.lambda2) / gap, (s.s22 - sp.lambda2) / gap,
           s.s12 / gap};
  sp.p2 = {(s.s11 - sp.lambda1) / -gap, (s.s22 - sp.lambda1) / -gap,
           s.s12 / -gap};
  return sp;
}

SkewTensor2 spin_from_projections(const Spectral2& sp, const SymTensor2& d,
                                  double c12) {
  if (sp.eigenindex == 1) return {};
  const Tensor2 a = sp.p1.full() * d.full() * sp.p2.full();
  const Tensor2 b = sp.p2.full() * d.full() * sp.p1.full();
  // P1.D.P2 - P2.D.P1 is skew; keep only that part.
  return {c12 * 0.5 * ((a.m12 - b.m12) - (a.m21 - b.m21))};
}

PolarFactors polar_decompose(const Tensor2& f) {
  if (!f.finite())
    throw std::invalid_argument("polar_decompose: non-finite components");
  if (f.det() <= 0.0)
    throw std::domain_error("polar_decompose: det F must be positive");

  const double t = f.m11 + f.m22;
  const double u = f.m12 - f.m21;
  const double scale = std::hypot(t, u);  // > 0 whenever det F > 0

  PolarFactors p;
  p.r = {t / scale, u / scale, -u / scale, t / scale};
  p.u = sym(p.r.transpose() * f);  // R^T.F, symmetric up to roundoff
  p.v = sym(f * p.r.transpose());  // F.R^T
  return p;
}

SymTensor2 rotate(const SymTensor2& s, const Tensor2& r, RotateDirection dir) {
  const Tensor2 rrt = r * r.transpose();
  const double err = (rrt - Tensor2::identity()).max_abs();
  if (!(err <= 1e-10))
    throw std::invalid_argument("rotate: R is not orthogonal");

  const Tensor2 q = (dir == RotateDirection::Forward) ? r : r.transpose();
  return sym(q * s.full() * q.transpose());
}

Tensor4Sym assemble_elasticity_mr(const SymTensor2& c, double mu1, double mu2,
                                  double lambda) {
  if (!(c.det() > 0.0 && c.trace() > 0.0))
    throw std::domain_error(
        "assemble_elasticity_mr: c must be positive definite");

  const SymTensor2 m = mu1 * c + mu2 * c.inverse();

  Tensor4Sym t;
  t.c = {{{2.0 * m.s11 + lambda, lambda, m.s12},
          {lambda, 2.0 * m.s22 + lambda, m.s12},
          {m.s12, m.s12, 0.5 * (m.s11 + m.s22)}}};
  return t;
}

}  // namespace fss
