#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

// Plane-strain tensor algebra on 2x2 objects. Everything here works on the
// in-plane block only; the out-of-plane direction (lambda3 = 1, sigma33 = 0)
// is implied by the deformations this library handles and is never stored.

namespace fss {

struct Tensor2 {
  double m11 = 0.0, m12 = 0.0;
  double m21 = 0.0, m22 = 0.0;

  static constexpr Tensor2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  // Q(theta) = [[cos, sin], [-sin, cos]], the exponential of the skew tensor
  // with entry (1,2) equal to theta.
  static Tensor2 rotation(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c, s, -s, c};
  }

  double trace() const { return m11 + m22; }
  double det() const { return m11 * m22 - m12 * m21; }
  Tensor2 transpose() const { return {m11, m21, m12, m22}; }
  Tensor2 inverse() const;

  bool finite() const {
    return std::isfinite(m11) && std::isfinite(m12) && std::isfinite(m21) &&
           std::isfinite(m22);
  }
  double max_abs() const {
    return std::max(std::max(std::abs(m11), std::abs(m12)),
                    std::max(std::abs(m21), std::abs(m22)));
  }
};

// Symmetric tensor stored as its three independent components.
struct SymTensor2 {
  double s11 = 0.0, s22 = 0.0, s12 = 0.0;

  static constexpr SymTensor2 identity() { return {1.0, 1.0, 0.0}; }

  Tensor2 full() const { return {s11, s12, s12, s22}; }
  double trace() const { return s11 + s22; }
  double det() const { return s11 * s22 - s12 * s12; }
  SymTensor2 inverse() const;
  // S*S stays symmetric; computed directly.
  SymTensor2 square() const {
    return {s11 * s11 + s12 * s12, s22 * s22 + s12 * s12, s12 * (s11 + s22)};
  }

  bool finite() const {
    return std::isfinite(s11) && std::isfinite(s22) && std::isfinite(s12);
  }
  double max_abs() const {
    return std::max(std::abs(s11), std::max(std::abs(s22), std::abs(s12)));
  }
};

// Skew tensor; only the (1,2) entry is free, (2,1) = -w12.
struct SkewTensor2 {
  double w12 = 0.0;

  Tensor2 full() const { return {0.0, w12, -w12, 0.0}; }
};

inline Tensor2 operator+(const Tensor2& a, const Tensor2& b) {
  return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
}
inline Tensor2 operator-(const Tensor2& a, const Tensor2& b) {
  return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
}
inline Tensor2 operator*(double c, const Tensor2& a) {
  return {c * a.m11, c * a.m12, c * a.m21, c * a.m22};
}
inline Tensor2 operator*(const Tensor2& a, const Tensor2& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

inline SymTensor2 operator+(const SymTensor2& a, const SymTensor2& b) {
  return {a.s11 + b.s11, a.s22 + b.s22, a.s12 + b.s12};
}
inline SymTensor2 operator-(const SymTensor2& a, const SymTensor2& b) {
  return {a.s11 - b.s11, a.s22 - b.s22, a.s12 - b.s12};
}
inline SymTensor2 operator*(double c, const SymTensor2& a) {
  return {c * a.s11, c * a.s22, c * a.s12};
}
inline Tensor2 operator*(const SymTensor2& a, const SymTensor2& b) {
  return a.full() * b.full();
}

inline SymTensor2 sym(const Tensor2& a) {
  return {a.m11, a.m22, 0.5 * (a.m12 + a.m21)};
}
inline SkewTensor2 skew(const Tensor2& a) { return {0.5 * (a.m12 - a.m21)}; }

// Double contraction A:B = tr(A.B^T).
inline double ddot(const Tensor2& a, const Tensor2& b) {
  return a.m11 * b.m11 + a.m12 * b.m12 + a.m21 * b.m21 + a.m22 * b.m22;
}
inline double ddot(const SymTensor2& a, const SymTensor2& b) {
  return a.s11 * b.s11 + a.s22 * b.s22 + 2.0 * a.s12 * b.s12;
}

inline Tensor2 Tensor2::inverse() const {
  const double d = det();
  if (d == 0.0) throw std::domain_error("Tensor2::inverse: singular tensor");
  const double inv = 1.0 / d;
  return {inv * m22, -inv * m12, -inv * m21, inv * m11};
}

inline SymTensor2 SymTensor2::inverse() const {
  const double d = det();
  if (d == 0.0)
    throw std::domain_error("SymTensor2::inverse: singular tensor");
  const double inv = 1.0 / d;
  return {inv * s22, inv * s11, -inv * s12};
}

// Relative gap |l1 - l2| <= tol * max(1, |l1|) below which two eigenvalues
// are treated as one. The shear kinematics in this library keep the stretches
// distinct for alpha > 0, so the degenerate branch only serves alpha = 0.
inline constexpr double kSpectralTol = 1e-9;

// Spectral structure of a symmetric tensor: eigenvalues in descending order
// and the subordinate eigenprojections from Sylvester's formula,
//   P_i = (S - l_j I) / (l_i - l_j).
// For a (near-)multiple eigenvalue, eigenindex = 1 and p1 = I, p2 = 0.
struct Spectral2 {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  SymTensor2 p1;
  SymTensor2 p2;
  int eigenindex = 1;
};

Spectral2 spectral_decompose(const SymTensor2& s, double tol = kSpectralTol);

// Isotropic tensor function f(S) = sum_i f(lambda_i) P_i.
template <class Func>
SymTensor2 apply_isotropic(const SymTensor2& s, Func&& f,
                           double tol = kSpectralTol) {
  const Spectral2 sp = spectral_decompose(s, tol);
  if (sp.eigenindex == 1) return f(sp.lambda1) * SymTensor2::identity();
  return f(sp.lambda1) * sp.p1 + f(sp.lambda2) * sp.p2;
}

// Skew tensor c12 * (P1.D.P2 - P2.D.P1) built on the eigenprojections of a
// spectral decomposition; the generating scalar is antisymmetric (c21 = -c12).
// Zero when the decomposition is degenerate.
SkewTensor2 spin_from_projections(const Spectral2& sp, const SymTensor2& d,
                                  double c12);

// F = R.U = V.R with R a proper rotation and U, V symmetric positive
// definite. Requires det F > 0. Uses the closed form for 2x2 tensors:
// R = [[t, u], [-u, t]] / sqrt(t^2 + u^2), t = F11 + F22, u = F12 - F21.
struct PolarFactors {
  Tensor2 r;
  SymTensor2 u;
  SymTensor2 v;
};

PolarFactors polar_decompose(const Tensor2& f);

enum class RotateDirection { Forward, Backward };

// Forward: R.S.R^T (rotate a Lagrangian tensor to its Eulerian counterpart);
// backward: R^T.S.R. R must be orthogonal to within 1e-10.
SymTensor2 rotate(const SymTensor2& s, const Tensor2& r, RotateDirection dir);

// Fourth-order tensor with minor symmetries, stored as a 3x3 table in the
// ordered basis (11, 22, 12). Contraction with a symmetric tensor applies the
// engineering factor 2 on the shear slot.
struct Tensor4Sym {
  std::array<std::array<double, 3>, 3> c{};

  SymTensor2 contract(const SymTensor2& d) const {
    const std::array<double, 3> v{d.s11, d.s22, 2.0 * d.s12};
    std::array<double, 3> t{};
    for (int i = 0; i < 3; ++i)
      t[i] = c[i][0] * v[0] + c[i][1] * v[1] + c[i][2] * v[2];
    return {t[0], t[1], t[2]};
  }

  Tensor4Sym transposed() const {
    Tensor4Sym r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.c[i][j] = c[j][i];
    return r;
  }

  double max_abs_diff(const Tensor4Sym& o) const {
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m = std::max(m, std::abs(c[i][j] - o.c[i][j]));
    return m;
  }
};

// Elasticity tensor of the compressible Mooney-Rivlin model in rate form,
//   C = I sym* M + M sym* I + lambda I x I,   M = mu1 c + mu2 c^-1,
// where sym* is the symmetric tensor product (A sym* B):X = A.sym(X).B^T.
// The assembled table has major symmetry by construction.
Tensor4Sym assemble_elasticity_mr(const SymTensor2& c, double mu1, double mu2,
                                  double lambda);

}  // namespace fss
