// Copyright 2026 The cvqt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Two-mode Gaussian covariance matrices in the (x_a, p_a, x_b, p_b) ordering
// with vacuum variance 1/2: validity, partial transposition, entanglement
// verdicts and reduction to the standard form
//
//        | eta   0    c1    0  |
//   V =  |  0   eta   0   -c2  |
//        | c1    0   zeta   0  |
//        |  0  -c2    0   zeta |

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "cvqt/errors.hpp"

namespace cvqt {

using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;

inline constexpr double kVacuumVariance = 0.5;
inline constexpr double kPhysicalityTol = 1e-10;
inline constexpr double kSymmetryTol = 1e-12;

/// Counter-clockwise phase-space rotation.
inline Mat2 rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Mat2 r;
  r << c, -s, s, c;
  return r;
}

/// Single-mode squeezer diag(e^-s, e^s); s > 0 squeezes x.
inline Mat2 squeezer(double s) {
  Mat2 z = Mat2::Zero();
  z(0, 0) = std::exp(-s);
  z(1, 1) = std::exp(s);
  return z;
}

inline Mat4 direct_sum(const Mat2& a, const Mat2& b) {
  Mat4 m = Mat4::Zero();
  m.topLeftCorner<2, 2>() = a;
  m.bottomRightCorner<2, 2>() = b;
  return m;
}

/// Two-mode symplectic form J (+) J with J = [[0, 1], [-1, 0]].
inline Mat4 symplectic_form() {
  Mat2 j;
  j << 0.0, 1.0, -1.0, 0.0;
  return direct_sum(j, j);
}

inline Mat2 pauli_z() {
  Mat2 z = Mat2::Identity();
  z(1, 1) = -1.0;
  return z;
}

/// Real symmetric 4x4 covariance matrix of a two-mode Gaussian state.
///
/// Construction only checks that every entry is finite; symmetry and the
/// uncertainty relation are reported by validate() so unphysical matrices can
/// still be represented and classified.
class CovMat {
 public:
  CovMat() : m_(Mat4::Identity() * kVacuumVariance) {}

  explicit CovMat(const Mat4& m) : m_(m) {
    if (!m_.allFinite()) {
      throw InvalidInput("covariance matrix has non-finite entries");
    }
  }

  static CovMat vacuum() { return CovMat(); }

  static CovMat from_blocks(const Mat2& a, const Mat2& b, const Mat2& c) {
    Mat4 m;
    m.topLeftCorner<2, 2>() = a;
    m.topRightCorner<2, 2>() = c;
    m.bottomLeftCorner<2, 2>() = c.transpose();
    m.bottomRightCorner<2, 2>() = b;
    return CovMat(m);
  }

  const Mat4& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  Mat2 a() const { return m_.topLeftCorner<2, 2>(); }
  Mat2 b() const { return m_.bottomRightCorner<2, 2>(); }
  Mat2 c() const { return m_.topRightCorner<2, 2>(); }

  bool is_symmetric(double tol = kSymmetryTol) const {
    return (m_ - m_.transpose()).cwiseAbs().maxCoeff() <= tol;
  }

  /// S V S^T.
  CovMat congruence(const Mat4& s) const { return CovMat(s * m_ * s.transpose()); }

  friend bool operator==(const CovMat& x, const CovMat& y) { return x.m_ == y.m_; }

 private:
  Mat4 m_;
};

/// Local symplectic invariants of V = [[A, C], [C^T, B]].
struct LocalInvariants {
  double det_a;
  double det_b;
  double det_c;
  double det_v;
};

inline LocalInvariants local_invariants(const CovMat& v) {
  return {v.a().determinant(), v.b().determinant(), v.c().determinant(),
          v.matrix().determinant()};
}

namespace detail {

/// Moduli of the roots of t^2 - (det A + det B + 2 det C) t + det V. Loses
/// about half the digits when the spectrum is degenerate; only used for
/// matrices that are not positive definite.
inline std::pair<double, double> symplectic_spectrum_from_invariants(const CovMat& v) {
  const LocalInvariants inv = local_invariants(v);
  const double seralian = inv.det_a + inv.det_b + 2.0 * inv.det_c;
  const double disc = seralian * seralian - 4.0 * inv.det_v;
  double lo2;
  double hi2;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    hi2 = 0.5 * (seralian + (seralian >= 0.0 ? root : -root));
    lo2 = hi2 != 0.0 ? inv.det_v / hi2 : 0.0;
  } else {
    // Complex conjugate pair; both moduli are |det V|^(1/4).
    hi2 = lo2 = std::sqrt(std::abs(inv.det_v));
  }
  double lo = std::sqrt(std::abs(lo2));
  double hi = std::sqrt(std::abs(hi2));
  if (lo > hi) std::swap(lo, hi);
  return {lo, hi};
}

}  // namespace detail

/// Symplectic eigenvalues (nu_minus <= nu_plus), the moduli of the
/// eigenvalues of i Omega V.
///
/// For V = L L^T positive definite these are the singular values of the
/// antisymmetric matrix L^T Omega L, each appearing twice.
inline std::pair<double, double> symplectic_spectrum(const CovMat& v) {
  const Mat4 sym = 0.5 * (v.matrix() + v.matrix().transpose());
  const Eigen::LLT<Mat4> llt(sym);
  if (llt.info() != Eigen::Success) return detail::symplectic_spectrum_from_invariants(v);
  const Mat4 l = llt.matrixL();
  const Mat4 k = l.transpose() * symplectic_form() * l;
  const Eigen::Vector4d s = Eigen::JacobiSVD<Mat4>(k).singularValues();  // descending
  return {0.5 * (s(2) + s(3)), 0.5 * (s(0) + s(1))};
}

struct ValidityReport {
  bool symmetric;
  bool positive_definite;
  double nu_minus;
  double nu_plus;
  bool physical;
};

/// Checks V + (i/2) Omega >= 0: symmetric, positive definite and both
/// symplectic eigenvalues at least 1/2 (up to kPhysicalityTol).
inline ValidityReport validate(const CovMat& v) {
  ValidityReport rep{};
  rep.symmetric = v.is_symmetric();
  const Mat4 sym = 0.5 * (v.matrix() + v.matrix().transpose());
  rep.positive_definite = Eigen::LLT<Mat4>(sym).info() == Eigen::Success;
  std::tie(rep.nu_minus, rep.nu_plus) = symplectic_spectrum(v);
  rep.physical = rep.symmetric && rep.positive_definite &&
                 rep.nu_minus >= kVacuumVariance - kPhysicalityTol;
  return rep;
}

inline bool is_physical(const CovMat& v) { return validate(v).physical; }

inline void require_physical(const CovMat& v, const char* what) {
  if (!is_physical(v)) {
    throw PreconditionFailed(std::string(what) + ": covariance matrix is not physical");
  }
}

/// p_b -> -p_b.
inline CovMat partial_transpose(const CovMat& v) {
  const Mat4 lambda = Eigen::Vector4d(1.0, 1.0, 1.0, -1.0).asDiagonal();
  return CovMat(lambda * v.matrix() * lambda);
}

struct EntanglementVerdict {
  double simon_lhs;  // 4 Delta - 16 det V, Delta = det A + det B - 2 det C
  bool simon_entangled;
  double ppt_nu_minus;
  bool ppt_entangled;
};

inline EntanglementVerdict simon_inseparable(const CovMat& v) {
  require_physical(v, "simon_inseparable");
  const LocalInvariants inv = local_invariants(v);
  EntanglementVerdict out{};
  const double delta = inv.det_a + inv.det_b - 2.0 * inv.det_c;
  out.simon_lhs = 4.0 * delta - 16.0 * inv.det_v;
  out.simon_entangled = out.simon_lhs > 1.0;
  out.ppt_nu_minus = symplectic_spectrum(partial_transpose(v)).first;
  out.ppt_entangled = out.ppt_nu_minus < kVacuumVariance - kPhysicalityTol;
  return out;
}

/// Standard-form parameters. The correlation block is diag(c1, -c2) with
/// c1 >= |c2|; c2 >= 0 whenever det C <= 0.
struct CanonicalParams {
  double eta = kVacuumVariance;
  double zeta = kVacuumVariance;
  double c1 = 0.0;
  double c2 = 0.0;

  friend bool operator==(const CanonicalParams&, const CanonicalParams&) = default;
};

inline CovMat from_canonical(const CanonicalParams& p) {
  Mat4 m;
  // clang-format off
  m << p.eta, 0.0,    p.c1,   0.0,
       0.0,   p.eta,  0.0,   -p.c2,
       p.c1,  0.0,    p.zeta, 0.0,
       0.0,  -p.c2,   0.0,    p.zeta;
  // clang-format on
  return CovMat(m);
}

struct CanonicalForm {
  CanonicalParams params;
  Mat4 local_symplectic;  // S_a (+) S_b with S V S^T = from_canonical(params)
};

namespace detail {

inline double wrap_angle(double a) {
  constexpr double pi = std::numbers::pi;
  while (a > pi) a -= 2.0 * pi;
  while (a <= -pi) a += 2.0 * pi;
  return a;
}

/// Local symplectic bringing a 2x2 positive matrix to sqrt(det) * I.
inline Mat2 williamson_2x2(const Mat2& a) {
  const double off = 0.5 * (a(0, 1) + a(1, 0));
  const double alpha = 0.5 * std::atan2(2.0 * off, a(0, 0) - a(1, 1));
  const Mat2 r = rotation(alpha);
  const Mat2 d = r.transpose() * a * r;
  const double ratio = d(1, 1) / d(0, 0);
  Mat2 z = Mat2::Zero();
  z(0, 0) = std::pow(ratio, 0.25);
  z(1, 1) = 1.0 / z(0, 0);
  return z * r.transpose();
}

/// m = R(phi) diag(s1, s2) R(theta) with s1 >= |s2|, sign(s2) = sign(det m).
/// Among the equivalent angle pairs, the one with the smallest total rotation.
struct RotationSvd {
  double phi;
  double theta;
  double s1;
  double s2;
};

inline RotationSvd rotation_svd(const Mat2& m) {
  const double e = 0.5 * (m(0, 0) + m(1, 1));
  const double f = 0.5 * (m(0, 0) - m(1, 1));
  const double g = 0.5 * (m(1, 0) + m(0, 1));
  const double h = 0.5 * (m(1, 0) - m(0, 1));
  const double q = std::hypot(e, h);
  const double r = std::hypot(f, g);
  const double a1 = std::atan2(g, f);
  const double a2 = std::atan2(h, e);
  RotationSvd out{wrap_angle(0.5 * (a2 + a1)), wrap_angle(0.5 * (a2 - a1)), q + r, q - r};
  constexpr double pi = std::numbers::pi;
  double best = std::abs(out.phi) + std::abs(out.theta);
  const std::array<std::pair<double, double>, 2> shifts{{{pi, pi}, {pi, -pi}}};
  for (const auto& [dp, dt] : shifts) {
    for (const double sgn : {1.0, -1.0}) {
      const double phi = wrap_angle(out.phi + sgn * dp);
      const double theta = wrap_angle(out.theta + sgn * dt);
      const double cost = std::abs(phi) + std::abs(theta);
      if (cost < best - 1e-15) {
        best = cost;
        out.phi = phi;
        out.theta = theta;
      }
    }
  }
  return out;
}

}  // namespace detail

/// Reduces V to standard form by local symplectics: local Williamson on each
/// mode, then local rotations diagonalising the correlation block.
inline CanonicalForm to_canonical(const CovMat& v) {
  require_physical(v, "to_canonical");
  const Mat2 wa = detail::williamson_2x2(v.a());
  const Mat2 wb = detail::williamson_2x2(v.b());
  const Mat2 c = wa * v.c() * wb.transpose();
  const detail::RotationSvd svd = detail::rotation_svd(c);
  const Mat2 sa = rotation(svd.phi).transpose() * wa;
  const Mat2 sb = rotation(svd.theta) * wb;

  CanonicalForm out;
  out.local_symplectic = direct_sum(sa, sb);
  const CovMat reduced = v.congruence(out.local_symplectic);
  out.params.eta = 0.5 * (reduced(0, 0) + reduced(1, 1));
  out.params.zeta = 0.5 * (reduced(2, 2) + reduced(3, 3));
  out.params.c1 = reduced(0, 2);
  out.params.c2 = -reduced(1, 3);
  return out;
}

}  // namespace cvqt
