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

// Resource-state families: two-mode squeezed thermal states and the output of
// a beam splitter fed with a single-mode squeezed thermal state and vacuum.

#include <cmath>
#include <string>

#include "cvqt/errors.hpp"
#include "cvqt/gaussian_core.hpp"

namespace cvqt {

namespace detail {

inline void require_thermal(double k, const char* name) {
  if (!std::isfinite(k) || k < kVacuumVariance) {
    throw InvalidInput(std::string(name) + " must be >= 1/2 (thermal occupation + 1/2)");
  }
}

inline void require_squeeze(double r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw InvalidInput("r must be a finite value >= 0");
  }
}

}  // namespace detail

/// Two-mode squeezed thermal state S_ab(r) (rho_th(n1) x rho_th(n2)) S_ab(r)^dag,
/// with k_i = n_i + 1/2.
class TmstSpec {
 public:
  TmstSpec(double r, double k1, double k2) : r_(r), k1_(k1), k2_(k2) {
    detail::require_squeeze(r);
    detail::require_thermal(k1, "k1");
    detail::require_thermal(k2, "k2");
  }

  double r() const { return r_; }
  double k1() const { return k1_; }
  double k2() const { return k2_; }

 private:
  double r_;
  double k1_;
  double k2_;
};

/// Beam splitter of transmittance T acting on (squeezed thermal) x (vacuum).
class BsSpec {
 public:
  BsSpec(double r, double k, double transmittance) : r_(r), k_(k), t_(transmittance) {
    detail::require_squeeze(r);
    detail::require_thermal(k, "k");
    if (!std::isfinite(transmittance) || transmittance <= 0.0 || transmittance >= 1.0) {
      throw InvalidInput("T must lie in the open interval (0, 1)");
    }
  }

  double r() const { return r_; }
  double k() const { return k_; }
  double transmittance() const { return t_; }

  /// The input is quadrature squeezed: k e^{-2r} < 1/2.
  bool nonclassical_input() const { return r_ > 0.5 * std::log(2.0 * k_); }

 private:
  double r_;
  double k_;
  double t_;
};

/// eta = mu^2 k1 + nu^2 k2, zeta = nu^2 k1 + mu^2 k2, C = mu nu (k1 + k2) sigma_z
/// with mu = cosh r, nu = sinh r.
inline CanonicalParams tmst_params(const TmstSpec& spec) {
  const double mu = std::cosh(spec.r());
  const double nu = std::sinh(spec.r());
  const double c = mu * nu * (spec.k1() + spec.k2());
  return {mu * mu * spec.k1() + nu * nu * spec.k2(), nu * nu * spec.k1() + mu * mu * spec.k2(), c,
          c};
}

inline CovMat tmst(const TmstSpec& spec) { return from_canonical(tmst_params(spec)); }

/// Two-mode squeezed vacuum, the k1 = k2 = 1/2 member of the TMST family.
inline CovMat tmsv(double r) { return tmst(TmstSpec(r, kVacuumVariance, kVacuumVariance)); }

/// Entanglement onset of the TMST family:
/// 1/2 ln[(1 + 4 k1 k2 + sqrt((4k1^2 - 1)(4k2^2 - 1))) / (2 (k1 + k2))].
inline double r_ent_threshold(double k1, double k2) {
  detail::require_thermal(k1, "k1");
  detail::require_thermal(k2, "k2");
  const double num = 1.0 + 4.0 * k1 * k2 + std::sqrt((4.0 * k1 * k1 - 1.0) * (4.0 * k2 * k2 - 1.0));
  return 0.5 * std::log(num / (2.0 * (k1 + k2)));
}

/// EPR-correlation (equivalently, teleportation) onset of the TMST family:
/// 1/2 ln(k1 + k2).
inline double r_qt_threshold(double k1, double k2) {
  detail::require_thermal(k1, "k1");
  detail::require_thermal(k2, "k2");
  return 0.5 * std::log(k1 + k2);
}

/// Squeezed thermal single-mode covariance diag(k e^{-2r}, k e^{2r}).
inline Mat2 single_mode_sth(double r, double k) {
  detail::require_squeeze(r);
  detail::require_thermal(k, "k");
  Mat2 s = Mat2::Zero();
  s(0, 0) = k * std::exp(-2.0 * r);
  s(1, 1) = k * std::exp(2.0 * r);
  return s;
}

/// Minimum squeezing making a thermal state with parameter k quadrature
/// squeezed: 1/2 ln(2k).
inline double nonclassicality_threshold(double k) {
  detail::require_thermal(k, "k");
  return 0.5 * std::log(2.0 * k);
}

/// A = T s + (1-T) I/2, B = (1-T) s + T I/2, C = sqrt(T(1-T)) (I/2 - s).
inline CovMat bs_resource(const BsSpec& spec) {
  const Mat2 s = single_mode_sth(spec.r(), spec.k());
  const double t = spec.transmittance();
  const Mat2 half = Mat2::Identity() * kVacuumVariance;
  const Mat2 a = t * s + (1.0 - t) * half;
  const Mat2 b = (1.0 - t) * s + t * half;
  const Mat2 c = std::sqrt(t * (1.0 - t)) * (half - s);
  return CovMat::from_blocks(a, b, c);
}

/// Beam-splitter symplectic [[sqrt(T) I, sqrt(1-T) I], [-sqrt(1-T) I, sqrt(T) I]].
inline Mat4 beam_splitter(double transmittance) {
  const double ct = std::sqrt(transmittance);
  const double st = std::sqrt(1.0 - transmittance);
  Mat4 m = Mat4::Zero();
  m.topLeftCorner<2, 2>() = ct * Mat2::Identity();
  m.topRightCorner<2, 2>() = st * Mat2::Identity();
  m.bottomLeftCorner<2, 2>() = -st * Mat2::Identity();
  m.bottomRightCorner<2, 2>() = ct * Mat2::Identity();
  return m;
}

}  // namespace cvqt
