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

// EPR correlation and coherent-state teleportation fidelity (unit-gain
// Braunstein-Kimble protocol) of two-mode Gaussian resources.

#include <algorithm>
#include <cmath>
#include <string_view>
#include <utility>

#include "cvqt/errors.hpp"
#include "cvqt/gaussian_core.hpp"

namespace cvqt {

inline constexpr double kEprBound = 2.0;
inline constexpr double kDetMBound = 4.0;

/// <D^2(x_a - x_b)> + <D^2(p_a + p_b)>.
inline double epr_uncertainty(const CovMat& v) {
  require_physical(v, "epr_uncertainty");
  return v(0, 0) + v(2, 2) - 2.0 * v(0, 2) + v(1, 1) + v(3, 3) + 2.0 * v(1, 3);
}

/// max(0, 2 - Delta_EPR).
inline double epr_degree(const CovMat& v) {
  return std::max(0.0, kEprBound - epr_uncertainty(v));
}

/// M = A - (C sigma_z + sigma_z C^T) + sigma_z B sigma_z + I, i.e. I plus the
/// covariance matrix of (x_a - x_b, p_a + p_b). For a symmetric correlation
/// block (in particular the standard form) the bracket is {sigma_z, C}.
inline Mat2 m_matrix(const CovMat& v) {
  require_physical(v, "m_matrix");
  const Mat2 z = pauli_z();
  const Mat2 c = v.c();
  return v.a() - (c * z + z * c.transpose()) + z * v.b() * z + Mat2::Identity();
}

/// F = 1 / sqrt(det M), independent of the coherent amplitude teleported.
inline double fidelity(const CovMat& v) {
  const double det = m_matrix(v).determinant();
  if (!(det > 0.0)) {
    throw NumericalDomainError("det M is not positive for a physical state");
  }
  return 1.0 / std::sqrt(det);
}

/// det M expanded in standard-form parameters:
/// 1 + 4 c1 c2 + (s + 2)(s - (c1 + c2)) - s (c1 + c2), s = eta + zeta.
inline double detm_canonical(const CanonicalParams& p) {
  const double s = p.eta + p.zeta;
  const double c = p.c1 + p.c2;
  return 1.0 + 4.0 * p.c1 * p.c2 + (s + 2.0) * (s - c) - s * c;
}

/// det M = 4 - eps (4 - eps) - (c1 - c2)^2 with eps = 1 - (s - (c1 + c2)).
inline double detm_epsilon_form(const CanonicalParams& p) {
  const double eps = 1.0 - ((p.eta + p.zeta) - (p.c1 + p.c2));
  const double d = p.c1 - p.c2;
  return 4.0 - eps * (4.0 - eps) - d * d;
}

/// The teleportation condition written against the EPR combination:
/// s - (c1 + c2) < sqrt(4 + (c1 - c2)^2) - 1.
struct QtEprBound {
  double lhs;
  double rhs;
  bool qt;
};

inline QtEprBound qt_epr_bound(const CanonicalParams& p) {
  const double d = p.c1 - p.c2;
  QtEprBound out{};
  out.lhs = (p.eta + p.zeta) - (p.c1 + p.c2);
  out.rhs = std::sqrt(4.0 + d * d) - 1.0;
  out.qt = out.lhs < out.rhs;
  return out;
}

struct CriteriaReport {
  double delta_epr = 0.0;
  double f_epr = 0.0;
  double det_m = 0.0;
  double fidelity = 0.0;
  bool entangled = false;
  bool epr_correlated = false;
  bool qt = false;
};

enum class Classification { Unphysical, Separable, EntangledNoQT, QTNoEPR, EPRCorrelated };

constexpr std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Unphysical:
      return "Unphysical";
    case Classification::Separable:
      return "Separable";
    case Classification::EntangledNoQT:
      return "EntangledNoQT";
    case Classification::QTNoEPR:
      return "QTNoEPR";
    case Classification::EPRCorrelated:
      return "EPRCorrelated";
  }
  return "Unphysical";
}

/// Label derived from a report; the order encodes EPR => QT => entangled.
inline Classification classify_report(const CriteriaReport& r, bool physical) {
  if (!physical) return Classification::Unphysical;
  if (!r.entangled) return Classification::Separable;
  if (r.epr_correlated) return Classification::EPRCorrelated;
  if (r.qt) return Classification::QTNoEPR;
  return Classification::EntangledNoQT;
}

/// Evaluates every criterion on V. Unphysical inputs come back with an
/// all-default report and the Unphysical label.
inline std::pair<CriteriaReport, Classification> classify(const CovMat& v) {
  if (!is_physical(v)) return {CriteriaReport{}, Classification::Unphysical};
  CriteriaReport r;
  r.delta_epr = epr_uncertainty(v);
  r.f_epr = std::max(0.0, kEprBound - r.delta_epr);
  r.det_m = m_matrix(v).determinant();
  if (!(r.det_m > 0.0)) {
    throw NumericalDomainError("det M is not positive for a physical state");
  }
  r.fidelity = 1.0 / std::sqrt(r.det_m);
  r.entangled = simon_inseparable(v).ppt_entangled;
  r.epr_correlated = r.delta_epr < kEprBound;
  r.qt = r.det_m < kDetMBound;
  return {r, classify_report(r, true)};
}

}  // namespace cvqt
