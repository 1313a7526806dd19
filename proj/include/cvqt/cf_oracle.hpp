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

// Independent route to the coherent-state teleportation fidelity: numerical
// integration of
//
//   F = \int d^2 lambda / pi  exp(-|lambda|^2) chi_ab(lambda, lambda*)
//
// over the resource characteristic function. Nothing here uses the M-matrix
// closed form.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cvqt/errors.hpp"
#include "cvqt/gaussian_core.hpp"

namespace cvqt {

enum class QuadratureRule { Midpoint, GaussLegendre };

struct QuadratureSpec {
  double radius = 6.0;
  int points_per_axis = 401;
  QuadratureRule rule = QuadratureRule::Midpoint;
  unsigned threads = 0;  // 0: hardware concurrency

  void check() const {
    if (!std::isfinite(radius) || radius <= 0.0) {
      throw InvalidInput("quadrature radius must be a positive finite number");
    }
    if (points_per_axis < 51) {
      throw InvalidInput("points_per_axis must be >= 51");
    }
    if (rule == QuadratureRule::Midpoint && points_per_axis % 2 == 0) {
      throw InvalidInput("points_per_axis must be odd for the midpoint rule");
    }
  }
};

inline constexpr double kQuadratureWarnThreshold = 1e-3;

struct QuadratureWarning {
  std::string message;
};

struct QuadratureResult {
  double value = 0.0;
  double est_error = 0.0;
  double imag_part = 0.0;  // accumulated imaginary part; zero up to rounding
  std::optional<QuadratureWarning> warning;
};

namespace detail {

/// Real quadrature displacement vector (x_a, p_a, x_b, p_b) generated by
/// D(lambda) (x) D(lambda*) with a = (x + i p) / sqrt(2):
/// lambda a^dag - lambda* a = i sqrt(2) (Im(lambda) x - Re(lambda) p).
inline Eigen::Vector4d cf_direction(std::complex<double> lam) {
  const double s = std::numbers::sqrt2;
  return {s * lam.imag(), -s * lam.real(), -s * lam.imag(), -s * lam.real()};
}

inline std::complex<double> gaussian_cf(const Mat4& v, std::complex<double> lam) {
  const Eigen::Vector4d u = cf_direction(lam);
  return {std::exp(-0.5 * u.dot(v * u)), 0.0};
}

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Rule1d {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline Rule1d midpoint_rule(double radius, int n) {
  Rule1d r;
  const double h = 2.0 * radius / n;
  for (int i = 0; i < n; ++i) {
    r.nodes.push_back(-radius + (i + 0.5) * h);
    r.weights.push_back(h);
  }
  return r;
}

/// Gauss-Legendre nodes by Newton iteration on P_n, mapped to [-radius, radius].
inline Rule1d gauss_legendre_rule(double radius, int n) {
  Rule1d r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x * radius;
    r.nodes[n - 1 - i] = x * radius;
    r.weights[i] = r.weights[n - 1 - i] = w * radius;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

inline Rule1d make_rule(QuadratureRule rule, double radius, int n) {
  return rule == QuadratureRule::Midpoint ? midpoint_rule(radius, n)
                                          : gauss_legendre_rule(radius, n);
}

/// Tensor-product integral of exp(-|lambda|^2) chi(lambda, lambda*) / pi.
/// Rows are summed independently and combined in index order, so the result
/// does not depend on the number of threads.
inline std::complex<double> integrate_fidelity(const Mat4& v, const Rule1d& rule,
                                               unsigned threads) {
  const std::size_t n = rule.nodes.size();
  std::vector<double> row_re(n);
  std::vector<double> row_im(n);
  auto do_rows = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      CompensatedSum re;
      CompensatedSum im;
      const double lr = rule.nodes[i];
      for (std::size_t j = 0; j < n; ++j) {
        const double li = rule.nodes[j];
        const std::complex<double> lam(lr, li);
        const std::complex<double> f =
            std::exp(-std::norm(lam)) * gaussian_cf(v, lam) * (rule.weights[i] * rule.weights[j]);
        re.add(f.real());
        im.add(f.imag());
      }
      row_re[i] = re.value();
      row_im[i] = im.value();
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    do_rows(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t b = 0; b < n; b += chunk) {
      pool.emplace_back(do_rows, b, std::min(n, b + chunk));
    }
  }
  CompensatedSum re;
  CompensatedSum im;
  for (std::size_t i = 0; i < n; ++i) {
    re.add(row_re[i]);
    im.add(row_im[i]);
  }
  return {re.value() / std::numbers::pi, im.value() / std::numbers::pi};
}

inline int coarse_points(int n) { return (n / 2) | 1; }

}  // namespace detail

/// Characteristic function chi(lambda_a, lambda_b) = Tr[rho D(lambda_a) D(lambda_b)]
/// of the zero-mean Gaussian state V, evaluated at (lambda, lambda*).
inline std::complex<double> cf_value(const CovMat& v, std::complex<double> lam) {
  require_physical(v, "cf_value");
  return detail::gaussian_cf(v.matrix(), lam);
}

/// Integrand of the coherent-state fidelity integral at lambda (without the
/// 1/pi measure factor).
inline double fidelity_integrand(const CovMat& v, std::complex<double> lam) {
  return std::exp(-std::norm(lam)) * cf_value(v, lam).real();
}

/// Coherent-state teleportation fidelity by quadrature.
///
/// est_error is the difference against a grid of about half the resolution
/// plus the truncation bound exp(-radius^2), which holds because |chi| <= 1
/// for every physical state.
inline QuadratureResult fidelity_by_quadrature(const CovMat& v, const QuadratureSpec& q = {}) {
  require_physical(v, "fidelity_by_quadrature");
  q.check();
  const std::complex<double> fine =
      detail::integrate_fidelity(v.matrix(), detail::make_rule(q.rule, q.radius, q.points_per_axis),
                                 q.threads);
  const std::complex<double> coarse = detail::integrate_fidelity(
      v.matrix(),
      detail::make_rule(q.rule, q.radius, detail::coarse_points(q.points_per_axis)), q.threads);
  if (std::abs(fine.imag()) >= 1e-10) {
    throw NumericalDomainError("characteristic-function integral has a non-zero imaginary part");
  }
  QuadratureResult out;
  out.value = fine.real();
  out.imag_part = fine.imag();
  out.est_error = std::abs(fine.real() - coarse.real()) + std::exp(-q.radius * q.radius);
  if (out.est_error > kQuadratureWarnThreshold) {
    out.warning = QuadratureWarning{"quadrature did not converge: est_error " +
                                    std::to_string(out.est_error) + " exceeds 1e-3"};
  }
  return out;
}

}  // namespace cvqt
