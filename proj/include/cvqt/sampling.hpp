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

// Random state generators used by the property suites.

#include <cmath>
#include <numbers>
#include <random>

#include "cvqt/gaussian_core.hpp"
#include "cvqt/resource_states.hpp"

namespace cvqt {

/// Random local symplectic R(a) Z(s) R(b) on one mode, angles uniform on
/// [0, 2 pi), squeezing s uniform on [-0.5, 0.5].
template <class Rng>
Mat2 random_local_symplectic(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> squeeze(-0.5, 0.5);
  const double a = angle(rng);
  const double s = squeeze(rng);
  const double b = angle(rng);
  return rotation(a) * squeezer(s) * rotation(b);
}

template <class Rng>
Mat4 random_local_symplectic_pair(Rng& rng) {
  const Mat2 sa = random_local_symplectic(rng);
  const Mat2 sb = random_local_symplectic(rng);
  return direct_sum(sa, sb);
}

/// Physical-by-construction two-mode states: a TMST with r in [0, 1.5] and
/// k1, k2 in [0.5, 3], conjugated by random local symplectics.
class PhysicalStateSampler {
 public:
  explicit PhysicalStateSampler(std::uint64_t seed = 20261018) : rng_(seed) {}

  CovMat operator()() {
    std::uniform_real_distribution<double> rd(0.0, 1.5);
    std::uniform_real_distribution<double> kd(0.5, 3.0);
    const double r = rd(rng_);
    const double k1 = kd(rng_);
    const double k2 = kd(rng_);
    return tmst(TmstSpec(r, k1, k2)).congruence(random_local_symplectic_pair(rng_));
  }

  /// Product of two locally rotated/squeezed thermal states.
  CovMat separable() {
    std::uniform_real_distribution<double> kd(0.5, 3.0);
    const CovMat thermal = CovMat::from_blocks(Mat2::Identity() * kd(rng_),
                                               Mat2::Identity() * kd(rng_), Mat2::Zero());
    return thermal.congruence(random_local_symplectic_pair(rng_));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cvqt
