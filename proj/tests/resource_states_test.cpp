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

#include "cvqt/resource_states.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cvqt/gaussian_core.hpp"
#include "cvqt/teleport_criteria.hpp"
#include "oracles.hpp"

using namespace cvqt;

TEST(Tmst, NoSqueezingGivesThermalProduct) {
  const CovMat v = tmst(TmstSpec(0.0, 1.0, 2.0));
  Mat4 expected = Mat4::Zero();
  expected.diagonal() << 1.0, 1.0, 2.0, 2.0;
  EXPECT_EQ(v.matrix(), expected);
  EXPECT_FALSE(simon_inseparable(v).ppt_entangled);
}

TEST(Tmst, SqueezedVacuumEntries) {
  const CovMat v = tmst(TmstSpec(0.5, 0.5, 0.5));
  // mu^2 + nu^2 = cosh 2r, 2 mu nu = sinh 2r.
  EXPECT_NEAR(v(0, 0), std::cosh(1.0) / 2.0, 1e-15);
  EXPECT_NEAR(v(0, 0), 0.771540317407622, 1e-12);
  EXPECT_NEAR(v(0, 2), std::sinh(1.0) / 2.0, 1e-15);
  EXPECT_NEAR(v(0, 2), 0.587600596821901, 1e-12);
  EXPECT_NEAR(v(1, 3), -v(0, 2), 0.0);
  EXPECT_EQ(v, tmsv(0.5));
}

TEST(Tmst, EprCombinationDecaysExponentially) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> rd(0.0, 2.0);
  std::uniform_real_distribution<double> kd(0.5, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double r = rd(rng);
    const double k1 = kd(rng);
    const double k2 = kd(rng);
    const CanonicalParams p = tmst_params(TmstSpec(r, k1, k2));
    // (mu - nu)^2 = e^{-2r}
    ASSERT_NEAR((p.eta + p.zeta) - 2.0 * p.c1, std::exp(-2.0 * r) * (k1 + k2),
                1e-10 * std::cosh(2.0 * r) * (k1 + k2));
    ASSERT_EQ(p.c1, p.c2);
  }
}

TEST(Tmst, SymplecticSpectrumIsThermalParameters) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> rd(0.0, 1.5);
  std::uniform_real_distribution<double> kd(0.5, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double k1 = kd(rng);
    const double k2 = kd(rng);
    const ValidityReport rep = validate(tmst(TmstSpec(rd(rng), k1, k2)));
    ASSERT_TRUE(rep.physical);
    ASSERT_NEAR(rep.nu_minus, std::min(k1, k2), 1e-10);
    ASSERT_NEAR(rep.nu_plus, std::max(k1, k2), 1e-10);
  }
}

TEST(Tmst, RejectsOutOfRangeParameters) {
  EXPECT_THROW(TmstSpec(-0.1, 1.0, 1.0), InvalidInput);
  EXPECT_THROW(TmstSpec(0.1, 0.49, 1.0), InvalidInput);
  EXPECT_THROW(TmstSpec(0.1, 1.0, 0.3), InvalidInput);
  EXPECT_THROW(TmstSpec(std::nan(""), 1.0, 1.0), InvalidInput);
}

TEST(Thresholds, EntanglementOnsetValues) {
  EXPECT_DOUBLE_EQ(r_ent_threshold(0.5, 0.5), 0.0);
  EXPECT_NEAR(r_ent_threshold(1.0, 1.0), 0.5 * std::log(2.0), 1e-15);
  EXPECT_NEAR(r_ent_threshold(1.0, 1.0), 0.346573590280, 1e-12);
  // 1/2 ln((5.5 + sqrt 10) / 4.5)
  EXPECT_NEAR(r_ent_threshold(1.5, 0.75), 0.327450150237, 1e-12);
}

TEST(Thresholds, TeleportationOnsetValues) {
  EXPECT_DOUBLE_EQ(r_qt_threshold(0.5, 0.5), 0.0);
  EXPECT_NEAR(r_qt_threshold(1.5, 0.75), 0.405465108108, 1e-12);
  EXPECT_NEAR(r_qt_threshold(1.0, 1.0), r_ent_threshold(1.0, 1.0), 1e-15);
}

TEST(Thresholds, EntanglementOnsetMatchesPptBisection) {
  for (const auto& [k1, k2] : {std::pair{1.0, 1.0}, std::pair{1.5, 0.75}, std::pair{2.7, 0.6}}) {
    const double onset = oracle::bisect_onset(
        [&](double r) {
          return oracle::ppt_nu_minus_generic(tmst(TmstSpec(r, k1, k2)).matrix()) < 0.5;
        },
        0.0, 3.0);
    EXPECT_NEAR(r_ent_threshold(k1, k2), onset, 1e-6) << k1 << "," << k2;
    const double r = r_ent_threshold(k1, k2);
    EXPECT_TRUE(simon_inseparable(tmst(TmstSpec(r + 1e-4, k1, k2))).ppt_entangled);
    EXPECT_FALSE(simon_inseparable(tmst(TmstSpec(std::max(0.0, r - 1e-4), k1, k2))).ppt_entangled);
  }
}

TEST(Thresholds, TeleportationOnsetBracketsBothCriteria) {
  for (const auto& [k1, k2] : {std::pair{1.0, 1.0}, std::pair{1.5, 0.75}, std::pair{2.7, 0.6}}) {
    const double r = r_qt_threshold(k1, k2);
    const CovMat above = tmst(TmstSpec(r + 1e-4, k1, k2));
    const CovMat below = tmst(TmstSpec(std::max(0.0, r - 1e-4), k1, k2));
    EXPECT_LT(epr_uncertainty(above), 2.0);
    EXPECT_LT(oracle::detm_entrywise(above.matrix()), 4.0);
    EXPECT_GE(epr_uncertainty(below), 2.0);
    EXPECT_GE(oracle::detm_entrywise(below.matrix()), 4.0);
  }
}

TEST(Thresholds, TeleportationIsStricterOffDiagonal) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> kd(0.5, 3.0);
  for (int i = 0; i < 10000; ++i) {
    const double k1 = kd(rng);
    const double k2 = kd(rng);
    ASSERT_GE(r_qt_threshold(k1, k2), r_ent_threshold(k1, k2) - 1e-15);
    ASSERT_NEAR(r_qt_threshold(k1, k1), r_ent_threshold(k1, k1), 1e-12);
  }
}

TEST(Thresholds, RejectSubVacuumArguments) {
  EXPECT_THROW(r_ent_threshold(0.4, 1.0), InvalidInput);
  EXPECT_THROW(r_qt_threshold(1.0, 0.4), InvalidInput);
  EXPECT_THROW(nonclassicality_threshold(0.2), InvalidInput);
}

TEST(SingleModeSth, Values) {
  EXPECT_EQ(single_mode_sth(0.0, 0.5), Mat2::Identity() * 0.5);
  const Mat2 s = single_mode_sth(0.5, 0.5);
  EXPECT_NEAR(s(0, 0), 0.183939720586, 1e-12);
  EXPECT_NEAR(s(1, 1), 1.359140914230, 1e-12);
  EXPECT_EQ(s(0, 1), 0.0);
  for (double r : {0.0, 0.3, 1.1, 2.0}) {
    EXPECT_NEAR(single_mode_sth(r, 1.7).determinant(), 1.7 * 1.7, 1e-12);
  }
  EXPECT_THROW(single_mode_sth(-0.1, 0.5), InvalidInput);
  EXPECT_THROW(single_mode_sth(0.1, 0.3), InvalidInput);
}

TEST(SingleModeSth, SqueezedExactlyAboveNonclassicalityThreshold) {
  for (double k : {0.5, 0.8, 1.0, 2.5}) {
    const double r0 = nonclassicality_threshold(k);
    EXPECT_LT(single_mode_sth(r0 + 1e-6, k)(0, 0), 0.5);
    EXPECT_GE(single_mode_sth(std::max(0.0, r0 - 1e-6), k)(0, 0), 0.5);
  }
}

TEST(Nonclassicality, Values) {
  EXPECT_DOUBLE_EQ(nonclassicality_threshold(0.5), 0.0);
  EXPECT_NEAR(nonclassicality_threshold(1.0), 0.346573590280, 1e-12);
  for (double k = 0.5; k <= 5.0; k += 0.05) {
    EXPECT_NEAR(nonclassicality_threshold(k), r_ent_threshold(k, k), 1e-12) << k;
  }
}

TEST(BeamSplitter, VacuumInputsStaySeparable) {
  const CovMat v = bs_resource(BsSpec(0.0, 0.5, 0.5));
  EXPECT_LT((v.matrix() - CovMat::vacuum().matrix()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_FALSE(simon_inseparable(v).ppt_entangled);
}

TEST(BeamSplitter, BlocksMatchExplicitSymplecticProduct) {
  const CovMat v = bs_resource(BsSpec(0.5, 0.5, 0.5));
  EXPECT_NEAR(v(0, 0), 0.341969860293, 1e-12);
  EXPECT_NEAR(v(1, 1), 0.929570457115, 1e-12);
  EXPECT_NEAR(v(0, 2), 0.158030139707, 1e-12);
  EXPECT_NEAR(v(1, 3), -0.429570457115, 1e-12);
  EXPECT_TRUE(v.a() == v.b());
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> rd(0.0, 1.5);
  std::uniform_real_distribution<double> kd(0.5, 3.0);
  std::uniform_real_distribution<double> td(0.01, 0.99);
  for (int i = 0; i < 1000; ++i) {
    const double r = rd(rng);
    const double k = kd(rng);
    const double t = td(rng);
    const Mat4 ref = oracle::bs_by_product(r, k, t);
    ASSERT_LT((bs_resource(BsSpec(r, k, t)).matrix() - ref).cwiseAbs().maxCoeff(), 1e-12);
    const Mat4 via_lib = beam_splitter(t) * direct_sum(single_mode_sth(r, k), Mat2::Identity() * 0.5) *
                         beam_splitter(t).transpose();
    ASSERT_LT((via_lib - ref).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(BeamSplitter, NonclassicalInputGivesEntangledOutput) {
  const BsSpec spec(0.3, 0.6, 0.25);
  EXPECT_NEAR(nonclassicality_threshold(0.6), 0.0911607783969773, 1e-12);
  EXPECT_TRUE(spec.nonclassical_input());
  EXPECT_TRUE(simon_inseparable(bs_resource(spec)).ppt_entangled);
}

TEST(BeamSplitter, EntanglementTracksInputNonclassicality) {
  for (double k = 0.5; k <= 3.0; k += 0.125) {
    const double r0 = nonclassicality_threshold(k);
    for (double t = 0.05; t < 0.96; t += 0.05) {
      for (double r = 0.0; r <= 1.5; r += 0.0625) {
        if (std::abs(r - r0) < 1e-6) continue;
        const bool ent = simon_inseparable(bs_resource(BsSpec(r, k, t))).ppt_entangled;
        ASSERT_EQ(ent, r > r0) << "r=" << r << " k=" << k << " T=" << t;
      }
    }
  }
}

TEST(BeamSplitter, BalancedSplitterGivesSymmetricStateWithCoincidentVerdicts) {
  for (double k = 0.5; k <= 2.5; k += 0.1) {
    for (double r = 0.0; r <= 1.5; r += 0.05) {
      const CovMat v = bs_resource(BsSpec(r, k, 0.5));
      ASSERT_TRUE(v.a() == v.b());
      const auto [rep, label] = classify(v);
      if (std::abs(r - nonclassicality_threshold(k)) < 1e-6) continue;
      ASSERT_EQ(rep.entangled, rep.epr_correlated) << "r=" << r << " k=" << k;
      ASSERT_EQ(rep.entangled, rep.qt) << "r=" << r << " k=" << k;
    }
  }
}

TEST(BeamSplitter, RejectsClosedTransmittanceEndpoints) {
  EXPECT_THROW(BsSpec(0.5, 0.5, 0.0), InvalidInput);
  EXPECT_THROW(BsSpec(0.5, 0.5, 1.0), InvalidInput);
  EXPECT_THROW(BsSpec(0.5, 0.4, 0.5), InvalidInput);
  EXPECT_THROW(BsSpec(-0.5, 0.5, 0.5), InvalidInput);
}
