// Copyright 2026 The QFT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "oracle.hpp"
#include "qft/cost_model.hpp"
#include "qft/improved.hpp"
#include "qft/random.hpp"
#include "qft/reference.hpp"
#include "qft/transforms.hpp"
#include "support.hpp"

namespace qft {
namespace {

using enum SignalTypeId;
using testing::oracle_spectrum;
using testing::random_typed;
using testing::stored_harmonics;
using cd = std::complex<double>;

using Internal = void (*)(SignalView<double>, Context<double>&, NodeId);

long double internal_error(SignalTypeId type, std::size_t N, Internal fn, OpCounter* ops = nullptr) {
  Signal<double> s = random_typed(type, N, 31);
  const auto want = oracle_spectrum(s.view());
  const TrigTable<double> table(Algorithm::improved, N);
  Context<double> ctx(table, {.ops = ops});
  fn(s.view(), ctx, kNoNode);
  return oracle::relative_rms(stored_harmonics(s.view()), want);
}

TEST(ImprovedDct, BaseCaseAndImpulse) {
  const std::vector<double> a = {3, 1};
  EXPECT_EQ(Plan<double>(Algorithm::improved, 2).dct0(a), (std::vector<double>{4, 2}));
  const std::vector<double> d = {1, 0, 0, 0, 0};
  for (double v : Plan<double>(Algorithm::improved, 8).dct0(d)) EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(ImprovedDct, MatchesOracle) {
  for (std::size_t N = 2; N <= 512; N *= 2) {
    EXPECT_LT(internal_error(dc_tt, N, improved::tt<double>), 1e-12) << "N=" << N;
  }
}

TEST(ImprovedDctOt, SingleSampleBaseCase) {
  Signal<double> s(dc_ot, 4);
  s.cells = {-0.5};
  const TrigTable<double> table(Algorithm::improved, 4);
  Context<double> ctx(table, {});
  improved::ot(s.view(), ctx, kNoNode);
  EXPECT_EQ(s.view().freq(0), -0.5);
}

TEST(ImprovedDctOt, MatchesOracle) {
  for (std::size_t N = 4; N <= 512; N *= 2) {
    EXPECT_LT(internal_error(dc_ot, N, improved::ot<double>), 1e-12) << "N=" << N;
  }
}

TEST(ImprovedDctOo, EightPointBaseUsesBaseCosine) {
  Signal<double> s(dc_oo, 8);
  s.cells = {2.0};
  const TrigTable<double> table(Algorithm::improved, 8);
  TrigAccessLog log;
  OpCounter ops;
  Context<double> ctx(table, {.ops = &ops, .trig_log = &log});
  improved::oo(s.view(), ctx, kNoNode);
  EXPECT_DOUBLE_EQ(s.view().freq(1), 2.0 * std::cos(std::numbers::pi / 4));
  EXPECT_EQ(ops.muls, 1u);
  EXPECT_EQ(log.size(), 1u);
  EXPECT_TRUE(log.count({TrigKey::Kind::base_cosine, 1}));
}

TEST(ImprovedDctOo, MatchesOracle) {
  for (std::size_t N = 8; N <= 1024; N *= 2) {
    EXPECT_LT(internal_error(dc_oo, N, improved::oo<double>), 1e-12) << "N=" << N;
  }
}

TEST(ImprovedDst, BaseCaseAndOracle) {
  const std::vector<double> c = {1.5};
  EXPECT_EQ(Plan<double>(Algorithm::improved, 4).dst0(c), (std::vector<double>{1.5}));
  for (std::size_t N = 4; N <= 512; N *= 2) {
    EXPECT_LT(internal_error(ds_tt, N, improved::tt<double>), 1e-12) << "N=" << N;
    EXPECT_LT(internal_error(ds_ot, N, improved::ot<double>), 1e-12) << "N=" << N;
    if (N >= 8) {
      EXPECT_LT(internal_error(ds_oo, N, improved::oo<double>), 1e-12) << "N=" << N;
    }
  }
}

TEST(ImprovedDstOo, EightPointBase) {
  Signal<double> s(ds_oo, 8);
  s.cells = {3.0};
  const TrigTable<double> table(Algorithm::improved, 8);
  Context<double> ctx(table, {});
  improved::oo(s.view(), ctx, kNoNode);
  EXPECT_DOUBLE_EQ(s.view().freq(1), 3.0 * std::sin(std::numbers::pi / 4));
}

TEST(ImprovedDst, OneHundredTwentyEightPointsAgainstNaive) {
  const auto s = random_real_signal(63, 32, 0);
  const auto got = Plan<double>(Algorithm::improved, 128).dst0(s);
  const auto want = dst0_naive<double>(s, 128, Summation::compensated);
  EXPECT_LT(oracle::relative_rms(got, want), 1e-12);
}

TEST(ImprovedAllTransforms, OracleEquivalenceUpTo4096) {
  for (std::size_t N = 4; N <= 4096; N *= 2) {
    for (SignalTypeId root : {cx_tt, re_tt, dc_tt, ds_tt}) {
      if (N == 4096 && root != cx_tt) continue;
      Signal<double> s = random_typed(root, N, 33);
      const auto want = pruned_naive(s.view(), Summation::compensated);
      Plan<double>(Algorithm::improved, N).execute(s.view());
      std::vector<cd> got;
      if (root == cx_tt) {
        for (std::size_t k = 0; k < N; ++k) got.emplace_back(s.cells[2 * k], s.cells[2 * k + 1]);
      } else if (root == re_tt) {
        for (std::size_t k = 0; k <= N / 2; ++k)
          got.emplace_back(s.cells[k], (k == 0 || k == N / 2) ? 0.0 : s.cells[N - k]);
      } else {
        for (double v : s.cells) got.emplace_back(v, 0.0);
      }
      EXPECT_LT(oracle::relative_rms(got, want), 1e-11) << name(root) << " N=" << N;
    }
  }
}

TEST(ImprovedVersusClassical, AgreeToRoundoff) {
  for (std::size_t N = 4; N <= 1024; N *= 2) {
    const auto s = random_signal(N, 34, 0);
    const auto a = Plan<double>(Algorithm::classical, N).cdft(s);
    const auto b = Plan<double>(Algorithm::improved, N).cdft(s);
    EXPECT_LT(oracle::relative_rms(a, b), 1e-12) << "N=" << N;
  }
}

TEST(ImprovedCost, PublishedCdftCounts) {
  const auto at = [](std::size_t N) { return measured_cost(Algorithm::improved, TransformKind::cdft, N); };
  EXPECT_EQ(at(16), (CostCounts{148, 20}));
  EXPECT_EQ(at(64), (CostCounts{964, 196}));
  EXPECT_EQ(at(1024), (CostCounts{27652, 7172}));
  EXPECT_EQ(at(1024).flops(), 34824u);
}

TEST(ImprovedCost, DctAtSixteen) {
  const CostCounts c = measured_cost(Algorithm::improved, TransformKind::dct0, 16);
  EXPECT_EQ(c.muls, 5u);
  EXPECT_EQ(c.adds, 27u);
  EXPECT_EQ(c.flops(), 32u);
}

TEST(ImprovedCost, EveryTransformFollowsItsFormula) {
  for (TransformKind kind : {TransformKind::cdft, TransformKind::rdft, TransformKind::dct0,
                             TransformKind::dst0}) {
    for (std::size_t N = 4; N <= 2048; N *= 2) {
      EXPECT_EQ(measured_cost(Algorithm::improved, kind, N), predicted_cost(Algorithm::improved, kind, N))
          << name(kind) << " N=" << N;
    }
  }
}

}  // namespace
}  // namespace qft
