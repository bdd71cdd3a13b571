// tests/f0_metrics_test.cc

// Copyright 2026  The ttskit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "support/oracles.h"
#include "ttskit/error.h"
#include "ttskit/metrics.h"

namespace ttskit {
namespace {

PitchTrack Make(std::vector<double> f0, std::vector<bool> voiced) {
  PitchTrack t;
  t.f0 = std::move(f0);
  t.voiced = std::move(voiced);
  t.frame_rate = 86.0;
  return t;
}

TEST(F0MetricsTest, WorkedExample) {
  const PitchTrack ref = Make({100, 200, 150}, {true, true, false});
  const PitchTrack hyp = Make({110, 260, 150}, {true, true, true});
  EXPECT_DOUBLE_EQ(Gpe(ref, hyp), 0.5);
  EXPECT_DOUBLE_EQ(Vde(ref, hyp), 1.0 / 3);
  EXPECT_DOUBLE_EQ(Ffe(ref, hyp), 2.0 / 3);
  const F0ErrorCounts c = CountF0Errors(ref, hyp);
  EXPECT_EQ(c.num_covoiced, 2u);
  EXPECT_EQ(c.num_gross_errors, 1u);
  EXPECT_EQ(c.num_voicing_errors, 1u);
}

TEST(F0MetricsTest, VdeExamples) {
  EXPECT_DOUBLE_EQ(Vde(Make({1, 0, 1, 1}, {true, false, true, true}),
                       Make({1, 1, 1, 0}, {true, true, true, false})),
                   0.5);
  const PitchTrack on = Make(std::vector<double>(7, 100.0), std::vector<bool>(7, true));
  const PitchTrack off = Make(std::vector<double>(7, 0.0), std::vector<bool>(7, false));
  EXPECT_DOUBLE_EQ(Vde(on, off), 1.0);
}

TEST(F0MetricsTest, IdenticalTracksScoreZero) {
  const PitchTrack t = Make({100, 0, 130}, {true, false, true});
  EXPECT_EQ(Gpe(t, t), 0.0);
  EXPECT_EQ(Vde(t, t), 0.0);
  EXPECT_EQ(Ffe(t, t), 0.0);
}

TEST(F0MetricsTest, NoCovoicedFrames) {
  const PitchTrack ref = Make({0, 0}, {false, false});
  const PitchTrack hyp = Make({100, 100}, {true, true});
  try {
    Gpe(ref, hyp);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoCovoicedFrames);
  }
  const F0MetricReport r = ComputeF0Metrics(ref, hyp);
  EXPECT_FALSE(r.gpe);
  EXPECT_EQ(r.vde, 1.0);
  EXPECT_EQ(r.ffe, 1.0);
}

TEST(F0MetricsTest, ThresholdIsStrict) {
  // |p - p_hat| == 0.2 p exactly is not an error.
  const PitchTrack ref = Make({100}, {true});
  EXPECT_EQ(Gpe(ref, Make({120}, {true})), 0.0);
  EXPECT_EQ(Gpe(ref, Make({120.0001}, {true})), 1.0);
}

TEST(F0MetricsTest, GpeIsNotSymmetric) {
  // 100 vs 123: 23 > 20 (ref 100) but 23 <= 24.6 (ref 123).
  const PitchTrack a = Make({100}, {true}), b = Make({123}, {true});
  EXPECT_EQ(Gpe(a, b), 1.0);
  EXPECT_EQ(Gpe(b, a), 0.0);
  EXPECT_NE(Ffe(a, b), Ffe(b, a));
  EXPECT_EQ(Vde(a, b), Vde(b, a));
}

TEST(F0MetricsTest, MatchesPerFrameEnumeration) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> len(1, 12), coin(0, 1);
  // Coarse pitch grid so exact 20% boundaries come up often.
  std::uniform_int_distribution<int> grid(10, 30);
  for (int trial = 0; trial < 2000; trial++) {
    const int n = len(rng);
    std::vector<double> p(n), q(n);
    std::vector<bool> v(n), w(n);
    for (int t = 0; t < n; t++) {
      v[t] = coin(rng);
      w[t] = coin(rng);
      p[t] = v[t] ? grid(rng) * 10.0 : 0.0;
      q[t] = w[t] ? grid(rng) * 10.0 : 0.0;
    }
    const PitchTrack ref = Make(p, v), hyp = Make(q, w);
    const testing::F0Oracle o = testing::EnumerateF0(p, q, v, w);
    const F0ErrorCounts c = CountF0Errors(ref, hyp);
    ASSERT_EQ(static_cast<long>(c.num_gross_errors), o.numerator_gross);
    ASSERT_EQ(static_cast<long>(c.num_covoiced), o.covoiced);
    ASSERT_EQ(static_cast<long>(c.num_voicing_errors), o.voicing_errors);
    ASSERT_EQ(static_cast<long>(c.num_frames), o.frames);
    const double vde = static_cast<double>(o.voicing_errors) / o.frames;
    ASSERT_NEAR(Vde(ref, hyp), vde, 1e-12);
    const double ffe = Ffe(ref, hyp);
    ASSERT_NEAR(ffe, static_cast<double>(o.voicing_errors + o.numerator_gross) / o.frames,
                1e-12);
    ASSERT_NEAR(ffe, vde + static_cast<double>(o.numerator_gross) / o.frames, 1e-12);
    ASSERT_GE(ffe, Vde(ref, hyp));
    if (o.covoiced > 0) {
      ASSERT_NEAR(Gpe(ref, hyp), static_cast<double>(o.numerator_gross) / o.covoiced,
                  1e-12);
    } else {
      ASSERT_THROW(Gpe(ref, hyp), Error);
    }
  }
}

TEST(F0MetricsTest, LengthMismatchIsRejected) {
  EXPECT_THROW(Vde(Make({1, 2}, {true, true}), Make({1}, {true})), Error);
}

}  // namespace
}  // namespace ttskit
