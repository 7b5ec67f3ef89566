// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "test_util.hpp"

namespace textaug {
namespace {

using testing::random_image;

TEST(Image, RejectsBadShapes) {
  EXPECT_THROW(Image(0, 4, 1), Error);
  EXPECT_THROW(Image(4, 0, 1), Error);
  EXPECT_THROW(Image(4, 4, 2), Error);
  EXPECT_THROW(Image(4, 4, 3, std::vector<std::uint8_t>(47)), Error);
  try {
    Image(4, 4, 4);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidImage);
  }
  EXPECT_NO_THROW(Image(4, 4, 3, std::vector<std::uint8_t>(48)));
}

TEST(Image, InterleavedLayout) {
  Image img(3, 2, 3);
  img.at(2, 1, 1) = 7;
  EXPECT_EQ(img.data()[(1 * 3 + 2) * 3 + 1], 7);
  EXPECT_EQ(Image::filled(2, 2, 1, 9).data()[3], 9);
}

TEST(Rng, MatchesReferenceXoshiro) {
  // xoshiro256** seeded by four splitmix64 outputs, evaluated independently.
  Rng a(0);
  EXPECT_EQ(a.next_u64(), 0x99ec5f36cb75f2b4ULL);
  EXPECT_EQ(a.next_u64(), 0xbf6e1f784956452aULL);
  EXPECT_EQ(a.next_u64(), 0x1a5f849d4933e6e0ULL);
  Rng b(42);
  EXPECT_EQ(b.next_u64(), 0x15780b2e0c2ec716ULL);
  EXPECT_EQ(b.next_u64(), 0x6104d9866d113a7eULL);
  EXPECT_EQ(b.next_u64(), 0xae17533239e499a1ULL);
  EXPECT_EQ(b.draws(), 3u);
}

TEST(Rng, Fnv1aKnownValue) { EXPECT_EQ(fnv1a64("abc", 3), 0xe71fa2190541574bULL); }

TEST(Rng, UniformAndIntegerRanges) {
  Rng rng(5);
  std::map<int, int> counts;
  for (int i = 0; i < 60000; ++i) {
    const double u = rng.uniform(-2.0, 3.0);
    ASSERT_GE(u, -2.0);
    ASSERT_LT(u, 3.0);
    const auto k = rng.integer(-1, 4);
    ASSERT_GE(k, -1);
    ASSERT_LE(k, 4);
    ++counts[static_cast<int>(k)];
  }
  ASSERT_EQ(counts.size(), 6u);
  for (auto [k, n] : counts) EXPECT_NEAR(n / 60000.0, 1.0 / 6.0, 0.01) << k;
}

TEST(Rng, DegenerateIntegerRangeStillDraws) {
  Rng rng(1);
  EXPECT_EQ(rng.integer(3, 3), 3);
  EXPECT_EQ(rng.draws(), 1u);
}

TEST(Rng, GaussianMoments) {
  Rng rng(11);
  double s = 0, s2 = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double g = rng.gaussian();
    s += g;
    s2 += g * g;
  }
  EXPECT_NEAR(s / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.01);
}

TEST(Rng, PoissonMeanAndVarianceBothBranches) {
  for (double lambda : {0.5, 3.0, 9.9, 10.0, 30.0, 150.0}) {
    Rng rng(static_cast<std::uint64_t>(lambda * 100));
    double s = 0, s2 = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
      const double k = static_cast<double>(rng.poisson(lambda));
      ASSERT_GE(k, 0.0);
      s += k;
      s2 += k * k;
    }
    const double m = s / n;
    const double var = s2 / n - m * m;
    EXPECT_NEAR(m, lambda, 0.02 * lambda + 0.01) << lambda;
    EXPECT_NEAR(var, lambda, 0.05 * lambda + 0.02) << lambda;
  }
  Rng rng(0);
  EXPECT_EQ(rng.poisson(0.0), 0);
}

TEST(Rng, PoissonMatchesPmfSmallLambda) {
  Rng rng(77);
  const double lambda = 2.5;
  const int n = 200000;
  std::vector<int> hist(20);
  for (int i = 0; i < n; ++i) ++hist[std::min<std::int64_t>(rng.poisson(lambda), 19)];
  double p = std::exp(-lambda);
  for (int k = 0; k < 8; ++k) {
    EXPECT_NEAR(hist[k] / double(n), p, 0.004) << k;
    p *= lambda / (k + 1);
  }
}

TEST(Magnitude, RejectsOutOfRange) {
  EXPECT_THROW(Magnitude(-1), Error);
  EXPECT_THROW(Magnitude(3), Error);
  EXPECT_EQ(Magnitude(2).level(), 2);
}

TEST(Registry, CardinalitiesAndOrder) {
  const auto& ops = registry_list();
  ASSERT_EQ(ops.size(), 36u);
  std::map<Group, int> per_group;
  std::set<std::string_view> names;
  std::vector<std::string_view> single;
  for (const auto& op : ops) {
    ++per_group[op.group];
    names.insert(op.name);
    if (op.levels_supported == 1) single.push_back(op.name);
    EXPECT_TRUE(op.levels_supported == 1 || op.levels_supported == 3);
  }
  EXPECT_EQ(names.size(), 36u);
  EXPECT_EQ(per_group[Group::kWarp], 3);
  EXPECT_EQ(per_group[Group::kGeometry], 3);
  EXPECT_EQ(per_group[Group::kNoise], 4);
  EXPECT_EQ(per_group[Group::kBlur], 5);
  EXPECT_EQ(per_group[Group::kWeather], 5);
  EXPECT_EQ(per_group[Group::kCamera], 4);
  EXPECT_EQ(per_group[Group::kPattern], 5);
  EXPECT_EQ(per_group[Group::kProcess], 7);
  std::sort(single.begin(), single.end());
  EXPECT_EQ(single, (std::vector<std::string_view>{"AutoContrast", "Equalize", "Invert"}));
  for (std::size_t i = 1; i < ops.size(); ++i) {
    const bool ordered = ops[i - 1].group < ops[i].group ||
                         (ops[i - 1].group == ops[i].group && ops[i - 1].name < ops[i].name);
    EXPECT_TRUE(ordered) << ops[i].name;
  }
  EXPECT_EQ(find_op("Nope"), nullptr);
  EXPECT_EQ(find_op("Rain")->group, Group::kWeather);
}

TEST(Apply, ErrorCodes) {
  const Image img = random_image(16, 16, 1, 1);
  Rng rng(0);
  try {
    apply("Nope", img, Magnitude(0), 1.0, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownOp);
  }
  try {
    apply("Invert", img, Magnitude(0), 1.5, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidProb);
  }
  try {
    apply("Invert", Image(), Magnitude(0), 1.0, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidImage);
  }
}

TEST(Apply, ProbZeroIsBitwiseCopyAndConsumesOneDraw) {
  const Image img = random_image(100, 32, 3, 2);
  Rng rng(9);
  const Image out = apply("Rotate", img, Magnitude(1), 0.0, rng);
  EXPECT_EQ(out, img);
  EXPECT_EQ(rng.draws(), 1u);
}

TEST(Apply, InvertTwiceIsIdentity) {
  const Image img = random_image(100, 32, 3, 3);
  Rng rng(0);
  EXPECT_EQ(apply("Invert", apply("Invert", img, Magnitude(0), 1.0, rng), Magnitude(0), 1.0, rng), img);
}

TEST(Apply, CurveDeterministic) {
  const Image img = testing::text_like(100, 32, 1, 4);
  Rng a(42), b(42);
  EXPECT_EQ(apply("Curve", img, Magnitude(2), 1.0, a), apply("Curve", img, Magnitude(2), 1.0, b));
}

TEST(Apply, GateFrequency) {
  const Image img = random_image(8, 8, 1, 0);
  Rng rng(123);
  int hits = 0;
  for (int i = 0; i < 10000; ++i) {
    bool applied = false;
    apply("Invert", img, Magnitude(0), 0.5, rng, applied);
    hits += applied;
  }
  EXPECT_NEAR(hits / 10000.0, 0.5, 0.03);
}

TEST(Apply, SingleLevelOpsIgnoreMagnitude) {
  const Image img = random_image(32, 32, 3, 5);
  for (const char* op : {"Invert", "Equalize", "AutoContrast"}) {
    Rng a(1), b(1);
    EXPECT_EQ(apply(op, img, Magnitude(0), 1.0, a), apply(op, img, Magnitude(2), 1.0, b)) << op;
  }
}

}  // namespace
}  // namespace textaug
