// Copyright 2026 The mdlc Authors
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

#include "mdlc/kerror.hpp"

#include <gtest/gtest.h>

#include <string>

#include "mdlc/annihilator.hpp"
#include "oracles.hpp"

namespace mdlc::kerror {
namespace {

const FieldSpec F2 = gf::make_field(2, 1);

PeriodicArray impulse() { return PeriodicArray::from_ints(F2, {2, 2}, {1, 0, 0, 0}); }

void expect_chain(const std::vector<KErrorResult>& profile) {
  for (std::size_t k = 1; k < profile.size(); ++k) EXPECT_LE(profile[k].value, profile[k - 1].value);
}

void expect_witness_valid(const PeriodicArray& s, const KErrorResult& r) {
  EXPECT_LE(seq::hamming_distance(s, r.witness), r.k);
  EXPECT_EQ(oracle::shift_rank_complexity(r.witness), r.value);
}

TEST(BallSize, Examples) {
  EXPECT_EQ(ball_size(4, 0, 2), 1);
  EXPECT_EQ(ball_size(4, 1, 2), 5);
  EXPECT_LE(ball_size(4, 1, 2), BigInt(2) * binomial(4, 1));
  EXPECT_EQ(ball_size(4, 4, 2), 16);
  EXPECT_EQ(ball_size(6, 6, 3), 729);
  EXPECT_EQ(ball_size(64, 64, 2), BigInt(1) << 64);
  EXPECT_THROW(ball_size(4, 5, 2), RangeError);
}

TEST(KError, ZeroAndFullRadius) {
  const auto f = gf::make_field(3, 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = seq::random_array(f, {2, 2}, seed);
    EXPECT_EQ(k_error_complexity(s, 0, Mode::exact).value, annihilator::linear_complexity(s));
    EXPECT_EQ(k_error_complexity(s, 4, Mode::exact).value, 0u);
  }
}

TEST(KError, ImpulseExamples) {
  const auto s = impulse();
  EXPECT_EQ(k_error_complexity(s, 0, Mode::exact).value, 4u);
  const auto r1 = k_error_complexity(s, 1, Mode::exact);
  EXPECT_EQ(r1.value, 0u);
  EXPECT_TRUE(r1.witness.is_zero());
  std::vector<std::size_t> values;
  for (const auto& r : k_error_profile(s, 4)) values.push_back(r.value);
  EXPECT_EQ(values, (std::vector<std::size_t>{4, 0, 0, 0, 0}));
}

TEST(KError, ZeroArrayProfile) {
  for (const auto& r : k_error_profile(PeriodicArray(F2, {3, 2}), 3)) EXPECT_EQ(r.value, 0u);
}

TEST(KError, ExhaustiveAgreementWithWholeSpaceScan) {
  oracle::for_each_array(F2, {2, 2}, [](const PeriodicArray& s) {
    const auto profile = k_error_profile(s, 4);
    expect_chain(profile);
    for (std::size_t k = 0; k <= 4; ++k) {
      const auto r = k_error_complexity(s, k, Mode::exact);
      EXPECT_EQ(r.value, oracle::brute_force_kerror(s, k)) << seq::serialize(s) << " k=" << k;
      EXPECT_EQ(profile[k].value, r.value);
      expect_witness_valid(s, r);
    }
  });
}

TEST(KError, AgreesWithOracleOverF3) {
  const auto f = gf::make_field(3, 1);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto s = seq::random_array(f, {3, 2}, seed);
    const auto profile = k_error_profile(s, 3);
    expect_chain(profile);
    for (std::size_t k = 0; k <= 3; ++k) {
      EXPECT_EQ(profile[k].value, oracle::brute_force_kerror(s, k));
      expect_witness_valid(s, profile[k]);
    }
  }
}

TEST(KError, SampledNeverBeatsExact) {
  const auto f = gf::make_field(2, 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = seq::random_array(f, {3, 3}, seed);
    for (std::size_t k = 0; k <= 3; ++k) {
      const auto exact = k_error_complexity(s, k, Mode::exact);
      const auto sampled = k_error_complexity(s, k, Mode::sampled, 200, seed);
      EXPECT_GE(sampled.value, exact.value);
      EXPECT_EQ(sampled.mode, Mode::sampled);
      expect_witness_valid(s, sampled);
    }
  }
}

TEST(KError, SampledIsDeterministic) {
  const auto s = seq::random_array(gf::make_field(5, 1), {4, 4}, 3);
  const auto a = k_error_complexity(s, 3, Mode::sampled, 500, 11);
  const auto b = k_error_complexity(s, 3, Mode::sampled, 500, 11);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.witness, b.witness);
}

TEST(KError, BudgetAndRangeErrors) {
  const auto s = seq::random_array(F2, {8, 8}, 1);
  try {
    k_error_complexity(s, 5, Mode::exact);
    ADD_FAILURE() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    // 1 + 64 + 2016 + 41664 + 635376 + 7624512
    EXPECT_NE(std::string(e.what()).find("8303633"), std::string::npos) << e.what();
  }
  EXPECT_NO_THROW(k_error_complexity(s, 5, Mode::sampled, 1000, 0));
  EXPECT_THROW(k_error_complexity(impulse(), 5, Mode::exact), RangeError);
  EXPECT_THROW(parse_mode("fast"), RangeError);
}

}  // namespace
}  // namespace mdlc::kerror
