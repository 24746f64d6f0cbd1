// Copyright 2026 The conncover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "conncover/verify.hpp"

#include <gtest/gtest.h>

#include "conncover/min_csc.hpp"
#include "conncover/oracle.hpp"

namespace conncover {
namespace {

const Instance kPath({{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}, {{-0.2, 0.0}, {2.2, 0.0}}, 1.0, 0.3);

TEST(VerifyMinCsc, AcceptsFeasibleSet) {
  const Verdict v = verify_min_csc(kPath, SensorSet{0, 1, 2});
  EXPECT_TRUE(v.feasible);
  EXPECT_TRUE(v.reason.empty());
  EXPECT_EQ(v.covered, 2u);
}

TEST(VerifyMinCsc, RejectsMissingCoverage) {
  const Verdict v = verify_min_csc(kPath, SensorSet{0, 1});
  EXPECT_FALSE(v.feasible);
  EXPECT_EQ(v.uncovered, (std::vector<TargetId>{1}));
}

TEST(VerifyMinCsc, RejectsDisconnectedSet) {
  const Verdict v = verify_min_csc(kPath, SensorSet{0, 2});
  EXPECT_FALSE(v.feasible);
  EXPECT_TRUE(v.uncovered.empty());
  EXPECT_FALSE(v.reason.empty());
}

TEST(VerifyMinCsc, EmptySet) {
  EXPECT_FALSE(verify_min_csc(kPath, SensorSet{}).feasible);
  EXPECT_TRUE(verify_min_csc(Instance({{0.0, 0.0}}, {}, 1.0, 1.0), SensorSet{}).feasible);
}

TEST(VerifyMinCsc, RejectsUnknownSensor) { EXPECT_FALSE(verify_min_csc(kPath, SensorSet{0, 1, 2, 7}).feasible); }

TEST(VerifyMinCsc, DroppingAnySensorOfAMinimalSolutionFails) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Instance inst = generate(10, 8, 1.0, 1.0, 2.5, seed);
    const oracle::Result exact = oracle::exact_min_csc(inst);
    if (!exact.feasible) continue;
    const std::vector<SensorId> w(exact.witness.begin(), exact.witness.end());
    ASSERT_TRUE(verify_min_csc(inst, SensorSet(w)).feasible);
    for (std::size_t drop = 0; drop < w.size(); ++drop) {
      std::vector<SensorId> fewer = w;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
      if (fewer.empty()) continue;
      EXPECT_FALSE(verify_min_csc(inst, SensorSet(fewer)).feasible);
    }
  }
}

TEST(VerifyBudgeted, SizeConnectivityAndTree) {
  EXPECT_TRUE(verify_budgeted(kPath, SensorSet{0, 1}, 2).feasible);
  EXPECT_TRUE(verify_budgeted(kPath, SensorSet{}, 2).feasible);
  EXPECT_FALSE(verify_budgeted(kPath, SensorSet{0, 1, 2}, 2).feasible);
  EXPECT_FALSE(verify_budgeted(kPath, SensorSet{0, 2}, 2).feasible);
  EXPECT_TRUE(verify_budgeted(kPath, SensorSet{0, 1, 2}, 3, {{0, 1}, {1, 2}}).feasible);
  EXPECT_FALSE(verify_budgeted(kPath, SensorSet{0, 1, 2}, 3, {{0, 1}}).feasible);
  EXPECT_FALSE(verify_budgeted(kPath, SensorSet{0, 1, 2}, 3, {{0, 1}, {0, 2}}).feasible);
  EXPECT_FALSE(verify_budgeted(kPath, SensorSet{0, 1, 2}, 3, {{0, 1}, {1, 2}, {0, 1}}).feasible);
}

}  // namespace
}  // namespace conncover
