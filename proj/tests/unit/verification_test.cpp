// Copyright 2026 The cdes Authors
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

#include <gtest/gtest.h>

#include "cdes/verification.hpp"

namespace cdes {
namespace {

TEST(Verification, EverySuitePassesSmall) {
  for (const std::string& suite : suite_names()) {
    const VerificationSummary s = run_verification(suite, 5);
    EXPECT_TRUE(s.pass()) << summary_to_text(s);
    EXPECT_GT(s.checks_run, 0) << suite;
    EXPECT_EQ(s.n_hi, 5);
  }
}

TEST(Verification, JobsDoNotChangeResults) {
  VerificationOptions opts;
  opts.jobs = 3;
  const VerificationSummary a = run_verification("involutions", 6);
  const VerificationSummary b = run_verification("involutions", 6, opts);
  EXPECT_EQ(a.checks_run, b.checks_run);
  EXPECT_TRUE(b.pass());
}

TEST(Verification, Caps) {
  EXPECT_EQ(suite_cap("bijections"), 7);
  EXPECT_EQ(suite_cap("theorem-p"), 8);
  EXPECT_THROW(run_verification("bijections", 8), std::out_of_range);
  EXPECT_THROW(run_verification("nope", 3), std::invalid_argument);
  const VerificationSummary all = run_verification("all", 3);
  EXPECT_TRUE(all.pass());
}

TEST(Verification, JsonShape) {
  const nlohmann::json j = summary_to_json(run_verification("lemmas", 3));
  for (const char* key : {"suite", "n_range", "checks_run", "pass", "failures", "notes"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["n_range"], nlohmann::json::parse("[1,3]"));
}

}  // namespace
}  // namespace cdes
