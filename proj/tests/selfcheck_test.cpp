// Copyright 2026 The Balanced Codes Authors
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

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "balanced/errors.hpp"
#include "balanced/selfcheck.hpp"

namespace balanced {
namespace {

const CheckResult* find(const SelfCheckReport& r, std::string_view name) {
  for (const auto& c : r.results) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

TEST(SelfCheckTest, AllPassAtEight) {
  const auto report = selfcheck(8);
  EXPECT_TRUE(report.passed());
  for (const auto& r : report.results) {
    EXPECT_NE(r.status, CheckStatus::kFail) << r.name << ": " << r.detail;
  }
}

TEST(SelfCheckTest, IncludesExampleTables) {
  const auto report = selfcheck(4);
  const auto* base = find(report, "k=4 baseline subset table reproduced");
  const auto* comp = find(report, "k=4 compressed subset table reproduced");
  ASSERT_NE(base, nullptr);
  ASSERT_NE(comp, nullptr);
  EXPECT_EQ(base->status, CheckStatus::kPass);
  EXPECT_EQ(comp->status, CheckStatus::kPass);
}

TEST(SelfCheckTest, RecordsLambdaTwoDiscrepancyAsNote) {
  const auto report = selfcheck(6);
  const auto* note = find(report, "N(2,k) against 2*2^(k/2-1) (k=6)");
  ASSERT_NE(note, nullptr);
  EXPECT_EQ(note->status, CheckStatus::kNote);
  EXPECT_NE(note->detail.find("N(2,6)=12"), std::string::npos);
  EXPECT_NE(note->detail.find("formula 8"), std::string::npos);
  EXPECT_TRUE(report.passed());
  const auto* at4 = find(report, "N(2,k) against 2*2^(k/2-1) (k=4)");
  ASSERT_NE(at4, nullptr);
  EXPECT_EQ(at4->status, CheckStatus::kPass);
}

TEST(SelfCheckTest, FullRangePasses) {
  EXPECT_TRUE(selfcheck(kSelfCheckMaxK).passed());
}

TEST(SelfCheckTest, RejectsLargeKMax) {
  EXPECT_THROW(selfcheck(18), DomainError);
}

TEST(SelfCheckTest, ReportFormat) {
  std::ostringstream out;
  print_report(out, selfcheck(4));
  const std::string text = out.str();
  EXPECT_NE(text.find("PASS  k=4 baseline subset table reproduced"),
            std::string::npos);
  EXPECT_NE(text.find("selfcheck passed (k_max=4)"), std::string::npos);
}

}  // namespace
}  // namespace balanced
