// Copyright 2026 The rrcc Authors
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
#include <random>

#include "rrcc/errors.hpp"
#include "rrcc/quantum.hpp"
#include "rrcc/wtdist.hpp"
#include "test_util.hpp"

namespace rrcc {
namespace {

using testing::fam;
using testing::gen;

std::vector<ExponentVector> sorted_exps(const std::vector<QecRecord>& recs) {
  std::vector<ExponentVector> out;
  for (const auto& r : recs) out.push_back(r.exps);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Quantum, CssFromDualContaining) {
  const QecCode q = css_dual(gen(fam(17, 3), "(x+1)^2(x+8)"));
  EXPECT_EQ(q.params(), "[[136,130,3]]");
  EXPECT_EQ(q.construction, Construction::CSSDualContaining);
  EXPECT_EQ(singleton_check(q).slack, 2);
  EXPECT_FALSE(singleton_check(q).is_mds);
  EXPECT_THROW(css_dual(gen(fam(17, 3), "(x-1)^9")), PreconditionError);
}

TEST(Quantum, CssWithDualInnerMatchesDualContainingForm) {
  const FamilyPtr f = fam(11, 3);
  std::mt19937_64 rng(3);
  int seen = 0;
  for (int i = 0; i < 2000 && seen < 50; ++i) {
    const RepeatedRootCode c(f, testing::random_exps(*f, rng));
    if (!is_dual_containing(c) || c.is_zero()) continue;
    ++seen;
    const QecCode a = css_dual(c);
    const QecCode b = css(c, dual(c));
    ASSERT_EQ(a.params(), b.params()) << c.factored();
    ASSERT_EQ(css_dim_by_families(c), static_cast<std::int64_t>(a.k));
  }
  EXPECT_GT(seen, 0);
}

TEST(Quantum, CssRequiresNesting) {
  const FamilyPtr f = fam(17, 3);
  EXPECT_THROW(css(gen(f, "(x+1)"), gen(f, "(x-1)")), PreconditionError);
  const QecCode q = css(gen(f, "(x+1)"), gen(f, "(x+1)^2(x+8)"));
  EXPECT_EQ(q.n, 136u);
  EXPECT_EQ(q.k, 2u);
}

TEST(Quantum, Steane) {
  const FamilyPtr f = fam(17, 3);
  const QecCode q = steane(gen(f, "(x+1)^2(x+8)"), gen(f, "(x+1)"));
  EXPECT_EQ(q.params(), "[[136,132,3]]");
  EXPECT_EQ(q.construction, Construction::Steane);
  EXPECT_THROW(steane(gen(f, "(x+1)^2(x+8)"), gen(f, "(x+1)^2(x+8)")), PreconditionError);
  EXPECT_THROW(steane(gen(f, "(x-1)^9"), gen(f, "(x-1)^8")), PreconditionError);
}

TEST(Quantum, SteaneCeilingTerm) {
  // C = <(x+1)^2(x+8)> has d = 3 and C' = <(x+1)> has d' = 2: ceil(18*2/17) = 3.
  const FamilyPtr f = fam(17, 3);
  EXPECT_EQ(steane(gen(f, "(x+1)^2(x+8)"), gen(f, "(x+1)")).d, 3u);
  // With the full code as C' the formula gives [[56,55,2]], which the quantum
  // Singleton bound rules out.
  const FamilyPtr g = fam(7, 3);
  EXPECT_THROW(steane(gen(g, "(x+1)"), gen(g, "1")), ConsistencyError);
}

TEST(Quantum, Eaqec) {
  const EaqecCode e = eaqec(gen(fam(13, 3), "(x+1)^7(x-1)(x+5)^2(x^2+5)^3(x^2-5)"));
  EXPECT_EQ(e.params(), "[[104,69,8;1]]");
  EXPECT_EQ(e.hull_dim, 17u);
  EXPECT_EQ(e.net_rate(), "17/26");
  EXPECT_EQ(eaqec(gen(fam(31, 3), "(x+1)^16(x^2+8x+1)")).params(), "[[248,213,4;1]]");
  EXPECT_EQ(eaqec(gen(fam(11, 3), "(x+1)^4(x-1)^4(x^2+1)^5(x^2+3x+10)^10(x^2+8x+10)^2")).params(),
            "[[88,8,11;4]]");
}

TEST(Quantum, SingletonRejectsImpossibleParameters) {
  QecCode q;
  q.n = 10;
  q.k = 10;
  q.d = 2;
  EXPECT_THROW(singleton_check(q), ConsistencyError);
  q.k = 8;
  EXPECT_TRUE(singleton_check(q).is_mds);
}

TEST(Quantum, MdsScanCounts) {
  struct Case {
    std::uint32_t p, m;
    std::size_t d2;
  };
  for (const Case& c : {Case{5, 2, 8}, Case{29, 1, 4}, Case{23, 1, 2}}) {
    const FamilyPtr f = fam(c.p, 3, 1, c.m);
    const auto recs = qec_mds_scan(f);
    ASSERT_EQ(recs.size(), c.d2 + 1) << c.p << "^" << c.m;
    std::size_t d1 = 0;
    for (const auto& r : recs) {
      EXPECT_EQ(singleton_check(r.code).slack, 0);
      d1 += r.code.d == 1;
    }
    EXPECT_EQ(d1, 1u);
  }
}

TEST(Quantum, MdsScanMatchesExhaustive) {
  for (const FamilyPtr& f : {fam(3, 3), fam(23, 3), fam(7, 2), fam(5, 2, 2)}) {
    EXPECT_EQ(sorted_exps(qec_mds_scan(f)), sorted_exps(qec_mds_exhaustive(f, {kDefaultBudget, 2}))) << f->n();
  }
}

TEST(Quantum, SlackZeroCodesOverTernaryLength24) {
  // Every dual-containing code, not just the classified ones.
  const FamilyPtr f = fam(3, 3);
  std::vector<ExponentVector> zero_slack;
  for (const RepeatedRootCode& c : enumerate_codes(f, is_dual_containing)) {
    if (singleton_check(css_dual(c)).slack == 0) zero_slack.push_back(c.exps());
  }
  std::sort(zero_slack.begin(), zero_slack.end());
  EXPECT_EQ(zero_slack, sorted_exps(qec_mds_scan(f)));
}

}  // namespace
}  // namespace rrcc
