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

#include "rrcc/enumerate.hpp"
#include "rrcc/errors.hpp"
#include "rrcc/wtdist.hpp"
#include "test_util.hpp"

namespace rrcc {
namespace {

using testing::fam;

TEST(Enumerate, SpaceSizeAndBudget) {
  EXPECT_EQ(space_size(*fam(7, 3), kDefaultBudget), 1u << 15);
  EXPECT_EQ(space_size(*fam(17, 3), 1ull << 40), 18ull * 18 * 18 * 18 * 18 * 18 * 18 * 18);
  EXPECT_THROW(space_size(*fam(13, 3), 1000), BudgetExceeded);
  EXPECT_THROW(count_codes(fam(13, 3), nullptr, {1000, 1}), BudgetExceeded);
}

TEST(Enumerate, LexicographicOrder) {
  const FamilyPtr f = fam(3, 3);
  EXPECT_EQ(exps_at(*f, 0), ExponentVector(f->size(), 0));
  ExponentVector last(f->size(), 0);
  last.back() = 1;
  EXPECT_EQ(exps_at(*f, 1), last);
  const auto all = enumerate_codes(f, nullptr);
  ASSERT_EQ(all.size(), 1024u);
  for (std::size_t i = 0; i < all.size(); ++i) ASSERT_EQ(all[i].exps(), exps_at(*f, i));
}

TEST(Enumerate, DeterministicAcrossJobCounts) {
  const FamilyPtr f = fam(7, 3);
  const auto one = enumerate_codes(f, is_dual_containing, {kDefaultBudget, 1});
  for (unsigned jobs : {0u, 2u, 3u, 8u, 64u}) {
    const auto many = enumerate_codes(f, is_dual_containing, {kDefaultBudget, jobs});
    ASSERT_EQ(many.size(), one.size());
    for (std::size_t i = 0; i < one.size(); ++i) ASSERT_EQ(many[i].exps(), one[i].exps());
  }
  const auto d1 = enumerate_map<std::uint64_t>(fam(5, 2), {kDefaultBudget, 1}, [](const RepeatedRootCode& c) {
    return c.is_zero() ? std::nullopt : std::optional<std::uint64_t>(distance(c).d);
  });
  const auto d4 = enumerate_map<std::uint64_t>(fam(5, 2), {kDefaultBudget, 4}, [](const RepeatedRootCode& c) {
    return c.is_zero() ? std::nullopt : std::optional<std::uint64_t>(distance(c).d);
  });
  EXPECT_EQ(d1, d4);
}

TEST(Enumerate, WorkerExceptionsPropagate) {
  auto boom = [](const RepeatedRootCode& c) -> bool {
    if (c.k() == 0) throw ConsistencyError("boom");
    return true;
  };
  EXPECT_THROW(count_codes(fam(7, 3), boom, {kDefaultBudget, 4}), ConsistencyError);
}

}  // namespace
}  // namespace rrcc
