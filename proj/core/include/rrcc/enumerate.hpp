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

#ifndef RRCC_ENUMERATE_HPP
#define RRCC_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rrcc/cycliccode.hpp"

namespace rrcc {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct EnumOptions {
  /// Maximum number of exponent vectors an enumeration may visit.
  std::uint64_t budget = kDefaultBudget;
  /// Worker threads; 0 is treated as 1.
  unsigned jobs = 1;
};

/// (p^s + 1)^{|T_n|}; throws BudgetExceeded when it exceeds the budget.
std::uint64_t space_size(const CodeFamily& family, std::uint64_t budget);

/// The index-th exponent vector in lexicographic order (representative 0 is
/// the most significant position).
ExponentVector exps_at(const CodeFamily& family, std::uint64_t index);

namespace detail {
/// Splits [0, total) into contiguous blocks and runs body(begin, end, block)
/// on up to `jobs` threads. Returns the number of blocks.
std::size_t run_blocks(std::uint64_t total, unsigned jobs,
                       const std::function<void(std::uint64_t, std::uint64_t, std::size_t)>& body);
std::size_t block_count(std::uint64_t total, unsigned jobs);
}  // namespace detail

/// Applies fn to every code in lexicographic order of exponent vectors and
/// collects the engaged results. Output order does not depend on opts.jobs.
template <class T, class Fn>
std::vector<T> enumerate_map(const FamilyPtr& family, const EnumOptions& opts, Fn fn) {
  const std::uint64_t total = space_size(*family, opts.budget);
  std::vector<std::vector<T>> parts(detail::block_count(total, opts.jobs));
  detail::run_blocks(total, opts.jobs, [&](std::uint64_t begin, std::uint64_t end, std::size_t block) {
    ExponentVector v = exps_at(*family, begin);
    const std::uint64_t radix = family->ps() + 1;
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      RepeatedRootCode code(family, v);
      std::optional<T> out = fn(code);
      if (out) parts[block].push_back(std::move(*out));
      for (std::size_t pos = v.size(); pos-- > 0;) {
        if (++v[pos] < radix) break;
        v[pos] = 0;
      }
    }
  });
  std::vector<T> merged;
  for (auto& part : parts) {
    for (auto& x : part) merged.push_back(std::move(x));
  }
  return merged;
}

using CodePredicate = std::function<bool(const RepeatedRootCode&)>;

/// Codes satisfying pred (all codes when pred is empty), in lexicographic order.
std::vector<RepeatedRootCode> enumerate_codes(const FamilyPtr& family, const CodePredicate& pred,
                                              const EnumOptions& opts = {});
std::uint64_t count_codes(const FamilyPtr& family, const CodePredicate& pred, const EnumOptions& opts = {});

}  // namespace rrcc

#endif  // RRCC_ENUMERATE_HPP
