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

#include "rrcc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "rrcc/errors.hpp"

namespace rrcc {

std::uint64_t space_size(const CodeFamily& family, std::uint64_t budget) {
  u128 total = 1;
  for (std::size_t h = 0; h < family.size(); ++h) {
    total *= family.ps() + 1;
    if (total > budget) {
      throw BudgetExceeded("enumeration of " + std::to_string(family.ps() + 1) + "^" + std::to_string(family.size()) +
                           " exponent vectors exceeds the budget of " + std::to_string(budget));
    }
  }
  return static_cast<std::uint64_t>(total);
}

ExponentVector exps_at(const CodeFamily& family, std::uint64_t index) {
  ExponentVector v(family.size(), 0);
  const std::uint64_t radix = family.ps() + 1;
  for (std::size_t pos = v.size(); pos-- > 0;) {
    v[pos] = index % radix;
    index /= radix;
  }
  return v;
}

namespace detail {

std::size_t block_count(std::uint64_t total, unsigned jobs) {
  const std::uint64_t workers = std::max(1u, jobs);
  return static_cast<std::size_t>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, workers * 8)));
}

std::size_t run_blocks(std::uint64_t total, unsigned jobs,
                       const std::function<void(std::uint64_t, std::uint64_t, std::size_t)>& body) {
  const std::size_t blocks = block_count(total, jobs);
  auto bounds = [&](std::size_t b) { return static_cast<std::uint64_t>(static_cast<u128>(total) * b / blocks); };
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(blocks)));
  if (workers == 1) {
    for (std::size_t b = 0; b < blocks; ++b) body(bounds(b), bounds(b + 1), b);
    return blocks;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!failed.load()) {
        std::size_t b = next.fetch_add(1);
        if (b >= blocks) return;
        try {
          body(bounds(b), bounds(b + 1), b);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return blocks;
}

}  // namespace detail

std::vector<RepeatedRootCode> enumerate_codes(const FamilyPtr& family, const CodePredicate& pred,
                                              const EnumOptions& opts) {
  return enumerate_map<RepeatedRootCode>(family, opts, [&](const RepeatedRootCode& c) -> std::optional<RepeatedRootCode> {
    if (!pred || pred(c)) return c;
    return std::nullopt;
  });
}

std::uint64_t count_codes(const FamilyPtr& family, const CodePredicate& pred, const EnumOptions& opts) {
  auto hits = enumerate_map<char>(family, opts, [&](const RepeatedRootCode& c) -> std::optional<char> {
    if (!pred || pred(c)) return char{1};
    return std::nullopt;
  });
  return hits.size();
}

}  // namespace rrcc
