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

#ifndef RRCC_WTDIST_HPP
#define RRCC_WTDIST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rrcc/cycliccode.hpp"
#include "rrcc/polyring.hpp"

namespace rrcc {

struct PAdicWeight {
  std::uint64_t t = 0;
  /// Base-p digits of t, least significant first (exactly s of them).
  std::vector<std::uint32_t> digits;
  /// prod (digit + 1).
  std::uint64_t P = 1;
};

PAdicWeight p_weight(std::uint64_t t, std::uint32_t p, unsigned s);

struct TInterval {
  unsigned k = 0;
  std::uint64_t tau = 0;
  /// (tau + 2) p^k, the least P_t over t >= l.
  std::uint64_t min_weight = 0;
  /// Last element of the interval containing l.
  std::uint64_t end = 0;
};

/// The (k, tau) whose interval p^s - p^{s-k} + tau p^{s-k-1} + 1 .. p^s -
/// p^{s-k} + (tau+1) p^{s-k-1} contains l, for 1 <= l <= p^s - 1.
TInterval t_interval(std::uint64_t l, std::uint32_t p, unsigned s);
/// min{P_t : l <= t < p^s} by direct scan.
std::uint64_t min_weight_scan(std::uint64_t l, std::uint32_t p, unsigned s);

/// Length-2^r code generated by the minimal polynomials with j_h > t,
/// returned in the (field, r, 0) family.
RepeatedRootCode layer_code(const RepeatedRootCode& c, std::uint64_t t);

/// Exact minimum distance of the cyclic code <g> of length N (g | x^N - 1).
/// Uses a search for the smallest set of linearly dependent parity-check
/// columns x^i mod g, with the first column fixed by cyclic symmetry, and
/// switches to codeword enumeration when q^k is cheaper. Throws
/// PreconditionError for the zero code and BudgetExceeded when both routes
/// exceed `work_budget` elementary steps.
std::uint64_t cyclic_min_distance(const Poly& g, std::uint64_t N, double work_budget = 2e10);

/// Minimum distance of a code of length 2^r (typically a layer code).
std::uint64_t simple_distance(const RepeatedRootCode& c);

struct LayerDistance {
  std::uint64_t t;
  std::uint64_t P;
  std::uint64_t d;
};

struct DistanceReport {
  std::uint64_t d = 0;
  std::uint64_t witness_t = 0;
  std::vector<LayerDistance> layers;
};

/// d = min_t P_t d(C_t) over the layers with nonzero layer code.
DistanceReport distance(const RepeatedRootCode& c);

/// Minimum distance computed on the full length; requires n <= max_n.
std::uint64_t brute_distance(const RepeatedRootCode& c, std::uint64_t max_n = 32);

struct SplitFormResult {
  /// False when the smallest exponent is 0 and only the bound d <= 2^r holds.
  bool exact = false;
  std::uint64_t value = 0;
};

/// Split case only (q = 1 mod 2^r); throws PreconditionError otherwise.
SplitFormResult split_closed_form(const RepeatedRootCode& c);

enum class MdsClass { NotMDS, MDS_d1, MDS_d2, MDS_dn };

std::string to_string(MdsClass m);

/// Representatives on which a single unit exponent can give an MDS code.
std::vector<std::size_t> mds_allowed_reps(const CodeFamily& family);
MdsClass classify_mds(const RepeatedRootCode& c);

}  // namespace rrcc

#endif  // RRCC_WTDIST_HPP
