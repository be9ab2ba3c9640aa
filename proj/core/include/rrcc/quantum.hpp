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

#ifndef RRCC_QUANTUM_HPP
#define RRCC_QUANTUM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rrcc/cycliccode.hpp"
#include "rrcc/enumerate.hpp"
#include "rrcc/wtdist.hpp"

namespace rrcc {

enum class Construction { CSS, CSSDualContaining, Steane };

/// "CSS", "CSS-selfdual-pair" or "Steane".
std::string to_string(Construction c);

struct QecCode {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  Construction construction = Construction::CSS;
  std::vector<std::string> source_generators;
  std::vector<std::string> notes;

  /// "[[n,k,d]]".
  std::string params() const;
};

struct EaqecCode {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  std::uint64_t c = 0;
  std::uint64_t hull_dim = 0;
  std::vector<std::string> source_generators;

  /// "[[n,k,d;c]]".
  std::string params() const;
  /// k/n and (k-c)/n as reduced fractions.
  std::string rate() const;
  std::string net_rate() const;
};

struct SingletonReport {
  std::int64_t slack = 0;
  bool is_mds = false;
};

/// slack = n - 2d + 2 - k. Throws ConsistencyError on negative slack.
SingletonReport singleton_check(const QecCode& qc);
/// slack = n + c - k - 2(d - 1) for the entanglement-assisted bound.
SingletonReport singleton_check(const EaqecCode& ec);

/// [[n, 2k - n, d]] from a dual-containing code.
QecCode css_dual(const RepeatedRootCode& c);
/// [[n, k - k', min(d, d(inner^perp))]] for inner contained in c.
QecCode css(const RepeatedRootCode& c, const RepeatedRootCode& inner);
/// [[n, k + k' - n, min(d, ceil((q+1) d' / q))]] for C^perp in C in outer, k' > k.
QecCode steane(const RepeatedRootCode& c, const RepeatedRootCode& outer);
/// [[n, k - l, d; n - k - l]] with l the hull dimension.
EaqecCode eaqec(const RepeatedRootCode& c);

/// 2k - n summed family by family from the exponents and coset sizes.
std::int64_t css_dim_by_families(const RepeatedRootCode& c);

struct QecRecord {
  ExponentVector exps;
  QecCode code;
};

/// [[n, n, 1]] from the zero vector and [[n, n-2, 2]] from a unit exponent on
/// each admissible representative, one record per exponent vector.
std::vector<QecRecord> qec_mds_scan(const FamilyPtr& family);

/// Same list obtained by enumerating every dual-containing code that
/// classify_mds accepts and keeping CSS outputs with zero Singleton slack.
std::vector<QecRecord> qec_mds_exhaustive(const FamilyPtr& family, const EnumOptions& opts = {});

}  // namespace rrcc

#endif  // RRCC_QUANTUM_HPP
