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

#ifndef RRCC_COSETS_HPP
#define RRCC_COSETS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rrcc/galois.hpp"

namespace rrcc {

/// q-cyclotomic cosets modulo n = 2^r. The canonical representative of a
/// coset is its minimum; cosets are listed in increasing order of that minimum.
class CosetTable {
 public:
  static constexpr unsigned kMaxR = 20;

  CosetTable(unsigned r, std::uint64_t q);

  unsigned r() const noexcept { return r_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint64_t q() const noexcept { return q_; }
  const std::vector<std::vector<std::uint32_t>>& cosets() const noexcept { return cosets_; }
  /// Canonical representatives, ascending.
  const std::vector<std::uint32_t>& reps() const noexcept { return reps_; }
  std::size_t size() const noexcept { return reps_.size(); }

  std::uint32_t rep_of(std::uint64_t residue) const { return reps_[index_[residue % n_]]; }
  /// Position of the coset containing the residue.
  std::size_t index_of(std::uint64_t residue) const { return index_[residue % n_]; }
  bool is_rep(std::uint32_t x) const noexcept { return x < n_ && reps_[index_[x]] == x; }
  const std::vector<std::uint32_t>& coset_of(std::uint64_t residue) const { return cosets_[index_of(residue)]; }

 private:
  unsigned r_;
  std::uint32_t n_;
  std::uint64_t q_;
  std::vector<std::vector<std::uint32_t>> cosets_;
  std::vector<std::uint32_t> reps_;
  std::vector<std::uint32_t> index_;
};

inline CosetTable cyclotomic_cosets(unsigned r, std::uint64_t q) { return CosetTable(r, q); }

/// One residue of a closed-form representative family, i.e. 2^{r-i} * mult.
struct StructuredEntry {
  char family;          // 'B' for the fixed residues 0, 2^{r-1}, 2^{r-2}; else 'D', 'O' or 'E'
  unsigned i;           // family index (0 for 'B')
  std::int64_t mult;    // signed multiplier, +-3^v
  std::uint32_t residue;
  std::uint32_t rep;    // canonical representative of residue's coset
};

struct StructuredReps {
  SignDecomposition dec;
  unsigned r = 0;
  /// True when r <= 2 and the set came from direct coset computation.
  bool direct = false;
  /// The assembled T_n in construction order.
  std::vector<StructuredEntry> entries;
  /// E_i families for sign = -1, kept for cross-checking against O_i.
  std::vector<StructuredEntry> e_families;
  /// Canonical representatives hit by entries, ascending.
  std::vector<std::uint32_t> reps;
};

StructuredReps structured_reps(std::uint64_t q, unsigned r);

/// Canonical representative of the coset containing -rep.
std::uint32_t negate_rep(const CosetTable& t, std::uint32_t rep);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

ValidationReport validate_structured(const StructuredReps& s, const CosetTable& t);

}  // namespace rrcc

#endif  // RRCC_COSETS_HPP
