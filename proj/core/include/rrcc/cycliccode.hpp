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

#ifndef RRCC_CYCLICCODE_HPP
#define RRCC_CYCLICCODE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rrcc/cosets.hpp"
#include "rrcc/galois.hpp"
#include "rrcc/polyring.hpp"
#include "rrcc/unityfactor.hpp"

namespace rrcc {

using BigInt = boost::multiprecision::cpp_int;

/// Ambient data shared by every cyclic code of length 2^r * p^s over one
/// field: cosets, minimal polynomials and the negation pairing.
class CodeFamily {
 public:
  /// Largest supported code length.
  static constexpr std::uint64_t kMaxLength = std::uint64_t{1} << 24;

  CodeFamily(FieldSpec field, unsigned r, unsigned s);

  const FieldSpec& field() const noexcept { return field_; }
  unsigned r() const noexcept { return r_; }
  unsigned s() const noexcept { return s_; }
  std::uint64_t n() const noexcept { return n_; }
  /// p^s, the multiplicity of every irreducible factor of x^n - 1.
  std::uint64_t ps() const noexcept { return ps_; }
  std::uint32_t two_r() const noexcept { return roots_.cosets.n(); }
  const SignDecomposition& dec() const noexcept { return dec_; }
  const RootSystem& roots() const noexcept { return roots_; }
  const CosetTable& cosets() const noexcept { return roots_.cosets; }
  const StructuredReps& structured() const noexcept { return structured_; }

  std::size_t size() const noexcept { return roots_.cosets.size(); }
  const std::vector<std::uint32_t>& reps() const noexcept { return roots_.cosets.reps(); }
  std::uint32_t rep(std::size_t h) const { return reps()[h]; }
  /// deg m_h, i.e. the coset size.
  unsigned degree(std::size_t h) const { return degrees_[h]; }
  /// Index of the representative of -rep(h).
  std::size_t neg(std::size_t h) const { return neg_[h]; }
  const Poly& minpoly(std::size_t h) const { return roots_.minpolys[h]; }
  /// Throws PreconditionError for non-representatives.
  std::size_t index_of_rep(std::uint32_t rep) const;

 private:
  FieldSpec field_;
  unsigned r_, s_;
  std::uint64_t n_, ps_;
  SignDecomposition dec_;
  RootSystem roots_;
  StructuredReps structured_;
  std::vector<unsigned> degrees_;
  std::vector<std::size_t> neg_;
};

using FamilyPtr = std::shared_ptr<const CodeFamily>;

/// Returns a cached family for (field, r, s); thread-safe.
FamilyPtr code_family(const FieldSpec& field, unsigned r, unsigned s);

/// Exponents j_h aligned with CodeFamily::reps().
using ExponentVector = std::vector<std::uint64_t>;

/// The ideal generated by prod_h m_h(x)^{j_h} in F_q[x]/(x^n - 1).
class RepeatedRootCode {
 public:
  /// Throws PreconditionError on a wrong-length vector or j_h > p^s.
  RepeatedRootCode(FamilyPtr family, ExponentVector exps);

  const CodeFamily& family() const noexcept { return *family_; }
  const FamilyPtr& family_ptr() const noexcept { return family_; }
  const ExponentVector& exps() const noexcept { return exps_; }
  std::uint64_t j(std::size_t h) const { return exps_[h]; }
  std::uint64_t n() const noexcept { return family_->n(); }
  std::uint64_t k() const noexcept { return k_; }
  bool is_zero() const noexcept { return k_ == 0; }
  bool is_full() const noexcept { return k_ == n(); }

  /// Expanded generator polynomial (computed on each call).
  Poly generator() const;
  /// Product form such as "(x + 1)^2*(x + 8)"; "1" for the full space.
  std::string factored() const;

  friend bool operator==(const RepeatedRootCode& a, const RepeatedRootCode& b) {
    return a.family_ == b.family_ && a.exps_ == b.exps_;
  }

 private:
  FamilyPtr family_;
  ExponentVector exps_;
  std::uint64_t k_;
};

RepeatedRootCode code_build(FamilyPtr family, ExponentVector exps);

/// Parses a product of factor powers and matches it against the minimal
/// polynomials. Throws ParseError / PreconditionError on factors that are not
/// products of minimal polynomials, or on exponents above p^s.
ExponentVector parse_generator(const CodeFamily& family, std::string_view text);

/// Parses "rep:j,rep:j,..."; omitted representatives get exponent 0.
ExponentVector parse_exponent_spec(const CodeFamily& family, std::string_view text);

/// Exponent vector of a monic divisor of x^n - 1, by trial division.
ExponentVector exponents_of(const CodeFamily& family, const Poly& g);

/// C^perp. For r >= 3 by the pairing j'_h = p^s - j_{-h}; for r <= 2 through
/// the reciprocal of the check polynomial.
RepeatedRootCode dual(const RepeatedRootCode& c);
/// reciprocal((x^n - 1) / g(x)).
Poly dual_generator_reciprocal(const RepeatedRootCode& c);

/// C intersect C^perp via pointwise max of exponents.
RepeatedRootCode hull(const RepeatedRootCode& c);
/// lcm of the generators of C and C^perp.
Poly hull_generator_lcm(const RepeatedRootCode& c);
/// Hull dimension summed over the closed-form representative families, with
/// coset sizes taken from multiplicative orders.
std::uint64_t hull_dim_by_families(const RepeatedRootCode& c);

/// Per-representative inequalities: 2 j_h <= p^s on self-paired reps,
/// j_h + j_{-h} <= p^s on paired ones.
bool is_dual_containing(const RepeatedRootCode& c);
/// generator(C) divides generator(C^perp).
bool dual_containing_by_divisibility(const RepeatedRootCode& c);

/// Closed-form count of dual-containing codes in the family.
BigInt count_dual_containing(const CodeFamily& family);
/// (p^s + 2)^{#pairs} * ((p^s + 1)/2)^{#pairs + #self-paired}, from the
/// coset pairing directly.
BigInt count_dual_containing_by_pairs(const CodeFamily& family);

/// True iff c is contained in outer, i.e. outer's exponents are pointwise <= c's.
bool is_subcode(const RepeatedRootCode& c, const RepeatedRootCode& outer);

}  // namespace rrcc

#endif  // RRCC_CYCLICCODE_HPP
