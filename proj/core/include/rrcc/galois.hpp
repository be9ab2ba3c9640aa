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

#ifndef RRCC_GALOIS_HPP
#define RRCC_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace rrcc {

/// Raw element code of F_{p^m}: the coordinates c_0..c_{m-1} with respect to
/// the power basis of the modulus, packed as sum c_i p^i. Codes are ordered
/// the same way as coordinate vectors read from the highest coordinate down,
/// so "least code" is the tie-break used throughout.
using Elem = std::uint32_t;

/// q = 2^a * b + sign with b odd and a >= 2.
struct SignDecomposition {
  int sign = 1;
  unsigned a = 0;
  std::uint64_t b = 0;

  friend bool operator==(const SignDecomposition&, const SignDecomposition&) = default;
};

SignDecomposition decompose_q(std::uint64_t q);

class FieldElement;

/// Immutable handle to F_{p^m} with p an odd prime. Copies share the same
/// arithmetic tables and are safe to use from any number of threads.
class FieldSpec {
 public:
  /// Largest field order for which tables are built.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

  /// Builds F_{p^m}. For m > 1 the modulus is the least monic irreducible
  /// polynomial of degree m over F_p (coefficients compared as codes).
  static FieldSpec build(std::uint32_t p, std::uint32_t m = 1);

  std::uint32_t p() const noexcept;
  std::uint32_t m() const noexcept;
  std::uint64_t q() const noexcept;
  /// Monic modulus over F_p, constant term first; {0, 1} (i.e. x) when m = 1.
  const std::vector<std::uint32_t>& modulus() const noexcept;
  std::string name() const;

  static constexpr Elem zero() noexcept { return 0; }
  static constexpr Elem one() noexcept { return 1; }

  bool contains(Elem a) const noexcept { return a < q(); }
  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws PreconditionError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept;
  std::vector<std::uint32_t> coords(Elem a) const;
  Elem from_coords(std::span<const std::uint32_t> c) const;

  /// The primitive element w used for discrete logs (least code of order q-1).
  Elem primitive() const noexcept;
  /// Discrete log base primitive(); throws on zero.
  std::uint64_t log(Elem a) const;
  /// primitive()^k.
  Elem exp(std::uint64_t k) const noexcept;
  std::uint64_t order(Elem a) const;

  FieldElement element(Elem code) const;

  friend bool operator==(const FieldSpec& x, const FieldSpec& y) noexcept;

 private:
  struct Impl;
  explicit FieldSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Value type pairing a code with its field; arithmetic rejects operands from
/// different fields.
class FieldElement {
 public:
  FieldElement(FieldSpec field, Elem code);

  const FieldSpec& field() const noexcept { return field_; }
  Elem code() const noexcept { return code_; }
  std::vector<std::uint32_t> coords() const { return field_.coords(code_); }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  std::uint64_t order() const { return field_.order(code_); }

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x);
  friend bool operator==(const FieldElement& x, const FieldElement& y);

 private:
  FieldSpec field_;
  Elem code_;
};

FieldElement primitive_element(const FieldSpec& f);

/// w^((q-1)/n) for the primitive element w; throws PreconditionError unless
/// n divides q - 1.
FieldElement unity_root(const FieldSpec& f, std::uint64_t n);

}  // namespace rrcc

#endif  // RRCC_GALOIS_HPP
