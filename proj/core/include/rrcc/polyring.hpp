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

#ifndef RRCC_POLYRING_HPP
#define RRCC_POLYRING_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "rrcc/galois.hpp"

namespace rrcc {

/// Dense univariate polynomial over a FieldSpec, constant term first. The
/// coefficient vector never carries trailing zeros; the zero polynomial is
/// the empty vector.
class Poly {
 public:
  explicit Poly(FieldSpec field);
  Poly(FieldSpec field, std::vector<Elem> coeffs);

  /// Integer coefficients (constant term first), reduced into the prime field.
  static Poly from_ints(const FieldSpec& field, std::initializer_list<std::int64_t> coeffs);
  static Poly constant(const FieldSpec& field, Elem c);
  static Poly monomial(const FieldSpec& field, Elem c, std::size_t degree);
  static Poly x(const FieldSpec& field) { return monomial(field, 1, 1); }
  /// x^n - 1.
  static Poly x_pow_minus_one(const FieldSpec& field, std::size_t n);

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }

  /// Scales to leading coefficient 1; the zero polynomial is returned as is.
  Poly monic() const;
  Poly scale(Elem c) const;
  Poly shift(std::size_t k) const;
  Poly pow(std::uint64_t e) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void trim() noexcept;

  FieldSpec field_;
  std::vector<Elem> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws PreconditionError when b is zero.
DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

/// Monic gcd; throws when both inputs are zero.
Poly gcd(const Poly& a, const Poly& b);
/// Monic lcm; throws when both inputs are zero. lcm(a, 0) = 0.
Poly lcm(const Poly& a, const Poly& b);

/// h(0)^{-1} x^{deg h} h(1/x); throws PreconditionError when h(0) = 0.
Poly reciprocal(const Poly& h);

Elem eval(const Poly& a, Elem x);
FieldElement eval(const Poly& a, const FieldElement& x);

/// base^e mod m.
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m);
/// Rabin irreducibility test over the coefficient field.
bool is_irreducible(const Poly& f);

/// Canonical rendering "c*x^d + ... + c0". Coefficients are least
/// non-negative residues; unit coefficients on x terms are omitted; for
/// extension fields, coefficients outside the prime field render as w^k with
/// w the field's primitive element.
std::string to_string(const Poly& a);
std::string elem_to_string(const FieldSpec& f, Elem c);

/// Parses the rendering grammar extended with parentheses, '^' powers,
/// implicit multiplication and subtraction, e.g. "(x+1)^2(x-8)" or
/// "3x^2 + w^5*x + 1". Throws ParseError with a character offset.
Poly parse_poly(const FieldSpec& f, std::string_view text);

/// One top-level factor of a product expression.
struct PolyFactor {
  Poly base;
  std::uint64_t exponent;
  std::size_t position;  // offset of the factor in the source text
  std::string text;
};

/// Splits a product expression such as "(x+1)^2*(x+8)" into its top-level
/// factors. A text that is not a pure product is returned as one factor.
std::vector<PolyFactor> parse_product(const FieldSpec& f, std::string_view text);

}  // namespace rrcc

#endif  // RRCC_POLYRING_HPP
