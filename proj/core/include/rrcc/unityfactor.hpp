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

#ifndef RRCC_UNITYFACTOR_HPP
#define RRCC_UNITYFACTOR_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "rrcc/cosets.hpp"
#include "rrcc/galois.hpp"
#include "rrcc/numtheory.hpp"
#include "rrcc/polyring.hpp"

namespace rrcc {

/// Degree-t extension base[y]/(F(y)) of a FieldSpec. F is the least monic
/// irreducible of degree t over the base (coefficients compared as base codes,
/// constant term least significant). Values are coefficient vectors of length t.
class ExtensionField {
 public:
  using Value = std::vector<Elem>;

  ExtensionField(FieldSpec base, unsigned t);

  const FieldSpec& base() const noexcept { return base_; }
  unsigned degree() const noexcept { return t_; }
  /// Monic modulus over the base, constant term first (length t + 1).
  const std::vector<Elem>& modulus() const noexcept { return mod_; }
  /// q^t; requires q^t < 2^127.
  u128 order() const noexcept { return order_; }

  Value zero() const { return Value(t_, 0); }
  Value one() const;
  Value from_base(Elem c) const;
  bool in_base(const Value& v) const;
  Value add(const Value& a, const Value& b) const;
  Value sub(const Value& a, const Value& b) const;
  Value mul(const Value& a, const Value& b) const;
  Value pow(Value a, u128 e) const;
  /// Value whose coordinates are the base-q digits of code (least significant first).
  Value from_index(u128 code) const;

 private:
  FieldSpec base_;
  unsigned t_;
  std::vector<Elem> mod_;
  u128 order_;
};

/// Splitting data for x^(2^r) - 1 over a base field.
struct RootSystem {
  FieldSpec base;
  unsigned r;
  std::shared_ptr<const ExtensionField> ext;
  /// Primitive 2^r-th root of unity in ext.
  ExtensionField::Value beta;
  /// True when beta was taken from the least element whose power has order
  /// 2^r, because q^t - 1 was too large to factor.
  bool beta_fallback = false;
  CosetTable cosets;
  /// m_s for each canonical representative, aligned with cosets.reps().
  std::vector<Poly> minpolys;

  const Poly& minpoly(std::uint32_t rep) const { return minpolys[cosets.index_of(rep)]; }
};

RootSystem root_system(const FieldSpec& base, unsigned r);

/// prod_{i in C_s} (x - beta^i), verified to have base-field coefficients.
Poly minimal_poly(const RootSystem& rs, std::uint32_t s);

/// (rep, m_rep) for every canonical representative, sorted by rep.
std::vector<std::pair<std::uint32_t, Poly>> factor_unity(const FieldSpec& base, unsigned r);

}  // namespace rrcc

#endif  // RRCC_UNITYFACTOR_HPP
