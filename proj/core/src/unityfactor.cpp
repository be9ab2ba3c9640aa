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

#include "rrcc/unityfactor.hpp"

#include <string>

#include "rrcc/errors.hpp"

namespace rrcc {

ExtensionField::ExtensionField(FieldSpec base, unsigned t) : base_(std::move(base)), t_(t) {
  if (t < 1) throw PreconditionError("extension degree must be at least 1");
  order_ = 1;
  for (unsigned i = 0; i < t; ++i) {
    if (order_ > (u128{1} << 126) / base_.q()) throw PreconditionError("extension field order exceeds 2^126");
    order_ *= base_.q();
  }
  if (t == 1) {
    mod_ = {0, 1};
    return;
  }
  const u128 count = order_;
  for (u128 code = 1; code < count; ++code) {
    std::vector<Elem> c = from_index(code);
    if (c[0] == 0) continue;
    c.push_back(1);
    if (is_irreducible(Poly(base_, c))) {
      mod_ = std::move(c);
      return;
    }
  }
  throw ConsistencyError("no irreducible polynomial of degree " + std::to_string(t) + " found over " + base_.name());
}

ExtensionField::Value ExtensionField::one() const { return from_base(1); }

ExtensionField::Value ExtensionField::from_base(Elem c) const {
  Value v(t_, 0);
  v[0] = c;
  return v;
}

bool ExtensionField::in_base(const Value& v) const {
  for (unsigned i = 1; i < t_; ++i) {
    if (v[i] != 0) return false;
  }
  return true;
}

ExtensionField::Value ExtensionField::add(const Value& a, const Value& b) const {
  Value out(t_);
  for (unsigned i = 0; i < t_; ++i) out[i] = base_.add(a[i], b[i]);
  return out;
}

ExtensionField::Value ExtensionField::sub(const Value& a, const Value& b) const {
  Value out(t_);
  for (unsigned i = 0; i < t_; ++i) out[i] = base_.sub(a[i], b[i]);
  return out;
}

ExtensionField::Value ExtensionField::mul(const Value& a, const Value& b) const {
  if (t_ == 1) return {base_.mul(a[0], b[0])};
  std::vector<Elem> prod(2 * t_ - 1, 0);
  for (unsigned i = 0; i < t_; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < t_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
  }
  // Reduce with the monic modulus: y^t = -sum mod_[k] y^k.
  for (std::size_t i = prod.size(); i-- > t_;) {
    Elem c = prod[i];
    if (!c) continue;
    for (unsigned k = 0; k < t_; ++k) prod[i - t_ + k] = base_.sub(prod[i - t_ + k], base_.mul(c, mod_[k]));
  }
  prod.resize(t_);
  return prod;
}

ExtensionField::Value ExtensionField::pow(Value a, u128 e) const {
  Value r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

ExtensionField::Value ExtensionField::from_index(u128 code) const {
  Value v(t_, 0);
  for (unsigned i = 0; i < t_; ++i) {
    v[i] = static_cast<Elem>(code % base_.q());
    code /= base_.q();
  }
  return v;
}

RootSystem root_system(const FieldSpec& base, unsigned r) {
  CosetTable cosets(r, base.q());
  const std::uint64_t n = cosets.n();
  const unsigned t = static_cast<unsigned>(multiplicative_order(base.q() % n, n));
  auto ext = std::make_shared<const ExtensionField>(base, t);
  const u128 qt1 = ext->order() - 1;
  RootSystem rs{base, r, ext, {}, false, std::move(cosets), {}};

  if (t == 1) {
    rs.beta = ext->from_base(unity_root(base, n).code());
  } else if (qt1 <= UINT64_MAX) {
    const auto factors = prime_factors(static_cast<std::uint64_t>(qt1));
    for (u128 code = 1;; ++code) {
      ExtensionField::Value g = ext->from_index(code);
      bool primitive = true;
      for (std::uint64_t f : factors) {
        if (ext->pow(g, qt1 / f) == ext->one()) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        rs.beta = ext->pow(g, qt1 / n);
        break;
      }
    }
  } else {
    rs.beta_fallback = true;
    for (u128 code = 1;; ++code) {
      ExtensionField::Value y = ext->pow(ext->from_index(code), qt1 / n);
      if (!(ext->pow(y, n / 2) == ext->one())) {
        rs.beta = std::move(y);
        break;
      }
    }
  }

  rs.minpolys.reserve(rs.cosets.size());
  for (std::uint32_t rep : rs.cosets.reps()) rs.minpolys.push_back(minimal_poly(rs, rep));
  return rs;
}

Poly minimal_poly(const RootSystem& rs, std::uint32_t s) {
  if (!rs.cosets.is_rep(s)) {
    throw PreconditionError(std::to_string(s) + " is not a canonical coset representative mod " + std::to_string(rs.cosets.n()));
  }
  const ExtensionField& ext = *rs.ext;
  std::vector<ExtensionField::Value> acc{ext.one()};
  for (std::uint32_t i : rs.cosets.coset_of(s)) {
    ExtensionField::Value root = ext.pow(rs.beta, i);
    std::vector<ExtensionField::Value> next(acc.size() + 1, ext.zero());
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] = ext.add(next[k + 1], acc[k]);
      next[k] = ext.sub(next[k], ext.mul(acc[k], root));
    }
    acc = std::move(next);
  }
  std::vector<Elem> coeffs;
  coeffs.reserve(acc.size());
  for (const auto& c : acc) {
    if (!ext.in_base(c)) {
      throw ConsistencyError("minimal polynomial of coset " + std::to_string(s) + " has a coefficient outside " + rs.base.name());
    }
    coeffs.push_back(c[0]);
  }
  return Poly(rs.base, std::move(coeffs));
}

std::vector<std::pair<std::uint32_t, Poly>> factor_unity(const FieldSpec& base, unsigned r) {
  RootSystem rs = root_system(base, r);
  std::vector<std::pair<std::uint32_t, Poly>> out;
  Poly prod = Poly::constant(base, 1);
  for (std::size_t i = 0; i < rs.minpolys.size(); ++i) {
    out.emplace_back(rs.cosets.reps()[i], rs.minpolys[i]);
    prod = prod * rs.minpolys[i];
  }
  if (!(prod == Poly::x_pow_minus_one(base, rs.cosets.n()))) {
    throw ConsistencyError("product of minimal polynomials differs from x^" + std::to_string(rs.cosets.n()) + " - 1");
  }
  return out;
}

}  // namespace rrcc
