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

#include "rrcc/cycliccode.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "rrcc/errors.hpp"
#include "rrcc/numtheory.hpp"

namespace rrcc {

CodeFamily::CodeFamily(FieldSpec field, unsigned r, unsigned s)
    : field_(std::move(field)),
      r_(r),
      s_(s),
      n_(0),
      ps_(0),
      dec_(decompose_q(field_.q())),
      roots_(root_system(field_, r)),
      structured_(structured_reps(field_.q(), r)) {
  if (r < 1) throw PreconditionError("r must be at least 1");
  if (!checked_pow(field_.p(), s, ps_) || ps_ > kMaxLength || (ps_ << r) > kMaxLength) {
    throw PreconditionError("code length 2^" + std::to_string(r) + "*" + std::to_string(field_.p()) + "^" +
                            std::to_string(s) + " exceeds the supported maximum 2^24");
  }
  n_ = ps_ << r;
  if (structured_.reps != roots_.cosets.reps()) {
    throw ConsistencyError("closed-form representative set disagrees with direct coset computation for q = " +
                           std::to_string(field_.q()) + ", r = " + std::to_string(r));
  }
  const auto& t = roots_.cosets;
  degrees_.reserve(t.size());
  neg_.reserve(t.size());
  for (std::size_t h = 0; h < t.size(); ++h) {
    degrees_.push_back(static_cast<unsigned>(t.cosets()[h].size()));
    neg_.push_back(t.index_of(negate_rep(t, t.reps()[h])));
  }
}

std::size_t CodeFamily::index_of_rep(std::uint32_t rep) const {
  if (!cosets().is_rep(rep)) {
    std::string list;
    for (std::uint32_t x : reps()) list += (list.empty() ? "" : ",") + std::to_string(x);
    throw PreconditionError("unknown representative " + std::to_string(rep) + " (valid: " + list + ")");
  }
  return cosets().index_of(rep);
}

FamilyPtr code_family(const FieldSpec& field, unsigned r, unsigned s) {
  using Key = std::tuple<std::uint32_t, std::vector<std::uint32_t>, unsigned, unsigned>;
  static std::mutex mu;
  static std::map<Key, FamilyPtr> cache;
  Key key{field.p(), field.modulus(), r, s};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto fam = std::make_shared<const CodeFamily>(field, r, s);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(key), std::move(fam)).first->second;
}

RepeatedRootCode::RepeatedRootCode(FamilyPtr family, ExponentVector exps)
    : family_(std::move(family)), exps_(std::move(exps)) {
  const CodeFamily& f = *family_;
  if (exps_.size() != f.size()) {
    throw PreconditionError("exponent vector has " + std::to_string(exps_.size()) + " entries, expected " +
                            std::to_string(f.size()));
  }
  std::uint64_t deg = 0;
  for (std::size_t h = 0; h < exps_.size(); ++h) {
    if (exps_[h] > f.ps()) {
      throw PreconditionError("exponent " + std::to_string(exps_[h]) + " at representative " + std::to_string(f.rep(h)) +
                              " exceeds p^s = " + std::to_string(f.ps()));
    }
    deg += exps_[h] * f.degree(h);
  }
  k_ = f.n() - deg;
}

Poly RepeatedRootCode::generator() const {
  Poly g = Poly::constant(family_->field(), 1);
  for (std::size_t h = 0; h < exps_.size(); ++h) {
    if (exps_[h]) g = g * family_->minpoly(h).pow(exps_[h]);
  }
  return g;
}

std::string RepeatedRootCode::factored() const {
  std::string out;
  for (std::size_t h = 0; h < exps_.size(); ++h) {
    if (!exps_[h]) continue;
    if (!out.empty()) out += "*";
    out += "(" + to_string(family_->minpoly(h)) + ")";
    if (exps_[h] > 1) out += "^" + std::to_string(exps_[h]);
  }
  return out.empty() ? "1" : out;
}

RepeatedRootCode code_build(FamilyPtr family, ExponentVector exps) {
  return RepeatedRootCode(std::move(family), std::move(exps));
}

namespace {

// Strips every minimal polynomial out of g, accumulating multiplicities.
Poly strip_minpolys(const CodeFamily& f, Poly g, ExponentVector& exps) {
  for (std::size_t h = 0; h < f.size() && g.degree() > 0; ++h) {
    while (g.degree() >= f.minpoly(h).degree()) {
      DivMod dm = divmod(g, f.minpoly(h));
      if (!dm.remainder.is_zero()) break;
      g = std::move(dm.quotient);
      ++exps[h];
    }
  }
  return g;
}

}  // namespace

ExponentVector exponents_of(const CodeFamily& f, const Poly& g) {
  if (g.is_zero()) throw PreconditionError("the zero polynomial is not a generator");
  ExponentVector exps(f.size(), 0);
  Poly rest = strip_minpolys(f, g.monic(), exps);
  if (rest.degree() > 0) {
    throw PreconditionError(to_string(g) + " does not divide x^" + std::to_string(f.n()) + " - 1");
  }
  for (std::size_t h = 0; h < exps.size(); ++h) {
    if (exps[h] > f.ps()) throw PreconditionError(to_string(g) + " does not divide x^" + std::to_string(f.n()) + " - 1");
  }
  return exps;
}

ExponentVector parse_generator(const CodeFamily& f, std::string_view text) {
  ExponentVector exps(f.size(), 0);
  for (PolyFactor& factor : parse_product(f.field(), text)) {
    if (factor.base.is_zero()) throw ParseError(factor.position, "zero factor '" + factor.text + "' in generator");
    if (factor.base.degree() == 0 || factor.exponent == 0) continue;
    ExponentVector local(f.size(), 0);
    Poly rest = strip_minpolys(f, factor.base.monic(), local);
    if (rest.degree() > 0) {
      const std::string what = "factor '" + factor.text + "' at offset " + std::to_string(factor.position);
      const std::string target = "x^" + std::to_string(f.two_r()) + " - 1 over " + f.field().name();
      if (is_irreducible(rest)) throw PreconditionError(what + " does not divide " + target);
      throw PreconditionError(what + " is not irreducible over " + f.field().name() + " and does not divide " + target);
    }
    for (std::size_t h = 0; h < exps.size(); ++h) {
      if (local[h] && factor.exponent > (f.ps() - exps[h]) / local[h]) {
        throw PreconditionError("exponent of (" + to_string(f.minpoly(h)) + ") exceeds p^s = " + std::to_string(f.ps()) +
                                " at offset " + std::to_string(factor.position));
      }
      exps[h] += local[h] * factor.exponent;
    }
  }
  return exps;
}

ExponentVector parse_exponent_spec(const CodeFamily& f, std::string_view text) {
  ExponentVector exps(f.size(), 0);
  std::size_t i = 0;
  auto ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> std::uint64_t {
    ws();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError(i, "expected integer");
    }
    std::uint64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (v > UINT64_MAX / 10 - 9) throw ParseError(i, "integer too large");
      v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
    }
    return v;
  };
  ws();
  if (i == text.size()) return exps;
  std::vector<bool> seen(f.size(), false);
  while (true) {
    std::size_t at = i;
    std::uint64_t rep = number();
    ws();
    if (i >= text.size() || text[i] != ':') throw ParseError(i, "expected ':'");
    ++i;
    std::uint64_t j = number();
    if (rep > UINT32_MAX) throw PreconditionError("unknown representative " + std::to_string(rep));
    std::size_t h = f.index_of_rep(static_cast<std::uint32_t>(rep));
    if (seen[h]) throw ParseError(at, "representative " + std::to_string(rep) + " given twice");
    seen[h] = true;
    if (j > f.ps()) {
      throw PreconditionError("exponent " + std::to_string(j) + " at representative " + std::to_string(rep) +
                              " exceeds p^s = " + std::to_string(f.ps()));
    }
    exps[h] = j;
    ws();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError(i, "expected ','");
    ++i;
  }
  return exps;
}

Poly dual_generator_reciprocal(const RepeatedRootCode& c) {
  const CodeFamily& f = c.family();
  Poly check = Poly::x_pow_minus_one(f.field(), f.n()) / c.generator();
  return reciprocal(check);
}

RepeatedRootCode dual(const RepeatedRootCode& c) {
  const CodeFamily& f = c.family();
  if (f.r() <= 2) return RepeatedRootCode(c.family_ptr(), exponents_of(f, dual_generator_reciprocal(c)));
  ExponentVector out(f.size());
  for (std::size_t h = 0; h < f.size(); ++h) out[h] = f.ps() - c.j(f.neg(h));
  return RepeatedRootCode(c.family_ptr(), std::move(out));
}

RepeatedRootCode hull(const RepeatedRootCode& c) {
  RepeatedRootCode d = dual(c);
  ExponentVector out(c.exps().size());
  for (std::size_t h = 0; h < out.size(); ++h) out[h] = std::max(c.j(h), d.j(h));
  return RepeatedRootCode(c.family_ptr(), std::move(out));
}

Poly hull_generator_lcm(const RepeatedRootCode& c) { return lcm(c.generator(), dual_generator_reciprocal(c)); }

std::uint64_t hull_dim_by_families(const RepeatedRootCode& c) {
  const CodeFamily& f = c.family();
  const CosetTable& t = f.cosets();
  const std::uint32_t two_r = f.two_r();
  std::uint64_t deg = 0;
  for (const StructuredEntry& e : f.structured().entries) {
    const std::uint64_t u = e.residue;
    const std::uint64_t period = two_r / std::gcd<std::uint64_t>(u == 0 ? two_r : u, two_r);
    const std::uint64_t size = multiplicative_order(f.field().q() % period, period);
    const std::uint64_t j = c.j(t.index_of(u));
    const std::uint64_t j_neg = c.j(t.index_of((two_r - u) % two_r));
    deg += size * std::max(j, f.ps() - j_neg);
  }
  return f.n() - deg;
}

bool is_dual_containing(const RepeatedRootCode& c) {
  const CodeFamily& f = c.family();
  for (std::size_t h = 0; h < f.size(); ++h) {
    const std::size_t g = f.neg(h);
    if (g == h ? 2 * c.j(h) > f.ps() : c.j(h) + c.j(g) > f.ps()) return false;
  }
  return true;
}

bool dual_containing_by_divisibility(const RepeatedRootCode& c) {
  return divides(c.generator(), dual_generator_reciprocal(c));
}

BigInt count_dual_containing(const CodeFamily& f) {
  const BigInt P = f.ps();
  const BigInt pair = P + 2, half = (P + 1) / 2;
  const unsigned r = f.r();
  if (r == 1) {
    // Both residues mod 2 are self-paired.
    BigInt count = 0;
    for (std::uint64_t j0 = 0; j0 <= f.ps(); ++j0) {
      for (std::uint64_t j1 = 0; j1 <= f.ps(); ++j1) {
        if (2 * j0 <= f.ps() && 2 * j1 <= f.ps()) ++count;
      }
    }
    return count;
  }
  using boost::multiprecision::pow;
  const unsigned a = f.dec().a;
  if (f.dec().sign == 1) {
    if (r <= a) {
      const unsigned e = 1u << (r - 1);
      return pow(pair, e - 1) * pow(half, e + 1);
    }
    const unsigned e = (1u << (a - 1)) + (r - a) * (1u << (a - 2));
    return pow(pair, e - 1) * pow(half, e + 1);
  }
  if (a == 2) return pow(pair, r - 2) * pow(half, r + 1);
  const unsigned lo = std::min(r, a), extra = r > a ? r - a : 0;
  return pow(pair, extra * (1u << (a - 2))) * pow(half, (1u << (lo - 1)) + extra * (1u << (a - 2)) + 1);
}

BigInt count_dual_containing_by_pairs(const CodeFamily& f) {
  unsigned pairs = 0, self = 0;
  for (std::size_t h = 0; h < f.size(); ++h) {
    if (f.neg(h) == h) {
      ++self;
    } else if (f.neg(h) > h) {
      ++pairs;
    }
  }
  const BigInt P = f.ps();
  using boost::multiprecision::pow;
  return pow(BigInt(P + 2), pairs) * pow(BigInt((P + 1) / 2), pairs + self);
}

bool is_subcode(const RepeatedRootCode& c, const RepeatedRootCode& outer) {
  if (c.family_ptr() != outer.family_ptr()) {
    const CodeFamily &a = c.family(), &b = outer.family();
    if (!(a.field() == b.field()) || a.r() != b.r() || a.s() != b.s()) {
      throw PreconditionError("codes live in different ambient spaces");
    }
  }
  for (std::size_t h = 0; h < c.exps().size(); ++h) {
    if (outer.j(h) > c.j(h)) return false;
  }
  return true;
}

}  // namespace rrcc
