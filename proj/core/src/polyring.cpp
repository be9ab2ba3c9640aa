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

#include "rrcc/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

#include "rrcc/errors.hpp"
#include "rrcc/numtheory.hpp"

namespace rrcc {

Poly::Poly(FieldSpec field) : field_(std::move(field)) {}

Poly::Poly(FieldSpec field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (Elem c : c_) {
    if (!field_.contains(c)) throw PreconditionError("coefficient out of range for " + field_.name());
  }
  trim();
}

Poly Poly::from_ints(const FieldSpec& field, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Elem> c;
  c.reserve(coeffs.size());
  for (auto v : coeffs) c.push_back(field.from_int(v));
  return Poly(field, std::move(c));
}

Poly Poly::constant(const FieldSpec& field, Elem c) { return Poly(field, {c}); }

Poly Poly::monomial(const FieldSpec& field, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Poly(field, std::move(v));
}

Poly Poly::x_pow_minus_one(const FieldSpec& field, std::size_t n) {
  std::vector<Elem> v(n + 1, 0);
  v[0] = field.neg(1);
  v[n] = 1;
  return Poly(field, std::move(v));
}

void Poly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scale(field_.inv(c_.back()));
}

Poly Poly::scale(Elem c) const {
  Poly out(field_);
  if (c == 0) return out;
  out.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = field_.mul(c_[i], c);
  return out;
}

Poly Poly::shift(std::size_t k) const {
  Poly out(field_);
  if (c_.empty()) return out;
  out.c_.assign(k, 0);
  out.c_.insert(out.c_.end(), c_.begin(), c_.end());
  return out;
}

Poly Poly::pow(std::uint64_t e) const {
  Poly result = constant(field_, 1), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

namespace {
const FieldSpec& same_field(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) {
    throw PreconditionError("mixed-field polynomial arithmetic: " + a.field().name() + " and " + b.field().name());
  }
  return a.field();
}
}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  const FieldSpec& f = same_field(a, b);
  std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a[i], b[i]);
  return Poly(f, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  const FieldSpec& f = same_field(a, b);
  std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a[i], b[i]);
  return Poly(f, std::move(c));
}

Poly operator-(const Poly& a) {
  Poly out(a.field_);
  out.c_.resize(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) out.c_[i] = a.field_.neg(a.c_[i]);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  const FieldSpec& f = same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, 0);
  if (f.m() == 1) {
    // Prime field: accumulate in 64 bits and reduce once per slot.
    const std::uint64_t p = f.p();
    std::vector<std::uint64_t> acc(c.size(), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        acc[i + j] += std::uint64_t{a.c_[i]} * b.c_[j];
        if (acc[i + j] >= (std::uint64_t{1} << 62)) acc[i + j] %= p;
      }
    }
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<Elem>(acc[i] % p);
  } else {
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a.c_[i], b.c_[j]));
    }
  }
  return Poly(f, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

DivMod divmod(const Poly& a, const Poly& b) {
  const FieldSpec& f = same_field(a, b);
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Elem lead_inv = f.inv(bc.back());
  std::vector<Elem> q(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    Elem c = r[i];
    if (c == 0) continue;
    c = f.mul(c, lead_inv);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bc[j]));
  }
  r.resize(db);
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }

bool divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return (a % d).is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
  same_field(a, b);
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd of two zero polynomials");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  Poly g = gcd(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  return ((a / g) * b).monic();
}

Poly reciprocal(const Poly& h) {
  if (h.is_zero() || h[0] == 0) throw PreconditionError("reciprocal undefined: constant term is zero");
  std::vector<Elem> c(h.coeffs().rbegin(), h.coeffs().rend());
  return Poly(h.field(), std::move(c)).monic();
}

Elem eval(const Poly& a, Elem x) {
  const FieldSpec& f = a.field();
  Elem acc = 0;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) acc = f.add(f.mul(acc, x), a.coeffs()[i]);
  return acc;
}

FieldElement eval(const Poly& a, const FieldElement& x) {
  if (!(a.field() == x.field())) throw PreconditionError("evaluation point lies in a different field");
  return a.field().element(eval(a, x.code()));
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(base.field(), 1) % m, b = base % m;
  while (e) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

namespace {
// x^(q^k) mod f, by k successive q-th powerings.
Poly frobenius(const Poly& f, unsigned k) {
  Poly cur = Poly::x(f.field()) % f;
  for (unsigned i = 0; i < k; ++i) cur = pow_mod(cur, f.field().q(), f);
  return cur;
}
}  // namespace

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const unsigned n = static_cast<unsigned>(f.degree());
  const Poly x = Poly::x(f.field());
  if (!((frobenius(f, n) - x) % f).is_zero()) return false;
  for (std::uint64_t r : prime_factors(n)) {
    Poly h = frobenius(f, n / static_cast<unsigned>(r)) - x;
    if (gcd(f, h).degree() != 0) return false;
  }
  return true;
}

std::string elem_to_string(const FieldSpec& f, Elem c) {
  if (c < f.p()) return std::to_string(c);
  std::uint64_t k = f.log(c);
  return k == 1 ? std::string("w") : "w^" + std::to_string(k);
}

std::string to_string(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += elem_to_string(a.field(), c[i]);
      continue;
    }
    if (c[i] != 1) out += elem_to_string(a.field(), c[i]) + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const FieldSpec& f, std::string_view s) : f_(f), s_(s) {}

  Poly parse_all() {
    Poly p = expr();
    ws();
    if (i_ != s_.size()) fail("unexpected character '" + std::string(1, s_[i_]) + "'");
    return p;
  }

  // Returns nullopt when the text is not a pure product at top level.
  std::optional<std::vector<PolyFactor>> product() {
    std::vector<PolyFactor> out;
    ws();
    if (i_ == s_.size()) fail("empty polynomial");
    while (true) {
      ws();
      if (i_ == s_.size()) break;
      if (s_[i_] == '+' || s_[i_] == '-') return std::nullopt;
      std::size_t start = i_;
      auto [base, e] = atom_pow();
      out.push_back(PolyFactor{std::move(base), e, start, std::string(trim_view(s_.substr(start, i_ - start)))});
      ws();
      if (i_ < s_.size() && s_[i_] == '*') ++i_;
    }
    return out;
  }

 private:
  static std::string_view trim_view(std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(i_, msg);
  }

  void ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool starts_atom() {
    ws();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'w' || c == '(';
  }

  std::uint64_t integer() {
    ws();
    if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected integer");
    std::uint64_t v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(s_[i_] - '0');
      if (v > (UINT64_MAX - d) / 10) fail("integer too large");
      v = v * 10 + d;
      ++i_;
    }
    return v;
  }

  Poly expr() {
    ws();
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
      neg = s_[i_] == '-';
      ++i_;
    }
    Poly acc = term();
    if (neg) acc = -acc;
    while (true) {
      ws();
      if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) break;
      bool sub = s_[i_] == '-';
      ++i_;
      Poly t = term();
      acc = sub ? acc - t : acc + t;
    }
    return acc;
  }

  Poly term() {
    if (!starts_atom()) fail("expected a term");
    auto [b, e] = atom_pow();
    Poly acc = b.pow(e);
    while (true) {
      ws();
      if (i_ < s_.size() && s_[i_] == '*') {
        ++i_;
        if (!starts_atom()) fail("expected a factor after '*'");
      } else if (!starts_atom()) {
        break;
      }
      auto [b2, e2] = atom_pow();
      acc = acc * b2.pow(e2);
    }
    return acc;
  }

  std::pair<Poly, std::uint64_t> atom_pow() {
    Poly base = atom();
    ws();
    std::uint64_t e = 1;
    if (i_ < s_.size() && s_[i_] == '^') {
      ++i_;
      ws();
      if (i_ < s_.size() && s_[i_] == '(') {
        ++i_;
        e = integer();
        ws();
        if (i_ >= s_.size() || s_[i_] != ')') fail("expected ')'");
        ++i_;
      } else {
        e = integer();
      }
    }
    return {std::move(base), e};
  }

  Poly atom() {
    ws();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Poly inner = expr();
      ws();
      if (i_ >= s_.size() || s_[i_] != ')') fail("expected ')'");
      ++i_;
      return inner;
    }
    if (c == 'x') {
      ++i_;
      return Poly::x(f_);
    }
    if (c == 'w') {
      ++i_;
      return Poly::constant(f_, f_.primitive());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = integer();
      return Poly::constant(f_, static_cast<Elem>(v % f_.p()));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const FieldSpec& f_;
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Poly parse_poly(const FieldSpec& f, std::string_view text) { return Parser(f, text).parse_all(); }

std::vector<PolyFactor> parse_product(const FieldSpec& f, std::string_view text) {
  auto factors = Parser(f, text).product();
  if (factors) return *factors;
  Poly whole = parse_poly(f, text);
  return {PolyFactor{std::move(whole), 1, 0, std::string(text)}};
}

}  // namespace rrcc
