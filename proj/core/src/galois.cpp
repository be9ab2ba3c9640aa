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

#include "rrcc/galois.hpp"

#include <numeric>
#include <string>

#include "rrcc/errors.hpp"
#include "rrcc/numtheory.hpp"

namespace rrcc {

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs mod_p_mul(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  trim(out);
  return out;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(pow_mod(a, p - 2, p));
}

// Remainder of a modulo the nonzero polynomial f over F_p.
Coeffs mod_p_rem(Coeffs a, const Coeffs& f, std::uint32_t p) {
  trim(a);
  std::size_t df = f.size() - 1;
  std::uint32_t lead_inv = inv_mod_p(f.back(), p);
  while (a.size() >= f.size()) {
    std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
    std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      std::uint64_t sub = std::uint64_t{c} * f[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs mod_p_gcd(Coeffs a, Coeffs b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = mod_p_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^k) mod f by repeated p-th powering.
Coeffs frobenius_power(const Coeffs& f, std::uint32_t p, unsigned k) {
  Coeffs cur = mod_p_rem({0, 1}, f, p);
  for (unsigned i = 0; i < k; ++i) {
    Coeffs base = cur, acc = {1};
    std::uint64_t e = p;
    while (e) {
      if (e & 1) acc = mod_p_rem(mod_p_mul(acc, base, p), f, p);
      base = mod_p_rem(mod_p_mul(base, base, p), f, p);
      e >>= 1;
    }
    cur = acc;
  }
  return cur;
}

Coeffs sub_x(Coeffs a, std::uint32_t p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] + p - 1) % p;
  trim(a);
  return a;
}

// Rabin's test for monic f of degree m over F_p.
bool irreducible_mod_p(const Coeffs& f, std::uint32_t p) {
  unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 1) return true;
  if (!sub_x(frobenius_power(f, p, m), p).empty()) return false;
  for (std::uint64_t r : prime_factors(m)) {
    Coeffs h = sub_x(frobenius_power(f, p, m / static_cast<unsigned>(r)), p);
    if (mod_p_gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

}  // namespace

struct FieldSpec::Impl {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint64_t q = 0;
  Coeffs modulus;
  Elem primitive = 0;
  std::vector<Elem> exp;            // size q - 1
  std::vector<std::uint32_t> log;   // size q, log[0] unused
  std::vector<std::uint32_t> pw;    // p^i, i < m

  Elem slow_mul(Elem a, Elem b) const {
    Coeffs ca(m), cb(m);
    for (std::uint32_t i = 0; i < m; ++i) {
      ca[i] = a % p;
      a /= p;
      cb[i] = b % p;
      b /= p;
    }
    trim(ca);
    trim(cb);
    Coeffs r = mod_p_rem(mod_p_mul(ca, cb, p), modulus, p);
    Elem out = 0;
    for (std::size_t i = r.size(); i-- > 0;) out = out * p + r[i];
    return out;
  }
};

FieldSpec FieldSpec::build(std::uint32_t p, std::uint32_t m) {
  if (p == 2) throw PreconditionError("field characteristic must be odd, got p = 2");
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw PreconditionError("field degree m must be at least 1");
  std::uint64_t q = 0;
  if (!checked_pow(p, m, q) || q > kMaxOrder) {
    throw PreconditionError("field order " + std::to_string(p) + "^" + std::to_string(m) +
                            " exceeds the supported maximum 2^24");
  }
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = q;
  impl->pw.resize(m);
  for (std::uint32_t i = 0, v = 1; i < m; ++i, v *= p) impl->pw[i] = v;

  if (m == 1) {
    impl->modulus = {0, 1};
  } else {
    for (std::uint64_t code = 0; code < q; ++code) {
      Coeffs f(m + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < m; ++i) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[m] = 1;
      if (f[0] != 0 && irreducible_mod_p(f, p)) {
        impl->modulus = std::move(f);
        break;
      }
    }
  }

  auto mul = [&](Elem a, Elem b) -> Elem {
    if (m == 1) return static_cast<Elem>(std::uint64_t{a} * b % p);
    return impl->slow_mul(a, b);
  };
  auto power = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  };

  const auto factors = prime_factors(q - 1);
  for (Elem g = 1; g < q; ++g) {
    bool ok = true;
    for (std::uint64_t f : factors) {
      if (power(g, (q - 1) / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      impl->primitive = g;
      break;
    }
  }

  impl->exp.resize(q - 1);
  impl->log.assign(q, 0);
  Elem cur = 1;
  for (std::uint64_t k = 0; k + 1 < q; ++k) {
    impl->exp[k] = cur;
    impl->log[cur] = static_cast<std::uint32_t>(k);
    cur = mul(cur, impl->primitive);
  }
  return FieldSpec(std::move(impl));
}

std::uint32_t FieldSpec::p() const noexcept { return impl_->p; }
std::uint32_t FieldSpec::m() const noexcept { return impl_->m; }
std::uint64_t FieldSpec::q() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const noexcept { return impl_->modulus; }
Elem FieldSpec::primitive() const noexcept { return impl_->primitive; }

std::string FieldSpec::name() const { return "F_" + std::to_string(impl_->q); }

Elem FieldSpec::add(Elem a, Elem b) const noexcept {
  const Impl& f = *impl_;
  if (f.m == 1) {
    Elem s = a + b;
    return s >= f.p ? s - f.p : s;
  }
  Elem out = 0;
  for (std::uint32_t i = 0; i < f.m; ++i) {
    std::uint32_t d = a % f.p + b % f.p;
    if (d >= f.p) d -= f.p;
    out += d * f.pw[i];
    a /= f.p;
    b /= f.p;
  }
  return out;
}

Elem FieldSpec::neg(Elem a) const noexcept {
  const Impl& f = *impl_;
  if (f.m == 1) return a == 0 ? 0 : f.p - a;
  Elem out = 0;
  for (std::uint32_t i = 0; i < f.m; ++i) {
    std::uint32_t d = a % f.p;
    out += (d == 0 ? 0 : f.p - d) * f.pw[i];
    a /= f.p;
  }
  return out;
}

Elem FieldSpec::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem FieldSpec::mul(Elem a, Elem b) const noexcept {
  const Impl& f = *impl_;
  if (f.m == 1) return static_cast<Elem>(std::uint64_t{a} * b % f.p);
  if (a == 0 || b == 0) return 0;
  std::uint64_t k = std::uint64_t{f.log[a]} + f.log[b];
  if (k >= f.q - 1) k -= f.q - 1;
  return f.exp[k];
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw PreconditionError("division by zero in " + name());
  const Impl& f = *impl_;
  std::uint32_t k = f.log[a];
  return f.exp[k == 0 ? 0 : f.q - 1 - k];
}

Elem FieldSpec::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem FieldSpec::pow(Elem a, std::uint64_t e) const noexcept {
  const Impl& f = *impl_;
  if (a == 0) return e == 0 ? 1 : 0;
  std::uint64_t k = static_cast<std::uint64_t>(static_cast<u128>(f.log[a]) * (e % (f.q - 1)) % (f.q - 1));
  return f.exp[k];
}

Elem FieldSpec::from_int(std::int64_t v) const noexcept {
  std::int64_t p = impl_->p;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> FieldSpec::coords(Elem a) const {
  std::vector<std::uint32_t> out(impl_->m);
  for (auto& c : out) {
    c = a % impl_->p;
    a /= impl_->p;
  }
  return out;
}

Elem FieldSpec::from_coords(std::span<const std::uint32_t> c) const {
  if (c.size() != impl_->m) throw PreconditionError("coordinate vector has wrong length for " + name());
  Elem out = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= impl_->p) throw PreconditionError("coordinate out of range for " + name());
    out = out * impl_->p + c[i];
  }
  return out;
}

std::uint64_t FieldSpec::log(Elem a) const {
  if (a == 0) throw PreconditionError("log of zero");
  return impl_->log[a];
}

Elem FieldSpec::exp(std::uint64_t k) const noexcept { return impl_->exp[k % (impl_->q - 1)]; }

std::uint64_t FieldSpec::order(Elem a) const {
  if (a == 0) throw PreconditionError("zero has no multiplicative order");
  std::uint64_t n = impl_->q - 1;
  std::uint64_t k = impl_->log[a];
  return n / std::gcd(n, k == 0 ? n : k);
}

FieldElement FieldSpec::element(Elem code) const { return FieldElement(*this, code); }

bool operator==(const FieldSpec& x, const FieldSpec& y) noexcept {
  return x.impl_ == y.impl_ || (x.impl_->p == y.impl_->p && x.impl_->modulus == y.impl_->modulus);
}

FieldElement::FieldElement(FieldSpec field, Elem code) : field_(std::move(field)), code_(code) {
  if (!field_.contains(code)) throw PreconditionError("element code out of range for " + field_.name());
}

namespace {
const FieldSpec& common(const FieldElement& x, const FieldElement& y) {
  if (!(x.field() == y.field())) {
    throw PreconditionError("mixed-field arithmetic: " + x.field().name() + " and " + y.field().name());
  }
  return x.field();
}
}  // namespace

FieldElement FieldElement::inv() const { return FieldElement(field_, field_.inv(code_)); }
FieldElement FieldElement::pow(std::uint64_t e) const { return FieldElement(field_, field_.pow(code_, e)); }

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  const auto& f = common(x, y);
  return FieldElement(f, f.add(x.code(), y.code()));
}
FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  const auto& f = common(x, y);
  return FieldElement(f, f.sub(x.code(), y.code()));
}
FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  const auto& f = common(x, y);
  return FieldElement(f, f.mul(x.code(), y.code()));
}
FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  const auto& f = common(x, y);
  return FieldElement(f, f.div(x.code(), y.code()));
}
FieldElement operator-(const FieldElement& x) { return FieldElement(x.field(), x.field().neg(x.code())); }
bool operator==(const FieldElement& x, const FieldElement& y) {
  return x.field() == y.field() && x.code() == y.code();
}

FieldElement primitive_element(const FieldSpec& f) { return f.element(f.primitive()); }

FieldElement unity_root(const FieldSpec& f, std::uint64_t n) {
  if (n == 0 || (f.q() - 1) % n != 0) {
    throw PreconditionError("n = " + std::to_string(n) + " does not divide q - 1 = " + std::to_string(f.q() - 1));
  }
  return f.element(f.exp((f.q() - 1) / n));
}

SignDecomposition decompose_q(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) throw PreconditionError("q = " + std::to_string(q) + " must be odd and at least 3");
  SignDecomposition d;
  std::uint64_t x;
  if (q % 4 == 1) {
    d.sign = 1;
    x = q - 1;
  } else {
    d.sign = -1;
    x = q + 1;
  }
  while (x % 2 == 0) {
    x /= 2;
    ++d.a;
  }
  d.b = x;
  return d;
}

}  // namespace rrcc
