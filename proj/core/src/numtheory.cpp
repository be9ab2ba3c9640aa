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

#include "rrcc/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "rrcc/errors.hpp"

namespace rrcc {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pollard_rho(std::uint64_t n, std::mt19937_64& rng) {
  if (n % 2 == 0) return 2;
  std::uniform_int_distribution<std::uint64_t> dist(1, n - 1);
  while (true) {
    std::uint64_t x = dist(rng), y = x, c = dist(rng), d = 1;
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    // Brent-style batching of gcd computations.
    std::uint64_t q = 1;
    int steps = 0;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      q = mul_mod(q, x > y ? x - y : y - x, n);
      if (++steps % 64 == 0 || q == 0) {
        d = std::gcd(q == 0 ? (x > y ? x - y : y - x) : q, n);
      }
    }
    if (d != n && d != 0) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % small == 0) {
      out.push_back(small);
      while (n % small == 0) n /= small;
      factor_into(n, out, rng);
      return;
    }
  }
  std::uint64_t d = pollard_rho(n, rng);
  factor_into(d, out, rng);
  factor_into(n / d, out, rng);
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n <= 1) return out;
  std::mt19937_64 rng(0x5eed);
  factor_into(n, out, rng);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t m) {
  if (m == 0) throw PreconditionError("multiplicative_order: modulus must be positive");
  if (m == 1) return 1;
  if (std::gcd(x % m, m) != 1) throw PreconditionError("multiplicative_order: element is not a unit");
  // Carmichael-free approach: reduce phi(m) by its prime factors.
  std::uint64_t phi = m;
  for (std::uint64_t f : prime_factors(m)) phi = phi / f * (f - 1);
  std::uint64_t ord = phi;
  for (std::uint64_t f : prime_factors(phi)) {
    while (ord % f == 0 && pow_mod(x, ord / f, m) == 1) ord /= f;
  }
  return ord;
}

std::uint64_t prime_power_base(std::uint64_t q) {
  if (q < 2) return 0;
  auto fs = prime_factors(q);
  return fs.size() == 1 ? fs[0] : 0;
}

bool checked_pow(std::uint64_t b, unsigned e, std::uint64_t& out) {
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= b;
    if (r > UINT64_MAX) return false;
  }
  out = static_cast<std::uint64_t>(r);
  return true;
}

}  // namespace rrcc
