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

#ifndef RRCC_NUMTHEORY_HPP
#define RRCC_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

namespace rrcc {

__extension__ typedef unsigned __int128 u128;

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Distinct prime factors in increasing order (Pollard rho + Miller-Rabin).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// (base^exp) mod m, exact for any 64-bit modulus.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Multiplicative order of x modulo m; requires gcd(x, m) = 1 and m >= 1.
std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t m);

/// If q = p^m for a prime p (m >= 1) returns p, else 0.
std::uint64_t prime_power_base(std::uint64_t q);

/// b^e with overflow detection; returns false when the result exceeds 2^64 - 1.
bool checked_pow(std::uint64_t b, unsigned e, std::uint64_t& out);

}  // namespace rrcc

#endif  // RRCC_NUMTHEORY_HPP
