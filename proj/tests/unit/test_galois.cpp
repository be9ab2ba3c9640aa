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


#include <gtest/gtest.h>

#include <random>

#include "rrcc/errors.hpp"
#include "rrcc/galois.hpp"
#include "rrcc/numtheory.hpp"

namespace rrcc {
namespace {

TEST(NumTheory, PrimalityAndFactors) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(17));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(25));
  EXPECT_TRUE(is_prime(1'000'000'007ULL));
  EXPECT_EQ(prime_factors(360), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(multiplicative_order(13, 8), 2u);
  EXPECT_EQ(multiplicative_order(3, 8), 2u);
  EXPECT_EQ(prime_power_base(25), 5u);
  EXPECT_EQ(prime_power_base(12), 0u);
}

TEST(Galois, BuildPrimeAndExtensionFields) {
  const FieldSpec f17 = FieldSpec::build(17, 1);
  EXPECT_EQ(f17.q(), 17u);
  EXPECT_EQ(f17.name(), "F_17");
  const FieldSpec f25 = FieldSpec::build(5, 2);
  EXPECT_EQ(f25.q(), 25u);
  // Least monic irreducible quadratic over F_5 is x^2 + 2 (constant term first).
  EXPECT_EQ(f25.modulus(), (std::vector<std::uint32_t>{2, 0, 1}));
}

TEST(Galois, RejectsBadParameters) {
  EXPECT_THROW(FieldSpec::build(4, 1), PreconditionError);
  EXPECT_THROW(FieldSpec::build(2, 1), PreconditionError);
  EXPECT_THROW(FieldSpec::build(7, 0), PreconditionError);
}

TEST(Galois, Arithmetic) {
  const FieldSpec f13 = FieldSpec::build(13);
  EXPECT_EQ(f13.mul(5, 5), 12u);
  const FieldSpec f17 = FieldSpec::build(17);
  EXPECT_EQ(f17.inv(2), 9u);
  EXPECT_EQ(f17.pow(6, 0), 1u);
  EXPECT_THROW(f17.inv(0), PreconditionError);
  const FieldElement a = f17.element(5), b = f17.element(14);
  EXPECT_EQ((a + b).code(), 2u);
  EXPECT_EQ((a - b).code(), 8u);
  EXPECT_EQ((a / b * b), a);
}

TEST(Galois, MixedFieldOperandsAreRejected) {
  const FieldElement a = FieldSpec::build(13).element(3);
  const FieldElement b = FieldSpec::build(17).element(3);
  EXPECT_THROW(a + b, PreconditionError);
}

TEST(Galois, PrimitiveElements) {
  EXPECT_EQ(primitive_element(FieldSpec::build(3)).code(), 2u);
  EXPECT_EQ(primitive_element(FieldSpec::build(17)).code(), 3u);
  EXPECT_EQ(primitive_element(FieldSpec::build(13)).code(), 2u);
  const FieldSpec f25 = FieldSpec::build(5, 2);
  EXPECT_EQ(f25.order(f25.primitive()), 24u);
}

TEST(Galois, UnityRoots) {
  const FieldSpec f17 = FieldSpec::build(17);
  EXPECT_EQ(unity_root(f17, 8).code(), 9u);
  const FieldSpec f25 = FieldSpec::build(5, 2);
  EXPECT_EQ(unity_root(f25, 8), f25.element(f25.primitive()).pow(3));
  EXPECT_THROW(unity_root(FieldSpec::build(13), 8), PreconditionError);
}

TEST(Galois, FrobeniusAndFermatOnSamples) {
  std::mt19937_64 rng(7);
  for (auto [p, m] : {std::pair{3u, 1u}, {5u, 2u}, {7u, 3u}, {13u, 1u}, {3u, 4u}}) {
    const FieldSpec f = FieldSpec::build(p, m);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(f.q() - 1));
    for (int i = 0; i < 200; ++i) {
      const Elem x = pick(rng);
      EXPECT_EQ(f.pow(x, f.q()), x);
      if (x) EXPECT_EQ(f.pow(x, f.q() - 1), 1u);
    }
  }
}

TEST(Galois, UnityRootHasExactOrder) {
  for (auto [p, m, n] : {std::tuple{17u, 1u, 8u}, {5u, 2u, 8u}, {13u, 1u, 4u}, {3u, 2u, 8u}, {41u, 1u, 8u}}) {
    const FieldSpec f = FieldSpec::build(p, m);
    const FieldElement w = unity_root(f, n);
    EXPECT_EQ(w.pow(n).code(), 1u);
    for (std::uint64_t d = 1; d < n; ++d) {
      if (n % d == 0) EXPECT_NE(w.pow(d).code(), 1u);
    }
  }
}

TEST(Galois, DecomposeExamples) {
  EXPECT_EQ(decompose_q(17), (SignDecomposition{+1, 4, 1}));
  EXPECT_EQ(decompose_q(13), (SignDecomposition{+1, 2, 3}));
  EXPECT_EQ(decompose_q(7), (SignDecomposition{-1, 3, 1}));
  EXPECT_EQ(decompose_q(25), (SignDecomposition{+1, 3, 3}));
  EXPECT_THROW(decompose_q(16), PreconditionError);
}

TEST(Galois, DecomposeRoundTripsForOddPrimePowers) {
  for (std::uint64_t q = 3; q <= 1'000'000; q += 2) {
    if (!prime_power_base(q)) continue;
    const SignDecomposition d = decompose_q(q);
    ASSERT_EQ(static_cast<std::int64_t>((std::uint64_t{1} << d.a) * d.b) + d.sign, static_cast<std::int64_t>(q)) << q;
    ASSERT_EQ(d.b % 2, 1u) << q;
    ASSERT_GE(d.a, 2u) << q;
  }
}

}  // namespace
}  // namespace rrcc
