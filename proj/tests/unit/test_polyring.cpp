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
#include "rrcc/polyring.hpp"
#include "test_util.hpp"

namespace rrcc {
namespace {

using testing::poly;

Poly random_poly(const FieldSpec& f, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<Elem> c(0, static_cast<Elem>(f.q() - 1));
  std::vector<Elem> v(deg(rng) + 1);
  for (auto& x : v) x = c(rng);
  return Poly(f, v);
}

TEST(Polyring, Products) {
  const FieldSpec f13 = FieldSpec::build(13), f11 = FieldSpec::build(11);
  EXPECT_EQ(poly(f13, "x^2+5") * poly(f13, "x^2-5"), poly(f13, "x^4+1"));
  EXPECT_EQ(poly(f11, "x^2+3x+10") * poly(f11, "x^2+8x+10"), poly(f11, "x^4+1"));
  EXPECT_TRUE(poly(f11, "x^2+3x+10").pow(0).is_one());
}

TEST(Polyring, Division) {
  const FieldSpec f17 = FieldSpec::build(17), f13 = FieldSpec::build(13);
  const DivMod dm = divmod(Poly::x_pow_minus_one(f17, 8), poly(f17, "x-1"));
  EXPECT_EQ(dm.quotient, poly(f17, "x^7+x^6+x^5+x^4+x^3+x^2+x+1"));
  EXPECT_TRUE(dm.remainder.is_zero());
  EXPECT_TRUE((Poly::x_pow_minus_one(f13, 8) % poly(f13, "x^2+5")).is_zero());
  const DivMod small = divmod(poly(f13, "x^2"), poly(f13, "x^3"));
  EXPECT_TRUE(small.quotient.is_zero());
  EXPECT_EQ(small.remainder, poly(f13, "x^2"));
  EXPECT_THROW(divmod(poly(f13, "x"), Poly(f13)), PreconditionError);
}

TEST(Polyring, DivmodRoundTrip) {
  std::mt19937_64 rng(11);
  for (auto [p, m] : {std::pair{13u, 1u}, {5u, 2u}, {3u, 3u}}) {
    const FieldSpec f = FieldSpec::build(p, m);
    for (int i = 0; i < 300; ++i) {
      const Poly a = random_poly(f, rng, 12), b = random_poly(f, rng, 6);
      if (b.is_zero()) continue;
      const DivMod dm = divmod(a, b);
      ASSERT_EQ(dm.quotient * b + dm.remainder, a);
      ASSERT_LT(dm.remainder.degree(), b.degree());
    }
  }
}

TEST(Polyring, GcdLcm) {
  const FieldSpec f13 = FieldSpec::build(13);
  EXPECT_EQ(gcd(poly(f13, "(x-1)^2"), poly(f13, "(x-1)(x+1)")), poly(f13, "x-1"));
  EXPECT_EQ(lcm(poly(f13, "(x+1)^7"), poly(f13, "(x+1)^12")), poly(f13, "(x+1)^12"));
  EXPECT_TRUE(gcd(poly(f13, "3x^2+1"), Poly::constant(f13, 1)).is_one());
  EXPECT_TRUE(gcd(poly(f13, "2x+4"), poly(f13, "x+2")).is_monic());
}

TEST(Polyring, Reciprocal) {
  const FieldSpec f13 = FieldSpec::build(13), f11 = FieldSpec::build(11);
  EXPECT_EQ(reciprocal(poly(f13, "x-5")), poly(f13, "x-8"));
  EXPECT_EQ(reciprocal(poly(f13, "x+1")), poly(f13, "x+1"));
  EXPECT_EQ(reciprocal(poly(f11, "x^2+3x+10")), poly(f11, "x^2+8x+10"));
  EXPECT_THROW(reciprocal(poly(f11, "x^2+x")), PreconditionError);
}

TEST(Polyring, ReciprocalProperties) {
  std::mt19937_64 rng(5);
  const FieldSpec f = FieldSpec::build(5, 2);
  for (int i = 0; i < 300; ++i) {
    Poly a = random_poly(f, rng, 8), b = random_poly(f, rng, 8);
    if (a.degree() < 1 || b.degree() < 1 || a[0] == 0 || b[0] == 0) continue;
    a = a.monic();
    b = b.monic();
    ASSERT_EQ(reciprocal(reciprocal(a)), a);
    ASSERT_EQ(reciprocal(a * b).monic(), (reciprocal(a) * reciprocal(b)).monic());
  }
}

TEST(Polyring, Evaluation) {
  const FieldSpec f17 = FieldSpec::build(17), f13 = FieldSpec::build(13);
  EXPECT_EQ(eval(Poly::x_pow_minus_one(f17, 8), 9), 0u);
  EXPECT_EQ(eval(poly(f13, "x^2+1"), 5), 0u);
  EXPECT_EQ(eval(poly(f13, "3x^4+7"), 0), 7u);
}

TEST(Polyring, RenderingAndParsing) {
  const FieldSpec f17 = FieldSpec::build(17);
  EXPECT_EQ(to_string(poly(f17, "x^2-1")), "x^2 + 16");
  EXPECT_EQ(to_string(poly(f17, "(x+1)(x+8)")), "x^2 + 9*x + 8");
  EXPECT_EQ(to_string(Poly(f17)), "0");
  EXPECT_EQ(poly(f17, to_string(poly(f17, "3x^5-2x+4"))), poly(f17, "3x^5-2x+4"));
  const FieldSpec f25 = FieldSpec::build(5, 2);
  EXPECT_EQ(poly(f25, to_string(poly(f25, "x+w^3"))), poly(f25, "x+w^3"));
}

TEST(Polyring, ParseErrorsCarryPositions) {
  const FieldSpec f17 = FieldSpec::build(17);
  try {
    parse_poly(f17, "(x+1)^2*(x+");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 11u);
  }
  EXPECT_THROW(parse_poly(f17, "x+y"), ParseError);
}

TEST(Polyring, ProductFactors) {
  const FieldSpec f13 = FieldSpec::build(13);
  const auto fs = parse_product(f13, "(x+1)^7(x-1)(x^2+5)^3");
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[0].exponent, 7u);
  EXPECT_EQ(fs[1].base, poly(f13, "x+12"));
  EXPECT_EQ(fs[2].position, 12u);
}

TEST(Polyring, Irreducibility) {
  const FieldSpec f11 = FieldSpec::build(11);
  EXPECT_TRUE(is_irreducible(poly(f11, "x^2+1")));
  EXPECT_FALSE(is_irreducible(poly(f11, "x^2-1")));
  EXPECT_TRUE(is_irreducible(poly(f11, "x+4")));
}

}  // namespace
}  // namespace rrcc
