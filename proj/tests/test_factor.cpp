/*
   Copyright 2026 The harrison Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace harrison;
using namespace harrison::testing;

namespace {

UniPoly T(std::initializer_list<int> low_to_high) {
    std::vector<Rational> c;
    for (int x : low_to_high) c.emplace_back(x);
    return UniPoly(std::move(c));
}

std::vector<long> divisors(long v) {
    v = v < 0 ? -v : v;
    std::vector<long> out;
    for (long k = 1; k <= v; ++k)
        if (v % k == 0) out.push_back(k);
    return out;
}

// degree <= 3 with small integer coefficients: irreducible iff no rational root
bool irreducible_by_roots(const UniPoly& u) {
    if (u.degree() <= 0) return false;
    if (u.degree() == 1) return true;
    // scale to integers
    Integer l(1);
    for (const auto& c : u.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<long> z;
    for (const auto& c : u.coeffs()) z.push_back(Integer(c * l).get_si());
    if (z.front() == 0) return false;
    for (long p : divisors(z.front()))
        for (long q : divisors(z.back()))
            for (int s : {1, -1})
                if (u(Rational(s * p, q)) == 0) return false;
    return true;
}

UniPoly random_irreducible(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(1, 3), coef(-6, 6), lead(1, 3);
    for (;;) {
        int d = deg(rng);
        std::vector<Rational> c;
        for (int k = 0; k < d; ++k) c.emplace_back(coef(rng));
        c.emplace_back(lead(rng));
        UniPoly u(std::move(c));
        if (irreducible_by_roots(u)) return u;
    }
}

using FactorList = std::vector<std::pair<UniPoly, unsigned>>;

}  // namespace

TEST(UniPoly, DivisionAndGcd) {
    auto a = T({-1, 0, 0, 0, 1});  // t^4 - 1
    auto b = T({-1, 0, 1});        // t^2 - 1
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q, T({1, 0, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(gcd(a, T({1, 1})), T({1, 1}));
    EXPECT_EQ(gcd(T({1, 0, 1}), T({-2, 0, 1})), T({1}));
    auto bz = extended_gcd(T({0, 1, 1}), T({0, 0, 1}));
    EXPECT_EQ(bz.g, T({0, 1}));
    EXPECT_EQ(bz.s * T({0, 1, 1}) + bz.t * T({0, 0, 1}), bz.g);
    EXPECT_THROW(divmod(a, UniPoly()), InputError);
    EXPECT_EQ(derivative(a), T({0, 0, 0, 4}));
    EXPECT_EQ(to_string(T({-2, 0, 1})), "t^2 - 2");
}

TEST(Factor, QuarticMinusOne) {
    auto f = factor_rational_poly(T({-1, 0, 0, 0, 1}));
    EXPECT_EQ(f.unit, 1);
    EXPECT_EQ(f.factors, (FactorList{{T({-1, 1}), 1}, {T({1, 1}), 1}, {T({1, 0, 1}), 1}}));
}

TEST(Factor, Irreducible) {
    auto f = factor_rational_poly(T({-2, 0, 1}));
    EXPECT_EQ(f.factors, (FactorList{{T({-2, 0, 1}), 1}}));
    auto g = factor_rational_poly(T({1, 1, 0, 0, 0, 1}));  // t^5 + t + 1 = (t^2+t+1)(t^3-t^2+1)
    EXPECT_EQ(g.factors, (FactorList{{T({1, 1, 1}), 1}, {T({1, 0, -1, 1}), 1}}));
}

TEST(Factor, ProductOfKnownIrreducibles) {
    auto u = T({1, 0, 1}) * T({-2, 0, 0, 1});
    auto f = factor_rational_poly(u);
    EXPECT_EQ(f.factors, (FactorList{{T({1, 0, 1}), 1}, {T({-2, 0, 0, 1}), 1}}));
    EXPECT_EQ(f.expand(), u);
}

TEST(Factor, RepeatedFactors) {
    auto u = upow(T({-2, 0, 1}), 2) * T({-1, 1});
    auto f = factor_rational_poly(u);
    EXPECT_EQ(f.factors, (FactorList{{T({-1, 1}), 1}, {T({-2, 0, 1}), 2}}));
    EXPECT_EQ(f.expand(), u);
    auto sq = squarefree_decomposition(u);
    EXPECT_EQ(sq, (FactorList{{T({-1, 1}), 1}, {T({-2, 0, 1}), 2}}));
}

TEST(Factor, ContentAndUnit) {
    std::vector<Rational> c{Rational(-3, 2), Rational(0), Rational(3, 4)};  // 3/4 (t^2 - 2)
    auto f = factor_rational_poly(UniPoly(c));
    EXPECT_EQ(f.unit, Rational(3, 4));
    EXPECT_EQ(f.factors, (FactorList{{T({-2, 0, 1}), 1}}));
    EXPECT_EQ(factor_rational_poly(T({5})).factors.size(), 0u);
    EXPECT_THROW(factor_rational_poly(UniPoly()), InputError);
}

TEST(Factor, SwinnertonDyerStyleQuartic) {
    // t^4 - 10 t^2 + 1 is irreducible over Q but splits modulo every prime
    auto f = factor_rational_poly(T({1, 0, -10, 0, 1}));
    EXPECT_EQ(f.factors, (FactorList{{T({1, 0, -10, 0, 1}), 1}}));
}

TEST(Factor, LargeCoefficients) {
    auto u = T({-1000003, 0, 1}) * T({7919, 1}) * T({-104729, 0, 0, 1});
    auto f = factor_rational_poly(u);
    EXPECT_EQ(f.factors.size(), 3u);
    EXPECT_EQ(f.expand(), u);
}

TEST(Factor, RandomProductsRecovered) {
    std::mt19937_64 rng(89);
    std::uniform_int_distribution<int> count(2, 4), mult(1, 2);
    for (int t = 0; t < 50; ++t) {
        std::map<std::vector<Rational>, unsigned> expected;
        UniPoly u = UniPoly::constant(Rational(1));
        int k = count(rng);
        for (int i = 0; i < k; ++i) {
            UniPoly g = random_irreducible(rng);
            unsigned m = static_cast<unsigned>(mult(rng));
            u = u * upow(g, m);
            expected[g.monic().coeffs()] += m;
        }
        auto f = factor_rational_poly(u);
        EXPECT_EQ(f.expand(), u);
        std::map<std::vector<Rational>, unsigned> got;
        for (const auto& [g, m] : f.factors) {
            EXPECT_EQ(g.leading(), 1);
            EXPECT_TRUE(irreducible_by_roots(g)) << to_string(g);
            got[g.coeffs()] += m;
        }
        EXPECT_EQ(got, expected) << to_string(u);
    }
}
