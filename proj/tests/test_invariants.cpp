/*
   Copyright 2026 The lsknot Authors

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

#include <numeric>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"
#include "lsknot/invariants.hpp"

using lsknot::Integer;
using lsknot::KnotSum;
using lsknot::LaurentPoly;
using lsknot::TorusKnotFactor;

TEST_CASE("invariants: torus Alexander hand values", "[invariants]") {
    const auto P = [](const char* s) { return LaurentPoly::parse(s); };

    CHECK(lsknot::torus_alexander(2, 3) == P("t^2 - t + 1"));
    CHECK(lsknot::torus_alexander(2, 5) == P("t^4 - t^3 + t^2 - t + 1"));
    CHECK(lsknot::torus_alexander(2, 9) ==
          P("t^8 - t^7 + t^6 - t^5 + t^4 - t^3 + t^2 - t + 1"));
    CHECK(lsknot::torus_alexander(3, 4) == P("t^6 - t^5 + t^3 - t + 1"));
    CHECK(lsknot::torus_alexander(3, 5) == P("t^8 - t^7 + t^5 - t^4 + t^3 - t + 1"));
    CHECK(lsknot::torus_alexander(3, 2) == lsknot::torus_alexander(2, 3));
}

TEST_CASE("invariants: torus Alexander rejects invalid parameters", "[invariants]") {
    CHECK_THROWS_AS(lsknot::torus_alexander(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(lsknot::torus_alexander(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(lsknot::torus_alexander(6, 4), std::invalid_argument);
}

TEST_CASE("invariants: torus Alexander normal form", "[invariants]") {
    for (int p = 2; p <= 12; ++p) {
        for (int q = p + 1; q <= 12; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const LaurentPoly delta = lsknot::torus_alexander(p, q);
            REQUIRE(delta.min_deg() == 0);
            REQUIRE(delta.max_deg() == (p - 1) * (q - 1));
            REQUIRE(delta.coeff(0) == 1);
            REQUIRE(delta.coeff(delta.max_deg()) == 1);
            REQUIRE(is_palindromic(delta));
            REQUIRE(evaluate(delta, 1) == 1);
        }
    }
}

// Independent determinant oracle: det(T(p,q)) is q for even p, p for even q,
// and 1 when both are odd.
TEST_CASE("invariants: determinant closed form", "[invariants]") {
    for (int p = 2; p <= 25; ++p) {
        for (int q = p + 1; q <= 25; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const Integer expected = p % 2 == 0 ? q : (q % 2 == 0 ? p : 1);
            const TorusKnotFactor plus(p, q), minus(p, q, -1);
            REQUIRE(lsknot::determinant_factor(plus) == expected);
            REQUIRE(lsknot::determinant_factor(minus) == expected);
            REQUIRE(lsknot::determinant_factor(plus) % 2 == 1);
        }
    }
}

TEST_CASE("invariants: Alexander fraction splits by sign", "[invariants]") {
    const KnotSum k = KnotSum::parse("T(2,9) # -T(2,3)");
    const lsknot::AlexanderFraction f = lsknot::alexander_fraction(k);
    CHECK(f.numerator == lsknot::torus_alexander(2, 9));
    CHECK(f.denominator == lsknot::torus_alexander(2, 3));

    const lsknot::AlexanderFraction trivial = lsknot::alexander_fraction(KnotSum{});
    CHECK(trivial.numerator == LaurentPoly::one());
    CHECK(trivial.denominator == LaurentPoly::one());
}

TEST_CASE("invariants: mirroring swaps the fraction", "[invariants]") {
    std::mt19937_64 rng(0x10a001u);
    for (int i = 0; i < 200; ++i) {
        const KnotSum k = lsknot_tests::random_knot_sum(rng);
        const auto f = lsknot::alexander_fraction(k);
        const auto g = lsknot::alexander_fraction(mirror(k));
        REQUIRE(g.numerator == f.denominator);
        REQUIRE(g.denominator == f.numerator);
    }
}

TEST_CASE("invariants: determinant of a sum matches the fraction at -1", "[invariants]") {
    std::mt19937_64 rng(0x10a002u);
    for (int i = 0; i < 200; ++i) {
        const KnotSum k = lsknot_tests::random_knot_sum(rng);
        const auto f = lsknot::alexander_fraction(k);
        Integer from_fraction =
            boost::multiprecision::numerator(evaluate(f.numerator, -1) * evaluate(f.denominator, -1));
        if (from_fraction < 0) from_fraction = -from_fraction;
        REQUIRE(lsknot::determinant_sum(k) == from_fraction);
    }
    CHECK(lsknot::determinant_sum(KnotSum{}) == 1);
}

TEST_CASE("invariants: determinant multiplies over cancellation-free sums", "[invariants]") {
    const KnotSum a = KnotSum::parse("T(2,3) # T(3,4)");
    const KnotSum b = KnotSum::parse("-T(2,5) # T(2,7)");
    CHECK(lsknot::determinant_sum(connected_sum(a, b)) ==
          lsknot::determinant_sum(a) * lsknot::determinant_sum(b));

    // Cancellation drops the shared factor from both sides.
    const KnotSum c = KnotSum::parse("T(2,3)");
    const KnotSum d = KnotSum::parse("-T(2,3)");
    CHECK(lsknot::determinant_sum(connected_sum(c, d)) == 1);
}

TEST_CASE("invariants: memoized lookups stay consistent", "[invariants]") {
    const LaurentPoly first = lsknot::torus_alexander(4, 5);
    const LaurentPoly second = lsknot::torus_alexander(4, 5);
    CHECK(first == second);
    CHECK(lsknot::determinant_factor(TorusKnotFactor(4, 5)) ==
          lsknot::determinant_factor(TorusKnotFactor(5, 4)));
}
