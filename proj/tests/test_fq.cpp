#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "drmod/fq.hpp"

using namespace drmod;

TEST_CASE("prime field basics") {
    const FieldCtx* F3 = FieldCtx::get(3, 1);
    FqElem two = FqElem::from_int(F3, 2);
    REQUIRE(two.inv() == two);  // 2*2 = 4 = 1 mod 3
    REQUIRE((two * two).is_one());
    REQUIRE(FqElem::from_int(F3, 5) == two);
    REQUIRE((two + two.inv() + FqElem::one(F3)).packed() == 2);
    REQUIRE_THROWS_AS(FqElem::zero(F3).inv(), DivisionByZero);
}

TEST_CASE("F4 multiplication against the defining relation") {
    const FieldCtx* F4 = FieldCtx::get(2, 2);  // z^2 + z + 1
    FqElem z = FqElem::from_coeffs(F4, {0, 1});
    FqElem z1 = FqElem::from_coeffs(F4, {1, 1});
    REQUIRE((z * z1).is_one());
    REQUIRE(z * z == z1);  // z^2 = z + 1
    REQUIRE(z.pow(3).is_one());
}

TEST_CASE("context mismatch is rejected") {
    const FieldCtx* F3 = FieldCtx::get(3, 1);
    const FieldCtx* F5 = FieldCtx::get(5, 1);
    REQUIRE_THROWS_AS(FqElem::one(F3) + FqElem::one(F5), ContextMismatch);
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(12345);
    for (uint32_t q_spec : {31u, 51u, 71u, 32u}) {  // encoded (p, e) pairs: p*10 + e
        uint32_t p = q_spec / 10, e = q_spec % 10;
        const FieldCtx* F = FieldCtx::get(p, e);
        std::uniform_int_distribution<uint32_t> dist(0, F->q - 1);
        for (int i = 0; i < 100; ++i) {
            FqElem a(F, dist(rng)), b(F, dist(rng)), c(F, dist(rng));
            REQUIRE(a + b == b + a);
            REQUIRE(a * b == b * a);
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE((a - a).is_zero());
            if (!a.is_zero()) REQUIRE((a * a.inv()).is_one());
            REQUIRE(a.pow(F->q) == a);  // Frobenius fixes F_q
        }
    }
}

TEST_CASE("Frobenius fixes F_q for all small built-in fields") {
    std::mt19937 rng(777);
    for (uint32_t p : {3u, 5u, 7u}) {
        for (uint32_t e : {1u, 2u}) {
            const FieldCtx* F = FieldCtx::get(p, e);
            std::uniform_int_distribution<uint32_t> dist(0, F->q - 1);
            for (int i = 0; i < 50; ++i) {
                FqElem x(F, dist(rng));
                REQUIRE(x.pow(F->q) == x);
            }
        }
    }
}

TEST_CASE("built-in modulus table constructs and validates") {
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u})
        for (uint32_t e : {2u, 3u, 4u}) {
            const FieldCtx* F = FieldCtx::get(p, e);
            uint32_t q = 1;
            for (uint32_t i = 0; i < e; ++i) q *= p;
            REQUIRE(F->q == q);
            FqElem z = FqElem::from_coeffs(F, {0, 1});
            REQUIRE(z.pow(F->q) == z);
            REQUIRE(z.pow((F->q - 1) / 1).is_one());
        }
}

TEST_CASE("a reducible modulus is rejected") {
    // z^2 + 1 is reducible over F_2 (z+1)^2
    REQUIRE_THROWS_AS(FieldCtx::get(2, 2, {1, 0, 1}), InvalidInput);
    // z^2 + 1 is irreducible over F_3
    REQUIRE_NOTHROW(FieldCtx::get(3, 2, {1, 0, 1}));
}
