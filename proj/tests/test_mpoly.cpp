#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "drmod/mpoly.hpp"

using namespace drmod;

namespace {

MPoly random_poly(const RingPtr& R, std::mt19937& rng, int max_deg, int nterms) {
    std::uniform_int_distribution<uint64_t> ed(0, static_cast<uint64_t>(max_deg));
    std::uniform_int_distribution<uint32_t> cd(0, R->field->q - 1);
    MPoly f(R);
    for (int t = 0; t < nterms; ++t) {
        Exps e(R->vars.size());
        for (auto& k : e) k = ed(rng);
        f = f + MPoly::monomial(R, e, FqElem(R->field, cd(rng)));
    }
    return f;
}

} // namespace

TEST_CASE("term order and printing") {
    const FieldCtx* F2 = FieldCtx::get(2, 1);
    RingPtr R = make_ring(F2, {"T", "X"});
    auto T = MPoly::variable(R, "T");
    auto X = MPoly::variable(R, "X");
    MPoly g = X.pow(12) + X.pow(10) + X.pow(9) + X.pow(7) + T * X.pow(5) +
              (T.pow(2) + T) * X.pow(4) + T.pow(2) * X.pow(3) + T.pow(2) * X.pow(2) + T.pow(4);
    REQUIRE(g.to_string() ==
            "X^12 + X^10 + X^9 + X^7 + T^2*X^4 + T*X^5 + T^2*X^3 + T*X^4 + T^4 + T^2*X^2");
    REQUIRE(g.total_degree() == 12);
    REQUIRE(g.degree(R->var_index("X")) == 12);
    REQUIRE(g.degree(R->var_index("T")) == 4);
    REQUIRE(g.terms().size() == 10);
}

TEST_CASE("ring arithmetic identities") {
    std::mt19937 rng(42);
    const FieldCtx* F5 = FieldCtx::get(5, 1);
    RingPtr R = make_ring(F5, {"T", "y"});
    for (int i = 0; i < 40; ++i) {
        MPoly a = random_poly(R, rng, 3, 4);
        MPoly b = random_poly(R, rng, 3, 4);
        MPoly c = random_poly(R, rng, 3, 4);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) * c == a * c + b * c);
        REQUIRE(a - a == MPoly::zero(R));
        REQUIRE(a * MPoly::from_int(R, 1) == a);
    }
}

TEST_CASE("frobenius_power matches literal powering") {
    std::mt19937 rng(43);
    for (uint32_t p : {2u, 3u, 5u}) {
        const FieldCtx* F = FieldCtx::get(p, 1);
        RingPtr R = make_ring(F, {"T", "y"});
        for (int i = 0; i < 10; ++i) {
            MPoly a = random_poly(R, rng, 2, 3);
            REQUIRE(a.frobenius_power(1) == a.pow(F->q));
            REQUIRE(a.frobenius_power(2) == a.pow(F->q * F->q));
        }
    }
    // and it is additive in char p
    const FieldCtx* F3 = FieldCtx::get(3, 1);
    RingPtr R = make_ring(F3, {"T", "y"});
    MPoly a = random_poly(R, rng, 2, 3), b = random_poly(R, rng, 2, 3);
    REQUIRE((a + b).frobenius_power(1) == a.frobenius_power(1) + b.frobenius_power(1));
}

TEST_CASE("divexact inverts multiplication") {
    std::mt19937 rng(44);
    const FieldCtx* F3 = FieldCtx::get(3, 1);
    RingPtr R = make_ring(F3, {"T", "y"});
    for (int i = 0; i < 40; ++i) {
        MPoly a = random_poly(R, rng, 3, 4);
        MPoly b = random_poly(R, rng, 3, 4);
        if (b.is_zero()) continue;
        auto q = (a * b).divexact(b);
        REQUIRE(q.has_value());
        REQUIRE(*q == a);
    }
    auto T = MPoly::variable(R, "T");
    auto y = MPoly::variable(R, "y");
    REQUIRE(!(y + MPoly::from_int(R, 1)).divexact(T).has_value());
}

TEST_CASE("coefficient extraction round trips") {
    std::mt19937 rng(45);
    const FieldCtx* F5 = FieldCtx::get(5, 1);
    RingPtr R = make_ring(F5, {"T", "y"});
    size_t yv = R->var_index("y");
    for (int i = 0; i < 20; ++i) {
        MPoly a = random_poly(R, rng, 4, 6);
        if (a.is_zero()) continue;
        auto cs = a.coeffs_in(yv);
        REQUIRE(MPoly::from_coeffs_in(R, yv, cs) == a);
        REQUIRE(static_cast<int64_t>(cs.size()) == a.degree(yv) + 1);
    }
}

TEST_CASE("substitution and evaluation") {
    const FieldCtx* F3 = FieldCtx::get(3, 1);
    RingPtr R = make_ring(F3, {"T", "y"});
    auto T = MPoly::variable(R, "T");
    auto y = MPoly::variable(R, "y");
    MPoly f = y * y + T * y + MPoly::from_int(R, 2);
    REQUIRE(f.subst(R->var_index("y"), T) == T * T + T * T + MPoly::from_int(R, 2));
    // evaluation over the base field
    auto id = [](const FqElem& c) { return c; };
    FqElem v = f.eval_point({FqElem::from_int(F3, 1), FqElem::from_int(F3, 2)}, id);
    // 4 + 2 + 2 = 8 = 2 mod 3
    REQUIRE(v == FqElem::from_int(F3, 2));
    // evaluation in an extension through an embedding
    const FieldCtx* F9 = FieldCtx::get(3, 2);
    auto embed = [&](const FqElem& c) { return FqElem::from_int(F9, c.packed()); };
    FqElem z = FqElem::from_coeffs(F9, {0, 1});
    FqElem w = f.eval_point({FqElem::from_int(F9, 1), z}, embed);
    REQUIRE(w == z * z + z + FqElem::from_int(F9, 2));
}

TEST_CASE("derivative in char p") {
    const FieldCtx* F3 = FieldCtx::get(3, 1);
    RingPtr R = make_ring(F3, {"T", "y"});
    auto T = MPoly::variable(R, "T");
    auto y = MPoly::variable(R, "y");
    size_t yv = R->var_index("y");
    REQUIRE(y.pow(3).derivative(yv).is_zero());
    REQUIRE((y.pow(4) + T * y).derivative(yv) == y.pow(3) + T);
}

TEST_CASE("lift_to a larger ring") {
    const FieldCtx* F3 = FieldCtx::get(3, 1);
    RingPtr R1 = make_ring(F3, {"T", "y"});
    RingPtr R2 = make_ring(F3, {"T", "y", "X"});
    auto f = MPoly::variable(R1, "y") + MPoly::variable(R1, "T").pow(2);
    auto g = f.lift_to(R2);
    REQUIRE(g == MPoly::variable(R2, "y") + MPoly::variable(R2, "T").pow(2));
    REQUIRE(!g.depends_on(R2->var_index("X")));
}
