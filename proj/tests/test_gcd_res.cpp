#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "drmod/gcd.hpp"
#include "drmod/resultant.hpp"

using namespace drmod;

namespace {

MPoly random_poly(const RingPtr& R, std::mt19937& rng, int tmax, int ymax, int nterms) {
    std::uniform_int_distribution<uint64_t> td(0, static_cast<uint64_t>(tmax));
    std::uniform_int_distribution<uint64_t> yd(0, static_cast<uint64_t>(ymax));
    std::uniform_int_distribution<uint32_t> cd(0, R->field->q - 1);
    MPoly f(R);
    for (int t = 0; t < nterms; ++t)
        f = f + MPoly::monomial(R, {td(rng), yd(rng)}, FqElem(R->field, cd(rng)));
    return f;
}

MPoly laplace_det(const std::vector<std::vector<MPoly>>& m, std::vector<size_t> rows, size_t col) {
    const RingPtr& R = m[0][0].ring();
    if (rows.empty()) return MPoly::from_int(R, 1);
    MPoly acc(R);
    bool neg = false;
    for (size_t k = 0; k < rows.size(); ++k) {
        const MPoly& entry = m[rows[k]][col];
        if (!entry.is_zero()) {
            std::vector<size_t> rest;
            for (size_t j = 0; j < rows.size(); ++j)
                if (j != k) rest.push_back(rows[j]);
            MPoly sub = laplace_det(m, rest, col + 1);
            acc = neg ? acc - entry * sub : acc + entry * sub;
        }
        neg = !neg;
    }
    return acc;
}

// Determinant of the Sylvester matrix of f and g in the variable v.
MPoly sylvester_resultant(const MPoly& f, const MPoly& g, size_t v) {
    const RingPtr& R = f.ring();
    size_t m = static_cast<size_t>(f.degree(v));
    size_t n = static_cast<size_t>(g.degree(v));
    auto fc = f.coeffs_in(v);
    auto gc = g.coeffs_in(v);
    size_t N = m + n;
    std::vector<std::vector<MPoly>> S(N, std::vector<MPoly>(N, MPoly::zero(R)));
    for (size_t r = 0; r < n; ++r)
        for (size_t i = 0; i <= m; ++i) S[r][r + i] = fc[m - i];
    for (size_t r = 0; r < m; ++r)
        for (size_t i = 0; i <= n; ++i) S[n + r][r + i] = gc[n - i];
    std::vector<size_t> rows(N);
    for (size_t i = 0; i < N; ++i) rows[i] = i;
    return laplace_det(S, rows, 0);
}

} // namespace

TEST_CASE("resultant matches the Sylvester determinant") {
    const FieldCtx* F5 = FieldCtx::get(5, 1);
    RingPtr R = make_ring(F5, {"T", "y"});
    size_t yv = R->var_index("y");
    auto T = MPoly::variable(R, "T");
    auto y = MPoly::variable(R, "y");

    REQUIRE(resultant(y * y - T, y, yv) == -T);

    std::mt19937 rng(99);
    int checked = 0;
    while (checked < 30) {
        MPoly f = random_poly(R, rng, 2, 3, 4);
        MPoly g = random_poly(R, rng, 2, 3, 4);
        if (f.degree(yv) < 1 || g.degree(yv) < 1) continue;
        REQUIRE(resultant(f, g, yv) == sylvester_resultant(f, g, yv));
        ++checked;
    }
}

TEST_CASE("resultant product over roots in a splitting extension") {
    const FieldCtx* F3 = FieldCtx::get(3, 1);
    const FieldCtx* F9 = FieldCtx::get(3, 2);
    RingPtr R = make_ring(F3, {"T", "y"});
    RingPtr R9 = make_ring(F9, {"y"});
    size_t yv = R->var_index("y");
    auto embed = [&](const FqElem& c) { return FqElem::from_int(F9, c.packed()); };

    std::mt19937 rng(7);
    std::uniform_int_distribution<uint32_t> cd(0, 2);
    int checked = 0;
    while (checked < 25) {
        // T-free inputs of degree <= 2, so every root lies in F_9
        std::vector<uint32_t> fc{cd(rng), cd(rng), cd(rng)};
        std::vector<uint32_t> gc{cd(rng), cd(rng), cd(rng)};
        MPoly f(R), g(R);
        for (uint64_t i = 0; i < 3; ++i) {
            f = f + MPoly::monomial(R, {0, i}, FqElem(F3, fc[i]));
            g = g + MPoly::monomial(R, {0, i}, FqElem(F3, gc[i]));
        }
        if (f.degree(yv) < 1 || g.is_zero()) continue;

        MPoly f9(R9);
        for (auto& [e, c] : f.terms()) f9 = f9 + MPoly::monomial(R9, {e[1]}, embed(c));
        FqElem expected = embed(f.lc_in(yv).constant_value()).pow(
            static_cast<uint64_t>(std::max<int64_t>(g.degree(yv), 0)));
        MPoly rem = f9;
        for (uint32_t a = 0; a < 9 && rem.degree(0) > 0; ++a) {
            FqElem alpha(F9, a);
            MPoly lin = MPoly::variable(R9, size_t{0}) - MPoly::constant(R9, alpha);
            while (true) {
                auto q = rem.divexact(lin);
                if (!q) break;
                rem = *q;
                FqElem galpha = g.eval_point({FqElem::zero(F9), alpha}, embed);
                expected = expected * galpha;
            }
        }
        REQUIRE(rem.degree(0) == 0);  // degree <= 2 always splits over F_9

        MPoly res = resultant(f, g, yv);
        REQUIRE(res.degree(R->var_index("T")) <= 0);
        FqElem got = embed(res.is_zero() ? FqElem::zero(F3) : res.constant_value());
        REQUIRE(got == expected);
        ++checked;
    }
}

TEST_CASE("resultant laws") {
    const FieldCtx* F3 = FieldCtx::get(3, 1);
    RingPtr R = make_ring(F3, {"T", "y"});
    size_t yv = R->var_index("y");
    std::mt19937 rng(11);
    int checked = 0;
    while (checked < 15) {
        MPoly f = random_poly(R, rng, 1, 2, 3);
        MPoly g = random_poly(R, rng, 1, 2, 3);
        MPoly h = random_poly(R, rng, 1, 2, 3);
        if (f.degree(yv) < 1 || g.degree(yv) < 1 || h.degree(yv) < 1) continue;
        // multiplicative in the second argument
        REQUIRE(resultant(f, g * h, yv) == resultant(f, g, yv) * resultant(f, h, yv));
        // common factor forces zero
        REQUIRE(resultant(f * h, g * h, yv).is_zero());
        ++checked;
    }
}

TEST_CASE("gcd recovers common factors") {
    const FieldCtx* F5 = FieldCtx::get(5, 1);
    RingPtr R = make_ring(F5, {"T", "y"});
    size_t yv = R->var_index("y");
    auto T = MPoly::variable(R, "T");
    auto y = MPoly::variable(R, "y");

    REQUIRE(poly_gcd(y * y - T * T, y - T, yv) == y - T);
    REQUIRE(poly_gcd(y + T, y + T + MPoly::from_int(R, 1), yv) == MPoly::from_int(R, 1));

    std::mt19937 rng(13);
    int checked = 0;
    while (checked < 20) {
        MPoly a = random_poly(R, rng, 2, 2, 3);
        MPoly b = random_poly(R, rng, 2, 2, 3);
        MPoly h = random_poly(R, rng, 1, 1, 2);
        if (a.is_zero() || b.is_zero() || h.degree(yv) < 1) continue;
        MPoly g = mv_gcd(a * h, b * h);
        REQUIRE(g.divexact(h.scal_normalized()).has_value());
        auto qa = (a * h).divexact(g);
        auto qb = (b * h).divexact(g);
        REQUIRE(qa.has_value());
        REQUIRE(qb.has_value());
        ++checked;
    }
}

TEST_CASE("content and primitive part") {
    const FieldCtx* F5 = FieldCtx::get(5, 1);
    RingPtr R = make_ring(F5, {"T", "y"});
    size_t yv = R->var_index("y");
    auto T = MPoly::variable(R, "T");
    auto y = MPoly::variable(R, "y");
    MPoly f = T * y * y + T * T * y;
    REQUIRE(content_in(f, yv) == T);
    REQUIRE(primitive_part(f, yv) == y * y + T * y);
}

TEST_CASE("radical and multiplicity profile in char p") {
    const FieldCtx* F5 = FieldCtx::get(5, 1);
    RingPtr R = make_ring(F5, {"T", "y"});
    size_t yv = R->var_index("y");
    auto T = MPoly::variable(R, "T");
    auto y = MPoly::variable(R, "y");

    MPoly f = (y - T).pow(3) * (y + T);
    REQUIRE(radical_in(f, yv) == (y - T) * (y + T));
    REQUIRE(squarefree_part((y - T).pow(2), yv) == y - T);

    auto prof = multiplicity_profile((y - T).pow(2) * (y + T), yv);
    REQUIRE(prof == std::vector<std::pair<uint64_t, uint64_t>>{{1, 1}, {2, 1}});

    const FieldCtx* F3 = FieldCtx::get(3, 1);
    RingPtr R3 = make_ring(F3, {"T", "y"});
    auto T3 = MPoly::variable(R3, "T");
    auto y3 = MPoly::variable(R3, "y");
    // y^3 - T^3 = (y - T)^3; derivative vanishes but a cube root exists
    REQUIRE(radical_in(y3.pow(3) - T3.pow(3), R3->var_index("y")) == y3 - T3);
    // y^3 - T has zero derivative and no cube root
    REQUIRE_THROWS_AS(radical_in(y3.pow(3) - T3, R3->var_index("y")), InseparableInput);
}
