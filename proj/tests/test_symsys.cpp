#include <catch2/catch_amalgamated.hpp>

#include "drmod/symsys.hpp"

using namespace drmod;

TEST_CASE("exponent polynomials in q", "[symsys]") {
    ExpPoly one = ExpPoly::constant(1);
    ExpPoly q = ExpPoly::qpow(1);
    ExpPoly q3 = ExpPoly::qpow(3);

    REQUIRE((q3 + one).to_string() == "q^3+1");
    REQUIRE((q + one).to_string() == "q+1");
    REQUIRE(q.to_string() == "q");
    REQUIRE(ExpPoly::constant(7).to_string() == "7");
    REQUIRE((q + q).to_string() == "2*q");
    REQUIRE(ExpPoly().to_string() == "0");

    REQUIRE(q.shifted(2) == q3);
    REQUIRE(one.shifted(5) == ExpPoly::qpow(5));
    REQUIRE(ExpPoly().shifted(3).is_zero());

    // comparison takes q large
    REQUIRE(ExpPoly::cmp(q, ExpPoly::constant(1000)) > 0);
    REQUIRE(ExpPoly::cmp(q3, q3 + one) < 0);
    REQUIRE(ExpPoly::cmp(q + one, q + one) == 0);
}

TEST_CASE("symbolic polynomial arithmetic", "[symsys]") {
    SymRingPtr ring = make_sym_ring({"x", "y"});
    SymPoly x = SymPoly::variable(ring, "x");
    SymPoly y = SymPoly::variable(ring, "y");
    SymPoly one = SymPoly::from_int(ring, 1);

    REQUIRE((x + y) * (x + y) ==
            x * x + SymPoly::from_int(ring, 2) * x * y + y * y);
    REQUIRE((x - x).is_zero());
    REQUIRE((x + y).to_string() == "x + y");
    REQUIRE((x * x - y).to_string() == "x^2 - y");
    REQUIRE((y - x * x).to_string() == "-x^2 + y");
    REQUIRE((x * y + one).to_string() == "x*y + 1");
    REQUIRE(SymPoly::from_int(ring, 0).to_string() == "0");

    SymPoly xq = SymPoly::variable(ring, "x", ExpPoly::qpow(1));
    REQUIRE((x + y).frobenius_power(1) == xq + SymPoly::variable(ring, "y", ExpPoly::qpow(1)));
    REQUIRE(x.frobenius_power(2).to_string() == "x^(q^2)");
    REQUIRE((xq * x).to_string() == "x^(q+1)");
    REQUIRE(one.frobenius_power(3) == one);

    SymRingPtr other = make_sym_ring({"x", "y"});
    REQUIRE_THROWS_AS(x + SymPoly::variable(other, "y"), ContextMismatch);
}

TEST_CASE("symbolic skew coefficients", "[symsys]") {
    SymRingPtr ring = make_sym_ring({"u", "v"});
    SymPoly u = SymPoly::variable(ring, "u");
    SymPoly v = SymPoly::variable(ring, "v");
    SymPoly one = SymPoly::from_int(ring, 1);

    using SS = SkewPoly<SymPoly>;
    SS f(std::vector<SymPoly>{u, one});
    SS g(std::vector<SymPoly>{v, one});
    SS fg = f * g;
    REQUIRE(fg.coeff_or_zero(0, one) == u * v);
    REQUIRE(fg.coeff_or_zero(1, one) == u + v.frobenius_power(1));
    REQUIRE(fg.coeff_or_zero(2, one) == one);
    REQUIRE(!(f * g == g * f));

    REQUIRE_THROWS_AS(SkewScalar<SymPoly>::inv(u), NotDivisible);
    REQUIRE(SkewScalar<SymPoly>::inv(one) == one);
}

TEST_CASE("symbolic commutation system at level T", "[symsys]") {
    auto chains = commutation_system_sym(3, 1, {0, 1});
    REQUIRE(chains.size() == 4);
    REQUIRE(render_chain(chains[0]) == "a0*b0 = T");
    REQUIRE(render_chain(chains[1]) == "b0^q + a0*b1 = a0^q*b1 + b0 = g1");
    REQUIRE(render_chain(chains[2]) == "b1^q + a0*Delta = a0^(q^2)*Delta + b1 = g2");
    REQUIRE(render_chain(chains[3]) == "Delta^q = Delta");

    // monic side: k = 2 names the shared top coefficient g_R
    auto two = commutation_system_sym(3, 2, {0, 1});
    REQUIRE(two.size() == 4);
    REQUIRE(render_chain(two[0]) == "a0*b0 = T");
    REQUIRE(render_chain(two[3]).find("g3") != std::string::npos);

    REQUIRE_THROWS_AS(commutation_system_sym(3, 0, {0, 1}), InvalidInput);
    REQUIRE_THROWS_AS(commutation_system_sym(3, 3, {0, 1}), InvalidInput);
    REQUIRE_THROWS_AS(commutation_system_sym(3, 1, {0}), InvalidInput);
}

TEST_CASE("level T^2+T+1 commutation system shape", "[symsys]") {
    auto chains = commutation_system_sym(3, 1, {1, 1, 1});
    REQUIRE(chains.size() == 7);
    REQUIRE(render_chain(chains[0]) == "a0*b0 = T^2 + T + 1");
    REQUIRE(render_chain(chains[6]) == "Delta^q = Delta");
    for (size_t j = 1; j <= 5; ++j) REQUIRE(chains[j].members.size() == 3);
}
