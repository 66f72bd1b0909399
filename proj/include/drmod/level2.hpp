#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "drmod/drinfeld.hpp"
#include "drmod/symsys.hpp"

namespace drmod {

// Certificate that psi_theta := phi_a is an F_q[theta]-module of rank r*d.
template <typename R>
struct ReductionCert {
    uint32_t source_rank;
    APoly a;
    int64_t d;
    uint64_t target_rank;
    SkewPoly<R> psi;
};

template <typename R>
ReductionCert<R> rank_reduction(const DrinfeldModule<R>& phi, const APoly& a) {
    if (a.degree() < 1) throw InvalidInput("a must have degree at least 1");
    if (!(a.lc() == RingOps<FqElem>::one(a.lc()))) throw InvalidInput("a must be monic");
    ReductionCert<R> cert{phi.rank(), a, a.degree(),
                          static_cast<uint64_t>(phi.rank()) * static_cast<uint64_t>(a.degree()),
                          drinfeld_image(phi, a)};
    if (cert.psi.degree() < 0 ||
        static_cast<uint64_t>(cert.psi.degree()) != cert.target_rank)
        throw InvalidInput("top coefficient of phi_a vanished; coefficient ring has zero divisors");
    return cert;
}

// Same, with a commuting u carried along: commutation with phi_T is demanded
// up front, commutation with psi_theta is then checked as well.
template <typename R>
ReductionCert<R> rank_reduction(const DrinfeldModule<R>& phi, const APoly& a,
                                const SkewPoly<R>& u) {
    if (!(u * phi.phi_T() == phi.phi_T() * u))
        throw InvalidInput("u does not commute with phi_T");
    ReductionCert<R> cert = rank_reduction(phi, a);
    if (!(u * cert.psi == cert.psi * u))
        throw LogicError("commuting u failed against phi_a");
    return cert;
}

// The coefficient equations that a rank-r module phi_T = T + h_1 tau + ... + Delta tau^r
// must satisfy for phi_a to have the prescribed coefficients g_1..g_{r deg a}.
// Each chain is [lhs, g_j]; the j = 0 equation is the identity a(T) = a(T)
// and is omitted.
inline std::vector<EqChain<SymPoly>> lift_system_sym(uint32_t r, const std::vector<int64_t>& a,
                                                     std::vector<std::string> names = {}) {
    size_t adeg = a.size();
    while (adeg > 0 && a[adeg - 1] == 0) --adeg;
    if (adeg < 2) throw InvalidInput("a must have degree at least 1");
    if (r < 2) throw InvalidInput("rank must be at least 2");
    uint64_t big_r = static_cast<uint64_t>(r) * static_cast<uint64_t>(adeg - 1);

    if (names.empty())
        for (uint64_t j = 1; j <= big_r; ++j) names.push_back("g" + std::to_string(j));
    if (names.size() != big_r) throw InvalidInput("need one target name per tau-degree");

    std::vector<std::string> vars{"T"};
    for (uint32_t i = 1; i < r; ++i) vars.push_back("h" + std::to_string(i));
    vars.push_back("Delta");
    for (auto& n : names) {
        for (auto& v : vars)
            if (v == n) throw InvalidInput("target name collides with unknown " + n);
        vars.push_back(n);
    }
    SymRingPtr ring = make_sym_ring(vars);

    std::vector<SymPoly> pc;
    pc.push_back(SymPoly::variable(ring, "T"));
    for (uint32_t i = 1; i < r; ++i) pc.push_back(SymPoly::variable(ring, "h" + std::to_string(i)));
    pc.push_back(SymPoly::variable(ring, "Delta"));
    DrinfeldModule<SymPoly> phi(SkewPoly<SymPoly>(std::move(pc)));

    std::vector<SymPoly> ac;
    for (size_t i = 0; i < adeg; ++i) ac.push_back(SymPoly::from_int(ring, a[i]));
    SkewPoly<SymPoly> psi = drinfeld_image(phi, ac);

    SymPoly like = SymPoly::zero(ring);
    std::vector<EqChain<SymPoly>> out;
    for (uint64_t j = 1; j <= big_r; ++j) {
        EqChain<SymPoly> eq;
        eq.members.push_back(psi.coeff_or_zero(static_cast<size_t>(j), like));
        eq.members.push_back(SymPoly::variable(ring, names[j - 1]));
        out.push_back(std::move(eq));
    }
    return out;
}

struct LiftSystem {
    std::vector<EqChain<SymPoly>> equations;
    std::string choice_bound;               // choices of (h_1, h_2, Delta) per target
    std::vector<std::string> shapes;        // the univariate solving shapes, in solve order
    std::string unit_note;
};

// Rank 3, a = T^2 + T + 1: the six lift equations plus the solving metadata
// behind the (q^3+1) q^6 choice count.
inline LiftSystem lift_constraints(const std::vector<std::string>& psi_names) {
    if (psi_names.size() != 6) throw InvalidInput("expected a rank-6 coefficient list");
    LiftSystem sys;
    sys.equations = lift_system_sym(3, {1, 1, 1}, psi_names);
    sys.choice_bound = "(q^3+1)*q^6";

    SymRingPtr sh = make_sym_ring({"X", "h2", "Delta"});
    SymPoly X1 = SymPoly::variable(sh, "X");
    SymPoly Xq3 = SymPoly::variable(sh, "X", ExpPoly::qpow(3));
    SymPoly D1 = SymPoly::variable(sh, "Delta");
    SymPoly Dq = SymPoly::variable(sh, "Delta", ExpPoly::qpow(1));
    SymPoly Dq2 = SymPoly::variable(sh, "Delta", ExpPoly::qpow(2));
    SymPoly Dtop = SymPoly::variable(sh, "Delta", ExpPoly::qpow(3) + ExpPoly::constant(1));
    SymPoly h2pow = SymPoly::variable(sh, "h2", ExpPoly::qpow(2) + ExpPoly::constant(1));
    sys.shapes.push_back(Dtop.to_string() + " = " + psi_names[5]);
    sys.shapes.push_back((Xq3 * D1 + X1 * Dq2).to_string() + " = " + psi_names[4]);
    sys.shapes.push_back((Xq3 * D1 + X1 * Dq).to_string() + " = " + psi_names[3] + " - " +
                         h2pow.to_string());
    sys.unit_note = psi_names[5] + " lies in F_(q^2)^*";
    return sys;
}

inline mpz_class mpz_qpow(uint64_t q, unsigned long k) {
    mpz_class base(static_cast<unsigned long>(q));
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
    return r;
}

inline void bound_hypothesis_check(uint64_t q, bool force) {
    if (q < 2) throw InvalidInput("q must be a prime power");
    uint64_t p = 0;
    if (q % 2 == 0) p = 2;
    else if (q % 3 == 0) p = 3;
    else {
        for (uint64_t d = 5; d <= 1000000 && d * d <= q; d += 2)
            if (q % d == 0) { p = d; break; }
        if (p == 0) p = q;  // prime or a product of two large primes; treated as prime
    }
    uint64_t m = q;
    while (m % p == 0) m /= p;
    if (m != 1) throw InvalidInput("q must be a prime power");
    if (p <= 3 && !force)
        throw HypothesisViolation("closed-form bounds assume characteristic > 3");
}

// 30 q^9 - 5 q^8
inline mpz_class bound_pairs(uint64_t q, bool force = false) {
    bound_hypothesis_check(q, force);
    return 30 * mpz_qpow(q, 9) - 5 * mpz_qpow(q, 8);
}

// (q^3+1)(q^2-1)(30 q^15 - 4 q^14 + q^12 + 2 q^11 - q^10 - 2 q^9 - q^8)
inline mpz_class bound_Nq(uint64_t q, bool force = false) {
    bound_hypothesis_check(q, force);
    mpz_class bracket = 30 * mpz_qpow(q, 15) - 4 * mpz_qpow(q, 14) + mpz_qpow(q, 12) +
                        2 * mpz_qpow(q, 11) - mpz_qpow(q, 10) - 2 * mpz_qpow(q, 9) -
                        mpz_qpow(q, 8);
    return (mpz_qpow(q, 3) + 1) * (mpz_qpow(q, 2) - 1) * bracket;
}

// (q^3+1) q^6 choices of (h_1, h_2, Delta) per lift target
inline mpz_class lift_choice_bound(uint64_t q) {
    return (mpz_qpow(q, 3) + 1) * mpz_qpow(q, 6);
}

// Case analysis on the constant term a_0 of a degree-1-in-tau self-isogeny
// at level T^2 + T + 1: small residue fields are impossible, the remaining
// two report the degree of the polynomial pinning down a_1.
struct A0Case {
    uint32_t extension_degree;  // a_0 generates F_{q^d} over F_q
    bool possible;
    ExpPoly a1_degree;          // zero when the case is excluded
};

inline std::vector<A0Case> a0_cases() {
    ExpPoly d3 = ExpPoly::qpow(2) + ExpPoly::qpow(1) + ExpPoly::constant(1);
    ExpPoly d4 = ExpPoly::qpow(4) + ExpPoly::qpow(2) + ExpPoly::qpow(1) + ExpPoly::constant(1);
    return {{1, false, ExpPoly()}, {2, false, ExpPoly()}, {3, true, d3}, {4, true, d4}};
}

} // namespace drmod
