#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "drmod/errors.hpp"
#include "drmod/fq.hpp"
#include "drmod/gcd.hpp"
#include "drmod/mpoly.hpp"
#include "drmod/ratfunc.hpp"
#include "drmod/resultant.hpp"

namespace drmod {

// Exponent tuples (delta_1, ..., delta_r) of basic J-invariants.  The weight
// balance together with the per-slot box bounds and primitivity cuts the
// candidates down to a finite list for each (q, r).
struct JTuple {
    uint64_t q = 0;
    uint32_t r = 0;
    std::vector<uint64_t> delta;

    bool operator==(const JTuple&) const = default;
};

namespace detail {

inline mpz_class jt_qpow(uint64_t q, uint32_t k) {
    mpz_class base(static_cast<unsigned long>(q)), out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), k);
    return out;
}

inline uint64_t qpow_u64(uint64_t q, uint32_t k) {
    uint64_t v = 1;
    while (k--) {
        if (v > std::numeric_limits<uint64_t>::max() / q)
            throw TooLarge("q^k does not fit in 64 bits");
        v *= q;
    }
    return v;
}

} // namespace detail

inline void validate_jtuple(const JTuple& jt) {
    if (jt.q < 2) throw InvalidInput("q must be at least 2");
    if (jt.r < 2) throw InvalidInput("rank must be at least 2");
    if (jt.delta.size() != jt.r)
        throw InvalidInput("expected " + std::to_string(jt.r) + " exponents, got " +
                           std::to_string(jt.delta.size()));
    mpz_class qr1 = detail::jt_qpow(jt.q, jt.r) - 1;
    mpz_class lhs = 0;
    for (uint32_t i = 1; i < jt.r; ++i) {
        mpz_class qi1 = detail::jt_qpow(jt.q, i) - 1;
        mpz_class box = qr1 / (detail::jt_qpow(jt.q, static_cast<uint32_t>(std::gcd<uint64_t>(i, jt.r))) - 1);
        if (mpz_class(static_cast<unsigned long>(jt.delta[i - 1])) > box)
            throw InvalidInput("delta_" + std::to_string(i) + " exceeds its box bound");
        lhs += qi1 * static_cast<unsigned long>(jt.delta[i - 1]);
    }
    if (lhs != qr1 * static_cast<unsigned long>(jt.delta[jt.r - 1]))
        throw InvalidInput("exponent tuple violates the weight balance");
    uint64_t g = 0;
    for (uint64_t d : jt.delta) g = std::gcd(g, d);
    if (g != 1) throw InvalidInput("exponent tuple is not primitive");
}

// All admissible tuples for (q, r), in ascending lexicographic order of
// (delta_1, ..., delta_{r-1}); delta_r is determined by the weight balance.
inline std::vector<JTuple> enumerate_basic_j(uint64_t q, uint32_t r) {
    if (q < 2) throw InvalidInput("q must be at least 2");
    if (r < 2) throw InvalidInput("rank must be at least 2");
    mpz_class qr1 = detail::jt_qpow(q, r) - 1;
    std::vector<mpz_class> w(r);
    std::vector<uint64_t> box(r, 0);
    mpz_class points = 1;
    for (uint32_t i = 1; i < r; ++i) {
        w[i] = detail::jt_qpow(q, i) - 1;
        mpz_class b = qr1 / (detail::jt_qpow(q, static_cast<uint32_t>(std::gcd<uint64_t>(i, r))) - 1);
        points *= b + 1;
        if (points > 30000000)
            throw TooLarge("exponent box for (q, r) has more than 3*10^7 points");
        box[i] = static_cast<uint64_t>(b.get_ui());
    }
    std::vector<JTuple> out;
    std::vector<uint64_t> cur(r, 0);
    while (true) {
        mpz_class s = 0;
        for (uint32_t i = 1; i < r; ++i)
            s += w[i] * static_cast<unsigned long>(cur[i]);
        if (s % qr1 == 0) {
            uint64_t dr = mpz_class(s / qr1).get_ui();
            uint64_t g = dr;
            for (uint32_t i = 1; i < r; ++i) g = std::gcd(g, cur[i]);
            if (g == 1) {
                JTuple jt{q, r, std::vector<uint64_t>(cur.begin() + 1, cur.end())};
                jt.delta.push_back(dr);
                out.push_back(std::move(jt));
            }
        }
        uint32_t i = r - 1;
        while (i >= 1 && cur[i] == box[i]) cur[i--] = 0;
        if (i == 0) break;
        ++cur[i];
    }
    return out;
}

// The tuple used when the caller does not pick one: smallest delta_r, ties
// broken by lexicographic order on the whole tuple.
inline JTuple default_jtuple(uint64_t q, uint32_t r) {
    auto all = enumerate_basic_j(q, r);
    if (all.empty()) throw LogicError("no admissible exponent tuple");
    return *std::min_element(all.begin(), all.end(), [](const JTuple& a, const JTuple& b) {
        if (a.delta.back() != b.delta.back()) return a.delta.back() < b.delta.back();
        return a.delta < b.delta;
    });
}

// Outcome of the constant-root test: g written as sum_j c_j(X) T^j passes
// when gcd_j c_j is constant.  The gcd is unchanged under constant field
// extension, so a constant gcd rules out roots of g in the algebraic closure.
struct RootCheckResult {
    bool pass;
    MPoly witness;
};

inline RootCheckResult constant_root_check(const MPoly& g) {
    if (g.is_zero()) throw InvalidInput("constant root check needs g != 0");
    const RingPtr& ring = g.ring();
    if (ring->vars.size() != 2)
        throw InvalidInput("expected a polynomial in T and one root variable");
    size_t tv = ring->var_index("T");
    size_t xv = tv == 0 ? 1 : 0;
    std::optional<MPoly> acc;
    for (const MPoly& c : g.coeffs_in(tv)) {
        if (c.is_zero()) continue;
        acc = acc ? poly_gcd(*acc, c, xv) : normalized_in(c, xv);
        if (acc->degree(xv) == 0) break;
    }
    return {acc->degree(xv) == 0, *acc};
}

// Everything Algorithm-style root bookkeeping needs for one delta: the
// b-sequence, the cleared equation E, and the derived data filled in by the
// later steps.
struct SelfIsogData {
    const FieldCtx* F;
    uint32_t r;
    FqElem delta;
    RingPtr ring;                        // F_q[T, y], y playing the root a_0
    std::vector<RatFunc> b;              // b_0 .. b_{r-2}
    RatFunc E;                           // b_{r-2}^q - b_{r-2} - delta (y^{q^{r-1}} - y)
    std::vector<RatFunc> gi;             // g_1 .. g_{r-1} once computed
    std::optional<MPoly> g_y;            // squarefree g, root variable y
    std::optional<MPoly> g_poly;         // the same renamed into F_q[T, X]
    std::vector<std::pair<uint64_t, uint64_t>> g_multiplicity;
    std::optional<RootCheckResult> a0_check;
};

inline SelfIsogData build_recurrence(const FieldCtx* F, uint32_t r, const FqElem& delta) {
    if (r < 2) throw InvalidInput("rank must be at least 2");
    if (delta.ctx() != F) throw ContextMismatch("delta lives in a different field");
    if (delta.is_zero()) throw InvalidInput("delta must be a unit");
    RingPtr ring = make_ring(F, {"T", "y"});
    MPoly T = MPoly::variable(ring, "T");
    MPoly y = MPoly::variable(ring, "y");
    std::vector<RatFunc> b;
    b.push_back(RatFunc(T, y));
    for (uint32_t i = 1; i + 1 < r; ++i) {
        MPoly den = MPoly::variable(ring, 1, detail::qpow_u64(F->q, i)) - y;
        b.push_back((b.back().frobenius_power(1) - b.back()) / RatFunc::from_poly(den));
    }
    MPoly span = MPoly::variable(ring, 1, detail::qpow_u64(F->q, r - 1)) - y;
    RatFunc E = b.back().frobenius_power(1) - b.back() -
                RatFunc::from_poly(MPoly::constant(ring, delta) * span);
    return SelfIsogData{F,  r,  delta,        ring, std::move(b), std::move(E),
                        {}, {}, std::nullopt, {},   std::nullopt};
}

// Rebuild f in target, sending source variable i to index map[i]; an entry of
// drop_var insists the exponent is zero.
inline constexpr size_t drop_var = static_cast<size_t>(-1);

inline MPoly reindex_vars(const MPoly& f, const RingPtr& target, const std::vector<size_t>& map) {
    if (map.size() != f.ring()->vars.size())
        throw InvalidInput("variable map arity mismatch");
    if (f.ring()->field != target->field)
        throw ContextMismatch("rings over different fields");
    MPoly out = MPoly::zero(target);
    for (const auto& [e, c] : f.terms()) {
        Exps e2(target->vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (map[i] == drop_var)
                throw LogicError("projected variable still present");
            if (map[i] >= target->vars.size())
                throw InvalidInput("variable map out of range");
            e2[map[i]] += e[i];
        }
        out = out + MPoly::monomial(target, e2, c);
    }
    return out;
}

// Numerator of E with the F_q[T]-content stripped, squarefree part taken;
// multiplicities of the dropped factors and the constant-root verdict land in
// the data.  The polynomial is kept twice, with root variable y and renamed
// to X for display.
inline const MPoly& modular_poly_g(SelfIsogData& data) {
    if (data.g_poly) return *data.g_poly;
    const size_t yv = 1;
    MPoly num = primitive_part(data.E.num(), yv);
    data.g_multiplicity = multiplicity_profile(num, yv);
    MPoly rad = radical_in(num, yv);
    data.g_y = rad;
    RingPtr disp = make_ring(data.F, {"T", "X"});
    data.g_poly = reindex_vars(rad, disp, {0, 1});
    data.a0_check = constant_root_check(*data.g_poly);
    return *data.g_poly;
}

inline SelfIsogData modular_poly_g(const FieldCtx* F, uint32_t r, const FqElem& delta) {
    SelfIsogData data = build_recurrence(F, r, delta);
    modular_poly_g(data);
    return data;
}

inline const std::vector<RatFunc>& coefficients_from_root(SelfIsogData& data) {
    if (!data.gi.empty()) return data.gi;
    RatFunc y = RatFunc::from_poly(MPoly::variable(data.ring, "y"));
    std::vector<RatFunc> gi;
    for (uint32_t i = 1; i + 1 < data.r; ++i)
        gi.push_back(y * data.b[i] + data.b[i - 1].frobenius_power(1));
    RatFunc dy = RatFunc::from_poly(MPoly::constant(data.ring, data.delta) *
                                    MPoly::variable(data.ring, "y"));
    gi.push_back(dy + data.b[data.r - 2].frobenius_power(1));
    data.gi = std::move(gi);
    return data.gi;
}

inline RatFunc j_eval(const JTuple& jt, SelfIsogData& data) {
    validate_jtuple(jt);
    if (jt.q != data.F->q || jt.r != data.r)
        throw InvalidInput("tuple and data disagree on (q, r)");
    coefficients_from_root(data);
    FqElem unit = data.delta.pow(jt.delta[data.r - 1]).inv();
    RatFunc J = RatFunc::from_poly(MPoly::constant(data.ring, unit));
    for (uint32_t i = 0; i + 1 < data.r; ++i)
        J = J * data.gi[i].pow(jt.delta[i]);
    return J;
}

struct PhiSelf {
    MPoly phi;                        // product over the selected deltas, in F_q[T, X]
    std::vector<FqElem> deltas;       // evaluation order
    std::vector<MPoly> factors;       // Phi_delta, parallel to deltas
    std::vector<SelfIsogData> data;   // per-delta pipeline state
};

// Res_y(g~, D X - N), normalized monic in X, multiplied over delta in F_q^*
// (or one chosen delta).  The single monic normalization absorbs lc(g~)
// powers and the product of D over the roots in one exact division.
inline PhiSelf phi_self_T(const FieldCtx* F, uint32_t r, const JTuple& jt,
                          std::optional<FqElem> only_delta = std::nullopt) {
    validate_jtuple(jt);
    if (jt.q != F->q || jt.r != r) throw InvalidInput("tuple does not match (q, r)");
    std::vector<FqElem> deltas;
    if (only_delta) {
        if (only_delta->ctx() != F) throw ContextMismatch("delta lives in a different field");
        if (only_delta->is_zero()) throw InvalidInput("delta must be a unit");
        deltas.push_back(*only_delta);
    } else {
        FqElem w(F, F->generator_packed());
        FqElem cur = FqElem::one(F);
        for (uint64_t k = 0; k + 1 < F->q; ++k) {
            deltas.push_back(cur);
            cur = cur * w;
        }
    }
    RingPtr disp = make_ring(F, {"T", "X"});
    RingPtr work = make_ring(F, {"T", "X", "y"});
    MPoly xw = MPoly::variable(work, "X");
    PhiSelf out{MPoly::from_int(disp, 1), std::move(deltas), {}, {}};
    for (const FqElem& d : out.deltas) {
        SelfIsogData data = build_recurrence(F, r, d);
        modular_poly_g(data);
        RatFunc J = j_eval(jt, data);
        const MPoly& gy = *data.g_y;
        MPoly meet = poly_gcd(gy, J.den(), 1);
        if (meet.degree(1) > 0)
            throw DegenerateJDenominator("g shares the factor " + meet.to_string() +
                                         " with the denominator of J");
        int64_t n = gy.degree(1);
        MPoly phid = MPoly::from_int(disp, 1);
        if (n > 0) {
            MPoly g3 = reindex_vars(gy, work, {0, 2});
            MPoly s3 = reindex_vars(J.den(), work, {0, 2}) * xw -
                       reindex_vars(J.num(), work, {0, 2});
            MPoly res = resultant(g3, s3, 2);
            MPoly raw = reindex_vars(res, disp, {0, 1, drop_var});
            if (raw.degree(1) != n) throw LogicError("resultant dropped degree in X");
            MPoly lead = raw.coeff_of(1, static_cast<uint64_t>(n));
            auto monic = raw.divexact(lead);
            if (!monic)
                throw IntegralityViolation("coefficients of Phi are not polynomial in T "
                                           "after monic normalization");
            phid = *monic;
        }
        out.factors.push_back(phid);
        out.phi = out.phi * phid;
        out.data.push_back(std::move(data));
    }
    return out;
}

struct TrialFactors {
    std::vector<MPoly> factors;  // monic in the main variable, with multiplicity
    MPoly cofactor;              // whatever trial division could not split
};

// Exhaustive trial division by monic candidates in main_var of degree at most
// max_deg whose coefficients are bounded in t_var-degree by the input.  Stops
// raising the degree once the candidate space passes 5*10^6.
inline TrialFactors trial_factor_bounded(const MPoly& g, size_t main_var, size_t t_var,
                                         uint32_t max_deg = 4) {
    if (g.is_zero()) throw InvalidInput("cannot trial factor zero");
    const FieldCtx* F = g.ring()->field;
    TrialFactors out{{}, g};
    int64_t dt = std::max<int64_t>(g.degree(t_var), 0);
    uint64_t per_coeff = detail::qpow_u64(F->q, static_cast<uint32_t>(dt) + 1);
    MPoly tvar = MPoly::variable(g.ring(), t_var);
    for (uint32_t d = 1; d <= max_deg; ++d) {
        double space = 1;
        for (uint32_t k = 0; k < d; ++k) space *= static_cast<double>(per_coeff);
        if (space > 5e6) break;
        uint64_t count = 1;
        for (uint32_t k = 0; k < d; ++k) count *= per_coeff;
        for (uint64_t id = 0; id < count; ++id) {
            if (out.cofactor.degree(main_var) < static_cast<int64_t>(d)) break;
            MPoly h = MPoly::variable(g.ring(), main_var, d);
            uint64_t rest = id;
            for (uint32_t k = 0; k < d; ++k) {
                uint64_t slot = rest % per_coeff;
                rest /= per_coeff;
                MPoly c = MPoly::zero(g.ring());
                for (uint32_t j = 0; slot != 0; ++j) {
                    FqElem digit(F, static_cast<uint32_t>(slot % F->q));
                    slot /= F->q;
                    if (!digit.is_zero()) c = c + digit * tvar.pow(j);
                }
                if (!c.is_zero()) h = h + c * MPoly::variable(g.ring(), main_var, k);
            }
            while (true) {
                auto quo = out.cofactor.divexact(h);
                if (!quo) break;
                out.factors.push_back(h);
                out.cofactor = *quo;
            }
        }
    }
    return out;
}

} // namespace drmod
