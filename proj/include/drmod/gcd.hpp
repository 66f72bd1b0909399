#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "drmod/mpoly.hpp"

namespace drmod {

// Pseudo remainder of a by b with respect to variable v:
// lc_v(b)^(deg_v a - deg_v b + 1) * a  reduced mod b.
inline MPoly prem(const MPoly& a, const MPoly& b, size_t v) {
    int64_t da = a.degree(v), db = b.degree(v);
    if (b.is_zero()) throw DivisionByZero("pseudo remainder by zero");
    if (da < db) return a;
    MPoly lb = b.lc_in(v);
    MPoly r = a;
    int64_t reductions = 0;
    while (!r.is_zero() && r.degree(v) >= db) {
        int64_t dr = r.degree(v);
        MPoly lr = r.lc_in(v);
        MPoly shift = MPoly::variable(r.ring(), v, static_cast<uint64_t>(dr - db));
        r = lb * r - lr * shift * b;
        ++reductions;
    }
    for (int64_t i = reductions; i < da - db + 1; ++i) r = lb * r;
    return r;
}

inline MPoly mv_gcd(const MPoly& a, const MPoly& b);

// Content of a with respect to v: gcd of the coefficients of the powers of v.
inline MPoly content_in(const MPoly& a, size_t v) {
    auto cs = a.coeffs_in(v);
    std::optional<MPoly> g;
    for (auto& c : cs) {
        if (c.is_zero()) continue;
        g = g ? mv_gcd(*g, c) : c.scal_normalized();
    }
    if (!g) throw InvalidInput("content of the zero polynomial");
    return *g;
}

inline MPoly primitive_part(const MPoly& a, size_t v) {
    MPoly c = content_in(a, v);
    auto q = a.divexact(c);
    if (!q) throw LogicError("content does not divide its polynomial");
    return *q;
}

// Full multivariate gcd by primitive PRS, recursing on the highest occurring
// variable.  Result is primitive and has leading graded-lex coefficient 1.
inline MPoly mv_gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero()) throw UndefinedGcd("gcd(0,0)");
    if (a.is_zero()) return b.scal_normalized();
    if (b.is_zero()) return a.scal_normalized();
    size_t n = a.ring()->vars.size();
    size_t v = n;
    for (size_t i = n; i-- > 0;) {
        if (a.depends_on(i) || b.depends_on(i)) { v = i; break; }
    }
    if (v == n) return MPoly::from_int(a.ring(), 1);

    MPoly ca = content_in(a, v), cb = content_in(b, v);
    MPoly c = mv_gcd(ca, cb);
    MPoly A = *a.divexact(ca);
    MPoly B = *b.divexact(cb);
    if (A.degree(v) < B.degree(v)) std::swap(A, B);
    while (true) {
        if (B.degree(v) == 0) return c.scal_normalized();
        MPoly r = prem(A, B, v);
        if (r.is_zero()) return (c * B).scal_normalized();
        A = B;
        B = primitive_part(r, v);
    }
}

// Monic in main_var when the leading main_var coefficient is a constant,
// otherwise leading graded-lex coefficient 1.
inline MPoly normalized_in(const MPoly& f, size_t main_var) {
    if (f.is_zero()) return f;
    MPoly lc = f.lc_in(main_var);
    if (lc.is_constant()) return lc.constant_value().inv() * f;
    return f.scal_normalized();
}

// Gcd of f and g viewed in Frac(F_q[other vars])[main_var]: the primitive
// gcd with respect to main_var, normalized so it is monic whenever its
// leading main_var coefficient is a constant.
inline MPoly poly_gcd(const MPoly& f, const MPoly& g, size_t main_var) {
    if (f.is_zero() && g.is_zero()) throw UndefinedGcd("gcd(0,0)");
    if (f.is_zero()) return normalized_in(primitive_part(g, main_var), main_var);
    if (g.is_zero()) return normalized_in(primitive_part(f, main_var), main_var);
    MPoly A = primitive_part(f, main_var);
    MPoly B = primitive_part(g, main_var);
    if (A.degree(main_var) < B.degree(main_var)) std::swap(A, B);
    while (true) {
        if (B.degree(main_var) == 0) return MPoly::from_int(f.ring(), 1);
        MPoly r = prem(A, B, main_var);
        if (r.is_zero()) return normalized_in(B, main_var);
        A = B;
        B = primitive_part(r, main_var);
    }
}

// p-th root when every exponent is divisible by p; the coefficient map
// c -> c^(q/p) inverts Frobenius on F_q.
inline std::optional<MPoly> pth_root(const MPoly& f) {
    const FieldCtx* F = f.ring()->field;
    uint32_t p = F->p;
    uint64_t qp = F->q / p;
    MPoly acc(f.ring());
    for (auto& [e, c] : f.terms()) {
        Exps e2(e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] % p != 0) return std::nullopt;
            e2[i] = e[i] / p;
        }
        acc = acc + MPoly::monomial(f.ring(), e2, c.pow(qp));
    }
    return acc;
}

// Radical with respect to main_var over the fraction field of the other
// variables; expects input primitive in main_var.  Char-p aware.
inline MPoly radical_in(const MPoly& f, size_t main_var) {
    if (f.is_zero()) throw InvalidInput("radical of zero");
    if (f.degree(main_var) <= 0) return MPoly::from_int(f.ring(), 1);
    MPoly df = f.derivative(main_var);
    if (df.is_zero()) {
        auto root = pth_root(f);
        if (!root)
            throw InseparableInput("zero derivative and coefficients are not p-th powers");
        return radical_in(*root, main_var);
    }
    MPoly g = poly_gcd(f, df, main_var);
    if (g.degree(main_var) == 0) return normalized_in(f, main_var);
    MPoly w = *f.divexact(g);
    MPoly rg = radical_in(g, main_var);
    MPoly d = poly_gcd(w, rg, main_var);
    MPoly prod = w * rg;
    auto out = prod.divexact(d);
    if (!out) throw LogicError("radical combination failed to divide");
    return normalized_in(*out, main_var);
}

// (multiplicity, degree contribution in main_var) pairs, highest multiplicity
// last; degrees sum to deg(f) weighted by multiplicity.
inline std::vector<std::pair<uint64_t, uint64_t>> multiplicity_profile(const MPoly& f, size_t main_var) {
    std::vector<int64_t> rad_degs;
    MPoly cur = primitive_part(f, main_var);
    std::vector<MPoly> rads;
    while (cur.degree(main_var) > 0) {
        MPoly r = radical_in(cur, main_var);
        rads.push_back(r);
        auto q = cur.divexact(r);
        if (!q) throw LogicError("radical does not divide in multiplicity profile");
        cur = q->scal_normalized();
    }
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (size_t k = 0; k < rads.size(); ++k) {
        int64_t dk = rads[k].degree(main_var);
        int64_t dnext = (k + 1 < rads.size()) ? rads[k + 1].degree(main_var) : 0;
        if (dk - dnext > 0)
            out.emplace_back(k + 1, static_cast<uint64_t>(dk - dnext));
    }
    return out;
}

inline MPoly squarefree_part(const MPoly& f, size_t main_var) {
    if (f.is_zero()) throw InvalidInput("squarefree part of zero");
    return radical_in(primitive_part(f, main_var), main_var);
}

} // namespace drmod
