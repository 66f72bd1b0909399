#pragma once

#include "drmod/frac.hpp"
#include "drmod/mpoly.hpp"
#include "drmod/quot.hpp"
#include "drmod/ratfunc.hpp"

namespace drmod {

// Conversions between the sparse multivariate view and the dense tower
// F_q[T], F_q(T), F_q(T)[y].

inline APoly mpoly_to_apoly(const MPoly& f, size_t t_var) {
    const FieldCtx* F = f.ring()->field;
    for (size_t i = 0; i < f.ring()->vars.size(); ++i)
        if (i != t_var && f.depends_on(i))
            throw InvalidInput("polynomial is not univariate in the requested variable");
    std::vector<FqElem> c(static_cast<size_t>(f.degree(t_var) + 1), FqElem::zero(F));
    if (f.is_zero()) return APoly();
    for (auto& [e, coeff] : f.terms()) c[e[t_var]] = coeff;
    return APoly(std::move(c));
}

inline MPoly apoly_to_mpoly(const APoly& f, const RingPtr& ring, size_t t_var) {
    MPoly r = MPoly::zero(ring);
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        Exps e(ring->vars.size(), 0);
        e[t_var] = i;
        r = r + MPoly::monomial(ring, std::move(e), f.coeffs()[i]);
    }
    return r;
}

// f in F_q[T][y] viewed as a dense polynomial in y over F_q(T).
inline TyPoly mpoly_to_typoly(const MPoly& f, size_t t_var, size_t y_var) {
    const FieldCtx* F = f.ring()->field;
    for (size_t i = 0; i < f.ring()->vars.size(); ++i)
        if (i != t_var && i != y_var && f.depends_on(i))
            throw InvalidInput("polynomial involves variables beyond T and the main variable");
    if (f.is_zero()) return TyPoly();
    std::vector<FracT> c(static_cast<size_t>(f.degree(y_var) + 1), fq_t_zero(F));
    auto cs = f.coeffs_in(y_var);
    for (size_t k = 0; k < cs.size(); ++k)
        c[k] = frac_from_apoly(mpoly_to_apoly(cs[k], t_var), F);
    return TyPoly(std::move(c));
}

// Inverse of the above when every coefficient is integral (denominator 1);
// throws IntegralityViolation otherwise.
inline MPoly typoly_to_mpoly(const TyPoly& f, const RingPtr& ring, size_t t_var, size_t y_var) {
    MPoly r = MPoly::zero(ring);
    for (size_t k = 0; k < f.coeffs().size(); ++k) {
        const FracT& c = f.coeffs()[k];
        if (c.is_zero()) continue;
        if (!c.is_poly())
            throw IntegralityViolation("coefficient has a nonconstant denominator");
        MPoly part = apoly_to_mpoly(c.num(), ring, t_var);
        Exps shift(ring->vars.size(), 0);
        shift[y_var] = k;
        r = r + part * MPoly::monomial(ring, std::move(shift), FqElem::one(ring->field));
    }
    return r;
}

inline QuotElem ratfunc_mod(const RatFunc& u, const QuotCtxPtr& ctx, size_t t_var, size_t y_var) {
    TyPoly n = mpoly_to_typoly(u.num(), t_var, y_var);
    TyPoly d = mpoly_to_typoly(u.den(), t_var, y_var);
    QuotElem nn(ctx, std::move(n));
    QuotElem dd(ctx, std::move(d));
    if (dd.is_zero())
        throw NonInvertibleDenominator("denominator vanishes in the quotient ring");
    return nn * dd.inv();
}

} // namespace drmod
