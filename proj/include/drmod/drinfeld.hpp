#pragma once

#include <string>
#include <vector>

#include "drmod/skew.hpp"
#include "drmod/upoly.hpp"

namespace drmod {

// A Drinfeld module of rank r given by phi_T = gamma(T) + g_1 tau + ... + g_r tau^r.
// The image of T is explicit so the same type serves F_q[T]-modules and the
// reduced F_q[theta]-modules, whose tau^0 coefficient is theta.
template <typename R>
class DrinfeldModule {
public:
    DrinfeldModule(R t_image, std::vector<R> g) {
        std::vector<R> c;
        c.reserve(g.size() + 1);
        c.push_back(std::move(t_image));
        for (auto& x : g) c.push_back(std::move(x));
        phi_t_ = SkewPoly<R>(std::move(c));
        if (phi_t_.degree() < 2) throw InvalidInput("Drinfeld module needs rank at least 2");
    }
    explicit DrinfeldModule(SkewPoly<R> phi_t) : phi_t_(std::move(phi_t)) {
        if (phi_t_.degree() < 2) throw InvalidInput("Drinfeld module needs rank at least 2");
    }

    uint32_t rank() const { return static_cast<uint32_t>(phi_t_.degree()); }
    const SkewPoly<R>& phi_T() const { return phi_t_; }
    const R& t_image() const { return phi_t_[0]; }
    const R& g(size_t i) const { return phi_t_[i]; }  // 1 <= i <= rank

private:
    SkewPoly<R> phi_t_;
};

// phi_a for a in F_q[T], by Horner on a's coefficients.  tau-degree is
// rank * deg(a) whenever the coefficient ring is a domain.
template <typename R>
SkewPoly<R> drinfeld_image(const DrinfeldModule<R>& phi, const std::vector<R>& a_coeffs) {
    bool all_zero = true;
    for (auto& c : a_coeffs) all_zero = all_zero && SkewScalar<R>::is_zero(c);
    if (a_coeffs.empty() || all_zero) throw InvalidInput("phi_a requires a nonzero a");
    SkewPoly<R> acc;
    for (size_t i = a_coeffs.size(); i-- > 0;) {
        acc = acc * phi.phi_T() + SkewPoly<R>::from_scalar(a_coeffs[i]);
    }
    return acc;
}

template <typename R>
SkewPoly<R> drinfeld_image(const DrinfeldModule<R>& phi, const APoly& a) {
    const R& like = phi.t_image();
    std::vector<R> c;
    c.reserve(a.coeffs().size());
    for (auto& x : a.coeffs()) c.push_back(SkewScalar<R>::from_base(x, like));
    if (a.is_zero()) throw InvalidInput("phi_a requires a nonzero a");
    return drinfeld_image(phi, c);
}

// Dual of the isogeny u with respect to a: the unique u-hat with
// u∘u-hat = u-hat∘u = phi_a.  b_0 comes from the x-coefficient and each
// following b_j from the difference of the two compositions, whose pivot
// is u_0 - u_0^{q^j}.  Both composition identities are re-verified.
template <typename R>
SkewPoly<R> dual_isogeny(const DrinfeldModule<R>& phi, const SkewPoly<R>& u, const APoly& a) {
    if (u.is_zero()) throw InvalidInput("zero map is not an isogeny");
    SkewPoly<R> phi_a = drinfeld_image(phi, a);
    int64_t big_r = phi_a.degree();
    int64_t k = u.degree();
    if (k > big_r) throw NotAnIsogeny("tau-degree of u exceeds that of phi_a");

    const R u0 = u[0];
    const R like = phi.t_image();
    R u0inv = SkewScalar<R>::zero(like);
    try {
        u0inv = SkewScalar<R>::inv(u0);
    } catch (const Error&) {
        throw DegenerateDenominator("x-coefficient of u is not invertible (index 0)");
    }

    std::vector<R> b;
    b.push_back(phi_a.coeff_or_zero(0, like) * u0inv);
    for (int64_t j = 1; j + k <= big_r; ++j) {
        if (k == 0) {
            b.push_back(phi_a.coeff_or_zero(static_cast<size_t>(j), like) * u0inv);
            continue;
        }
        // known terms of (u∘uhat)_j - (uhat∘u)_j involving b_0..b_{j-1}
        R known = SkewScalar<R>::zero(like);
        for (int64_t i = 1; i <= k && i <= j; ++i)
            known = known + u[static_cast<size_t>(i)] *
                                SkewScalar<R>::frobenius(b[static_cast<size_t>(j - i)],
                                                         static_cast<uint32_t>(i));
        for (int64_t i = j - k; i < j; ++i) {
            if (i < 0) continue;
            known = known - b[static_cast<size_t>(i)] *
                                SkewScalar<R>::frobenius(u[static_cast<size_t>(j - i)],
                                                         static_cast<uint32_t>(i));
        }
        R pivot = SkewScalar<R>::frobenius(u0, static_cast<uint32_t>(j)) - u0;
        if (SkewScalar<R>::is_zero(pivot)) {
            std::string msg = "solving denominator u_0^(q^" + std::to_string(j) +
                              ") - u_0 vanishes (index " + std::to_string(j) + ")";
            if (SkewScalar<R>::is_zero(known)) msg += "; equation degenerates, solution not unique";
            throw DegenerateDenominator(msg);
        }
        R pinv = SkewScalar<R>::zero(like);
        try {
            pinv = SkewScalar<R>::inv(pivot);
        } catch (const Error&) {
            throw DegenerateDenominator("solving denominator not invertible (index " +
                                        std::to_string(j) + ")");
        }
        b.push_back(known * pinv);
    }

    SkewPoly<R> uhat(std::move(b));
    if (!(u * uhat == phi_a) || !(uhat * u == phi_a))
        throw NotAnIsogeny("candidate dual fails the composition identities");
    return uhat;
}

// One emitted equation: a chain m_0 = m_1 = ... joined on rendering.
template <typename R>
struct EqChain {
    std::vector<R> members;
};

// Coefficient-matching chains of u∘uhat = uhat∘u = target, one chain per
// tau-degree, duplicates inside a chain collapsed.
template <typename R>
std::vector<EqChain<R>> commutation_chains(const SkewPoly<R>& u, const SkewPoly<R>& uhat,
                                           const std::vector<R>& target) {
    SkewPoly<R> lhs = u * uhat;
    SkewPoly<R> rhs = uhat * u;
    const R& like = target.empty() ? u[0] : target[0];
    size_t top = target.size();
    std::vector<EqChain<R>> out;
    for (size_t j = 0; j < top; ++j) {
        EqChain<R> eq;
        for (const R& m : {lhs.coeff_or_zero(j, like), rhs.coeff_or_zero(j, like), target[j]}) {
            bool dup = false;
            for (auto& seen : eq.members) dup = dup || seen == m;
            if (!dup) eq.members.push_back(m);
        }
        out.push_back(std::move(eq));
    }
    return out;
}

// Symbolic commutation system for a monic u of tau-degree k against phi_a,
// over concrete F_q: unknowns a0..a_{k-1}, b0.., with the shared top
// coefficient of uhat and phi_a named Delta (k = 1) or g_R.
inline std::vector<EqChain<MPoly>> commutation_system(uint32_t r, const FieldCtx* F, uint32_t k,
                                                      const APoly& a) {
    if (a.is_zero()) throw InvalidInput("a must be nonzero");
    uint64_t big_r = static_cast<uint64_t>(r) * static_cast<uint64_t>(a.degree());
    if (k < 1 || k >= big_r) throw InvalidInput("need 1 <= k < r*deg(a) for the dual shape");

    std::vector<std::string> vars{"T"};
    for (uint32_t i = 0; i < k; ++i) vars.push_back("a" + std::to_string(i));
    for (uint64_t i = 0; i + k < big_r; ++i) vars.push_back("b" + std::to_string(i));
    std::string topname = (k == 1) ? "Delta" : ("g" + std::to_string(big_r));
    for (uint64_t j = 1; j < big_r; ++j) vars.push_back("g" + std::to_string(j));
    vars.push_back(topname);
    RingPtr ring = make_ring(F, vars);

    std::vector<MPoly> ucoef;
    for (uint32_t i = 0; i < k; ++i) ucoef.push_back(MPoly::variable(ring, "a" + std::to_string(i)));
    ucoef.push_back(MPoly::from_int(ring, 1));
    SkewPoly<MPoly> u(std::move(ucoef));

    std::vector<MPoly> hcoef;
    for (uint64_t i = 0; i + k < big_r; ++i) hcoef.push_back(MPoly::variable(ring, "b" + std::to_string(i)));
    hcoef.push_back(MPoly::variable(ring, topname));
    SkewPoly<MPoly> uhat(std::move(hcoef));

    std::vector<MPoly> target;
    MPoly tvar = MPoly::variable(ring, "T");
    MPoly a_at_t = MPoly::zero(ring);
    for (size_t i = a.coeffs().size(); i-- > 0;)
        a_at_t = a_at_t * tvar + MPoly::constant(ring, a.coeffs()[i]);
    target.push_back(a_at_t);
    for (uint64_t j = 1; j < big_r; ++j) target.push_back(MPoly::variable(ring, "g" + std::to_string(j)));
    target.push_back(MPoly::variable(ring, topname));

    return commutation_chains(u, uhat, target);
}

} // namespace drmod
