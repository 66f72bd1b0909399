#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drmod/convert.hpp"
#include "drmod/errors.hpp"
#include "drmod/fq.hpp"
#include "drmod/frac.hpp"
#include "drmod/mpoly.hpp"
#include "drmod/resultant.hpp"
#include "drmod/selfisog.hpp"
#include "drmod/snf.hpp"
#include "drmod/upoly.hpp"

namespace drmod {

// Orders O in an imaginary extension K = F_q(T)[y]/(m) of rank r over A.
// Elements are held as coordinate vectors over A, either in the power basis
// 1, y, ..., y^{r-1} or in the order basis omega_1 = 1, omega_2, ..., omega_r.

inline bool apoly_is_irreducible(const APoly& a, uint64_t budget = 1000000) {
    if (a.is_zero() || a.is_constant()) throw InvalidInput("irreducibility of a constant");
    const FieldCtx* F = a.lc().ctx();
    const int64_t half = a.degree() / 2;
    for (int64_t d = 1; d <= half; ++d) {
        uint64_t total = 1;
        for (int64_t i = 0; i < d; ++i) {
            total *= F->q;
            if (total > budget) throw TooLarge("trial division budget exceeded");
        }
        for (uint64_t id = 0; id < total; ++id) {
            std::vector<FqElem> cs;
            cs.reserve(static_cast<size_t>(d) + 1);
            uint64_t rem = id;
            for (int64_t i = 0; i < d; ++i) {
                cs.push_back(FqElem(F, static_cast<uint32_t>(rem % F->q)));
                rem /= F->q;
            }
            cs.push_back(FqElem::one(F));
            if ((a % APoly(std::move(cs))).is_zero()) return false;
        }
    }
    return true;
}

inline bool newton_certifies_imaginary(const MPoly& m, size_t t_var, size_t y_var) {
    const int64_t r = m.degree(y_var);
    if (r < 2) throw InvalidInput("minimal polynomial must have degree at least 2");
    auto cs = m.coeffs_in(y_var);
    if (cs[0].is_zero()) return false;
    const int64_t d0 = cs[0].degree(t_var);
    if (d0 < 1) return false;
    if (std::gcd(r, d0) != 1) return false;
    for (int64_t i = 1; i < r; ++i) {
        if (cs[static_cast<size_t>(i)].is_zero()) continue;
        if (r * cs[static_cast<size_t>(i)].degree(t_var) > (r - i) * d0) return false;
    }
    return true;
}

class OrderSpec {
public:
    OrderSpec(const FieldCtx* F, MPoly minpoly, AMat basis, bool imaginary,
              bool check_irreducible = false)
        : F_(F), m_(std::move(minpoly)), basis_(std::move(basis)), imaginary_(imaginary) {
        const RingPtr& ring = m_.ring();
        if (ring->field != F) throw ContextMismatch("minimal polynomial over the wrong field");
        if (ring->vars.size() != 2) throw InvalidInput("minimal polynomial must live in A[y]");
        t_var_ = ring->vars[0] == "T" ? 0 : (ring->vars[1] == "T" ? 1 : 2);
        if (t_var_ == 2) throw InvalidInput("minimal polynomial ring must contain T");
        y_var_ = 1 - t_var_;

        const int64_t r = m_.degree(y_var_);
        if (r < 2) throw InvalidInput("minimal polynomial must have degree at least 2");
        MPoly lead = m_.lc_in(y_var_);
        if (!(lead == MPoly::from_int(ring, 1)))
            throw InvalidInput("minimal polynomial must be monic in y");
        r_ = static_cast<uint32_t>(r);

        if (check_irreducible) check_minpoly_irreducible();

        amat_check_shape(basis_);
        if (basis_.size() != r_ || basis_[0].size() != r_)
            throw InvalidInput("basis must be a square matrix of rank-many rows");
        if (basis_[0][0].is_zero() || !basis_[0][0].is_constant())
            throw InvalidInput("first basis element must be a unit multiple of 1");
        for (size_t j = 1; j < r_; ++j)
            if (!basis_[0][j].is_zero())
                throw InvalidInput("first basis element must be a unit multiple of 1");
        const FqElem lead0 = basis_[0][0].lc();
        if (!(lead0 == FqElem::one(F_)))
            for (size_t j = 0; j < r_; ++j) basis_[0][j] = lead0.inv() * basis_[0][j];

        if (amat_det(basis_).is_zero()) throw InvalidInput("basis is singular");

        AMat bt(r_, std::vector<APoly>(r_));
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < r_; ++j) bt[i][j] = basis_[j][i];
        basis_snf_ = smith_normal_form(F_, std::move(bt));

        for (size_t i = 1; i < r_; ++i)
            for (size_t j = i; j < r_; ++j)
                if (!coords_in_order(mul_power(basis_[i], basis_[j])))
                    throw InvalidInput("basis does not close under multiplication");
    }

    const FieldCtx* field() const { return F_; }
    const MPoly& minpoly() const { return m_; }
    const AMat& basis() const { return basis_; }
    uint32_t rank() const { return r_; }
    bool imaginary() const { return imaginary_; }
    size_t t_var() const { return t_var_; }
    size_t y_var() const { return y_var_; }

    // Coordinates of sum x_i omega_i in the power basis.
    std::vector<APoly> power_coords(const std::vector<APoly>& order_coords) const {
        if (order_coords.size() != r_) throw InvalidInput("coordinate length mismatch");
        std::vector<APoly> p(r_);
        for (size_t i = 0; i < r_; ++i) {
            if (order_coords[i].is_zero()) continue;
            for (size_t j = 0; j < r_; ++j)
                p[j] = p[j] + order_coords[i] * basis_[i][j];
        }
        return p;
    }

    // Inverse of power_coords when the element lies in O.
    std::optional<std::vector<APoly>> coords_in_order(const std::vector<APoly>& power) const {
        if (power.size() != r_) throw InvalidInput("coordinate length mismatch");
        return snf_solve(basis_snf_, power);
    }

    // Product in K of two elements given in the power basis, reduced mod m.
    std::vector<APoly> mul_power(const std::vector<APoly>& a, const std::vector<APoly>& b) const {
        if (a.size() != r_ || b.size() != r_) throw InvalidInput("coordinate length mismatch");
        std::vector<APoly> prod(2 * r_ - 1);
        for (size_t i = 0; i < r_; ++i) {
            if (a[i].is_zero()) continue;
            for (size_t j = 0; j < r_; ++j)
                prod[i + j] = prod[i + j] + a[i] * b[j];
        }
        auto mc = m_.coeffs_in(y_var_);
        std::vector<APoly> mv(r_ + 1);
        for (size_t k = 0; k <= r_; ++k)
            mv[k] = k < mc.size() ? mpoly_to_apoly(mc[k], t_var_) : APoly();
        for (size_t k = prod.size(); k-- > r_;) {
            if (prod[k].is_zero()) continue;
            for (size_t i = 0; i < r_; ++i)
                prod[k - r_ + i] = prod[k - r_ + i] - prod[k] * mv[i];
            prod[k] = APoly();
        }
        prod.resize(r_);
        return prod;
    }

    MPoly power_to_mpoly(const std::vector<APoly>& power) const {
        if (power.size() != r_) throw InvalidInput("coordinate length mismatch");
        MPoly u = MPoly::zero(m_.ring());
        for (size_t j = 0; j < r_; ++j) {
            if (power[j].is_zero()) continue;
            Exps e(2, 0);
            e[y_var_] = j;
            u = u + apoly_to_mpoly(power[j], m_.ring(), t_var_) *
                        MPoly::monomial(m_.ring(), std::move(e), FqElem::one(F_));
        }
        return u;
    }

private:
    void check_minpoly_irreducible() const {
        auto trial = trial_factor_bounded(m_, y_var_, t_var_, r_ - 1);
        for (const auto& f : trial.factors)
            if (f.degree(y_var_) >= 1)
                throw InvalidInput("minimal polynomial is reducible");
    }

    const FieldCtx* F_;
    MPoly m_;
    AMat basis_;
    bool imaginary_;
    uint32_t r_ = 0;
    size_t t_var_ = 0, y_var_ = 1;
    SNFResult basis_snf_;
};

inline OrderSpec minimal_order(const OrderSpec& maximal, const APoly& conductor) {
    if (conductor.is_zero()) throw InvalidInput("zero conductor");
    const APoly f = conductor.monic();
    AMat b = maximal.basis();
    for (size_t i = 1; i < b.size(); ++i)
        for (size_t j = 0; j < b[i].size(); ++j) b[i][j] = f * b[i][j];
    return OrderSpec(maximal.field(), maximal.minpoly(), std::move(b), maximal.imaginary());
}

// A-module presentation of a nonzero ideal: columns are generators written in
// the order basis.
class IdealPresentation {
public:
    IdealPresentation(const OrderSpec* order, AMat gens)
        : order_(order), gens_(std::move(gens)) {
        amat_check_shape(gens_);
        if (gens_.size() != order_->rank())
            throw InvalidInput("generator matrix must have rank-many rows");
        snf_ = smith_normal_form(order_->field(), gens_);
        if (snf_.rank() != order_->rank())
            throw NotAnIdeal("generators do not span a finite-index submodule");
    }

    // Ideal generated by the given elements of O: the module spanned by all
    // products omega_i * e.
    static IdealPresentation from_elements(const OrderSpec* order,
                                           const std::vector<std::vector<APoly>>& elems) {
        if (elems.empty()) throw InvalidInput("no generators");
        const uint32_t r = order->rank();
        AMat gens(r);
        for (const auto& e : elems) {
            std::vector<APoly> ep = order->power_coords(e);
            for (size_t i = 0; i < r; ++i) {
                auto prod = order->coords_in_order(order->mul_power(order->basis()[i], ep));
                if (!prod) throw LogicError("order is not multiplicatively closed");
                for (size_t k = 0; k < r; ++k) gens[k].push_back((*prod)[k]);
            }
        }
        return IdealPresentation(order, std::move(gens));
    }

    const OrderSpec* order() const { return order_; }
    const AMat& generators() const { return gens_; }
    const SNFResult& smith() const { return snf_; }

    bool contains(const std::vector<APoly>& order_coords) const {
        return snf_solve(snf_, order_coords).has_value();
    }

private:
    const OrderSpec* order_;
    AMat gens_;
    SNFResult snf_;
};

// Fitting norm N(a) with |O/a| = q^{deg N}; monic by the Smith normalization.
inline APoly fitting_norm(const IdealPresentation& ideal) {
    APoly n = APoly::from_scalar(FqElem::one(ideal.order()->field()));
    for (const auto& d : ideal.smith().invariants()) n = n * d;
    return n;
}

// Field norm of u = sum u_i omega_i via Res_y(m, u).
inline APoly norm_element(const OrderSpec& o, const std::vector<APoly>& u) {
    std::vector<APoly> p = o.power_coords(u);
    bool zero = true;
    for (const auto& c : p) zero = zero && c.is_zero();
    if (zero) return APoly();
    MPoly res = resultant(o.minpoly(), o.power_to_mpoly(p), o.y_var());
    return mpoly_to_apoly(res, o.t_var());
}

inline bool is_primitive(const OrderSpec& o, const std::vector<APoly>& u) {
    if (u.size() != o.rank()) throw InvalidInput("coordinate length mismatch");
    APoly g;
    for (const auto& c : u) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? c.monic() : APoly::gcd(g, c);
        if (g.is_constant()) return true;
    }
    if (g.is_zero()) throw InvalidInput("primitivity of zero");
    return g.is_constant();
}

struct GammaResult {
    uint64_t count = 0;
    bool exact = false;
    std::vector<std::vector<APoly>> witnesses;
};

// Number of unit orbits of primitive u in O with Nm(u) = c*a for some unit c.
// The search runs over power-basis coordinates of degree <= bound, a box that
// does not depend on the chosen order basis; the result is exact only when
// the caller certifies that bound.  Witnesses come back in order-basis
// coordinates.
inline GammaResult gamma_count(const OrderSpec& o, const APoly& a,
                               std::optional<uint32_t> bound = std::nullopt,
                               bool certified = false) {
    if (a.is_zero() || a.is_constant()) throw InvalidInput("norm target must be nonconstant");
    if (!(a.lc() == FqElem::one(o.field()))) throw InvalidInput("norm target must be monic");
    if (!apoly_is_irreducible(a)) throw NotPrime("norm target factors over A");
    const uint32_t B = bound.value_or(static_cast<uint32_t>(a.degree()));
    if (B < a.degree()) throw InvalidInput("search bound below deg a");

    const FieldCtx* F = o.field();
    const uint32_t r = o.rank();
    uint64_t per_coord = 1;
    double space = 1.0;
    for (uint32_t i = 0; i <= B; ++i) {
        per_coord *= F->q;
        space *= static_cast<double>(F->q);
    }
    for (uint32_t i = 1; i < r; ++i) space *= static_cast<double>(per_coord);
    if (space > 1e7) throw TooLarge("gamma search space exceeds 10^7 points");

    GammaResult out;
    out.exact = certified;
    std::vector<uint64_t> state(r, 0);
    for (;;) {
        std::vector<APoly> x(r);
        size_t first_nonzero = r;
        for (size_t i = 0; i < r; ++i) {
            std::vector<FqElem> cs;
            uint64_t rem = state[i];
            for (uint32_t k = 0; k <= B; ++k) {
                cs.push_back(FqElem(F, static_cast<uint32_t>(rem % F->q)));
                rem /= F->q;
            }
            x[i] = APoly(std::move(cs));
            if (first_nonzero == r && !x[i].is_zero()) first_nonzero = i;
        }
        if (first_nonzero < r && x[first_nonzero].lc() == FqElem::one(F)) {
            if (auto oc = o.coords_in_order(x); oc && is_primitive(o, *oc)) {
                MPoly res = resultant(o.minpoly(), o.power_to_mpoly(x), o.y_var());
                APoly n = mpoly_to_apoly(res, o.t_var());
                if (!n.is_zero() && n.monic() == a) {
                    ++out.count;
                    out.witnesses.push_back(std::move(*oc));
                }
            }
        }
        size_t i = r;
        while (i-- > 0) {
            if (++state[i] < per_coord) break;
            state[i] = 0;
            if (i == 0) return out;
        }
    }
}

struct HilbertFactor {
    std::string label;
    uint64_t gamma = 1;
    uint64_t deg = 0;
};

struct HilbertReport {
    int64_t deg_x = 0;
    std::optional<uint64_t> factor_degree_sum;
    bool matched = false;
};

// Checks that a candidate modular polynomial is monic with coefficients in A
// and, when a Hilbert factorization is supplied, that the weighted degrees
// add up.
inline HilbertReport hilbert_consistency(const TyPoly& phi,
                                         const std::vector<HilbertFactor>& factors = {}) {
    if (phi.is_zero()) throw InvalidInput("zero polynomial");
    if (!RingOps<FracT>::is_one(phi.lc())) throw InvalidInput("expected a monic polynomial in X");
    for (const auto& c : phi.coeffs())
        if (!c.is_zero() && !c.is_poly())
            throw IntegralityViolation("coefficient has a nonconstant denominator");
    HilbertReport rep;
    rep.deg_x = phi.degree();
    if (!factors.empty()) {
        uint64_t sum = 0;
        for (const auto& f : factors) sum += f.gamma * f.deg;
        rep.factor_degree_sum = sum;
        rep.matched = sum == static_cast<uint64_t>(rep.deg_x);
    }
    return rep;
}

inline HilbertReport hilbert_consistency(const MPoly& phi, size_t t_var, size_t x_var,
                                         const std::vector<HilbertFactor>& factors = {}) {
    return hilbert_consistency(mpoly_to_typoly(phi, t_var, x_var), factors);
}

} // namespace drmod
