#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "drmod/mpoly.hpp"
#include "drmod/quot.hpp"
#include "drmod/ratfunc.hpp"

namespace drmod {

// Coefficient-ring contract for the twisted polynomial ring: ring ops plus
// the q-power endomorphism, equality, and (partial) inversion.  Fresh zeros
// and ones are minted from an exemplar because scalars carry their context.
template <typename R>
struct SkewScalar;

template <>
struct SkewScalar<FqElem> {
    static FqElem zero(const FqElem& like) { return FqElem::zero(like.ctx()); }
    static FqElem one(const FqElem& like) { return FqElem::one(like.ctx()); }
    static bool is_zero(const FqElem& x) { return x.is_zero(); }
    static FqElem frobenius(const FqElem& x, uint32_t k) {
        FqElem r = x;
        for (uint32_t i = 0; i < k; ++i) r = r.pow(x.ctx()->q);
        return r;
    }
    static FqElem inv(const FqElem& x) { return x.inv(); }
    static FqElem from_base(const FqElem& c, const FqElem& like) {
        if (c.ctx() != like.ctx()) throw ContextMismatch("scalar from a different field");
        return c;
    }
};

template <>
struct SkewScalar<MPoly> {
    static MPoly zero(const MPoly& like) { return MPoly::zero(like.ring()); }
    static MPoly one(const MPoly& like) { return MPoly::from_int(like.ring(), 1); }
    static bool is_zero(const MPoly& x) { return x.is_zero(); }
    static MPoly frobenius(const MPoly& x, uint32_t k) { return x.frobenius_power(k); }
    static MPoly inv(const MPoly& x) {
        if (!x.is_constant() || x.is_zero())
            throw NotDivisible("non-constant polynomial has no inverse");
        return MPoly::constant(x.ring(), x.constant_value().inv());
    }
    static MPoly from_base(const FqElem& c, const MPoly& like) {
        return MPoly::constant(like.ring(), c);
    }
};

template <>
struct SkewScalar<RatFunc> {
    static RatFunc zero(const RatFunc& like) { return RatFunc::zero(like.ring()); }
    static RatFunc one(const RatFunc& like) { return RatFunc::one(like.ring()); }
    static bool is_zero(const RatFunc& x) { return x.is_zero(); }
    static RatFunc frobenius(const RatFunc& x, uint32_t k) { return x.frobenius_power(k); }
    static RatFunc inv(const RatFunc& x) { return x.inv(); }
    static RatFunc from_base(const FqElem& c, const RatFunc& like) {
        return RatFunc::from_poly(MPoly::constant(like.ring(), c));
    }
};

template <>
struct SkewScalar<FracT> {
    static FracT zero(const FracT& like) {
        return FracT(APoly(), APoly::from_scalar(RingOps<FqElem>::one(like.den().lc())));
    }
    static FracT one(const FracT& like) { return RingOps<FracT>::one(like); }
    static bool is_zero(const FracT& x) { return x.is_zero(); }
    static FracT frobenius(const FracT& x, uint32_t k) { return frac_frobenius(x, k); }
    static FracT inv(const FracT& x) { return x.inv(); }
    static FracT from_base(const FqElem& c, const FracT& like) {
        (void)like;
        return FracT::from_poly_like(APoly::from_scalar(c), c);
    }
};

template <>
struct SkewScalar<QuotElem> {
    static QuotElem zero(const QuotElem& like) { return QuotElem::zero(like.ctx()); }
    static QuotElem one(const QuotElem& like) { return QuotElem::one(like.ctx()); }
    static bool is_zero(const QuotElem& x) { return x.is_zero(); }
    static QuotElem frobenius(const QuotElem& x, uint32_t k) { return x.frobenius(k); }
    static QuotElem inv(const QuotElem& x) { return x.inv(); }
    static QuotElem from_base(const FqElem& c, const QuotElem& like) {
        return QuotElem::from_scalar(like.ctx(), FracT::from_poly_like(APoly::from_scalar(c), c));
    }
};

// Twisted q-polynomial Σ cᵢ x^{qⁱ} = Σ cᵢ τⁱ over R; multiplication is
// composition, with τc = c^q τ.  Coefficients ascending, top one nonzero.
template <typename R>
class SkewPoly {
public:
    SkewPoly() = default;
    explicit SkewPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
    static SkewPoly from_scalar(const R& c) {
        if (SkewScalar<R>::is_zero(c)) return SkewPoly();
        return SkewPoly(std::vector<R>{c});
    }
    static SkewPoly monomial(const R& c, size_t k) {
        if (SkewScalar<R>::is_zero(c)) return SkewPoly();
        std::vector<R> v(k + 1, SkewScalar<R>::zero(c));
        v[k] = c;
        return SkewPoly(std::move(v));
    }

    const std::vector<R>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }
    const R& lc() const {
        if (c_.empty()) throw InvalidInput("zero skew polynomial has no leading coefficient");
        return c_.back();
    }
    const R& operator[](size_t i) const { return c_[i]; }
    R coeff_or_zero(size_t i, const R& like) const {
        return i < c_.size() ? c_[i] : SkewScalar<R>::zero(like);
    }

    friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
        const SkewPoly& lo = a.c_.size() <= b.c_.size() ? a : b;
        const SkewPoly& hi = a.c_.size() <= b.c_.size() ? b : a;
        std::vector<R> r = hi.c_;
        for (size_t i = 0; i < lo.c_.size(); ++i) r[i] = r[i] + lo.c_[i];
        SkewPoly out;
        out.c_ = std::move(r);
        out.trim();
        return out;
    }
    SkewPoly operator-() const {
        std::vector<R> r;
        r.reserve(c_.size());
        for (auto& x : c_) r.push_back(-x);
        SkewPoly out;
        out.c_ = std::move(r);
        return out;
    }
    friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }

    // (f∘g)_k = Σ_{i+j=k} fᵢ · gⱼ^{qⁱ}
    friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
        if (a.is_zero() || b.is_zero()) return SkewPoly();
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, SkewScalar<R>::zero(a.c_[0]));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (SkewScalar<R>::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * SkewScalar<R>::frobenius(b.c_[j], static_cast<uint32_t>(i));
        }
        SkewPoly out;
        out.c_ = std::move(r);
        out.trim();
        return out;
    }
    friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

    SkewPoly pow(uint64_t n) const {
        if (n == 0) {
            if (is_zero()) throw InvalidInput("0^0 of skew polynomials");
            return from_scalar(SkewScalar<R>::one(c_[0]));
        }
        SkewPoly r = *this, acc;
        bool have = false;
        uint64_t m = n;
        while (m) {
            if (m & 1) {
                acc = have ? acc * r : r;
                have = true;
            }
            m >>= 1;
            if (m) r = r * r;
        }
        return acc;
    }

    // Value of the additive polynomial at x.
    R act(const R& x) const {
        R acc = SkewScalar<R>::zero(x);
        for (size_t i = 0; i < c_.size(); ++i)
            acc = acc + c_[i] * SkewScalar<R>::frobenius(x, static_cast<uint32_t>(i));
        return acc;
    }

private:
    std::vector<R> c_;
    void trim() {
        while (!c_.empty() && SkewScalar<R>::is_zero(c_.back())) c_.pop_back();
    }
};

// Right division: f = quot∘g + rem with τ-degree(rem) < τ-degree(g).
template <typename R>
std::pair<SkewPoly<R>, SkewPoly<R>> skew_right_divide(const SkewPoly<R>& f, const SkewPoly<R>& g) {
    if (g.is_zero()) throw DivisionByZero("skew division by zero");
    SkewPoly<R> quot, rem = f;
    int64_t dg = g.degree();
    while (!rem.is_zero() && rem.degree() >= dg) {
        uint32_t d = static_cast<uint32_t>(rem.degree() - dg);
        R c = SkewScalar<R>::zero(rem.lc());
        try {
            c = rem.lc() * SkewScalar<R>::inv(SkewScalar<R>::frobenius(g.lc(), d));
        } catch (const Error&) {
            throw NotDivisible("leading coefficient of divisor is not invertible after twisting");
        }
        SkewPoly<R> t = SkewPoly<R>::monomial(c, d);
        quot = quot + t;
        rem = rem - t * g;
    }
    return {quot, rem};
}

} // namespace drmod
