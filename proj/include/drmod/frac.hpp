#pragma once

#include "drmod/upoly.hpp"

namespace drmod {

// Fraction field of UPoly<K>; fully reduced, denominator monic.
template <typename K>
class Frac {
public:
    using P = UPoly<K>;

    Frac(P num, P den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("zero denominator");
        reduce();
    }
    static Frac from_poly(P p) {
        if (p.is_zero()) throw InvalidInput("zero polynomial needs from_poly_like");
        const K one = RingOps<K>::one(p.lc());
        return Frac(std::move(p), P::from_scalar(one));
    }
    static Frac from_poly_like(P p, const K& exemplar) {
        return Frac(std::move(p), P::from_scalar(RingOps<K>::one(exemplar)));
    }

    const P& num() const { return num_; }
    const P& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    friend Frac operator+(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        return Frac(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.is_zero()) throw DivisionByZero("division by zero fraction");
        return Frac(a.num_ * b.den_, a.den_ * b.num_);
    }
    Frac operator-() const { return Frac(-num_, den_); }
    Frac inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero fraction");
        return Frac(den_, num_);
    }
    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

private:
    P num_, den_;
    void reduce() {
        if (num_.is_zero()) {
            den_ = P::from_scalar(RingOps<K>::one(den_.lc()));
            return;
        }
        P g = P::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        if (!RingOps<K>::is_one(den_.lc())) {
            K ilc = RingOps<K>::inv(den_.lc());
            num_ = ilc * num_;
            den_ = ilc * den_;
        }
    }
};

using FracT = Frac<FqElem>;  // F_q(T)

template <typename K>
struct RingOps<Frac<K>> {
    using F = Frac<K>;
    static F zero(const F& like) {
        using P = UPoly<K>;
        const K ex = like.den().lc();
        return F(P(), P::from_scalar(RingOps<K>::one(ex)));
    }
    static F one(const F& like) {
        using P = UPoly<K>;
        const K ex = like.den().lc();
        return F(P::from_scalar(RingOps<K>::one(ex)), P::from_scalar(RingOps<K>::one(ex)));
    }
    static bool is_zero(const F& x) { return x.is_zero(); }
    static bool is_one(const F& x) { return x.is_poly() && x.num().is_one(); }
    static F inv(const F& x) { return x.inv(); }
};

inline FracT frac_from_apoly(APoly p, const FieldCtx* F) {
    return FracT::from_poly_like(std::move(p), FqElem::one(F));
}

// (num/den)^q via exponent scaling on both parts.
inline FracT frac_frobenius(const FracT& x, uint32_t k = 1) {
    if (x.is_zero()) return x;
    return FracT(apoly_frobenius(x.num(), k), apoly_frobenius(x.den(), k));
}

} // namespace drmod
