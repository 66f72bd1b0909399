#pragma once

#include "drmod/gcd.hpp"
#include "drmod/mpoly.hpp"

namespace drmod {

// Quotient of multivariate polynomials, always fully reduced (the
// multivariate gcd is divided out) with the denominator's leading graded-lex
// coefficient normalized to 1, so equality is syntactic.
class RatFunc {
public:
    RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (!same_ring(num_.ring(), den_.ring()))
            throw ContextMismatch("numerator and denominator from different rings");
        if (den_.is_zero()) throw DivisionByZero("zero denominator");
        reduce();
    }
    static RatFunc from_poly(MPoly p) {
        MPoly one = MPoly::from_int(p.ring(), 1);
        return RatFunc(std::move(p), std::move(one));
    }
    static RatFunc zero(const RingPtr& ring) { return from_poly(MPoly::zero(ring)); }
    static RatFunc one(const RingPtr& ring) { return from_poly(MPoly::from_int(ring, 1)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const RingPtr& ring() const { return num_.ring(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_constant(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZero("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    RatFunc inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero rational function");
        return RatFunc(den_, num_);
    }
    RatFunc pow(uint64_t n) const {
        RatFunc r = one(ring());
        RatFunc base = *this;
        while (n) {
            if (n & 1) r = r * base;
            if (n >>= 1) base = base * base;
        }
        return r;
    }
    RatFunc frobenius_power(uint32_t k) const {
        return RatFunc(num_.frobenius_power(k), den_.frobenius_power(k));
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string() const {
        if (is_poly()) {
            if (den_.constant_value().is_one()) return num_.to_string();
        }
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    MPoly num_, den_;
    void reduce() {
        if (num_.is_zero()) {
            den_ = MPoly::from_int(den_.ring(), 1);
            return;
        }
        MPoly g = mv_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.divexact(g);
            den_ = *den_.divexact(g);
        }
        FqElem lc = den_.leading_coeff();
        if (!lc.is_one()) {
            FqElem il = lc.inv();
            num_ = il * num_;
            den_ = il * den_;
        }
    }
};

} // namespace drmod
