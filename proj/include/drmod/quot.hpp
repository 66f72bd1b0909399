#pragma once

#include <memory>

#include "drmod/frac.hpp"

namespace drmod {

using TyPoly = UPoly<FracT>;  // F_q(T)[y]

inline FracT fq_t_zero(const FieldCtx* F) { return FracT(APoly(), APoly::from_scalar(FqElem::one(F))); }
inline FracT fq_t_one(const FieldCtx* F) { return FracT::from_poly(APoly::from_scalar(FqElem::one(F))); }
inline FracT fq_t_var(const FieldCtx* F) {
    return FracT::from_poly(APoly(std::vector<FqElem>{FqElem::zero(F), FqElem::one(F)}));
}

// F_q(T)[y]/(m), m monic.  Carries the Frobenius image y^q mod m so the
// q-power endomorphism is a Horner evaluation.
struct QuotCtx {
    const FieldCtx* F;
    TyPoly modulus;   // monic
    TyPoly y_frob;    // y^q mod modulus

    static std::shared_ptr<const QuotCtx> make(const FieldCtx* F, TyPoly m) {
        if (m.degree() < 1) throw InvalidInput("quotient modulus must be nonconstant");
        m = m.monic();
        TyPoly y = TyPoly::variable(fq_t_one(F));
        TyPoly yq = TyPoly::from_scalar(fq_t_one(F));
        // y^q mod m by square and multiply on the exponent q
        uint64_t n = F->q;
        TyPoly base = y % m;
        while (n) {
            if (n & 1) yq = (yq * base) % m;
            n >>= 1;
            if (n) base = (base * base) % m;
        }
        return std::make_shared<const QuotCtx>(QuotCtx{F, std::move(m), std::move(yq)});
    }
};

using QuotCtxPtr = std::shared_ptr<const QuotCtx>;

class QuotElem {
public:
    QuotElem(QuotCtxPtr ctx, TyPoly rep) : ctx_(std::move(ctx)), rep_(std::move(rep)) {
        if (!ctx_) throw InvalidInput("null quotient context");
        rep_ = rep_ % ctx_->modulus;
    }
    static QuotElem zero(const QuotCtxPtr& ctx) { return QuotElem(ctx, TyPoly()); }
    static QuotElem one(const QuotCtxPtr& ctx) {
        return QuotElem(ctx, TyPoly::from_scalar(fq_t_one(ctx->F)));
    }
    static QuotElem generator(const QuotCtxPtr& ctx) {
        return QuotElem(ctx, TyPoly::variable(fq_t_one(ctx->F)));
    }
    static QuotElem from_scalar(const QuotCtxPtr& ctx, const FracT& s) {
        return QuotElem(ctx, TyPoly::from_scalar(s));
    }

    const QuotCtxPtr& ctx() const { return ctx_; }
    const TyPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    friend QuotElem operator+(const QuotElem& a, const QuotElem& b) {
        a.check(b);
        return QuotElem(a.ctx_, a.rep_ + b.rep_);
    }
    friend QuotElem operator-(const QuotElem& a, const QuotElem& b) {
        a.check(b);
        return QuotElem(a.ctx_, a.rep_ - b.rep_);
    }
    friend QuotElem operator*(const QuotElem& a, const QuotElem& b) {
        a.check(b);
        return QuotElem(a.ctx_, (a.rep_ * b.rep_) % a.ctx_->modulus);
    }
    QuotElem operator-() const { return QuotElem(ctx_, -rep_); }
    friend bool operator==(const QuotElem& a, const QuotElem& b) {
        return a.ctx_ == b.ctx_ && a.rep_ == b.rep_;
    }
    friend bool operator!=(const QuotElem& a, const QuotElem& b) { return !(a == b); }

    // Inverse when the representative is coprime to the modulus.
    QuotElem inv() const {
        if (rep_.is_zero()) throw DivisionByZero("inverse of zero in quotient ring");
        auto [g, s, t] = TyPoly::extgcd(rep_, ctx_->modulus);
        (void)t;
        if (g.degree() != 0)
            throw NonInvertibleDenominator("representative shares a factor with the modulus");
        return QuotElem(ctx_, s % ctx_->modulus);
    }
    friend QuotElem operator/(const QuotElem& a, const QuotElem& b) { return a * b.inv(); }

    // The q^k-power endomorphism: coefficients to the q-th power, y to y^q.
    QuotElem frobenius(uint32_t k = 1) const {
        QuotElem r = *this;
        for (uint32_t step = 0; step < k; ++step) {
            TyPoly acc;
            for (size_t i = r.rep_.coeffs().size(); i-- > 0;) {
                acc = (acc * ctx_->y_frob) % ctx_->modulus;
                acc = acc + TyPoly::from_scalar(frac_frobenius(r.rep_.coeffs()[i]));
            }
            r = QuotElem(ctx_, std::move(acc));
        }
        return r;
    }

private:
    QuotCtxPtr ctx_;
    TyPoly rep_;
    void check(const QuotElem& other) const {
        if (ctx_ != other.ctx_ && !(ctx_->modulus == other.ctx_->modulus && ctx_->F == other.ctx_->F))
            throw ContextMismatch("elements of different quotient rings");
    }
};

} // namespace drmod
