#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "drmod/errors.hpp"

namespace drmod {

// F_q = F_p[z]/(m(z)), q = p^e.  Elements are stored packed in base p
// (coefficient vector of the residue, least significant digit first), so a
// context can precompute discrete-log tables once and every multiplication
// afterwards is two lookups.  Contexts are interned and live for the whole
// process; elements hold a plain pointer.
class FieldCtx {
public:
    uint32_t p;
    uint32_t e;
    uint32_t q;                      // p^e
    std::vector<uint32_t> modulus;   // ascending, length e+1, monic

    static const FieldCtx* get(uint32_t p, uint32_t e);
    static const FieldCtx* get(uint32_t p, uint32_t e, std::vector<uint32_t> modulus);

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t r = 0, mul = 1;
        for (uint32_t i = 0; i < e; ++i) {
            r += ((a % p) + (b % p)) % p * mul;
            a /= p; b /= p; mul *= p;
        }
        return r;
    }
    uint32_t neg(uint32_t a) const {
        uint32_t r = 0, mul = 1;
        for (uint32_t i = 0; i < e; ++i) {
            r += (p - a % p) % p * mul;
            a /= p; mul *= p;
        }
        return r;
    }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q - 1)];
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw DivisionByZero("inverse of zero in F_q");
        return exp_[(q - 1 - log_[a]) % (q - 1)];
    }
    uint32_t pow(uint32_t a, uint64_t n) const {
        if (a == 0) return n == 0 ? 1u : 0u;
        return exp_[static_cast<uint32_t>((log_[a] * static_cast<uint64_t>(n % (q - 1))) % (q - 1))];
    }
    // the generator behind the discrete-log tables
    uint32_t generator_packed() const { return q == 2 ? 1u : exp_[1]; }

    std::vector<uint32_t> unpack(uint32_t a) const {
        std::vector<uint32_t> d(e);
        for (uint32_t i = 0; i < e; ++i) { d[i] = a % p; a /= p; }
        return d;
    }
    uint32_t pack(const std::vector<uint32_t>& d) const {
        if (d.size() > e) throw InvalidInput("coefficient vector longer than extension degree");
        uint32_t a = 0, mul = 1;
        for (uint32_t i = 0; i < e; ++i) {
            a += (i < d.size() ? d[i] % p : 0) * mul;
            mul *= p;
        }
        return a;
    }

private:
    std::vector<uint32_t> exp_, log_;

    FieldCtx(uint32_t p_, uint32_t e_, std::vector<uint32_t> mod_);

    // F_p[z] helpers used only during construction (table building and the
    // irreducibility certificate).
    using FpPoly = std::vector<uint32_t>;
    FpPoly pmulmod(const FpPoly& a, const FpPoly& b) const;
    FpPoly ppow_p(FpPoly a, uint32_t times) const;   // a^(p^times) mod modulus
};

namespace detail {

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Sparse irreducible moduli for the small contexts the CLI accepts without a
// user-supplied modulus.  Verified again at construction time.
inline const std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>>& builtin_moduli() {
    static const std::map<std::pair<uint32_t, uint32_t>, std::vector<uint32_t>> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 0, 1, 1}},
        {{2, 4}, {1, 0, 0, 1, 1}},
        {{3, 2}, {1, 0, 1}},
        {{3, 3}, {1, 0, 2, 1}},
        {{3, 4}, {1, 0, 1, 1, 1}},
        {{5, 2}, {1, 1, 1}},
        {{5, 3}, {1, 0, 1, 1}},
        {{5, 4}, {1, 0, 1, 1, 1}},
        {{7, 2}, {1, 0, 1}},
        {{7, 3}, {1, 0, 1, 1}},
        {{7, 4}, {1, 0, 0, 1, 1}},
        {{11, 2}, {1, 0, 1}},
        {{11, 3}, {1, 0, 4, 1}},
        {{11, 4}, {1, 0, 0, 4, 1}},
        {{13, 2}, {1, 3, 1}},
        {{13, 3}, {1, 0, 4, 1}},
        {{13, 4}, {1, 0, 0, 1, 1}},
    };
    return table;
}

} // namespace detail

inline FieldCtx::FpPoly FieldCtx::pmulmod(const FpPoly& a, const FpPoly& b) const {
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    // reduce by the monic modulus
    for (size_t k = r.size(); k-- > e;) {
        uint32_t c = r[k];
        if (c == 0) continue;
        r[k] = 0;
        for (uint32_t i = 0; i < e; ++i)
            r[k - e + i] = (r[k - e + i] + (p - c % p) * modulus[i]) % p;
    }
    r.resize(e ? e : 1);
    return r;
}

inline FieldCtx::FpPoly FieldCtx::ppow_p(FpPoly a, uint32_t times) const {
    for (uint32_t t = 0; t < times; ++t) {
        FpPoly r = {1};
        r.resize(e, 0);
        FpPoly base = a;
        uint32_t n = p;
        while (n) {
            if (n & 1) r = pmulmod(r, base);
            base = pmulmod(base, base);
            n >>= 1;
        }
        a = r;
    }
    return a;
}

inline FieldCtx::FieldCtx(uint32_t p_, uint32_t e_, std::vector<uint32_t> mod_)
    : p(p_), e(e_), modulus(std::move(mod_)) {
    if (!detail::is_prime_u32(p)) throw InvalidInput("p is not prime");
    if (e < 1 || e > 8) throw InvalidInput("extension degree out of range");
    uint64_t qq = 1;
    for (uint32_t i = 0; i < e; ++i) {
        qq *= p;
        if (qq > (1u << 20)) throw TooLarge("q exceeds the table-based field limit");
    }
    q = static_cast<uint32_t>(qq);
    if (modulus.size() != e + 1 || modulus[e] != 1)
        throw InvalidInput("modulus must be monic of degree e");
    for (auto& c : modulus) c %= p;

    if (e > 1) {
        // Irreducibility: z^(p^e) == z mod m, and z^(p^(e/l)) != z for every
        // prime l dividing e.
        FpPoly z(e, 0);
        z[1] = 1;
        auto is_z = [&](const FpPoly& f) {
            for (uint32_t i = 0; i < e; ++i)
                if (f[i] != (i == 1 ? 1u : 0u)) return false;
            return true;
        };
        if (!is_z(ppow_p(z, e)))
            throw InvalidInput("modulus is not irreducible over F_p");
        uint32_t n = e;
        for (uint32_t l = 2; l <= n; ++l) {
            if (n % l) continue;
            while (n % l == 0) n /= l;
            if (is_z(ppow_p(z, e / l)))
                throw InvalidInput("modulus is not irreducible over F_p");
        }
    }

    // Discrete-log tables over a fixed generator.
    exp_.assign(q - 1, 0);
    log_.assign(q, 0);
    std::vector<uint32_t> prime_factors;
    {
        uint32_t n = q - 1;
        for (uint32_t l = 2; static_cast<uint64_t>(l) * l <= n; ++l)
            if (n % l == 0) {
                prime_factors.push_back(l);
                while (n % l == 0) n /= l;
            }
        if (n > 1) prime_factors.push_back(n);
    }
    auto packed_pow = [&](uint32_t base, uint32_t n) {
        FpPoly b = unpack(base);
        b.resize(e, 0);
        FpPoly r = {1};
        r.resize(e, 0);
        while (n) {
            if (n & 1) r = pmulmod(r, b);
            b = pmulmod(b, b);
            n >>= 1;
        }
        return pack(r);
    };
    uint32_t gen = 0;
    for (uint32_t cand = 1; cand < q; ++cand) {
        bool primitive = true;
        for (uint32_t l : prime_factors)
            if (packed_pow(cand, (q - 1) / l) == 1) { primitive = false; break; }
        if (primitive) { gen = cand; break; }
    }
    if (gen == 0 && q > 2) throw LogicError("no generator found");
    if (q == 2) gen = 1;
    FpPoly acc = {1};
    acc.resize(e, 0);
    FpPoly g = unpack(gen);
    g.resize(e, 0);
    for (uint32_t i = 0; i < q - 1; ++i) {
        uint32_t v = pack(acc);
        exp_[i] = v;
        log_[v] = i;
        acc = pmulmod(acc, g);
    }
}

inline const FieldCtx* FieldCtx::get(uint32_t p, uint32_t e, std::vector<uint32_t> modulus) {
    static std::mutex mu;
    static std::map<std::tuple<uint32_t, uint32_t, std::vector<uint32_t>>, std::unique_ptr<FieldCtx>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, e, modulus);
    auto it = registry.find(key);
    if (it == registry.end()) {
        auto ctx = std::unique_ptr<FieldCtx>(new FieldCtx(p, e, std::move(modulus)));
        it = registry.emplace(std::move(key), std::move(ctx)).first;
    }
    return it->second.get();
}

inline const FieldCtx* FieldCtx::get(uint32_t p, uint32_t e) {
    if (e == 1) return get(p, 1, {0, 1});
    auto& table = detail::builtin_moduli();
    auto it = table.find({p, e});
    if (it == table.end())
        throw InvalidInput("no built-in modulus for this (p,e); supply one explicitly");
    return get(p, e, it->second);
}

class FqElem {
public:
    FqElem() : ctx_(nullptr), v_(0) {}
    FqElem(const FieldCtx* ctx, uint32_t packed) : ctx_(ctx), v_(packed) {
        if (!ctx_) throw InvalidInput("null field context");
        if (v_ >= ctx_->q) throw InvalidInput("packed value out of range");
    }

    static FqElem zero(const FieldCtx* ctx) { return FqElem(ctx, 0); }
    static FqElem one(const FieldCtx* ctx) { return FqElem(ctx, 1); }
    // Embeds an integer via reduction mod p (constant digit).
    static FqElem from_int(const FieldCtx* ctx, int64_t n) {
        int64_t m = n % ctx->p;
        if (m < 0) m += ctx->p;
        return FqElem(ctx, static_cast<uint32_t>(m));
    }
    static FqElem from_coeffs(const FieldCtx* ctx, const std::vector<uint32_t>& digits) {
        return FqElem(ctx, ctx->pack(digits));
    }

    const FieldCtx* ctx() const { return ctx_; }
    uint32_t packed() const { return v_; }
    std::vector<uint32_t> coeffs() const { return ctx_->unpack(v_); }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    friend FqElem operator+(const FqElem& a, const FqElem& b) {
        a.check(b);
        return FqElem(a.ctx_, a.ctx_->add(a.v_, b.v_));
    }
    friend FqElem operator-(const FqElem& a, const FqElem& b) {
        a.check(b);
        return FqElem(a.ctx_, a.ctx_->sub(a.v_, b.v_));
    }
    friend FqElem operator*(const FqElem& a, const FqElem& b) {
        a.check(b);
        return FqElem(a.ctx_, a.ctx_->mul(a.v_, b.v_));
    }
    friend FqElem operator/(const FqElem& a, const FqElem& b) {
        a.check(b);
        return FqElem(a.ctx_, a.ctx_->mul(a.v_, b.ctx_->inv(b.v_)));
    }
    FqElem operator-() const { return FqElem(ctx_, ctx_->neg(v_)); }
    FqElem inv() const { return FqElem(ctx_, ctx_->inv(v_)); }
    FqElem pow(uint64_t n) const { return FqElem(ctx_, ctx_->pow(v_, n)); }

    friend bool operator==(const FqElem& a, const FqElem& b) {
        return a.ctx_ == b.ctx_ && a.v_ == b.v_;
    }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }
    friend bool operator<(const FqElem& a, const FqElem& b) { return a.v_ < b.v_; }

private:
    const FieldCtx* ctx_;
    uint32_t v_;

    void check(const FqElem& other) const {
        if (!ctx_ || !other.ctx_) throw InvalidInput("uninitialized field element");
        if (ctx_ != other.ctx_) throw ContextMismatch("elements from different fields");
    }
};

} // namespace drmod
