#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "drmod/fq.hpp"

namespace drmod {

// Scalar plumbing for templated polynomial code.  Scalars carry their own
// context, so fresh zeros and ones are minted from an exemplar value.
template <typename K>
struct RingOps;

template <>
struct RingOps<FqElem> {
    static FqElem zero(const FqElem& like) { return FqElem::zero(like.ctx()); }
    static FqElem one(const FqElem& like) { return FqElem::one(like.ctx()); }
    static bool is_zero(const FqElem& x) { return x.is_zero(); }
    static bool is_one(const FqElem& x) { return x.is_one(); }
    static FqElem inv(const FqElem& x) { return x.inv(); }
};

// Dense univariate polynomial over a field K, coefficients ascending.
// The zero polynomial is the empty vector.
template <typename K>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly from_scalar(const K& x) {
        if (RingOps<K>::is_zero(x)) return UPoly();
        return UPoly(std::vector<K>{x});
    }
    static UPoly variable(const K& exemplar, uint64_t k = 1) {
        std::vector<K> v(k + 1, RingOps<K>::zero(exemplar));
        v[k] = RingOps<K>::one(exemplar);
        return UPoly(std::move(v));
    }

    const std::vector<K>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int64_t degree() const { return static_cast<int64_t>(c_.size()) - 1; }
    const K& lc() const {
        if (c_.empty()) throw InvalidInput("leading coefficient of zero");
        return c_.back();
    }
    const K& operator[](size_t i) const { return c_[i]; }
    K coeff_or_zero(size_t i, const K& exemplar) const {
        return i < c_.size() ? c_[i] : RingOps<K>::zero(exemplar);
    }
    bool is_one() const { return c_.size() == 1 && RingOps<K>::is_one(c_[0]); }
    bool is_constant() const { return c_.size() <= 1; }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        const UPoly& lo = a.c_.size() <= b.c_.size() ? a : b;
        const UPoly& hi = a.c_.size() <= b.c_.size() ? b : a;
        std::vector<K> r = hi.c_;
        for (size_t i = 0; i < lo.c_.size(); ++i) r[i] = r[i] + lo.c_[i];
        UPoly out;
        out.c_ = std::move(r);
        out.trim();
        return out;
    }
    UPoly operator-() const {
        std::vector<K> r;
        r.reserve(c_.size());
        for (auto& x : c_) r.push_back(-x);
        UPoly out;
        out.c_ = std::move(r);
        return out;
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, RingOps<K>::zero(a.c_[0]));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        UPoly out;
        out.c_ = std::move(r);
        out.trim();
        return out;
    }
    friend UPoly operator*(const K& s, const UPoly& a) {
        if (RingOps<K>::is_zero(s)) return UPoly();
        std::vector<K> r;
        r.reserve(a.c_.size());
        for (auto& x : a.c_) r.push_back(s * x);
        UPoly out;
        out.c_ = std::move(r);
        out.trim();
        return out;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly pow(uint64_t n) const {
        if (n == 0) {
            if (is_zero()) throw InvalidInput("0^0 of polynomials");
            return from_scalar(RingOps<K>::one(c_[0]));
        }
        UPoly r = *this, acc;
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

    UPoly shifted(uint64_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<K> r(c_.size() + k, RingOps<K>::zero(c_[0]));
        for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
        UPoly out;
        out.c_ = std::move(r);
        return out;
    }

    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (a.degree() < b.degree()) return {UPoly(), a};
        K ilc = RingOps<K>::inv(b.lc());
        std::vector<K> rem = a.c_;
        size_t db = b.c_.size() - 1;
        std::vector<K> quot(rem.size() - db, RingOps<K>::zero(b.lc()));
        for (size_t k = rem.size() - 1; k + 1 > db; --k) {
            K q = rem[k] * ilc;
            if (!RingOps<K>::is_zero(q)) {
                quot[k - db] = q;
                for (size_t i = 0; i <= db; ++i)
                    rem[k - db + i] = rem[k - db + i] - q * b.c_[i];
            }
            if (k == 0) break;
        }
        UPoly qq, rr;
        qq.c_ = std::move(quot);
        qq.trim();
        rem.erase(rem.begin() + static_cast<ptrdiff_t>(db), rem.end());
        rr.c_ = std::move(rem);
        rr.trim();
        return {qq, rr};
    }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

    UPoly monic() const {
        if (is_zero()) return *this;
        if (RingOps<K>::is_one(lc())) return *this;
        return RingOps<K>::inv(lc()) * *this;
    }

    static UPoly gcd(const UPoly& a, const UPoly& b) {
        if (a.is_zero() && b.is_zero()) throw UndefinedGcd("gcd(0,0)");
        UPoly x = a, y = b;
        while (!y.is_zero()) {
            UPoly r = x % y;
            x = y;
            y = r;
        }
        return x.monic();
    }

    // Returns (g, s, t) with s*a + t*b = g, g monic.
    static std::tuple<UPoly, UPoly, UPoly> extgcd(const UPoly& a, const UPoly& b) {
        if (a.is_zero() && b.is_zero()) throw UndefinedGcd("extgcd(0,0)");
        const K exemplar = a.is_zero() ? b.lc() : a.lc();
        UPoly r0 = a, r1 = b;
        UPoly s0 = from_scalar(RingOps<K>::one(exemplar)), s1;
        UPoly t0, t1 = from_scalar(RingOps<K>::one(exemplar));
        while (!r1.is_zero()) {
            auto [q, r] = divmod(r0, r1);
            r0 = r1; r1 = r;
            UPoly s = s0 - q * s1;
            s0 = s1; s1 = s;
            UPoly t = t0 - q * t1;
            t0 = t1; t1 = t;
        }
        K ilc = RingOps<K>::inv(r0.lc());
        return {ilc * r0, ilc * s0, ilc * t0};
    }

    K eval(const K& x) const {
        if (is_zero()) return RingOps<K>::zero(x);
        K acc = RingOps<K>::zero(x);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UPoly derivative(uint32_t char_p) const {
        std::vector<K> r;
        for (size_t i = 1; i < c_.size(); ++i) {
            uint64_t m = i % char_p;
            K term = RingOps<K>::zero(c_[0]);
            for (uint64_t j = 0; j < m; ++j) term = term + c_[i];
            r.push_back(term);
        }
        UPoly out;
        out.c_ = std::move(r);
        out.trim();
        return out;
    }

    std::string to_string(const std::string& var) const;

private:
    std::vector<K> c_;
    void trim() {
        while (!c_.empty() && RingOps<K>::is_zero(c_.back())) c_.pop_back();
    }
};

using APoly = UPoly<FqElem>;  // A = F_q[T]

inline APoly apoly_from_ints(const FieldCtx* F, const std::vector<int64_t>& coeffs) {
    std::vector<FqElem> v;
    v.reserve(coeffs.size());
    for (auto n : coeffs) v.push_back(FqElem::from_int(F, n));
    return APoly(std::move(v));
}

// f(T)^q by exponent scaling (coefficients are Frobenius-fixed).
inline APoly apoly_frobenius(const APoly& f, uint32_t k = 1) {
    if (f.is_zero() || k == 0) return f;
    const FieldCtx* F = f.lc().ctx();
    uint64_t s = 1;
    for (uint32_t i = 0; i < k; ++i) s *= F->q;
    std::vector<FqElem> r(static_cast<size_t>(f.degree()) * s + 1, FqElem::zero(F));
    for (size_t i = 0; i < f.coeffs().size(); ++i) r[i * s] = f.coeffs()[i];
    return APoly(std::move(r));
}

template <typename K>
std::string UPoly<K>::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (RingOps<K>::is_zero(c_[i])) continue;
        if (!first) os << " + ";
        first = false;
        bool coeff_shown = (i == 0) || !RingOps<K>::is_one(c_[i]);
        if constexpr (std::is_same_v<K, FqElem>) {
            if (coeff_shown) os << c_[i].packed();
        } else {
            if (coeff_shown) os << "(?)";
        }
        if (i >= 1) {
            if (coeff_shown) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

} // namespace drmod
