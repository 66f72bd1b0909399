#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "drmod/drinfeld.hpp"
#include "drmod/errors.hpp"

namespace drmod {

// Exponent polynomial in the symbol q: c_[i] is the coefficient of q^i.
// Keeping exponents in this form lets one skew computation cover every
// prime power at once; comparisons take q large.
class ExpPoly {
public:
    ExpPoly() = default;
    static ExpPoly constant(int64_t c) {
        ExpPoly e;
        if (c != 0) e.c_ = {c};
        return e;
    }
    static ExpPoly qpow(uint32_t k) {
        ExpPoly e;
        e.c_.assign(k + 1, 0);
        e.c_[k] = 1;
        return e;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int64_t constant_value() const { return c_.empty() ? 0 : c_[0]; }
    const std::vector<int64_t>& coeffs() const { return c_; }

    ExpPoly operator+(const ExpPoly& o) const {
        ExpPoly r;
        r.c_.assign(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
        r.trim();
        return r;
    }

    // multiply by q^k
    ExpPoly shifted(uint32_t k) const {
        if (c_.empty()) return ExpPoly();
        ExpPoly r;
        r.c_.assign(c_.size() + k, 0);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    bool operator==(const ExpPoly& o) const { return c_ == o.c_; }
    bool operator!=(const ExpPoly& o) const { return c_ != o.c_; }

    // sign of a - b for q large
    static int cmp(const ExpPoly& a, const ExpPoly& b) {
        size_t n = std::max(a.c_.size(), b.c_.size());
        for (size_t i = n; i-- > 0;) {
            int64_t x = i < a.c_.size() ? a.c_[i] : 0;
            int64_t y = i < b.c_.size() ? b.c_[i] : 0;
            if (x != y) return x < y ? -1 : 1;
        }
        return 0;
    }

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (size_t i = c_.size(); i-- > 0;) {
            int64_t c = c_[i];
            if (c == 0) continue;
            if (!s.empty()) s += c > 0 ? "+" : "-";
            else if (c < 0) s += "-";
            int64_t a = c > 0 ? c : -c;
            if (i == 0) {
                s += std::to_string(a);
                continue;
            }
            if (a != 1) s += std::to_string(a) + "*";
            s += (i == 1) ? "q" : ("q^" + std::to_string(i));
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<int64_t> c_;
};

struct SymRing {
    std::vector<std::string> vars;
    size_t index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        throw InvalidInput("unknown variable " + name);
    }
};
using SymRingPtr = std::shared_ptr<const SymRing>;

inline SymRingPtr make_sym_ring(std::vector<std::string> vars) {
    auto r = std::make_shared<SymRing>();
    r->vars = std::move(vars);
    return r;
}

// Multivariate polynomial with integer coefficients and ExpPoly exponents.
// Coefficients stand for base-field scalars, so Frobenius fixes them and
// only shifts the exponents.
class SymPoly {
public:
    using Mono = std::vector<ExpPoly>;

    struct MonoLess {
        bool operator()(const Mono& a, const Mono& b) const {
            ExpPoly ta, tb;
            for (auto& e : a) ta = ta + e;
            for (auto& e : b) tb = tb + e;
            int c = ExpPoly::cmp(ta, tb);
            if (c != 0) return c < 0;
            for (size_t i = 0; i < a.size(); ++i) {
                c = ExpPoly::cmp(a[i], b[i]);
                if (c != 0) return c < 0;
            }
            return false;
        }
    };
    using TermMap = std::map<Mono, int64_t, MonoLess>;

    SymPoly() = default;
    explicit SymPoly(SymRingPtr ring) : ring_(std::move(ring)) {}

    static SymPoly zero(const SymRingPtr& ring) { return SymPoly(ring); }
    static SymPoly from_int(const SymRingPtr& ring, int64_t c) {
        SymPoly p(ring);
        if (c != 0) p.terms_[Mono(ring->vars.size())] = c;
        return p;
    }
    static SymPoly variable(const SymRingPtr& ring, const std::string& name,
                            ExpPoly e = ExpPoly::constant(1)) {
        SymPoly p(ring);
        Mono m(ring->vars.size());
        m[ring->index(name)] = std::move(e);
        p.terms_[std::move(m)] = 1;
        return p;
    }

    const SymRingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        for (auto& e : terms_.begin()->first)
            if (!e.is_zero()) return false;
        return true;
    }
    int64_t constant_value() const {
        if (!is_constant()) throw InvalidInput("not a constant");
        return terms_.empty() ? 0 : terms_.begin()->second;
    }

    bool operator==(const SymPoly& o) const {
        return same(o), terms_ == o.terms_;
    }
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    SymPoly operator+(const SymPoly& o) const {
        same(o);
        SymPoly r = *this;
        if (!r.ring_) r.ring_ = o.ring_;
        for (auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }
    SymPoly operator-(const SymPoly& o) const {
        same(o);
        SymPoly r = *this;
        if (!r.ring_) r.ring_ = o.ring_;
        for (auto& [m, c] : o.terms_) r.add_term(m, -c);
        return r;
    }
    SymPoly operator*(const SymPoly& o) const {
        same(o);
        SymPoly r(ring_ ? ring_ : o.ring_);
        for (auto& [ma, ca] : terms_)
            for (auto& [mb, cb] : o.terms_) {
                Mono m(ma.size());
                for (size_t i = 0; i < ma.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }

    SymPoly frobenius_power(uint32_t k) const {
        SymPoly r(ring_);
        for (auto& [m, c] : terms_) {
            Mono s(m.size());
            for (size_t i = 0; i < m.size(); ++i) s[i] = m[i].shifted(k);
            r.terms_[std::move(s)] = c;
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            int64_t c = it->second;
            if (!s.empty()) {
                s += c > 0 ? " + " : " - ";
                if (c < 0) c = -c;
            } else if (c < 0) {
                s += "-";
                c = -c;
            }
            std::string body;
            for (size_t i = 0; i < it->first.size(); ++i) {
                const ExpPoly& e = it->first[i];
                if (e.is_zero()) continue;
                if (!body.empty()) body += "*";
                body += ring_->vars[i] + exp_suffix(e);
            }
            if (body.empty()) {
                s += std::to_string(c);
            } else {
                if (c != 1) s += std::to_string(c) + "*";
                s += body;
            }
        }
        return s;
    }

private:
    static std::string exp_suffix(const ExpPoly& e) {
        if (e.is_constant()) {
            int64_t c = e.constant_value();
            return c == 1 ? "" : ("^" + std::to_string(c));
        }
        if (e == ExpPoly::qpow(1)) return "^q";
        return "^(" + e.to_string() + ")";
    }
    void same(const SymPoly& o) const {
        if (ring_ && o.ring_ && ring_ != o.ring_)
            throw ContextMismatch("symbolic polynomials from different rings");
    }
    void add_term(const Mono& m, int64_t c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_[m] = c;
        } else if ((it->second += c) == 0) {
            terms_.erase(it);
        }
    }

    SymRingPtr ring_;
    TermMap terms_;
};

template <>
struct SkewScalar<SymPoly> {
    static SymPoly zero(const SymPoly& like) { return SymPoly::zero(like.ring()); }
    static SymPoly one(const SymPoly& like) { return SymPoly::from_int(like.ring(), 1); }
    static bool is_zero(const SymPoly& x) { return x.is_zero(); }
    static SymPoly frobenius(const SymPoly& x, uint32_t k) { return x.frobenius_power(k); }
    static SymPoly inv(const SymPoly& x) {
        if (x.is_constant() && (x.constant_value() == 1 || x.constant_value() == -1)) return x;
        throw NotDivisible("symbolic polynomial is not a unit");
    }
    static SymPoly from_base(const FqElem&, const SymPoly&) {
        throw ContextMismatch("symbolic ring takes integer scalars, not field elements");
    }
};

inline std::string render_chain(const EqChain<SymPoly>& eq) {
    std::string s;
    for (auto& m : eq.members) {
        if (!s.empty()) s += " = ";
        s += m.to_string();
    }
    return s;
}

// Commutation system of a monic tau-degree-k unknown u against phi_a with
// q left symbolic.  a is given by its integer coefficient list, ascending.
inline std::vector<EqChain<SymPoly>> commutation_system_sym(uint32_t r, uint32_t k,
                                                            const std::vector<int64_t>& a) {
    size_t adeg = a.size();
    while (adeg > 0 && a[adeg - 1] == 0) --adeg;
    if (adeg == 0) throw InvalidInput("a must be nonzero");
    uint64_t big_r = static_cast<uint64_t>(r) * static_cast<uint64_t>(adeg - 1);
    if (k < 1 || k >= big_r) throw InvalidInput("need 1 <= k < r*deg(a) for the dual shape");

    std::vector<std::string> vars{"T"};
    for (uint32_t i = 0; i < k; ++i) vars.push_back("a" + std::to_string(i));
    for (uint64_t i = 0; i + k < big_r; ++i) vars.push_back("b" + std::to_string(i));
    std::string topname = (k == 1) ? "Delta" : ("g" + std::to_string(big_r));
    for (uint64_t j = 1; j < big_r; ++j) vars.push_back("g" + std::to_string(j));
    vars.push_back(topname);
    SymRingPtr ring = make_sym_ring(vars);

    std::vector<SymPoly> ucoef;
    for (uint32_t i = 0; i < k; ++i) ucoef.push_back(SymPoly::variable(ring, "a" + std::to_string(i)));
    ucoef.push_back(SymPoly::from_int(ring, 1));
    SkewPoly<SymPoly> u(std::move(ucoef));

    std::vector<SymPoly> hcoef;
    for (uint64_t i = 0; i + k < big_r; ++i)
        hcoef.push_back(SymPoly::variable(ring, "b" + std::to_string(i)));
    hcoef.push_back(SymPoly::variable(ring, topname));
    SkewPoly<SymPoly> uhat(std::move(hcoef));

    std::vector<SymPoly> target;
    SymPoly tvar = SymPoly::variable(ring, "T");
    SymPoly a_at_t = SymPoly::zero(ring);
    for (size_t i = adeg; i-- > 0;)
        a_at_t = a_at_t * tvar + SymPoly::from_int(ring, a[i]);
    target.push_back(a_at_t);
    for (uint64_t j = 1; j < big_r; ++j) target.push_back(SymPoly::variable(ring, "g" + std::to_string(j)));
    target.push_back(SymPoly::variable(ring, topname));

    return commutation_chains(u, uhat, target);
}

} // namespace drmod
