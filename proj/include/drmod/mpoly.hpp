#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "drmod/fq.hpp"

namespace drmod {

// A polynomial ring F_q[v_0, ..., v_{n-1}] with a fixed, ordered variable
// list.  Rings are small value objects shared by pointer; two rings are
// interchangeable when field and variable list agree.
struct PolyRing {
    const FieldCtx* field;
    std::vector<std::string> vars;

    size_t var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        throw InvalidInput("unknown variable " + name);
    }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(const FieldCtx* field, std::vector<std::string> vars) {
    return std::make_shared<const PolyRing>(PolyRing{field, std::move(vars)});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->field == b->field && a->vars == b->vars;
}

using Exps = std::vector<uint64_t>;

// Graded lexicographic: total degree first, then earlier variables dominate.
struct GradedLex {
    bool operator()(const Exps& a, const Exps& b) const {
        uint64_t ta = std::accumulate(a.begin(), a.end(), uint64_t{0});
        uint64_t tb = std::accumulate(b.begin(), b.end(), uint64_t{0});
        if (ta != tb) return ta < tb;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

class MPoly {
public:
    using TermMap = std::map<Exps, FqElem, GradedLex>;

    explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {
        if (!ring_) throw InvalidInput("null polynomial ring");
    }

    static MPoly zero(const RingPtr& ring) { return MPoly(ring); }
    static MPoly constant(const RingPtr& ring, const FqElem& c) {
        MPoly f(ring);
        if (c.ctx() != ring->field) throw ContextMismatch("constant from a different field");
        if (!c.is_zero()) f.terms_.emplace(Exps(ring->vars.size(), 0), c);
        return f;
    }
    static MPoly from_int(const RingPtr& ring, int64_t n) {
        return constant(ring, FqElem::from_int(ring->field, n));
    }
    static MPoly variable(const RingPtr& ring, size_t idx, uint64_t k = 1) {
        if (idx >= ring->vars.size()) throw InvalidInput("variable index out of range");
        MPoly f(ring);
        if (k == 0) return from_int(ring, 1);
        Exps e(ring->vars.size(), 0);
        e[idx] = k;
        f.terms_.emplace(std::move(e), FqElem::one(ring->field));
        return f;
    }
    static MPoly variable(const RingPtr& ring, const std::string& name, uint64_t k = 1) {
        return variable(ring, ring->var_index(name), k);
    }
    static MPoly monomial(const RingPtr& ring, Exps e, const FqElem& c) {
        MPoly f(ring);
        if (e.size() != ring->vars.size()) throw InvalidInput("exponent vector length mismatch");
        if (!c.is_zero()) f.terms_.emplace(std::move(e), c);
        return f;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && total_degree() == 0;
    }
    FqElem constant_value() const {
        if (terms_.empty()) return FqElem::zero(ring_->field);
        if (!is_constant()) throw InvalidInput("not a constant polynomial");
        return terms_.begin()->second;
    }

    uint64_t total_degree() const {
        if (terms_.empty()) return 0;
        const Exps& e = terms_.rbegin()->first;
        return std::accumulate(e.begin(), e.end(), uint64_t{0});
    }
    // Degree in one variable; -1 for the zero polynomial.
    int64_t degree(size_t var) const {
        if (terms_.empty()) return -1;
        uint64_t d = 0;
        for (auto& [e, c] : terms_) d = std::max(d, e[var]);
        return static_cast<int64_t>(d);
    }
    bool depends_on(size_t var) const {
        for (auto& [e, c] : terms_)
            if (e[var] > 0) return true;
        return false;
    }

    // Leading data in the graded-lex order.
    const Exps& leading_exps() const {
        if (terms_.empty()) throw InvalidInput("zero polynomial has no leading term");
        return terms_.rbegin()->first;
    }
    const FqElem& leading_coeff() const {
        if (terms_.empty()) throw InvalidInput("zero polynomial has no leading term");
        return terms_.rbegin()->second;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly r = a;
        for (auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    MPoly operator-() const {
        MPoly r(ring_);
        for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check(b);
        MPoly r(a.ring_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                Exps e(ea.size());
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend MPoly operator*(const FqElem& c, const MPoly& a) {
        MPoly r(a.ring_);
        if (c.is_zero()) return r;
        for (auto& [e, t] : a.terms_) r.terms_.emplace(e, c * t);
        return r;
    }
    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (!same_ring(a.ring_, b.ring_)) return false;
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly pow(uint64_t n) const {
        MPoly r = from_int(ring_, 1);
        MPoly base = *this;
        while (n) {
            if (n & 1) r = r * base;
            if (n >>= 1) base = base * base;
        }
        return r;
    }

    // f^(q^k); valid by exponent scaling because coefficients lie in F_q.
    MPoly frobenius_power(uint32_t k) const {
        uint64_t s = 1;
        for (uint32_t i = 0; i < k; ++i) {
            if (__builtin_mul_overflow(s, static_cast<uint64_t>(ring_->field->q), &s))
                throw TooLarge("Frobenius exponent overflow");
        }
        MPoly r(ring_);
        for (auto& [e, c] : terms_) {
            Exps e2(e.size());
            for (size_t i = 0; i < e.size(); ++i)
                if (__builtin_mul_overflow(e[i], s, &e2[i]))
                    throw TooLarge("Frobenius exponent overflow");
            r.terms_.emplace(std::move(e2), c);
        }
        return r;
    }

    MPoly derivative(size_t var) const {
        MPoly r(ring_);
        for (auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            FqElem m = FqElem::from_int(ring_->field, static_cast<int64_t>(e[var] % ring_->field->p));
            if (m.is_zero()) continue;
            Exps e2 = e;
            e2[var] -= 1;
            r.add_term(e2, c * m);
        }
        return r;
    }

    // Dense coefficient list with respect to one variable (that variable's
    // exponent zeroed inside each coefficient).
    std::vector<MPoly> coeffs_in(size_t var) const {
        int64_t d = degree(var);
        std::vector<MPoly> out(static_cast<size_t>(d + 1), MPoly(ring_));
        for (auto& [e, c] : terms_) {
            Exps e2 = e;
            uint64_t k = e2[var];
            e2[var] = 0;
            out[k].terms_.emplace(std::move(e2), c);
        }
        return out;
    }
    static MPoly from_coeffs_in(const RingPtr& ring, size_t var, const std::vector<MPoly>& cs) {
        MPoly r(ring);
        for (size_t k = 0; k < cs.size(); ++k) {
            for (auto& [e, c] : cs[k].terms_) {
                Exps e2 = e;
                e2[var] += k;
                r.add_term(e2, c);
            }
        }
        return r;
    }
    MPoly coeff_of(size_t var, uint64_t k) const {
        MPoly r(ring_);
        for (auto& [e, c] : terms_) {
            if (e[var] != k) continue;
            Exps e2 = e;
            e2[var] = 0;
            r.terms_.emplace(std::move(e2), c);
        }
        return r;
    }
    MPoly lc_in(size_t var) const {
        int64_t d = degree(var);
        if (d < 0) throw InvalidInput("leading coefficient of zero");
        return coeff_of(var, static_cast<uint64_t>(d));
    }

    // Exact division by a single divisor; nullopt when not divisible.
    std::optional<MPoly> divexact(const MPoly& b) const {
        check(b);
        if (b.is_zero()) throw DivisionByZero("division by the zero polynomial");
        MPoly q(ring_);
        MPoly r = *this;
        const Exps& eb = b.leading_exps();
        FqElem icb = b.leading_coeff().inv();
        while (!r.is_zero()) {
            const Exps& er = r.leading_exps();
            Exps de(er.size());
            for (size_t i = 0; i < er.size(); ++i) {
                if (er[i] < eb[i]) return std::nullopt;
                de[i] = er[i] - eb[i];
            }
            FqElem cq = r.leading_coeff() * icb;
            q.add_term(de, cq);
            MPoly t = MPoly::monomial(ring_, de, cq);
            r = r - t * b;
        }
        return q;
    }

    // Substitute a polynomial for one variable (Horner on that variable).
    MPoly subst(size_t var, const MPoly& value) const {
        check(value);
        auto cs = coeffs_in(var);
        MPoly r(ring_);
        for (size_t k = cs.size(); k-- > 0;) r = r * value + cs[k];
        return r;
    }

    // Full evaluation at a point, possibly in an extension of the coefficient
    // field; embed maps F_q into the target field.
    template <typename Embed>
    FqElem eval_point(const std::vector<FqElem>& point, Embed embed) const {
        if (point.size() != ring_->vars.size()) throw InvalidInput("point arity mismatch");
        const FieldCtx* target = point.empty() ? ring_->field : point[0].ctx();
        FqElem acc = FqElem::zero(target);
        for (auto& [e, c] : terms_) {
            FqElem t = embed(c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i]) t = t * point[i].pow(e[i]);
            acc = acc + t;
        }
        return acc;
    }

    // Multiply by the inverse of the graded-lex leading coefficient.
    MPoly scal_normalized() const {
        if (terms_.empty()) return *this;
        return leading_coeff().inv() * *this;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << term_string(it->first, it->second);
        }
        return os.str();
    }

    // Moves this polynomial into a ring with more variables (or a different
    // ordering) whose variable set contains ours.
    MPoly lift_to(const RingPtr& target) const {
        if (target->field != ring_->field) throw ContextMismatch("lift across fields");
        std::vector<size_t> where(ring_->vars.size());
        for (size_t i = 0; i < ring_->vars.size(); ++i)
            where[i] = target->var_index(ring_->vars[i]);
        MPoly r(target);
        for (auto& [e, c] : terms_) {
            Exps e2(target->vars.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) e2[where[i]] = e[i];
            r.add_term(e2, c);
        }
        return r;
    }

private:
    RingPtr ring_;
    TermMap terms_;

    void check(const MPoly& other) const {
        if (!same_ring(ring_, other.ring_))
            throw ContextMismatch("polynomials from different rings");
    }
    void add_term(const Exps& e, const FqElem& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            FqElem s = it->second + c;
            if (s.is_zero())
                terms_.erase(it);
            else
                it->second = s;
        }
    }
    std::string coeff_string(const FqElem& c) const {
        const FieldCtx* F = ring_->field;
        if (F->e == 1) return std::to_string(c.packed());
        auto d = c.coeffs();
        std::ostringstream os;
        bool first = true;
        for (size_t i = d.size(); i-- > 0;) {
            if (d[i] == 0) continue;
            if (!first) os << "+";
            first = false;
            if (i == 0 || d[i] != 1) os << d[i];
            if (i >= 1) {
                if (d[i] != 1) os << "*";
                os << "z";
                if (i > 1) os << "^" << i;
            }
        }
        std::string s = os.str();
        if (s.find('+') != std::string::npos || s.find('*') != std::string::npos)
            return "(" + s + ")";
        return s;
    }
    std::string term_string(const Exps& e, const FqElem& c) const {
        std::ostringstream os;
        bool any_var = false;
        for (auto k : e) any_var = any_var || k > 0;
        bool coeff_shown = !any_var || !c.is_one();
        if (coeff_shown) os << coeff_string(c);
        bool first = !coeff_shown;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first) os << "*";
            first = false;
            os << ring_->vars[i];
            if (e[i] > 1) os << "^" << e[i];
        }
        return os.str();
    }
};

} // namespace drmod
