#pragma once

#include <utility>

#include "drmod/gcd.hpp"
#include "drmod/mpoly.hpp"

namespace drmod {

// Sylvester resultant eliminating variable v, computed by the subresultant
// polynomial remainder sequence.  Satisfies
//   Res_v(f, g) = lc_v(f)^{deg_v g} * prod_{f(alpha)=0} g(alpha).
inline MPoly resultant(const MPoly& f, const MPoly& g, size_t v) {
    if (f.is_zero()) throw InvalidInput("resultant with zero first argument");
    if (g.is_zero()) return MPoly::zero(f.ring());
    const RingPtr& ring = f.ring();

    MPoly a = f, b = g;
    int64_t da = a.degree(v), db = b.degree(v);
    FqElem sgn = FqElem::one(ring->field);
    if (da < db) {
        std::swap(a, b);
        std::swap(da, db);
        if ((da % 2) && (db % 2)) sgn = -sgn;
    }
    if (db == 0) return sgn * b.pow(static_cast<uint64_t>(da));

    MPoly ca = content_in(a, v), cb = content_in(b, v);
    MPoly A = *a.divexact(ca);
    MPoly B = *b.divexact(cb);
    MPoly t = ca.pow(static_cast<uint64_t>(db)) * cb.pow(static_cast<uint64_t>(da));
    MPoly gpoly = MPoly::from_int(ring, 1);
    MPoly h = MPoly::from_int(ring, 1);
    while (true) {
        int64_t dA = A.degree(v), dB = B.degree(v);
        int64_t d = dA - dB;
        if ((dA % 2) && (dB % 2)) sgn = -sgn;
        MPoly R = prem(A, B, v);
        A = B;
        MPoly den = gpoly * h.pow(static_cast<uint64_t>(d));
        if (R.is_zero()) {
            B = MPoly::zero(ring);
        } else {
            auto q = R.divexact(den);
            if (!q) throw LogicError("subresultant division failed");
            B = *q;
        }
        gpoly = A.lc_in(v);
        if (d > 0) {
            auto q = gpoly.pow(static_cast<uint64_t>(d)).divexact(h.pow(static_cast<uint64_t>(d - 1)));
            if (!q) throw LogicError("subresultant h-update failed");
            h = *q;
        }
        if (B.is_zero()) return MPoly::zero(ring);
        if (B.degree(v) == 0) {
            int64_t dlast = A.degree(v);
            auto q = B.pow(static_cast<uint64_t>(dlast)).divexact(h.pow(static_cast<uint64_t>(dlast - 1)));
            if (!q) throw LogicError("subresultant final division failed");
            return sgn * (t * *q);
        }
    }
}

} // namespace drmod
