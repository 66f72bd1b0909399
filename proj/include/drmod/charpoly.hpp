#pragma once

#include <vector>

#include "drmod/convert.hpp"

namespace drmod {

// Characteristic polynomial det(X*I - A) by the Berkowitz algorithm
// (division-free, so it runs over any commutative coefficient ring).
template <typename K>
UPoly<K> charpoly_berkowitz(const std::vector<std::vector<K>>& A) {
    size_t n = A.size();
    if (n == 0) throw InvalidInput("empty matrix");
    const K zero = RingOps<K>::zero(A[0][0]);
    const K one = RingOps<K>::one(A[0][0]);
    std::vector<K> C{one};  // coefficients, leading power first
    for (size_t r = 1; r <= n; ++r) {
        std::vector<K> t(r + 1, zero);
        t[0] = one;
        t[1] = -A[r - 1][r - 1];
        if (r >= 2) {
            std::vector<K> vec(r - 1, zero);
            for (size_t i = 0; i < r - 1; ++i) vec[i] = A[i][r - 1];
            for (size_t j = 2; j <= r; ++j) {
                K dot = zero;
                for (size_t i = 0; i < r - 1; ++i) dot = dot + A[r - 1][i] * vec[i];
                t[j] = -dot;
                if (j < r) {
                    std::vector<K> next(r - 1, zero);
                    for (size_t i = 0; i < r - 1; ++i) {
                        K acc = zero;
                        for (size_t k = 0; k < r - 1; ++k) acc = acc + A[i][k] * vec[k];
                        next[i] = acc;
                    }
                    vec = std::move(next);
                }
            }
        }
        std::vector<K> newC(r + 1, zero);
        for (size_t i = 0; i <= r; ++i)
            for (size_t j = 0; j <= i; ++j)
                if (i - j < C.size()) newC[i] = newC[i] + t[j] * C[i - j];
        C = std::move(newC);
    }
    std::vector<K> asc(n + 1, zero);
    for (size_t i = 0; i <= n; ++i) asc[n - i] = C[i];
    return UPoly<K>(std::move(asc));
}

// Characteristic polynomial of multiplication by u on F_q(T)[y]/(modulus);
// equals prod over roots alpha of modulus of (X - u(alpha)).
inline UPoly<FracT> charpoly_mult(const MPoly& modulus, const RatFunc& u, size_t t_var, size_t y_var) {
    const FieldCtx* F = modulus.ring()->field;
    TyPoly m = mpoly_to_typoly(modulus, t_var, y_var).monic();
    if (m.degree() < 1) throw InvalidInput("modulus must be nonconstant in y");
    TyPoly d = mpoly_to_typoly(u.den(), t_var, y_var);
    if (TyPoly::gcd(d, m).degree() != 0)
        throw NonInvertibleDenominator("denominator of u shares a factor with the modulus");
    auto ctx = QuotCtx::make(F, m);
    QuotElem ubar = ratfunc_mod(u, ctx, t_var, y_var);

    size_t n = static_cast<size_t>(m.degree());
    const FracT fz = fq_t_zero(F);
    std::vector<std::vector<FracT>> M(n, std::vector<FracT>(n, fz));
    QuotElem col = ubar;
    QuotElem y = QuotElem::generator(ctx);
    for (size_t j = 0; j < n; ++j) {
        for (size_t i = 0; i < n; ++i)
            M[i][j] = col.rep().coeff_or_zero(i, fz);
        if (j + 1 < n) col = col * y;
    }
    return charpoly_berkowitz(M);
}

} // namespace drmod
