#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "drmod/errors.hpp"
#include "drmod/fq.hpp"
#include "drmod/upoly.hpp"

namespace drmod {

// Dense row-major matrices over A = F_q[T].  Everything here works on small
// matrices (module presentations, basis changes), so the algorithms favour
// exactness over asymptotics.

using AMat = std::vector<std::vector<APoly>>;

inline void amat_check_shape(const AMat& m) {
    if (m.empty() || m[0].empty()) throw InvalidInput("empty matrix");
    for (const auto& row : m)
        if (row.size() != m[0].size()) throw InvalidInput("ragged matrix");
}

inline AMat amat_identity(const FieldCtx* F, size_t n) {
    if (n == 0) throw InvalidInput("empty matrix");
    AMat m(n, std::vector<APoly>(n));
    for (size_t i = 0; i < n; ++i) m[i][i] = APoly::from_scalar(FqElem::one(F));
    return m;
}

inline AMat amat_mul(const AMat& a, const AMat& b) {
    amat_check_shape(a);
    amat_check_shape(b);
    if (a[0].size() != b.size()) throw InvalidInput("matrix shape mismatch");
    AMat r(a.size(), std::vector<APoly>(b[0].size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < b[0].size(); ++j)
                r[i][j] = r[i][j] + a[i][k] * b[k][j];
        }
    return r;
}

inline std::vector<APoly> amat_apply(const AMat& m, const std::vector<APoly>& x) {
    amat_check_shape(m);
    if (x.size() != m[0].size()) throw InvalidInput("matrix shape mismatch");
    std::vector<APoly> r(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) r[i] = r[i] + m[i][j] * x[j];
    return r;
}

inline APoly amat_det(const AMat& m) {
    amat_check_shape(m);
    const size_t n = m.size();
    if (m[0].size() != n) throw InvalidInput("determinant of a non-square matrix");
    if (n == 1) return m[0][0];
    APoly det;
    for (size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        AMat minor;
        minor.reserve(n - 1);
        for (size_t k = 0; k < n; ++k) {
            if (k == i) continue;
            minor.emplace_back(m[k].begin() + 1, m[k].end());
        }
        APoly term = m[i][0] * amat_det(minor);
        det = (i % 2 == 0) ? det + term : det - term;
    }
    return det;
}

inline bool amat_is_unimodular(const AMat& m) {
    APoly d = amat_det(m);
    return !d.is_zero() && d.is_constant();
}

// Smith normal form U*M*V = D with U, V unimodular and the diagonal of D a
// divisibility chain d_1 | d_2 | ... of monic (or zero) polynomials.
struct SNFResult {
    AMat u, d, v;

    std::vector<APoly> invariants() const {
        const size_t k = std::min(d.size(), d[0].size());
        std::vector<APoly> out;
        out.reserve(k);
        for (size_t i = 0; i < k; ++i) out.push_back(d[i][i]);
        return out;
    }
    size_t rank() const {
        size_t r = 0;
        const size_t k = std::min(d.size(), d[0].size());
        for (size_t i = 0; i < k; ++i)
            if (!d[i][i].is_zero()) ++r;
        return r;
    }
};

inline SNFResult smith_normal_form(const FieldCtx* F, AMat m) {
    amat_check_shape(m);
    const size_t rows = m.size(), cols = m[0].size();
    AMat u = amat_identity(F, rows), v = amat_identity(F, cols);

    auto swap_rows = [&](size_t a, size_t b) {
        if (a == b) return;
        std::swap(m[a], m[b]);
        std::swap(u[a], u[b]);
    };
    auto swap_cols = [&](size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
        for (size_t i = 0; i < cols; ++i) std::swap(v[i][a], v[i][b]);
    };
    auto row_sub = [&](size_t a, const APoly& q, size_t b) {
        for (size_t j = 0; j < cols; ++j) m[a][j] = m[a][j] - q * m[b][j];
        for (size_t j = 0; j < rows; ++j) u[a][j] = u[a][j] - q * u[b][j];
    };
    auto col_sub = [&](size_t a, const APoly& q, size_t b) {
        for (size_t i = 0; i < rows; ++i) m[i][a] = m[i][a] - q * m[i][b];
        for (size_t i = 0; i < cols; ++i) v[i][a] = v[i][a] - q * v[i][b];
    };
    auto row_add = [&](size_t a, size_t b) {
        for (size_t j = 0; j < cols; ++j) m[a][j] = m[a][j] + m[b][j];
        for (size_t j = 0; j < rows; ++j) u[a][j] = u[a][j] + u[b][j];
    };

    const size_t lim = std::min(rows, cols);
    for (size_t t = 0; t < lim; ++t) {
        bool exhausted = false;
        for (;;) {
            int64_t best = -1;
            size_t pi = 0, pj = 0;
            for (size_t i = t; i < rows; ++i)
                for (size_t j = t; j < cols; ++j)
                    if (!m[i][j].is_zero() && (best < 0 || m[i][j].degree() < best)) {
                        best = m[i][j].degree();
                        pi = i;
                        pj = j;
                    }
            if (best < 0) {
                exhausted = true;
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool dirty = false;
            for (size_t i = t + 1; i < rows; ++i) {
                if (m[i][t].is_zero()) continue;
                row_sub(i, m[i][t] / m[t][t], t);
                dirty = dirty || !m[i][t].is_zero();
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (m[t][j].is_zero()) continue;
                col_sub(j, m[t][j] / m[t][t], t);
                dirty = dirty || !m[t][j].is_zero();
            }
            if (dirty) continue;

            size_t bad = rows;
            for (size_t i = t + 1; i < rows && bad == rows; ++i)
                for (size_t j = t + 1; j < cols; ++j)
                    if (!(m[i][j] % m[t][t]).is_zero()) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            row_add(t, bad);
        }
        if (exhausted) break;

        const FqElem c = m[t][t].lc();
        if (!(c == FqElem::one(F))) {
            const FqElem ic = c.inv();
            for (size_t j = 0; j < cols; ++j) m[t][j] = ic * m[t][j];
            for (size_t j = 0; j < rows; ++j) u[t][j] = ic * u[t][j];
        }
    }
    return SNFResult{std::move(u), std::move(m), std::move(v)};
}

// Solve M*x = rhs over A using a precomputed Smith form of M; nullopt when
// there is no integral solution.
inline std::optional<std::vector<APoly>> snf_solve(const SNFResult& s,
                                                   const std::vector<APoly>& rhs) {
    const size_t rows = s.d.size(), cols = s.d[0].size();
    if (rhs.size() != rows) throw InvalidInput("right-hand side length mismatch");
    std::vector<APoly> w = amat_apply(s.u, rhs);
    std::vector<APoly> z(cols);
    const size_t lim = std::min(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (i < lim && !s.d[i][i].is_zero()) {
            auto [q, r] = APoly::divmod(w[i], s.d[i][i]);
            if (!r.is_zero()) return std::nullopt;
            z[i] = std::move(q);
        } else if (!w[i].is_zero()) {
            return std::nullopt;
        }
    }
    return amat_apply(s.v, z);
}

// Product of random transvections; rows below fixed_rows are the only ones
// touched, so callers can pin a leading block.
template <typename Rng>
inline AMat random_unimodular(const FieldCtx* F, size_t n, Rng& rng, size_t ops = 12,
                              uint32_t deg_bound = 2, size_t fixed_rows = 0) {
    if (fixed_rows + 2 > n + 1) throw InvalidInput("no free rows left");
    AMat w = amat_identity(F, n);
    for (size_t k = 0; k < ops; ++k) {
        size_t a = fixed_rows + rng() % (n - fixed_rows);
        size_t b = rng() % n;
        if (a == b) continue;
        std::vector<FqElem> cs;
        uint32_t d = static_cast<uint32_t>(rng() % (deg_bound + 1));
        for (uint32_t i = 0; i <= d; ++i)
            cs.push_back(FqElem(F, static_cast<uint32_t>(rng() % F->q)));
        APoly c(std::move(cs));
        if (c.is_zero()) continue;
        for (size_t j = 0; j < n; ++j) w[a][j] = w[a][j] + c * w[b][j];
    }
    return w;
}

} // namespace drmod
