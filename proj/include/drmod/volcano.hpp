#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "drmod/errors.hpp"
#include "drmod/fq.hpp"
#include "drmod/upoly.hpp"

namespace drmod {

// Splitting data of a prime l of A in O_K: one (e_i, f_i) pair per prime
// above l.  Only the inertia degrees matter for horizontal combinatorics.
struct SplitData {
    uint32_t deg_l = 1;
    std::vector<std::pair<uint32_t, uint32_t>> ef;

    uint32_t g_split() const { return static_cast<uint32_t>(ef.size()); }
    uint32_t g1() const {
        uint32_t n = 0;
        for (const auto& [e, f] : ef)
            if (f == 1) ++n;
        return n;
    }
};

inline void validate_split(const SplitData& s, uint32_t r) {
    if (s.deg_l < 1) throw InvalidInput("prime degree must be positive");
    if (s.ef.empty()) throw InvalidInput("no primes above l");
    uint64_t sum = 0;
    for (const auto& [e, f] : s.ef) {
        if (e < 1 || f < 1) throw InvalidInput("ramification and inertia must be positive");
        sum += static_cast<uint64_t>(e) * f;
    }
    if (sum != r) throw InvalidInput("splitting degrees do not sum to the rank");
}

// One horizontal l^m-type: exponents m_i with sum f_i m_i = m.  The kernel
// shape lists the exponents f_i m_i of the nontrivial cyclic summands A/l^k,
// sorted descending.
struct HorizontalType {
    std::vector<uint32_t> m;
    bool cyclic = false;
    std::vector<uint32_t> kernel;

    bool operator==(const HorizontalType&) const = default;
};

namespace detail {

inline void horizontal_types_rec(const SplitData& split, size_t i, uint32_t rem,
                                 std::vector<uint32_t>& cur,
                                 std::vector<HorizontalType>& out) {
    const size_t g = split.ef.size();
    const uint32_t f = split.ef[i].second;
    if (i + 1 == g) {
        if (rem % f != 0) return;
        cur[i] = rem / f;
        HorizontalType t;
        t.m = cur;
        uint32_t positive = 0;
        for (size_t k = 0; k < g; ++k) {
            if (cur[k] == 0) continue;
            ++positive;
            t.kernel.push_back(split.ef[k].second * cur[k]);
        }
        t.cyclic = positive == 1;
        std::sort(t.kernel.begin(), t.kernel.end(), std::greater<uint32_t>());
        out.push_back(std::move(t));
        cur[i] = 0;
        return;
    }
    for (uint32_t mi = 0; static_cast<uint64_t>(mi) * f <= rem; ++mi) {
        cur[i] = mi;
        horizontal_types_rec(split, i + 1, rem - mi * f, cur, out);
    }
    cur[i] = 0;
}

} // namespace detail

inline std::vector<HorizontalType> horizontal_types(uint32_t m, const SplitData& split) {
    if (m < 1) throw InvalidInput("type length must be positive");
    if (split.ef.empty()) throw InvalidInput("no primes above l");
    double est = 1;
    for (size_t i = 0; i + 1 < split.ef.size(); ++i) est *= static_cast<double>(m) + 1;
    if (est > 1e6) throw TooLarge("horizontal type enumeration too large");
    std::vector<HorizontalType> out;
    std::vector<uint32_t> cur(split.ef.size(), 0);
    detail::horizontal_types_rec(split, 0, m, cur, out);
    return out;
}

inline uint64_t branching_factor(uint64_t q, uint32_t r, uint32_t deg_l) {
    if (q < 2 || r < 1 || deg_l < 1) throw InvalidInput("branching parameters must be positive");
    uint64_t b = 1;
    const uint64_t exp = static_cast<uint64_t>(deg_l) * (r - 1);
    for (uint64_t i = 0; i < exp; ++i) {
        if (b > UINT64_MAX / q) throw TooLarge("branching factor exceeds 64 bits");
        b *= q;
    }
    return b;
}

// Crater data: Pic(O) as an invariant-factor list together with the images
// of the degree-1 primes.  An empty factor list is the trivial group.
struct CraterSpec {
    std::vector<uint64_t> invariants;
    std::vector<std::vector<uint64_t>> images;
};

inline void validate_crater(const CraterSpec& c) {
    uint64_t n = 1;
    for (uint64_t f : c.invariants) {
        if (f < 1) throw InvalidInput("invariant factors must be positive");
        if (n > 200000 / f) throw TooLarge("crater group has more than 2*10^5 elements");
        n *= f;
    }
    if (c.images.empty()) throw InvalidInput("crater needs at least one prime image");
    for (const auto& img : c.images) {
        if (img.size() != c.invariants.size())
            throw InvalidInput("prime image has the wrong number of coordinates");
        for (size_t i = 0; i < img.size(); ++i)
            if (img[i] >= c.invariants[i])
                throw InvalidInput("prime image is not reduced modulo the invariant factors");
    }
}

inline uint64_t crater_order(const CraterSpec& c) {
    uint64_t n = 1;
    for (uint64_t f : c.invariants) n *= f;
    return n;
}

struct VolcanoGraph {
    enum class EdgeKind { horizontal, ascending };
    struct Edge {
        uint64_t from = 0, to = 0;
        EdgeKind kind = EdgeKind::horizontal;
        bool operator==(const Edge&) const = default;
    };

    std::vector<uint32_t> level;
    std::vector<Edge> edges;
    std::vector<std::vector<uint32_t>> level_vectors;  // optional, one tuple per vertex

    bool operator==(const VolcanoGraph&) const = default;

    uint32_t depth() const {
        uint32_t d = 0;
        for (uint32_t t : level) d = std::max(d, t);
        return d;
    }
    std::vector<uint64_t> level_sizes() const {
        std::vector<uint64_t> s(static_cast<size_t>(depth()) + 1, 0);
        for (uint32_t t : level) ++s[t];
        return s;
    }
};

inline VolcanoGraph crater_graph(const CraterSpec& spec) {
    validate_crater(spec);
    const uint64_t n = crater_order(spec);
    const size_t k = spec.invariants.size();
    VolcanoGraph g;
    g.level.assign(n, 0);
    std::vector<uint64_t> coord(k, 0);
    for (uint64_t v = 0; v < n; ++v) {
        for (const auto& img : spec.images) {
            uint64_t w = 0, stride = 1;
            for (size_t i = 0; i < k; ++i) {
                w += ((coord[i] + img[i]) % spec.invariants[i]) * stride;
                stride *= spec.invariants[i];
            }
            g.edges.push_back({v, w, VolcanoGraph::EdgeKind::horizontal});
        }
        for (size_t i = 0; i < k; ++i) {
            if (++coord[i] < spec.invariants[i]) break;
            coord[i] = 0;
        }
    }
    return g;
}

inline VolcanoGraph build_volcano(const CraterSpec& spec, uint64_t b, uint32_t depth) {
    if (b < 1) throw InvalidInput("branching must be at least 1");
    VolcanoGraph g = crater_graph(spec);
    const uint64_t n0 = g.level.size();
    uint64_t total = n0, width = n0;
    for (uint32_t t = 1; t <= depth; ++t) {
        if (width > 2000000 / b || total > 2000000 - width * b)
            throw TooLarge("volcano has more than 2*10^6 vertices");
        width *= b;
        total += width;
    }
    uint64_t prev_begin = 0, prev_count = n0;
    for (uint32_t t = 1; t <= depth; ++t) {
        const uint64_t begin = g.level.size();
        for (uint64_t p = 0; p < prev_count; ++p)
            for (uint64_t c = 0; c < b; ++c) {
                const uint64_t child = g.level.size();
                g.level.push_back(t);
                g.edges.push_back(
                    {child, prev_begin + p, VolcanoGraph::EdgeKind::ascending});
            }
        prev_begin = begin;
        prev_count *= b;
    }
    return g;
}

struct VolcanoParams {
    uint32_t r = 2;
    uint64_t g1 = 1;
    uint64_t b = 1;
};

struct ValidationReport {
    bool pass = true;
    std::vector<std::string> violations;
};

inline std::vector<uint32_t> ascend_target(const std::vector<uint32_t>& lv) {
    std::vector<uint32_t> out;
    out.reserve(lv.size());
    for (uint32_t t : lv) out.push_back(t > 0 ? t - 1 : 0);
    return out;
}

inline ValidationReport validate_volcano(const VolcanoGraph& g, const VolcanoParams& p) {
    const size_t n = g.level.size();
    if (n == 0) throw InvalidInput("graph has no vertices");
    const uint32_t depth = g.depth();
    std::vector<uint64_t> sizes(static_cast<size_t>(depth) + 1, 0);
    for (uint32_t t : g.level) ++sizes[t];
    for (uint64_t s : sizes)
        if (s == 0) throw InvalidInput("level tags skip a level");
    if (!g.level_vectors.empty() && g.level_vectors.size() != n)
        throw InvalidInput("level vector count does not match the vertex count");

    ValidationReport rep;
    auto flag = [&](std::string msg) {
        rep.pass = false;
        rep.violations.push_back(std::move(msg));
    };

    std::vector<uint64_t> out_deg(n, 0), in_deg(n, 0);
    for (const auto& e : g.edges) {
        if (e.from >= n || e.to >= n) throw InvalidInput("edge endpoint out of range");
        ++out_deg[e.from];
        ++in_deg[e.to];
        const uint32_t lf = g.level[e.from], lt = g.level[e.to];
        if (lf == 0 && lt == 0) {
            if (e.kind != VolcanoGraph::EdgeKind::horizontal)
                flag("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                     ": crater edge tagged as ascending");
        } else if (lf >= 1 && lt + 1 == lf) {
            if (e.kind != VolcanoGraph::EdgeKind::ascending)
                flag("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                     ": ascending edge tagged as horizontal");
            if (!g.level_vectors.empty() &&
                g.level_vectors[e.to] != ascend_target(g.level_vectors[e.from]))
                flag("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                     ": ascend target mismatch");
        } else if (lt >= lf) {
            flag("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                 ": horizontal or descending edge below the crater");
        } else {
            flag("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                 ": edge skips a level");
        }
    }

    if (p.g1 > p.r) flag("crater out-degree " + std::to_string(p.g1) +
                         " exceeds the rank bound " + std::to_string(p.r));
    for (uint64_t v = 0; v < n; ++v) {
        if (g.level[v] == 0) {
            if (out_deg[v] != p.g1)
                flag("vertex " + std::to_string(v) + ": crater out-degree " +
                     std::to_string(out_deg[v]) + ", expected " + std::to_string(p.g1));
            const uint64_t want = depth >= 1 ? p.g1 + p.b : p.g1;
            if (in_deg[v] != want)
                flag("vertex " + std::to_string(v) + ": crater in-degree " +
                     std::to_string(in_deg[v]) + ", expected " + std::to_string(want));
        } else {
            if (out_deg[v] != 1)
                flag("vertex " + std::to_string(v) + ": out-degree " +
                     std::to_string(out_deg[v]) + " below the crater");
            const uint64_t want = g.level[v] < depth ? p.b : 0;
            if (in_deg[v] != want)
                flag("vertex " + std::to_string(v) + ": in-degree " +
                     std::to_string(in_deg[v]) + ", expected " + std::to_string(want));
        }
    }
    return rep;
}

struct VolcanoPreset {
    std::string name;
    uint64_t q = 0;
    uint32_t r = 0;
    uint32_t deg_l = 1;
    SplitData split;
    CraterSpec crater;
    uint64_t branching() const { return branching_factor(q, r, deg_l); }
};

inline VolcanoPreset volcano_preset(const std::string& name) {
    VolcanoPreset p;
    p.name = name;
    p.q = 5;
    p.r = 3;
    p.deg_l = 1;
    p.split = SplitData{1, {{1, 1}, {1, 2}}};
    if (name == "r3-cycle") {
        p.crater = CraterSpec{{6}, {{1}}};
    } else if (name == "r3-loop") {
        p.crater = CraterSpec{{}, {{}}};
    } else {
        throw InvalidInput("unknown preset " + name);
    }
    return p;
}

inline uint64_t count_affine_points(const FieldCtx* F, uint32_t r_exp, const APoly& f) {
    if (r_exp < 1) throw InvalidInput("exponent must be positive");
    if (F->q > 65536) throw TooLarge("field too large for point enumeration");
    std::vector<uint64_t> power_count(F->q, 0);
    for (uint32_t y = 0; y < F->q; ++y)
        ++power_count[FqElem(F, y).pow(r_exp).packed()];
    uint64_t total = 0;
    for (uint32_t x = 0; x < F->q; ++x)
        total += power_count[f.eval(FqElem(F, x)).packed()];
    return total;
}

} // namespace drmod
