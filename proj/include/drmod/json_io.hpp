#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "drmod/errors.hpp"
#include "drmod/fq.hpp"
#include "drmod/mpoly.hpp"
#include "drmod/orders.hpp"
#include "drmod/skew.hpp"
#include "drmod/upoly.hpp"
#include "drmod/volcano.hpp"

namespace drmod {

// Canonical JSON for every artifact the tooling exchanges.  Writers emit
// keys in a fixed order and terms in the graded-lex order the polynomial
// map already maintains, so serializing the same value twice gives the
// same bytes.  Parsers re-canonicalize, which makes the round trip
// value-exact rather than merely byte-exact.
using Json = nlohmann::ordered_json;

inline Json json_parse(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidInput("malformed JSON");
    return j;
}

namespace detail {

inline const Json& json_get(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InvalidInput(std::string("missing JSON key \"") + key + "\"");
    return j[key];
}

inline uint64_t json_uint(const Json& j, const char* what) {
    if (!j.is_number_unsigned())
        throw InvalidInput(std::string(what) + " must be a nonnegative integer");
    return j.get<uint64_t>();
}

inline std::vector<uint32_t> json_u32_list(const Json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array");
    std::vector<uint32_t> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(static_cast<uint32_t>(json_uint(x, what)));
    return out;
}

} // namespace detail

inline Json field_to_json(const FieldCtx* F) {
    Json j;
    j["p"] = F->p;
    j["e"] = F->e;
    j["modulus"] = F->modulus;
    return j;
}

inline const FieldCtx* field_from_json(const Json& j) {
    uint32_t p = static_cast<uint32_t>(detail::json_uint(detail::json_get(j, "p"), "p"));
    uint32_t e = static_cast<uint32_t>(detail::json_uint(detail::json_get(j, "e"), "e"));
    auto mod = detail::json_u32_list(detail::json_get(j, "modulus"), "modulus");
    return FieldCtx::get(p, e, std::move(mod));
}

namespace detail {

// The shared term-array encoding: one object per nonzero term, "c" the
// base-p digit vector of the coefficient, "e" the exponent vector
// aligned with the ring's variable list.
inline Json terms_to_json(const MPoly& f) {
    Json arr = Json::array();
    for (const auto& [exps, c] : f.terms()) {
        Json t;
        t["c"] = c.coeffs();
        t["e"] = exps;
        arr.push_back(std::move(t));
    }
    return arr;
}

inline MPoly terms_from_json(const RingPtr& ring, const Json& arr) {
    if (!arr.is_array()) throw InvalidInput("\"terms\" must be an array");
    MPoly f = MPoly::zero(ring);
    size_t nv = ring->vars.size();
    for (const auto& t : arr) {
        auto digits = json_u32_list(json_get(t, "c"), "coefficient");
        const Json& je = json_get(t, "e");
        if (!je.is_array() || je.size() != nv)
            throw InvalidInput("exponent vector does not match the variable list");
        Exps e;
        e.reserve(nv);
        for (const auto& x : je) e.push_back(json_uint(x, "exponent"));
        FqElem c = FqElem::from_coeffs(ring->field, digits);
        if (c.is_zero()) throw InvalidInput("explicit zero term");
        f = f + MPoly::monomial(ring, std::move(e), c);
    }
    return f;
}

inline std::vector<std::string> json_vars(const Json& j) {
    const Json& jv = json_get(j, "vars");
    if (!jv.is_array()) throw InvalidInput("\"vars\" must be an array");
    std::vector<std::string> vars;
    for (const auto& v : jv) {
        if (!v.is_string()) throw InvalidInput("variable names must be strings");
        vars.push_back(v.get<std::string>());
    }
    return vars;
}

} // namespace detail

inline Json mpoly_to_json(const MPoly& f) {
    Json j;
    j["field"] = field_to_json(f.ring()->field);
    j["vars"] = f.ring()->vars;
    j["terms"] = detail::terms_to_json(f);
    return j;
}

inline MPoly mpoly_from_json(const Json& j) {
    const FieldCtx* F = field_from_json(detail::json_get(j, "field"));
    RingPtr ring = make_ring(F, detail::json_vars(j));
    return detail::terms_from_json(ring, detail::json_get(j, "terms"));
}

// Elements of A = F_q[T] travel as single-variable polynomial JSON.
inline Json apoly_to_json(const FieldCtx* F, const APoly& a) {
    Json j;
    j["field"] = field_to_json(F);
    j["vars"] = Json::array({"T"});
    Json arr = Json::array();
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        const FqElem& c = a.coeffs()[i];
        if (c.is_zero()) continue;
        Json t;
        t["c"] = c.coeffs();
        t["e"] = Json::array({i});
        arr.push_back(std::move(t));
    }
    j["terms"] = std::move(arr);
    return j;
}

inline std::pair<const FieldCtx*, APoly> apoly_from_json(const Json& j) {
    const FieldCtx* F = field_from_json(detail::json_get(j, "field"));
    auto vars = detail::json_vars(j);
    if (vars.size() != 1)
        throw InvalidInput("expected a polynomial in the single variable T");
    const Json& arr = detail::json_get(j, "terms");
    if (!arr.is_array()) throw InvalidInput("\"terms\" must be an array");
    std::vector<FqElem> c;
    for (const auto& t : arr) {
        auto digits = detail::json_u32_list(detail::json_get(t, "c"), "coefficient");
        const Json& je = detail::json_get(t, "e");
        if (!je.is_array() || je.size() != 1)
            throw InvalidInput("exponent vector does not match the variable list");
        size_t k = static_cast<size_t>(detail::json_uint(je[0], "exponent"));
        if (c.size() <= k) c.resize(k + 1, FqElem::zero(F));
        c[k] = FqElem::from_coeffs(F, digits);
    }
    return {F, APoly(std::move(c))};
}

// Twisted polynomials reuse the term encoding with "tau_degs" in place of
// the exponent vector; each coefficient is itself a term array over the
// declared variable list.
inline Json skew_to_json(const RingPtr& ring, const SkewPoly<MPoly>& f) {
    Json j;
    j["field"] = field_to_json(ring->field);
    j["vars"] = ring->vars;
    Json arr = Json::array();
    for (size_t k = 0; k < f.coeffs().size(); ++k) {
        if (f.coeffs()[k].is_zero()) continue;
        Json t;
        t["c"] = detail::terms_to_json(f.coeffs()[k]);
        t["tau_degs"] = Json::array({k});
        arr.push_back(std::move(t));
    }
    j["terms"] = std::move(arr);
    return j;
}

inline std::pair<RingPtr, SkewPoly<MPoly>> skew_from_json(const Json& j) {
    const FieldCtx* F = field_from_json(detail::json_get(j, "field"));
    RingPtr ring = make_ring(F, detail::json_vars(j));
    const Json& arr = detail::json_get(j, "terms");
    if (!arr.is_array()) throw InvalidInput("\"terms\" must be an array");
    std::vector<MPoly> c;
    for (const auto& t : arr) {
        const Json& jk = detail::json_get(t, "tau_degs");
        if (!jk.is_array() || jk.size() != 1)
            throw InvalidInput("\"tau_degs\" must hold a single degree");
        size_t k = static_cast<size_t>(detail::json_uint(jk[0], "tau degree"));
        if (c.size() <= k) c.resize(k + 1, MPoly::zero(ring));
        c[k] = detail::terms_from_json(ring, detail::json_get(t, "c"));
    }
    return {ring, SkewPoly<MPoly>(std::move(c))};
}

inline Json order_to_json(const OrderSpec& o) {
    Json j;
    j["minpoly"] = mpoly_to_json(o.minpoly());
    Json rows = Json::array();
    for (const auto& row : o.basis()) {
        Json r = Json::array();
        for (const APoly& x : row) r.push_back(apoly_to_json(o.field(), x));
        rows.push_back(std::move(r));
    }
    j["basis"] = std::move(rows);
    j["imaginary"] = o.imaginary();
    return j;
}

inline OrderSpec order_from_json(const Json& j) {
    MPoly m = mpoly_from_json(detail::json_get(j, "minpoly"));
    const Json& rows = detail::json_get(j, "basis");
    if (!rows.is_array() || rows.empty()) throw InvalidInput("\"basis\" must be a nonempty array");
    AMat basis;
    for (const auto& r : rows) {
        if (!r.is_array()) throw InvalidInput("basis rows must be arrays");
        std::vector<APoly> row;
        for (const auto& x : r) {
            auto [f, a] = apoly_from_json(x);
            if (f != m.ring()->field) throw ContextMismatch("basis entry from a different field");
            row.push_back(std::move(a));
        }
        basis.push_back(std::move(row));
    }
    const Json& im = detail::json_get(j, "imaginary");
    if (!im.is_boolean()) throw InvalidInput("\"imaginary\" must be a boolean");
    const FieldCtx* F = m.ring()->field;
    return OrderSpec(F, std::move(m), std::move(basis), im.get<bool>());
}

// Ideal generators: rows of order coordinates, one row per generator.
inline Json ideal_gens_to_json(const FieldCtx* F, const AMat& gens) {
    Json j;
    Json rows = Json::array();
    for (const auto& row : gens) {
        Json r = Json::array();
        for (const APoly& x : row) r.push_back(apoly_to_json(F, x));
        rows.push_back(std::move(r));
    }
    j["gens"] = std::move(rows);
    return j;
}

inline std::pair<const FieldCtx*, AMat> ideal_gens_from_json(const Json& j) {
    const Json& rows = detail::json_get(j, "gens");
    if (!rows.is_array() || rows.empty()) throw InvalidInput("\"gens\" must be a nonempty array");
    const FieldCtx* F = nullptr;
    AMat gens;
    for (const auto& r : rows) {
        if (!r.is_array()) throw InvalidInput("generator rows must be arrays");
        std::vector<APoly> row;
        for (const auto& x : r) {
            auto [f, a] = apoly_from_json(x);
            if (F == nullptr) F = f;
            if (f != F) throw ContextMismatch("generator entry from a different field");
            row.push_back(std::move(a));
        }
        gens.push_back(std::move(row));
    }
    return {F, std::move(gens)};
}

// Vertices carry their level as an array: the level vector when one is
// attached, the singleton uniform level otherwise.  A vertex's scalar
// level must equal the maximum of its vector for the encoding to be
// invertible, which is how the generator lays levels out.
inline Json graph_to_json(const VolcanoGraph& g) {
    size_t n = g.level.size();
    if (!g.level_vectors.empty() && g.level_vectors.size() != n)
        throw InvalidInput("level vector count does not match the vertex count");
    Json j;
    Json verts = Json::array();
    for (size_t v = 0; v < n; ++v) {
        Json jv;
        jv["id"] = v;
        if (g.level_vectors.empty()) {
            jv["level"] = Json::array({g.level[v]});
        } else {
            const auto& lv = g.level_vectors[v];
            if (lv.empty()) throw InvalidInput("empty level vector");
            uint32_t top = 0;
            for (uint32_t t : lv) top = std::max(top, t);
            if (top != g.level[v])
                throw InvalidInput("level vector inconsistent with the vertex level");
            jv["level"] = lv;
        }
        verts.push_back(std::move(jv));
    }
    j["vertices"] = std::move(verts);
    Json edges = Json::array();
    for (const auto& e : g.edges) {
        Json je;
        je["src"] = e.from;
        je["dst"] = e.to;
        je["kind"] = e.kind == VolcanoGraph::EdgeKind::horizontal ? "horizontal" : "ascending";
        edges.push_back(std::move(je));
    }
    j["edges"] = std::move(edges);
    return j;
}

inline VolcanoGraph graph_from_json(const Json& j) {
    const Json& verts = detail::json_get(j, "vertices");
    if (!verts.is_array()) throw InvalidInput("\"vertices\" must be an array");
    VolcanoGraph g;
    std::vector<std::vector<uint32_t>> vectors;
    bool any_tuple = false;
    size_t expect = 0;
    for (const auto& jv : verts) {
        uint64_t id = detail::json_uint(detail::json_get(jv, "id"), "vertex id");
        if (id != g.level.size()) throw InvalidInput("vertex ids must be 0,1,... in order");
        auto lv = detail::json_u32_list(detail::json_get(jv, "level"), "level");
        if (lv.empty()) throw InvalidInput("empty level vector");
        if (g.level.empty()) expect = lv.size();
        if (lv.size() != expect) throw InvalidInput("level vectors of mixed lengths");
        if (lv.size() > 1) any_tuple = true;
        uint32_t top = 0;
        for (uint32_t t : lv) top = std::max(top, t);
        g.level.push_back(top);
        vectors.push_back(std::move(lv));
    }
    if (any_tuple) g.level_vectors = std::move(vectors);
    const Json& edges = detail::json_get(j, "edges");
    if (!edges.is_array()) throw InvalidInput("\"edges\" must be an array");
    for (const auto& je : edges) {
        VolcanoGraph::Edge e;
        e.from = detail::json_uint(detail::json_get(je, "src"), "edge endpoint");
        e.to = detail::json_uint(detail::json_get(je, "dst"), "edge endpoint");
        const Json& kind = detail::json_get(je, "kind");
        if (!kind.is_string()) throw InvalidInput("edge kind must be a string");
        std::string k = kind.get<std::string>();
        if (k == "horizontal") e.kind = VolcanoGraph::EdgeKind::horizontal;
        else if (k == "ascending") e.kind = VolcanoGraph::EdgeKind::ascending;
        else throw InvalidInput("unknown edge kind \"" + k + "\"");
        if (e.from >= g.level.size() || e.to >= g.level.size())
            throw InvalidInput("edge endpoint out of range");
        g.edges.push_back(e);
    }
    return g;
}

// One cluster per level, vertices in id order, then every edge with its
// kind attribute.  Output is line-oriented and fully deterministic.
inline std::string graph_to_dot(const VolcanoGraph& g) {
    std::string out = "digraph volcano {\n";
    uint32_t depth = g.depth();
    for (uint32_t t = 0; t <= depth; ++t) {
        out += "  subgraph cluster_" + std::to_string(t) + " {\n";
        out += "    label=\"level " + std::to_string(t) + "\";\n";
        for (size_t v = 0; v < g.level.size(); ++v)
            if (g.level[v] == t) out += "    v" + std::to_string(v) + ";\n";
        out += "  }\n";
    }
    for (const auto& e : g.edges) {
        out += "  v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) + " [kind=" +
               (e.kind == VolcanoGraph::EdgeKind::horizontal ? "horizontal" : "ascending") +
               "];\n";
    }
    out += "}\n";
    return out;
}

} // namespace drmod
