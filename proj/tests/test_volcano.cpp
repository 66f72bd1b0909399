#include <catch2/catch_amalgamated.hpp>

#include "drmod/parse.hpp"
#include "drmod/volcano.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace drmod;

namespace {

std::vector<std::vector<uint32_t>> naive_types(uint32_t m, const SplitData& s) {
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> cur(s.ef.size(), 0);
    for (;;) {
        uint64_t sum = 0;
        for (size_t i = 0; i < cur.size(); ++i)
            sum += static_cast<uint64_t>(cur[i]) * s.ef[i].second;
        if (sum == m) out.push_back(cur);
        size_t i = cur.size();
        bool done = false;
        while (i-- > 0) {
            if (++cur[i] <= m) break;
            cur[i] = 0;
            if (i == 0) done = true;
        }
        if (done) return out;
    }
}

VolcanoGraph mutate(const VolcanoGraph& g, std::mt19937_64& rng) {
    VolcanoGraph h = g;
    for (;;) {
        switch (rng() % 3) {
        case 0: {
            size_t k = rng() % h.edges.size();
            h.edges.erase(h.edges.begin() + static_cast<ptrdiff_t>(k));
            return h;
        }
        case 1: {
            uint64_t a = rng() % h.level.size(), b = rng() % h.level.size();
            auto kind = h.level[a] == h.level[b] ? VolcanoGraph::EdgeKind::horizontal
                                                 : VolcanoGraph::EdgeKind::ascending;
            h.edges.push_back({a, b, kind});
            return h;
        }
        default: {
            size_t v = rng() % h.level.size();
            uint32_t t = static_cast<uint32_t>(rng() % (g.depth() + 1));
            if (t == h.level[v]) continue;
            h.level[v] = t;
            return h;
        }
        }
    }
}

bool detected(const VolcanoGraph& h, const VolcanoParams& p) {
    try {
        return !validate_volcano(h, p).pass;
    } catch (const InvalidInput&) {
        return true;
    }
}

} // namespace

TEST_CASE("split data validation") {
    SplitData s{1, {{1, 1}, {1, 2}}};
    validate_split(s, 3);
    REQUIRE(s.g_split() == 2);
    REQUIRE(s.g1() == 1);
    REQUIRE(SplitData{1, {{1, 1}, {1, 1}, {1, 1}}}.g1() == 3);
    REQUIRE_THROWS_AS(validate_split(s, 4), InvalidInput);
    REQUIRE_THROWS_AS(validate_split(SplitData{1, {{0, 1}}}, 1), InvalidInput);
    REQUIRE_THROWS_AS(validate_split(SplitData{0, {{1, 1}}}, 1), InvalidInput);
    REQUIRE_THROWS_AS(validate_split(SplitData{1, {}}, 1), InvalidInput);
}

TEST_CASE("horizontal types solve the inertia-weighted composition") {
    SplitData s{1, {{1, 1}, {1, 2}}};

    auto t2 = horizontal_types(2, s);
    REQUIRE(t2.size() == 2);
    REQUIRE(t2[0] == HorizontalType{{0, 1}, true, {2}});
    REQUIRE(t2[1] == HorizontalType{{2, 0}, true, {2}});

    auto t1 = horizontal_types(1, s);
    REQUIRE(t1.size() == 1);
    REQUIRE(t1[0] == HorizontalType{{1, 0}, true, {1}});

    auto t3 = horizontal_types(3, s);
    REQUIRE(t3.size() == 2);
    REQUIRE(t3[0] == HorizontalType{{1, 1}, false, {2, 1}});
    REQUIRE(t3[1] == HorizontalType{{3, 0}, true, {3}});

    SplitData ts{1, {{1, 1}, {1, 1}, {1, 1}}};
    auto t = horizontal_types(2, ts);
    REQUIRE(t.size() == 6);
    uint32_t cyclic = 0;
    for (const auto& ht : t) cyclic += ht.cyclic ? 1 : 0;
    REQUIRE(cyclic == 3);
    REQUIRE(std::count(t.begin(), t.end(), HorizontalType{{1, 1, 0}, false, {1, 1}}) == 1);
    REQUIRE(std::count(t.begin(), t.end(), HorizontalType{{0, 2, 0}, true, {2}}) == 1);

    REQUIRE_THROWS_AS(horizontal_types(0, s), InvalidInput);
}

TEST_CASE("horizontal types agree with naive enumeration") {
    for (const SplitData& s : {SplitData{1, {{1, 1}, {1, 2}}},
                               SplitData{1, {{1, 1}, {1, 1}, {1, 1}}},
                               SplitData{2, {{2, 1}, {1, 2}}}}) {
        for (uint32_t m = 1; m <= 4; ++m) {
            auto fast = horizontal_types(m, s);
            std::vector<std::vector<uint32_t>> got;
            for (const auto& t : fast) {
                got.push_back(t.m);
                if (t.cyclic) {
                    size_t support = 0;
                    for (size_t i = 0; i < t.m.size(); ++i)
                        if (t.m[i] > 0) {
                            support = i;
                            REQUIRE(m % s.ef[i].second == 0);
                        }
                    REQUIRE(t.kernel ==
                            std::vector<uint32_t>{s.ef[support].second * t.m[support]});
                }
            }
            auto want = naive_types(m, s);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            REQUIRE(got == want);
        }
    }
}

TEST_CASE("types supported on an inert prime need even length") {
    SplitData s{1, {{1, 1}, {1, 2}}};
    for (uint32_t m = 1; m <= 8; ++m) {
        bool found = false;
        for (const auto& t : horizontal_types(m, s))
            if (t.m[0] == 0 && t.m[1] > 0) found = true;
        REQUIRE(found == (m % 2 == 0));
    }
}

TEST_CASE("branching factors") {
    REQUIRE(branching_factor(5, 3, 1) == 25);
    REQUIRE(branching_factor(7, 2, 3) == 343);
    REQUIRE(branching_factor(3, 4, 2) == 729);
    REQUIRE(branching_factor(5, 1, 4) == 1);
    REQUIRE_THROWS_AS(branching_factor(2, 66, 1), TooLarge);
    REQUIRE_THROWS_AS(branching_factor(1, 2, 1), InvalidInput);
}

TEST_CASE("crater graphs are Cayley graphs of the class group") {
    VolcanoGraph six = crater_graph(CraterSpec{{6}, {{1}}});
    REQUIRE(six.level.size() == 6);
    REQUIRE(six.edges.size() == 6);
    uint64_t v = 0;
    for (int i = 0; i < 6; ++i) {
        REQUIRE(six.edges[v].from == v);
        uint64_t w = six.edges[v].to;
        REQUIRE(w == (v + 1) % 6);
        v = w;
    }
    REQUIRE(v == 0);

    VolcanoGraph loop = crater_graph(CraterSpec{{}, {{}}});
    REQUIRE(loop.level.size() == 1);
    REQUIRE(loop.edges.size() == 1);
    REQUIRE(loop.edges[0] == VolcanoGraph::Edge{0, 0, VolcanoGraph::EdgeKind::horizontal});

    VolcanoGraph klein = crater_graph(CraterSpec{{2, 2}, {{1, 0}, {0, 1}}});
    REQUIRE(klein.level.size() == 4);
    REQUIRE(klein.edges.size() == 8);
    std::vector<uint64_t> out(4, 0), in(4, 0);
    for (const auto& e : klein.edges) {
        REQUIRE(e.from != e.to);
        ++out[e.from];
        ++in[e.to];
    }
    for (int i = 0; i < 4; ++i) {
        REQUIRE(out[i] == 2);
        REQUIRE(in[i] == 2);
    }

    VolcanoGraph null = crater_graph(CraterSpec{{3}, {{0}}});
    for (const auto& e : null.edges) REQUIRE(e.from == e.to);

    VolcanoGraph third = crater_graph(CraterSpec{{6}, {{2}}});
    for (uint64_t start = 0; start < 6; ++start) {
        uint64_t w = start;
        for (int hops = 0; hops < 3; ++hops) {
            REQUIRE(third.edges[w].from == w);
            w = third.edges[w].to;
            if (hops < 2) REQUIRE(w != start);
        }
        REQUIRE(w == start);
    }

    REQUIRE_THROWS_AS(crater_graph(CraterSpec{{6}, {{7}}}), InvalidInput);
    REQUIRE_THROWS_AS(crater_graph(CraterSpec{{6}, {{1, 0}}}), InvalidInput);
    REQUIRE_THROWS_AS(crater_graph(CraterSpec{{0}, {{0}}}), InvalidInput);
    REQUIRE_THROWS_AS(crater_graph(CraterSpec{{6}, {}}), InvalidInput);
}

TEST_CASE("volcano generation matches the preset shapes") {
    VolcanoPreset cyc = volcano_preset("r3-cycle");
    REQUIRE(cyc.branching() == 25);
    validate_split(cyc.split, cyc.r);
    REQUIRE(cyc.split.g1() == 1);
    VolcanoGraph g = build_volcano(cyc.crater, cyc.branching(), 2);
    REQUIRE(g.level_sizes() == std::vector<uint64_t>{6, 150, 3750});
    ValidationReport rep = validate_volcano(g, {cyc.r, cyc.split.g1(), cyc.branching()});
    REQUIRE(rep.pass);
    REQUIRE(rep.violations.empty());

    VolcanoPreset lp = volcano_preset("r3-loop");
    VolcanoGraph h = build_volcano(lp.crater, lp.branching(), 1);
    REQUIRE(h.level_sizes() == std::vector<uint64_t>{1, 25});
    REQUIRE(validate_volcano(h, {lp.r, lp.split.g1(), lp.branching()}).pass);

    VolcanoGraph crater_only = build_volcano(cyc.crater, cyc.branching(), 0);
    REQUIRE(crater_only.level_sizes() == std::vector<uint64_t>{6});
    REQUIRE(validate_volcano(crater_only, {cyc.r, 1, 25}).pass);

    VolcanoGraph thin = build_volcano(CraterSpec{{2, 2}, {{1, 0}, {0, 1}}}, 1, 3);
    REQUIRE(thin.level_sizes() == std::vector<uint64_t>{4, 4, 4, 4});
    REQUIRE(validate_volcano(thin, {3, 2, 1}).pass);

    REQUIRE_THROWS_AS(volcano_preset("r4-cycle"), InvalidInput);
    REQUIRE_THROWS_AS(build_volcano(cyc.crater, 25, 5), TooLarge);
    REQUIRE_THROWS_AS(build_volcano(cyc.crater, 0, 1), InvalidInput);
}

TEST_CASE("validator flags structural defects") {
    VolcanoPreset cyc = volcano_preset("r3-cycle");
    VolcanoGraph g = build_volcano(cyc.crater, 25, 1);
    VolcanoParams p{3, 1, 25};
    REQUIRE(validate_volcano(g, p).pass);

    VolcanoGraph broken = g;
    size_t ascending = 0;
    while (broken.edges[ascending].kind != VolcanoGraph::EdgeKind::ascending) ++ascending;
    broken.edges.erase(broken.edges.begin() + static_cast<ptrdiff_t>(ascending));
    ValidationReport rep = validate_volcano(broken, p);
    REQUIRE_FALSE(rep.pass);
    bool saw = false;
    for (const auto& msg : rep.violations)
        saw = saw || msg.find("out-degree 0") != std::string::npos;
    REQUIRE(saw);

    broken = g;
    broken.edges.erase(broken.edges.begin());
    REQUIRE_FALSE(validate_volcano(broken, p).pass);

    VolcanoGraph klein = crater_graph(CraterSpec{{2, 2}, {{1, 0}, {0, 1}}});
    REQUIRE_FALSE(validate_volcano(klein, {1, 2, 1}).pass);

    VolcanoGraph retag = g;
    retag.level[retag.level.size() - 1] = 0;
    REQUIRE(detected(retag, p));
}

TEST_CASE("random single mutations are always detected") {
    VolcanoPreset cyc = volcano_preset("r3-cycle");
    VolcanoGraph g = build_volcano(cyc.crater, 25, 2);
    VolcanoParams p{3, 1, 25};
    REQUIRE(validate_volcano(g, p).pass);
    std::mt19937_64 rng(0x5eed06);
    uint32_t caught = 0;
    for (int trial = 0; trial < 100; ++trial)
        caught += detected(mutate(g, rng), p) ? 1 : 0;
    REQUIRE(caught == 100);
}

TEST_CASE("ascend targets clamp componentwise") {
    REQUIRE(ascend_target({3, 1}) == std::vector<uint32_t>{2, 0});
    REQUIRE(ascend_target({0, 0}) == std::vector<uint32_t>{0, 0});
    REQUIRE(ascend_target({2, 0, 5}) == std::vector<uint32_t>{1, 0, 4});
}

TEST_CASE("level vectors are checked along ascending edges") {
    VolcanoPreset lp = volcano_preset("r3-loop");
    VolcanoGraph g = build_volcano(lp.crater, 2, 1);
    VolcanoParams p{3, 1, 2};
    g.level_vectors = {{0, 0}, {1, 0}, {1, 0}};
    REQUIRE(validate_volcano(g, p).pass);

    g.level_vectors[1] = {2, 0};
    ValidationReport rep = validate_volcano(g, p);
    REQUIRE_FALSE(rep.pass);
    bool saw = false;
    for (const auto& msg : rep.violations)
        saw = saw || msg.find("ascend target") != std::string::npos;
    REQUIRE(saw);

    g.level_vectors.pop_back();
    REQUIRE_THROWS_AS(validate_volcano(g, p), InvalidInput);
}

TEST_CASE("affine point counts by brute force") {
    const FieldCtx* F5 = FieldCtx::get(5, 1);
    REQUIRE(count_affine_points(F5, 3, parse_apoly(F5, "T^3 + T + 1")) == 5);
    REQUIRE(count_affine_points(F5, 3, parse_apoly(F5, "T + 1")) == 5);
    REQUIRE(count_affine_points(F5, 3, APoly()) == 5);
    REQUIRE(count_affine_points(F5, 3, parse_apoly(F5, "2")) == 5);
    REQUIRE(count_affine_points(F5, 2, parse_apoly(F5, "T")) == 5);
    REQUIRE(count_affine_points(F5, 4, parse_apoly(F5, "T")) == 5);
    REQUIRE(count_affine_points(F5, 1, parse_apoly(F5, "T^2")) == 5);

    const FieldCtx* F4 = FieldCtx::get(2, 2);
    REQUIRE(count_affine_points(F4, 3, parse_apoly(F4, "T")) == 4);

    const FieldCtx* F3 = FieldCtx::get(3, 1);
    REQUIRE(count_affine_points(F3, 2, parse_apoly(F3, "T")) == 3);
    REQUIRE_THROWS_AS(count_affine_points(F3, 0, parse_apoly(F3, "T")), InvalidInput);
}
