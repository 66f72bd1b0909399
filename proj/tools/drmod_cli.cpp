#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "drmod/drinfeld.hpp"
#include "drmod/json_io.hpp"
#include "drmod/level2.hpp"
#include "drmod/parse.hpp"
#include "drmod/selfisog.hpp"
#include "drmod/symsys.hpp"

namespace {

using namespace drmod;

struct OutputCfg {
    std::string format = "json";
    std::string path;
};

void emit(const OutputCfg& cfg, const std::string& bytes) {
    if (cfg.path.empty()) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(cfg.path, std::ios::binary);
    if (!out) throw InvalidInput("cannot open output file " + cfg.path);
    out << bytes;
}

std::string json_bytes(const Json& j) { return j.dump() + "\n"; }

void require_json_or_text(const OutputCfg& cfg) {
    if (cfg.format == "dot")
        throw CLI::ValidationError("--format dot is only available for volcano graphs");
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

uint64_t parse_u64(const std::string& tok, const char* what) {
    size_t used = 0;
    uint64_t v = 0;
    try {
        v = std::stoull(tok, &used);
    } catch (const std::exception&) {
        throw InvalidInput(std::string("expected a number for ") + what);
    }
    if (used != tok.size() || tok.empty() || tok[0] == '-')
        throw InvalidInput(std::string("expected a number for ") + what);
    return v;
}

std::vector<uint64_t> parse_u64_list(const std::string& text, const char* what) {
    std::vector<uint64_t> out;
    size_t pos = 0;
    while (true) {
        size_t next = text.find(',', pos);
        out.push_back(parse_u64(text.substr(pos, next - pos), what));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

const FieldCtx* field_for(uint64_t q) {
    if (q < 2) throw InvalidInput("q must be a prime power");
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    uint32_t e = 0;
    uint64_t m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1) throw InvalidInput("q = " + std::to_string(q) + " is not a prime power");
    return FieldCtx::get(static_cast<uint32_t>(p), e);
}

// Field elements on the command line are base-p digit lists, least
// significant first; a bare digit covers the prime-field case.
FqElem parse_fq(const FieldCtx* F, const std::string& text) {
    std::vector<uint32_t> digits;
    size_t pos = 0;
    while (true) {
        size_t next = text.find(',', pos);
        digits.push_back(
            static_cast<uint32_t>(parse_u64(text.substr(pos, next - pos), "field element digit")));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (digits.size() > F->e) throw InvalidInput("too many digits for this field");
    for (uint32_t d : digits)
        if (d >= F->p) throw InvalidInput("digit out of range for characteristic " +
                                          std::to_string(F->p));
    digits.resize(F->e, 0);
    return FqElem::from_coeffs(F, digits);
}

// Integer-coefficient polynomials in T, for the commands that keep q
// symbolic.  Same shape the field-aware parser accepts: terms joined by
// + or -, each an optional coefficient times an optional power of T.
std::vector<int64_t> parse_int_poly(const std::string& in) {
    std::string s;
    for (char ch : in)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw InvalidInput("empty polynomial");
    std::vector<int64_t> c;
    size_t i = 0;
    while (i < s.size()) {
        int64_t sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i > 0) {
            throw InvalidInput("expected + or - between terms");
        }
        int64_t coef = 1;
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            coef = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                coef = coef * 10 + (s[i] - '0');
                ++i;
            }
            have_coef = true;
        }
        uint64_t k = 0;
        if (i < s.size() && (s[i] == '*' || s[i] == 'T')) {
            if (s[i] == '*') {
                ++i;
                if (i >= s.size() || s[i] != 'T') throw InvalidInput("expected T after *");
            }
            ++i;
            k = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                    throw InvalidInput("expected an exponent after ^");
                k = 0;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                    k = k * 10 + (s[i] - '0');
                    ++i;
                }
            }
        } else if (!have_coef) {
            throw InvalidInput("unexpected character in polynomial");
        }
        if (k > 64) throw InvalidInput("exponent too large");
        if (c.size() <= k) c.resize(k + 1, 0);
        c[k] += sign * coef;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) throw InvalidInput("a must be nonzero");
    return c;
}

std::string fq_text(const FqElem& x) {
    auto d = x.coeffs();
    std::string s;
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(d[i]);
    }
    return s;
}

void run_jinv(const OutputCfg& out, uint64_t q, uint32_t r) {
    require_json_or_text(out);
    field_for(q);
    auto tuples = enumerate_basic_j(q, r);
    if (out.format == "text") {
        std::string s;
        for (const JTuple& jt : tuples) {
            for (size_t i = 0; i < jt.delta.size(); ++i)
                s += (i ? "," : "") + std::to_string(jt.delta[i]);
            s += '\n';
        }
        emit(out, s);
        return;
    }
    Json j;
    j["q"] = q;
    j["r"] = r;
    Json arr = Json::array();
    for (const JTuple& jt : tuples) arr.push_back(jt.delta);
    j["tuples"] = std::move(arr);
    emit(out, json_bytes(j));
}

void run_selfisog_t(const OutputCfg& out, uint64_t q, uint32_t r, const std::string& j_text,
                    const std::string& delta_text, bool emit_g) {
    require_json_or_text(out);
    const FieldCtx* F = field_for(q);
    JTuple jt = j_text.empty() ? default_jtuple(q, r) : JTuple{q, r, parse_u64_list(j_text, "--j")};
    std::optional<FqElem> only;
    if (delta_text != "all") only = parse_fq(F, delta_text);
    PhiSelf res = phi_self_T(F, r, jt, only);
    if (out.format == "text") {
        std::string s = "Phi = " + res.phi.to_string() + "\n";
        if (emit_g)
            for (size_t i = 0; i < res.deltas.size(); ++i)
                s += "g[delta=" + fq_text(res.deltas[i]) + "] = " +
                     res.data[i].g_poly->to_string() + "\n";
        emit(out, s);
        return;
    }
    Json j;
    j["q"] = q;
    j["r"] = r;
    j["j"] = jt.delta;
    j["phi"] = mpoly_to_json(res.phi);
    if (emit_g) {
        Json arr = Json::array();
        for (size_t i = 0; i < res.deltas.size(); ++i) {
            Json entry;
            entry["delta"] = res.deltas[i].coeffs();
            entry["g"] = mpoly_to_json(*res.data[i].g_poly);
            arr.push_back(std::move(entry));
        }
        j["g"] = std::move(arr);
    }
    emit(out, json_bytes(j));
}

void run_bound(const OutputCfg& out, const std::string& which, uint64_t q, bool force) {
    require_json_or_text(out);
    mpz_class v = which == "pairs" ? bound_pairs(q, force) : bound_Nq(q, force);
    emit(out, v.get_str() + "\n");
}

void run_phi_a(const OutputCfg& out, const std::string& q_text, uint32_t r,
               const std::string& a_text, bool symbolic, uint32_t dual_degree) {
    require_json_or_text(out);
    if (symbolic) {
        auto coeffs = parse_int_poly(a_text);
        std::vector<EqChain<SymPoly>> eqs;
        if (dual_degree > 0)
            eqs = commutation_system_sym(r, dual_degree, coeffs);
        else if (coeffs.size() == 2)
            eqs = commutation_system_sym(r, 1, coeffs);
        else
            eqs = lift_system_sym(r, coeffs);
        if (out.format == "text") {
            std::string s;
            for (const auto& eq : eqs) s += render_chain(eq) + "\n";
            emit(out, s);
            return;
        }
        Json j;
        Json arr = Json::array();
        for (const auto& eq : eqs) arr.push_back(render_chain(eq));
        j["equations"] = std::move(arr);
        emit(out, json_bytes(j));
        return;
    }
    if (dual_degree > 0)
        throw CLI::ValidationError("--dual-degree requires --symbolic");
    if (q_text == "any")
        throw CLI::ValidationError("--q any requires --symbolic");
    const FieldCtx* F = field_for(parse_u64(q_text, "--q"));
    if (r < 1) throw InvalidInput("rank must be at least 1");
    APoly a = parse_apoly(F, a_text);
    std::vector<std::string> vars{"T"};
    for (uint32_t i = 1; i <= r; ++i) vars.push_back("g" + std::to_string(i));
    RingPtr ring = make_ring(F, vars);
    std::vector<MPoly> pc;
    pc.push_back(MPoly::variable(ring, "T"));
    for (uint32_t i = 1; i <= r; ++i) pc.push_back(MPoly::variable(ring, "g" + std::to_string(i)));
    DrinfeldModule<MPoly> phi(SkewPoly<MPoly>(std::move(pc)));
    SkewPoly<MPoly> psi = drinfeld_image(phi, a);
    if (out.format == "text") {
        std::string s;
        for (size_t k = 0; k < psi.coeffs().size(); ++k) {
            if (psi.coeffs()[k].is_zero()) continue;
            s += "tau^" + std::to_string(k) + ": " + psi.coeffs()[k].to_string() + "\n";
        }
        emit(out, s);
        return;
    }
    emit(out, json_bytes(skew_to_json(ring, psi)));
}

void run_gamma(const OutputCfg& out, const std::string& order_path, const std::string& a_text,
               std::optional<uint32_t> bound, bool certified) {
    require_json_or_text(out);
    OrderSpec o = order_from_json(json_parse(slurp(order_path)));
    APoly a = parse_apoly(o.field(), a_text);
    GammaResult res = gamma_count(o, a, bound, certified);
    if (out.format == "text") {
        std::string s = "count = " + std::to_string(res.count) +
                        (res.exact ? " (exact)\n" : " (lower bound)\n");
        for (const auto& w : res.witnesses) {
            s += "(";
            for (size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + w[i].to_string("T");
            s += ")\n";
        }
        emit(out, s);
        return;
    }
    Json j;
    j["count"] = res.count;
    j["exact"] = res.exact;
    Json arr = Json::array();
    for (const auto& w : res.witnesses) {
        Json row = Json::array();
        for (const APoly& x : w) row.push_back(apoly_to_json(o.field(), x));
        arr.push_back(std::move(row));
    }
    j["witnesses"] = std::move(arr);
    emit(out, json_bytes(j));
}

void run_fitnorm(const OutputCfg& out, const std::string& order_path,
                 const std::string& ideal_path) {
    require_json_or_text(out);
    OrderSpec o = order_from_json(json_parse(slurp(order_path)));
    auto [f, gens] = ideal_gens_from_json(json_parse(slurp(ideal_path)));
    if (f != o.field()) throw ContextMismatch("ideal generators from a different field");
    IdealPresentation ideal(&o, gens);
    APoly n = fitting_norm(ideal);
    if (out.format == "text") {
        emit(out, n.to_string("T") + "\n");
        return;
    }
    emit(out, json_bytes(apoly_to_json(o.field(), n)));
}

void emit_graph(const OutputCfg& out, const VolcanoGraph& g) {
    if (out.format == "dot") {
        emit(out, graph_to_dot(g));
        return;
    }
    if (out.format == "text") {
        std::string s;
        for (size_t v = 0; v < g.level.size(); ++v) {
            s += "v" + std::to_string(v) + " level ";
            if (g.level_vectors.empty()) {
                s += std::to_string(g.level[v]);
            } else {
                for (size_t i = 0; i < g.level_vectors[v].size(); ++i)
                    s += (i ? "," : "") + std::to_string(g.level_vectors[v][i]);
            }
            s += '\n';
        }
        for (const auto& e : g.edges)
            s += "v" + std::to_string(e.from) + " -> v" + std::to_string(e.to) +
                 (e.kind == VolcanoGraph::EdgeKind::horizontal ? " horizontal\n" : " ascending\n");
        emit(out, s);
        return;
    }
    emit(out, json_bytes(graph_to_json(g)));
}

CraterSpec parse_crater(const std::string& group, const std::string& images) {
    CraterSpec spec;
    if (!group.empty()) spec.invariants = parse_u64_list(group, "--group");
    size_t pos = 0;
    while (true) {
        size_t next = images.find(';', pos);
        std::string tuple = images.substr(pos, next == std::string::npos ? std::string::npos
                                                                         : next - pos);
        std::vector<uint64_t> img;
        if (!tuple.empty()) img = parse_u64_list(tuple, "--images");
        spec.images.push_back(std::move(img));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return spec;
}

void run_volcano_validate(const OutputCfg& out, const std::string& path, uint32_t r, uint64_t g1,
                          uint64_t b) {
    require_json_or_text(out);
    VolcanoGraph g = graph_from_json(json_parse(slurp(path)));
    ValidationReport rep = validate_volcano(g, VolcanoParams{r, g1, b});
    if (out.format == "text") {
        std::string s = rep.pass ? "pass\n" : "fail\n";
        for (const auto& v : rep.violations) s += v + "\n";
        emit(out, s);
        return;
    }
    Json j;
    j["pass"] = rep.pass;
    j["violations"] = rep.violations;
    emit(out, json_bytes(j));
}

void run_points(const OutputCfg& out, uint64_t q, uint32_t rexp, const std::string& f_text) {
    require_json_or_text(out);
    const FieldCtx* F = field_for(q);
    APoly f = parse_apoly(F, f_text);
    emit(out, std::to_string(count_affine_points(F, rexp, f)) + "\n");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for rank-r Drinfeld F_q[T]-modules"};
    app.require_subcommand(1);

    OutputCfg out;
    app.add_option("--format", out.format, "output format (json, dot, text)")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    app.add_option("--out", out.path, "write output to this file instead of stdout");

    uint64_t q = 0, g1 = 0, b = 0;
    uint32_t r = 0, rexp = 0, depth_gen = 0, depth_preset = 1, dual_degree = 0, bound_val = 0;
    std::string j_text, delta_text = "all", which, q_text, a_text, order_path, ideal_path;
    std::string group, images, graph_path, preset_name, f_text;
    bool emit_g = false, force = false, symbolic = false, certified = false;

    auto* jinv = app.add_subcommand("jinv", "enumerate admissible J-invariant exponent tuples");
    jinv->fallthrough();
    jinv->add_option("--q", q)->required();
    jinv->add_option("--r", r)->required();
    jinv->callback([&] { run_jinv(out, q, r); });

    auto* st = app.add_subcommand("selfisog-t", "self-isogenous modular polynomial at level T");
    st->fallthrough();
    st->add_option("--q", q)->required();
    st->add_option("--r", r)->required();
    st->add_option("--j", j_text, "exponent tuple d1,...,dr (defaults to the least admissible)");
    st->add_option("--delta", delta_text, "restrict to one leading coefficient, or \"all\"");
    st->add_flag("--emit-g", emit_g, "also emit the defining polynomial g per delta");
    st->callback([&] { run_selfisog_t(out, q, r, j_text, delta_text, emit_g); });

    auto* bd = app.add_subcommand("bound", "closed-form counting bounds at level T^2+T+1");
    bd->fallthrough();
    bd->add_option("--which", which)->required()->check(CLI::IsMember({"pairs", "Nq"}));
    bd->add_option("--q", q)->required();
    bd->add_flag("--force", force, "evaluate even in characteristic 2 or 3");
    bd->callback([&] { run_bound(out, which, q, force); });

    auto* pa = app.add_subcommand("phi-a", "the twisted polynomial phi_a, or its constraint system");
    pa->fallthrough();
    pa->add_option("--q", q_text, "prime power, or \"any\" with --symbolic")->required();
    pa->add_option("--r", r)->required();
    pa->add_option("--a", a_text)->required();
    pa->add_flag("--symbolic", symbolic, "emit the coefficient-matching equations instead");
    pa->add_option("--dual-degree", dual_degree,
                   "with --symbolic: match a monic isogeny of this tau-degree against its dual");
    pa->callback([&] { run_phi_a(out, q_text, r, a_text, symbolic, dual_degree); });

    auto* ga = app.add_subcommand("gamma", "count norm representations in an order");
    ga->fallthrough();
    ga->add_option("--order", order_path)->required();
    ga->add_option("--a", a_text)->required();
    auto* bopt = ga->add_option("--bound", bound_val, "coordinate degree bound");
    ga->add_flag("--certified", certified, "caller certifies the bound captures every witness");
    ga->callback([&] {
        std::optional<uint32_t> bnd;
        if (bopt->count()) bnd = bound_val;
        run_gamma(out, order_path, a_text, bnd, certified);
    });

    auto* fn = app.add_subcommand("fitnorm", "Fitting-ideal norm of an ideal presentation");
    fn->fallthrough();
    fn->add_option("--order", order_path)->required();
    fn->add_option("--ideal", ideal_path)->required();
    fn->callback([&] { run_fitnorm(out, order_path, ideal_path); });

    auto* vol = app.add_subcommand("volcano", "isogeny volcano generation and validation");
    vol->fallthrough();
    vol->require_subcommand(1);

    auto* vgen = vol->add_subcommand("gen", "build a volcano over an explicit crater group");
    vgen->fallthrough();
    vgen->add_option("--group", group, "cyclic invariant factors n1,n2,...; empty for trivial");
    vgen->add_option("--images", images, "ideal-class images, tuples separated by ;");
    vgen->add_option("--q", q)->required();
    vgen->add_option("--r", r)->required();
    vgen->add_option("--degl", rexp, "degree of the prime l")->required();
    vgen->add_option("--depth", depth_gen);
    vgen->callback([&] {
        VolcanoGraph g =
            build_volcano(parse_crater(group, images), branching_factor(q, r, rexp), depth_gen);
        emit_graph(out, g);
    });

    auto* vval = vol->add_subcommand("validate", "check a graph against the volcano laws");
    vval->fallthrough();
    vval->add_option("graph", graph_path, "graph JSON file")->required();
    vval->add_option("--r", r)->required();
    vval->add_option("--g1", g1, "crater out-degree")->required();
    vval->add_option("--b", b, "branching factor")->required();
    vval->callback([&] { run_volcano_validate(out, graph_path, r, g1, b); });

    auto* vpre = vol->add_subcommand("preset", "one of the built-in worked examples");
    vpre->fallthrough();
    vpre->add_option("name", preset_name, "r3-cycle or r3-loop")->required();
    vpre->add_option("--depth", depth_preset);
    vpre->callback([&] {
        VolcanoPreset p = volcano_preset(preset_name);
        emit_graph(out, build_volcano(p.crater, p.branching(), depth_preset));
    });

    auto* pt = app.add_subcommand("points", "affine points of y^rexp = f(x) over F_q");
    pt->fallthrough();
    pt->add_option("--q", q)->required();
    pt->add_option("--rexp", rexp)->required();
    pt->add_option("--f", f_text)->required();
    pt->callback([&] { run_points(out, q, rexp, f_text); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "InternalError: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
