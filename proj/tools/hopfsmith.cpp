#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "hopfsmith/evaluate.hpp"
#include "hopfsmith/fixtures.hpp"
#include "hopfsmith/io.hpp"

using namespace hopfsmith;

namespace {

constexpr int kUsage = 64;

using Report = RunReport;

struct Options {
    bool json_out = false, timing = true;
    long budget = default_budget();
    int depth = 2;
};

void write_dot(const std::string& path, const Presentation& P) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "digraph presentation {\n";
    for (auto& g : P.gens) out << "  \"" << g.name << "\" [label=\"" << g.name << " (" << g.dim << ")\"];\n";
    for (auto& g : P.gens) {
        if (g.dim == 0) continue;
        for (auto [side, t] : {std::pair{"s", g.src}, std::pair{"t", g.tgt}}) {
            std::vector<std::string> names;
            collect_gens(t, names);
            std::set<std::string> seen(names.begin(), names.end());
            for (auto& n : seen) out << "  \"" << g.name << "\" -> \"" << n << "\" [label=\"" << side << "\"];\n";
        }
    }
    out << "}\n";
}

void print_prose(const std::string& cmd, const Report& r) {
    std::cout << cmd << "\n";
    for (auto& [k, v] : r.data.items()) {
        if (v.is_string()) std::cout << "  " << k << ": " << v.get<std::string>() << "\n";
        else if (v.is_array() && !v.empty() && v[0].is_object()) {
            std::cout << "  " << k << ":\n";
            for (auto& row : v) {
                std::cout << "   ";
                for (auto& [kk, vv] : row.items())
                    std::cout << " " << kk << "=" << (vv.is_string() ? vv.get<std::string>() : vv.dump());
                std::cout << "\n";
            }
        } else
            std::cout << "  " << k << ": " << v.dump() << "\n";
    }
    for (auto& c : r.checks) {
        std::cout << "  [" << c["status"].get<std::string>() << "] " << c["name"].get<std::string>();
        if (c.contains("witness")) std::cout << ": " << c["witness"].get<std::string>();
        std::cout << "\n";
    }
}

Report cmd_census(const std::string& in) {
    Report r;
    r.data["census"] = load_presentation(in).base.census();
    return r;
}

Report cmd_gray(const std::string& a, const std::string& b, const std::string& out, const std::string& dot) {
    auto A = load_presentation(a), B = load_presentation(b);
    GrayProduct G = gray(A.base, B.base);
    Report r;
    r.data["census"] = G.pres.census();
    if (!out.empty()) {
        PointedPresentation PP{G.pres, A.basepoint.empty() || B.basepoint.empty()
                                           ? std::string()
                                           : pair_name(A.basepoint, B.basepoint)};
        write_json(out, pointed_json(PP));
        r.data["output"] = out;
    }
    if (!dot.empty()) write_dot(dot, G.pres);
    return r;
}

Report cmd_smash(const std::string& a, const std::string& pa, const std::string& b, const std::string& pb,
                 const std::string& out, const std::string& dot) {
    auto A = load_presentation(a), B = load_presentation(b);
    if (!pa.empty()) A.basepoint = pa;
    if (!pb.empty()) B.basepoint = pb;
    for (auto* P : {&A, &B})
        if (P->basepoint.empty() || !P->base.has(P->basepoint) || P->base.at(P->basepoint).dim != 0)
            throw IoError("smash needs a basepoint object for each factor");
    SmashProduct S = smash(A, B);
    Report r;
    r.data["gray_census"] = S.gray.pres.census();
    r.data["census"] = S.pres.census();
    r.data["basepoint"] = S.basepoint;
    if (!out.empty()) {
        write_json(out, pointed_json({S.pres, S.basepoint}));
        r.data["output"] = out;
    }
    if (!dot.empty()) write_dot(dot, S.pres);
    return r;
}

Report cmd_shear_check(const std::string& in) {
    Bialgebra B = load_bialgebra(in);
    Report r;
    r.data["bialgebra"] = B.name;
    r.data["field"] = B.F->name();
    r.data["dim"] = B.n;
    auto rep = check_bialgebra(B);
    for (auto& a : rep.axioms) r.check("axiom " + a.name, a.ok, a.witness);
    if (!rep.ok()) return r;
    json sh = json::object();
    std::map<ShearDir, bool> inv;
    for (ShearDir d : {ShearDir::NW, ShearDir::NE, ShearDir::SW, ShearDir::SE}) {
        std::size_t k = rank(shear(B, d));
        inv[d] = k == B.n * B.n;
        sh[shear_name(d)] = {{"rank", k}, {"invertible", inv[d]}};
    }
    r.data["shears"] = sh;
    r.data["hopf"] = is_hopf(B);
    r.data["cohopf"] = is_cohopf(B);
    r.check("NW invertible iff SE invertible", inv[ShearDir::NW] == inv[ShearDir::SE]);
    r.check("NE invertible iff SW invertible", inv[ShearDir::NE] == inv[ShearDir::SW]);
    UniversalShear U = universal_shear();
    Matrix e = evaluate_diagram(U.gray.pres, U.cell, bimonad_context(B));
    Matrix ne = shear(B, ShearDir::NE);
    auto d = e.diff(ne);
    r.check("universal shear evaluates to NE", !d,
            d ? "(" + std::to_string(d->first) + "," + std::to_string(d->second) + ")" : "");
    return r;
}

Report cmd_antipode(const std::string& in) {
    Bialgebra B = load_bialgebra(in);
    Report r;
    r.data["bialgebra"] = B.name;
    auto rep = check_bialgebra(B);
    for (auto& a : rep.axioms)
        if (!a.ok) r.check("axiom " + a.name, false, a.witness);
    if (!rep.ok()) return r;
    HopfData H;
    try {
        H = antipode(B);
    } catch (const NoAntipode& e) {
        r.data["hopf"] = false;
        r.data["kernel_dim"] = e.kernel.cols();
        return r;
    }
    r.data["hopf"] = true;
    r.data["S"] = matrix_json(H.S);
    r.data["S_invertible"] = H.Sinv.has_value();
    int order = 0;
    for (int k = 1; k <= 2 * static_cast<int>(B.n) + 2 && !order; k++)
        if (power(H.S, k).is_identity()) order = k;
    r.data["S_order"] = order;
    r.check("convolution axioms", convolution_ok(B, H.S));
    Matrix se = shear(B, ShearDir::SE), si = shear_inverse_from(B, H.S);
    r.check("shear inverse from S", (si * se).is_identity() && (se * si).is_identity());
    auto conv = antipode_by_convolution(B);
    r.check("independent convolution solve agrees", conv && *conv == H.S);
    try {
        r.check("S from integrals agrees", antipode_from_integrals(B, integrals(B)) == H.S);
    } catch (const ConditionNotMet& e) {
        r.check("S from integrals agrees", false, e.what());
    }
    return r;
}

Report cmd_integrals(const std::string& in) {
    Bialgebra B = load_bialgebra(in);
    Report r;
    r.data["bialgebra"] = B.name;
    auto rep = check_bialgebra(B);
    for (auto& a : rep.axioms)
        if (!a.ok) r.check("axiom " + a.name, false, a.witness);
    if (!rep.ok()) return r;
    IntegralData D = integrals(B);
    json li = json::array(), co = json::array();
    for (std::size_t i = 0; i < D.integrals.size(); i++)
        li.push_back({{"degree", D.integral_degree[i]}, {"value", matrix_json(D.integrals[i])[0]}});
    for (std::size_t i = 0; i < D.cointegrals.size(); i++)
        co.push_back({{"degree", D.cointegral_degree[i]}, {"value", matrix_json(D.cointegrals[i].transpose())[0]}});
    r.data["integrals"] = li;
    r.data["cointegrals"] = co;
    if (D.pairing) r.data["pairing"] = D.pairing->str();
    bool hopf = is_hopf(B);
    r.data["hopf"] = hopf;
    if (hopf) {
        r.check("integral space is a line", D.integrals.size() == 1, std::to_string(D.integrals.size()));
        r.check("cointegral space is a line", D.cointegrals.size() == 1, std::to_string(D.cointegrals.size()));
        r.check("pairing nonzero", D.pairing && !D.pairing->is_zero());
    }
    return r;
}

Report cmd_reconstruct(const std::string& in, const std::string& ref, const Options& o, bool depth_set) {
    GeneratingFamily F = load_family(in);
    if (depth_set) F.depth = o.depth;
    std::optional<Bialgebra> R;
    if (!ref.empty()) R = load_bialgebra(ref);
    Report r;
    r.data["bialgebra"] = F.H.name;
    r.data["family"] = F.comodules.size();
    r.data["depth"] = F.depth;
    Reconstruction rec;
    try {
        rec = coend_reconstruct(F, R);
    } catch (const TannakaError& e) {
        r.check("reconstruction", false, e.what());
        return r;
    }
    r.data["presented_dim"] = rec.presented_dim;
    r.data["relations"] = rec.relations;
    r.data["coend_dim"] = rec.B.n;
    r.data["reference"] = R ? R->name : F.H.name;
    r.data["hopf_in"] = is_hopf(F.H);
    r.data["hopf_out"] = is_hopf(rec.B);
    r.data["cohopf_in"] = is_cohopf(F.H);
    r.data["cohopf_out"] = is_cohopf(rec.B);
    r.data["notes"] = rec.notes;
    auto rep = check_bialgebra(rec.B);
    r.check("coend is a bialgebra", rep.ok(), rep.ok() ? "" : rep.failing()->name);
    r.check("canonical map is a coalgebra map", rec.coalgebra_map);
    r.check("canonical map is a bialgebra isomorphism", rec.isomorphism,
            !rec.invertible ? "canonical map is not invertible" : "structure maps are not transported");
    return r;
}

Report cmd_proof_skeleton(const Options& o, int mutate) {
    Report r;
    SkeletonReport s;
    if (mutate >= 0) {
        SkeletonChain c = skeleton_chain();
        if (static_cast<std::size_t>(mutate) >= c.steps.size()) throw IoError("no step " + std::to_string(mutate));
        s = check_chain(mutate_chain(c, mutate), o.budget);
        r.data["mutated_step"] = mutate;
    } else {
        s = proof_skeleton_check(o.budget);
        r.check("O2 shear maps onto the universal shear", s.shear_matches_universal);
    }
    json table = json::array();
    for (std::size_t i = 0; i < s.steps.size(); i++) {
        auto& st = s.steps[i];
        table.push_back({{"step", i},
                         {"label", st.label},
                         {"generator", st.generator},
                         {"class", class_name(st.cls)},
                         {"adjunctible", st.adjunctible}});
    }
    r.data["steps"] = table;
    r.data["counts"] = s.counts;
    auto verdict = [&](const std::string& name, bool ok, const std::string& witness) {
        r.record(name, ok ? "pass" : s.undecided ? "unknown" : "fail", ok ? "" : witness);
    };
    verdict("chain composable", s.composable, "step " + std::to_string(s.failed_step) + ": " + s.failure);
    verdict("total boundary matches the shear image", s.boundary_matches, s.failure);
    auto cnt = [&](const char* k) { return s.counts.count(k) ? s.counts.at(k) : 0; };
    r.check("L-type entries >= 2", cnt("L") >= 2);
    r.check("R-type entries >= 2", cnt("R") >= 2);
    r.check("four-cell entries >= 1", cnt("four-cell") >= 1);
    r.check("collapse-trivial entries >= 1", cnt("collapse-trivial") >= 1);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hopfsmith: presentations, Gray products and finite Hopf algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_flag("--json", o.json_out, "machine-readable report");
    bool no_timing = false;
    app.add_flag("--no-timing", no_timing, "omit timing from reports");
    app.add_option("--budget", o.budget, "eq search budget");
    auto* depth_opt = app.add_option("--depth", o.depth, "tensor closure depth");

    std::string a, b, pa, pb, out, dot, ref;
    int mutate = -1;
    auto* g = app.add_subcommand("gray", "Gray tensor product of two presentations");
    g->add_option("a", a, "file or built-in")->required();
    g->add_option("b", b, "file or built-in")->required();
    g->add_option("-o,--out", out, "write the product presentation");
    g->add_option("--dot", dot, "write a DOT graph");
    auto* s = app.add_subcommand("smash", "smash product of two pointed presentations");
    s->add_option("a", a)->required();
    s->add_option("b", b)->required();
    s->add_option("--pa", pa, "basepoint of a");
    s->add_option("--pb", pb, "basepoint of b");
    s->add_option("-o,--out", out);
    s->add_option("--dot", dot);
    auto* c = app.add_subcommand("census", "generator counts per dimension");
    c->add_option("in", a)->required();
    auto* sc = app.add_subcommand("shear-check", "axioms, shears and the universal shear image");
    sc->add_option("bialgebra", a)->required();
    auto* an = app.add_subcommand("antipode", "antipode from the SE shear");
    an->add_option("bialgebra", a)->required();
    auto* in = app.add_subcommand("integrals", "integrals and cointegrals");
    in->add_option("bialgebra", a)->required();
    auto* re = app.add_subcommand("reconstruct", "coend of a comodule family");
    re->add_option("family", a, "family file or fixture name (regular comodule)")->required();
    re->add_option("--reference", ref, "reference bialgebra");
    auto* ps = app.add_subcommand("proof-skeleton", "classified chain in eO2 (x) eO2");
    ps->add_option("--mutate", mutate, "reverse one step first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    o.timing = !no_timing;

    std::vector<std::string> echo(argv + 1, argv + argc);
    auto t0 = std::chrono::steady_clock::now();
    Report r;
    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "gray") r = cmd_gray(a, b, out, dot);
        else if (cmd == "smash") r = cmd_smash(a, pa, b, pb, out, dot);
        else if (cmd == "census") r = cmd_census(a);
        else if (cmd == "shear-check") r = cmd_shear_check(a);
        else if (cmd == "antipode") r = cmd_antipode(a);
        else if (cmd == "integrals") r = cmd_integrals(a);
        else if (cmd == "reconstruct") r = cmd_reconstruct(a, ref, o, depth_opt->count() > 0);
        else r = cmd_proof_skeleton(o, mutate);
    } catch (const IoError& e) {
        std::cerr << "hopfsmith: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        r.check("internal", false, e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    int code = r.exit_code();
    if (o.json_out) {
        std::cout << r.to_json(echo, o.timing ? std::optional<double>(ms) : std::nullopt).dump(2) << "\n";
    } else {
        print_prose(cmd, r);
        if (o.timing) std::cout << "  time " << ms << " ms\n";
    }
    return code;
}
