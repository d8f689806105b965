#include "hopfsmith/io.hpp"

#include <algorithm>
#include <fstream>

#include "hopfsmith/fixtures.hpp"

namespace hopfsmith {

namespace fs = std::filesystem;

namespace {

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw IoError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::string opt_sexpr(const TermP& t) { return t ? to_sexpr(t) : std::string(); }

json adjunction_json(const AdjunctionRecord& a) {
    return {{"l", to_sexpr(a.l)}, {"r", to_sexpr(a.r)}, {"eps", to_sexpr(a.eps)}, {"eta", to_sexpr(a.eta)}};
}

AdjunctionRecord adjunction_from_json(std::shared_ptr<const Presentation> P, const json& j) {
    AdjunctionRecord a;
    a.P = P;
    a.l = parse_term(*P, need(j, "l", "adjunction").get<std::string>());
    a.r = parse_term(*P, need(j, "r", "adjunction").get<std::string>());
    a.eps = parse_term(*P, need(j, "eps", "adjunction").get<std::string>());
    a.eta = parse_term(*P, need(j, "eta", "adjunction").get<std::string>());
    return a;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

}  // namespace

json presentation_json(const Presentation& P) {
    json gens = json::array(), rels = json::array();
    for (auto& g : P.gens)
        gens.push_back({{"name", g.name},
                        {"dim", g.dim},
                        {"src", opt_sexpr(g.src)},
                        {"tgt", opt_sexpr(g.tgt)},
                        {"invertible", g.invertible}});
    for (auto& r : P.rels)
        rels.push_back({{"dim", r.dim}, {"lhs", to_sexpr(r.lhs)}, {"rhs", to_sexpr(r.rhs)}, {"oriented", r.oriented}});
    return {{"maxDim", P.maxDim}, {"generators", gens}, {"relations", rels}};
}

Presentation presentation_from_json(const json& j) {
    Presentation P;
    try {
        for (auto& g : need(j, "generators", "presentation")) {
            Generator G;
            G.name = need(g, "name", "generator").get<std::string>();
            G.dim = need(g, "dim", G.name).get<int>();
            G.invertible = g.value("invertible", false);
            if (G.dim > 0) {
                G.src = parse_term(P, need(g, "src", G.name).get<std::string>());
                G.tgt = parse_term(P, need(g, "tgt", G.name).get<std::string>());
                if (G.src->dim != G.dim - 1 || G.tgt->dim != G.dim - 1)
                    throw IoError("generator " + G.name + ": boundary has the wrong dimension");
            }
            P.add(std::move(G));
        }
        if (j.contains("relations"))
            for (auto& r : j.at("relations")) {
                TermP l = parse_term(P, need(r, "lhs", "relation").get<std::string>());
                TermP rr = parse_term(P, need(r, "rhs", "relation").get<std::string>());
                int d = r.value("dim", l->dim);
                if (l->dim != rr->dim || d != l->dim) throw IoError("relation dimensions disagree");
                P.rels.push_back(Relation{d, l, rr, r.value("oriented", false)});
            }
        if (j.contains("maxDim")) {
            int m = j.at("maxDim").get<int>();
            if (m < P.maxDim) throw IoError("maxDim below a generator's dimension");
            P.maxDim = m;
        }
    } catch (const json::exception& e) {
        throw IoError(std::string("presentation: ") + e.what());
    } catch (const TermError& e) {
        throw IoError(std::string("presentation: ") + e.what());
    }
    return P;
}

json pointed_json(const PointedPresentation& P) {
    json j = presentation_json(P.base);
    if (!P.basepoint.empty()) j["basepoint"] = P.basepoint;
    return j;
}

PointedPresentation pointed_from_json(const json& j) {
    PointedPresentation P{presentation_from_json(j), j.value("basepoint", std::string())};
    if (!P.basepoint.empty() && (!P.base.has(P.basepoint) || P.base.at(P.basepoint).dim != 0))
        throw IoError("basepoint " + P.basepoint + " is not an object");
    return P;
}

json retract_json(const RetractRecord& R) {
    json j = presentation_json(*R.P);
    j["retract"] = {{"basepoint", R.basepoint},
                    {"X", R.X},
                    {"f", to_sexpr(R.f)},
                    {"g", to_sexpr(R.g)},
                    {"alpha", to_sexpr(R.alpha)},
                    {"adj_f", adjunction_json(R.adj_f)},
                    {"adj_g", adjunction_json(R.adj_g)},
                    {"beta", to_sexpr(R.beta)},
                    {"betaL", to_sexpr(R.betaL)},
                    {"beta_unit", to_sexpr(R.beta_unit)},
                    {"beta_counit", to_sexpr(R.beta_counit)},
                    {"delta", to_sexpr(R.delta)},
                    {"deltaR", to_sexpr(R.deltaR)},
                    {"delta_unit", to_sexpr(R.delta_unit)},
                    {"delta_counit", to_sexpr(R.delta_counit)}};
    return j;
}

RetractRecord retract_from_json(const json& j) {
    auto P = std::make_shared<const Presentation>(presentation_from_json(j));
    const json& h = need(j, "retract", "retract record");
    RetractRecord R;
    R.P = P;
    try {
        auto t = [&](const char* k) { return parse_term(*P, need(h, k, "retract").get<std::string>()); };
        R.basepoint = need(h, "basepoint", "retract").get<std::string>();
        R.X = need(h, "X", "retract").get<std::string>();
        R.f = t("f");
        R.g = t("g");
        R.alpha = t("alpha");
        R.adj_f = adjunction_from_json(P, need(h, "adj_f", "retract"));
        R.adj_g = adjunction_from_json(P, need(h, "adj_g", "retract"));
        R.beta = t("beta");
        R.betaL = t("betaL");
        R.beta_unit = t("beta_unit");
        R.beta_counit = t("beta_counit");
        R.delta = t("delta");
        R.deltaR = t("deltaR");
        R.delta_unit = t("delta_unit");
        R.delta_counit = t("delta_counit");
    } catch (const TermError& e) {
        throw IoError(std::string("retract: ") + e.what());
    } catch (const json::exception& e) {
        throw IoError(std::string("retract: ") + e.what());
    }
    return R;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); i++) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); j++) r.push_back(m(i, j).str());
        rows.push_back(r);
    }
    return rows;
}

Matrix matrix_from_json(const Field* F, const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!j.is_array() || j.size() != rows) throw IoError(what + ": expected " + std::to_string(rows) + " rows");
    Matrix m(F, rows, cols);
    for (std::size_t i = 0; i < rows; i++) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw IoError(what + ": row " + std::to_string(i) + " should have " + std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; k++) {
            const json& x = j[i][k];
            try {
                if (x.is_number_integer()) m.at(i, k) = Scalar(F, x.get<long>());
                else if (x.is_string()) m.at(i, k) = Scalar::parse(F, x.get<std::string>());
                else throw IoError(what + ": scalars are strings or integers");
            } catch (const FieldError& e) {
                throw IoError(what + ": " + e.what());
            }
        }
    }
    return m;
}

json bialgebra_json(const Bialgebra& B) {
    json field = B.F->rational() ? json("Q") : json{{"ext", poly_string(B.F->modulus())}};
    return {{"name", B.name},
            {"field", field},
            {"dim", B.n},
            {"grading", B.grading},
            {"braiding", B.braiding == Braiding::Flip ? "flip" : "super"},
            {"m", matrix_json(B.m)},
            {"u", matrix_json(B.u)},
            {"delta", matrix_json(B.delta)},
            {"epsilon", matrix_json(B.eps)}};
}

Bialgebra bialgebra_from_json(const json& j) {
    Bialgebra B;
    try {
        B.name = j.value("name", std::string("bialgebra"));
        const json& f = need(j, "field", "bialgebra");
        if (f.is_string()) B.F = Field::parse(f.get<std::string>());
        else B.F = Field::parse(need(f, "ext", "field").get<std::string>());
        B.n = need(j, "dim", "bialgebra").get<std::size_t>();
        if (B.n == 0) throw IoError("bialgebra: dimension 0");
        B.grading = j.contains("grading") ? j.at("grading").get<std::vector<int>>() : std::vector<int>(B.n, 0);
        if (B.grading.size() != B.n) throw IoError("bialgebra: grading has the wrong length");
        for (int g : B.grading)
            if (g != 0 && g != 1) throw IoError("bialgebra: degrees are 0 or 1");
        std::string br = j.value("braiding", std::string("flip"));
        if (br == "flip") B.braiding = Braiding::Flip;
        else if (br == "super") B.braiding = Braiding::Koszul;
        else throw IoError("bialgebra: unknown braiding " + br);
        std::size_t n = B.n;
        B.m = matrix_from_json(B.F, need(j, "m", "bialgebra"), n, n * n, "m");
        B.u = matrix_from_json(B.F, need(j, "u", "bialgebra"), n, 1, "u");
        B.delta = matrix_from_json(B.F, need(j, "delta", "bialgebra"), n * n, n, "delta");
        B.eps = matrix_from_json(B.F, need(j, "epsilon", "bialgebra"), 1, n, "epsilon");
    } catch (const json::exception& e) {
        throw IoError(std::string("bialgebra: ") + e.what());
    } catch (const FieldError& e) {
        throw IoError(std::string("bialgebra: ") + e.what());
    }
    return B;
}

GeneratingFamily family_from_json(const json& j, const fs::path& dir) {
    GeneratingFamily F;
    const json& b = need(j, "bialgebra", "family");
    if (b.is_object()) F.H = bialgebra_from_json(b);
    else if (b.is_string()) {
        fs::path p = dir / b.get<std::string>();
        if (fs::exists(p)) F.H = bialgebra_from_json(read_json(p));
        else if (auto h = builtin_bialgebra(b.get<std::string>())) F.H = *h;
        else throw IoError("family: no bialgebra file or fixture named " + b.get<std::string>());
    } else {
        throw IoError("family: \"bialgebra\" is an object or a name");
    }
    F.depth = j.value("depth", 2);
    int k = 0;
    for (auto& c : need(j, "comodules", "family")) {
        Comodule M;
        if (c.is_string()) {
            std::string kind = c.get<std::string>();
            if (kind == "regular") M = regular_comodule(F.H);
            else if (kind == "trivial") M = trivial_comodule(F.H);
            else throw IoError("family: unknown comodule " + kind);
        } else {
            M.d = need(c, "dim", "comodule").get<std::size_t>();
            M.name = c.value("name", "M" + std::to_string(k));
            M.rho = matrix_from_json(F.H.F, need(c, "rho", "comodule"), F.H.n * M.d, M.d, "rho");
        }
        auto bad = comodule_problems(F.H, M);
        if (!bad.empty()) throw IoError("comodule " + M.name + ": " + bad.front());
        F.comodules.push_back(M);
        k++;
    }
    return F;
}

json family_json(const GeneratingFamily& F, bool inline_bialgebra) {
    json cs = json::array();
    for (auto& M : F.comodules) cs.push_back({{"name", M.name}, {"dim", M.d}, {"rho", matrix_json(M.rho)}});
    return {{"bialgebra", inline_bialgebra ? bialgebra_json(F.H) : json(F.H.name)},
            {"comodules", cs},
            {"depth", F.depth}};
}

json read_json(const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw IoError("cannot read " + p.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw IoError(p.string() + ": " + e.what());
    }
}

void write_json(const fs::path& p, const json& j) {
    std::ofstream out(p);
    if (!out) throw IoError("cannot write " + p.string());
    out << j.dump(2) << "\n";
}

std::optional<PointedPresentation> builtin_presentation(const std::string& name) {
    std::string n = lower(name);
    if (n == "point") return PointedPresentation{point(), "x"};
    if (n.rfind("globe", 0) == 0 && n.size() == 6 && n[5] >= '0' && n[5] <= '4') {
        Presentation G = globe(n[5] - '0');
        return PointedPresentation{G, G.of_dim(0).front()->name};
    }
    if (n == "mnd") return mnd();
    if (n == "adj") return adj();
    if (n == "o2") {
        Presentation O = oriental2();
        return PointedPresentation{O, "a"};
    }
    if (n == "eo2") {
        Presentation E = e_oriental2();
        return PointedPresentation{E, "z"};
    }
    return std::nullopt;
}

std::optional<Bialgebra> builtin_bialgebra(const std::string& name) {
    static const std::vector<std::tuple<std::string, std::string, Bialgebra (*)()>> table = {
        {"z2", "Q[Z/2]", group_z2},
        {"s3", "Q[S3]", group_s3},
        {"fz3", "Q^{Z/3}", functions_z3},
        {"monoid", "Q[M]", idempotent_monoid},
        {"sweedler", "Sweedler", sweedler},
        {"superline", "Q[theta]/(theta^2)", super_line},
        {"taft3", "Taft T3", taft3},
        {"corrupted", "Q[Z/2] corrupted", corrupted_z2}};
    std::string n = lower(name);
    for (auto& [key, full, make] : table)
        if (n == key || n == lower(full)) return make();
    return std::nullopt;
}

void RunReport::record(const std::string& name, const std::string& status, const std::string& witness) {
    if (status != "pass" && status != "fail" && status != "unknown") throw IoError("bad status " + status);
    json c = {{"name", name}, {"status", status}};
    if (!witness.empty()) c["witness"] = witness;
    checks.push_back(c);
}

void RunReport::check(const std::string& name, bool ok, const std::string& witness) {
    record(name, ok ? "pass" : "fail", ok ? "" : witness);
}

int RunReport::exit_code() const {
    bool unknown = false;
    for (auto& c : checks) {
        if (c.at("status") == "fail") return 1;
        if (c.at("status") == "unknown") unknown = true;
    }
    return unknown ? 2 : 0;
}

json RunReport::to_json(const std::vector<std::string>& command, std::optional<double> timing_ms) const {
    json j = {{"command", command}, {"data", data}, {"checks", checks}, {"exit", exit_code()}};
    if (timing_ms) j["timing_ms"] = *timing_ms;
    return j;
}

PointedPresentation load_presentation(const std::string& spec) {
    if (fs::exists(spec)) return pointed_from_json(read_json(spec));
    if (auto p = builtin_presentation(spec)) return *p;
    throw IoError("no presentation file or built-in named " + spec);
}

Bialgebra load_bialgebra(const std::string& spec) {
    if (fs::exists(spec)) return bialgebra_from_json(read_json(spec));
    if (auto b = builtin_bialgebra(spec)) return *b;
    throw IoError("no bialgebra file or fixture named " + spec);
}

GeneratingFamily load_family(const std::string& spec) {
    if (fs::exists(spec)) return family_from_json(read_json(spec), fs::path(spec).parent_path());
    if (auto b = builtin_bialgebra(spec)) return GeneratingFamily{*b, {regular_comodule(*b)}, 2};
    throw IoError("no family file or fixture named " + spec);
}

}  // namespace hopfsmith
