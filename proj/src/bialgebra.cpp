#include "hopfsmith/bialgebra.hpp"

#include <sstream>

namespace hopfsmith {

bool BialgebraReport::ok() const { return failing() == nullptr; }

const AxiomResult* BialgebraReport::failing() const {
    for (auto& a : axioms)
        if (!a.ok) return &a;
    return nullptr;
}

void check_shapes(const Bialgebra& B) {
    size_t n = B.n, n2 = n * n;
    auto want = [](const Matrix& M, size_t r, size_t c, const char* what) {
        if (M.rows() != r || M.cols() != c)
            throw ShapeError(std::string(what) + " has shape " + std::to_string(M.rows()) + "x" +
                             std::to_string(M.cols()) + ", expected " + std::to_string(r) + "x" + std::to_string(c));
    };
    want(B.m, n, n2, "m");
    want(B.u, n, 1, "u");
    want(B.delta, n2, n, "delta");
    want(B.eps, 1, n, "epsilon");
    if (!B.grading.empty() && B.grading.size() != n) throw ShapeError("grading length differs from dim");
}

Matrix id_of(const Bialgebra& B) { return Matrix::identity(B.F, B.n); }

static int deg(const Bialgebra& B, size_t i) { return B.grading.empty() ? 0 : B.grading[i] & 1; }

Matrix braid(const Bialgebra& B) {
    size_t n = B.n;
    Matrix br(B.F, n * n, n * n);
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) {
            long s = (B.braiding == Braiding::Koszul && deg(B, i) && deg(B, j)) ? -1 : 1;
            br.set(j * n + i, i * n + j, s);
        }
    return br;
}

Matrix tensor_maps(const Matrix& f, const std::vector<int>& dom_f, const Matrix& g, int dg) {
    Matrix k = kron(f, g);
    if (!(dg & 1)) return k;
    size_t w = g.cols();
    for (size_t v = 0; v < f.cols(); v++) {
        if (v >= dom_f.size() || !(dom_f[v] & 1)) continue;
        for (size_t c = v * w; c < (v + 1) * w; c++)
            for (size_t r = 0; r < k.rows(); r++)
                if (!k(r, c).is_zero()) k.at(r, c) = -k(r, c);
    }
    return k;
}

namespace {

AxiomResult compare(const std::string& name, const Matrix& lhs, const Matrix& rhs) {
    AxiomResult a{name, true, ""};
    if (auto d = lhs.diff(rhs)) {
        a.ok = false;
        std::ostringstream w;
        w << "(" << d->first << "," << d->second << "): ";
        if (d->first < lhs.rows() && d->second < lhs.cols())
            w << lhs(d->first, d->second).str() << " vs " << rhs(d->first, d->second).str();
        else
            w << "shape mismatch";
        a.witness = w.str();
    }
    return a;
}

bool even_map(const Bialgebra& B, const Matrix& M, const std::vector<int>& rows, const std::vector<int>& cols) {
    for (size_t i = 0; i < M.rows(); i++)
        for (size_t j = 0; j < M.cols(); j++)
            if (!M(i, j).is_zero() && rows[i] != cols[j]) return false;
    (void)B;
    return true;
}

std::vector<int> grading2(const Bialgebra& B) {
    std::vector<int> g;
    for (size_t i = 0; i < B.n; i++)
        for (size_t j = 0; j < B.n; j++) g.push_back((deg(B, i) + deg(B, j)) & 1);
    return g;
}

}  // namespace

BialgebraReport check_bialgebra(const Bialgebra& B) {
    check_shapes(B);
    BialgebraReport R;
    Matrix I = id_of(B);
    Matrix one = Matrix::identity(B.F, 1);
    const Matrix &m = B.m, &u = B.u, &D = B.delta, &e = B.eps;
    R.axioms.push_back(compare("associativity", m * kron(m, I), m * kron(I, m)));
    R.axioms.push_back(compare("left unit", m * kron(u, I), I));
    R.axioms.push_back(compare("right unit", m * kron(I, u), I));
    R.axioms.push_back(compare("coassociativity", kron(D, I) * D, kron(I, D) * D));
    R.axioms.push_back(compare("left counit", kron(e, I) * D, I));
    R.axioms.push_back(compare("right counit", kron(I, e) * D, I));
    Matrix mm = kron(m, m), mid = kron(kron(I, braid(B)), I), DD = kron(D, D);
    R.axioms.push_back(compare("bialgebra", mm * mid * DD, D * m));
    R.axioms.push_back(compare("unit comultiplication", D * u, kron(u, u)));
    R.axioms.push_back(compare("counit multiplication", e * m, kron(e, e)));
    R.axioms.push_back(compare("counit unit", e * u, one));
    if (!B.grading.empty()) {
        std::vector<int> g(B.n), g2 = grading2(B), z{0};
        for (size_t i = 0; i < B.n; i++) g[i] = deg(B, i);
        bool ok = even_map(B, m, g, g2) && even_map(B, u, g, z) && even_map(B, D, g2, g) && even_map(B, e, z, g);
        R.axioms.push_back({"even structure maps", ok, ok ? "" : "a structure map mixes degrees"});
    }
    return R;
}

const char* shear_name(ShearDir d) {
    switch (d) {
    case ShearDir::NW: return "NW";
    case ShearDir::NE: return "NE";
    case ShearDir::SW: return "SW";
    case ShearDir::SE: return "SE";
    }
    return "?";
}

Matrix shear(const Bialgebra& B, ShearDir d) {
    check_shapes(B);
    Matrix I = id_of(B);
    switch (d) {
    case ShearDir::SE: return kron(I, B.m) * kron(B.delta, I);
    case ShearDir::NW: return kron(B.m, I) * kron(I, B.delta);
    case ShearDir::NE: return kron(B.m, I) * kron(I, braid(B)) * kron(B.delta, I);
    case ShearDir::SW: return kron(I, B.m) * kron(braid(B), I) * kron(I, B.delta);
    }
    throw ShapeError("bad shear direction");
}

bool is_hopf(const Bialgebra& B) { return rank(shear(B, ShearDir::SE)) == B.n * B.n; }
bool is_cohopf(const Bialgebra& B) { return rank(shear(B, ShearDir::NE)) == B.n * B.n; }

Matrix shear_inverse_from(const Bialgebra& B, const Matrix& S) {
    Matrix I = id_of(B);
    return kron(I, B.m) * kron(kron(I, S), I) * kron(B.delta, I);
}

bool convolution_ok(const Bialgebra& B, const Matrix& S) {
    Matrix I = id_of(B), ue = B.u * B.eps;
    return B.m * kron(S, I) * B.delta == ue && B.m * kron(I, S) * B.delta == ue;
}

HopfData antipode(const Bialgebra& B) {
    Matrix se = shear(B, ShearDir::SE);
    auto inv = inverse(se);
    if (!inv) throw NoAntipode(B.name + ": SE shear is not invertible", nullspace(se));
    Matrix I = id_of(B);
    HopfData H{B, kron(B.eps, I) * *inv * kron(I, B.u), std::nullopt};
    if (is_cohopf(B)) H.Sinv = inverse(H.S);
    return H;
}

std::optional<Matrix> antipode_by_convolution(const Bialgebra& B) {
    size_t n = B.n;
    Matrix I = id_of(B);
    // unknown S_{ij} at i*n+j; each equation is linear in S
    Matrix A(B.F, 2 * n * n, n * n);
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) {
            Matrix E(B.F, n, n);
            E.set(i, j, 1);
            Matrix L = B.m * kron(E, I) * B.delta, R = B.m * kron(I, E) * B.delta;
            for (size_t r = 0; r < n; r++)
                for (size_t c = 0; c < n; c++) {
                    A.at(r * n + c, i * n + j) = L(r, c);
                    A.at(n * n + r * n + c, i * n + j) = R(r, c);
                }
        }
    Matrix ue = B.u * B.eps, b(B.F, 2 * n * n, 1);
    for (size_t r = 0; r < n; r++)
        for (size_t c = 0; c < n; c++) b.at(r * n + c, 0) = b.at(n * n + r * n + c, 0) = ue(r, c);
    auto x = solve(A, b);
    if (!x) return std::nullopt;
    Matrix S(B.F, n, n);
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) S.at(i, j) = (*x)(i * n + j, 0);
    return S;
}

namespace {

std::vector<int> degrees(const Bialgebra& B) {
    std::vector<int> g(B.n);
    for (size_t i = 0; i < B.n; i++) g[i] = deg(B, i);
    return g;
}

Matrix normalize_first(Matrix v) {
    for (size_t i = 0; i < v.rows(); i++)
        for (size_t j = 0; j < v.cols(); j++)
            if (!v(i, j).is_zero()) return v.scaled(v(i, j).inverse());
    return v;
}

}  // namespace

bool is_integral(const Bialgebra& B, const Matrix& lambda, int degree) {
    Matrix lhs = tensor_maps(id_of(B), degrees(B), lambda, degree) * B.delta;
    return lhs == B.u * lambda;
}

bool is_cointegral(const Bialgebra& B, const Matrix& Lambda, int degree) {
    Matrix lhs = B.m * tensor_maps(id_of(B), degrees(B), Lambda, degree);
    return lhs == Lambda * B.eps;
}

IntegralData integrals(const Bialgebra& B) {
    check_shapes(B);
    IntegralData D;
    size_t n = B.n;
    std::vector<int> g = degrees(B);
    for (int p = 0; p < 2; p++) {
        std::vector<size_t> support;
        for (size_t i = 0; i < n; i++)
            if (g[i] == p) support.push_back(i);
        if (support.empty()) continue;
        // linear maps of the unknown coefficients into the n x n residues
        Matrix Al(B.F, n * n, support.size()), Ac(B.F, n * n, support.size());
        for (size_t k = 0; k < support.size(); k++) {
            Matrix row(B.F, 1, n), col(B.F, n, 1);
            row.set(0, support[k], 1);
            col.set(support[k], 0, 1);
            Matrix rl = tensor_maps(id_of(B), g, row, p) * B.delta - B.u * row;
            Matrix rc = B.m * tensor_maps(id_of(B), g, col, p) - col * B.eps;
            for (size_t r = 0; r < n; r++)
                for (size_t c = 0; c < n; c++) {
                    Al.at(r * n + c, k) = rl(r, c);
                    Ac.at(r * n + c, k) = rc(r, c);
                }
        }
        Matrix Nl = nullspace(Al), Nc = nullspace(Ac);
        for (size_t j = 0; j < Nl.cols(); j++) {
            Matrix row(B.F, 1, n);
            for (size_t k = 0; k < support.size(); k++) row.at(0, support[k]) = Nl(k, j);
            D.integrals.push_back(normalize_first(row));
            D.integral_degree.push_back(p);
        }
        for (size_t j = 0; j < Nc.cols(); j++) {
            Matrix col(B.F, n, 1);
            for (size_t k = 0; k < support.size(); k++) col.at(support[k], 0) = Nc(k, j);
            D.cointegrals.push_back(normalize_first(col));
            D.cointegral_degree.push_back(p);
        }
    }
    if (!D.integrals.empty() && !D.cointegrals.empty()) D.pairing = (D.integrals[0] * D.cointegrals[0])(0, 0);
    return D;
}

Matrix antipode_from_integrals(const Bialgebra& B, const IntegralData& D) {
    if (D.integrals.size() != 1 || D.cointegrals.size() != 1)
        throw ConditionNotMet("integral and cointegral spaces must both be 1-dimensional (got " +
                              std::to_string(D.integrals.size()) + " and " + std::to_string(D.cointegrals.size()) + ")");
    if (!D.pairing || D.pairing->is_zero()) throw ConditionNotMet("integral pairing is zero");
    Matrix I = id_of(B);
    const Matrix &lam = D.integrals[0], &Lam = D.cointegrals[0];
    // x -> Lambda1 (x) Lambda2 (x) x -> Lambda1 (x) x Lambda2 -> Lambda1 lambda(x Lambda2)
    std::vector<int> g = degrees(B);
    Matrix S = tensor_maps(I, g, lam, D.integral_degree[0]) * kron(I, B.m) * kron(I, braid(B)) * kron(B.delta, I) *
               kron(Lam, I);
    return S.scaled(D.pairing->inverse());
}

Bialgebra dual(const Bialgebra& B) {
    Bialgebra D = B;
    D.name = B.name + " dual";
    D.m = B.delta.transpose();
    D.delta = B.m.transpose();
    D.u = B.eps.transpose();
    D.eps = B.u.transpose();
    return D;
}

}  // namespace hopfsmith
