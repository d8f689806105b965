#include "hopfsmith/tannaka.hpp"

namespace hopfsmith {

namespace {

void require_flip(const Bialgebra& H) {
    if (H.braiding != Braiding::Flip) throw TannakaError("comodules over a super bialgebra are not supported");
}

// (I_H (x) phi) for phi: d_M -> d_N
Matrix id_tensor(const Bialgebra& H, const Matrix& phi) { return kron(Matrix::identity(H.F, H.n), phi); }

// swap M (x) H -> H (x) M
Matrix swap_to_front(const Field* F, std::size_t dm, std::size_t n) {
    Matrix P(F, n * dm, dm * n);
    for (std::size_t a = 0; a < dm; a++)
        for (std::size_t h = 0; h < n; h++) P.set(h * dm + a, a * n + h, 1);
    return P;
}

// Rows of a matrix whose kernel is span(W's columns), i.e. a basis of the annihilator.
Matrix annihilator(const Matrix& W, std::size_t dim) {
    if (W.cols() == 0) return Matrix::identity(W.field(), dim);
    return nullspace(W.transpose()).transpose();
}

struct Block {
    std::size_t member, offset;
};

// Injective comodule map W -> (sum of family members), with a left inverse.
struct Embedding {
    Matrix psi, left;
    std::vector<Block> blocks;
};

std::optional<Embedding> embed(const Bialgebra& H, const Comodule& W, const std::vector<Comodule>& fam) {
    std::vector<Matrix> maps;
    Embedding e;
    std::size_t off = 0;
    for (std::size_t k = 0; k < fam.size(); k++)
        for (auto& phi : comodule_hom(H, W, fam[k])) {
            maps.push_back(phi);
            e.blocks.push_back({k, off});
            off += fam[k].d;
        }
    if (maps.empty()) return std::nullopt;
    e.psi = vstack(maps);
    if (rank(e.psi) != W.d) return std::nullopt;
    auto lt = solve(e.psi.transpose(), Matrix::identity(H.F, W.d));
    if (!lt) return std::nullopt;
    e.left = lt->transpose();
    return e;
}

}  // namespace

std::vector<std::string> comodule_problems(const Bialgebra& H, const Comodule& M) {
    std::vector<std::string> bad;
    if (M.rho.rows() != H.n * M.d || M.rho.cols() != M.d) {
        bad.push_back("coaction has shape " + std::to_string(M.rho.rows()) + "x" + std::to_string(M.rho.cols()));
        return bad;
    }
    Matrix I = Matrix::identity(H.F, M.d);
    Matrix lhs = kron(H.delta, I) * M.rho;
    Matrix rhs = id_tensor(H, M.rho) * M.rho;
    if (auto d = lhs.diff(rhs))
        bad.push_back("coassociativity fails at (" + std::to_string(d->first) + "," + std::to_string(d->second) + ")");
    if (kron(H.eps, I) * M.rho != I) bad.push_back("counit fails");
    return bad;
}

std::vector<Matrix> comodule_hom(const Bialgebra& H, const Comodule& M, const Comodule& N) {
    std::size_t n = H.n, dm = M.d, dn = N.d;
    // rho_N phi - (I (x) phi) rho_M = 0, unknown phi[a][b] at a*dm + b
    Matrix A(H.F, n * dn * dm, dn * dm);
    for (std::size_t h = 0; h < n; h++)
        for (std::size_t x = 0; x < dn; x++)
            for (std::size_t c = 0; c < dm; c++) {
                std::size_t row = (h * dn + x) * dm + c;
                for (std::size_t a = 0; a < dn; a++) {
                    const Scalar& v = N.rho(h * dn + x, a);
                    if (!v.is_zero()) A.at(row, a * dm + c) += v;
                }
                for (std::size_t b = 0; b < dm; b++) {
                    const Scalar& v = M.rho(h * dm + b, c);
                    if (!v.is_zero()) A.at(row, x * dm + b) -= v;
                }
            }
    Matrix K = nullspace(A);
    std::vector<Matrix> out;
    for (std::size_t k = 0; k < K.cols(); k++) {
        Matrix phi(H.F, dn, dm);
        for (std::size_t a = 0; a < dn; a++)
            for (std::size_t b = 0; b < dm; b++) phi.at(a, b) = K(a * dm + b, k);
        out.push_back(phi);
    }
    return out;
}

Comodule trivial_comodule(const Bialgebra& H, std::size_t d) {
    return {"trivial", d, kron(H.u, Matrix::identity(H.F, d))};
}

Comodule regular_comodule(const Bialgebra& H) { return {"regular", H.n, H.delta}; }

Comodule tensor_comodule(const Bialgebra& H, const Comodule& M, const Comodule& N) {
    require_flip(H);
    Matrix IM = Matrix::identity(H.F, M.d), IN = Matrix::identity(H.F, N.d);
    // (m (x) I (x) I)(I (x) swap (x) I)(rho_M (x) rho_N)
    Matrix mid = kron(kron(Matrix::identity(H.F, H.n), swap_to_front(H.F, M.d, H.n)), IN);
    Matrix rho = kron(kron(H.m, IM), IN) * mid * kron(M.rho, N.rho);
    return {M.name + "(x)" + N.name, M.d * N.d, rho};
}

Comodule dual_comodule(const Bialgebra& H, const Comodule& M) {
    require_flip(H);
    Matrix S = antipode(H).S;  // throws NoAntipode when H is not Hopf
    std::size_t d = M.d, n = H.n;
    Matrix rho(H.F, n * d, d);
    for (std::size_t i = 0; i < d; i++)
        for (std::size_t j = 0; j < d; j++)
            for (std::size_t h2 = 0; h2 < n; h2++) {
                const Scalar& t = M.rho(h2 * d + i, j);
                if (t.is_zero()) continue;
                for (std::size_t h = 0; h < n; h++)
                    if (!S(h, h2).is_zero()) rho.at(h * d + j, i) += S(h, h2) * t;
            }
    return {M.name + "*", d, rho};
}

Reconstruction coend_reconstruct(const GeneratingFamily& F, const std::optional<Bialgebra>& reference) {
    const Bialgebra& H = F.H;
    require_flip(H);
    const auto& fam = F.comodules;
    if (fam.empty()) throw TannakaError("empty family");
    for (auto& M : fam) {
        auto bad = comodule_problems(H, M);
        if (!bad.empty()) throw TannakaError("comodule " + M.name + ": " + bad.front());
    }
    if (F.depth < 2) throw TannakaError("multiplication needs tensor closure to depth at least 2");
    const Field* K = H.F;
    std::size_t n = H.n, m = fam.size();

    // V = sum_i M_i* (x) M_i, coordinate (i, a, b) <-> xi^a (x) m_b
    std::vector<std::size_t> base(m + 1, 0);
    for (std::size_t i = 0; i < m; i++) base[i + 1] = base[i] + fam[i].d * fam[i].d;
    std::size_t V = base[m];
    auto idx = [&](std::size_t i, std::size_t a, std::size_t b) { return base[i] + a * fam[i].d + b; };

    // relations (xi o phi) (x) v - xi (x) phi(v)
    std::vector<Matrix> rel;
    for (std::size_t i = 0; i < m; i++)
        for (std::size_t j = 0; j < m; j++)
            for (auto& phi : comodule_hom(H, fam[i], fam[j])) {
                std::size_t di = fam[i].d, dj = fam[j].d;
                for (std::size_t a = 0; a < dj; a++)
                    for (std::size_t b = 0; b < di; b++) {
                        Matrix r(K, V, 1);
                        for (std::size_t c = 0; c < di; c++)
                            if (!phi(a, c).is_zero()) r.at(idx(i, c, b), 0) += phi(a, c);
                        for (std::size_t c = 0; c < dj; c++)
                            if (!phi(c, b).is_zero()) r.at(idx(j, a, c), 0) -= phi(c, b);
                        if (!r.is_zero()) rel.push_back(r);
                    }
            }
    Matrix W = rel.empty() ? Matrix(K, V, 0) : hstack(rel);
    Matrix Q = annihilator(W, V);
    std::size_t C = Q.rows();
    auto sec = solve(Q, Matrix::identity(K, C));
    if (!sec) throw TannakaError("no section of the coend quotient");
    Matrix s = *sec;

    Reconstruction R;
    R.presented_dim = V;
    R.relations = V - C;

    // closure: every product of up to `depth` members embeds into a sum of members
    std::vector<std::vector<Embedding>> emb(m, std::vector<Embedding>(m));
    {
        std::vector<std::pair<std::vector<std::size_t>, Comodule>> layer;
        for (std::size_t i = 0; i < m; i++) layer.push_back({{i}, fam[i]});
        for (int k = 2; k <= F.depth; k++) {
            std::vector<std::pair<std::vector<std::size_t>, Comodule>> next;
            for (auto& [word, P] : layer)
                for (std::size_t j = 0; j < m; j++) {
                    Comodule T = tensor_comodule(H, P, fam[j]);
                    auto e = embed(H, T, fam);
                    if (!e) {
                        std::string w;
                        for (auto x : word) w += fam[x].name + " (x) ";
                        throw TannakaError("closure: " + w + fam[j].name + " does not embed into the family");
                    }
                    if (k == 2) emb[word[0]][j] = *e;
                    auto wj = word;
                    wj.push_back(j);
                    next.push_back({wj, T});
                }
            layer = std::move(next);
        }
    }
    auto unit_e = embed(H, trivial_comodule(H), fam);
    if (!unit_e) throw TannakaError("closure: the trivial comodule does not embed into the family");

    // coefficient c_{xi, w} for a functional row xi and vector w on a sum of members
    auto coefficient = [&](const Embedding& e, const Matrix& xi, const Matrix& w, Matrix& out, std::size_t col) {
        for (auto& bl : e.blocks) {
            std::size_t d = fam[bl.member].d;
            for (std::size_t p = 0; p < d; p++) {
                const Scalar& x = xi(0, bl.offset + p);
                if (x.is_zero()) continue;
                for (std::size_t q = 0; q < d; q++) {
                    const Scalar& y = w(bl.offset + q, 0);
                    if (!y.is_zero()) out.at(idx(bl.member, p, q), col) += x * y;
                }
            }
        }
    };

    // structure on V
    Matrix epsV(K, 1, V), canV(K, n, V);
    for (std::size_t i = 0; i < m; i++) {
        std::size_t d = fam[i].d;
        for (std::size_t a = 0; a < d; a++) {
            epsV.set(0, idx(i, a, a), 1);
            for (std::size_t b = 0; b < d; b++)
                for (std::size_t h = 0; h < n; h++) canV.at(h, idx(i, a, b)) = fam[i].rho(h * d + a, b);
        }
    }
    if (!(canV * W).is_zero()) throw TannakaError("canonical map does not vanish on the relations");

    Bialgebra B;
    B.name = "coend";
    B.F = K;
    B.n = C;
    B.grading.assign(C, 0);
    B.eps = epsV * s;
    // left coaction: Delta(t_ab) = sum_k t_kb (x) t_ak, pushed through Q (x) Q
    B.delta = Matrix(K, C * C, C);
    for (std::size_t col = 0; col < C; col++) {
        Matrix X(K, V, V);
        for (std::size_t i = 0; i < m; i++) {
            std::size_t d = fam[i].d;
            for (std::size_t a = 0; a < d; a++)
                for (std::size_t b = 0; b < d; b++) {
                    const Scalar& c = s(idx(i, a, b), col);
                    if (c.is_zero()) continue;
                    for (std::size_t k = 0; k < d; k++) X.at(idx(i, k, b), idx(i, a, k)) += c;
                }
        }
        Matrix Y = Q * X * Q.transpose();
        for (std::size_t p = 0; p < C; p++)
            for (std::size_t q = 0; q < C; q++) B.delta.at(p * C + q, col) = Y(p, q);
    }
    // product of coefficients of M_i and M_j is a coefficient of M_i (x) M_j, re-expressed via its embedding
    Matrix mV(K, V, C * C);
    for (std::size_t x = 0; x < C; x++)
        for (std::size_t y = 0; y < C; y++) {
            std::size_t col = x * C + y;
            for (std::size_t i = 0; i < m; i++)
                for (std::size_t j = 0; j < m; j++) {
                    std::size_t di = fam[i].d, dj = fam[j].d;
                    const Embedding& e = emb[i][j];
                    for (std::size_t a = 0; a < di; a++)
                        for (std::size_t b = 0; b < di; b++) {
                            const Scalar& s1 = s(idx(i, a, b), x);
                            if (s1.is_zero()) continue;
                            for (std::size_t c = 0; c < dj; c++)
                                for (std::size_t d = 0; d < dj; d++) {
                                    const Scalar& s2 = s(idx(j, c, d), y);
                                    if (s2.is_zero()) continue;
                                    Matrix xi = e.left.row(a * dj + c);
                                    Matrix w = e.psi.column(b * dj + d);
                                    Matrix tmp(K, V, 1);
                                    coefficient(e, xi, w, tmp, 0);
                                    Scalar f = s1 * s2;
                                    for (std::size_t r = 0; r < V; r++)
                                        if (!tmp(r, 0).is_zero()) mV.at(r, col) += f * tmp(r, 0);
                                }
                        }
                }
        }
    B.m = Q * mV;
    Matrix uV(K, V, 1);
    coefficient(*unit_e, unit_e->left, unit_e->psi, uV, 0);
    B.u = Q * uV;
    R.B = B;

    auto rep = check_bialgebra(B);
    if (!rep.ok()) R.notes.push_back(std::string("coend fails ") + rep.failing()->name);

    Matrix can = canV * s;
    R.coalgebra_map = H.delta * can == kron(can, can) * B.delta && H.eps * can == B.eps;
    const Bialgebra& ref = reference ? *reference : H;
    R.canonical = can;
    if (ref.n != n) {
        R.notes.push_back("reference dimension differs from the ambient");
        return R;
    }
    R.invertible = C == ref.n && rank(can) == C;
    R.bialgebra_map = ref.delta * can == kron(can, can) * B.delta && ref.eps * can == B.eps &&
                      can * B.m == ref.m * kron(can, can) && can * B.u == ref.u;
    R.isomorphism = R.invertible && R.bialgebra_map && rep.ok();
    return R;
}

RoundTrip round_trip(const Bialgebra& H, int depth) {
    auto rep = check_bialgebra(H);
    if (!rep.ok()) throw TannakaError(H.name + " fails " + rep.failing()->name);
    RoundTrip t;
    t.rec = coend_reconstruct({H, {regular_comodule(H)}, depth}, H);
    t.hopf_in = is_hopf(H);
    t.cohopf_in = is_cohopf(H);
    t.hopf_out = is_hopf(t.rec.B);
    t.cohopf_out = is_cohopf(t.rec.B);
    return t;
}

}  // namespace hopfsmith
