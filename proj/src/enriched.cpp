#include "dk/enriched.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace dk {

namespace {

void check(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

// rank of (A ⊗ B)_n without building the tensor complex
int conv_rank(const ChainComplex& A, const ChainComplex& B, int n) {
    int r = 0;
    for (int p = 0; p <= n; ++p) r += A.rank(p) * B.rank(n - p);
    return r;
}

IntMat ident(int n) { return IntMat::identity(n); }

}  // namespace

void IGraph::validate() const {
    check(nobj >= 1, "IGraph: need at least one object");
    check(static_cast<int>(entry.size()) == nobj, "IGraph: row count mismatch");
    for (int i = 0; i < nobj; ++i) {
        check(static_cast<int>(entry[i].size()) == nobj, "IGraph: column count mismatch");
        for (int j = 0; j < nobj; ++j) {
            check(entry[i][j].T == T, "IGraph: entry truncation mismatch");
            entry[i][j].validate();
        }
    }
}

IGraph unit_graph(int nobj, int T) {
    IGraph U;
    U.nobj = nobj;
    U.T = T;
    U.entry.assign(nobj, std::vector<ChainComplex>(nobj, ChainComplex::zero_complex(T)));
    for (int i = 0; i < nobj; ++i) U.entry[i][i] = ChainComplex::sphere(0, T);
    return U;
}

int graph_summand_offset(const IGraph& G, const IGraph& H, int i, int j, int k, int n) {
    int off = 0;
    for (int m = 0; m < k; ++m) off += conv_rank(G.at(m, j), H.at(i, m), n);
    return off;
}

IGraph graph_tensor(const IGraph& G, const IGraph& H) {
    check(G.nobj == H.nobj && G.T == H.T, "graph_tensor: incompatible graphs");
    IGraph P;
    P.nobj = G.nobj;
    P.T = G.T;
    P.entry.assign(P.nobj, std::vector<ChainComplex>(P.nobj, ChainComplex::zero_complex(P.T)));
    for (int i = 0; i < P.nobj; ++i)
        for (int j = 0; j < P.nobj; ++j) {
            ChainComplex acc = tensor(G.at(0, j), H.at(i, 0));
            for (int k = 1; k < P.nobj; ++k)
                acc = ChainComplex::direct_sum(acc, tensor(G.at(k, j), H.at(i, k)));
            P.entry[i][j] = acc;
        }
    return P;
}

ChainMap graph_associator(const IGraph& G, const IGraph& H, const IGraph& K, int i, int j) {
    IGraph GH = graph_tensor(G, H);
    IGraph HK = graph_tensor(H, K);
    ChainComplex S = graph_tensor(GH, K).at(i, j);
    ChainComplex Tgt = graph_tensor(G, HK).at(i, j);
    int T = G.T, nobj = G.nobj;
    std::vector<IntMat> f;
    f.reserve(T + 1);
    for (int n = 0; n <= T; ++n) {
        IntMat P = IntMat::zero(Tgt.rank(n), S.rank(n));
        for (int l = 0; l < nobj; ++l)
            for (int p = 0; p <= n; ++p) {
                int rK = K.at(i, l).rank(n - p);
                if (rK == 0) continue;
                int src_block = graph_summand_offset(GH, K, i, j, l, n) +
                                tensor_offset(GH.at(l, j), K.at(i, l), n, p);
                for (int k = 0; k < nobj; ++k)
                    for (int q = 0; q <= p; ++q) {
                        int rG = G.at(k, j).rank(q);
                        int rH = H.at(l, k).rank(p - q);
                        if (rG == 0 || rH == 0) continue;
                        int a_base = graph_summand_offset(G, H, l, j, k, p) +
                                     tensor_offset(G.at(k, j), H.at(l, k), p, q);
                        int rHK = HK.at(i, k).rank(n - q);
                        int tgt_block = graph_summand_offset(G, HK, i, j, k, n) +
                                        tensor_offset(G.at(k, j), HK.at(i, k), n, q);
                        int hk_base = graph_summand_offset(H, K, i, k, l, n - q) +
                                      tensor_offset(H.at(l, k), K.at(i, l), n - q, p - q);
                        for (int g = 0; g < rG; ++g)
                            for (int h = 0; h < rH; ++h)
                                for (int c = 0; c < rK; ++c) {
                                    int src = src_block + (a_base + g * rH + h) * rK + c;
                                    int tgt = tgt_block + g * rHK + hk_base + h * rK + c;
                                    P.at(tgt, src) = 1;
                                }
                    }
            }
        f.push_back(P);
    }
    return ChainMap{S, Tgt, f};
}

IntMat ICategory::comp_block(int i, int j, int k, int p, int q) const {
    const ChainMap& c = comp[i][j][k];
    return c.f[p + q].submatrix(0, tensor_offset(O.at(j, k), O.at(i, j), p + q, p),
                                O.at(i, k).rank(p + q), O.at(j, k).rank(p) * O.at(i, j).rank(q));
}

void ICategory::validate() const {
    O.validate();
    int n = O.nobj, T = O.T;
    check(static_cast<int>(comp.size()) == n, "ICategory: comp size");
    check(static_cast<int>(unit.size()) == n, "ICategory: unit size");
    for (int i = 0; i < n; ++i) {
        check(static_cast<int>(comp[i].size()) == n, "ICategory: comp size");
        for (int j = 0; j < n; ++j) {
            check(static_cast<int>(comp[i][j].size()) == n, "ICategory: comp size");
            for (int k = 0; k < n; ++k) {
                const ChainMap& c = comp[i][j][k];
                check(same_shape(c.source, tensor(O.at(j, k), O.at(i, j))),
                      "ICategory: composition source shape");
                check(same_shape(c.target, O.at(i, k)), "ICategory: composition target shape");
                c.validate();
            }
        }
        check(unit[i].rows() == O.at(i, i).rank(0) && unit[i].cols() == 1,
              "ICategory: unit shape");
    }
    // unit laws
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int p = 0; p <= T; ++p) {
                int r = O.at(i, j).rank(p);
                if (r == 0) continue;
                IntMat right = comp_block(i, i, j, p, 0) * IntMat::kronecker(ident(r), unit[i]);
                check(right == ident(r), "ICategory: right unit law fails");
                IntMat left = comp_block(i, j, j, 0, p) * IntMat::kronecker(unit[j], ident(r));
                check(left == ident(r), "ICategory: left unit law fails");
            }
    // associativity
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    for (int a = 0; a <= T; ++a)
                        for (int b = 0; a + b <= T; ++b)
                            for (int c = 0; a + b + c <= T; ++c) {
                                int ra = O.at(k, l).rank(a);
                                int rb = O.at(j, k).rank(b);
                                int rc = O.at(i, j).rank(c);
                                if (ra == 0 || rb == 0 || rc == 0) continue;
                                IntMat lhs = comp_block(i, j, l, a + b, c) *
                                             IntMat::kronecker(comp_block(j, k, l, a, b), ident(rc));
                                IntMat rhs = comp_block(i, k, l, a, b + c) *
                                             IntMat::kronecker(ident(ra), comp_block(i, j, k, b, c));
                                check(lhs == rhs, "ICategory: associativity fails");
                            }
}

CheckReport validate_category(const ICategory& C) {
    try {
        C.validate();
    } catch (const std::exception& e) {
        return CheckReport{false, e.what()};
    }
    return CheckReport{true, ""};
}

ICategory category_from_monoid(const DGAlgebra& R) {
    ICategory C;
    C.O.nobj = 1;
    C.O.T = R.R.T;
    C.O.entry = {{R.R}};
    C.comp = {{{R.mu_chain_map()}}};
    C.unit = {R.unit};
    return C;
}

DGAlgebra monoid_from_category(const ICategory& C) {
    check(C.O.nobj == 1, "monoid_from_category: need a single object");
    DGAlgebra R;
    R.R = C.O.at(0, 0);
    int T = R.R.T;
    R.mult.assign(T + 1, {});
    for (int p = 0; p <= T; ++p)
        for (int q = 0; p + q <= T; ++q) R.mult[p].push_back(C.comp_block(0, 0, 0, p, q));
    R.unit = C.unit[0];
    return R;
}

namespace {

// A composable path i → j stored as a word in composition order: the first
// letter is the edge arriving at j, the last the edge leaving i.  With that
// ordering, composition is plain concatenation of words and the edgewise
// differential with prefix Koszul signs makes it a sign-free chain map.
// flat = [d_1, k_1, d_2, k_2, ...]: degree and source object of each letter.
struct PathShape {
    std::vector<int> flat;
    std::vector<int> objs;   // j = b_1, then the source of each letter; ends at i
    std::vector<int> degs;   // d_1 .. d_m in word order
    std::vector<int> ranks;  // generator ranks along the word
    int offset = 0;
    int size = 1;
};

struct PathTable {
    // shapes[i][j][n]: all paths i → j of total degree n, in enumeration order
    std::vector<std::vector<std::vector<std::vector<PathShape>>>> shapes;
    // offset lookup keyed by the flat encoding
    std::vector<std::vector<std::vector<std::map<std::vector<int>, int>>>> index;

    int rank(int i, int j, int n) const {
        int r = 0;
        for (const PathShape& s : shapes[i][j][n]) r += s.size;
        return r;
    }
};

PathTable build_paths(const IGraph& gen) {
    int nobj = gen.nobj, T = gen.T;
    PathTable t;
    t.shapes.assign(nobj, std::vector<std::vector<std::vector<PathShape>>>(
                              nobj, std::vector<std::vector<PathShape>>(T + 1)));
    t.index.assign(nobj, std::vector<std::vector<std::map<std::vector<int>, int>>>(
                             nobj, std::vector<std::map<std::vector<int>, int>>(T + 1)));
    for (int n = 0; n <= T; ++n)
        for (int i = 0; i < nobj; ++i)
            for (int j = 0; j < nobj; ++j) {
                std::vector<PathShape>& out = t.shapes[i][j][n];
                int off = 0;
                if (n == 0) {
                    if (i == j) {
                        PathShape empty;
                        empty.objs = {i};
                        out.push_back(empty);
                        t.index[i][j][0][empty.flat] = 0;
                        off = 1;
                    }
                } else {
                    for (int d1 = 1; d1 <= n; ++d1)
                        for (int k1 = 0; k1 < nobj; ++k1) {
                            int r1 = gen.at(k1, j).rank(d1);
                            if (r1 == 0) continue;
                            for (const PathShape& tail : t.shapes[i][k1][n - d1]) {
                                PathShape s;
                                s.flat = {d1, k1};
                                s.flat.insert(s.flat.end(), tail.flat.begin(), tail.flat.end());
                                s.objs = {j};
                                s.objs.insert(s.objs.end(), tail.objs.begin(), tail.objs.end());
                                s.degs = {d1};
                                s.degs.insert(s.degs.end(), tail.degs.begin(), tail.degs.end());
                                s.ranks = {r1};
                                s.ranks.insert(s.ranks.end(), tail.ranks.begin(), tail.ranks.end());
                                s.size = r1 * tail.size;
                                s.offset = off;
                                t.index[i][j][n][s.flat] = off;
                                off += s.size;
                                out.push_back(s);
                            }
                        }
                }
            }
    return t;
}

}  // namespace

ICategory free_category(const IGraph& gen) {
    gen.validate();
    int nobj = gen.nobj, T = gen.T;
    for (int i = 0; i < nobj; ++i)
        for (int j = 0; j < nobj; ++j)
            check(gen.at(i, j).rank(0) == 0, "free_category: generators must vanish in degree 0");

    PathTable t = build_paths(gen);

    ICategory C;
    C.O.nobj = nobj;
    C.O.T = T;
    C.O.entry.assign(nobj, std::vector<ChainComplex>(nobj));
    for (int i = 0; i < nobj; ++i)
        for (int j = 0; j < nobj; ++j) {
            ChainComplex E;
            E.T = T;
            E.ranks.assign(T + 1, 0);
            for (int n = 0; n <= T; ++n) E.ranks[n] = t.rank(i, j, n);
            E.d.assign(T + 1, IntMat::zero(0, 0));
            for (int n = 1; n <= T; ++n) {
                IntMat D = IntMat::zero(E.ranks[n - 1], E.ranks[n]);
                for (const PathShape& s : t.shapes[i][j][n]) {
                    int m = static_cast<int>(s.degs.size());
                    int prefix_deg = 0;
                    for (int e = 0; e < m; ++e) {
                        int de = s.degs[e];
                        int sign = (prefix_deg % 2 == 0) ? 1 : -1;
                        prefix_deg += de;
                        const ChainComplex& edge = gen.at(s.objs[e + 1], s.objs[e]);
                        if (edge.rank(de - 1) == 0) continue;
                        std::vector<int> tflat = s.flat;
                        tflat[2 * e] = de - 1;
                        auto it = t.index[i][j][n - 1].find(tflat);
                        check(it != t.index[i][j][n - 1].end(),
                              "free_category: missing differential target shape");
                        int toff = it->second;
                        const IntMat& dmat = edge.d[de];
                        int pre = 1, post = 1;
                        for (int u = 0; u < e; ++u) pre *= s.ranks[u];
                        for (int u = e + 1; u < m; ++u) post *= s.ranks[u];
                        int re = s.ranks[e], rt = edge.rank(de - 1);
                        for (int a = 0; a < pre; ++a)
                            for (int x = 0; x < re; ++x)
                                for (int y = 0; y < rt; ++y) {
                                    if (dmat.at(y, x) == 0) continue;
                                    for (int b = 0; b < post; ++b) {
                                        int src = s.offset + (a * re + x) * post + b;
                                        int tgt = toff + (a * rt + y) * post + b;
                                        D.at(tgt, src) += Int(sign) * dmat.at(y, x);
                                    }
                                }
                    }
                }
                E.d[n] = D;
            }
            C.O.entry[i][j] = E;
        }

    // composition: concatenate words, the outgoing factor first
    C.comp.assign(nobj, std::vector<std::vector<ChainMap>>(nobj, std::vector<ChainMap>(nobj)));
    for (int i = 0; i < nobj; ++i)
        for (int j = 0; j < nobj; ++j)
            for (int k = 0; k < nobj; ++k) {
                ChainComplex src = tensor(C.O.at(j, k), C.O.at(i, j));
                std::vector<IntMat> f;
                for (int n = 0; n <= T; ++n) {
                    IntMat P = IntMat::zero(C.O.at(i, k).rank(n), src.rank(n));
                    for (int p = 0; p <= n; ++p) {
                        int q = n - p;
                        int rq = C.O.at(i, j).rank(q);
                        int base = tensor_offset(C.O.at(j, k), C.O.at(i, j), n, p);
                        for (const PathShape& g : t.shapes[j][k][p])
                            for (const PathShape& fsh : t.shapes[i][j][q]) {
                                std::vector<int> cflat = g.flat;
                                cflat.insert(cflat.end(), fsh.flat.begin(), fsh.flat.end());
                                auto it = t.index[i][k][n].find(cflat);
                                check(it != t.index[i][k][n].end(),
                                      "free_category: missing concatenation shape");
                                int coff = it->second;
                                for (int fl = 0; fl < fsh.size; ++fl)
                                    for (int gl = 0; gl < g.size; ++gl) {
                                        int row = coff + gl * fsh.size + fl;
                                        int col = base + (g.offset + gl) * rq + fsh.offset + fl;
                                        P.at(row, col) = 1;
                                    }
                            }
                    }
                    f.push_back(P);
                }
                C.comp[i][j][k] = ChainMap{src, C.O.at(i, k), f};
            }

    C.unit.assign(nobj, IntMat::zero(0, 0));
    for (int i = 0; i < nobj; ++i) {
        IntMat u = IntMat::zero(C.O.at(i, i).rank(0), 1);
        u.at(t.index[i][i][0].at({}), 0) = 1;
        C.unit[i] = u;
    }
    return C;
}

IntMat OModule::act_block(int i, int j, int p, int q) const {
    const ChainMap& a = act[i][j];
    return a.f[p + q].submatrix(0, tensor_offset(M[j], O.O.at(i, j), p + q, p),
                                M[i].rank(p + q), M[j].rank(p) * O.O.at(i, j).rank(q));
}

void OModule::validate() const {
    O.validate();
    int n = O.O.nobj, T = O.O.T;
    check(static_cast<int>(M.size()) == n, "OModule: object count");
    check(static_cast<int>(act.size()) == n, "OModule: action size");
    for (int i = 0; i < n; ++i) {
        check(M[i].T == T, "OModule: truncation mismatch");
        M[i].validate();
        check(static_cast<int>(act[i].size()) == n, "OModule: action size");
        for (int j = 0; j < n; ++j) {
            const ChainMap& a = act[i][j];
            check(same_shape(a.source, tensor(M[j], O.O.at(i, j))), "OModule: action source shape");
            check(same_shape(a.target, M[i]), "OModule: action target shape");
            a.validate();
        }
    }
    for (int i = 0; i < n; ++i)
        for (int p = 0; p <= T; ++p) {
            int r = M[i].rank(p);
            if (r == 0) continue;
            IntMat u = act_block(i, i, p, 0) * IntMat::kronecker(ident(r), O.unit[i]);
            check(u == ident(r), "OModule: unit law fails");
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int a = 0; a <= T; ++a)
                    for (int b = 0; a + b <= T; ++b)
                        for (int c = 0; a + b + c <= T; ++c) {
                            int ra = M[k].rank(a);
                            int rb = O.O.at(j, k).rank(b);
                            int rc = O.O.at(i, j).rank(c);
                            if (ra == 0 || rb == 0 || rc == 0) continue;
                            IntMat lhs = act_block(i, j, a + b, c) *
                                         IntMat::kronecker(act_block(j, k, a, b), ident(rc));
                            IntMat rhs = act_block(i, k, a, b + c) *
                                         IntMat::kronecker(ident(ra), O.comp_block(i, j, k, b, c));
                            check(lhs == rhs, "OModule: associativity fails");
                        }
}

OModule free_omodule(const ICategory& O, int j) {
    check(0 <= j && j < O.O.nobj, "free_omodule: object out of range");
    OModule F;
    F.O = O;
    int n = O.O.nobj;
    F.M.resize(n);
    F.act.assign(n, std::vector<ChainMap>(n));
    for (int a = 0; a < n; ++a) F.M[a] = O.O.at(a, j);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) F.act[a][b] = O.comp[a][b][j];
    return F;
}

YonedaData yoneda(const OModule& M, int j) {
    const ICategory& O = M.O;
    int nobj = O.O.nobj, T = O.O.T;
    OModule F = free_omodule(O, j);

    // unknowns: entries of phi_i[n] : F(i)_n -> M(i)_n, column-major per block
    std::vector<std::vector<int>> base(nobj, std::vector<int>(T + 1, 0));
    int cols = 0;
    for (int i = 0; i < nobj; ++i)
        for (int n = 0; n <= T; ++n) {
            base[i][n] = cols;
            cols += M.M[i].rank(n) * F.M[i].rank(n);
        }
    auto col_of = [&](int i, int n, int r, int c) {
        return base[i][n] + c * M.M[i].rank(n) + r;
    };

    int rows = 0;
    for (int i = 0; i < nobj; ++i)
        for (int n = 1; n <= T; ++n) rows += M.M[i].rank(n - 1) * F.M[i].rank(n);
    for (int i = 0; i < nobj; ++i)
        for (int b = 0; b < nobj; ++b)
            for (int n = 0; n <= T; ++n)
                rows += M.M[i].rank(n) * conv_rank(F.M[b], O.O.at(i, b), n);

    IntMat A = IntMat::zero(rows, cols);
    int row = 0;
    // chain-map constraints: d_M phi = phi d_F
    for (int i = 0; i < nobj; ++i)
        for (int n = 1; n <= T; ++n) {
            const IntMat& dM = M.M[i].d[n];
            const IntMat& dF = F.M[i].d[n];
            for (int r = 0; r < M.M[i].rank(n - 1); ++r)
                for (int c = 0; c < F.M[i].rank(n); ++c) {
                    for (int m = 0; m < M.M[i].rank(n); ++m)
                        if (dM.at(r, m) != 0) A.at(row, col_of(i, n, m, c)) += dM.at(r, m);
                    for (int c2 = 0; c2 < F.M[i].rank(n - 1); ++c2)
                        if (dF.at(c2, c) != 0) A.at(row, col_of(i, n - 1, r, c2)) -= dF.at(c2, c);
                    ++row;
                }
        }
    // equivariance: phi_i ∘ act^F = act^M ∘ (phi_b ⊗ id)
    for (int i = 0; i < nobj; ++i)
        for (int b = 0; b < nobj; ++b)
            for (int n = 0; n <= T; ++n) {
                const IntMat& AF = F.act[i][b].f[n];
                const IntMat& AM = M.act[i][b].f[n];
                for (int r = 0; r < M.M[i].rank(n); ++r)
                    for (int p = 0; p <= n; ++p) {
                        int q = n - p;
                        int rO = O.O.at(i, b).rank(q);
                        int toffF = tensor_offset(F.M[b], O.O.at(i, b), n, p);
                        int toffM = tensor_offset(M.M[b], O.O.at(i, b), n, p);
                        for (int a = 0; a < F.M[b].rank(p); ++a)
                            for (int e = 0; e < rO; ++e) {
                                int tc = toffF + a * rO + e;
                                for (int c = 0; c < F.M[i].rank(n); ++c)
                                    if (AF.at(c, tc) != 0)
                                        A.at(row, col_of(i, n, r, c)) += AF.at(c, tc);
                                for (int m = 0; m < M.M[b].rank(p); ++m) {
                                    const Int& v = AM.at(r, toffM + m * rO + e);
                                    if (v != 0) A.at(row, col_of(b, p, m, a)) -= v;
                                }
                                ++row;
                            }
                    }
            }
    check(row == rows, "yoneda: constraint row count mismatch");

    YonedaData Y{kernel_basis(A), IntMat::zero(M.M[j].rank(0), 0)};
    int nb = Y.hom_basis.cols();
    IntMat ev = IntMat::zero(M.M[j].rank(0), nb);
    for (int bb = 0; bb < nb; ++bb)
        for (int r = 0; r < M.M[j].rank(0); ++r) {
            Int v = 0;
            for (int c = 0; c < F.M[j].rank(0); ++c)
                v += Y.hom_basis.at(col_of(j, 0, r, c), bb) * O.unit[j].at(c, 0);
            ev.at(r, bb) = v;
        }
    Y.evaluation = ev;
    return Y;
}

void ICategoryMap::validate() const {
    O.validate();
    R.validate();
    int n = O.O.nobj, T = O.O.T;
    check(R.O.nobj == n && R.O.T == T, "ICategoryMap: object/truncation mismatch");
    check(static_cast<int>(f.size()) == n, "ICategoryMap: component size");
    for (int i = 0; i < n; ++i) {
        check(static_cast<int>(f[i].size()) == n, "ICategoryMap: component size");
        for (int j = 0; j < n; ++j) {
            check(same_shape(f[i][j].source, O.O.at(i, j)), "ICategoryMap: source shape");
            check(same_shape(f[i][j].target, R.O.at(i, j)), "ICategoryMap: target shape");
            f[i][j].validate();
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                ChainMap lhs = compose(f[i][k], O.comp[i][j][k]);
                ChainMap rhs = compose(R.comp[i][j][k], tensor_of_maps(f[j][k], f[i][j]));
                check(maps_equal(lhs, rhs), "ICategoryMap: composition not preserved");
            }
    for (int i = 0; i < n; ++i)
        check(f[i][i].f[0] * O.unit[i] == R.unit[i], "ICategoryMap: unit not preserved");
}

ICategoryMap ICategoryMap::identity_map(const ICategory& O) {
    ICategoryMap psi;
    psi.O = O;
    psi.R = O;
    int n = O.O.nobj;
    psi.f.assign(n, std::vector<ChainMap>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) psi.f[i][j] = ChainMap::identity(O.O.at(i, j));
    return psi;
}

OModule restrict_omodule(const ICategoryMap& psi, const OModule& Mr) {
    int n = psi.O.O.nobj;
    check(static_cast<int>(Mr.M.size()) == n, "restrict_omodule: object count mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            check(same_shape(Mr.O.O.at(i, j), psi.R.O.at(i, j)),
                  "restrict_omodule: module not over the target category");
    OModule res;
    res.O = psi.O;
    res.M = Mr.M;
    res.act.assign(n, std::vector<ChainMap>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            res.act[i][j] = compose(
                Mr.act[i][j], tensor_of_maps(ChainMap::identity(Mr.M[j]), psi.f[i][j]));
    return res;
}

namespace {

int ambient_offset(const OModule& M, const ICategory& R, int i, int j, int n) {
    int off = 0;
    for (int m = 0; m < j; ++m) off += conv_rank(M.M[m], R.O.at(i, m), n);
    return off;
}

void add_block(IntMat& dst, int r0, int c0, const IntMat& B, int sign) {
    for (int r = 0; r < B.rows(); ++r)
        for (int c = 0; c < B.cols(); ++c)
            if (B.at(r, c) != 0) dst.at(r0 + r, c0 + c) += Int(sign) * B.at(r, c);
}

}  // namespace

ExtendedOModule extend_omodule(const ICategoryMap& psi, const OModule& M) {
    const ICategory& R = psi.R;
    int nobj = psi.O.O.nobj, T = psi.O.O.T;
    for (int i = 0; i < nobj; ++i)
        for (int j = 0; j < nobj; ++j)
            check(same_shape(M.O.O.at(i, j), psi.O.O.at(i, j)),
                  "extend_omodule: module not over the source category");

    ExtendedOModule E;
    E.ambient.resize(nobj);
    for (int i = 0; i < nobj; ++i) {
        ChainComplex acc = tensor(M.M[0], R.O.at(i, 0));
        for (int j = 1; j < nobj; ++j)
            acc = ChainComplex::direct_sum(acc, tensor(M.M[j], R.O.at(i, j)));
        E.ambient[i] = acc;
    }

    E.Q.resize(nobj);
    E.groups.assign(nobj, {});
    for (int i = 0; i < nobj; ++i) {
        std::vector<IntMat> rel(T + 1);
        for (int n = 0; n <= T; ++n) {
            std::vector<IntMat> blocks;
            int amb = E.ambient[i].rank(n);
            for (int j = 0; j < nobj; ++j)
                for (int k = 0; k < nobj; ++k)
                    for (int p = 0; p <= n; ++p)
                        for (int q = 0; p + q <= n; ++q) {
                            int s = n - p - q;
                            int w = M.M[k].rank(p) * psi.O.O.at(j, k).rank(q) *
                                    R.O.at(i, j).rank(s);
                            if (w == 0) continue;
                            IntMat col = IntMat::zero(amb, w);
                            IntMat t1 = IntMat::kronecker(M.act_block(j, k, p, q),
                                                          ident(R.O.at(i, j).rank(s)));
                            add_block(col,
                                      ambient_offset(M, R, i, j, n) +
                                          tensor_offset(M.M[j], R.O.at(i, j), n, p + q),
                                      0, t1, +1);
                            IntMat cb = R.comp_block(i, j, k, q, s) *
                                        IntMat::kronecker(psi.f[j][k].f[q],
                                                          ident(R.O.at(i, j).rank(s)));
                            IntMat t2 = IntMat::kronecker(ident(M.M[k].rank(p)), cb);
                            add_block(col,
                                      ambient_offset(M, R, i, k, n) +
                                          tensor_offset(M.M[k], R.O.at(i, k), n, p),
                                      0, t2, -1);
                            blocks.push_back(col);
                        }
            rel[n] = IntMat::hstack(blocks, amb);
        }
        PresentedComplex Q;
        Q.T = T;
        Q.gens.assign(T + 1, 0);
        for (int n = 0; n <= T; ++n) Q.gens[n] = E.ambient[i].rank(n);
        Q.rel = rel;
        Q.d = E.ambient[i].d;
        Q.validate();
        E.Q[i] = Q;
        for (int n = 0; n <= T; ++n) E.groups[i].push_back(cokernel(rel[n]));
    }

    // R-action on generators: (m ⊗ r) · r' = m ⊗ (r ∘ r')
    E.act.assign(nobj, std::vector<ChainMap>(nobj));
    for (int i2 = 0; i2 < nobj; ++i2)
        for (int i = 0; i < nobj; ++i) {
            ChainComplex src = tensor(E.ambient[i], R.O.at(i2, i));
            std::vector<IntMat> f(T + 1);
            for (int n = 0; n <= T; ++n) {
                IntMat F = IntMat::zero(E.ambient[i2].rank(n), src.rank(n));
                for (int j = 0; j < nobj; ++j)
                    for (int p = 0; p <= n; ++p)
                        for (int q = 0; p + q <= n; ++q) {
                            int s = n - p - q, m = p + q;
                            int rM = M.M[j].rank(p);
                            int rq = R.O.at(i, j).rank(q);
                            int rE = R.O.at(i2, i).rank(s);
                            int rT = R.O.at(i2, j).rank(q + s);
                            if (rM == 0 || rq == 0 || rE == 0 || rT == 0) continue;
                            IntMat cb = R.comp_block(i2, i, j, q, s);
                            int row0 = ambient_offset(M, R, i2, j, n) +
                                       tensor_offset(M.M[j], R.O.at(i2, j), n, p);
                            int colg = ambient_offset(M, R, i, j, m) +
                                       tensor_offset(M.M[j], R.O.at(i, j), m, p);
                            int colt = tensor_offset(E.ambient[i], R.O.at(i2, i), n, m);
                            for (int mi = 0; mi < rM; ++mi)
                                for (int a = 0; a < rq; ++a)
                                    for (int e = 0; e < rE; ++e)
                                        for (int b = 0; b < rT; ++b) {
                                            const Int& v = cb.at(b, a * rE + e);
                                            if (v == 0) continue;
                                            int rr = row0 + mi * rT + b;
                                            int cc = colt + (colg + mi * rq + a) * rE + e;
                                            F.at(rr, cc) += v;
                                        }
                        }
                f[n] = F;
            }
            E.act[i2][i] = ChainMap{src, E.ambient[i2], f};
            E.act[i2][i].validate();
        }

    // the action descends to the coequalizer
    for (int i2 = 0; i2 < nobj; ++i2)
        for (int i = 0; i < nobj; ++i)
            for (int m = 0; m <= T; ++m)
                for (int s = 0; m + s <= T; ++s) {
                    int rE = R.O.at(i2, i).rank(s);
                    int rc = E.Q[i].rel[m].cols();
                    if (rE == 0 || rc == 0) continue;
                    int n = m + s;
                    IntMat K = IntMat::zero(tensor(E.ambient[i], R.O.at(i2, i)).rank(n), rc * rE);
                    K.set_block(tensor_offset(E.ambient[i], R.O.at(i2, i), n, m), 0,
                                IntMat::kronecker(E.Q[i].rel[m], ident(rE)));
                    IntMat img = E.act[i2][i].f[n] * K;
                    if (img.is_zero()) continue;
                    check(solve(E.Q[i2].rel[n], img).has_value(),
                          "extend_omodule: action does not descend to the coequalizer");
                }
    return E;
}

std::vector<std::vector<IntMat>> extension_unit_omodule(const ICategoryMap& psi, const OModule& M) {
    const ICategory& R = psi.R;
    int nobj = psi.O.O.nobj, T = psi.O.O.T;
    std::vector<std::vector<IntMat>> u(nobj);
    for (int i = 0; i < nobj; ++i) {
        std::vector<int> amb(T + 1, 0);
        for (int n = 0; n <= T; ++n)
            for (int j = 0; j < nobj; ++j) amb[n] += conv_rank(M.M[j], R.O.at(i, j), n);
        u[i].resize(T + 1, IntMat::zero(0, 0));
        for (int n = 0; n <= T; ++n) {
            IntMat U = IntMat::zero(amb[n], M.M[i].rank(n));
            int r0 = ambient_offset(M, R, i, i, n) + tensor_offset(M.M[i], R.O.at(i, i), n, n);
            U.set_block(r0, 0, IntMat::kronecker(ident(M.M[i].rank(n)), R.unit[i]));
            u[i][n] = U;
        }
    }
    return u;
}

CheckReport enriched_adjunction_check(const ICategoryMap& psi, int j) {
    try {
        psi.validate();
        int nobj = psi.O.O.nobj, T = psi.O.O.T;
        check(0 <= j && j < nobj, "enriched_adjunction_check: object out of range");
        const ICategory& R = psi.R;

        // counit triangle on the representable R-module F_j
        OModule N = free_omodule(R, j);
        OModule RN = restrict_omodule(psi, N);
        ExtendedOModule E = extend_omodule(psi, RN);
        std::vector<std::vector<IntMat>> U = extension_unit_omodule(psi, RN);
        for (int i = 0; i < nobj; ++i) {
            std::vector<IntMat> cf(T + 1);
            for (int n = 0; n <= T; ++n) {
                std::vector<IntMat> parts;
                for (int k = 0; k < nobj; ++k) parts.push_back(N.act[i][k].f[n]);
                cf[n] = IntMat::hstack(parts, N.M[i].rank(n));
            }
            ChainMap counit{E.ambient[i], N.M[i], cf};
            counit.validate();
            for (int n = 0; n <= T; ++n) {
                check((cf[n] * E.Q[i].rel[n]).is_zero(),
                      "enriched_adjunction_check: counit does not kill relations");
                check(cf[n] * U[i][n] == ident(N.M[i].rank(n)),
                      "enriched_adjunction_check: counit triangle fails");
            }
        }

        // unit triangle through extend(F_j^O) ≅ F_j^R
        OModule MO = free_omodule(psi.O, j);
        ExtendedOModule EM = extend_omodule(psi, MO);
        std::vector<std::vector<IntMat>> UM = extension_unit_omodule(psi, MO);
        for (int i = 0; i < nobj; ++i) {
            std::vector<IntMat> th(T + 1);
            for (int n = 0; n <= T; ++n) {
                std::vector<IntMat> parts;
                for (int k = 0; k < nobj; ++k) {
                    ChainMap blk = compose(
                        R.comp[i][k][j],
                        tensor_of_maps(psi.f[k][j], ChainMap::identity(R.O.at(i, k))));
                    parts.push_back(blk.f[n]);
                }
                th[n] = IntMat::hstack(parts, R.O.at(i, j).rank(n));
            }
            PresentedMap theta{EM.Q[i], PresentedComplex::from_chain(R.O.at(i, j)), th};
            theta.validate();
            check(is_degreewise_iso(theta),
                  "enriched_adjunction_check: extension of a representable is not representable");
            for (int n = 0; n <= T; ++n)
                check(th[n] * UM[i][n] == psi.f[i][j].f[n],
                      "enriched_adjunction_check: unit triangle fails");
        }
    } catch (const std::exception& e) {
        return CheckReport{false, e.what()};
    }
    return CheckReport{true, ""};
}

CheckReport enriched_quillen_spot_check(const ICategoryMap& psi) {
    try {
        psi.validate();
        int nobj = psi.O.O.nobj;
        for (int i = 0; i < nobj; ++i)
            for (int j = 0; j < nobj; ++j)
                check(is_quasi_iso(psi.f[i][j]),
                      "enriched_quillen_spot_check: map is not a pointwise quasi-isomorphism");
        for (int j = 0; j < nobj; ++j) {
            OModule MO = free_omodule(psi.O, j);
            ExtendedOModule EM = extend_omodule(psi, MO);
            std::vector<std::vector<IntMat>> UM = extension_unit_omodule(psi, MO);
            for (int i = 0; i < nobj; ++i) {
                PresentedMap unit{PresentedComplex::from_chain(psi.O.O.at(i, j)), EM.Q[i],
                                  UM[i]};
                unit.validate();
                std::ostringstream where;
                where << "enriched_quillen_spot_check: unit not a quasi-isomorphism at F_" << j
                      << ", object " << i;
                check(is_quasi_iso(unit), where.str());
            }
        }
    } catch (const std::exception& e) {
        return CheckReport{false, e.what()};
    }
    return CheckReport{true, ""};
}

}  // namespace dk
