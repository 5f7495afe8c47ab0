#include "dk/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dk {

namespace {

void check(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

IntMat solved(const IntMat& A, const IntMat& B, const char* what) {
    auto X = solve(A, B);
    check(X.has_value(), std::string(what) + ": integer solve failed");
    return *X;
}

// Zero-initialized multiplication table with the shapes of a product on C.
std::vector<std::vector<IntMat>> make_mult_table(const ChainComplex& C) {
    std::vector<std::vector<IntMat>> mult(C.T + 1);
    for (int p = 0; p <= C.T; ++p) {
        mult[p].resize(C.T - p + 1);
        for (int q = 0; p + q <= C.T; ++q)
            mult[p][q] = IntMat::zero(C.rank(p + q), C.rank(p) * C.rank(q));
    }
    return mult;
}

}  // namespace

ChainMap DGAlgebra::mu_chain_map() const {
    ChainMap m;
    m.source = tensor(R, R);
    m.target = R;
    m.f.resize(R.T + 1);
    for (int n = 0; n <= R.T; ++n) {
        m.f[n] = IntMat::zero(R.rank(n), m.source.rank(n));
        for (int p = 0; p <= n; ++p)
            m.f[n].set_block(0, tensor_offset(R, R, n, p), mu(p, n - p));
    }
    return m;
}

void DGAlgebra::validate() const {
    R.validate();
    check(static_cast<int>(mult.size()) == R.T + 1, "dg algebra: multiplication table has wrong size");
    for (int p = 0; p <= R.T; ++p) {
        check(static_cast<int>(mult[p].size()) == R.T - p + 1,
              "dg algebra: multiplication table has wrong size");
        for (int q = 0; p + q <= R.T; ++q)
            check(mult[p][q].rows() == R.rank(p + q) && mult[p][q].cols() == R.rank(p) * R.rank(q),
                  "dg algebra: multiplication block has wrong shape");
    }
    check(unit.rows() == R.rank(0) && unit.cols() == 1, "dg algebra: unit has wrong shape");
    // Leibniz rule == the bundled multiplication is a chain map.
    mu_chain_map().validate();
    for (int n = 0; n <= R.T; ++n) {
        IntMat id = IntMat::identity(R.rank(n));
        check(mu(0, n) * IntMat::kronecker(unit, id) == id, "dg algebra: left unit fails");
        check(mu(n, 0) * IntMat::kronecker(id, unit) == id, "dg algebra: right unit fails");
    }
    for (int p = 0; p <= R.T; ++p)
        for (int q = 0; p + q <= R.T; ++q)
            for (int r = 0; p + q + r <= R.T; ++r) {
                IntMat lhs = mu(p + q, r) * IntMat::kronecker(mu(p, q), IntMat::identity(R.rank(r)));
                IntMat rhs = mu(p, q + r) * IntMat::kronecker(IntMat::identity(R.rank(p)), mu(q, r));
                check(lhs == rhs, "dg algebra: associativity fails");
            }
}

SimplicialMap SimplicialRing::mu_simplicial_map() const {
    SimplicialMap m;
    m.source = tensor(A, A);
    m.target = A;
    m.f = mult;
    return m;
}

void SimplicialRing::validate() const {
    A.validate();
    check(static_cast<int>(mult.size()) == A.T + 1 && static_cast<int>(unit.size()) == A.T + 1,
          "simplicial ring: per-level data has wrong size");
    for (int n = 0; n <= A.T; ++n) {
        int r = A.rank(n);
        check(mult[n].rows() == r && mult[n].cols() == r * r,
              "simplicial ring: multiplication has wrong shape");
        check(unit[n].rows() == r && unit[n].cols() == 1, "simplicial ring: unit has wrong shape");
        IntMat id = IntMat::identity(r);
        check(mult[n] * IntMat::kronecker(mult[n], id) ==
                  mult[n] * IntMat::kronecker(id, mult[n]),
              "simplicial ring: associativity fails");
        check(mult[n] * IntMat::kronecker(unit[n], id) == id, "simplicial ring: left unit fails");
        check(mult[n] * IntMat::kronecker(id, unit[n]) == id, "simplicial ring: right unit fails");
    }
    // Faces and degeneracies are ring homomorphisms...
    mu_simplicial_map().validate();
    // ...including on units.
    for (int n = 1; n <= A.T; ++n)
        for (int i = 0; i <= n; ++i)
            check(A.d(n, i) * unit[n] == unit[n - 1], "simplicial ring: face drops the unit");
    for (int n = 0; n < A.T; ++n)
        for (int i = 0; i <= n; ++i)
            check(A.s(n, i) * unit[n] == unit[n + 1], "simplicial ring: degeneracy drops the unit");
}

DGAlgebra dga_integers(int T) {
    DGAlgebra A;
    A.R = ChainComplex::sphere(0, T);
    A.mult = make_mult_table(A.R);
    A.mult[0][0] = IntMat::identity(1);
    A.unit = IntMat::identity(1);
    return A;
}

DGAlgebra square_zero(const ChainComplex& C) {
    C.validate();
    int T = C.T;
    DGAlgebra A;
    A.R.T = T;
    A.R.ranks.resize(T + 1);
    A.R.ranks[0] = 1 + C.rank(0);
    for (int n = 1; n <= T; ++n) A.R.ranks[n] = C.rank(n);
    A.R.d.resize(T + 1);
    for (int n = 1; n <= T; ++n) {
        A.R.d[n] = IntMat::zero(A.R.rank(n - 1), A.R.rank(n));
        A.R.d[n].set_block(n == 1 ? 1 : 0, 0, C.d[n]);
    }
    A.mult = make_mult_table(A.R);
    int r0 = A.R.rank(0);
    IntMat& m00 = A.mult[0][0];
    m00.at(0, 0) = 1;
    for (int b = 1; b < r0; ++b) {
        m00.at(b, b) = 1;           // unit · x_b
        m00.at(b, b * r0) = 1;      // x_b · unit
    }
    for (int q = 1; q <= T; ++q) {
        IntMat& m = A.mult[0][q];
        for (int j = 0; j < C.rank(q); ++j) m.at(j, j) = 1;  // unit ⊗ y ↦ y
        IntMat& m2 = A.mult[q][0];
        for (int i = 0; i < C.rank(q); ++i) m2.at(i, i * r0) = 1;  // x ⊗ unit ↦ x
    }
    A.unit = IntMat::zero(r0, 1);
    A.unit.at(0, 0) = 1;
    return A;
}

namespace {

// Basis bookkeeping for tensor algebras: degree-n part is spanned by words,
// i.e. sequences of degrees (parts) with one basis index of C per part.
struct WordTable {
    std::vector<std::vector<int>> words;
    std::vector<int> offset;
    std::vector<int> size;
    std::map<std::vector<int>, int> index;
    int dim = 0;
};

int word_size(const ChainComplex& C, const std::vector<int>& w) {
    int s = 1;
    for (int part : w) s *= C.rank(part);
    return s;
}

void push_word(WordTable& t, const ChainComplex& C, const std::vector<int>& w) {
    int s = word_size(C, w);
    if (s == 0) return;
    t.index[w] = static_cast<int>(t.words.size());
    t.words.push_back(w);
    t.offset.push_back(t.dim);
    t.size.push_back(s);
    t.dim += s;
}

void gen_words(WordTable& t, const ChainComplex& C, int remaining, int len_left, int min_part,
               std::vector<int>& cur) {
    if (len_left == 0) {
        if (remaining == 0) push_word(t, C, cur);
        return;
    }
    for (int p = min_part; p <= std::min(remaining, C.T); ++p) {
        if (C.rank(p) == 0) continue;
        if (remaining - p > (len_left - 1) * C.T) continue;
        if (min_part > 0 && remaining - p < (len_left - 1) * min_part) continue;
        cur.push_back(p);
        gen_words(t, C, remaining - p, len_left - 1, min_part, cur);
        cur.pop_back();
    }
}

// Words of total degree n, ordered by (length, lexicographic parts); parts in
// [min_part, C.T], length at most max_len.  Words with an empty factor are
// dropped (their span is zero).
WordTable enumerate_words(const ChainComplex& C, int n, int min_part, int max_len) {
    WordTable t;
    for (int len = 0; len <= max_len; ++len) {
        if (len == 0) {
            if (n == 0) push_word(t, C, {});
            continue;
        }
        std::vector<int> cur;
        gen_words(t, C, n, len, min_part, cur);
    }
    return t;
}

DGAlgebra tensor_algebra_core(const ChainComplex& C, int min_part, int max_len) {
    C.validate();
    int T = C.T;
    std::vector<WordTable> tab(T + 1);
    for (int n = 0; n <= T; ++n)
        tab[n] = enumerate_words(C, n, min_part, max_len < 0 ? n : max_len);

    DGAlgebra A;
    A.R.T = T;
    A.R.ranks.resize(T + 1);
    for (int n = 0; n <= T; ++n) A.R.ranks[n] = tab[n].dim;
    A.R.d.resize(T + 1);
    for (int n = 1; n <= T; ++n) {
        IntMat D = IntMat::zero(tab[n - 1].dim, tab[n].dim);
        for (size_t wi = 0; wi < tab[n].words.size(); ++wi) {
            const std::vector<int>& w = tab[n].words[wi];
            int pre = 1, deg_pre = 0;
            for (size_t i = 0; i < w.size(); ++i) {
                int ni = w[i];
                if (ni >= 1 && C.rank(ni - 1) > 0) {
                    std::vector<int> wt = w;
                    wt[i] = ni - 1;
                    auto it = tab[n - 1].index.find(wt);
                    if (it != tab[n - 1].index.end()) {
                        int post = 1;
                        for (size_t j = i + 1; j < w.size(); ++j) post *= C.rank(w[j]);
                        IntMat block = IntMat::kronecker(
                            IntMat::kronecker(IntMat::identity(pre), C.d[ni]),
                            IntMat::identity(post));
                        if (deg_pre % 2 != 0) block = -block;
                        int r0 = tab[n - 1].offset[it->second];
                        int c0 = tab[n].offset[wi];
                        for (int r = 0; r < block.rows(); ++r)
                            for (int c = 0; c < block.cols(); ++c)
                                D.at(r0 + r, c0 + c) += block.at(r, c);
                    }
                }
                pre *= C.rank(ni);
                deg_pre += ni;
            }
        }
        A.R.d[n] = D;
    }
    A.mult = make_mult_table(A.R);
    for (int p = 0; p <= T; ++p)
        for (int q = 0; p + q <= T; ++q) {
            IntMat& M = A.mult[p][q];
            for (size_t w1 = 0; w1 < tab[p].words.size(); ++w1)
                for (size_t w2 = 0; w2 < tab[q].words.size(); ++w2) {
                    std::vector<int> cat = tab[p].words[w1];
                    const std::vector<int>& b = tab[q].words[w2];
                    cat.insert(cat.end(), b.begin(), b.end());
                    if (max_len >= 0 && static_cast<int>(cat.size()) > max_len) continue;
                    auto it = tab[p + q].index.find(cat);
                    check(it != tab[p + q].index.end(), "tensor algebra: missing concatenation");
                    int s1 = tab[p].size[w1], s2 = tab[q].size[w2];
                    for (int a = 0; a < s1; ++a)
                        for (int bb = 0; bb < s2; ++bb)
                            M.at(tab[p + q].offset[it->second] + a * s2 + bb,
                                 (tab[p].offset[w1] + a) * tab[q].dim + tab[q].offset[w2] + bb) = 1;
                }
        }
    A.unit = IntMat::zero(tab[0].dim, 1);
    A.unit.at(0, 0) = 1;  // the empty word
    return A;
}

}  // namespace

DGAlgebra tensor_algebra(const ChainComplex& C) {
    check(C.rank(0) == 0, "tensor algebra: requires C_0 = 0");
    return tensor_algebra_core(C, 1, -1);
}

DGAlgebra truncated_tensor_algebra(const ChainComplex& C, int max_len) {
    check(max_len >= 0, "truncated tensor algebra: length bound must be nonnegative");
    return tensor_algebra_core(C, 0, max_len);
}

SimplicialRing constant_ring(const IntMat& mult, const IntMat& unit, int T) {
    int r = mult.rows();
    check(mult.cols() == r * r && unit.rows() == r && unit.cols() == 1,
          "constant ring: coefficient data has wrong shape");
    SimplicialRing S;
    S.A = SimplicialAbGroup::constant_group(r, T);
    S.mult.assign(T + 1, mult);
    S.unit.assign(T + 1, unit);
    return S;
}

namespace {

// Permutation (V⊗W)⊗(V'⊗W') → (V⊗V')⊗(W⊗W') on Kronecker-indexed bases,
// with dim V = dim V' = r1 and dim W = dim W' = r2.
IntMat middle_swap(int r1, int r2) {
    IntMat P(r1 * r1 * r2 * r2, r1 * r2 * r1 * r2);
    for (int i1 = 0; i1 < r1; ++i1)
        for (int i2 = 0; i2 < r2; ++i2)
            for (int j1 = 0; j1 < r1; ++j1)
                for (int j2 = 0; j2 < r2; ++j2)
                    P.at((i1 * r1 + j1) * r2 * r2 + i2 * r2 + j2,
                         (i1 * r2 + i2) * r1 * r2 + j1 * r2 + j2) = 1;
    return P;
}

// Pointwise product on a tensor of two rings: (a⊗b)(a'⊗b') = aa' ⊗ bb'.
IntMat pointwise_tensor_mult(const IntMat& m1, const IntMat& m2, int r1, int r2) {
    return IntMat::kronecker(m1, m2) * middle_swap(r1, r2);
}

}  // namespace

SimplicialRing hochschild_ring(const IntMat& mult, const IntMat& unit, int T) {
    int r = mult.rows();
    check(mult.cols() == r * r && unit.rows() == r && unit.cols() == 1,
          "cyclic bar construction: coefficient data has wrong shape");
    std::vector<int> pw(T + 3, 1);
    for (size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * r;

    SimplicialRing S;
    S.A.T = T;
    S.A.ranks.resize(T + 1);
    for (int n = 0; n <= T; ++n) S.A.ranks[n] = pw[n + 1];
    S.A.face.resize(T + 1);
    S.A.degen.resize(T + 1);
    for (int n = 1; n <= T; ++n) {
        S.A.face[n].resize(n + 1);
        for (int i = 0; i < n; ++i)
            S.A.face[n][i] = IntMat::kronecker(
                IntMat::identity(pw[i]),
                IntMat::kronecker(mult, IntMat::identity(pw[n - 1 - i])));
        // Last face wraps the final factor around to the front.
        IntMat P(pw[n + 1], pw[n + 1]);
        for (int q = 0; q < pw[n]; ++q)
            for (int a = 0; a < r; ++a) P.at(a * pw[n] + q, q * r + a) = 1;
        S.A.face[n][n] = IntMat::kronecker(mult, IntMat::identity(pw[n - 1])) * P;
    }
    for (int n = 0; n < T; ++n) {
        S.A.degen[n].resize(n + 1);
        for (int i = 0; i <= n; ++i)
            S.A.degen[n][i] = IntMat::kronecker(
                IntMat::identity(pw[i + 1]),
                IntMat::kronecker(unit, IntMat::identity(pw[n - i])));
    }
    S.mult.resize(T + 1);
    S.unit.resize(T + 1);
    IntMat m = mult, u = unit;
    int dim = r;
    for (int n = 0; n <= T; ++n) {
        S.mult[n] = m;
        S.unit[n] = u;
        if (n < T) {
            m = pointwise_tensor_mult(m, mult, dim, r);
            u = IntMat::kronecker(u, unit);
            dim *= r;
        }
    }
    return S;
}

SimplicialRing tensor_ring(const SimplicialRing& R1, const SimplicialRing& R2) {
    check(R1.A.T == R2.A.T, "tensor ring: truncation levels differ");
    SimplicialRing S;
    S.A = tensor(R1.A, R2.A);
    S.mult.resize(S.A.T + 1);
    S.unit.resize(S.A.T + 1);
    for (int n = 0; n <= S.A.T; ++n) {
        S.mult[n] = pointwise_tensor_mult(R1.mult[n], R2.mult[n], R1.A.rank(n), R2.A.rank(n));
        S.unit[n] = IntMat::kronecker(R1.unit[n], R2.unit[n]);
    }
    return S;
}

IntMat dual_numbers_mult() {
    // Z[t]/(t²) on basis (1, t).
    return IntMat::from_rows(2, 4, {1, 0, 0, 0, 0, 1, 1, 0});
}

IntMat involution_ring_mult() {
    // Z[t]/(t² − 1) on basis (1, t).
    return IntMat::from_rows(2, 4, {1, 0, 0, 1, 0, 1, 1, 0});
}

GammaRingData gamma_ring(const DGAlgebra& R, int T) {
    GammaRingData out;
    out.G = gamma(R.R, T);
    const GammaData& G = out.G;
    out.ring.A = G.G;
    out.ring.mult.resize(T + 1);
    out.ring.unit.resize(T + 1);
    for (int n = 0; n <= T; ++n) {
        int rk = G.G.rank(n);
        // Product coordinates: (x·y)(S) = Σ_{p+q=|S|−1} μ(x(front_p S) ⊗ y(back_q S)).
        IntMat M(G.coord_dim(n), rk * rk);
        for (size_t s = 0; s < G.subsets[n].size(); ++s) {
            const std::vector<int>& S = G.subsets[n][s];
            int k = static_cast<int>(S.size()) - 1;
            IntMat block = IntMat::zero(R.R.rank(k), rk * rk);
            for (int p = 0; p <= k; ++p) {
                int q = k - p;
                std::vector<int> front(S.begin(), S.begin() + (p + 1));
                std::vector<int> back(S.end() - (q + 1), S.end());
                int sf = G.sindex[n].at(front);
                int sb = G.sindex[n].at(back);
                IntMat rows_f = G.basis[n].submatrix(G.offset[n][sf], 0, R.R.rank(p), rk);
                IntMat rows_b = G.basis[n].submatrix(G.offset[n][sb], 0, R.R.rank(q), rk);
                block = block + R.mu(p, q) * IntMat::kronecker(rows_f, rows_b);
            }
            M.set_block(G.offset[n][s], 0, block);
        }
        out.ring.mult[n] = solved(G.basis[n], M, "gamma ring: product");
        // Unit: the assignment sending every vertex to 1 and larger cells to 0.
        IntMat ucoord = IntMat::zero(G.coord_dim(n), 1);
        for (size_t s = 0; s < G.subsets[n].size(); ++s)
            if (G.subsets[n][s].size() == 1) ucoord.set_block(G.offset[n][s], 0, R.unit);
        out.ring.unit[n] = solved(G.basis[n], ucoord, "gamma ring: unit");
    }
    return out;
}

IntMat kappa(const DGAlgebra& R, const GammaData& G, const IntMat& r) {
    check(G.G.T >= 1, "kappa: needs at least one simplicial level");
    check(r.rows() == R.R.rank(1) && r.cols() == 1, "kappa: element has wrong shape");
    IntMat coord = IntMat::zero(G.coord_dim(1), 1);
    coord.set_block(G.offset[1][G.sindex[1].at({1})], 0, R.R.d[1] * r);
    coord.set_block(G.offset[1][G.sindex[1].at({0, 1})], 0, r);
    return solved(G.basis[1], coord, "kappa");
}

NormalizedRingData normalize_ring(const SimplicialRing& S) {
    NormalizedRingData out;
    out.N = normalize(S.A);
    SimplicialAbGroup AA = tensor(S.A, S.A);
    NormalizationData NAA = normalize(AA);
    ChainMap Nmu = normalized_of(S.mu_simplicial_map(), NAA, out.N);
    ChainMap mu_chain = compose(Nmu, normalized_shuffle(out.N, out.N, NAA));
    const ChainComplex& N = out.N.N;
    out.dga.R = N;
    out.dga.mult = make_mult_table(N);
    for (int p = 0; p <= N.T; ++p)
        for (int q = 0; p + q <= N.T; ++q)
            out.dga.mult[p][q] = mu_chain.f[p + q].submatrix(
                0, tensor_offset(N, N, p + q, p), N.rank(p + q), N.rank(p) * N.rank(q));
    out.dga.unit = out.N.pi[0] * S.unit[0];
    return out;
}

CheckReport counit_ring_check(const DGAlgebra& R, int T) {
    check(T >= 0 && T <= R.R.T, "counit ring check: window exceeds the algebra's degrees");
    CheckReport rep;
    std::ostringstream msg;

    // The counit square: ε_{C⊗D} ∘ N(φ) ∘ ∇ = ε_C ⊗ ε_D with C = D = R.
    ChainComplex CC = tensor(R.R, R.R);
    GammaData GR = gamma(R.R, T);
    GammaData GCD = gamma(CC, T);
    SimplicialMap phi = gamma_monoidal(GR, GR, GCD);
    NormalizationData NGR = normalize(GR.G);
    NormalizationData NGCD = normalize(GCD.G);
    NormalizationData NTT = normalize(tensor(GR.G, GR.G));
    ChainMap lhs = compose(counit_map(GCD, NGCD),
                           compose(normalized_of(phi, NTT, NGCD),
                                   normalized_shuffle(NGR, NGR, NTT)));
    ChainMap rhs = tensor_of_maps(counit_map(GR, NGR), counit_map(GR, NGR));
    for (int n = 0; n <= T; ++n)
        if (lhs.f[n] != rhs.f[n]) {
            rep.ok = false;
            msg << "counit square fails in degree " << n << "; ";
        }

    // ε: NΓR → R is an isomorphism of dg algebras.
    GammaRingData GD = gamma_ring(R, T);
    NormalizedRingData ND = normalize_ring(GD.ring);
    ChainMap eps = counit_map(GD.G, ND.N);
    for (int n = 0; n <= T; ++n)
        if (!integer_inverse(eps.f[n]).has_value()) {
            rep.ok = false;
            msg << "counit is not invertible in degree " << n << "; ";
        }
    if (eps.f[0] * ND.dga.unit != R.unit) {
        rep.ok = false;
        msg << "counit does not preserve the unit; ";
    }
    for (int p = 0; p <= T; ++p)
        for (int q = 0; p + q <= T; ++q)
            if (eps.f[p + q] * ND.dga.mu(p, q) !=
                R.mu(p, q) * IntMat::kronecker(eps.f[p], eps.f[q])) {
                rep.ok = false;
                msg << "counit is not multiplicative on the (" << p << "," << q << ") block; ";
            }

    rep.detail = rep.ok
        ? "counit square commutes and the counit is a dg algebra isomorphism through degree " +
              std::to_string(T)
        : msg.str();
    return rep;
}

CheckReport eta_not_monoidal_witness() {
    CheckReport rep;
    std::ostringstream msg;
    const int T = 2;
    ChainComplex C = ChainComplex::sphere(1, T);
    GammaData GC = gamma(C, T);
    SimplicialAbGroup A = GC.G;
    SimplicialAbGroup AB = tensor(A, A);

    NormalizationData NA = normalize(A);
    NormalizationData NAB = normalize(AB);
    GammaData GNA = gamma(NA.N, T);
    GammaData GNN = gamma(tensor(NA.N, NA.N), T);
    GammaData GN = gamma(NAB.N, T);

    SimplicialMap eta = unit_map(A, NA, GNA);
    SimplicialMap phi = gamma_monoidal(GNA, GNA, GNN);
    ChainMap nsh = normalized_shuffle(NA, NA, NAB);
    SimplicialMap via_phi =
        compose(gamma_map(nsh, GNN, GN), compose(phi, tensor_of_maps(eta, eta)));
    SimplicialMap eta_ab = unit_map(AB, NAB, GN);

    if (!via_phi.f[1].is_zero()) {
        rep.ok = false;
        msg << "the composite through the product of the units is nonzero in level 1; ";
    }
    if (eta_ab.f[1].is_zero() || !is_injective(eta_ab.f[1]) || AB.rank(1) != 1) {
        rep.ok = false;
        msg << "the direct unit is not injective on the rank-one level 1; ";
    }
    NormalizationData NGN = normalize(GN.G);
    auto H = homotopy_solve(normalized_of(via_phi, NAB, NGN), normalized_of(eta_ab, NAB, NGN));
    if (!H.has_value()) {
        rep.ok = false;
        msg << "the two maps are not chain homotopic after normalization; ";
    }
    rep.detail = rep.ok
        ? "unit is not monoidal: on Γ(Z[1])⊗Γ(Z[1]) the monoidal composite vanishes in level 1 "
          "while the unit itself is injective there; the normalizations are chain homotopic"
        : msg.str();
    return rep;
}

}  // namespace dk
