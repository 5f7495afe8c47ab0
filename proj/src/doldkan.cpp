#include "dk/doldkan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dk {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

IntMat solved(const IntMat& basis, const IntMat& M, const char* what) {
    auto X = solve(basis, M);
    require(X.has_value(), what);
    return *X;
}

// All nonempty subsets of {0..n}, ordered by size then lexicographically.
std::vector<std::vector<int>> enumerate_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int k = 1; k <= n + 1; ++k) {
        std::vector<int> S(k);
        for (int i = 0; i < k; ++i) S[i] = i;
        while (true) {
            out.push_back(S);
            int i = k - 1;
            while (i >= 0 && S[i] == n - (k - 1 - i)) --i;
            if (i < 0) break;
            ++S[i];
            for (int j = i + 1; j < k; ++j) S[j] = S[j - 1] + 1;
        }
    }
    return out;
}

// Coordinate-space action of a monotone θ: [m]→[n] on assignment vectors for a
// fixed value complex C: (θ*x)_S = x_{θ(S)} when θ is injective on S, else 0.
IntMat coordinate_operator(const GammaData& G, const std::vector<int>& theta, int m, int n) {
    IntMat P(G.coord_dim(m), G.coord_dim(n));
    for (size_t s = 0; s < G.subsets[m].size(); ++s) {
        const auto& S = G.subsets[m][s];
        std::vector<int> image;
        for (int v : S) image.push_back(theta[v]);
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (image.size() != S.size()) continue;  // θ collapses S: the cell dies in NΔⁿ
        const int w = G.C.rank(static_cast<int>(S.size()) - 1);
        const int src = G.offset[n][G.sindex[n].at(image)];
        const int dst = G.offset[m][s];
        for (int r = 0; r < w; ++r) P.at(dst + r, src + r) = 1;
    }
    return P;
}

std::vector<int> coface(int i, int n) {  // δ_i: [n−1] → [n]
    std::vector<int> v;
    for (int x = 0; x < n; ++x) v.push_back(x < i ? x : x + 1);
    return v;
}

std::vector<int> codegeneracy(int i, int n) {  // σ_i: [n+1] → [n]
    std::vector<int> v;
    for (int x = 0; x <= n + 1; ++x) v.push_back(x <= i ? x : x - 1);
    return v;
}

// All (p,q)-shuffles: complementary increasing sequences (μ, ν) partitioning
// {0..p+q−1}, |μ| = p; the sign is the parity of the number of pairs μ_i > ν_j.
struct Shuffle {
    std::vector<int> mu, nu;
    int sign = 1;
};

std::vector<Shuffle> shuffles(int p, int q) {
    std::vector<Shuffle> out;
    const int n = p + q;
    std::vector<int> mu(p);
    for (int i = 0; i < p; ++i) mu[i] = i;
    while (true) {
        Shuffle sh;
        sh.mu = mu;
        std::vector<bool> used(n, false);
        for (int v : mu) used[v] = true;
        for (int v = 0; v < n; ++v)
            if (!used[v]) sh.nu.push_back(v);
        int inv = 0;
        for (int a : sh.mu)
            for (int b : sh.nu)
                if (a > b) ++inv;
        sh.sign = (inv % 2 == 0) ? 1 : -1;
        out.push_back(sh);
        if (p == 0) break;
        int i = p - 1;
        while (i >= 0 && mu[i] == n - (p - i)) --i;
        if (i < 0) break;
        ++mu[i];
        for (int j = i + 1; j < p; ++j) mu[j] = mu[j - 1] + 1;
    }
    return out;
}

}  // namespace

ChainComplex unnormalized(const SimplicialAbGroup& A) {
    ChainComplex C = ChainComplex::zero_complex(A.T);
    C.ranks = A.ranks;
    for (int n = 1; n <= A.T; ++n) {
        IntMat d(A.rank(n - 1), A.rank(n));
        for (int i = 0; i <= n; ++i) d = (i % 2 == 0) ? d + A.face[n][i] : d - A.face[n][i];
        C.d[n] = d;
    }
    return C;
}

ChainMap chain_of(const SimplicialMap& f) {
    return ChainMap{unnormalized(f.source), unnormalized(f.target), f.f};
}

std::vector<IntMat> degenerate_basis(const SimplicialAbGroup& A) {
    std::vector<IntMat> out;
    out.push_back(IntMat(A.rank(0), 0));
    for (int n = 1; n <= A.T; ++n) {
        IntMat all = IntMat::hstack(A.degen[n - 1], A.rank(n));
        ColEchelon ech(all);
        out.push_back(ech.H().submatrix(0, 0, A.rank(n), ech.rank()));
    }
    return out;
}

NormalizationData normalize(const SimplicialAbGroup& A) {
    NormalizationData out;
    out.A = A;
    out.N = ChainComplex::zero_complex(A.T);
    const std::vector<IntMat> degen = degenerate_basis(A);
    for (int n = 0; n <= A.T; ++n) {
        out.iota.push_back(moore_basis(A, n));
        out.N.ranks[n] = out.iota[n].cols();
        // A_n = NA_n ⊕ DA_n: the combined basis must be a lattice basis of A_n.
        IntMat M = IntMat::hstack(out.iota[n], degen[n]);
        require(M.rows() == M.cols(), "normalize: Moore and degenerate parts do not complement");
        auto Minv = integer_inverse(M);
        require(Minv.has_value(), "normalize: Moore ⊕ degenerate decomposition is not unimodular");
        out.pi.push_back(Minv->submatrix(0, 0, out.iota[n].cols(), A.rank(n)));
    }
    for (int n = 1; n <= A.T; ++n) {
        out.N.d[n] = solved(out.iota[n - 1], A.face[n][0] * out.iota[n],
                            "normalize: d_0 does not preserve the Moore subcomplex");
    }
    out.N.validate();
    return out;
}

ChainMap NormalizationData::iota_map() const { return ChainMap{N, unnormalized(A), iota}; }
ChainMap NormalizationData::pi_map() const { return ChainMap{unnormalized(A), N, pi}; }

ChainMap normalized_of(const SimplicialMap& f, const NormalizationData& NA,
                       const NormalizationData& NB) {
    ChainMap out{NA.N, NB.N, {}};
    const int top = std::min(NA.N.T, NB.N.T);
    for (int n = 0; n <= top; ++n) out.f.push_back(NB.pi[n] * f.f[n] * NA.iota[n]);
    return out;
}

bool is_weak_equivalence(const SimplicialMap& f) {
    return is_quasi_iso(normalized_of(f, normalize(f.source), normalize(f.target)));
}

GammaData gamma(const ChainComplex& C, int T) {
    require(T >= 0 && T <= C.T, "gamma: requested truncation exceeds the complex");
    GammaData G;
    G.C = C;
    for (int n = 0; n <= T; ++n) {
        G.subsets.push_back(enumerate_subsets(n));
        std::vector<int> off;
        std::map<std::vector<int>, int> idx;
        int dim = 0, crows = 0;
        for (size_t s = 0; s < G.subsets[n].size(); ++s) {
            const auto& S = G.subsets[n][s];
            idx[S] = static_cast<int>(s);
            off.push_back(dim);
            dim += C.rank(static_cast<int>(S.size()) - 1);
            if (S.size() >= 2) crows += C.rank(static_cast<int>(S.size()) - 2);
        }
        G.offset.push_back(off);
        G.sindex.push_back(idx);
        // Chain-map condition per subset S = {s_0<…<s_k}: d(x_S) = Σ (−1)^i x_{S∖s_i}.
        IntMat M(crows, dim);
        int roff = 0;
        for (size_t s = 0; s < G.subsets[n].size(); ++s) {
            const auto& S = G.subsets[n][s];
            const int k = static_cast<int>(S.size()) - 1;
            if (k < 1) continue;
            M.set_block(roff, off[s], C.d[k]);
            for (int i = 0; i <= k; ++i) {
                std::vector<int> child = S;
                child.erase(child.begin() + i);
                IntMat sid(C.rank(k - 1), C.rank(k - 1));
                for (int r = 0; r < C.rank(k - 1); ++r) sid.at(r, r) = (i % 2 == 0) ? -1 : 1;
                M.set_block(roff, off[idx.at(child)], sid);
            }
            roff += C.rank(k - 1);
        }
        G.basis.push_back(kernel_basis(M));
    }
    G.G.T = T;
    G.G.face.resize(T + 1);
    G.G.degen.resize(T + 1);
    for (int n = 0; n <= T; ++n) G.G.ranks.push_back(G.basis[n].cols());
    for (int n = 1; n <= T; ++n)
        for (int i = 0; i <= n; ++i)
            G.G.face[n].push_back(solved(G.basis[n - 1],
                                         coordinate_operator(G, coface(i, n), n - 1, n) * G.basis[n],
                                         "gamma: face image leaves the chain-map lattice"));
    for (int n = 0; n < T; ++n)
        for (int i = 0; i <= n; ++i)
            G.G.degen[n].push_back(
                solved(G.basis[n + 1], coordinate_operator(G, codegeneracy(i, n), n + 1, n) * G.basis[n],
                       "gamma: degeneracy image leaves the chain-map lattice"));
    return G;
}

SimplicialMap gamma_map(const ChainMap& f, const GammaData& GS, const GammaData& GT) {
    require(GS.G.T == GT.G.T, "gamma_map: truncation mismatch");
    require(same_shape(GS.C, f.source) && same_shape(GT.C, f.target),
            "gamma_map: Γ data does not match the map");
    SimplicialMap out{GS.G, GT.G, {}};
    for (int n = 0; n <= GS.G.T; ++n) {
        IntMat B(GT.coord_dim(n), GS.coord_dim(n));
        for (size_t s = 0; s < GS.subsets[n].size(); ++s) {
            const int k = static_cast<int>(GS.subsets[n][s].size()) - 1;
            B.set_block(GT.offset[n][s], GS.offset[n][s], f.f[k]);
        }
        out.f.push_back(solved(GT.basis[n], B * GS.basis[n],
                               "gamma_map: image leaves the chain-map lattice"));
    }
    return out;
}

SimplicialMap unit_map(const SimplicialAbGroup& A, const NormalizationData& NA,
                       const GammaData& G) {
    require(G.G.T == A.T && same_shape(G.C, NA.N), "unit_map: Γ data must be gamma(NA, T)");
    SimplicialMap out{A, G.G, {}};
    for (int n = 0; n <= A.T; ++n) {
        IntMat E(G.coord_dim(n), A.rank(n));
        for (size_t s = 0; s < G.subsets[n].size(); ++s) {
            const auto& S = G.subsets[n][s];
            const int k = static_cast<int>(S.size()) - 1;
            E.set_block(G.offset[n][s], 0, NA.pi[k] * simplicial_operator(A, S, n));
        }
        out.f.push_back(solved(G.basis[n], E, "unit_map: image is not a chain map NΔⁿ → NA"));
    }
    return out;
}

SimplicialMap unit_map(const SimplicialAbGroup& A) {
    NormalizationData NA = normalize(A);
    GammaData G = gamma(NA.N, A.T);
    return unit_map(A, NA, G);
}

ChainMap counit_map(const GammaData& G, const NormalizationData& NG) {
    require(same_shape(NG.A, G.G), "counit_map: normalization data must belong to ΓC");
    const int T = G.G.T;
    ChainMap out{NG.N, G.C, {}};
    for (int n = 0; n <= std::min(T, G.C.T); ++n) {
        std::vector<int> top(n + 1);
        for (int i = 0; i <= n; ++i) top[i] = i;
        const IntMat coords = G.basis[n] * NG.iota[n];
        out.f.push_back(
            coords.submatrix(G.offset[n][G.sindex[n].at(top)], 0, G.C.rank(n), coords.cols()));
    }
    return out;
}

ChainMap counit_map(const GammaData& G) { return counit_map(G, normalize(G.G)); }

ChainMap shuffle(const SimplicialAbGroup& A, const SimplicialAbGroup& B) {
    const ChainComplex CA = unnormalized(A), CB = unnormalized(B);
    const SimplicialAbGroup AB = tensor(A, B);
    ChainMap out{tensor(CA, CB), unnormalized(AB), {}};
    const int T = std::min(A.T, B.T);
    for (int n = 0; n <= T; ++n) {
        IntMat M(AB.rank(n), out.source.rank(n));
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            if (A.rank(p) == 0 || B.rank(q) == 0) continue;
            IntMat block(AB.rank(n), A.rank(p) * B.rank(q));
            for (const Shuffle& sh : shuffles(p, q)) {
                IntMat sa = IntMat::identity(A.rank(p));
                for (int j = 0; j < q; ++j) sa = A.s(p + j, sh.nu[j]) * sa;
                IntMat sb = IntMat::identity(B.rank(q));
                for (int i = 0; i < p; ++i) sb = B.s(q + i, sh.mu[i]) * sb;
                IntMat term = IntMat::kronecker(sa, sb);
                block = (sh.sign > 0) ? block + term : block - term;
            }
            M.set_block(0, tensor_offset(CA, CB, n, p), block);
        }
        out.f.push_back(M);
    }
    return out;
}

ChainMap alexander_whitney(const SimplicialAbGroup& A, const SimplicialAbGroup& B) {
    const ChainComplex CA = unnormalized(A), CB = unnormalized(B);
    const SimplicialAbGroup AB = tensor(A, B);
    ChainMap out{unnormalized(AB), tensor(CA, CB), {}};
    const int T = std::min(A.T, B.T);
    for (int n = 0; n <= T; ++n) {
        IntMat M(out.target.rank(n), AB.rank(n));
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            if (A.rank(p) == 0 || B.rank(q) == 0) continue;
            std::vector<int> front(p + 1), back(q + 1);
            for (int i = 0; i <= p; ++i) front[i] = i;
            for (int i = 0; i <= q; ++i) back[i] = n - q + i;
            M.set_block(tensor_offset(CA, CB, n, p), 0,
                        IntMat::kronecker(simplicial_operator(A, front, n),
                                          simplicial_operator(B, back, n)));
        }
        out.f.push_back(M);
    }
    return out;
}

ChainMap normalized_shuffle(const NormalizationData& NA, const NormalizationData& NB,
                            const NormalizationData& NAB) {
    return compose(NAB.pi_map(),
                   compose(shuffle(NA.A, NB.A), tensor_of_maps(NA.iota_map(), NB.iota_map())));
}

ChainMap normalized_aw(const NormalizationData& NA, const NormalizationData& NB,
                       const NormalizationData& NAB) {
    return compose(tensor_of_maps(NA.pi_map(), NB.pi_map()),
                   compose(alexander_whitney(NA.A, NB.A), NAB.iota_map()));
}

SimplicialMap gamma_monoidal(const GammaData& GC, const GammaData& GD, const GammaData& GCD) {
    const int T = GC.G.T;
    require(GD.G.T == T && GCD.G.T == T, "gamma_monoidal: truncation mismatch");
    const SimplicialAbGroup AB = tensor(GC.G, GD.G);
    const NormalizationData NA = normalize(GC.G), NB = normalize(GD.G), NAB = normalize(AB);
    const ChainMap h = compose(tensor_of_maps(counit_map(GC, NA), counit_map(GD, NB)),
                               normalized_aw(NA, NB, NAB));
    const GammaData GN = gamma(NAB.N, T);
    const SimplicialMap Gh = gamma_map(h, GN, GCD);
    const SimplicialMap eta = unit_map(AB, NAB, GN);
    return compose(Gh, eta);
}

SimplicialMap gamma_monoidal_expanded(const GammaData& GC, const GammaData& GD,
                                      const GammaData& GCD) {
    const int T = GC.G.T;
    require(GD.G.T == T && GCD.G.T == T, "gamma_monoidal_expanded: truncation mismatch");
    require(same_shape(GCD.C, tensor(GC.C, GD.C)),
            "gamma_monoidal_expanded: target is not Γ of the tensor complex");
    SimplicialMap out{tensor(GC.G, GD.G), GCD.G, {}};
    for (int n = 0; n <= T; ++n) {
        IntMat M(GCD.coord_dim(n), GC.G.rank(n) * GD.G.rank(n));
        for (size_t s = 0; s < GCD.subsets[n].size(); ++s) {
            const auto& S = GCD.subsets[n][s];
            const int k = static_cast<int>(S.size()) - 1;
            for (int p = 0; p <= k; ++p) {
                const int q = k - p;
                if (GC.C.rank(p) == 0 || GD.C.rank(q) == 0) continue;
                const std::vector<int> front(S.begin(), S.begin() + p + 1);
                const std::vector<int> back(S.end() - (q + 1), S.end());
                const IntMat xrows = GC.basis[n].submatrix(
                    GC.offset[n][GC.sindex[n].at(front)], 0, GC.C.rank(p), GC.G.rank(n));
                const IntMat yrows = GD.basis[n].submatrix(
                    GD.offset[n][GD.sindex[n].at(back)], 0, GD.C.rank(q), GD.G.rank(n));
                M.set_block(GCD.offset[n][s] + tensor_offset(GC.C, GD.C, k, p), 0,
                            IntMat::kronecker(xrows, yrows));
            }
        }
        out.f.push_back(solved(GCD.basis[n], M,
                               "gamma_monoidal_expanded: image leaves the chain-map lattice"));
    }
    return out;
}

SimplicialMap gamma_comonoidal(const GammaData& GC, const GammaData& GD, const GammaData& GCD) {
    const int T = GC.G.T;
    require(GD.G.T == T && GCD.G.T == T, "gamma_comonoidal: truncation mismatch");
    const SimplicialAbGroup AB = tensor(GC.G, GD.G);
    const NormalizationData NA = normalize(GC.G), NB = normalize(GD.G), NAB = normalize(AB);

    auto inverted = [](const ChainMap& eps) {
        ChainMap inv{eps.target, eps.source, {}};
        for (const IntMat& m : eps.f) {
            auto mi = integer_inverse(m);
            require(mi.has_value(), "gamma_comonoidal: counit is not an isomorphism");
            inv.f.push_back(*mi);
        }
        return inv;
    };
    const ChainMap epsC_inv = inverted(counit_map(GC, NA));
    const ChainMap epsD_inv = inverted(counit_map(GD, NB));
    const ChainMap h =
        compose(normalized_shuffle(NA, NB, NAB), tensor_of_maps(epsC_inv, epsD_inv));
    const GammaData GN = gamma(NAB.N, T);
    const SimplicialMap Gh = gamma_map(h, GCD, GN);
    const SimplicialMap eta = unit_map(AB, NAB, GN);
    SimplicialMap out{GCD.G, AB, {}};
    for (int n = 0; n <= T; ++n) {
        auto ei = integer_inverse(eta.f[n]);
        require(ei.has_value(), "gamma_comonoidal: unit is not an isomorphism");
        out.f.push_back(*ei * Gh.f[n]);
    }
    return out;
}

}  // namespace dk
