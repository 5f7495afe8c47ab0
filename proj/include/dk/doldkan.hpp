// The Dold–Kan correspondence, computed with explicit bases:
//   - C (unnormalized chains), the degenerate subcomplex, and N (Moore complex
//     with inclusion and splitting projection),
//   - Γ via literal chain-map solving: level n of ΓC is the lattice of chain
//     maps NΔⁿ → C, stored as assignments (subset S of {0..n}) ↦ C_{|S|−1},
//   - the unit η: A → ΓNA and counit ε: NΓC → C,
//   - shuffle and Alexander–Whitney maps with normalized versions, and the
//     monoidal (φ) and comonoidal (∇̃) structure maps of Γ they induce.

#pragma once

#include <map>
#include <vector>

#include "dk/chain.hpp"
#include "dk/intmat.hpp"
#include "dk/simplicial.hpp"

namespace dk {

// Alternating-sum chain complex (CA)_n = A_n, d = Σ (−1)^i d_i.
ChainComplex unnormalized(const SimplicialAbGroup& A);
// Levelwise matrix of a simplicial map, as a chain map of unnormalized complexes.
ChainMap chain_of(const SimplicialMap& f);
// Basis of the degenerate sublattice DA_n = Σ im(s_i) per level (empty at 0).
std::vector<IntMat> degenerate_basis(const SimplicialAbGroup& A);

struct NormalizationData {
    SimplicialAbGroup A;
    ChainComplex N;             // Moore complex: ∩_{i≥1} ker d_i with differential d_0
    std::vector<IntMat> iota;   // inclusion N_n ↪ A_n (saturated basis columns)
    std::vector<IntMat> pi;     // projection A_n ↠ N_n along DA_n; pi∘iota = id

    ChainMap iota_map() const;  // N → CA
    ChainMap pi_map() const;    // CA → N
};
NormalizationData normalize(const SimplicialAbGroup& A);

// N applied to a simplicial map: π_tgt ∘ f ∘ ι_src.
ChainMap normalized_of(const SimplicialMap& f, const NormalizationData& NA,
                       const NormalizationData& NB);
// Weak equivalence of simplicial abelian groups: N(f) is a quasi-isomorphism.
bool is_weak_equivalence(const SimplicialMap& f);

struct GammaData {
    ChainComplex C;
    SimplicialAbGroup G;  // ΓC, truncated at G.T
    // Level-n assignment coordinates: one block per nonempty subset S of
    // {0..n} (ordered by size then lexicographically), of width rank C_{|S|−1}.
    std::vector<std::vector<std::vector<int>>> subsets;   // subsets[n][s]
    std::vector<std::vector<int>> offset;                 // offset[n][s] into the coordinates
    std::vector<std::map<std::vector<int>, int>> sindex;  // subset → position
    std::vector<IntMat> basis;  // columns: kernel basis of the chain-map constraints

    int coord_dim(int n) const { return basis[n].rows(); }
};
GammaData gamma(const ChainComplex& C, int T);

// Γ on chain maps; GS, GT must be gamma of f.source and f.target at equal T.
SimplicialMap gamma_map(const ChainMap& f, const GammaData& GS, const GammaData& GT);

// η_A: A → ΓNA, a ↦ (S ↦ π(A(θ_S)a)); G must be gamma(NA.N, A.T).
SimplicialMap unit_map(const SimplicialAbGroup& A, const NormalizationData& NA,
                       const GammaData& G);
SimplicialMap unit_map(const SimplicialAbGroup& A);

// ε_C: NΓC → C, evaluation at the top cell; NG must be normalize(G.G).
ChainMap counit_map(const GammaData& G, const NormalizationData& NG);
ChainMap counit_map(const GammaData& G);

// Shuffle map ∇: CA⊗CB → C(A⊗B) and Alexander–Whitney AW: C(A⊗B) → CA⊗CB.
ChainMap shuffle(const SimplicialAbGroup& A, const SimplicialAbGroup& B);
ChainMap alexander_whitney(const SimplicialAbGroup& A, const SimplicialAbGroup& B);

// Normalized versions; NAB must be normalize(tensor(NA.A, NB.A)).
ChainMap normalized_shuffle(const NormalizationData& NA, const NormalizationData& NB,
                            const NormalizationData& NAB);
ChainMap normalized_aw(const NormalizationData& NA, const NormalizationData& NB,
                       const NormalizationData& NAB);

// φ_{C,D}: ΓC⊗ΓD → Γ(C⊗D), the composite Γ(ε⊗ε) ∘ Γ(AW^N) ∘ η.
SimplicialMap gamma_monoidal(const GammaData& GC, const GammaData& GD, const GammaData& GCD);
// The same map by its closed form: (x⊗y)(S) = Σ_{p+q=|S|−1} x(front_p S) ⊗ y(back_q S).
SimplicialMap gamma_monoidal_expanded(const GammaData& GC, const GammaData& GD,
                                      const GammaData& GCD);
// ∇̃_{C,D}: Γ(C⊗D) → ΓC⊗ΓD, the mate η⁻¹ ∘ Γ(∇^N ∘ (ε⁻¹⊗ε⁻¹)).
SimplicialMap gamma_comonoidal(const GammaData& GC, const GammaData& GD, const GammaData& GCD);

}  // namespace dk
