// Connective chain complexes of finitely generated free abelian groups,
// truncated at a fixed top degree T.  Data above T is not stored; results are
// exact in degrees <= T and homology is reported in degrees <= T-1, the range
// where it does not depend on the missing differentials.
//
// Conventions: elements of degree n are column vectors of length ranks[n];
// d[n] maps degree n to degree n-1 (ranks[n-1] x ranks[n]).  Tensor summands
// are ordered lexicographically by (p, basis index of C_p, basis index of D_q).

#pragma once

#include <optional>
#include <vector>

#include "dk/intmat.hpp"

namespace dk {

struct ChainComplex {
    int T = 0;
    std::vector<int> ranks;  // size T+1
    std::vector<IntMat> d;   // size T+1; d[0] unused, d[n]: ranks[n-1] x ranks[n]

    int rank(int n) const { return (n >= 0 && n <= T) ? ranks[n] : 0; }
    void validate() const;  // shapes match and d∘d = 0

    static ChainComplex zero_complex(int T);
    static ChainComplex sphere(int m, int T);          // Z concentrated in degree m
    static ChainComplex disk(int m, int T);            // identity differential in degrees m, m-1
    static ChainComplex direct_sum(const ChainComplex& A, const ChainComplex& B);
};

bool same_shape(const ChainComplex& A, const ChainComplex& B);

// Offset of the (p, n-p) summand inside (C⊗D)_n.
int tensor_offset(const ChainComplex& C, const ChainComplex& D, int n, int p);
ChainComplex tensor(const ChainComplex& C, const ChainComplex& D);

struct ChainMap {
    ChainComplex source, target;
    std::vector<IntMat> f;  // components in degrees 0..min(T_src, T_tgt)

    int top_degree() const { return static_cast<int>(f.size()) - 1; }
    void validate() const;  // f d = d f in all applicable degrees

    static ChainMap identity(const ChainComplex& C);
    static ChainMap zero_map(const ChainComplex& C, const ChainComplex& D);
};

ChainMap compose(const ChainMap& g, const ChainMap& f);          // g ∘ f
ChainMap map_sum(const ChainMap& f, const ChainMap& g);
ChainMap map_diff(const ChainMap& f, const ChainMap& g);
bool maps_equal(const ChainMap& f, const ChainMap& g);
ChainMap tensor_of_maps(const ChainMap& f, const ChainMap& g);

// τ: C⊗D → D⊗C, (p,q)-summand swapped with sign (−1)^{pq}.
ChainMap symmetry(const ChainComplex& C, const ChainComplex& D);
// Canonical reindexing (C⊗D)⊗E → C⊗(D⊗E); a permutation matrix per degree.
ChainMap associator(const ChainComplex& C, const ChainComplex& D, const ChainComplex& E);

using HomologyTable = std::vector<CokernelData>;  // degrees 0..T-1
HomologyTable homology(const ChainComplex& C);
bool is_quasi_iso(const ChainMap& f);

struct ModelPredicates {
    bool is_fibration = false;       // surjective in positive degrees
    bool is_cofibration = false;     // injective with degreewise free cokernel
    bool is_weak_equivalence = false;  // quasi-isomorphism
};
ModelPredicates model_predicates(const ChainMap& f);

struct ChainHomotopy {
    std::vector<IntMat> H;  // H[n]: degree n → n+1, for n = 0..T-1
};
// Find H with dH + Hd = f − g in degrees 0..T-1, as one integer linear system.
std::optional<ChainHomotopy> homotopy_solve(const ChainMap& f, const ChainMap& g);

}  // namespace dk
