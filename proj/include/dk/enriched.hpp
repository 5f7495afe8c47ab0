// Chain-complex-valued I-graphs and categories enriched in chain complexes
// ("rings with many objects"), their modules, free (representable) modules
// with the Yoneda correspondence, and restriction/extension of scalars along
// an enriched functor that is the identity on objects.
//
// Objects are 0..nobj−1; G(i,j) is the complex of arrows i → j, and
// composition goes O(j,k)⊗O(i,j) → O(i,k).  The graph tensor product sums
// over the middle index in increasing object order.

#pragma once

#include <vector>

#include "dk/modules.hpp"

namespace dk {

struct IGraph {
    int nobj = 0;
    int T = 0;
    std::vector<std::vector<ChainComplex>> entry;  // entry[i][j] = G(i,j)

    const ChainComplex& at(int i, int j) const { return entry[i][j]; }
    void validate() const;
};

IGraph unit_graph(int nobj, int T);
// (G⊗H)(i,j) = ⊕_k G(k,j) ⊗ H(i,k).
IGraph graph_tensor(const IGraph& G, const IGraph& H);
// Start row of the middle-index-k summand of (G⊗H)(i,j) in degree n.
int graph_summand_offset(const IGraph& G, const IGraph& H, int i, int j, int k, int n);
// Canonical reindexing ((G⊗H)⊗K)(i,j) → (G⊗(H⊗K))(i,j); a permutation per degree.
ChainMap graph_associator(const IGraph& G, const IGraph& H, const IGraph& K, int i, int j);

struct ICategory {
    IGraph O;
    // comp[i][j][k]: O(j,k)⊗O(i,j) → O(i,k) as a chain map.
    std::vector<std::vector<std::vector<ChainMap>>> comp;
    std::vector<IntMat> unit;  // unit[i]: column in O(i,i)_0

    // The (p,q) block of the composition, O(j,k)_p ⊗ O(i,j)_q → O(i,k)_{p+q}.
    IntMat comp_block(int i, int j, int k, int p, int q) const;
    void validate() const;  // chain maps, associativity, unit laws
};

CheckReport validate_category(const ICategory& O);

// Categories on one object are monoids; the two translations are exact
// inverses on the stored matrices.
ICategory category_from_monoid(const DGAlgebra& R);
DGAlgebra monoid_from_category(const ICategory& C);  // requires nobj = 1

// Free category on a graph of generators whose entries vanish in degree 0:
// arrows are composable paths, composition is concatenation, differentials
// act edgewise with Koszul signs.
ICategory free_category(const IGraph& gen);

struct OModule {
    ICategory O;
    std::vector<ChainComplex> M;                // M[i]
    std::vector<std::vector<ChainMap>> act;     // act[i][j]: M(j)⊗O(i,j) → M(i)

    IntMat act_block(int i, int j, int p, int q) const;
    void validate() const;
};

// Representable module F_j(i) = O(i,j), with composition as the action.
OModule free_omodule(const ICategory& O, int j);

struct YonedaData {
    IntMat hom_basis;   // columns: basis of the lattice of module maps F_j → M
    IntMat evaluation;  // value at the identity of j, a column in M(j)_0 per basis map
};
// Module homomorphisms F_j → M, computed by solving the chain and
// equivariance constraints; evaluation is an isomorphism onto the degree-0
// cycles of M(j).
YonedaData yoneda(const OModule& M, int j);

struct ICategoryMap {
    ICategory O, R;                          // identity on objects
    std::vector<std::vector<ChainMap>> f;    // f[i][j]: O(i,j) → R(i,j)
    void validate() const;                   // compatible with composition and units
    static ICategoryMap identity_map(const ICategory& O);
};

OModule restrict_omodule(const ICategoryMap& psi, const OModule& M_over_R);

struct ExtendedOModule {
    std::vector<ChainComplex> ambient;             // ⊕_j M(j)⊗R(i,j), per object i
    std::vector<PresentedComplex> Q;               // the coequalizer presentation
    std::vector<std::vector<ChainMap>> act;        // act[i2][i] on ambient generators
    std::vector<std::vector<CokernelData>> groups;  // groups[i][n]
};
// The coequalizer ⊕_{j,k} M(k)⊗O(j,k)⊗R(i,j) ⇉ ⊕_j M(j)⊗R(i,j), as an
// entrywise cokernel, with the R-action on generators (descent is checked).
ExtendedOModule extend_omodule(const ICategoryMap& psi, const OModule& M_over_O);
// m ↦ m⊗id on generators; unit[i][n]: M(i)_n → ambient[i]_n.
std::vector<std::vector<IntMat>> extension_unit_omodule(const ICategoryMap& psi, const OModule& M);

// Triangle identities for extension ⊣ restriction on the representables F_j,
// through the canonical collapse extend(F_j^O) ≅ F_j^R.
CheckReport enriched_adjunction_check(const ICategoryMap& psi, int j);

// For a pointwise quasi-isomorphism Ψ, every unit F_j^O → restrict(extend(F_j^O))
// is a pointwise quasi-isomorphism.
CheckReport enriched_quillen_spot_check(const ICategoryMap& psi);

}  // namespace dk
