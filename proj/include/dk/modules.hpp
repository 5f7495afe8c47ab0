// Modules: differential graded modules over a DGA and simplicial modules over
// a simplicial ring, relative tensor products as presented complexes, the
// comparison map ∇ between the two relative tensors, and restriction/extension
// of scalars along DGA homomorphisms with Quillen-invariance spot checks.
//
// Modules are right modules throughout.  A left module is encoded as a right
// module over the opposite algebra; the Koszul sign for the encoding lives in
// exactly one place, left_action_chain_map / the relation matrices built from it.

#pragma once

#include <vector>

#include "dk/algebra.hpp"
#include "dk/presented.hpp"

namespace dk {

// Permutation matrix V_a ⊗ V_b → V_b ⊗ V_a on Kronecker-indexed bases.
IntMat swap_perm(int a, int b);

// Opposite algebra: μ^op(x⊗y) = (−1)^{|x||y|} μ(y⊗x); same complex and unit.
DGAlgebra opposite_algebra(const DGAlgebra& R);
// Levelwise opposite (no signs at the simplicial level).
SimplicialRing opposite_ring(const SimplicialRing& A);

struct DGModule {
    ChainComplex M;
    DGAlgebra R;
    // act[p][q]: M_p ⊗ R_q → M_{p+q} on Kronecker bases, p+q ≤ T.
    std::vector<std::vector<IntMat>> act;

    ChainMap act_chain_map() const;  // M⊗R → M; validity = Leibniz for the action
    void validate() const;

    static DGModule ring_as_module(const DGAlgebra& R);
    static DGModule free_module(const ChainComplex& X, const DGAlgebra& R);  // X⊗R
};

struct SimplicialModule {
    SimplicialAbGroup M;
    SimplicialRing A;
    std::vector<IntMat> act;  // per level: M_n ⊗ A_n → M_n

    SimplicialMap act_simplicial_map() const;  // M⊗A → M; validity = equivariance
    void validate() const;

    static SimplicialModule ring_as_module(const SimplicialRing& A);
    static SimplicialModule free_module(const SimplicialAbGroup& X, const SimplicialRing& A);
};

// The left action R⊗M′ → M′ of a right module M′ over opposite_algebra(R),
// with the Koszul sign: λ(r⊗m) = (−1)^{|r||m|} act(m⊗r).
ChainMap left_action_chain_map(const DGModule& Mop);

struct RelativeTensorDG {
    PresentedComplex Q;                // generators = (M⊗M′)_n, relations = the action difference
    std::vector<CokernelData> groups;  // free rank and torsion per degree
};
// M ⊗_R M′ for M a right module over R and M′ a right module over the
// opposite algebra of R; degreewise cokernel of act⊗1 − 1⊗act′.
RelativeTensorDG relative_tensor_dg(const DGModule& M, const DGModule& Mop);

struct RelativeTensorSimplicial {
    SimplicialAbGroup ambient;  // M⊗M′ with diagonal structure maps
    std::vector<IntMat> rel;    // levelwise relation columns, closed under the structure maps
    std::vector<CokernelData> groups;
};
RelativeTensorSimplicial relative_tensor_simplicial(const SimplicialModule& M,
                                                    const SimplicialModule& Mop);

// Moore complex of a levelwise quotient: generators = Moore basis of the
// ambient group, relations = the projected relation lattice.
PresentedComplex presented_normalize(const NormalizationData& Namb,
                                     const std::vector<IntMat>& rel);

// ∇: NM ⊗_{NA} NM′ → N(M ⊗_A M′), induced on the quotient presentations by the
// normalized shuffle.  Descent through both quotients is a hard error if it
// fails; the returned map is validated.
PresentedMap nabla_A(const SimplicialModule& M, const SimplicialModule& Mop);

struct DGAlgebraMap {
    DGAlgebra R, S;
    ChainMap f;
    void validate() const;  // chain map, multiplicative, unital
    static DGAlgebraMap identity_map(const DGAlgebra& R);
};

// Same underlying complex, action through f.
DGModule restrict_scalars(const DGAlgebraMap& f, const DGModule& M_over_S);

struct ExtendedModule {
    PresentedComplex Q;                     // generators = (M⊗S)_n
    std::vector<std::vector<IntMat>> act;   // S-action on generators (descends)
    std::vector<CokernelData> groups;
};
// M ⊗_R S with the right S-action on generators; the action's descent through
// the relations is checked on construction.
ExtendedModule extend_scalars(const DGAlgebraMap& f, const DGModule& M_over_R);
// m ↦ m⊗1 on generators of extend_scalars(f, M).
std::vector<IntMat> extension_unit(const DGAlgebraMap& f, const DGModule& M);

// Triangle identities for extension ⊣ restriction on the free modules X⊗R and
// X⊗S, via the canonical identification of extend(X⊗R) with X⊗S.
CheckReport adjunction_check(const DGAlgebraMap& f, const ChainComplex& X);

// For a quasi-isomorphism f: R → S, the unit M → M⊗_R S is a quasi-isomorphism
// on each free sample M = X⊗R.
CheckReport quillen_invariance_spot_check(const DGAlgebraMap& f,
                                          const std::vector<ChainComplex>& samples);

struct NormalizedModuleData {
    NormalizationData NM;
    DGModule dgm;  // over NR.dga
};
// Action = N(act) ∘ normalized shuffle; NR must be normalize_ring(M.A).
NormalizedModuleData normalize_module(const SimplicialModule& M, const NormalizedRingData& NR);

}  // namespace dk
