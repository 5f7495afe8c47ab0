// Differential graded algebras and simplicial rings, together with the
// ring-valued correspondence: Γ carries a DGA to a simplicial ring via the
// monoidal structure map φ, and N carries a simplicial ring to a DGA via the
// shuffle map.  Includes the named example families (integers, square-zero
// extensions, tensor algebras, cyclic bar constructions) used by the identity
// checks, and the packaged lemma-level verifications.

#pragma once

#include <string>
#include <vector>

#include "dk/doldkan.hpp"

namespace dk {

struct DGAlgebra {
    ChainComplex R;
    // mult[p][q]: R_p ⊗ R_q → R_{p+q} on Kronecker bases, for p+q ≤ T.
    std::vector<std::vector<IntMat>> mult;
    IntMat unit;  // column in R_0

    const IntMat& mu(int p, int q) const { return mult[p][q]; }
    // Multiplication bundled as a chain map R⊗R → R (this is Leibniz).
    ChainMap mu_chain_map() const;
    void validate() const;  // shapes, Leibniz, associativity, two-sided unit
};

struct SimplicialRing {
    SimplicialAbGroup A;
    std::vector<IntMat> mult;  // per level: A_n ⊗ A_n → A_n
    std::vector<IntMat> unit;  // per level: column in A_n

    // Multiplication bundled as a simplicial map A⊗A → A (this is the
    // statement that faces and degeneracies are ring homomorphisms).
    SimplicialMap mu_simplicial_map() const;
    void validate() const;
};

// Named examples.
DGAlgebra dga_integers(int T);
// Square-zero extension Z ⊕ C: (a,x)(b,y) = (ab, ay + bx).
DGAlgebra square_zero(const ChainComplex& C);
// Tensor algebra on C with C_0 = 0: words with parts ≥ 1 (finite per degree).
DGAlgebra tensor_algebra(const ChainComplex& C);
// Length-truncated tensor algebra: words of length ≤ max_len, longer products
// are zero.  The length filtration is differential-closed, so this is a DGA.
DGAlgebra truncated_tensor_algebra(const ChainComplex& C, int max_len);

// Constant simplicial ring on a unital ring (mult: r x r² matrix, unit: r x 1).
SimplicialRing constant_ring(const IntMat& mult, const IntMat& unit, int T);
// Cyclic bar construction of a commutative ring B: level n is B^{⊗(n+1)},
// inner faces multiply adjacent factors, the last face wraps around, and
// degeneracies insert the unit.  Pointwise multiplication levelwise.
SimplicialRing hochschild_ring(const IntMat& mult, const IntMat& unit, int T);
SimplicialRing tensor_ring(const SimplicialRing& R1, const SimplicialRing& R2);

// Small commutative coefficient rings for the examples: Z[t]/(t²) and Z[t]/(t²−1).
IntMat dual_numbers_mult();
IntMat involution_ring_mult();

struct GammaRingData {
    GammaData G;
    SimplicialRing ring;
};
// ΓR with the product Γ(μ_R) ∘ φ_{R,R} (computed by the front/back closed
// form of φ, which the tests pin against the literal composite).
GammaRingData gamma_ring(const DGAlgebra& R, int T);

// κr for r ∈ R₁: the level-1 element of ΓR with values [0]↦0, [1]↦dr, ι↦r.
IntMat kappa(const DGAlgebra& R, const GammaData& G, const IntMat& r);

struct NormalizedRingData {
    NormalizationData N;
    DGAlgebra dga;
};
// N(A) with the product N(μ) ∘ (normalized shuffle) and unit π(1).
NormalizedRingData normalize_ring(const SimplicialRing& S);

struct CheckReport {
    bool ok = true;
    std::string detail;
};

// Counit compatibility for a DGA R: the shuffle/φ square against ε⊗ε commutes
// for C = D = R, and ε: NΓR → R is a DGA isomorphism.
CheckReport counit_ring_check(const DGAlgebra& R, int T);

// The unit η fails to be monoidal: on Γ(Z[1])⊗Γ(Z[1]) the level-1 composite
// through Γ(Z[2]) is zero while η itself is injective; after N the two maps
// are chain homotopic.
CheckReport eta_not_monoidal_witness();

}  // namespace dk
