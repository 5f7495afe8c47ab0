// Chain complexes presented by generators and relations in each degree.
// Degree n is the quotient Z^{gens[n]} / im(rel[n]); the differential is given
// on generators and must carry the relation lattice into the relation lattice.
// This covers quotient complexes (relative tensor products, truncations) that
// are not naturally free, while keeping all arithmetic over Z.

#pragma once

#include <vector>

#include "dk/chain.hpp"
#include "dk/intmat.hpp"

namespace dk {

struct PresentedComplex {
    int T = 0;
    std::vector<int> gens;     // size T+1
    std::vector<IntMat> rel;   // size T+1; rel[n]: gens[n] x (number of relations)
    std::vector<IntMat> d;     // size T+1; d[0] unused, d[n]: gens[n-1] x gens[n]

    int gen_count(int n) const { return (n >= 0 && n <= T) ? gens[n] : 0; }
    void validate() const;  // d(rel) ⊆ rel and d∘d ∈ rel, degreewise

    static PresentedComplex from_chain(const ChainComplex& C);
};

struct PresentedMap {
    PresentedComplex source, target;
    std::vector<IntMat> f;  // on generators, degrees 0..min(T_src, T_tgt)

    int top_degree() const { return static_cast<int>(f.size()) - 1; }
    void validate() const;  // f(rel) ⊆ rel and fd − df ∈ rel, degreewise
};

// Basis (as matrix columns) of the lattice of degree-n elements whose boundary
// lies in the relation lattice of degree n-1.  The homology presentation in
// degree n is coker of boundaries-and-relations expressed in this basis.
IntMat cycle_lattice_basis(const PresentedComplex& C, int n);

HomologyTable homology(const PresentedComplex& C);  // degrees 0..T-1
bool is_quasi_iso(const PresentedMap& f);
// Degreewise isomorphism of the presented groups themselves (degrees 0..T).
bool is_degreewise_iso(const PresentedMap& f);

}  // namespace dk
