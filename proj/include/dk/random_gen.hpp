// Deterministic random instance generators for property tests and check
// suites.  Complexes are direct sums of spheres and disks conjugated by random
// unimodular matrices; simplicial groups are built from Γ of random complexes
// and standard simplices the same way, so simplicial identities hold by
// construction.  Maps are sampled from the integer lattice of all structure-
// compatible maps (kernel of the commutation constraints).

#pragma once

#include <random>

#include "dk/chain.hpp"
#include "dk/simplicial.hpp"

namespace dk {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi] drawn via the raw engine (stable across
// platforms, unlike std::uniform_int_distribution).
int rand_range(Rng& rng, int lo, int hi);

IntMat random_unimodular(Rng& rng, int n);
IntMat random_matrix(Rng& rng, int rows, int cols, int lo, int hi);

// Direct sum of random spheres/disks with ranks twisted by unimodular base
// changes; total rank over all degrees is at most total_rank (can be less).
ChainComplex random_complex(Rng& rng, int T, int total_rank);

// A chain map sampled from the lattice of all chain maps C → D.
ChainMap random_chain_map(Rng& rng, const ChainComplex& C, const ChainComplex& D);

// Γ(random complex), optionally ⊕ ZΔ^j, conjugated levelwise.
SimplicialAbGroup random_simplicial_group(Rng& rng, int T, int total_rank, bool with_simplex);

// A simplicial map sampled from the lattice of all simplicial maps A → B.
SimplicialMap random_simplicial_map(Rng& rng, const SimplicialAbGroup& A,
                                    const SimplicialAbGroup& B);

}  // namespace dk
