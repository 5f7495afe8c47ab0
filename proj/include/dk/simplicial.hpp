// Truncated simplicial abelian groups: levelwise finitely generated free
// groups for levels 0..T with face maps d_i and degeneracy maps s_i subject to
// the simplicial identities.  Degeneracies into level T+1 are outside the
// truncation window and are not stored.

#pragma once

#include <map>
#include <vector>

#include "dk/intmat.hpp"

namespace dk {

// All monotone maps [k] -> [n], as value sequences of length k+1, in
// lexicographic order.  This is the level-k basis of the standard n-simplex.
std::vector<std::vector<int>> monotone_maps(int k, int n);

struct SimplicialAbGroup {
    int T = 0;
    std::vector<int> ranks;                // size T+1
    std::vector<std::vector<IntMat>> face;   // face[n][i]: level n → n−1, 1 ≤ n ≤ T, 0 ≤ i ≤ n
    std::vector<std::vector<IntMat>> degen;  // degen[n][i]: level n → n+1, 0 ≤ n < T, 0 ≤ i ≤ n

    int rank(int n) const { return (n >= 0 && n <= T) ? ranks[n] : 0; }
    const IntMat& d(int n, int i) const { return face[n][i]; }
    const IntMat& s(int n, int i) const { return degen[n][i]; }
    void validate() const;  // shapes and all simplicial identities within the window

    static SimplicialAbGroup constant_group(int r, int T);
    static SimplicialAbGroup standard_simplex(int n, int T);
    static SimplicialAbGroup direct_sum(const SimplicialAbGroup& A, const SimplicialAbGroup& B);
};

bool same_shape(const SimplicialAbGroup& A, const SimplicialAbGroup& B);

// Levelwise tensor product: (A⊗B)_n = A_n ⊗ B_n with diagonal structure maps.
SimplicialAbGroup tensor(const SimplicialAbGroup& A, const SimplicialAbGroup& B);

struct SimplicialMap {
    SimplicialAbGroup source, target;
    std::vector<IntMat> f;  // levels 0..min(T_src, T_tgt)

    int top_level() const { return static_cast<int>(f.size()) - 1; }
    void validate() const;  // commutes with faces and degeneracies

    static SimplicialMap identity(const SimplicialAbGroup& A);
    static SimplicialMap zero_map(const SimplicialAbGroup& A, const SimplicialAbGroup& B);
};

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);
bool maps_equal(const SimplicialMap& f, const SimplicialMap& g);
SimplicialMap tensor_of_maps(const SimplicialMap& f, const SimplicialMap& g);

// The action A(θ): A_n → A_m of a monotone map θ: [m] → [n] (given by its
// values), assembled from faces and degeneracies by peeling off cofaces and
// codegeneracies; requires n ≤ T and m ≤ T.
IntMat simplicial_operator(const SimplicialAbGroup& A, const std::vector<int>& theta, int n);

// Saturated basis of the Moore subgroup N(A)_n = ∩_{i≥1} ker d_i (identity at n=0).
IntMat moore_basis(const SimplicialAbGroup& A, int n);

// Kan fibration test: the normalization is surjective in degrees 1..T.
bool is_fibration(const SimplicialMap& f);

}  // namespace dk
