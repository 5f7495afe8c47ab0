#include "dk/random_gen.hpp"

#include <algorithm>

#include "dk/doldkan.hpp"

namespace dk {

int rand_range(Rng& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

IntMat random_unimodular(Rng& rng, int n) {
    IntMat U = IntMat::identity(n);
    if (n < 2) return U;
    // A bounded number of +-1 transvections and swaps gives a genuine basis
    // change while keeping U, its inverse, and everything conjugated by them
    // sparse with small entries; unbounded random transvections make every
    // downstream echelon reduction blow up on dense tensor-level matrices.
    const int steps = std::min(n, 6);
    for (int step = 0; step < steps; ++step) {
        const int i = rand_range(rng, 0, n - 1), j = rand_range(rng, 0, n - 1);
        if (i == j) continue;
        if (rand_range(rng, 0, 3) == 0) {
            for (int k = 0; k < n; ++k) std::swap(U.at(i, k), U.at(j, k));
        } else {
            const Int c(rand_range(rng, 0, 1) == 0 ? -1 : 1);
            for (int k = 0; k < n; ++k) U.at(j, k) += c * U.at(i, k);
        }
    }
    return U;
}

IntMat random_matrix(Rng& rng, int rows, int cols, int lo, int hi) {
    IntMat M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M.at(i, j) = rand_range(rng, lo, hi);
    return M;
}

ChainComplex random_complex(Rng& rng, int T, int total_rank) {
    ChainComplex C = ChainComplex::zero_complex(T);
    int used = 0;
    while (used < total_rank) {
        const int m = rand_range(rng, 0, T);
        const bool disk = m >= 1 && rand_range(rng, 0, 1) == 1;
        if (disk && used + 2 > total_rank) break;
        C = ChainComplex::direct_sum(
            C, disk ? ChainComplex::disk(m, T) : ChainComplex::sphere(m, T));
        used += disk ? 2 : 1;
    }
    std::vector<IntMat> U, Uinv;
    for (int n = 0; n <= T; ++n) {
        U.push_back(random_unimodular(rng, C.rank(n)));
        Uinv.push_back(*integer_inverse(U.back()));
    }
    for (int n = 1; n <= T; ++n) C.d[n] = U[n - 1] * C.d[n] * Uinv[n];
    C.validate();
    return C;
}

namespace {

// Sample an integer point of the lattice ker(M) with small coordinates.
IntMat sample_kernel(Rng& rng, const IntMat& M) {
    const IntMat K = kernel_basis(M);
    IntMat x(K.rows(), 1);
    for (int c = 0; c < K.cols(); ++c) {
        const Int w(rand_range(rng, -2, 2));
        for (int r = 0; r < K.rows(); ++r) x.at(r, 0) += w * K.at(r, c);
    }
    return x;
}

}  // namespace

ChainMap random_chain_map(Rng& rng, const ChainComplex& C, const ChainComplex& D) {
    const int T = std::min(C.T, D.T);
    // Unknowns: vec(f_n) column-major per degree; constraints d f = f d.
    std::vector<int> off(T + 2, 0);
    for (int n = 0; n <= T; ++n) off[n + 1] = off[n] + D.rank(n) * C.rank(n);
    int rows = 0;
    for (int n = 1; n <= T; ++n) rows += D.rank(n - 1) * C.rank(n);
    IntMat M(rows, off[T + 1]);
    int roff = 0;
    for (int n = 1; n <= T; ++n) {
        if (D.rank(n - 1) > 0 && C.rank(n) > 0) {
            if (D.rank(n) > 0)
                M.set_block(roff, off[n], IntMat::kronecker(IntMat::identity(C.rank(n)), D.d[n]));
            if (C.rank(n - 1) > 0) {
                IntMat blk = IntMat::kronecker(C.d[n].transpose(), IntMat::identity(D.rank(n - 1)));
                M.set_block(roff, off[n - 1], -blk);
            }
        }
        roff += D.rank(n - 1) * C.rank(n);
    }
    const IntMat x = sample_kernel(rng, M);
    ChainMap f{C, D, {}};
    for (int n = 0; n <= T; ++n) {
        IntMat m(D.rank(n), C.rank(n));
        for (int j = 0; j < m.cols(); ++j)
            for (int i = 0; i < m.rows(); ++i) m.at(i, j) = x.at(off[n] + j * m.rows() + i, 0);
        f.f.push_back(m);
    }
    f.validate();
    return f;
}

SimplicialAbGroup random_simplicial_group(Rng& rng, int T, int total_rank, bool with_simplex) {
    SimplicialAbGroup A = gamma(random_complex(rng, T, total_rank), T).G;
    if (with_simplex)
        A = SimplicialAbGroup::direct_sum(
            A, SimplicialAbGroup::standard_simplex(rand_range(rng, 0, std::min(T, 2)), T));
    std::vector<IntMat> U, Uinv;
    for (int n = 0; n <= T; ++n) {
        U.push_back(random_unimodular(rng, A.rank(n)));
        Uinv.push_back(*integer_inverse(U.back()));
    }
    SimplicialAbGroup B = A;
    for (int n = 1; n <= T; ++n)
        for (int i = 0; i <= n; ++i) B.face[n][i] = U[n - 1] * A.face[n][i] * Uinv[n];
    for (int n = 0; n < T; ++n)
        for (int i = 0; i <= n; ++i) B.degen[n][i] = U[n + 1] * A.degen[n][i] * Uinv[n];
    B.validate();
    return B;
}

SimplicialMap random_simplicial_map(Rng& rng, const SimplicialAbGroup& A,
                                    const SimplicialAbGroup& B) {
    const int T = std::min(A.T, B.T);
    std::vector<int> off(T + 2, 0);
    for (int n = 0; n <= T; ++n) off[n + 1] = off[n] + B.rank(n) * A.rank(n);
    std::vector<IntMat> rows;
    auto commute_rows = [&](int n, const IntMat& sA, const IntMat& sB, int lvl_src, int lvl_dst) {
        // Constraint sB · f_{lvl_src} − f_{lvl_dst} · sA = 0 as one block row.
        IntMat R(sB.rows() * A.rank(lvl_src), off[T + 1]);
        if (A.rank(lvl_src) > 0 && B.rank(lvl_dst) > 0)
            R.set_block(0, off[lvl_src], IntMat::kronecker(IntMat::identity(A.rank(lvl_src)), sB));
        if (A.rank(lvl_src) > 0 && B.rank(lvl_dst) > 0 && A.rank(lvl_dst) > 0)
            R.set_block(0, off[lvl_dst],
                        -IntMat::kronecker(sA.transpose(), IntMat::identity(B.rank(lvl_dst))));
        (void)n;
        rows.push_back(R);
    };
    for (int n = 1; n <= T; ++n)
        for (int i = 0; i <= n; ++i) commute_rows(n, A.face[n][i], B.face[n][i], n, n - 1);
    for (int n = 0; n < T; ++n)
        for (int i = 0; i <= n; ++i) commute_rows(n, A.degen[n][i], B.degen[n][i], n, n + 1);
    const IntMat M = IntMat::vstack(rows, off[T + 1]);
    const IntMat x = sample_kernel(rng, M);
    SimplicialMap f{A, B, {}};
    for (int n = 0; n <= T; ++n) {
        IntMat m(B.rank(n), A.rank(n));
        for (int j = 0; j < m.cols(); ++j)
            for (int i = 0; i < m.rows(); ++i) m.at(i, j) = x.at(off[n] + j * m.rows() + i, 0);
        f.f.push_back(m);
    }
    f.validate();
    return f;
}

}  // namespace dk
