#include "dk/simplicial.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dk {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

void emit_monotone(int remaining, int lo, int hi, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        emit_monotone(remaining - 1, v, hi, cur, out);
        cur.pop_back();
    }
}

std::map<std::vector<int>, int> index_of(const std::vector<std::vector<int>>& list) {
    std::map<std::vector<int>, int> idx;
    for (size_t i = 0; i < list.size(); ++i) idx[list[i]] = static_cast<int>(i);
    return idx;
}

}  // namespace

std::vector<std::vector<int>> monotone_maps(int k, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    emit_monotone(k + 1, 0, n, cur, out);
    return out;
}

void SimplicialAbGroup::validate() const {
    require(T >= 0, "simplicial group: negative truncation");
    require(static_cast<int>(ranks.size()) == T + 1, "simplicial group: ranks size mismatch");
    require(static_cast<int>(face.size()) == T + 1 && static_cast<int>(degen.size()) == T + 1,
            "simplicial group: structure map container size mismatch");
    for (int n = 1; n <= T; ++n) {
        require(static_cast<int>(face[n].size()) == n + 1,
                "simplicial group: face count mismatch at level " + std::to_string(n));
        for (int i = 0; i <= n; ++i)
            require(face[n][i].rows() == ranks[n - 1] && face[n][i].cols() == ranks[n],
                    "simplicial group: face shape mismatch at level " + std::to_string(n));
    }
    for (int n = 0; n < T; ++n) {
        require(static_cast<int>(degen[n].size()) == n + 1,
                "simplicial group: degeneracy count mismatch at level " + std::to_string(n));
        for (int i = 0; i <= n; ++i)
            require(degen[n][i].rows() == ranks[n + 1] && degen[n][i].cols() == ranks[n],
                    "simplicial group: degeneracy shape mismatch at level " + std::to_string(n));
    }
    require(degen[T].empty(), "simplicial group: degeneracies above the truncation");

    // d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= T; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                require(face[n - 1][i] * face[n][j] == face[n - 1][j - 1] * face[n][i],
                        "simplicial group: face identity fails at level " + std::to_string(n) +
                            " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
    // s_i s_j = s_{j+1} s_i for i ≤ j
    for (int n = 0; n + 2 <= T; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                require(degen[n + 1][i] * degen[n][j] == degen[n + 1][j + 1] * degen[n][i],
                        "simplicial group: degeneracy identity fails at level " + std::to_string(n) +
                            " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
    // d_i s_j, three cases
    for (int n = 0; n + 1 <= T; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                const IntMat lhs = face[n + 1][i] * degen[n][j];
                IntMat rhs;
                if (i < j)
                    rhs = degen[n - 1][j - 1] * face[n][i];
                else if (i == j || i == j + 1)
                    rhs = IntMat::identity(ranks[n]);
                else
                    rhs = degen[n - 1][j] * face[n][i - 1];
                require(lhs == rhs, "simplicial group: mixed identity fails at level " +
                                        std::to_string(n) + " (i=" + std::to_string(i) +
                                        ", j=" + std::to_string(j) + ")");
            }
}

SimplicialAbGroup SimplicialAbGroup::constant_group(int r, int T) {
    SimplicialAbGroup A;
    A.T = T;
    A.ranks.assign(T + 1, r);
    A.face.resize(T + 1);
    A.degen.resize(T + 1);
    for (int n = 1; n <= T; ++n) A.face[n].assign(n + 1, IntMat::identity(r));
    for (int n = 0; n < T; ++n) A.degen[n].assign(n + 1, IntMat::identity(r));
    return A;
}

SimplicialAbGroup SimplicialAbGroup::standard_simplex(int n, int T) {
    require(n >= 0, "standard_simplex: negative dimension");
    SimplicialAbGroup A;
    A.T = T;
    std::vector<std::vector<std::vector<int>>> basis;
    std::vector<std::map<std::vector<int>, int>> idx;
    for (int k = 0; k <= T; ++k) {
        basis.push_back(monotone_maps(k, n));
        idx.push_back(index_of(basis[k]));
        A.ranks.push_back(static_cast<int>(basis[k].size()));
    }
    A.face.resize(T + 1);
    A.degen.resize(T + 1);
    for (int k = 1; k <= T; ++k) {
        for (int i = 0; i <= k; ++i) {
            IntMat m(A.ranks[k - 1], A.ranks[k]);
            for (int c = 0; c < A.ranks[k]; ++c) {
                std::vector<int> g = basis[k][c];
                g.erase(g.begin() + i);  // precompose with the coface skipping i
                m.at(idx[k - 1].at(g), c) = 1;
            }
            A.face[k].push_back(m);
        }
    }
    for (int k = 0; k < T; ++k) {
        for (int i = 0; i <= k; ++i) {
            IntMat m(A.ranks[k + 1], A.ranks[k]);
            for (int c = 0; c < A.ranks[k]; ++c) {
                std::vector<int> g = basis[k][c];
                g.insert(g.begin() + i, g[i]);  // precompose with the codegeneracy doubling i
                m.at(idx[k + 1].at(g), c) = 1;
            }
            A.degen[k].push_back(m);
        }
    }
    return A;
}

SimplicialAbGroup SimplicialAbGroup::direct_sum(const SimplicialAbGroup& A,
                                                const SimplicialAbGroup& B) {
    require(A.T == B.T, "direct_sum: truncation mismatch");
    SimplicialAbGroup C;
    C.T = A.T;
    C.face.resize(C.T + 1);
    C.degen.resize(C.T + 1);
    for (int n = 0; n <= C.T; ++n) C.ranks.push_back(A.ranks[n] + B.ranks[n]);
    auto block = [](const IntMat& X, const IntMat& Y) {
        IntMat m(X.rows() + Y.rows(), X.cols() + Y.cols());
        m.set_block(0, 0, X);
        m.set_block(X.rows(), X.cols(), Y);
        return m;
    };
    for (int n = 1; n <= C.T; ++n)
        for (int i = 0; i <= n; ++i) C.face[n].push_back(block(A.face[n][i], B.face[n][i]));
    for (int n = 0; n < C.T; ++n)
        for (int i = 0; i <= n; ++i) C.degen[n].push_back(block(A.degen[n][i], B.degen[n][i]));
    return C;
}

bool same_shape(const SimplicialAbGroup& A, const SimplicialAbGroup& B) {
    if (A.T != B.T || A.ranks != B.ranks) return false;
    for (int n = 1; n <= A.T; ++n)
        for (int i = 0; i <= n; ++i)
            if (!(A.face[n][i] == B.face[n][i])) return false;
    for (int n = 0; n < A.T; ++n)
        for (int i = 0; i <= n; ++i)
            if (!(A.degen[n][i] == B.degen[n][i])) return false;
    return true;
}

SimplicialAbGroup tensor(const SimplicialAbGroup& A, const SimplicialAbGroup& B) {
    SimplicialAbGroup C;
    C.T = std::min(A.T, B.T);
    C.face.resize(C.T + 1);
    C.degen.resize(C.T + 1);
    for (int n = 0; n <= C.T; ++n) C.ranks.push_back(A.ranks[n] * B.ranks[n]);
    for (int n = 1; n <= C.T; ++n)
        for (int i = 0; i <= n; ++i)
            C.face[n].push_back(IntMat::kronecker(A.face[n][i], B.face[n][i]));
    for (int n = 0; n < C.T; ++n)
        for (int i = 0; i <= n; ++i)
            C.degen[n].push_back(IntMat::kronecker(A.degen[n][i], B.degen[n][i]));
    return C;
}

void SimplicialMap::validate() const {
    const int top = std::min(source.T, target.T);
    require(static_cast<int>(f.size()) == top + 1, "simplicial map: component count mismatch");
    for (int n = 0; n <= top; ++n)
        require(f[n].rows() == target.rank(n) && f[n].cols() == source.rank(n),
                "simplicial map: component shape mismatch at level " + std::to_string(n));
    for (int n = 1; n <= top; ++n)
        for (int i = 0; i <= n; ++i)
            require(target.face[n][i] * f[n] == f[n - 1] * source.face[n][i],
                    "simplicial map: does not commute with face " + std::to_string(i) +
                        " at level " + std::to_string(n));
    for (int n = 0; n < top; ++n)
        for (int i = 0; i <= n; ++i)
            require(target.degen[n][i] * f[n] == f[n + 1] * source.degen[n][i],
                    "simplicial map: does not commute with degeneracy " + std::to_string(i) +
                        " at level " + std::to_string(n));
}

SimplicialMap SimplicialMap::identity(const SimplicialAbGroup& A) {
    SimplicialMap m{A, A, {}};
    for (int n = 0; n <= A.T; ++n) m.f.push_back(IntMat::identity(A.rank(n)));
    return m;
}

SimplicialMap SimplicialMap::zero_map(const SimplicialAbGroup& A, const SimplicialAbGroup& B) {
    SimplicialMap m{A, B, {}};
    const int top = std::min(A.T, B.T);
    for (int n = 0; n <= top; ++n) m.f.push_back(IntMat(B.rank(n), A.rank(n)));
    return m;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    require(same_shape(g.source, f.target), "compose: middle simplicial groups differ");
    SimplicialMap h{f.source, g.target, {}};
    const int top = std::min(f.top_level(), g.top_level());
    for (int n = 0; n <= top; ++n) h.f.push_back(g.f[n] * f.f[n]);
    return h;
}

bool maps_equal(const SimplicialMap& f, const SimplicialMap& g) {
    if (!same_shape(f.source, g.source) || !same_shape(f.target, g.target)) return false;
    if (f.f.size() != g.f.size()) return false;
    for (size_t n = 0; n < f.f.size(); ++n)
        if (!(f.f[n] == g.f[n])) return false;
    return true;
}

SimplicialMap tensor_of_maps(const SimplicialMap& f, const SimplicialMap& g) {
    SimplicialMap h{tensor(f.source, g.source), tensor(f.target, g.target), {}};
    for (int n = 0; n <= h.source.T; ++n) h.f.push_back(IntMat::kronecker(f.f[n], g.f[n]));
    return h;
}

IntMat simplicial_operator(const SimplicialAbGroup& A, const std::vector<int>& theta, int n) {
    const int m = static_cast<int>(theta.size()) - 1;
    require(m >= 0 && m <= A.T && n >= 0 && n <= A.T, "simplicial_operator: level out of range");
    for (int x = 0; x <= m; ++x) {
        require(theta[x] >= 0 && theta[x] <= n && (x == 0 || theta[x] >= theta[x - 1]),
                "simplicial_operator: map is not monotone into [n]");
    }
    // Identity?
    if (m == n) {
        bool ident = true;
        for (int x = 0; x <= m; ++x) ident = ident && theta[x] == x;
        if (ident) return IntMat::identity(A.rank(n));
    }
    // Not surjective: peel a coface δ_i off the left, θ = δ_i ∘ θ'.
    std::vector<bool> hit(n + 1, false);
    for (int v : theta) hit[v] = true;
    for (int i = 0; i <= n; ++i) {
        if (!hit[i]) {
            std::vector<int> rest;
            for (int v : theta) rest.push_back(v < i ? v : v - 1);
            return simplicial_operator(A, rest, n - 1) * A.d(n, i);
        }
    }
    // Surjective but not injective: peel a codegeneracy σ_j off the right.
    for (int j = 0; j < m; ++j) {
        if (theta[j] == theta[j + 1]) {
            std::vector<int> rest = theta;
            rest.erase(rest.begin() + j + 1);
            return A.s(m - 1, j) * simplicial_operator(A, rest, n);
        }
    }
    return IntMat::identity(A.rank(n));  // surjective and injective on equal levels: identity
}

IntMat moore_basis(const SimplicialAbGroup& A, int n) {
    require(n >= 0 && n <= A.T, "moore_basis: level out of range");
    if (n == 0) return IntMat::identity(A.rank(0));
    std::vector<IntMat> rows;
    for (int i = 1; i <= n; ++i) rows.push_back(A.face[n][i]);
    return kernel_basis(IntMat::vstack(rows, A.rank(n)));
}

bool is_fibration(const SimplicialMap& f) {
    const int top = std::min(f.source.T, f.target.T);
    for (int n = 1; n <= top; ++n) {
        const IntMat KA = moore_basis(f.source, n);
        const IntMat KB = moore_basis(f.target, n);
        auto M = solve(KB, f.f[n] * KA);
        if (!M) throw std::runtime_error("is_fibration: map does not preserve the Moore subgroup");
        if (!is_surjective(*M)) return false;
    }
    return true;
}

}  // namespace dk
