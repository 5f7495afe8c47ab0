#include "dk/chain.hpp"

#include <stdexcept>
#include <string>

#include "dk/presented.hpp"

namespace dk {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

}  // namespace

void ChainComplex::validate() const {
    require(T >= 0, "chain complex: negative truncation");
    require(static_cast<int>(ranks.size()) == T + 1, "chain complex: ranks size mismatch");
    require(static_cast<int>(d.size()) == T + 1, "chain complex: differential count mismatch");
    for (int n = 0; n <= T; ++n) require(ranks[n] >= 0, "chain complex: negative rank");
    for (int n = 1; n <= T; ++n) {
        require(d[n].rows() == ranks[n - 1] && d[n].cols() == ranks[n],
                "chain complex: differential shape mismatch in degree " + std::to_string(n));
    }
    for (int n = 2; n <= T; ++n) {
        require((d[n - 1] * d[n]).is_zero(),
                "chain complex: d∘d nonzero in degree " + std::to_string(n));
    }
}

ChainComplex ChainComplex::zero_complex(int T) {
    ChainComplex C;
    C.T = T;
    C.ranks.assign(T + 1, 0);
    C.d.assign(T + 1, IntMat(0, 0));
    for (int n = 1; n <= T; ++n) C.d[n] = IntMat(0, 0);
    return C;
}

ChainComplex ChainComplex::sphere(int m, int T) {
    require(m >= 0 && m <= T, "sphere: degree out of range");
    ChainComplex C = zero_complex(T);
    C.ranks[m] = 1;
    for (int n = 1; n <= T; ++n) C.d[n] = IntMat(C.ranks[n - 1], C.ranks[n]);
    return C;
}

ChainComplex ChainComplex::disk(int m, int T) {
    require(m >= 1 && m <= T, "disk: degree out of range");
    ChainComplex C = zero_complex(T);
    C.ranks[m] = 1;
    C.ranks[m - 1] = 1;
    for (int n = 1; n <= T; ++n) C.d[n] = IntMat(C.ranks[n - 1], C.ranks[n]);
    C.d[m] = IntMat::identity(1);
    return C;
}

ChainComplex ChainComplex::direct_sum(const ChainComplex& A, const ChainComplex& B) {
    require(A.T == B.T, "direct_sum: truncation mismatch");
    ChainComplex C = zero_complex(A.T);
    for (int n = 0; n <= C.T; ++n) C.ranks[n] = A.ranks[n] + B.ranks[n];
    for (int n = 1; n <= C.T; ++n) {
        IntMat m(C.ranks[n - 1], C.ranks[n]);
        m.set_block(0, 0, A.d[n]);
        m.set_block(A.ranks[n - 1], A.ranks[n], B.d[n]);
        C.d[n] = m;
    }
    return C;
}

bool same_shape(const ChainComplex& A, const ChainComplex& B) {
    if (A.T != B.T || A.ranks != B.ranks) return false;
    for (int n = 1; n <= A.T; ++n)
        if (!(A.d[n] == B.d[n])) return false;
    return true;
}

int tensor_offset(const ChainComplex& C, const ChainComplex& D, int n, int p) {
    int off = 0;
    for (int k = 0; k < p; ++k) off += C.rank(k) * D.rank(n - k);
    return off;
}

ChainComplex tensor(const ChainComplex& C, const ChainComplex& D) {
    const int T = std::min(C.T, D.T);
    ChainComplex E = ChainComplex::zero_complex(T);
    for (int n = 0; n <= T; ++n) E.ranks[n] = tensor_offset(C, D, n, n + 1);
    for (int n = 1; n <= T; ++n) {
        IntMat m(E.ranks[n - 1], E.ranks[n]);
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            if (C.rank(p) == 0 || D.rank(q) == 0) continue;
            const int src = tensor_offset(C, D, n, p);
            // d(x⊗y) = dx⊗y + (−1)^{|x|} x⊗dy
            if (p >= 1 && C.rank(p - 1) > 0) {
                m.set_block(tensor_offset(C, D, n - 1, p - 1), src,
                            IntMat::kronecker(C.d[p], IntMat::identity(D.rank(q))));
            }
            if (q >= 1 && D.rank(q - 1) > 0) {
                IntMat blk = IntMat::kronecker(IntMat::identity(C.rank(p)), D.d[q]);
                if (p % 2 == 1) blk = -blk;
                m.set_block(tensor_offset(C, D, n - 1, p), src, blk);
            }
        }
        E.d[n] = m;
    }
    return E;
}

void ChainMap::validate() const {
    const int top = std::min(source.T, target.T);
    require(static_cast<int>(f.size()) == top + 1, "chain map: component count mismatch");
    for (int n = 0; n <= top; ++n) {
        require(f[n].rows() == target.rank(n) && f[n].cols() == source.rank(n),
                "chain map: component shape mismatch in degree " + std::to_string(n));
    }
    for (int n = 1; n <= top; ++n) {
        require(target.d[n] * f[n] == f[n - 1] * source.d[n],
                "chain map: does not commute with d in degree " + std::to_string(n));
    }
}

ChainMap ChainMap::identity(const ChainComplex& C) {
    ChainMap m{C, C, {}};
    for (int n = 0; n <= C.T; ++n) m.f.push_back(IntMat::identity(C.rank(n)));
    return m;
}

ChainMap ChainMap::zero_map(const ChainComplex& C, const ChainComplex& D) {
    ChainMap m{C, D, {}};
    const int top = std::min(C.T, D.T);
    for (int n = 0; n <= top; ++n) m.f.push_back(IntMat(D.rank(n), C.rank(n)));
    return m;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    require(same_shape(g.source, f.target), "compose: middle complexes differ");
    ChainMap h{f.source, g.target, {}};
    const int top = std::min(f.top_degree(), g.top_degree());
    for (int n = 0; n <= top; ++n) h.f.push_back(g.f[n] * f.f[n]);
    return h;
}

ChainMap map_sum(const ChainMap& f, const ChainMap& g) {
    require(same_shape(f.source, g.source) && same_shape(f.target, g.target),
            "map_sum: shape mismatch");
    ChainMap h{f.source, f.target, {}};
    for (int n = 0; n <= f.top_degree(); ++n) h.f.push_back(f.f[n] + g.f[n]);
    return h;
}

ChainMap map_diff(const ChainMap& f, const ChainMap& g) {
    require(same_shape(f.source, g.source) && same_shape(f.target, g.target),
            "map_diff: shape mismatch");
    ChainMap h{f.source, f.target, {}};
    for (int n = 0; n <= f.top_degree(); ++n) h.f.push_back(f.f[n] - g.f[n]);
    return h;
}

bool maps_equal(const ChainMap& f, const ChainMap& g) {
    if (!same_shape(f.source, g.source) || !same_shape(f.target, g.target)) return false;
    if (f.f.size() != g.f.size()) return false;
    for (size_t n = 0; n < f.f.size(); ++n)
        if (!(f.f[n] == g.f[n])) return false;
    return true;
}

ChainMap tensor_of_maps(const ChainMap& f, const ChainMap& g) {
    ChainMap h{tensor(f.source, g.source), tensor(f.target, g.target), {}};
    const int top = h.source.T < h.target.T ? h.source.T : h.target.T;
    for (int n = 0; n <= top; ++n) {
        IntMat m(h.target.rank(n), h.source.rank(n));
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            if (f.source.rank(p) == 0 || g.source.rank(q) == 0) continue;
            if (f.target.rank(p) == 0 || g.target.rank(q) == 0) continue;
            m.set_block(tensor_offset(f.target, g.target, n, p),
                        tensor_offset(f.source, g.source, n, p),
                        IntMat::kronecker(f.f[p], g.f[q]));
        }
        h.f.push_back(m);
    }
    return h;
}

ChainMap symmetry(const ChainComplex& C, const ChainComplex& D) {
    ChainMap t{tensor(C, D), tensor(D, C), {}};
    for (int n = 0; n <= t.source.T; ++n) {
        IntMat m(t.target.rank(n), t.source.rank(n));
        for (int p = 0; p <= n; ++p) {
            const int q = n - p;
            const int cp = C.rank(p), dq = D.rank(q);
            if (cp == 0 || dq == 0) continue;
            const int src = tensor_offset(C, D, n, p);
            const int dst = tensor_offset(D, C, n, q);
            const Int sign = (p % 2 == 1 && q % 2 == 1) ? Int(-1) : Int(1);
            for (int i = 0; i < cp; ++i)
                for (int j = 0; j < dq; ++j) m.at(dst + j * cp + i, src + i * dq + j) = sign;
        }
        t.f.push_back(m);
    }
    return t;
}

ChainMap associator(const ChainComplex& C, const ChainComplex& D, const ChainComplex& E) {
    const ChainComplex CD = tensor(C, D);
    const ChainComplex DE = tensor(D, E);
    ChainMap a{tensor(CD, E), tensor(C, DE), {}};
    for (int n = 0; n <= a.source.T; ++n) {
        IntMat m(a.target.rank(n), a.source.rank(n));
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= n - p; ++q) {
                const int r = n - p - q;
                const int cp = C.rank(p), dq = D.rank(q), er = E.rank(r);
                if (cp == 0 || dq == 0 || er == 0) continue;
                const int src_outer = tensor_offset(CD, E, n, p + q);
                const int src_inner = tensor_offset(C, D, p + q, p);
                const int dst_outer = tensor_offset(C, DE, n, p);
                const int dst_inner = tensor_offset(D, E, q + r, q);
                const int de_rank = DE.rank(q + r);
                for (int i = 0; i < cp; ++i)
                    for (int j = 0; j < dq; ++j)
                        for (int k = 0; k < er; ++k) {
                            const int src = src_outer + (src_inner + i * dq + j) * er + k;
                            const int dst = dst_outer + i * de_rank + dst_inner + j * er + k;
                            m.at(dst, src) = 1;
                        }
            }
        a.f.push_back(m);
    }
    return a;
}

HomologyTable homology(const ChainComplex& C) {
    return homology(PresentedComplex::from_chain(C));
}

bool is_quasi_iso(const ChainMap& f) {
    PresentedMap pf{PresentedComplex::from_chain(f.source), PresentedComplex::from_chain(f.target),
                    f.f};
    return is_quasi_iso(pf);
}

ModelPredicates model_predicates(const ChainMap& f) {
    ModelPredicates out;
    const int top = f.top_degree();
    out.is_fibration = true;
    for (int n = 1; n <= top; ++n)
        if (!is_surjective(f.f[n])) out.is_fibration = false;
    out.is_cofibration = true;
    for (int n = 0; n <= top; ++n) {
        if (!is_injective(f.f[n]) || !cokernel(f.f[n]).torsion.empty()) out.is_cofibration = false;
    }
    out.is_weak_equivalence = is_quasi_iso(f);
    return out;
}

std::optional<ChainHomotopy> homotopy_solve(const ChainMap& f, const ChainMap& g) {
    require(same_shape(f.source, g.source) && same_shape(f.target, g.target),
            "homotopy_solve: shape mismatch");
    const ChainComplex& C = f.source;
    const ChainComplex& D = f.target;
    const int T = std::min(C.T, D.T);
    ChainHomotopy h;
    if (T == 0) return h;

    // Unknowns: vec(H_n) column-major, H_n: C_n → D_{n+1}, for n = 0..T-1.
    // Equation in degree n: d^D_{n+1} H_n + H_{n-1} d^C_n = (f − g)_n.
    std::vector<int> coloff(T + 1, 0), rowoff(T + 1, 0);
    for (int n = 0; n < T; ++n) {
        coloff[n + 1] = coloff[n] + D.rank(n + 1) * C.rank(n);
        rowoff[n + 1] = rowoff[n] + D.rank(n) * C.rank(n);
    }
    IntMat M(rowoff[T], coloff[T]);
    IntMat rhs(rowoff[T], 1);
    for (int n = 0; n < T; ++n) {
        const IntMat F = f.f[n] - g.f[n];
        for (int j = 0; j < F.cols(); ++j)
            for (int i = 0; i < F.rows(); ++i) rhs.at(rowoff[n] + j * F.rows() + i, 0) = F.at(i, j);
        if (C.rank(n) > 0 && D.rank(n) > 0) {
            if (D.rank(n + 1) > 0)
                M.set_block(rowoff[n], coloff[n],
                            IntMat::kronecker(IntMat::identity(C.rank(n)), D.d[n + 1]));
            if (n >= 1 && C.rank(n - 1) > 0)
                M.set_block(rowoff[n], coloff[n - 1],
                            IntMat::kronecker(C.d[n].transpose(), IntMat::identity(D.rank(n))));
        }
    }
    auto x = solve(M, rhs);
    if (!x) return std::nullopt;
    for (int n = 0; n < T; ++n) {
        IntMat H(D.rank(n + 1), C.rank(n));
        for (int j = 0; j < H.cols(); ++j)
            for (int i = 0; i < H.rows(); ++i) H.at(i, j) = x->at(coloff[n] + j * H.rows() + i, 0);
        h.H.push_back(H);
    }
    return h;
}

}  // namespace dk
