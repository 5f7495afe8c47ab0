#include "dk/modules.hpp"

#include <sstream>
#include <stdexcept>

namespace dk {

namespace {

void check(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

// Every column of B lies in the column lattice of A.
bool in_lattice(const ColEchelon& A, const IntMat& B) { return A.solve(B).has_value(); }

std::vector<std::vector<IntMat>> action_table_of(const ChainMap& act, const ChainComplex& M,
                                                 const ChainComplex& R) {
    std::vector<std::vector<IntMat>> table(M.T + 1);
    for (int p = 0; p <= M.T; ++p) {
        table[p].resize(M.T - p + 1);
        for (int q = 0; p + q <= M.T; ++q)
            table[p][q] = act.f[p + q].submatrix(0, tensor_offset(M, R, p + q, p), M.rank(p + q),
                                                 M.rank(p) * R.rank(q));
    }
    return table;
}

}  // namespace

IntMat swap_perm(int a, int b) {
    IntMat P(a * b, a * b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) P.at(j * a + i, i * b + j) = 1;
    return P;
}

DGAlgebra opposite_algebra(const DGAlgebra& R) {
    DGAlgebra op = R;
    for (int p = 0; p <= R.R.T; ++p)
        for (int q = 0; p + q <= R.R.T; ++q) {
            IntMat m = R.mu(q, p) * swap_perm(R.R.rank(p), R.R.rank(q));
            op.mult[p][q] = (p % 2 != 0 && q % 2 != 0) ? -m : m;
        }
    return op;
}

SimplicialRing opposite_ring(const SimplicialRing& A) {
    SimplicialRing op = A;
    for (int n = 0; n <= A.A.T; ++n)
        op.mult[n] = A.mult[n] * swap_perm(A.A.rank(n), A.A.rank(n));
    return op;
}

ChainMap DGModule::act_chain_map() const {
    ChainMap a;
    a.source = tensor(M, R.R);
    a.target = M;
    a.f.resize(M.T + 1);
    for (int n = 0; n <= M.T; ++n) {
        a.f[n] = IntMat::zero(M.rank(n), a.source.rank(n));
        for (int p = 0; p <= n; ++p) a.f[n].set_block(0, tensor_offset(M, R.R, n, p), act[p][n - p]);
    }
    return a;
}

void DGModule::validate() const {
    M.validate();
    R.validate();
    check(M.T == R.R.T, "dg module: module and algebra windows differ");
    check(static_cast<int>(act.size()) == M.T + 1, "dg module: action table has wrong size");
    for (int p = 0; p <= M.T; ++p) {
        check(static_cast<int>(act[p].size()) == M.T - p + 1, "dg module: action table has wrong size");
        for (int q = 0; p + q <= M.T; ++q)
            check(act[p][q].rows() == M.rank(p + q) && act[p][q].cols() == M.rank(p) * R.R.rank(q),
                  "dg module: action block has wrong shape");
    }
    act_chain_map().validate();  // Leibniz
    for (int p = 0; p <= M.T; ++p) {
        IntMat id = IntMat::identity(M.rank(p));
        check(act[p][0] * IntMat::kronecker(id, R.unit) == id, "dg module: unit does not act as identity");
        for (int q = 0; p + q <= M.T; ++q)
            for (int r = 0; p + q + r <= M.T; ++r)
                check(act[p + q][r] * IntMat::kronecker(act[p][q], IntMat::identity(R.R.rank(r))) ==
                          act[p][q + r] * IntMat::kronecker(id, R.mu(q, r)),
                      "dg module: action is not associative");
    }
}

DGModule DGModule::ring_as_module(const DGAlgebra& R) { return DGModule{R.R, R, R.mult}; }

DGModule DGModule::free_module(const ChainComplex& X, const DGAlgebra& R) {
    DGModule F;
    F.M = tensor(X, R.R);
    F.R = R;
    // x⊗r⊗s ↦ x⊗rs, via the associator and id⊗μ.
    ChainMap a = compose(tensor_of_maps(ChainMap::identity(X), R.mu_chain_map()),
                         associator(X, R.R, R.R));
    F.act = action_table_of(a, F.M, R.R);
    return F;
}

SimplicialMap SimplicialModule::act_simplicial_map() const {
    SimplicialMap a;
    a.source = tensor(M, A.A);
    a.target = M;
    a.f = act;
    return a;
}

void SimplicialModule::validate() const {
    M.validate();
    check(M.T == A.A.T, "simplicial module: module and ring windows differ");
    check(static_cast<int>(act.size()) == M.T + 1, "simplicial module: action has wrong size");
    for (int n = 0; n <= M.T; ++n) {
        int rm = M.rank(n), ra = A.A.rank(n);
        check(act[n].rows() == rm && act[n].cols() == rm * ra,
              "simplicial module: action has wrong shape");
        IntMat id = IntMat::identity(rm);
        check(act[n] * IntMat::kronecker(act[n], IntMat::identity(ra)) ==
                  act[n] * IntMat::kronecker(id, A.mult[n]),
              "simplicial module: action is not associative");
        check(act[n] * IntMat::kronecker(id, A.unit[n]) == id,
              "simplicial module: unit does not act as identity");
    }
    act_simplicial_map().validate();  // equivariance
}

SimplicialModule SimplicialModule::ring_as_module(const SimplicialRing& A) {
    return SimplicialModule{A.A, A, A.mult};
}

SimplicialModule SimplicialModule::free_module(const SimplicialAbGroup& X, const SimplicialRing& A) {
    SimplicialModule F;
    F.M = tensor(X, A.A);
    F.A = A;
    F.act.resize(A.A.T + 1);
    for (int n = 0; n <= A.A.T; ++n)
        F.act[n] = IntMat::kronecker(IntMat::identity(X.rank(n)), A.mult[n]);
    return F;
}

ChainMap left_action_chain_map(const DGModule& Mop) {
    const ChainComplex& R = Mop.R.R;  // the opposite algebra's complex equals the algebra's
    ChainMap lam;
    lam.source = tensor(R, Mop.M);
    lam.target = Mop.M;
    lam.f.resize(R.T + 1);
    for (int n = 0; n <= R.T; ++n) {
        lam.f[n] = IntMat::zero(Mop.M.rank(n), lam.source.rank(n));
        for (int q = 0; q <= n; ++q) {
            int s = n - q;
            IntMat block = Mop.act[s][q] * swap_perm(R.rank(q), Mop.M.rank(s));
            if (q % 2 != 0 && s % 2 != 0) block = -block;
            lam.f[n].set_block(0, tensor_offset(R, Mop.M, n, q), block);
        }
    }
    return lam;
}

namespace {

void check_compatible_dg(const DGModule& M, const DGModule& Mop) {
    DGAlgebra op = opposite_algebra(M.R);
    check(same_shape(op.R, Mop.R.R) && op.unit == Mop.R.unit,
          "relative tensor: the two modules are not over matching algebras");
    for (int p = 0; p <= op.R.T; ++p)
        for (int q = 0; p + q <= op.R.T; ++q)
            check(op.mu(p, q) == Mop.R.mu(p, q),
                  "relative tensor: the two modules are not over matching algebras");
}

}  // namespace

RelativeTensorDG relative_tensor_dg(const DGModule& M, const DGModule& Mop) {
    check_compatible_dg(M, Mop);
    const ChainComplex& R = M.R.R;
    ChainMap lam = left_action_chain_map(Mop);
    RelativeTensorDG out;
    ChainComplex amb = tensor(M.M, Mop.M);
    out.Q.T = amb.T;
    out.Q.gens = amb.ranks;
    out.Q.d = amb.d;
    out.Q.rel.resize(amb.T + 1);
    for (int n = 0; n <= amb.T; ++n) {
        int cols = 0;
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n; ++q)
                cols += M.M.rank(p) * R.rank(q) * Mop.M.rank(n - p - q);
        IntMat rel = IntMat::zero(amb.rank(n), cols);
        int c0 = 0;
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n; ++q) {
                int s = n - p - q;
                int w = M.M.rank(p) * R.rank(q) * Mop.M.rank(s);
                if (w == 0) continue;
                // act(m⊗r) ⊗ m′ − m ⊗ λ(r⊗m′)
                IntMat t1 = IntMat::kronecker(M.act[p][q], IntMat::identity(Mop.M.rank(s)));
                IntMat lam_qs = lam.f[q + s].submatrix(0, tensor_offset(R, Mop.M, q + s, q),
                                                       Mop.M.rank(q + s), R.rank(q) * Mop.M.rank(s));
                IntMat t2 = IntMat::kronecker(IntMat::identity(M.M.rank(p)), lam_qs);
                // The two blocks may target the same summand (q = 0 or s = q+s);
                // accumulate rather than overwrite.
                int r1 = tensor_offset(M.M, Mop.M, n, p + q);
                int r2 = tensor_offset(M.M, Mop.M, n, p);
                for (int i = 0; i < t1.rows(); ++i)
                    for (int j = 0; j < w; ++j) rel.at(r1 + i, c0 + j) += t1.at(i, j);
                for (int i = 0; i < t2.rows(); ++i)
                    for (int j = 0; j < w; ++j) rel.at(r2 + i, c0 + j) -= t2.at(i, j);
                c0 += w;
            }
        out.Q.rel[n] = rel;
    }
    out.Q.validate();
    out.groups.resize(amb.T + 1);
    for (int n = 0; n <= amb.T; ++n) out.groups[n] = cokernel(out.Q.rel[n]);
    return out;
}

RelativeTensorSimplicial relative_tensor_simplicial(const SimplicialModule& M,
                                                    const SimplicialModule& Mop) {
    SimplicialRing op = opposite_ring(M.A);
    check(same_shape(op.A, Mop.A.A), "relative tensor: the two modules are not over matching rings");
    for (int n = 0; n <= op.A.T; ++n)
        check(op.mult[n] == Mop.A.mult[n] && op.unit[n] == Mop.A.unit[n],
              "relative tensor: the two modules are not over matching rings");

    RelativeTensorSimplicial out;
    out.ambient = tensor(M.M, Mop.M);
    int T = out.ambient.T;
    out.rel.resize(T + 1);
    out.groups.resize(T + 1);
    for (int n = 0; n <= T; ++n) {
        int rm = M.M.rank(n), ra = M.A.A.rank(n), rp = Mop.M.rank(n);
        IntMat lam = Mop.act[n] * swap_perm(ra, rp);
        out.rel[n] = IntMat::kronecker(M.act[n], IntMat::identity(rp)) -
                     IntMat::kronecker(IntMat::identity(rm), lam);
        out.groups[n] = cokernel(out.rel[n]);
    }
    // The relation lattices form a simplicial subobject.
    std::vector<ColEchelon> ech;
    ech.reserve(T + 1);
    for (int n = 0; n <= T; ++n) ech.emplace_back(out.rel[n]);
    for (int n = 1; n <= T; ++n)
        for (int i = 0; i <= n; ++i)
            check(in_lattice(ech[n - 1], out.ambient.d(n, i) * out.rel[n]),
                  "relative tensor: relations not closed under faces");
    for (int n = 0; n < T; ++n)
        for (int i = 0; i <= n; ++i)
            check(in_lattice(ech[n + 1], out.ambient.s(n, i) * out.rel[n]),
                  "relative tensor: relations not closed under degeneracies");
    return out;
}

PresentedComplex presented_normalize(const NormalizationData& Namb,
                                     const std::vector<IntMat>& rel) {
    PresentedComplex P;
    P.T = Namb.N.T;
    P.gens = Namb.N.ranks;
    P.d = Namb.N.d;
    P.rel.resize(P.T + 1);
    for (int n = 0; n <= P.T; ++n) P.rel[n] = Namb.pi[n] * rel[n];
    P.validate();
    return P;
}

PresentedMap nabla_A(const SimplicialModule& M, const SimplicialModule& Mop) {
    NormalizedRingData NR = normalize_ring(M.A);
    NormalizedRingData NRop = normalize_ring(Mop.A);
    NormalizedModuleData NM = normalize_module(M, NR);
    NormalizedModuleData NMop = normalize_module(Mop, NRop);

    RelativeTensorDG src = relative_tensor_dg(NM.dgm, NMop.dgm);
    RelativeTensorSimplicial tgt_lev = relative_tensor_simplicial(M, Mop);
    NormalizationData Namb = normalize(tgt_lev.ambient);
    PresentedComplex tgt = presented_normalize(Namb, tgt_lev.rel);

    ChainMap nsh = normalized_shuffle(NM.NM, NMop.NM, Namb);
    PresentedMap pm{src.Q, tgt, nsh.f};
    pm.validate();  // descent through both quotients; failure is a hard error
    return pm;
}

void DGAlgebraMap::validate() const {
    R.validate();
    S.validate();
    check(same_shape(f.source, R.R) && same_shape(f.target, S.R),
          "dg algebra map: endpoints do not match");
    f.validate();
    check(f.f[0] * R.unit == S.unit, "dg algebra map: unit not preserved");
    for (int p = 0; p <= R.R.T; ++p)
        for (int q = 0; p + q <= R.R.T; ++q)
            check(f.f[p + q] * R.mu(p, q) == S.mu(p, q) * IntMat::kronecker(f.f[p], f.f[q]),
                  "dg algebra map: not multiplicative");
}

DGAlgebraMap DGAlgebraMap::identity_map(const DGAlgebra& R) {
    return DGAlgebraMap{R, R, ChainMap::identity(R.R)};
}

DGModule restrict_scalars(const DGAlgebraMap& f, const DGModule& M_over_S) {
    DGModule out;
    out.M = M_over_S.M;
    out.R = f.R;
    out.act.resize(out.M.T + 1);
    for (int p = 0; p <= out.M.T; ++p) {
        out.act[p].resize(out.M.T - p + 1);
        for (int q = 0; p + q <= out.M.T; ++q)
            out.act[p][q] = M_over_S.act[p][q] *
                            IntMat::kronecker(IntMat::identity(out.M.rank(p)), f.f.f[q]);
    }
    return out;
}

ExtendedModule extend_scalars(const DGAlgebraMap& f, const DGModule& M) {
    const ChainComplex& R = f.R.R;
    const ChainComplex& S = f.S.R;
    ExtendedModule out;
    DGModule amb = DGModule::free_module(M.M, f.S);
    out.act = amb.act;
    out.Q.T = amb.M.T;
    out.Q.gens = amb.M.ranks;
    out.Q.d = amb.M.d;
    out.Q.rel.resize(out.Q.T + 1);
    for (int n = 0; n <= out.Q.T; ++n) {
        int cols = 0;
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n; ++q) cols += M.M.rank(p) * R.rank(q) * S.rank(n - p - q);
        IntMat rel = IntMat::zero(amb.M.rank(n), cols);
        int c0 = 0;
        for (int p = 0; p <= n; ++p)
            for (int q = 0; p + q <= n; ++q) {
                int s = n - p - q;
                int w = M.M.rank(p) * R.rank(q) * S.rank(s);
                if (w == 0) continue;
                // (m·r)⊗s − m⊗(f(r)·s); no sign, nothing is transposed.
                IntMat t1 = IntMat::kronecker(M.act[p][q], IntMat::identity(S.rank(s)));
                IntMat t2 = IntMat::kronecker(
                    IntMat::identity(M.M.rank(p)),
                    f.S.mu(q, s) * IntMat::kronecker(f.f.f[q], IntMat::identity(S.rank(s))));
                int r1 = tensor_offset(M.M, S, n, p + q);
                int r2 = tensor_offset(M.M, S, n, p);
                for (int i = 0; i < t1.rows(); ++i)
                    for (int j = 0; j < w; ++j) rel.at(r1 + i, c0 + j) += t1.at(i, j);
                for (int i = 0; i < t2.rows(); ++i)
                    for (int j = 0; j < w; ++j) rel.at(r2 + i, c0 + j) -= t2.at(i, j);
                c0 += w;
            }
        out.Q.rel[n] = rel;
    }
    out.Q.validate();
    out.groups.resize(out.Q.T + 1);
    for (int n = 0; n <= out.Q.T; ++n) out.groups[n] = cokernel(out.Q.rel[n]);
    // The S-action descends to the quotient.
    for (int n = 0; n <= out.Q.T; ++n) {
        ColEchelon ech(out.Q.rel[n]);
        for (int q = 0; n - q >= 0; ++q) {
            int m = n - q;
            if (out.Q.rel[m].cols() == 0) continue;
            check(in_lattice(ech, out.act[m][q] * IntMat::kronecker(out.Q.rel[m],
                                                                    IntMat::identity(S.rank(q)))),
                  "extension of scalars: action does not descend");
        }
    }
    return out;
}

std::vector<IntMat> extension_unit(const DGAlgebraMap& f, const DGModule& M) {
    std::vector<IntMat> u(M.M.T + 1);
    ChainComplex amb = tensor(M.M, f.S.R);
    for (int n = 0; n <= M.M.T; ++n) {
        u[n] = IntMat::zero(amb.rank(n), M.M.rank(n));
        u[n].set_block(tensor_offset(M.M, f.S.R, n, n), 0,
                       IntMat::kronecker(IntMat::identity(M.M.rank(n)), f.S.unit));
    }
    return u;
}

CheckReport adjunction_check(const DGAlgebraMap& f, const ChainComplex& X) {
    CheckReport rep;
    std::ostringstream msg;
    const int T = X.T;

    // Triangle on X⊗S: extend(restrict(N)) → N followed by the unit is the identity.
    DGModule N = DGModule::free_module(X, f.S);
    DGModule RN = restrict_scalars(f, N);
    ExtendedModule E = extend_scalars(f, RN);
    ChainMap counit = N.act_chain_map();  // n⊗s ↦ n·s on generators
    std::vector<IntMat> unit = extension_unit(f, RN);
    for (int n = 0; n <= T; ++n) {
        if (E.Q.rel[n].cols() > 0 && !(counit.f[n] * E.Q.rel[n]).is_zero()) {
            rep.ok = false;
            msg << "counit not well defined in degree " << n << "; ";
        }
        if (counit.f[n] * unit[n] != IntMat::identity(N.M.rank(n))) {
            rep.ok = false;
            msg << "counit-unit triangle fails in degree " << n << "; ";
        }
    }

    // Triangle on X⊗R, through the canonical identification extend(X⊗R) ≅ X⊗S:
    // x⊗r⊗s ↦ x⊗f(r)s, and the composite with the unit must be id_X ⊗ f.
    DGModule MR = DGModule::free_module(X, f.R);
    ExtendedModule EM = extend_scalars(f, MR);
    ChainComplex XS = tensor(X, f.S.R);
    ChainMap idf = tensor_of_maps(ChainMap::identity(X), f.f);
    std::vector<IntMat> unitM = extension_unit(f, MR);
    PresentedComplex XSfree = PresentedComplex::from_chain(XS);
    PresentedMap theta{EM.Q, XSfree, {}};
    for (int n = 0; n <= T; ++n) {
        IntMat th = IntMat::zero(XS.rank(n), EM.Q.gen_count(n));
        for (int p = 0; p <= n; ++p) {
            int c = n - p;
            for (int a = 0; a <= p; ++a) {
                int b = p - a;
                int col = tensor_offset(MR.M, f.S.R, n, p) +
                          tensor_offset(X, f.R.R, p, a) * f.S.R.rank(c);
                IntMat block = IntMat::kronecker(
                    IntMat::identity(X.rank(a)),
                    f.S.mu(b, c) * IntMat::kronecker(f.f.f[b], IntMat::identity(f.S.R.rank(c))));
                for (int i = 0; i < block.rows(); ++i)
                    for (int j = 0; j < block.cols(); ++j)
                        th.at(tensor_offset(X, f.S.R, n, a) + i, col + j) += block.at(i, j);
            }
        }
        theta.f.push_back(th);
        if (th * unitM[n] != idf.f[n]) {
            rep.ok = false;
            msg << "unit triangle fails in degree " << n << "; ";
        }
    }
    theta.validate();
    if (!is_degreewise_iso(theta)) {
        rep.ok = false;
        msg << "extension of the free module is not X⊗S; ";
    }

    rep.detail = rep.ok ? "triangle identities hold on the free modules" : msg.str();
    return rep;
}

CheckReport quillen_invariance_spot_check(const DGAlgebraMap& f,
                                          const std::vector<ChainComplex>& samples) {
    CheckReport rep;
    std::ostringstream msg;
    if (!is_quasi_iso(f.f)) {
        rep.ok = false;
        rep.detail = "the algebra map is not a quasi-isomorphism";
        return rep;
    }
    int idx = 0;
    for (const ChainComplex& X : samples) {
        DGModule M = DGModule::free_module(X, f.R);
        ExtendedModule E = extend_scalars(f, M);
        PresentedMap unit{PresentedComplex::from_chain(M.M), E.Q, extension_unit(f, M)};
        unit.validate();
        if (!is_quasi_iso(unit)) {
            rep.ok = false;
            msg << "unit of sample " << idx << " is not a quasi-isomorphism; ";
        }
        ++idx;
    }
    rep.detail = rep.ok ? "unit is a quasi-isomorphism on all " + std::to_string(idx) + " samples"
                        : msg.str();
    return rep;
}

NormalizedModuleData normalize_module(const SimplicialModule& M, const NormalizedRingData& NR) {
    check(NR.N.A.ranks == M.A.A.ranks, "normalize module: ring data does not match the module's ring");
    NormalizedModuleData out;
    out.NM = normalize(M.M);
    NormalizationData NMA = normalize(tensor(M.M, M.A.A));
    ChainMap act_chain = compose(normalized_of(M.act_simplicial_map(), NMA, out.NM),
                                 normalized_shuffle(out.NM, NR.N, NMA));
    out.dgm.M = out.NM.N;
    out.dgm.R = NR.dga;
    out.dgm.act = action_table_of(act_chain, out.NM.N, NR.N.N);
    return out;
}

}  // namespace dk
