#include "dk/presented.hpp"

#include <stdexcept>
#include <string>

namespace dk {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

// Does every column of M lie in the lattice spanned by the columns of basis?
bool in_lattice(const IntMat& basis, const IntMat& M) {
    if (M.cols() == 0) return true;
    return solve(basis, M).has_value();
}

}  // namespace

void PresentedComplex::validate() const {
    require(T >= 0, "presented complex: negative truncation");
    require(static_cast<int>(gens.size()) == T + 1, "presented complex: gens size mismatch");
    require(static_cast<int>(rel.size()) == T + 1, "presented complex: rel size mismatch");
    require(static_cast<int>(d.size()) == T + 1, "presented complex: differential count mismatch");
    for (int n = 0; n <= T; ++n) {
        require(gens[n] >= 0, "presented complex: negative generator count");
        require(rel[n].rows() == gens[n],
                "presented complex: relation shape mismatch in degree " + std::to_string(n));
    }
    for (int n = 1; n <= T; ++n) {
        require(d[n].rows() == gens[n - 1] && d[n].cols() == gens[n],
                "presented complex: differential shape mismatch in degree " + std::to_string(n));
        require(in_lattice(rel[n - 1], d[n] * rel[n]),
                "presented complex: d does not preserve relations in degree " + std::to_string(n));
    }
    for (int n = 2; n <= T; ++n) {
        require(in_lattice(rel[n - 2], d[n - 1] * d[n]),
                "presented complex: d∘d not a relation in degree " + std::to_string(n));
    }
}

PresentedComplex PresentedComplex::from_chain(const ChainComplex& C) {
    PresentedComplex P;
    P.T = C.T;
    P.gens = C.ranks;
    P.d = C.d;
    for (int n = 0; n <= C.T; ++n) P.rel.push_back(IntMat(C.ranks[n], 0));
    return P;
}

void PresentedMap::validate() const {
    const int top = std::min(source.T, target.T);
    require(static_cast<int>(f.size()) == top + 1, "presented map: component count mismatch");
    for (int n = 0; n <= top; ++n) {
        require(f[n].rows() == target.gen_count(n) && f[n].cols() == source.gen_count(n),
                "presented map: component shape mismatch in degree " + std::to_string(n));
        require(in_lattice(target.rel[n], f[n] * source.rel[n]),
                "presented map: relations not preserved in degree " + std::to_string(n));
    }
    for (int n = 1; n <= top; ++n) {
        require(in_lattice(target.rel[n - 1], target.d[n] * f[n] - f[n - 1] * source.d[n]),
                "presented map: does not commute with d modulo relations in degree " +
                    std::to_string(n));
    }
}

IntMat cycle_lattice_basis(const PresentedComplex& C, int n) {
    require(n >= 0 && n <= C.T, "cycle_lattice_basis: degree out of range");
    if (n == 0) return IntMat::identity(C.gens[0]);
    const IntMat K = kernel_basis(IntMat::hstack(C.d[n], C.rel[n - 1]));
    const IntMat U = K.submatrix(0, 0, C.gens[n], K.cols());
    // Echelonize the projected generators; the nonzero column-HNF columns form
    // a basis of the lattice they span.
    ColEchelon ech(U);
    return ech.H().submatrix(0, 0, U.rows(), ech.rank());
}

namespace {

// Homology presentation in degree n: cokernel of boundaries and relations
// expressed in the cycle-lattice basis.
IntMat homology_presentation(const PresentedComplex& C, const IntMat& cycles, int n) {
    const IntMat bnd = IntMat::hstack(C.d[n + 1], C.rel[n]);
    auto X = solve(cycles, bnd);
    require(X.has_value(), "homology: boundary not in cycle lattice (invalid complex)");
    return *X;
}

}  // namespace

HomologyTable homology(const PresentedComplex& C) {
    HomologyTable out;
    for (int n = 0; n < C.T; ++n) {
        const IntMat cycles = cycle_lattice_basis(C, n);
        out.push_back(cokernel(homology_presentation(C, cycles, n)));
    }
    return out;
}

bool is_quasi_iso(const PresentedMap& f) {
    const int top = std::min(f.source.T, f.target.T);
    for (int n = 0; n < top; ++n) {
        const IntMat cyc_s = cycle_lattice_basis(f.source, n);
        const IntMat cyc_t = cycle_lattice_basis(f.target, n);
        const IntMat X_s = homology_presentation(f.source, cyc_s, n);
        const IntMat X_t = homology_presentation(f.target, cyc_t, n);
        auto Y = solve(cyc_t, f.f[n] * cyc_s);
        require(Y.has_value(), "is_quasi_iso: image of a cycle is not a cycle (invalid map)");
        if (!presented_iso(X_s, *Y, X_t)) return false;
    }
    return true;
}

bool is_degreewise_iso(const PresentedMap& f) {
    if (f.source.T != f.target.T) return false;
    for (int n = 0; n <= f.source.T; ++n) {
        if (!presented_iso(f.source.rel[n], f.f[n], f.target.rel[n])) return false;
    }
    return true;
}

}  // namespace dk
