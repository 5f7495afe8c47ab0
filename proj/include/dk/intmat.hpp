// Exact integer matrices over arbitrary-precision integers, with the normal
// forms and lattice computations the rest of the library is built on:
// Smith normal form, column echelon (Hermite-style) factorization, saturated
// kernel bases, integer linear solving, cokernel presentations, and helpers
// for maps between finitely presented abelian groups.
//
// All arithmetic is exact; there is no floating point anywhere.

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace dk {

using Int = mpz_class;

class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMat identity(int n);
    static IntMat zero(int rows, int cols) { return IntMat(rows, cols); }
    // Row-major initialization from small integers; rows*cols values.
    static IntMat from_rows(int rows, int cols, const std::vector<long>& vals);
    static IntMat column(const std::vector<long>& vals);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    IntMat operator*(const IntMat& o) const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator-() const;
    IntMat operator*(const Int& c) const;

    IntMat transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    IntMat col(int j) const;
    IntMat submatrix(int r0, int c0, int nrows, int ncols) const;
    void set_block(int r0, int c0, const IntMat& B);

    // Kronecker product: (A⊗B)(i1*rB+i2, j1*cB+j2) = A(i1,j1)·B(i2,j2).
    // Acts on column vectors kron-indexed the same way; used for tensor bases.
    static IntMat kronecker(const IntMat& A, const IntMat& B);
    static IntMat hstack(const IntMat& A, const IntMat& B);
    static IntMat vstack(const IntMat& A, const IntMat& B);
    static IntMat hstack(const std::vector<IntMat>& blocks, int rows_hint);
    static IntMat vstack(const std::vector<IntMat>& blocks, int cols_hint);

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

// Column echelon factorization A·V = H with V unimodular.  H's pivot rows are
// strictly increasing by column, entries above and right of each pivot are
// zero, and columns past the rank are zero; so A·x = b is solved by forward
// substitution and the trailing columns of V are a saturated kernel basis.
class ColEchelon {
public:
    explicit ColEchelon(const IntMat& A);

    int rank() const { return static_cast<int>(pivot_rows_.size()); }
    // Solve A·X = B over the integers, columnwise; absent if any column fails.
    std::optional<IntMat> solve(const IntMat& B) const;
    // Columns form a basis of {x : A·x = 0}; saturated because V is unimodular.
    IntMat kernel_basis() const;

    const IntMat& H() const { return H_; }
    const IntMat& V() const { return V_; }

private:
    IntMat H_, V_;
    std::vector<int> pivot_rows_;
};

struct SmithDecomposition {
    IntMat U, D, V;  // U·A·V = D, det U = ±1, det V = ±1
    // Nonzero diagonal entries, nonnegative, divisibility-ordered.
    std::vector<Int> divisors() const;
};

SmithDecomposition snf(const IntMat& A);

struct CokernelData {
    int free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, divisibility-ordered
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const CokernelData& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
};

// Cokernel of A as a map into Z^rows.
CokernelData cokernel(const IntMat& A);

IntMat kernel_basis(const IntMat& A);
std::optional<IntMat> solve(const IntMat& A, const IntMat& B);

Int det(const IntMat& A);                     // Bareiss, fraction-free
std::optional<IntMat> integer_inverse(const IntMat& A);  // exists iff |det| = 1

bool is_surjective(const IntMat& A);  // as a map of lattices Z^cols → Z^rows
bool is_injective(const IntMat& A);

// Maps between finitely presented abelian groups.  A group is presented as
// Z^g / im(rel); a homomorphism is a g_src→g_tgt integer matrix Y required to
// carry im(rel_src) into im(rel_tgt).
bool presented_well_defined(const IntMat& rel_src, const IntMat& Y, const IntMat& rel_tgt);
bool presented_surjective(const IntMat& Y, const IntMat& rel_tgt);
bool presented_injective(const IntMat& rel_src, const IntMat& Y, const IntMat& rel_tgt);
bool presented_iso(const IntMat& rel_src, const IntMat& Y, const IntMat& rel_tgt);
// Y and Z induce the same map into Z^g / im(rel_tgt).
bool presented_equal(const IntMat& Y, const IntMat& Z, const IntMat& rel_tgt);

}  // namespace dk
