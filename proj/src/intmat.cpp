#include "dk/intmat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dk {

IntMat IntMat::identity(int n) {
    IntMat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMat IntMat::from_rows(int rows, int cols, const std::vector<long>& vals) {
    if (static_cast<size_t>(rows) * cols != vals.size()) throw std::invalid_argument("from_rows: size mismatch");
    IntMat M(rows, cols);
    for (size_t k = 0; k < vals.size(); ++k) M.a_[k] = vals[k];
    return M;
}

IntMat IntMat::column(const std::vector<long>& vals) {
    return from_rows(static_cast<int>(vals.size()), 1, vals);
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("mul: shape mismatch");
    IntMat R(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Int& bkj = o.at(k, j);
                if (bkj == 0) continue;
                mpz_addmul(R.at(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
            }
        }
    }
    return R;
}

IntMat IntMat::operator+(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("add: shape mismatch");
    IntMat R(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) R.a_[k] = a_[k] + o.a_[k];
    return R;
}

IntMat IntMat::operator-(const IntMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("sub: shape mismatch");
    IntMat R(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) R.a_[k] = a_[k] - o.a_[k];
    return R;
}

IntMat IntMat::operator-() const {
    IntMat R(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) R.a_[k] = -a_[k];
    return R;
}

IntMat IntMat::operator*(const Int& c) const {
    IntMat R(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) R.a_[k] = a_[k] * c;
    return R;
}

IntMat IntMat::transpose() const {
    IntMat R(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) R.at(j, i) = at(i, j);
    return R;
}

bool IntMat::is_zero() const {
    for (const Int& x : a_)
        if (x != 0) return false;
    return true;
}

bool IntMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMat IntMat::col(int j) const {
    IntMat R(rows_, 1);
    for (int i = 0; i < rows_; ++i) R.at(i, 0) = at(i, j);
    return R;
}

IntMat IntMat::submatrix(int r0, int c0, int nrows, int ncols) const {
    IntMat R(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) R.at(i, j) = at(r0 + i, c0 + j);
    return R;
}

void IntMat::set_block(int r0, int c0, const IntMat& B) {
    for (int i = 0; i < B.rows_; ++i)
        for (int j = 0; j < B.cols_; ++j) at(r0 + i, c0 + j) = B.at(i, j);
}

IntMat IntMat::kronecker(const IntMat& A, const IntMat& B) {
    IntMat R(A.rows_ * B.rows_, A.cols_ * B.cols_);
    for (int i1 = 0; i1 < A.rows_; ++i1)
        for (int j1 = 0; j1 < A.cols_; ++j1) {
            const Int& a = A.at(i1, j1);
            if (a == 0) continue;
            for (int i2 = 0; i2 < B.rows_; ++i2)
                for (int j2 = 0; j2 < B.cols_; ++j2)
                    R.at(i1 * B.rows_ + i2, j1 * B.cols_ + j2) = a * B.at(i2, j2);
        }
    return R;
}

IntMat IntMat::hstack(const IntMat& A, const IntMat& B) {
    if (A.rows_ != B.rows_) throw std::invalid_argument("hstack: row mismatch");
    IntMat R(A.rows_, A.cols_ + B.cols_);
    R.set_block(0, 0, A);
    R.set_block(0, A.cols_, B);
    return R;
}

IntMat IntMat::vstack(const IntMat& A, const IntMat& B) {
    if (A.cols_ != B.cols_) throw std::invalid_argument("vstack: col mismatch");
    IntMat R(A.rows_ + B.rows_, A.cols_);
    R.set_block(0, 0, A);
    R.set_block(A.rows_, 0, B);
    return R;
}

IntMat IntMat::hstack(const std::vector<IntMat>& blocks, int rows_hint) {
    int cols = 0;
    for (const IntMat& b : blocks) cols += b.cols_;
    IntMat R(rows_hint, cols);
    int c = 0;
    for (const IntMat& b : blocks) {
        if (b.rows_ != rows_hint) throw std::invalid_argument("hstack: row mismatch");
        R.set_block(0, c, b);
        c += b.cols_;
    }
    return R;
}

IntMat IntMat::vstack(const std::vector<IntMat>& blocks, int cols_hint) {
    int rows = 0;
    for (const IntMat& b : blocks) rows += b.rows_;
    IntMat R(rows, cols_hint);
    int r = 0;
    for (const IntMat& b : blocks) {
        if (b.cols_ != cols_hint) throw std::invalid_argument("vstack: col mismatch");
        R.set_block(r, 0, b);
        r += b.rows_;
    }
    return R;
}

std::string IntMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "] (" << rows_ << "x" << cols_ << ")";
    return os.str();
}

namespace {

void swap_cols(IntMat& M, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < M.rows(); ++i) std::swap(M.at(i, a), M.at(i, b));
}

void swap_rows(IntMat& M, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < M.cols(); ++j) std::swap(M.at(a, j), M.at(b, j));
}

// col_a -= q * col_b
void addmul_col(IntMat& M, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < M.rows(); ++i) {
        const Int& src = M.at(i, b);
        if (src == 0) continue;
        mpz_submul(M.at(i, a).get_mpz_t(), q.get_mpz_t(), src.get_mpz_t());
    }
}

void addmul_row(IntMat& M, int a, int b, const Int& q) {
    if (q == 0) return;
    for (int j = 0; j < M.cols(); ++j) {
        const Int& src = M.at(b, j);
        if (src == 0) continue;
        mpz_submul(M.at(a, j).get_mpz_t(), q.get_mpz_t(), src.get_mpz_t());
    }
}

void negate_col(IntMat& M, int a) {
    for (int i = 0; i < M.rows(); ++i) M.at(i, a) = -M.at(i, a);
}

void negate_row(IntMat& M, int a) {
    for (int j = 0; j < M.cols(); ++j) M.at(a, j) = -M.at(a, j);
}

}  // namespace

ColEchelon::ColEchelon(const IntMat& A) : H_(A), V_(IntMat::identity(A.cols())) {
    const int m = A.rows(), n = A.cols();
    int c = 0;  // next pivot column slot
    for (int r = 0; r < m && c < n; ++r) {
        // Reduce row r across the active columns until at most one nonzero remains.
        while (true) {
            int best = -1;
            for (int j = c; j < n; ++j) {
                if (H_.at(r, j) != 0 && (best < 0 || mpz_cmpabs(H_.at(r, j).get_mpz_t(), H_.at(r, best).get_mpz_t()) < 0))
                    best = j;
            }
            if (best < 0) break;  // row has no pivot
            bool lone = true;
            for (int j = c; j < n; ++j) {
                if (j == best || H_.at(r, j) == 0) continue;
                Int q;
                // Truncated quotient shrinks |H(r,j)| strictly below |pivot|.
                mpz_tdiv_q(q.get_mpz_t(), H_.at(r, j).get_mpz_t(), H_.at(r, best).get_mpz_t());
                addmul_col(H_, j, best, q);
                addmul_col(V_, j, best, q);
                if (H_.at(r, j) != 0) lone = false;
            }
            if (lone) {
                swap_cols(H_, c, best);
                swap_cols(V_, c, best);
                if (H_.at(r, c) < 0) {
                    negate_col(H_, c);
                    negate_col(V_, c);
                }
                pivot_rows_.push_back(r);
                ++c;
                break;
            }
        }
    }
}

std::optional<IntMat> ColEchelon::solve(const IntMat& B) const {
    if (B.rows() != H_.rows()) throw std::invalid_argument("solve: shape mismatch");
    const int n = H_.cols();
    IntMat X(n, B.cols());
    for (int col = 0; col < B.cols(); ++col) {
        IntMat res = B.col(col);
        IntMat y(n, 1);
        for (int k = 0; k < rank(); ++k) {
            int r = pivot_rows_[k];
            if (res.at(r, 0) == 0) continue;
            Int q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), res.at(r, 0).get_mpz_t(), H_.at(r, k).get_mpz_t());
            if (rem != 0) return std::nullopt;
            y.at(k, 0) = q;
            for (int i = r; i < res.rows(); ++i) mpz_submul(res.at(i, 0).get_mpz_t(), q.get_mpz_t(), H_.at(i, k).get_mpz_t());
        }
        if (!res.is_zero()) return std::nullopt;
        IntMat x = V_ * y;
        for (int i = 0; i < n; ++i) X.at(i, col) = x.at(i, 0);
    }
    return X;
}

IntMat ColEchelon::kernel_basis() const {
    const int n = V_.cols();
    return V_.submatrix(0, rank(), n, n - rank());
}

SmithDecomposition snf(const IntMat& A) {
    const int m = A.rows(), n = A.cols();
    SmithDecomposition S{IntMat::identity(m), A, IntMat::identity(n)};
    IntMat& D = S.D;
    IntMat& U = S.U;
    IntMat& V = S.V;
    const int nmin = std::min(m, n);
    for (int t = 0; t < nmin; ++t) {
        while (true) {
            // Smallest-magnitude nonzero pivot in the trailing submatrix.
            int pi = -1, pj = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j)
                    if (D.at(i, j) != 0 &&
                        (pi < 0 || mpz_cmpabs(D.at(i, j).get_mpz_t(), D.at(pi, pj).get_mpz_t()) < 0)) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) { t = nmin; break; }  // trailing block is zero
            swap_rows(D, t, pi);
            swap_rows(U, t, pi);
            swap_cols(D, t, pj);
            swap_cols(V, t, pj);
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (D.at(i, t) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), D.at(i, t).get_mpz_t(), D.at(t, t).get_mpz_t());
                addmul_row(D, i, t, q);
                addmul_row(U, i, t, q);
                if (D.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (D.at(t, j) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), D.at(t, j).get_mpz_t(), D.at(t, t).get_mpz_t());
                addmul_col(D, j, t, q);
                addmul_col(V, j, t, q);
                if (D.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Pivot is lone; enforce that it divides the trailing block.
            int bi = -1, bj = -1;
            for (int i = t + 1; i < m && bi < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            // Fold the offending row into row t and re-reduce.
            addmul_row(D, t, bi, Int(-1));
            addmul_row(U, t, bi, Int(-1));
        }
        if (t >= nmin) break;
        if (D.at(t, t) < 0) {
            negate_row(D, t);
            negate_row(U, t);
        }
    }
    return S;
}

std::vector<Int> SmithDecomposition::divisors() const {
    std::vector<Int> out;
    for (int t = 0; t < std::min(D.rows(), D.cols()); ++t)
        if (D.at(t, t) != 0) out.push_back(D.at(t, t));
    return out;
}

CokernelData cokernel(const IntMat& A) {
    SmithDecomposition S = snf(A);
    CokernelData c;
    std::vector<Int> div = S.divisors();
    c.free_rank = A.rows() - static_cast<int>(div.size());
    for (const Int& d : div)
        if (d > 1) c.torsion.push_back(d);
    return c;
}

IntMat kernel_basis(const IntMat& A) { return ColEchelon(A).kernel_basis(); }

std::optional<IntMat> solve(const IntMat& A, const IntMat& B) { return ColEchelon(A).solve(B); }

Int det(const IntMat& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("det: not square");
    const int n = A.rows();
    if (n == 0) return 1;
    IntMat M = A;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            swap_rows(M, k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                mpz_divexact(M.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            M.at(i, k) = 0;
        }
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

std::optional<IntMat> integer_inverse(const IntMat& A) {
    if (A.rows() != A.cols()) return std::nullopt;
    auto X = solve(A, IntMat::identity(A.rows()));
    if (!X) return std::nullopt;
    return X;
}

bool is_surjective(const IntMat& A) { return cokernel(A).is_trivial(); }

bool is_injective(const IntMat& A) { return ColEchelon(A).rank() == A.cols(); }

bool presented_well_defined(const IntMat& rel_src, const IntMat& Y, const IntMat& rel_tgt) {
    if (rel_src.cols() == 0) return true;
    return ColEchelon(rel_tgt).solve(Y * rel_src).has_value();
}

bool presented_surjective(const IntMat& Y, const IntMat& rel_tgt) {
    return cokernel(IntMat::hstack(Y, rel_tgt)).is_trivial();
}

bool presented_injective(const IntMat& rel_src, const IntMat& Y, const IntMat& rel_tgt) {
    // Preimage of im(rel_tgt) under Y must land in im(rel_src).
    IntMat K = kernel_basis(IntMat::hstack(Y, rel_tgt));
    IntMat U = K.submatrix(0, 0, Y.cols(), K.cols());
    if (U.cols() == 0) return true;
    ColEchelon src(rel_src);
    for (int j = 0; j < U.cols(); ++j)
        if (!src.solve(U.col(j))) return false;
    return true;
}

bool presented_iso(const IntMat& rel_src, const IntMat& Y, const IntMat& rel_tgt) {
    return presented_well_defined(rel_src, Y, rel_tgt) && presented_surjective(Y, rel_tgt) &&
           presented_injective(rel_src, Y, rel_tgt);
}

bool presented_equal(const IntMat& Y, const IntMat& Z, const IntMat& rel_tgt) {
    IntMat d = Y - Z;
    if (d.is_zero()) return true;
    return ColEchelon(rel_tgt).solve(d).has_value();
}

}  // namespace dk
