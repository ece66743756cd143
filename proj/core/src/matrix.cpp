#include "quivkit/matrix.hpp"

#include <stdexcept>

namespace qk {

Matrix Matrix::identity(const Field& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : d_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix shape mismatch in +");
    Matrix r(f_, rows_, cols_);
    for (size_t k = 0; k < d_.size(); ++k) r.d_[k] = d_[k] + o.d_[k];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix shape mismatch in -");
    Matrix r(f_, rows_, cols_);
    for (size_t k = 0; k < d_.size(); ++k) r.d_[k] = d_[k] - o.d_[k];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix shape mismatch in *");
    Matrix r(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(f_, rows_, cols_);
    for (size_t k = 0; k < d_.size(); ++k) r.d_[k] = d_[k] * c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::logic_error("hstack row mismatch");
    Matrix r(f_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_) throw std::logic_error("vstack col mismatch");
    Matrix r(f_, rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Matrix Matrix::submatrix(int r0, int c0, int nr, int nc) const {
    Matrix r(f_, nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

std::vector<int> Matrix::rref() {
    /* Forward pass.  Over Q: clear row denominators, then fraction-free
       (Bareiss-style) cross-multiplication updates keep entries integral.
       Over GF(p): plain elimination. */
    const bool rational = f_.is_rational();
    if (rational) {
        for (int i = 0; i < rows_; ++i) {
            mpz_class l(1);
            for (int j = 0; j < cols_; ++j)
                mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).value().get_den().get_mpz_t());
            if (l != 1) {
                Scalar c(f_, mpq_class(l));
                for (int j = 0; j < cols_; ++j) at(i, j) *= c;
            }
        }
    }

    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pr = -1;
        for (int i = r; i < rows_; ++i)
            if (!at(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(r, j), at(pr, j));
        const Scalar piv = at(r, c);
        for (int i = r + 1; i < rows_; ++i) {
            const Scalar f = at(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < cols_; ++j)
                at(i, j) = at(i, j) * piv - at(r, j) * f;
            if (rational) {
                /* keep integer entries small */
                mpz_class g(0);
                for (int j = c; j < cols_; ++j)
                    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), at(i, j).value().get_num().get_mpz_t());
                if (g > 1) {
                    Scalar inv(f_, mpq_class(mpz_class(1), g));
                    for (int j = c; j < cols_; ++j) at(i, j) *= inv;
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }

    /* Back substitution + pivot normalization (exact field division). */
    for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
        const int c = pivots[k];
        const Scalar inv = at(k, c).inverse();
        for (int j = c; j < cols_; ++j) at(k, j) *= inv;
        for (int i = 0; i < k; ++i) {
            const Scalar f = at(i, c);
            if (f.is_zero()) continue;
            for (int j = c; j < cols_; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return pivots;
}

int Matrix::rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref().size());
}

Scalar Matrix::det() const {
    if (rows_ != cols_) throw std::logic_error("det of non-square matrix");
    Matrix m = *this;
    Scalar d = Scalar::one(f_);
    int sign = 1;
    for (int c = 0; c < cols_; ++c) {
        int pr = -1;
        for (int i = c; i < rows_; ++i)
            if (!m.at(i, c).is_zero()) { pr = i; break; }
        if (pr < 0) return Scalar::zero(f_);
        if (pr != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(c, j), m.at(pr, j));
            sign = -sign;
        }
        const Scalar piv = m.at(c, c);
        d *= piv;
        const Scalar inv = piv.inverse();
        for (int i = c + 1; i < rows_; ++i) {
            const Scalar f = m.at(i, c) * inv;
            if (f.is_zero()) continue;
            for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    if (sign < 0) d = -d;
    return d;
}

Matrix Matrix::nullspace() const {
    Matrix m = *this;
    std::vector<int> piv = m.rref();
    std::vector<int> pivot_of_col(cols_, -1);
    for (size_t k = 0; k < piv.size(); ++k) pivot_of_col[piv[k]] = static_cast<int>(k);
    std::vector<int> free_cols;
    for (int j = 0; j < cols_; ++j)
        if (pivot_of_col[j] < 0) free_cols.push_back(j);

    Matrix basis(f_, cols_, static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        const int fc = free_cols[k];
        basis.at(fc, static_cast<int>(k)) = Scalar::one(f_);
        for (int j = 0; j < cols_; ++j) {
            const int pr = pivot_of_col[j];
            if (pr >= 0) basis.at(j, static_cast<int>(k)) = -m.at(pr, fc);
        }
    }
    return basis;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    if (b.rows() != rows_) throw std::logic_error("solve: rhs shape mismatch");
    Matrix aug = hstack(b);
    std::vector<int> piv = aug.rref();
    for (int p : piv)
        if (p >= cols_) return std::nullopt;
    Matrix x(f_, cols_, b.cols());
    for (size_t k = 0; k < piv.size(); ++k)
        for (int j = 0; j < b.cols(); ++j) x.at(piv[k], j) = aug.at(static_cast<int>(k), cols_ + j);
    return x;
}

Matrix Matrix::column_space() const {
    Matrix m = *this;
    std::vector<int> piv = m.rref();
    Matrix r(f_, rows_, static_cast<int>(piv.size()));
    for (size_t k = 0; k < piv.size(); ++k)
        for (int i = 0; i < rows_; ++i) r.at(i, static_cast<int>(k)) = at(i, piv[k]);
    return r;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) throw std::logic_error("inverse of non-square matrix");
    Matrix aug = hstack(identity(f_, rows_));
    std::vector<int> piv = aug.rref();
    if (static_cast<int>(piv.size()) != rows_ || (rows_ > 0 && piv.back() >= cols_))
        return std::nullopt;
    for (int p : piv)
        if (p >= cols_) return std::nullopt;
    if (static_cast<int>(piv.size()) < rows_) return std::nullopt;
    return aug.submatrix(0, cols_, rows_, cols_);
}

Matrix Matrix::row_space_basis() const {
    Matrix m = transpose();
    std::vector<int> piv = m.rref();
    return m.submatrix(0, 0, static_cast<int>(piv.size()), m.cols());
}

bool in_span(const Matrix& basis_cols, const Matrix& v) {
    return basis_cols.solve(v).has_value();
}

}  // namespace qk
