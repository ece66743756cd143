#pragma once

#include <optional>
#include <vector>

#include "quivkit/scalar.hpp"

namespace qk {

/* Dense exact matrix.  Row-major.  All entries share one field. */
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(const Field& f, int rows, int cols)
        : f_(f), rows_(rows), cols_(cols),
          d_(static_cast<size_t>(rows) * cols, Scalar(f)) {}

    static Matrix identity(const Field& f, int n);

    const Field& field() const { return f_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return d_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return d_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;

    Matrix hstack(const Matrix& o) const;  // [this | o]
    Matrix vstack(const Matrix& o) const;  // [this ; o]
    Matrix submatrix(int r0, int c0, int nr, int nc) const;

    /* Reduced row echelon form (in place); returns pivot column indices.
       Fraction-free forward pass over Q, plain over GF(p). */
    std::vector<int> rref();

    int rank() const;
    Scalar det() const;

    /* Basis of { x : A x = 0 }, as columns of the returned matrix. */
    Matrix nullspace() const;

    /* One solution of A x = b, or nullopt if inconsistent. */
    std::optional<Matrix> solve(const Matrix& b) const;

    /* Column-space basis: the subset of columns at the pivot positions. */
    Matrix column_space() const;

    std::optional<Matrix> inverse() const;

    /* Treats columns of this as spanning vectors; returns an RREF basis matrix
       (each row a basis vector) of the span. */
    Matrix row_space_basis() const;

  private:
    Field f_;
    int rows_, cols_;
    std::vector<Scalar> d_;
};

/* Membership of v (column vector) in the column span of B. */
bool in_span(const Matrix& basis_cols, const Matrix& v);

}  // namespace qk
