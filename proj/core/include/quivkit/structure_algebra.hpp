#pragma once

#include <string>
#include <vector>

#include "quivkit/matrix.hpp"

namespace qk {

/* Associative unital algebra given by structure constants. */
class StructureConstantAlgebra {
  public:
    using Vec = std::vector<Scalar>;

    StructureConstantAlgebra() = default;  // zero algebra placeholder
    StructureConstantAlgebra(const Field& f, std::vector<std::string> names,
                             std::vector<std::vector<Vec>> mult, Vec unit);

    /* Span of independent matrices closed under products and containing
       `unit_mat`; structure constants are read off by solving. */
    static StructureConstantAlgebra from_matrices(const Field& f,
                                                  const std::vector<Matrix>& basis,
                                                  const Matrix& unit_mat);

    const Field& field() const { return f_; }
    int dim() const { return static_cast<int>(names_.size()); }
    const std::string& basis_name(int i) const { return names_[i]; }
    const Vec& unit() const { return unit_; }

    Vec zero() const { return Vec(dim(), Scalar(f_)); }
    Vec basis_vec(int i) const;
    Vec mul(const Vec& x, const Vec& y) const;
    bool is_zero_vec(const Vec& x) const;
    Vec add(const Vec& x, const Vec& y) const;
    Vec sub(const Vec& x, const Vec& y) const;
    Vec scale(const Scalar& c, const Vec& x) const;

    Matrix left_mult(const Vec& x) const;   // L_x in basis coordinates
    Matrix right_mult(const Vec& x) const;

    bool check_associativity() const;

    /* Jacobson radical via the trace form of the regular representation;
       verified to be a nilpotent two-sided ideal (throws
       Error("RadicalFailure") otherwise — relevant over GF(p), where the
       trace-form method is experimental). */
    std::vector<Vec> radical_basis() const;

    std::vector<Vec> center_basis() const;

    /* Monic minimal polynomial of x (coefficients low to high). */
    std::vector<Scalar> min_poly(const Vec& x) const;

  private:
    Field f_;
    std::vector<std::string> names_;
    std::vector<std::vector<Vec>> mult_;  // mult_[i][j] = coords of b_i * b_j
    Vec unit_;
};

/* Subspace helpers: subspaces of an SCA are column-basis matrices (dim x k). */
Matrix span_of_vecs(const Field& f, int dim, const std::vector<StructureConstantAlgebra::Vec>& vs);
Matrix product_span(const StructureConstantAlgebra& A, const Matrix& U, const Matrix& V);
bool subspace_eq(const Matrix& U, const Matrix& V);
bool subspace_leq(const Matrix& U, const Matrix& V);  // U <= V
Matrix subspace_sum(const Matrix& U, const Matrix& V);
Matrix subspace_intersect(const Matrix& U, const Matrix& V);

struct QuotientAlgebra {
    StructureConstantAlgebra algebra;
    Matrix projection;  // q x n
    Matrix section;     // n x q
};
/* Quotient by a two-sided ideal given as a column-basis matrix. */
QuotientAlgebra quotient_algebra(const StructureConstantAlgebra& A, const Matrix& ideal);

/* All rational roots of a polynomial over Q (low-to-high coefficients),
   with multiplicity deflated; sets *complete = false if root search had to
   give up (oversized coefficient factorizations). */
std::vector<Scalar> rational_roots(const Field& f, const std::vector<Scalar>& poly,
                                   bool* complete);

}  // namespace qk
