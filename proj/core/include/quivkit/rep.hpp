#pragma once

#include <memory>

#include "quivkit/algebra.hpp"

namespace qk {

using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

/* Finite-dimensional module, given as a representation of the bound quiver:
   a space per vertex and a matrix per arrow (acting on column vectors, so a
   path a1...ak evaluates as M_ak * ... * M_a1). */
class Representation {
  public:
    Representation() = default;
    Representation(AlgebraPtr A, std::vector<int> dims, std::vector<Matrix> maps);

    static Representation zero(AlgebraPtr A);

    const AlgebraPtr& algebra() const { return A_; }
    const Field& field() const { return A_->field(); }
    const std::vector<int>& dims() const { return dims_; }
    int dim(int v) const { return dims_[v]; }
    int total_dim() const;
    const Matrix& map(int arrow) const { return maps_[arrow]; }
    Matrix& map(int arrow) { return maps_[arrow]; }
    bool is_zero() const { return total_dim() == 0; }

    /* All relations of the algebra hold and all shapes are consistent. */
    bool check_relations(std::string* why = nullptr) const;

    Matrix evaluate(const Path& p) const;
    /* Evaluates an element supported on one block s->t as a matrix M_s -> M_t. */
    Matrix evaluate_block_elt(const BoundQuiverAlgebra::Elt& x, int s, int t) const;

    std::string str() const;

  private:
    AlgebraPtr A_;
    std::vector<int> dims_;
    std::vector<Matrix> maps_;
};

/* Morphism of representations: one matrix per vertex, f[v]: M_v -> N_v. */
struct Hom {
    std::vector<Matrix> f;
    bool is_zero() const;
};

Representation simple(const AlgebraPtr& A, int v);
Representation projective(const AlgebraPtr& A, int v);
Representation injective(const AlgebraPtr& A, int v);

/* Direct sum; optionally returns the canonical injections and projections. */
Representation direct_sum(const std::vector<Representation>& parts,
                          std::vector<Hom>* injections = nullptr,
                          std::vector<Hom>* projections = nullptr);

std::vector<Hom> hom_basis(const Representation& M, const Representation& N);
int hom_dim(const Representation& M, const Representation& N);
Hom zero_hom(const Representation& M, const Representation& N);
Hom identity_hom(const Representation& M);
Hom compose(const Representation& M, const Hom& f, const Representation& /*mid*/,
            const Hom& g, const Representation& N);
Hom add_hom(const Hom& a, const Hom& b);
Hom scale_hom(const Scalar& c, const Hom& a);
bool is_invertible(const Hom& f);

/* Per-vertex subspaces of an ambient representation, as column bases. */
struct SubSpaces {
    std::vector<Matrix> cols;
    int total_dim() const;
};

SubSpaces zero_sub(const Representation& M);
SubSpaces full_sub(const Representation& M);
SubSpaces kernel(const Representation& M, const Hom& f, const Representation& N);
SubSpaces image(const Representation& M, const Hom& f, const Representation& N);
/* Smallest subrepresentation containing the given per-vertex spans. */
SubSpaces span_closure(const Representation& M, const std::vector<Matrix>& seeds);
SubSpaces radical_sub(const Representation& M);
SubSpaces socle_sub(const Representation& M);
SubSpaces sum_sub(const Representation& M, const SubSpaces& a, const SubSpaces& b);
SubSpaces intersect_sub(const Representation& M, const SubSpaces& a, const SubSpaces& b);
bool sub_contains(const SubSpaces& a, const SubSpaces& b);  // b subset of a

/* The subrepresentation carried by `sub` (must be arrow-stable); `incl` gets
   the inclusion into M. */
Representation sub_rep(const Representation& M, const SubSpaces& sub, Hom* incl = nullptr);
/* Quotient of M by the (arrow-stable) subspaces; `proj` gets the projection. */
Representation quotient_rep(const Representation& M, const SubSpaces& sub, Hom* proj = nullptr);

Representation top(const Representation& M, Hom* proj = nullptr);
std::vector<int> top_dims(const Representation& M);
std::vector<int> socle_dims(const Representation& M);

/* D(M) over the opposite algebra (built by the caller, usually cached). */
Representation dual(const Representation& M, const AlgebraPtr& Aop);

/* Transport M over A to the algebra B along an injective vertex map and a
   compatible arrow map (vertices/arrows of A form a subquiver of B); the
   remaining vertices and arrows of B act as zero.  Relations are checked. */
Representation embed(const Representation& M, const AlgebraPtr& B,
                     const std::vector<int>& vertex_map,
                     const std::vector<int>& arrow_map);

/* Restriction along an algebra map B -> e A e: vertex v of B corresponds to
   vertex_map[v] of A, and arrow b of B acts through the given parallel
   element of A (a path combination). */
Representation restrict_along(const Representation& M, const AlgebraPtr& B,
                              const std::vector<int>& vertex_map,
                              const std::vector<PathElement>& arrow_images);

bool is_isomorphic(const Representation& M, const Representation& N,
                   unsigned seed = 0x5eed5eedULL);
bool is_brick(const Representation& M);

/* Indecomposable direct summands, found by idempotent lifting in End(M).
   Throws Error("NonSplitEndo", ...) if End(M)/rad does not split over the
   base field. */
std::vector<Representation> decompose(const Representation& M);

bool is_projective_rep(const Representation& M);
bool is_injective_rep(const Representation& M, const AlgebraPtr& Aop);

}  // namespace qk
