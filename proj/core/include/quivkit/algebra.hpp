#pragma once

#include <map>
#include <memory>
#include <optional>

#include "quivkit/matrix.hpp"
#include "quivkit/quiver.hpp"

namespace qk {

/* Finite-dimensional quotient of a path algebra by an admissible ideal.
   The basis consists of path cosets, found by closing the relation ideal
   degree by degree until no path of the top length survives reduction
   (all longer paths then reduce by induction on arrow multiplication). */
class BoundQuiverAlgebra {
  public:
    /* Dense coordinates in the path-coset basis. */
    using Elt = std::vector<Scalar>;

    BoundQuiverAlgebra(const Field& f, Quiver q, std::vector<PathElement> relations,
                       int length_cap = 40);

    const Field& field() const { return field_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<PathElement>& relations() const { return relations_; }

    int dim() const { return static_cast<int>(basis_.size()); }
    int stabilization_degree() const { return stab_degree_; }

    const Path& basis_path(int i) const { return paths_[basis_[i]]; }
    int basis_source(int i) const { return basis_path(i).source; }
    int basis_target(int i) const { return basis_path(i).target; }
    std::string basis_str(int i) const { return path_str(quiver_, basis_path(i)); }

    /* Basis indices with the given source and target (paths s -> t). */
    std::vector<int> block(int s, int t) const;
    int block_dim(int s, int t) const { return static_cast<int>(block(s, t).size()); }

    int idempotent_index(int v) const;

    Elt zero() const { return Elt(basis_.size(), Scalar(field_)); }
    Elt unit() const;
    Elt idempotent(int v) const;
    Elt basis_elt(int i) const;
    Elt arrow_elt(int a) const;  // coset of the length-1 path

    bool is_zero_elt(const Elt& x) const;
    Elt add(const Elt& x, const Elt& y) const;
    Elt sub(const Elt& x, const Elt& y) const;
    Elt scale(const Scalar& c, const Elt& x) const;
    /* Product x * y = "x then y" (paths compose left to right). */
    Elt mul(const Elt& x, const Elt& y) const;
    const Elt& mul_basis(int i, int j) const;

    Elt reduce_path(const Path& p) const;
    Elt reduce(const PathElement& x) const;

    std::string elt_str(const Elt& x) const;

    BoundQuiverAlgebra opposite() const;

  private:
    struct Block;
    void build(int length_cap);
    Elt mul_elt_arrow(const Elt& x, int a) const;
    Elt mul_arrow_elt(int a, const Elt& x) const;

    Field field_;
    Quiver quiver_;
    std::vector<PathElement> relations_;
    int stab_degree_ = 0;

    std::vector<Path> paths_;                 // all enumerated paths, id order
    std::map<std::vector<int>, int> path_id_; // arrow sequence -> id (length >= 1)
    std::vector<int> basis_;                  // path ids forming the basis, id order
    std::vector<int> basis_index_of_path_;    // path id -> basis index or -1
    /* path id -> expression in basis (for reducible enumerated paths). */
    std::vector<std::vector<std::pair<int, Scalar>>> reduction_;
    std::vector<bool> reducible_;

    mutable std::map<std::pair<int, int>, Elt> mul_memo_;
};

}  // namespace qk
