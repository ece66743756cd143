#pragma once

#include "quivkit/canonical.hpp"

namespace qk {

struct OnePointResult {
    AlgebraPtr algebra;
    int new_vertex = -1;
    std::vector<int> new_arrows;
    /* relations added beyond the base algebra's */
    std::vector<PathElement> added_relations;
};

/* A[X]: adjoins a source vertex v whose projective has radical X.  One arrow
   v -> y per top generator of X at y; relations cut the paths from v down to
   a copy of X.  dim A[X] = dim A + dim X + 1. */
OnePointResult one_point_extension(const AlgebraPtr& A, const Representation& X,
                                   const std::string& vertex_name,
                                   const std::vector<std::string>& arrow_names = {});

/* [X]A: the dual construction, a sink vertex v with I(v)/soc realizing X.
   Built as the opposite of the one-point extension of the opposite by D(X). */
OnePointResult one_point_coextension(const AlgebraPtr& A, const Representation& X,
                                     const std::string& vertex_name,
                                     const std::vector<std::string>& arrow_names = {});

/* Ray-insertion operation: (A x H_t)[X + Y] where H_t is the linear A_t path
   algebra and Y its projective-injective; t = 0 degenerates to A[X].
   X must be a brick. */
OnePointResult ad1(const AlgebraPtr& A, const Representation& X, int t,
                   const std::string& vertex_name);

/* A finite bound quiver attached to the rest of the world only through its
   root vertex. */
struct Branch {
    Quiver quiver;
    std::vector<PathElement> relations;
    int root = 0;
};

struct BranchAttachment {
    Representation E;  // a module on a tube mouth of the base canonical algebra
    Branch branch;
    std::string connector_name;  // name of the arrow joining root and base
};

struct BranchExtensionSpec {
    CanonicalAlgebra base;
    std::vector<BranchAttachment> attachments;
    bool coextension = false;
};

struct BranchExtensionResult {
    AlgebraPtr algebra;
    /* base vertices keep their indices; branch_vertex[i][k] is the index of
       vertex k of branch i */
    std::vector<std::vector<int>> branch_vertex;
    std::vector<std::vector<int>> connectors;  // arrow indices per attachment
};

/* Glues each branch at its mouth module by a one-point (co)extension at the
   root, keeping branch-internal arrows and relations.  Each E must be
   isomorphic to a mouth module of the base family (MouthMismatch). */
BranchExtensionResult branch_extension(const BranchExtensionSpec& spec);

}  // namespace qk
