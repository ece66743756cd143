#pragma once

#include "quivkit/rep.hpp"

namespace qk {

/* A point of the projective line over the base field. */
struct TubeIndex {
    bool infinite = false;
    Scalar value;

    static TubeIndex inf(const Field& f) { return {true, Scalar(f)}; }
    static TubeIndex at(const Scalar& v) { return {false, v}; }
    bool operator==(const TubeIndex& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    std::string str() const { return infinite ? "inf" : value.str(); }
};

/* Weight sequence p and normalized parameter sequence lambda
   (lambda_1 = inf, lambda_2 = 0, pairwise distinct). */
struct CanonicalSpec {
    Field field = Field::rationals();
    std::vector<int> weights;
    std::vector<TubeIndex> params;
};

/* The star algebra of the spec: vertices 0, (i,k), omega; one arm of p_i
   arrows per weight, all paths pointing at 0; for m >= 3 arms, the m - 2
   relations  rho_j + rho_1 + lambda_j rho_2  on the arm paths rho_i. */
struct CanonicalAlgebra {
    AlgebraPtr A;
    CanonicalSpec spec;

    int m() const { return static_cast<int>(spec.weights.size()); }
    int vertex_zero() const { return 0; }
    int vertex_omega() const { return A->quiver().num_vertices() - 1; }
    /* vertex (i,k), 1 <= i <= m, 1 <= k <= p_i - 1 */
    int arm_vertex(int i, int k) const;
    /* arrow alpha_{i,k}, 1 <= k <= p_i, numbered from the 0 end */
    int arm_arrow(int i, int k) const;
};

CanonicalAlgebra canonical_algebra(const CanonicalSpec& spec);

/* The modules on the mouth of the tube at t: the arm simples S(i,1) ...
   S(i,p_i - 1) followed by the nonsimple module E^(t) when t is a parameter
   lambda_i; the single module E^(t) otherwise.  Matrix entries follow the
   explicit normal forms (twisted scalar on the first arm arrow). */
std::vector<Representation> mouth_modules(const CanonicalAlgebra& C, const TubeIndex& t);

/* p_i at t = lambda_i, otherwise 1. */
int tube_rank(const CanonicalAlgebra& C, const TubeIndex& t);

struct FamilyCheckReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> warnings;
};

/* Checks, on the sampled tubes: relations hold, mouths consist of pairwise
   orthogonal bricks, hom spaces between distinct tubes vanish both ways, and
   tau permutes each mouth in one cycle of length tube_rank. */
FamilyCheckReport verify_canonical_family(const CanonicalAlgebra& C,
                                          const std::vector<TubeIndex>& sample);

}  // namespace qk
