#pragma once

#include "quivkit/rep.hpp"

namespace qk {

/* Opposite algebra, cached per algebra instance while in use. */
AlgebraPtr opposite_algebra(const AlgebraPtr& A);

/* Minimal projective presentation P1 -> P0 ->> M together with the syzygy
   omega = ker(cover) as a subrepresentation of P0. */
struct ProjectivePresentation {
    std::vector<int> p0_vertices;  // summand vertices of P0 (with multiplicity)
    std::vector<int> p1_vertices;
    Representation P0, P1;
    Hom cover;       // P0 ->> M
    Representation omega;
    Hom omega_incl;  // omega -> P0
    Hom p1_cover;    // P1 ->> omega
    Hom d;           // P1 -> P0 (omega_incl after p1_cover)
};

/* Projective cover; the epimorphism goes into `cover`, the summand vertices
   (with multiplicity) into `verts` when given. */
Representation projective_cover(const Representation& M, Hom* cover,
                                std::vector<int>* verts = nullptr);

ProjectivePresentation minimal_projective_presentation(const Representation& M);

/* Injective envelope, as the dual construction. */
Representation injective_envelope(const Representation& M, Hom* env);

/* Auslander-Reiten translate and its inverse, via duals of transposed
   minimal presentations.  tau kills projective summands, tau_minus kills
   injective ones. */
Representation tau(const Representation& M);
Representation tau_minus(const Representation& M);
inline Representation tau_inverse(const Representation& M) { return tau_minus(M); }

int ext1_dim(const Representation& X, const Representation& Y);

/* Hom modulo maps factoring through a projective / an injective module. */
int proj_stable_hom_dim(const Representation& M, const Representation& N);
int inj_stable_hom_dim(const Representation& M, const Representation& N);
/* (mod projectives, mod injectives). */
std::pair<int, int> stable_hom_dims(const Representation& M, const Representation& N);

struct AlmostSplitSequence {
    Representation tauX;
    Representation middle;
    Representation X;
    Hom left;   // tauX -> middle, a kernel of `right`
    Hom right;  // middle ->> X
};

/* The almost split sequence ending at an indecomposable non-projective X.
   The extension class is picked in the socle of Ext^1(X, tauX) under the
   right End(X)-action; exactness and non-splitness are verified before
   returning.  Throws for projective or decomposable X. */
AlmostSplitSequence almost_split_sequence(const Representation& X);

/* tau-orbit of M: M, tau M, tau^2 M, ... until zero, a repeat of the start,
   or `max_steps` translates. */
std::vector<Representation> tau_orbit(const Representation& M, int max_steps);

/* A knitted fragment of a tube (or quasi-tube) component.  Layer l holds the
   modules of quasi-length l+1; ray k of layer l sits over mouth vertex k, and
   tau moves ray k to ray k-1 (mod rank) within each layer. */
struct TubeVertex {
    Representation M;
    bool projective_injective = false;
    bool is_simple = false;
};

struct TubeFragment {
    std::vector<std::vector<TubeVertex>> layers;
    std::vector<TubeVertex> inserted;  // projective-injective middle summands
    int rank = 0;                      // tau-period of the mouth
    int simple_count = 0;              // simples in the fragment
    int proj_count = 0;                // projective-injective vertices in the fragment
};

/* Builds `depth` layers from the mouth by almost split sequences; the mouth
   is reordered so tau(mouth[k]) = mouth[k-1].  Throws MouthNotPeriodic if
   tau does not permute the mouth in one cycle. */
TubeFragment knit_tube(const std::vector<Representation>& mouth, int depth);

std::string tube_dot(const TubeFragment& t);

}  // namespace qk
