#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quivkit/rep.hpp"
#include "quivkit/structure_algebra.hpp"

namespace qk {

/* ---- repetitive algebra -------------------------------------------------
   The repetitive algebra of B has one copy of B per level m together with a
   copy of D(B) connecting consecutive levels.  A basis element is either

     (m, u)    for u a basis element of B              ("B-part"), or
     (m, f_u)  for f_u the dual functional of u        ("D-part"),

   where the D-part at level m is framed between level m+1 on the left and
   level m on the right: for u in block(i,j), f_u lives in
   e_{(m+1,j)} . Bhat . e_{(m,i)}.  Products:

     (m,u)(m,v)     = (m, uv)
     (m+1,v)(m,f)   = (m, v*f),  (v*f)(x) = f(xv)
     (m,f)(m,u)     = (m, f*u),  (f*u)(x) = f(ux)

   and every other pairing is zero. */

struct WKey {
    int level = 0;
    bool dual = false;
    int idx = 0;  // basis index in B
    auto operator<=>(const WKey&) const = default;
};

/* Finitely supported element of the repetitive algebra. */
using WElt = std::map<WKey, Scalar>;

struct WObj {  // object (level, vertex)
    int level = 0;
    int vertex = 0;
    auto operator<=>(const WObj&) const = default;
};

WObj left_frame(const BoundQuiverAlgebra& B, const WKey& k);
WObj right_frame(const BoundQuiverAlgebra& B, const WKey& k);

WElt window_mul(const BoundQuiverAlgebra& B, const WElt& x, const WElt& y);
WElt window_add(const BoundQuiverAlgebra& B, const WElt& x, const WElt& y);
WElt window_scale(const Scalar& c, const WElt& x);
std::string wkey_str(const BoundQuiverAlgebra& B, const WKey& k);

/* Materialized finite window [lo, hi] of the repetitive algebra, as a
   structure-constant algebra (unital; products falling outside the window
   are truncated, which only affects the boundary D-slot at level hi). */
struct RepetitiveWindow {
    AlgebraPtr B;
    int lo = 0, hi = 0;
    std::vector<WKey> keys;  // basis order of `sca`
    StructureConstantAlgebra sca;

    int key_index(const WKey& k) const;  // -1 if outside
};

RepetitiveWindow repetitive_window(const AlgebraPtr& B, int lo, int hi);

/* ---- automorphisms ------------------------------------------------------
   An automorphism is given by an object map e_{m,i} -> e_{m+shift[i],
   perm[i]} (extended level-equivariantly) together with the induced linear
   data: the image of every level-0 basis element, as a combination inside
   the unique slot allowed by the object map.  Validity (multiplicativity
   and bijectivity) is checked, never assumed. */

struct WTerm {
    bool dual = false;
    int idx = 0;
    Scalar c;
};

struct BasisImage {
    int level_offset = 0;
    std::vector<WTerm> terms;
};

struct AutomorphismSpec {
    AlgebraPtr B;
    std::vector<int> shift;  // per vertex of B
    std::vector<int> perm;   // per vertex of B
    std::vector<BasisImage> b_image;  // image of (0, u), per basis index
    std::vector<BasisImage> d_image;  // image of (0, f_u), per basis index
};

/* Image of the object (m, i). */
WObj apply_object(const AutomorphismSpec& g, const WObj& x);
WElt apply_auto(const AutomorphismSpec& g, const WElt& x);
/* x |-> g^k(x) for any integer k (inverse slot maps are solved once). */
WElt apply_auto_power(const AutomorphismSpec& g, const WElt& x, int k);

/* The Nakayama automorphism: pure level shift, identity linear data. */
AutomorphismSpec nakayama(const AlgebraPtr& B);

/* Automorphism with the given object map and position-wise identity slot
   data (basis element k of a slot maps to basis element k of the target
   slot).  Throws Error("SlotMismatch") when slot dimensions disagree.
   The result still has to pass verify_automorphism. */
AutomorphismSpec shift_automorphism(const AlgebraPtr& B, std::vector<int> shift,
                                    std::vector<int> perm);

/* Search for slot data realizing the given object map as an automorphism.
   Arrow images are tried as +-1 multiples of the target-slot basis element
   (every arrow slot must be one-dimensional, else Error("Unsupported"));
   once the arrow signs fix the images of all B-part elements, the dual-part
   images satisfy a linear system and are taken from its solution space.
   The returned spec passes verify_automorphism; an empty optional means the
   search was exhausted, not that no automorphism exists.  Distinct sign
   choices can produce non-conjugate automorphisms with non-isomorphic orbit
   algebras; `accept` rejects verified candidates and keeps the search
   going. */
std::optional<AutomorphismSpec> complete_automorphism(
    const AlgebraPtr& B, std::vector<int> shift, std::vector<int> perm,
    const std::function<bool(const AutomorphismSpec&)>& accept = nullptr);

bool verify_automorphism(const AutomorphismSpec& g, std::string* why = nullptr);
AutomorphismSpec invert_automorphism(const AutomorphismSpec& g);
/* Object maps of g1 o g2 and h agree on one fundamental domain. */
bool same_object_map(const AutomorphismSpec& g1, const AutomorphismSpec& g2,
                     const AutomorphismSpec& h);

enum class AutomorphismClass { Invalid, Rigid, StrictlyPositive, Positive, NotPositive };
AutomorphismClass classify(const AutomorphismSpec& g);
std::string automorphism_class_str(AutomorphismClass c);

/* ---- orbit algebras ----------------------------------------------------- */

struct OrbitAlgebra {
    AlgebraPtr B;
    AutomorphismSpec g;
    std::vector<WObj> objects;        // canonical object orbit representatives
    std::vector<WKey> keys;           // canonical basis: keys with canonical left frame
    StructureConstantAlgebra sca;     // products of orbit classes
    std::vector<int> idem_key;        // per object, index into keys of its idempotent

    int key_index(const WKey& k) const;
    /* Orbit class of an arbitrary finitely supported element. */
    StructureConstantAlgebra::Vec project(const WElt& x) const;
};

/* Orbit algebra of the repetitive algebra by the cyclic group generated by
   g.  Requires g valid, positive, and acting freely with finitely many
   orbits (every perm-cycle must have positive total shift); throws
   Error("NotAdmissible") otherwise.  The result is verified associative
   and unital. */
OrbitAlgebra orbit_algebra(const AlgebraPtr& B, const AutomorphismSpec& g);

/* Trivial extension B + D(B), built directly; basis = B-part then D-part
   in B basis order.  Isomorphic to orbit_algebra(B, nakayama(B)). */
struct TrivialExtension {
    AlgebraPtr B;
    StructureConstantAlgebra sca;
    std::vector<StructureConstantAlgebra::Vec> idempotents;  // per vertex of B
    std::vector<std::string> object_names;
};
TrivialExtension trivial_extension(const AlgebraPtr& B);

/* ---- Gabriel presentations ---------------------------------------------- */

/* Bound quiver presentation of a basic structure-constant algebra, given a
   complete set of primitive orthogonal idempotents.  `arrow_lift[a]` is the
   chosen preimage in A of arrow a; `to_algebra` columns express each A
   basis element is not needed: iso is certified by dim equality plus
   surjectivity of the induced map. */
struct Presentation {
    AlgebraPtr algebra;
    std::vector<StructureConstantAlgebra::Vec> vertex_idem;
    std::vector<StructureConstantAlgebra::Vec> arrow_lift;
};

Presentation gabriel_presentation(const StructureConstantAlgebra& A,
                                  const std::vector<StructureConstantAlgebra::Vec>& idems,
                                  const std::vector<std::string>& names);

Presentation gabriel_presentation(const OrbitAlgebra& O);
Presentation gabriel_presentation(const TrivialExtension& T);

/* Try to realize `target` inside A: a vertex bijection matching block
   dimensions, then arrow images (scalar search over signed units, then a
   small rational grid) under which every relation of `target` vanishes and
   the induced map is bijective.  Returns true on success; a false result
   means the search was exhausted, not that the algebras differ. */
struct MatchResult {
    bool matched = false;
    std::string detail;
    std::vector<int> vertex_map;  // target vertex -> idempotent index of A
};
MatchResult match_presentation(const AlgebraPtr& target, const StructureConstantAlgebra& A,
                               const std::vector<StructureConstantAlgebra::Vec>& idems);
MatchResult match_presentation(const AlgebraPtr& target, const AlgebraPtr& A);

/* ---- selfinjectivity and symmetry ---------------------------------------- */

bool is_selfinjective(const AlgebraPtr& A);
/* Searches for a linear functional with f(ab) = f(ba) whose associated
   bilinear form f(ab) is nondegenerate; the search is exact on the
   commutator-space side and sampled on the nondegeneracy side. */
bool is_symmetric(const AlgebraPtr& A);

/* ---- ideal toolkit ------------------------------------------------------- */

/* Two-sided ideal of a bound quiver algebra, stored as a column basis in
   algebra coordinates (closure under both multiplications is verified). */
struct Ideal {
    Matrix basis;  // dim(A) x k
    int dim() const { return basis.cols(); }
};

Ideal make_ideal(const AlgebraPtr& A, const Matrix& span_cols);
Ideal ideal_closure(const AlgebraPtr& A, const Matrix& seed_cols);
bool ideal_contains(const Ideal& I, const BoundQuiverAlgebra::Elt& x);
bool ideal_eq(const Ideal& I, const Ideal& J);

/* Elements annihilating every module of the family (empty family -> A). */
Ideal annihilator(const AlgebraPtr& A, const std::vector<Representation>& family);
/* Sum of images of all homomorphisms from family members into A_A. */
Ideal trace_ideal(const AlgebraPtr& A, const std::vector<Representation>& family);
/* Trace ideal of the dual family of left modules, as a subspace of A
   (computed over the opposite algebra and carried back along the
   path-reversal isomorphism). */
Ideal left_trace_ideal(const AlgebraPtr& A, const std::vector<Representation>& family);
Ideal left_annihilator(const AlgebraPtr& A, const Ideal& I);
Ideal right_annihilator(const AlgebraPtr& A, const Ideal& I);
Ideal socle_ideal(const AlgebraPtr& A);

Ideal ideal_product(const AlgebraPtr& A, const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const AlgebraPtr& A, const Ideal& I, const Ideal& J);
/* eXe, Xe, eX as subspaces (not necessarily ideals of A). */
Matrix corner_slice(const AlgebraPtr& A, const BoundQuiverAlgebra::Elt& e, const Matrix& X,
                    bool left, bool right);

/* Sum of the primitive idempotents of A not contained in I. */
BoundQuiverAlgebra::Elt residual_identity(const AlgebraPtr& A, const Ideal& I);

/* Criterion for A to be an orbit algebra of an algebra with acyclic quiver:
   r_A(I) = eI for e the residual identity, and the quiver of A/I acyclic.
   The quotient presentation is returned for identification of A/I. */
struct AcyclicQuotientReport {
    bool r_ann_eq_eI = false;
    bool quotient_acyclic = false;
    bool ok = false;
    BoundQuiverAlgebra::Elt e;
    Presentation quotient;
};
AcyclicQuotientReport check_acyclic_quotient(const AlgebraPtr& A, const Ideal& I);

/* Deforming-ideal test: eIe = l_{eAe}(I) = r_{eAe}(I) and A/I triangular,
   plus the derived identities that hold in that situation. */
struct DeformingReport {
    bool eIe_eq_left = false;
    bool eIe_eq_right = false;
    bool quotient_triangular = false;
    bool deforming = false;
    bool IeI_zero = false;
    bool soc_in_I = false;
};
DeformingReport is_deforming(const AlgebraPtr& A, const Ideal& I);

/* ---- modules over the repetitive algebra and push-down ------------------- */

struct WindowModule {
    AlgebraPtr B;
    std::vector<WObj> support;               // objects with nonzero space, sorted
    std::vector<int> dims;                   // per support entry
    std::map<WKey, Matrix> action;           // M(left frame) -> M(right frame)

    int obj_index(const WObj& x) const;      // -1 outside support
    int dim_at(const WObj& x) const;
    Matrix action_of(const WKey& k) const;   // zero matrix when absent
    int total_dim() const;
};

/* Right module e_{(m,i)} Bhat (supported on levels m and m-1). */
WindowModule window_projective(const AlgebraPtr& B, int level, int vertex);
WindowModule window_simple(const AlgebraPtr& B, int level, int vertex);
/* A B-module placed at one level, with the D-part acting as zero. */
WindowModule window_from_rep(const Representation& M, int level);

/* Object map applied k times (k may be negative). */
WObj apply_object_power(const AutomorphismSpec& g, const WObj& x, int k);

/* The twist M^{g^k}: spaces (M^{g^k})(x) = M(g^k x), with the action of a
   basis key given by the action of its image under g^k.  Twisting by the
   Nakayama automorphism turns a level-m module into a level-(m-1) one. */
WindowModule twist_module(const WindowModule& M, const AutomorphismSpec& g, int k = 1);

/* Push-down to the orbit algebra: spaces are summed over object orbits and
   the arrow actions assembled equivariantly.  `P` must present O.sca. */
Representation push_down(const WindowModule& M, const OrbitAlgebra& O, const Presentation& P);

}  // namespace qk
