#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quivkit/ar.hpp"

namespace qk {

/* Counts on a knitted fragment of a smooth quasi-tube: simple modules,
   projective(-injective) modules, and the rank of the stable part. */
struct TubeStats {
    int s = 0;
    int p = 0;
    int r = 0;
};

/* Requires the fragment deep enough to contain every projective insertion
   of its rank cycle (layers >= rank + 1); throws Error("DepthInsufficient")
   otherwise.  The counts are exact for the fragment, and for the whole
   quasi-tube once the fragment passes that depth (simples and projectives
   sit within quasi-length r of the mouth). */
TubeStats quasi_tube_stats(const TubeFragment& T);

/* All nonstable (inserted) vertices are projective-injective. */
bool is_smooth(const TubeFragment& T);

enum class Verdict { Certified, RefutedWithWitness, Inconclusive };
std::string verdict_str(Verdict v);

/* A nonzero endomorphism of E factoring through W, exhibited as the
   composite of a hom E -> W and a hom W -> E.  Empty when every such
   composite vanishes. */
std::optional<Hom> factor_through_witness(const Representation& E, const Representation& W);

struct FactorizationWitness {
    Representation E;        // endpoint of the endomorphism
    Representation through;  // module outside the family carrying the factorization
    Hom f;                   // the nonzero composite
    std::string note;
};

struct FamilyReport {
    std::vector<TubeStats> stats;  // per fragment
    bool ms1 = false;
    bool ms2 = false;
    bool ms3 = false;
    std::vector<std::string> ms1_failures;  // fragments with s + p != r - 1
    std::vector<std::string> ms2_failures;  // (module, vertex) outside the allowed set
    std::vector<std::string> ms3_failures;  // fragments with no soc-S / top-T module
    Verdict standardness = Verdict::Inconclusive;
    std::vector<std::string> standardness_evidence;
    std::vector<FactorizationWitness> counterexamples;
    std::vector<std::string> notes;
    bool ok() const { return ms1 && ms2 && ms3; }
    std::string str() const;
};

/* Maximal-saturation conditions on the given fragments, relative to the two
   designated simple modules S and T outside the family:
     - per fragment, s + p = r - 1;
     - every composition factor of every fragment module is S, T, a simple
       module of the family, or the socle or top of a projective module of
       the family (checked as vertex-support containment, multiplicities
       reported separately in `notes`);
     - every fragment contains a module E with soc E = S and top E = T.
   Completeness over ALL quasi-tubes of the component quiver is out of
   reach of a fragment check; the verdict is scoped to the given family. */
FamilyReport check_ms(const std::vector<TubeFragment>& family, const Representation& S,
                      const Representation& T_mod);

/* Generalized standardness of a stable tube via its mouth: certified iff
   the mouth consists of pairwise orthogonal bricks.  Fragments with
   projective vertices are rejected (Error("HasProjectives")): the mouth
   criterion is only valid for stable tubes. */
Verdict standardness_via_mouth(const TubeFragment& T, std::vector<std::string>* evidence = nullptr);

/* The tau-cycle through M: M, tau M, ..., up to the first repetition of M.
   Throws Error("NotPeriodic") if no repetition occurs within max_rank
   steps (then M does not lie on the stable mouth of a quasi-tube, or the
   cap is too small).  The returned cycle is a valid knit_tube mouth. */
std::vector<Representation> mouth_cycle(const Representation& M, int max_rank = 12);

}  // namespace qk
