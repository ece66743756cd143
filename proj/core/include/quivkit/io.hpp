#pragma once

#include <string>

#include "quivkit/extensions.hpp"
#include "quivkit/family.hpp"
#include "quivkit/selfinjective.hpp"

/* JSON text formats for the file-facing types.  Paths are serialized as
   arrow-name arrays in application order (arrows[0] is traversed first);
   scalars as exact strings ("a" or "a/b"); fields as {"p": 0} for the
   rationals and {"p": q} for GF(q). */
namespace qk::io {

std::string quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const std::string& text);

std::string algebra_to_json(const BoundQuiverAlgebra& A);
AlgebraPtr algebra_from_json(const std::string& text);

std::string rep_to_json(const Representation& M);
Representation rep_from_json(const AlgebraPtr& A, const std::string& text);

/* Object map plus linear data.  "data" selects how the slot data is
   produced when the file carries none: "identity" uses position-wise
   identity slot data, "search" runs the sign/linear-solve completion.
   Explicit b_image/d_image arrays override both. */
std::string automorphism_to_json(const AutomorphismSpec& g);
AutomorphismSpec automorphism_from_json(const AlgebraPtr& B, const std::string& text);

std::string branch_spec_to_json(const BranchExtensionSpec& spec);
BranchExtensionSpec branch_spec_from_json(const std::string& text);

std::string family_report_to_json(const FamilyReport& r);
std::string match_result_to_json(const MatchResult& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace qk::io
