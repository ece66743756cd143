#pragma once

#include <string>
#include <vector>

#include "quivkit/scalar.hpp"

namespace qk {

struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg) : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

struct Arrow {
    std::string name;
    int from = -1;  // source vertex index
    int to = -1;    // target vertex index
};

class Quiver {
  public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::string& vertex_name(int v) const { return vertices_[v]; }

    int vertex_index(const std::string& name) const;  // -1 if absent
    int arrow_index(const std::string& name) const;   // -1 if absent

    const std::vector<int>& arrows_from(int v) const { return out_[v]; }
    const std::vector<int>& arrows_to(int v) const { return in_[v]; }

    bool is_acyclic() const;
    Quiver opposite() const;

    std::string dot(const std::string& graph_name = "quiver") const;

  private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_, in_;
};

/* A path is a composable arrow sequence stored in application order:
   arrows[0] is traversed first.  Length 0 = the trivial path at a vertex. */
struct Path {
    int source = -1;
    int target = -1;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool operator==(const Path&) const = default;
};

Path make_path(const Quiver& q, const std::vector<int>& arrows);
Path trivial_path(int vertex);
/* p then q; throws unless target(p) == source(q). */
Path concat(const Path& p, const Path& q);
std::string path_str(const Quiver& q, const Path& p);

struct PathTerm {
    Scalar coef;
    Path path;
};

/* K-linear combination of parallel paths (all with one source and target). */
struct PathElement {
    std::vector<PathTerm> terms;
    int source() const { return terms.empty() ? -1 : terms[0].path.source; }
    int target() const { return terms.empty() ? -1 : terms[0].path.target; }
};

/* Validates parallelism of terms and composability of each path. */
PathElement make_relation(const Quiver& q, std::vector<PathTerm> terms);

}  // namespace qk
