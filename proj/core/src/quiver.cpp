#include "quivkit/quiver.hpp"

#include <functional>
#include <sstream>

namespace qk {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    const int n = num_vertices();
    out_.assign(n, {});
    in_.assign(n, {});
    for (int a = 0; a < num_arrows(); ++a) {
        const Arrow& ar = arrows_[a];
        if (ar.from < 0 || ar.from >= n || ar.to < 0 || ar.to >= n)
            throw Error("InvalidQuiver", "arrow endpoint out of range: " + ar.name);
        out_[ar.from].push_back(a);
        in_[ar.to].push_back(a);
    }
    for (int i = 0; i < num_arrows(); ++i)
        for (int j = i + 1; j < num_arrows(); ++j)
            if (arrows_[i].name == arrows_[j].name)
                throw Error("InvalidQuiver", "duplicate arrow name " + arrows_[i].name);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (vertices_[i] == vertices_[j])
                throw Error("InvalidQuiver", "duplicate vertex name " + vertices_[i]);
}

int Quiver::vertex_index(const std::string& name) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices_[i] == name) return i;
    return -1;
}

int Quiver::arrow_index(const std::string& name) const {
    for (int i = 0; i < num_arrows(); ++i)
        if (arrows_[i].name == name) return i;
    return -1;
}

bool Quiver::is_acyclic() const {
    const int n = num_vertices();
    std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::function<bool(int)> dfs = [&](int v) {
        state[v] = 1;
        for (int a : out_[v]) {
            const int w = arrows_[a].to;
            if (state[w] == 1) return false;
            if (state[w] == 0 && !dfs(w)) return false;
        }
        state[v] = 2;
        return true;
    };
    for (int v = 0; v < n; ++v)
        if (state[v] == 0 && !dfs(v)) return false;
    return true;
}

Quiver Quiver::opposite() const {
    std::vector<Arrow> rev;
    rev.reserve(arrows_.size());
    for (const Arrow& a : arrows_) rev.push_back({a.name, a.to, a.from});
    return Quiver(vertices_, rev);
}

std::string Quiver::dot(const std::string& graph_name) const {
    std::ostringstream os;
    os << "digraph \"" << graph_name << "\" {\n";
    for (const auto& v : vertices_) os << "  \"" << v << "\";\n";
    for (const auto& a : arrows_)
        os << "  \"" << vertices_[a.from] << "\" -> \"" << vertices_[a.to]
           << "\" [label=\"" << a.name << "\"];\n";
    os << "}\n";
    return os.str();
}

Path make_path(const Quiver& q, const std::vector<int>& arrows) {
    if (arrows.empty()) throw Error("InvalidPath", "empty arrow list; use trivial_path");
    Path p;
    p.arrows = arrows;
    p.source = q.arrow(arrows.front()).from;
    p.target = q.arrow(arrows.back()).to;
    for (size_t i = 0; i + 1 < arrows.size(); ++i)
        if (q.arrow(arrows[i]).to != q.arrow(arrows[i + 1]).from)
            throw Error("InvalidPath", "non-composable arrow sequence");
    return p;
}

Path trivial_path(int vertex) {
    Path p;
    p.source = p.target = vertex;
    return p;
}

Path concat(const Path& p, const Path& q) {
    if (p.target != q.source) throw Error("InvalidPath", "concat endpoint mismatch");
    Path r;
    r.source = p.source;
    r.target = q.target;
    r.arrows = p.arrows;
    r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
    return r;
}

std::string path_str(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e_" + q.vertex_name(p.source);
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrow(p.arrows[i]).name;
    }
    return s;
}

PathElement make_relation(const Quiver& q, std::vector<PathTerm> terms) {
    if (terms.empty()) throw Error("InvalidRelation", "empty relation");
    PathElement r;
    r.terms = std::move(terms);
    const int s = r.terms[0].path.source, t = r.terms[0].path.target;
    for (const auto& term : r.terms) {
        (void)make_path(q, term.path.arrows);  // validates composability
        if (term.path.source != s || term.path.target != t)
            throw Error("InvalidRelation", "relation terms are not parallel");
        if (term.path.length() < 2)
            throw Error("InvalidRelation", "relation term of length < 2 (ideal not admissible)");
    }
    return r;
}

}  // namespace qk
