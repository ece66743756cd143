#include "quivkit/extensions.hpp"

#include "quivkit/ar.hpp"

namespace qk {

namespace {

std::vector<int> complement_columns(const Field& f, const Matrix& sub, int n) {
    Matrix j = sub.hstack(Matrix::identity(f, n));
    auto pivots = j.rref();
    std::vector<int> out;
    for (int p : pivots)
        if (p >= sub.cols()) out.push_back(p - sub.cols());
    return out;
}

Path reverse_path(const Path& p) {
    Path q;
    q.source = p.target;
    q.target = p.source;
    q.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
    return q;
}

}  // namespace

OnePointResult one_point_extension(const AlgebraPtr& A, const Representation& X,
                                   const std::string& vertex_name,
                                   const std::vector<std::string>& arrow_names) {
    const Field& f = A->field();
    const Quiver& q = A->quiver();

    SubSpaces rad = radical_sub(X);
    std::vector<int> gen_vertex;
    std::vector<Matrix> gen_col;
    for (int y = 0; y < q.num_vertices(); ++y)
        for (int c : complement_columns(f, rad.cols[y], X.dim(y))) {
            Matrix g(f, X.dim(y), 1);
            g.at(c, 0) = Scalar::one(f);
            gen_vertex.push_back(y);
            gen_col.push_back(std::move(g));
        }

    std::vector<std::string> vnames;
    for (int v = 0; v < q.num_vertices(); ++v) vnames.push_back(q.vertex_name(v));
    vnames.push_back(vertex_name);
    const int v_new = q.num_vertices();

    std::vector<Arrow> arrows;
    for (int a = 0; a < q.num_arrows(); ++a) arrows.push_back(q.arrow(a));
    std::vector<int> new_arrows;
    for (size_t t = 0; t < gen_vertex.size(); ++t) {
        std::string nm = t < arrow_names.size()
                             ? arrow_names[t]
                             : vertex_name + "_a" + std::to_string(t + 1);
        new_arrows.push_back(static_cast<int>(arrows.size()));
        arrows.push_back({nm, v_new, gen_vertex[t]});
    }
    Quiver q2(vnames, arrows);

    std::vector<PathElement> rels = A->relations();
    std::vector<PathElement> added;
    for (int w = 0; w < q.num_vertices(); ++w) {
        /* kernel of (t, p: y_t -> w) |-> X(p) x_t gives the relations at w */
        std::vector<std::pair<int, Path>> items;
        for (size_t t = 0; t < gen_vertex.size(); ++t)
            for (int b : A->block(gen_vertex[t], w))
                items.emplace_back(static_cast<int>(t), A->basis_path(b));
        if (items.empty()) continue;
        Matrix phi(f, X.dim(w), static_cast<int>(items.size()));
        for (size_t c = 0; c < items.size(); ++c) {
            Matrix col = X.evaluate(items[c].second) * gen_col[items[c].first];
            for (int i = 0; i < X.dim(w); ++i) phi.at(i, c) = col.at(i, 0);
        }
        Matrix null = phi.nullspace();
        for (int c = 0; c < null.cols(); ++c) {
            PathElement r;
            for (size_t k = 0; k < items.size(); ++k) {
                if (null.at(static_cast<int>(k), c).is_zero()) continue;
                std::vector<int> seq{new_arrows[items[k].first]};
                seq.insert(seq.end(), items[k].second.arrows.begin(),
                           items[k].second.arrows.end());
                r.terms.push_back({null.at(static_cast<int>(k), c), make_path(q2, seq)});
            }
            if (!r.terms.empty()) {
                added.push_back(r);
                rels.push_back(r);
            }
        }
    }

    OnePointResult out;
    out.algebra = std::make_shared<BoundQuiverAlgebra>(f, q2, rels);
    out.new_vertex = v_new;
    out.new_arrows = std::move(new_arrows);
    out.added_relations = std::move(added);
    if (out.algebra->dim() != A->dim() + X.total_dim() + 1)
        throw Error("Internal", "one-point extension has wrong dimension");
    return out;
}

OnePointResult one_point_coextension(const AlgebraPtr& A, const Representation& X,
                                     const std::string& vertex_name,
                                     const std::vector<std::string>& arrow_names) {
    AlgebraPtr Aop = opposite_algebra(A);
    Representation DX = dual(X, Aop);
    OnePointResult r = one_point_extension(Aop, DX, vertex_name, arrow_names);
    OnePointResult out;
    out.algebra = std::make_shared<BoundQuiverAlgebra>(r.algebra->opposite());
    out.new_vertex = r.new_vertex;
    out.new_arrows = r.new_arrows;
    for (const auto& rel : r.added_relations) {
        PathElement e;
        for (const auto& term : rel.terms) e.terms.push_back({term.coef, reverse_path(term.path)});
        out.added_relations.push_back(std::move(e));
    }
    return out;
}

OnePointResult ad1(const AlgebraPtr& A, const Representation& X, int t,
                   const std::string& vertex_name) {
    if (!is_brick(X)) throw Error("NotBrick", "ad1 pivot must be a brick");
    if (t < 0) throw Error("InvalidInput", "negative line length");
    if (t == 0) return one_point_extension(A, X, vertex_name);

    const Field& f = A->field();
    const Quiver& q = A->quiver();
    std::vector<std::string> vnames;
    for (int v = 0; v < q.num_vertices(); ++v) vnames.push_back(q.vertex_name(v));
    for (int i = 1; i <= t; ++i) vnames.push_back(vertex_name + "h" + std::to_string(i));
    std::vector<Arrow> arrows;
    for (int a = 0; a < q.num_arrows(); ++a) arrows.push_back(q.arrow(a));
    const int h0 = q.num_vertices();
    for (int i = 0; i + 1 < t; ++i)
        arrows.push_back({vertex_name + "ha" + std::to_string(i + 1), h0 + i, h0 + i + 1});
    Quiver q2(vnames, arrows);
    auto P = std::make_shared<BoundQuiverAlgebra>(f, q2, A->relations());

    /* X extended by zero, plus the interval module of the line */
    std::vector<int> dims(q2.num_vertices(), 0);
    for (int v = 0; v < q.num_vertices(); ++v) dims[v] = X.dim(v);
    for (int i = 0; i < t; ++i) dims[h0 + i] = 1;
    std::vector<Matrix> maps;
    for (int a = 0; a < q2.num_arrows(); ++a) {
        Matrix m(f, dims[q2.arrow(a).to], dims[q2.arrow(a).from]);
        if (a < q.num_arrows())
            m = X.map(a);
        else
            m.at(0, 0) = Scalar::one(f);
        maps.push_back(std::move(m));
    }
    Representation XY(P, dims, maps);
    return one_point_extension(P, XY, vertex_name);
}

namespace {

/* the arm path rho_i: omega -> 0 */
Path arm_path(const CanonicalAlgebra& C, int i) {
    std::vector<int> seq;
    for (int k = C.spec.weights[i - 1]; k >= 1; --k) seq.push_back(C.arm_arrow(i, k));
    return make_path(C.A->quiver(), seq);
}

bool on_some_mouth(const CanonicalAlgebra& C, const Representation& E) {
    std::vector<TubeIndex> candidates = C.spec.params;
    bool all_ones = true;
    for (int v = 0; v < C.A->quiver().num_vertices(); ++v)
        if (E.dim(v) != 1) all_ones = false;
    if (all_ones) {
        Matrix m1 = E.evaluate(arm_path(C, 1));
        Matrix m2 = E.evaluate(arm_path(C, 2));
        if (!m2.at(0, 0).is_zero())
            candidates.push_back(TubeIndex::at(-(m1.at(0, 0) / m2.at(0, 0))));
    }
    for (const auto& t : candidates)
        for (const auto& M : mouth_modules(C, t))
            if (M.dims() == E.dims() && is_isomorphic(M, E)) return true;
    return false;
}

}  // namespace

BranchExtensionResult branch_extension(const BranchExtensionSpec& spec) {
    const CanonicalAlgebra& C = spec.base;
    const Field& f = C.A->field();
    const Quiver& qc = C.A->quiver();

    for (const auto& att : spec.attachments) {
        std::string why;
        if (!att.E.check_relations(&why) || !on_some_mouth(C, att.E))
            throw Error("MouthMismatch", "attachment module is not on a tube mouth");
    }

    /* per-attachment one-point step against the bare canonical algebra */
    std::vector<OnePointResult> steps;
    for (const auto& att : spec.attachments) {
        std::vector<std::string> names{att.connector_name};
        steps.push_back(spec.coextension
                            ? one_point_coextension(C.A, att.E, "@root", names)
                            : one_point_extension(C.A, att.E, "@root", names));
    }

    std::vector<std::string> vnames;
    for (int v = 0; v < qc.num_vertices(); ++v) vnames.push_back(qc.vertex_name(v));
    BranchExtensionResult out;
    for (const auto& att : spec.attachments) {
        std::vector<int> idx;
        for (int v = 0; v < att.branch.quiver.num_vertices(); ++v) {
            idx.push_back(static_cast<int>(vnames.size()));
            vnames.push_back(att.branch.quiver.vertex_name(v));
        }
        out.branch_vertex.push_back(std::move(idx));
    }

    std::vector<Arrow> arrows;
    for (int a = 0; a < qc.num_arrows(); ++a) arrows.push_back(qc.arrow(a));
    for (size_t i = 0; i < spec.attachments.size(); ++i) {
        const auto& att = spec.attachments[i];
        const auto& step = steps[i];
        const int root_big = out.branch_vertex[i][att.branch.root];
        std::vector<int> conn;
        for (size_t k = 0; k < step.new_arrows.size(); ++k) {
            Arrow a = step.algebra->quiver().arrow(step.new_arrows[k]);
            if (k > 0) a.name = att.connector_name + "_" + std::to_string(k + 1);
            if (a.from == step.new_vertex) a.from = root_big;
            if (a.to == step.new_vertex) a.to = root_big;
            conn.push_back(static_cast<int>(arrows.size()));
            arrows.push_back(a);
        }
        out.connectors.push_back(std::move(conn));
        for (int a = 0; a < att.branch.quiver.num_arrows(); ++a) {
            Arrow b = att.branch.quiver.arrow(a);
            b.from = out.branch_vertex[i][b.from];
            b.to = out.branch_vertex[i][b.to];
            arrows.push_back(b);
        }
    }
    Quiver q2(vnames, arrows);

    std::vector<PathElement> rels = C.A->relations();
    for (size_t i = 0; i < spec.attachments.size(); ++i) {
        const auto& att = spec.attachments[i];
        /* arrow offsets of this attachment inside the big quiver */
        const int n_base = qc.num_arrows();
        auto remap_arrow = [&](int a) {
            if (a < n_base) return a;
            return out.connectors[i][a - n_base];
        };
        for (const auto& rel : steps[i].added_relations) {
            PathElement e;
            for (const auto& term : rel.terms) {
                std::vector<int> seq;
                for (int a : term.path.arrows) seq.push_back(remap_arrow(a));
                e.terms.push_back({term.coef, make_path(q2, seq)});
            }
            rels.push_back(std::move(e));
        }
        const int arr_off = out.connectors[i].back() + 1;
        for (const auto& rel : att.branch.relations) {
            PathElement e;
            for (const auto& term : rel.terms) {
                std::vector<int> seq;
                for (int a : term.path.arrows) seq.push_back(arr_off + a);
                e.terms.push_back({term.coef, make_path(q2, seq)});
            }
            rels.push_back(std::move(e));
        }
    }

    out.algebra = std::make_shared<BoundQuiverAlgebra>(f, q2, rels);
    return out;
}

}  // namespace qk
