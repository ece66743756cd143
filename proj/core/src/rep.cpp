#include "quivkit/rep.hpp"

#include <random>
#include <sstream>

namespace qk {

Representation::Representation(AlgebraPtr A, std::vector<int> dims, std::vector<Matrix> maps)
    : A_(std::move(A)), dims_(std::move(dims)), maps_(std::move(maps)) {
    const Quiver& q = A_->quiver();
    if (static_cast<int>(dims_.size()) != q.num_vertices() ||
        static_cast<int>(maps_.size()) != q.num_arrows())
        throw Error("InvalidRepresentation", "dimension/map count mismatch");
    for (int a = 0; a < q.num_arrows(); ++a)
        if (maps_[a].rows() != dims_[q.arrow(a).to] || maps_[a].cols() != dims_[q.arrow(a).from])
            throw Error("InvalidRepresentation", "map shape mismatch at arrow " + q.arrow(a).name);
}

Representation Representation::zero(AlgebraPtr A) {
    const Quiver& q = A->quiver();
    std::vector<int> dims(q.num_vertices(), 0);
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) maps.emplace_back(A->field(), 0, 0);
    return Representation(std::move(A), std::move(dims), std::move(maps));
}

int Representation::total_dim() const {
    int t = 0;
    for (int d : dims_) t += d;
    return t;
}

Matrix Representation::evaluate(const Path& p) const {
    if (p.length() == 0) return Matrix::identity(field(), dims_[p.source]);
    Matrix m = maps_[p.arrows[0]];
    for (size_t i = 1; i < p.arrows.size(); ++i) m = maps_[p.arrows[i]] * m;
    return m;
}

Matrix Representation::evaluate_block_elt(const BoundQuiverAlgebra::Elt& x, int s, int t) const {
    Matrix m(field(), dims_[t], dims_[s]);
    for (int i = 0; i < A_->dim(); ++i) {
        if (x[i].is_zero()) continue;
        if (A_->basis_source(i) != s || A_->basis_target(i) != t)
            throw Error("InvalidElement", "element not supported on one block");
        m = m + evaluate(A_->basis_path(i)).scaled(x[i]);
    }
    return m;
}

bool Representation::check_relations(std::string* why) const {
    for (const auto& r : A_->relations()) {
        Matrix acc(field(), dims_[r.target()], dims_[r.source()]);
        for (const auto& t : r.terms) acc = acc + evaluate(t.path).scaled(t.coef);
        if (!acc.is_zero()) {
            if (why) *why = "relation fails";
            return false;
        }
    }
    return true;
}

std::string Representation::str() const {
    std::ostringstream os;
    os << "dims=(";
    for (size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
    os << ")";
    return os.str();
}

bool Hom::is_zero() const {
    for (const auto& m : f)
        if (!m.is_zero()) return false;
    return true;
}

Representation simple(const AlgebraPtr& A, int v) {
    const Quiver& q = A->quiver();
    std::vector<int> dims(q.num_vertices(), 0);
    dims[v] = 1;
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a)
        maps.emplace_back(A->field(), dims[q.arrow(a).to], dims[q.arrow(a).from]);
    return Representation(A, dims, maps);
}

Representation projective(const AlgebraPtr& A, int x) {
    const Quiver& q = A->quiver();
    const Field& f = A->field();
    std::vector<std::vector<int>> blocks(q.num_vertices());
    std::vector<int> dims(q.num_vertices());
    for (int y = 0; y < q.num_vertices(); ++y) {
        blocks[y] = A->block(x, y);
        dims[y] = static_cast<int>(blocks[y].size());
    }
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int u = q.arrow(a).from, w = q.arrow(a).to;
        Matrix m(f, dims[w], dims[u]);
        for (int j = 0; j < dims[u]; ++j) {
            Path p = concat(A->basis_path(blocks[u][j]), make_path(q, {a}));
            auto e = A->reduce_path(p);
            for (int i = 0; i < dims[w]; ++i) m.at(i, j) = e[blocks[w][i]];
        }
        maps.push_back(std::move(m));
    }
    return Representation(A, dims, maps);
}

Representation injective(const AlgebraPtr& A, int x) {
    const Quiver& q = A->quiver();
    const Field& f = A->field();
    std::vector<std::vector<int>> blocks(q.num_vertices());
    std::vector<int> dims(q.num_vertices());
    for (int y = 0; y < q.num_vertices(); ++y) {
        blocks[y] = A->block(y, x);  // paths y -> x
        dims[y] = static_cast<int>(blocks[y].size());
    }
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int u = q.arrow(a).from, w = q.arrow(a).to;
        /* dual of precomposition block(w,x) -> block(u,x), q |-> a*q */
        Matrix t(f, dims[u], dims[w]);
        for (int j = 0; j < dims[w]; ++j) {
            Path p = concat(make_path(q, {a}), A->basis_path(blocks[w][j]));
            auto e = A->reduce_path(p);
            for (int i = 0; i < dims[u]; ++i) t.at(i, j) = e[blocks[u][i]];
        }
        maps.push_back(t.transpose());
    }
    return Representation(A, dims, maps);
}

Representation direct_sum(const std::vector<Representation>& parts,
                          std::vector<Hom>* injections, std::vector<Hom>* projections) {
    if (parts.empty()) throw Error("InvalidArgument", "direct_sum of nothing");
    const AlgebraPtr& A = parts[0].algebra();
    const Quiver& q = A->quiver();
    const Field& f = A->field();
    std::vector<int> dims(q.num_vertices(), 0);
    for (const auto& p : parts)
        for (int v = 0; v < q.num_vertices(); ++v) dims[v] += p.dim(v);
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int u = q.arrow(a).from, w = q.arrow(a).to;
        Matrix m(f, dims[w], dims[u]);
        int ro = 0, co = 0;
        for (const auto& p : parts) {
            for (int i = 0; i < p.dim(w); ++i)
                for (int j = 0; j < p.dim(u); ++j) m.at(ro + i, co + j) = p.map(a).at(i, j);
            ro += p.dim(w);
            co += p.dim(u);
        }
        maps.push_back(std::move(m));
    }
    Representation sum(A, dims, maps);
    if (injections || projections) {
        std::vector<int> off(q.num_vertices(), 0);
        for (const auto& p : parts) {
            Hom inj, proj;
            for (int v = 0; v < q.num_vertices(); ++v) {
                Matrix in(f, dims[v], p.dim(v)), pr(f, p.dim(v), dims[v]);
                for (int i = 0; i < p.dim(v); ++i) {
                    in.at(off[v] + i, i) = Scalar::one(f);
                    pr.at(i, off[v] + i) = Scalar::one(f);
                }
                inj.f.push_back(in);
                proj.f.push_back(pr);
                off[v] += p.dim(v);
            }
            if (injections) injections->push_back(inj);
            if (projections) projections->push_back(proj);
        }
    }
    return sum;
}

std::vector<Hom> hom_basis(const Representation& M, const Representation& N) {
    const Quiver& q = M.algebra()->quiver();
    const Field& f = M.field();
    const int nv = q.num_vertices();
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + N.dim(v) * M.dim(v);
    const int unknowns = off[nv];

    int rows = 0;
    for (int a = 0; a < q.num_arrows(); ++a)
        rows += N.dim(q.arrow(a).to) * M.dim(q.arrow(a).from);
    Matrix sys(f, rows, unknowns);
    int ro = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int u = q.arrow(a).from, w = q.arrow(a).to;
        const Matrix& Ma = M.map(a);
        const Matrix& Na = N.map(a);
        for (int r = 0; r < N.dim(w); ++r)
            for (int c = 0; c < M.dim(u); ++c) {
                const int row = ro + r * M.dim(u) + c;
                for (int k = 0; k < M.dim(w); ++k)
                    sys.at(row, off[w] + r * M.dim(w) + k) += Ma.at(k, c);
                for (int k = 0; k < N.dim(u); ++k)
                    sys.at(row, off[u] + k * M.dim(u) + c) -= Na.at(r, k);
            }
        ro += N.dim(w) * M.dim(u);
    }
    Matrix ns = sys.nullspace();
    std::vector<Hom> basis;
    for (int col = 0; col < ns.cols(); ++col) {
        Hom h;
        for (int v = 0; v < nv; ++v) {
            Matrix m(f, N.dim(v), M.dim(v));
            for (int r = 0; r < N.dim(v); ++r)
                for (int c = 0; c < M.dim(v); ++c)
                    m.at(r, c) = ns.at(off[v] + r * M.dim(v) + c, col);
            h.f.push_back(std::move(m));
        }
        basis.push_back(std::move(h));
    }
    return basis;
}

int hom_dim(const Representation& M, const Representation& N) {
    return static_cast<int>(hom_basis(M, N).size());
}

Hom zero_hom(const Representation& M, const Representation& N) {
    Hom h;
    for (size_t v = 0; v < M.dims().size(); ++v)
        h.f.emplace_back(M.field(), N.dim(static_cast<int>(v)), M.dim(static_cast<int>(v)));
    return h;
}

Hom identity_hom(const Representation& M) {
    Hom h;
    for (size_t v = 0; v < M.dims().size(); ++v)
        h.f.push_back(Matrix::identity(M.field(), M.dim(static_cast<int>(v))));
    return h;
}

Hom compose(const Representation&, const Hom& f, const Representation&, const Hom& g,
            const Representation&) {
    Hom h;
    for (size_t v = 0; v < f.f.size(); ++v) h.f.push_back(g.f[v] * f.f[v]);
    return h;
}

Hom add_hom(const Hom& a, const Hom& b) {
    Hom h;
    for (size_t v = 0; v < a.f.size(); ++v) h.f.push_back(a.f[v] + b.f[v]);
    return h;
}

Hom scale_hom(const Scalar& c, const Hom& a) {
    Hom h;
    for (const auto& m : a.f) h.f.push_back(m.scaled(c));
    return h;
}

bool is_invertible(const Hom& f) {
    for (const auto& m : f.f) {
        if (m.rows() != m.cols()) return false;
        if (m.rows() > 0 && m.det().is_zero()) return false;
    }
    return true;
}

int SubSpaces::total_dim() const {
    int t = 0;
    for (const auto& m : cols) t += m.cols();
    return t;
}

SubSpaces zero_sub(const Representation& M) {
    SubSpaces s;
    for (size_t v = 0; v < M.dims().size(); ++v)
        s.cols.emplace_back(M.field(), M.dim(static_cast<int>(v)), 0);
    return s;
}

SubSpaces full_sub(const Representation& M) {
    SubSpaces s;
    for (size_t v = 0; v < M.dims().size(); ++v)
        s.cols.push_back(Matrix::identity(M.field(), M.dim(static_cast<int>(v))));
    return s;
}

SubSpaces kernel(const Representation& M, const Hom& f, const Representation&) {
    SubSpaces s;
    for (size_t v = 0; v < M.dims().size(); ++v) s.cols.push_back(f.f[v].nullspace());
    return s;
}

SubSpaces image(const Representation&, const Hom& f, const Representation&) {
    SubSpaces s;
    for (size_t v = 0; v < f.f.size(); ++v) s.cols.push_back(f.f[v].column_space());
    return s;
}

SubSpaces span_closure(const Representation& M, const std::vector<Matrix>& seeds) {
    const Quiver& q = M.algebra()->quiver();
    SubSpaces s;
    for (auto& m : seeds) s.cols.push_back(m.column_space());
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < q.num_arrows(); ++a) {
            const int u = q.arrow(a).from, w = q.arrow(a).to;
            Matrix img = M.map(a) * s.cols[u];
            Matrix joint = s.cols[w].hstack(img).column_space();
            if (joint.cols() > s.cols[w].cols()) {
                s.cols[w] = joint;
                changed = true;
            }
        }
    }
    return s;
}

SubSpaces radical_sub(const Representation& M) {
    const Quiver& q = M.algebra()->quiver();
    SubSpaces s;
    for (int v = 0; v < q.num_vertices(); ++v) {
        Matrix acc(M.field(), M.dim(v), 0);
        for (int a : q.arrows_to(v)) acc = acc.hstack(M.map(a));
        s.cols.push_back(acc.column_space());
    }
    return s;
}

SubSpaces socle_sub(const Representation& M) {
    const Quiver& q = M.algebra()->quiver();
    SubSpaces s;
    for (int v = 0; v < q.num_vertices(); ++v) {
        Matrix acc(M.field(), 0, M.dim(v));
        for (int a : q.arrows_from(v)) acc = acc.vstack(M.map(a));
        s.cols.push_back(acc.nullspace());
    }
    return s;
}

SubSpaces sum_sub(const Representation&, const SubSpaces& a, const SubSpaces& b) {
    SubSpaces s;
    for (size_t v = 0; v < a.cols.size(); ++v)
        s.cols.push_back(a.cols[v].hstack(b.cols[v]).column_space());
    return s;
}

SubSpaces intersect_sub(const Representation& M, const SubSpaces& a, const SubSpaces& b) {
    SubSpaces s;
    for (size_t v = 0; v < a.cols.size(); ++v) {
        const Matrix& A = a.cols[v];
        const Matrix& B = b.cols[v];
        Matrix neg = B.scaled(-Scalar::one(M.field()));
        Matrix ns = A.hstack(neg).nullspace();
        Matrix xs = ns.submatrix(0, 0, A.cols(), ns.cols());
        s.cols.push_back((A * xs).column_space());
    }
    return s;
}

bool sub_contains(const SubSpaces& a, const SubSpaces& b) {
    for (size_t v = 0; v < a.cols.size(); ++v)
        if (!a.cols[v].solve(b.cols[v]).has_value()) return false;
    return true;
}

Representation sub_rep(const Representation& M, const SubSpaces& sub, Hom* incl) {
    const Quiver& q = M.algebra()->quiver();
    std::vector<int> dims;
    for (const auto& m : sub.cols) dims.push_back(m.cols());
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int u = q.arrow(a).from, w = q.arrow(a).to;
        Matrix rhs = M.map(a) * sub.cols[u];
        auto x = sub.cols[w].solve(rhs);
        if (!x) throw Error("InvalidSubspace", "subspaces not arrow-stable");
        maps.push_back(*x);
    }
    if (incl) incl->f = sub.cols;
    return Representation(M.algebra(), dims, maps);
}

Representation quotient_rep(const Representation& M, const SubSpaces& sub, Hom* proj) {
    const Quiver& q = M.algebra()->quiver();
    const Field& f = M.field();
    std::vector<Matrix> projs, embeds;  // per vertex: q_v x n_v and n_v x q_v
    std::vector<int> dims;
    for (int v = 0; v < q.num_vertices(); ++v) {
        const Matrix& S = sub.cols[v];
        const int n = M.dim(v), k = S.cols();
        Matrix full = S.hstack(Matrix::identity(f, n)).column_space();
        if (full.cols() != n) throw Error("Internal", "complement construction failed");
        auto inv = full.inverse();
        dims.push_back(n - k);
        projs.push_back(inv->submatrix(k, 0, n - k, n));
        embeds.push_back(full.submatrix(0, k, n, n - k));
    }
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a) {
        const int u = q.arrow(a).from, w = q.arrow(a).to;
        maps.push_back(projs[w] * M.map(a) * embeds[u]);
    }
    if (proj) proj->f = projs;
    return Representation(M.algebra(), dims, maps);
}

Representation top(const Representation& M, Hom* proj) {
    return quotient_rep(M, radical_sub(M), proj);
}

std::vector<int> top_dims(const Representation& M) {
    SubSpaces r = radical_sub(M);
    std::vector<int> d;
    for (size_t v = 0; v < r.cols.size(); ++v)
        d.push_back(M.dim(static_cast<int>(v)) - r.cols[v].cols());
    return d;
}

std::vector<int> socle_dims(const Representation& M) {
    SubSpaces s = socle_sub(M);
    std::vector<int> d;
    for (const auto& m : s.cols) d.push_back(m.cols());
    return d;
}

Representation dual(const Representation& M, const AlgebraPtr& Aop) {
    const Quiver& q = M.algebra()->quiver();
    std::vector<Matrix> maps(q.num_arrows(), Matrix());
    for (int a = 0; a < q.num_arrows(); ++a) maps[a] = M.map(a).transpose();
    return Representation(Aop, M.dims(), maps);
}

Representation embed(const Representation& M, const AlgebraPtr& B,
                     const std::vector<int>& vertex_map, const std::vector<int>& arrow_map) {
    const Quiver& qb = B->quiver();
    std::vector<int> dims(qb.num_vertices(), 0);
    for (size_t v = 0; v < vertex_map.size(); ++v) dims[vertex_map[v]] = M.dim(static_cast<int>(v));
    std::vector<Matrix> maps;
    for (int b = 0; b < qb.num_arrows(); ++b)
        maps.emplace_back(B->field(), dims[qb.arrow(b).to], dims[qb.arrow(b).from]);
    for (size_t a = 0; a < arrow_map.size(); ++a)
        if (arrow_map[a] >= 0) maps[arrow_map[a]] = M.map(static_cast<int>(a));
    Representation R(B, dims, maps);
    if (!R.check_relations())
        throw Error("InvalidRepresentation", "embedded module violates target relations");
    return R;
}

Representation restrict_along(const Representation& M, const AlgebraPtr& B,
                              const std::vector<int>& vertex_map,
                              const std::vector<PathElement>& arrow_images) {
    const Quiver& qb = B->quiver();
    std::vector<int> dims(qb.num_vertices());
    for (int v = 0; v < qb.num_vertices(); ++v) dims[v] = M.dim(vertex_map[v]);
    std::vector<Matrix> maps;
    for (int b = 0; b < qb.num_arrows(); ++b) {
        const auto& img = arrow_images[b];
        Matrix m(B->field(), dims[qb.arrow(b).to], dims[qb.arrow(b).from]);
        for (const auto& t : img.terms) m = m + M.evaluate(t.path).scaled(t.coef);
        maps.push_back(std::move(m));
    }
    Representation R(B, dims, maps);
    if (!R.check_relations())
        throw Error("InvalidRepresentation", "restriction violates target relations");
    return R;
}

bool is_isomorphic(const Representation& M, const Representation& N, unsigned seed) {
    if (M.dims() != N.dims()) return false;
    if (M.total_dim() == 0) return true;
    auto basis = hom_basis(M, N);
    if (basis.empty()) return false;
    for (const auto& h : basis)
        if (is_invertible(h)) return true;
    const Field& f = M.field();
    std::mt19937_64 rng(seed);
    const long range = f.is_rational() ? 19 : std::min<long>(f.p, 97);
    for (int attempt = 0; attempt < 120; ++attempt) {
        Hom h = zero_hom(M, N);
        for (const auto& b : basis) {
            long c = static_cast<long>(rng() % range) - (f.is_rational() ? range / 2 : 0);
            if (c == 0) c = 1;
            h = add_hom(h, scale_hom(Scalar(f, c), b));
        }
        if (is_invertible(h)) return true;
    }
    return false;
}

bool is_brick(const Representation& M) {
    return M.total_dim() > 0 && hom_dim(M, M) == 1;
}

}  // namespace qk
