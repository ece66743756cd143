#include "quivkit/ar.hpp"

#include <map>

#include "quivkit/structure_algebra.hpp"

namespace qk {

namespace {

/* Columns of the identity completing span(sub) to the full space. */
std::vector<int> complement_columns(const Field& f, const Matrix& sub, int n) {
    Matrix j = sub.hstack(Matrix::identity(f, n));
    auto pivots = j.rref();
    std::vector<int> out;
    for (int p : pivots)
        if (p >= sub.cols()) out.push_back(p - sub.cols());
    return out;
}

/* Hom P(x) -> N sending the canonical generator to g (a column in N_x). */
Hom projective_gen_hom(const AlgebraPtr& A, int x, const Representation& N, const Matrix& g) {
    const Quiver& q = A->quiver();
    Hom h;
    for (int w = 0; w < q.num_vertices(); ++w) {
        auto blk = A->block(x, w);
        Matrix m(A->field(), N.dim(w), static_cast<int>(blk.size()));
        for (size_t j = 0; j < blk.size(); ++j) {
            Matrix col = N.evaluate(A->basis_path(blk[j])) * g;
            for (int i = 0; i < N.dim(w); ++i) m.at(i, j) = col.at(i, 0);
        }
        h.f.push_back(std::move(m));
    }
    return h;
}

Matrix flatten_hom(const Field& f, const Hom& h) {
    int total = 0;
    for (const auto& m : h.f) total += m.rows() * m.cols();
    Matrix v(f, total, 1);
    int off = 0;
    for (const auto& m : h.f)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) v.at(off++, 0) = m.at(i, j);
    return v;
}

Matrix flatten_homs(const Field& f, const std::vector<Hom>& hs) {
    if (hs.empty()) return Matrix(f, 0, 0);
    Matrix first = flatten_hom(f, hs[0]);
    Matrix out(f, first.rows(), static_cast<int>(hs.size()));
    for (size_t c = 0; c < hs.size(); ++c) {
        Matrix v = flatten_hom(f, hs[c]);
        for (int r = 0; r < v.rows(); ++r) out.at(r, c) = v.at(r, 0);
    }
    return out;
}

/* Hom between direct sums of projectives, given by entries
   u[i][j] in block(ys[i], xs[j]) acting by left multiplication. */
Hom projective_matrix_hom(const AlgebraPtr& A, const std::vector<int>& xs,
                          const std::vector<int>& ys,
                          const std::vector<std::vector<BoundQuiverAlgebra::Elt>>& u,
                          const Representation& Pdom, const Representation& Pcod) {
    const Quiver& q = A->quiver();
    Hom h;
    for (int w = 0; w < q.num_vertices(); ++w) {
        Matrix m(A->field(), Pcod.dim(w), Pdom.dim(w));
        int coff = 0;
        for (size_t j = 0; j < xs.size(); ++j) {
            auto dblk = A->block(xs[j], w);
            for (size_t c = 0; c < dblk.size(); ++c) {
                int roff = 0;
                for (size_t i = 0; i < ys.size(); ++i) {
                    auto cblk = A->block(ys[i], w);
                    if (!A->is_zero_elt(u[i][j])) {
                        auto prod = A->mul(u[i][j], A->basis_elt(dblk[c]));
                        for (size_t r = 0; r < cblk.size(); ++r)
                            m.at(roff + static_cast<int>(r), coff + static_cast<int>(c)) =
                                prod[cblk[r]];
                    }
                    roff += static_cast<int>(cblk.size());
                }
            }
            coff += static_cast<int>(dblk.size());
        }
        h.f.push_back(std::move(m));
    }
    return h;
}

/* Entries of a hom between direct sums of projectives, read off from the
   images of the canonical generators. */
std::vector<std::vector<BoundQuiverAlgebra::Elt>> projective_hom_entries(
    const AlgebraPtr& A, const std::vector<int>& xs, const std::vector<int>& ys, const Hom& d) {
    std::vector<std::vector<BoundQuiverAlgebra::Elt>> u(
        ys.size(), std::vector<BoundQuiverAlgebra::Elt>(xs.size(), A->zero()));
    /* generator of summand j sits at vertex xs[j], at the offset of that
       summand plus the position of the trivial path in block(xs[j], xs[j]) */
    for (size_t j = 0; j < xs.size(); ++j) {
        int x = xs[j];
        int off = 0;
        for (size_t k = 0; k < j; ++k) off += A->block_dim(xs[k], x);
        auto self = A->block(x, x);
        int pos = -1;
        for (size_t k = 0; k < self.size(); ++k)
            if (self[k] == A->idempotent_index(x)) pos = static_cast<int>(k);
        const Matrix& m = d.f[x];
        int roff = 0;
        for (size_t i = 0; i < ys.size(); ++i) {
            auto blk = A->block(ys[i], x);
            for (size_t r = 0; r < blk.size(); ++r)
                u[i][j][blk[r]] = m.at(roff + static_cast<int>(r), off + pos);
            roff += static_cast<int>(blk.size());
        }
    }
    return u;
}

/* Reinterpret an element of block(s, t) over the opposite algebra, where it
   lives in block(t, s): each basis path reverses. */
BoundQuiverAlgebra::Elt reverse_elt(const AlgebraPtr& A, const AlgebraPtr& Aop,
                                    const BoundQuiverAlgebra::Elt& x) {
    PathElement pe;
    for (int i = 0; i < A->dim(); ++i) {
        if (x[i].is_zero()) continue;
        const Path& p = A->basis_path(i);
        std::vector<int> rev(p.arrows.rbegin(), p.arrows.rend());
        Path q = rev.empty() ? trivial_path(p.source) : make_path(Aop->quiver(), rev);
        pe.terms.push_back({x[i], q});
    }
    if (pe.terms.empty()) return Aop->zero();
    return Aop->reduce(pe);
}

/* Transpose of M (over B) as a module over the given opposite algebra. */
Representation transpose_rep(const Representation& M, const AlgebraPtr& Bop) {
    const AlgebraPtr& B = M.algebra();
    if (M.total_dim() == 0) return Representation::zero(Bop);
    auto pres = minimal_projective_presentation(M);
    if (pres.P1.total_dim() == 0) return Representation::zero(Bop);  // M projective
    auto u = projective_hom_entries(B, pres.p1_vertices, pres.p0_vertices, pres.d);
    /* transposed entries: slot (j, i) is u[i][j] reversed */
    std::vector<std::vector<BoundQuiverAlgebra::Elt>> ut(
        pres.p1_vertices.size(),
        std::vector<BoundQuiverAlgebra::Elt>(pres.p0_vertices.size(), Bop->zero()));
    for (size_t i = 0; i < pres.p0_vertices.size(); ++i)
        for (size_t j = 0; j < pres.p1_vertices.size(); ++j)
            ut[j][i] = reverse_elt(B, Bop, u[i][j]);
    std::vector<Representation> dom_parts, cod_parts;
    for (int y : pres.p0_vertices) dom_parts.push_back(projective(Bop, y));
    for (int x : pres.p1_vertices) cod_parts.push_back(projective(Bop, x));
    Representation Pdom = direct_sum(dom_parts);
    Representation Pcod = direct_sum(cod_parts);
    Hom dt = projective_matrix_hom(Bop, pres.p0_vertices, pres.p1_vertices, ut, Pdom, Pcod);
    SubSpaces im = image(Pdom, dt, Pcod);
    return quotient_rep(Pcod, im);
}

/* right_v * proj_v = g_v for a surjection proj (factor a map through a
   quotient it vanishes on). */
Hom factor_through_surjection(const Field& f, const Hom& proj, const Hom& g) {
    Hom out;
    for (size_t v = 0; v < proj.f.size(); ++v) {
        auto sol = proj.f[v].transpose().solve(g.f[v].transpose());
        if (!sol) throw Error("Internal", "map does not factor through the quotient");
        out.f.push_back(sol->transpose());
    }
    return out;
}

}  // namespace

AlgebraPtr opposite_algebra(const AlgebraPtr& A) {
    static std::map<const BoundQuiverAlgebra*, std::weak_ptr<const BoundQuiverAlgebra>> cache;
    auto it = cache.find(A.get());
    if (it != cache.end())
        if (auto sp = it->second.lock()) return sp;
    auto op = std::make_shared<const BoundQuiverAlgebra>(A->opposite());
    cache[A.get()] = op;
    return op;
}

Representation projective_cover(const Representation& M, Hom* cover, std::vector<int>* verts) {
    const AlgebraPtr& A = M.algebra();
    const Field& f = M.field();
    const Quiver& q = A->quiver();
    if (M.total_dim() == 0) {
        Representation Z = Representation::zero(A);
        if (cover) *cover = zero_hom(Z, M);
        if (verts) verts->clear();
        return Z;
    }
    SubSpaces rad = radical_sub(M);
    std::vector<Representation> parts;
    std::vector<Hom> part_homs;
    std::vector<int> vs;
    for (int v = 0; v < q.num_vertices(); ++v) {
        for (int c : complement_columns(f, rad.cols[v], M.dim(v))) {
            Matrix g(f, M.dim(v), 1);
            g.at(c, 0) = Scalar(f, 1);
            parts.push_back(projective(A, v));
            part_homs.push_back(projective_gen_hom(A, v, M, g));
            vs.push_back(v);
        }
    }
    Representation P = direct_sum(parts);
    Hom h;
    for (int w = 0; w < q.num_vertices(); ++w) {
        Matrix m(f, M.dim(w), 0);
        for (const auto& ph : part_homs) m = m.hstack(ph.f[w]);
        h.f.push_back(std::move(m));
    }
    if (image(P, h, M).total_dim() != M.total_dim())
        throw Error("Internal", "projective cover is not surjective");
    if (cover) *cover = std::move(h);
    if (verts) *verts = std::move(vs);
    return P;
}

ProjectivePresentation minimal_projective_presentation(const Representation& M) {
    ProjectivePresentation pres;
    pres.P0 = projective_cover(M, &pres.cover, &pres.p0_vertices);
    SubSpaces K = kernel(pres.P0, pres.cover, M);
    pres.omega = sub_rep(pres.P0, K, &pres.omega_incl);
    pres.P1 = projective_cover(pres.omega, &pres.p1_cover, &pres.p1_vertices);
    pres.d = compose(pres.P1, pres.p1_cover, pres.omega, pres.omega_incl, pres.P0);
    return pres;
}

Representation injective_envelope(const Representation& M, Hom* env) {
    const AlgebraPtr& A = M.algebra();
    AlgebraPtr Aop = opposite_algebra(A);
    Representation DM = dual(M, Aop);
    Hom cov;
    Representation P = projective_cover(DM, &cov);
    Representation I = dual(P, A);
    if (env) {
        /* the dual of the cover: transposed matrices, reversed direction */
        Hom e;
        for (const auto& m : cov.f) e.f.push_back(m.transpose());
        *env = std::move(e);
    }
    return I;
}

Representation tau(const Representation& M) {
    const AlgebraPtr& A = M.algebra();
    AlgebraPtr Aop = opposite_algebra(A);
    Representation tr = transpose_rep(M, Aop);
    return dual(tr, A);
}

Representation tau_minus(const Representation& M) {
    const AlgebraPtr& A = M.algebra();
    AlgebraPtr Aop = opposite_algebra(A);
    Representation DM = dual(M, Aop);
    return transpose_rep(DM, A);
}

int ext1_dim(const Representation& X, const Representation& Y) {
    if (X.total_dim() == 0 || Y.total_dim() == 0) return 0;
    auto pres = minimal_projective_presentation(X);
    if (pres.omega.total_dim() == 0) return 0;
    auto homs = hom_basis(pres.omega, Y);
    if (homs.empty()) return 0;
    auto lifted = hom_basis(pres.P0, Y);
    std::vector<Hom> restricted;
    for (const auto& h : lifted)
        restricted.push_back(compose(pres.omega, pres.omega_incl, pres.P0, h, Y));
    Matrix B = flatten_homs(X.field(), restricted);
    return static_cast<int>(homs.size()) - B.rank();
}

int proj_stable_hom_dim(const Representation& M, const Representation& N) {
    int total = hom_dim(M, N);
    if (total == 0) return 0;
    Hom pi;
    Representation P = projective_cover(N, &pi);
    std::vector<Hom> through;
    for (const auto& h : hom_basis(M, P)) through.push_back(compose(M, h, P, pi, N));
    return total - flatten_homs(M.field(), through).rank();
}

int inj_stable_hom_dim(const Representation& M, const Representation& N) {
    AlgebraPtr Aop = opposite_algebra(M.algebra());
    return proj_stable_hom_dim(dual(N, Aop), dual(M, Aop));
}

std::pair<int, int> stable_hom_dims(const Representation& M, const Representation& N) {
    return {proj_stable_hom_dim(M, N), inj_stable_hom_dim(M, N)};
}

AlmostSplitSequence almost_split_sequence(const Representation& X) {
    const AlgebraPtr& A = X.algebra();
    const Field& f = X.field();
    if (X.total_dim() == 0) throw Error("InvalidInput", "almost split sequence of zero module");

    auto endo = hom_basis(X, X);
    std::vector<Hom> rad_homs;
    {
        std::vector<Matrix> mats;
        int nt = X.total_dim();
        for (const auto& h : endo) {
            Matrix big(f, nt, nt);
            int off = 0;
            for (const auto& m : h.f) {
                for (int i = 0; i < m.rows(); ++i)
                    for (int j = 0; j < m.cols(); ++j) big.at(off + i, off + j) = m.at(i, j);
                off += m.rows();
            }
            mats.push_back(std::move(big));
        }
        StructureConstantAlgebra E =
            StructureConstantAlgebra::from_matrices(f, mats, Matrix::identity(f, nt));
        auto rad = E.radical_basis();
        if (E.dim() - static_cast<int>(rad.size()) != 1)
            throw Error("NotIndecomposable", "module has a non-local endomorphism ring");
        for (const auto& r : rad) {
            Hom h = zero_hom(X, X);
            for (size_t k = 0; k < endo.size(); ++k)
                if (!r[k].is_zero()) h = add_hom(h, scale_hom(r[k], endo[k]));
            rad_homs.push_back(std::move(h));
        }
    }

    auto pres = minimal_projective_presentation(X);
    if (pres.omega.total_dim() == 0)
        throw Error("InvalidInput", "almost split sequence ending at a projective module");
    Representation tX = tau(X);

    auto homs = hom_basis(pres.omega, tX);
    const int n = static_cast<int>(homs.size());
    std::vector<Hom> boundaries;
    for (const auto& h : hom_basis(pres.P0, tX))
        boundaries.push_back(compose(pres.omega, pres.omega_incl, pres.P0, h, tX));
    Matrix B = flatten_homs(f, boundaries);

    /* right End(X)-action on Hom(omega, tX): lift an endomorphism along the
       cover, restrict to the syzygy, precompose */
    auto p0_endos = hom_basis(pres.P0, pres.P0);
    std::vector<Hom> pi_after;
    for (const auto& g : p0_endos) pi_after.push_back(compose(pres.P0, g, pres.P0, pres.cover, X));
    Matrix lift_sys = flatten_homs(f, pi_after);
    auto omega_action = [&](const Hom& phi) -> Hom {
        Hom target = compose(pres.P0, pres.cover, X, phi, X);
        auto c = lift_sys.solve(flatten_hom(f, target));
        if (!c) throw Error("Internal", "endomorphism does not lift along the cover");
        Hom lifted = zero_hom(pres.P0, pres.P0);
        for (int k = 0; k < static_cast<int>(p0_endos.size()); ++k)
            if (!c->at(k, 0).is_zero())
                lifted = add_hom(lifted, scale_hom(c->at(k, 0), p0_endos[k]));
        Hom w;  // incl * w = lifted * incl
        for (size_t v = 0; v < lifted.f.size(); ++v) {
            auto sol = pres.omega_incl.f[v].solve(lifted.f[v] * pres.omega_incl.f[v]);
            if (!sol) throw Error("Internal", "lift does not preserve the syzygy");
            w.f.push_back(*sol);
        }
        return w;
    };

    /* extension class in the socle: xi with xi . rad = 0 in Ext^1(X, tX),
       xi itself nonzero there */
    const int hlen = flatten_hom(f, homs.empty() ? zero_hom(pres.omega, tX) : homs[0]).rows();
    const int bcols = B.cols();
    const int r = static_cast<int>(rad_homs.size());
    Matrix sys(f, hlen * std::max(r, 1), n + bcols * r);
    if (r > 0) {
        std::vector<Hom> ws;
        for (const auto& rh : rad_homs) ws.push_back(omega_action(rh));
        for (int rho = 0; rho < r; ++rho) {
            for (int t = 0; t < n; ++t) {
                Hom acted = compose(pres.omega, ws[rho], pres.omega, homs[t], tX);
                Matrix v = flatten_hom(f, acted);
                for (int i = 0; i < hlen; ++i) sys.at(rho * hlen + i, t) = v.at(i, 0);
            }
            for (int b = 0; b < bcols; ++b)
                for (int i = 0; i < hlen; ++i)
                    sys.at(rho * hlen + i, n + rho * bcols + b) = -B.at(i, b);
        }
    }
    Matrix null = r > 0 ? sys.nullspace() : Matrix::identity(f, n);
    Hom xi = zero_hom(pres.omega, tX);
    bool found = false;
    for (int c = 0; c < null.cols() && !found; ++c) {
        Hom cand = zero_hom(pres.omega, tX);
        for (int t = 0; t < n; ++t)
            if (!null.at(t, c).is_zero()) cand = add_hom(cand, scale_hom(null.at(t, c), homs[t]));
        Matrix v = flatten_hom(f, cand);
        if (B.cols() == 0 ? !cand.is_zero() : !in_span(B, v)) {
            xi = std::move(cand);
            found = true;
        }
    }
    if (!found) throw Error("Internal", "no nonzero socle class in Ext^1(X, tau X)");

    /* pushout of (incl, -xi) along omega */
    std::vector<Hom> inj;
    Representation amb = direct_sum({tX, pres.P0}, &inj);
    Hom g = add_hom(compose(pres.omega, scale_hom(Scalar(f, -1), xi), tX, inj[0], amb),
                    compose(pres.omega, pres.omega_incl, pres.P0, inj[1], amb));
    SubSpaces graph = image(pres.omega, g, amb);
    Hom proj;
    Representation E = quotient_rep(amb, graph, &proj);

    AlmostSplitSequence seq;
    seq.tauX = tX;
    seq.X = X;
    seq.left = compose(tX, inj[0], amb, proj, E);
    Hom q;  // (0, cover): amb -> X
    for (size_t v = 0; v < proj.f.size(); ++v) {
        Matrix m(f, X.dim(static_cast<int>(v)), tX.dim(static_cast<int>(v)));
        q.f.push_back(m.hstack(pres.cover.f[v]));
    }
    seq.right = factor_through_surjection(f, proj, q);
    seq.middle = std::move(E);

    /* exactness */
    if (seq.middle.total_dim() != tX.total_dim() + X.total_dim())
        throw Error("Internal", "middle term has wrong dimension");
    if (image(tX, seq.left, seq.middle).total_dim() != tX.total_dim())
        throw Error("Internal", "left map is not injective");
    if (image(seq.middle, seq.right, X).total_dim() != X.total_dim())
        throw Error("Internal", "right map is not surjective");
    Hom comp = compose(tX, seq.left, seq.middle, seq.right, X);
    if (!comp.is_zero()) throw Error("Internal", "sequence is not a complex");

    /* non-splitness: no section of the right map */
    auto sections = hom_basis(X, seq.middle);
    std::vector<Hom> down;
    for (const auto& s : sections) down.push_back(compose(X, s, seq.middle, seq.right, X));
    Matrix S = flatten_homs(f, down);
    if (S.cols() > 0 && S.solve(flatten_hom(f, identity_hom(X))))
        throw Error("Internal", "constructed sequence splits");

    return seq;
}

TubeFragment knit_tube(const std::vector<Representation>& mouth, int depth) {
    if (mouth.empty() || depth < 1) throw Error("InvalidInput", "empty mouth or depth < 1");
    const int r = static_cast<int>(mouth.size());
    /* tau must permute the mouth in a single cycle */
    std::vector<int> prev(r, -1), nxt(r, -1);  // tau(mouth[k]) = mouth[prev[k]]
    for (int k = 0; k < r; ++k) {
        Representation t = tau(mouth[k]);
        for (int j = 0; j < r; ++j)
            if (t.dims() == mouth[j].dims() && is_isomorphic(t, mouth[j])) {
                prev[k] = j;
                break;
            }
        if (prev[k] < 0) throw Error("MouthNotPeriodic", "tau leaves the given mouth");
        if (nxt[prev[k]] >= 0) throw Error("MouthNotPeriodic", "tau is not injective on the mouth");
        nxt[prev[k]] = k;
    }
    std::vector<int> order{0};
    while (static_cast<int>(order.size()) < r) {
        int n = nxt[order.back()];
        if (n == 0) throw Error("MouthNotPeriodic", "mouth splits into several tau-cycles");
        order.push_back(n);
    }
    if (nxt[order.back()] != 0)
        throw Error("MouthNotPeriodic", "mouth splits into several tau-cycles");

    TubeFragment frag;
    frag.rank = r;
    frag.layers.emplace_back();
    for (int i = 0; i < r; ++i) {
        TubeVertex v;
        v.M = mouth[order[i]];
        v.is_simple = v.M.total_dim() == 1;
        v.projective_injective =
            is_projective_rep(v.M) && is_injective_rep(v.M, nullptr);
        frag.layers[0].push_back(std::move(v));
    }

    for (int l = 1; l < depth; ++l) {
        std::vector<TubeVertex> next(r);
        for (int k = 0; k < r; ++k) {
            const Representation& X = frag.layers[l - 1][k].M;
            if (is_projective_rep(X))
                throw Error("ProjectiveInput", "cannot knit past a projective ray vertex");
            auto seq = almost_split_sequence(X);
            auto parts = decompose(seq.middle);
            /* the known summand is the ray-k vertex one layer down; the new
               vertex continues ray k-1; spare projective-injective summands
               are recorded separately */
            const int down = (l >= 2) ? 1 : 0;
            if (down) {
                const Representation& known = frag.layers[l - 2][k].M;
                for (size_t i = 0; i < parts.size(); ++i)
                    if (parts[i].dims() == known.dims() && is_isomorphic(parts[i], known)) {
                        parts.erase(parts.begin() + static_cast<long>(i));
                        break;
                    }
            }
            if (parts.empty()) throw Error("Internal", "middle term lost all summands");
            /* nonstable vertices of a smooth quasi-tube are exactly the
               projective-injective ones: those never continue a ray */
            size_t big = parts.size();
            for (size_t i = 0; i < parts.size(); ++i) {
                if (is_projective_rep(parts[i]) && is_injective_rep(parts[i], nullptr)) continue;
                if (big == parts.size() || parts[i].total_dim() > parts[big].total_dim()) big = i;
            }
            if (big == parts.size())
                throw Error("ProjectiveInput", "every middle summand is projective-injective");
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i == big) continue;
                TubeVertex extra;
                extra.M = parts[i];
                extra.is_simple = extra.M.total_dim() == 1;
                extra.projective_injective =
                    is_projective_rep(extra.M) && is_injective_rep(extra.M, nullptr);
                frag.inserted.push_back(std::move(extra));
            }
            TubeVertex v;
            v.M = parts[big];
            v.is_simple = v.M.total_dim() == 1;
            v.projective_injective = is_projective_rep(v.M) && is_injective_rep(v.M, nullptr);
            next[(k + r - 1) % r] = std::move(v);
        }
        frag.layers.push_back(std::move(next));
    }
    auto count = [&](const TubeVertex& v) {
        if (v.is_simple) ++frag.simple_count;
        if (v.projective_injective) ++frag.proj_count;
    };
    for (const auto& layer : frag.layers)
        for (const auto& v : layer) count(v);
    for (const auto& v : frag.inserted) count(v);
    return frag;
}

std::string tube_dot(const TubeFragment& t) {
    std::string out = "digraph tube {\nrankdir=BT;\n";
    auto label = [](const Representation& M) {
        std::string s;
        for (size_t v = 0; v < M.dims().size(); ++v) {
            if (v) s += " ";
            s += std::to_string(M.dims()[v]);
        }
        return s;
    };
    for (size_t l = 0; l < t.layers.size(); ++l)
        for (size_t k = 0; k < t.layers[l].size(); ++k) {
            const TubeVertex& v = t.layers[l][k];
            out += "n" + std::to_string(l) + "_" + std::to_string(k) + " [label=\"" + label(v.M) +
                   "\", shape=box" + (v.projective_injective ? ", peripheries=2" : "") + "];\n";
        }
    for (size_t i = 0; i < t.inserted.size(); ++i)
        out += "ins" + std::to_string(i) + " [label=\"" + label(t.inserted[i].M) +
               "\", shape=box, peripheries=2];\n";
    const int r = t.rank;
    for (size_t l = 0; l + 1 < t.layers.size(); ++l)
        for (int k = 0; k < r; ++k) {
            /* irreducible maps along and across rays */
            out += "n" + std::to_string(l) + "_" + std::to_string(k) + " -> n" +
                   std::to_string(l + 1) + "_" + std::to_string(k) + ";\n";
            out += "n" + std::to_string(l + 1) + "_" + std::to_string(k) + " -> n" +
                   std::to_string(l) + "_" + std::to_string((k + 1) % r) + ";\n";
        }
    for (size_t l = 0; l < t.layers.size(); ++l)
        for (int k = 0; k < r; ++k)
            out += "n" + std::to_string(l) + "_" + std::to_string(k) + " -> n" + std::to_string(l) +
                   "_" + std::to_string((k + r - 1) % r) + " [style=dashed];\n";
    out += "}\n";
    return out;
}

std::vector<Representation> tau_orbit(const Representation& M, int max_steps) {
    std::vector<Representation> orbit{M};
    Representation cur = M;
    for (int i = 0; i < max_steps; ++i) {
        cur = tau(cur);
        if (cur.total_dim() == 0) break;
        if (cur.dims() == M.dims() && is_isomorphic(cur, M)) break;
        orbit.push_back(cur);
    }
    return orbit;
}

}  // namespace qk
