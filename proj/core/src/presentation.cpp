#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "quivkit/ar.hpp"
#include "quivkit/selfinjective.hpp"

namespace qk {

namespace {

using Vec = StructureConstantAlgebra::Vec;
using Elt = BoundQuiverAlgebra::Elt;

Matrix col_of(const Field& f, const Vec& v) {
    Matrix c(f, static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) c.at(static_cast<int>(i), 0) = v[i];
    return c;
}

Vec vec_of(const Matrix& c) {
    Vec v;
    for (int i = 0; i < c.rows(); ++i) v.push_back(c.at(i, 0));
    return v;
}

/* A bound quiver algebra as a structure-constant algebra (same basis order),
   with its vertex idempotents. */
StructureConstantAlgebra as_sca(const BoundQuiverAlgebra& A, std::vector<Vec>* idems) {
    int n = A.dim();
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = A.basis_str(i);
    std::vector<std::vector<Vec>> mult(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mult[i][j] = A.mul_basis(i, j);
    if (idems) {
        idems->clear();
        for (int v = 0; v < A.quiver().num_vertices(); ++v) idems->push_back(A.idempotent(v));
    }
    return StructureConstantAlgebra(A.field(), std::move(names), std::move(mult), A.unit());
}

/* e_x . U . e_y as a column basis. */
Matrix slice(const StructureConstantAlgebra& A, const Vec& ex, const Vec& ey, const Matrix& U) {
    Matrix P = A.left_mult(ex) * A.right_mult(ey);
    return (P * U).column_space();
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

Presentation gabriel_presentation(const StructureConstantAlgebra& A, const std::vector<Vec>& idems,
                                  const std::vector<std::string>& names) {
    const Field& f = A.field();
    int n = A.dim();
    int nv = static_cast<int>(idems.size());
    Matrix R = span_of_vecs(f, n, A.radical_basis());
    Matrix R2 = product_span(A, R, R);

    /* arrows: a complement of e_x R^2 e_y inside e_x R e_y, per vertex pair */
    std::vector<std::string> vnames = names;
    std::vector<Arrow> arrows;
    std::vector<Vec> lifts;
    std::vector<std::pair<int, int>> arrow_frame;
    std::set<std::string> used(names.begin(), names.end());
    for (int x = 0; x < nv; ++x) {
        for (int y = 0; y < nv; ++y) {
            Matrix big = slice(A, idems[x], idems[y], R);
            Matrix small = slice(A, idems[x], idems[y], R2);
            Matrix acc = small;
            for (int c = 0; c < big.cols(); ++c) {
                Matrix col = big.submatrix(0, c, n, 1);
                if (in_span(acc, col)) continue;
                acc = acc.hstack(col);
                /* name after the unique supporting basis element, if any */
                std::string nm;
                Vec v = vec_of(col);
                int supp = -1, cnt = 0;
                for (int i = 0; i < n; ++i)
                    if (!v[i].is_zero()) {
                        supp = i;
                        ++cnt;
                    }
                if (cnt == 1) nm = sanitize(A.basis_name(supp));
                if (nm.empty() || used.count(nm)) nm = "a" + std::to_string(arrows.size());
                used.insert(nm);
                arrows.push_back(Arrow{nm, x, y});
                lifts.push_back(v);
                arrow_frame.push_back({x, y});
            }
        }
    }

    Quiver q(vnames, arrows);

    /* path-coset staircase: extend basis paths one arrow at a time; a
       dependent extension yields a defining relation */
    struct BPath {
        std::vector<int> arrows;
        int src, tgt;
        Vec val;
    };
    std::vector<BPath> basis_paths;
    /* per frame: evaluation columns of the basis paths with that frame */
    std::map<std::pair<int, int>, Matrix> frame_eval;
    std::map<std::pair<int, int>, std::vector<int>> frame_members;  // indices into basis_paths

    std::vector<PathElement> relations;
    size_t head = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
        basis_paths.push_back(BPath{{a}, arrows[a].from, arrows[a].to, lifts[a]});
        auto key = arrow_frame[a];
        auto it = frame_eval.find(key);
        Matrix col = col_of(f, lifts[a]);
        if (it == frame_eval.end()) frame_eval.emplace(key, col);
        else it->second = it->second.hstack(col);
        frame_members[key].push_back(static_cast<int>(basis_paths.size()) - 1);
    }
    while (head < basis_paths.size()) {
        BPath p = basis_paths[head++];
        for (int a : q.arrows_from(p.tgt)) {
            Vec val = A.mul(p.val, lifts[a]);
            std::vector<int> word = p.arrows;
            word.push_back(a);
            auto key = std::make_pair(p.src, arrows[a].to);
            Matrix col = col_of(f, val);
            auto it = frame_eval.find(key);
            std::optional<Matrix> sol =
                (it == frame_eval.end()) ? std::nullopt : it->second.solve(col);
            if (!sol) {
                if (A.is_zero_vec(val)) {
                    relations.push_back(
                        make_relation(q, {PathTerm{Scalar::one(f), make_path(q, word)}}));
                    continue;
                }
                basis_paths.push_back(BPath{word, key.first, key.second, val});
                if (it == frame_eval.end()) frame_eval.emplace(key, col);
                else it->second = it->second.hstack(col);
                frame_members[key].push_back(static_cast<int>(basis_paths.size()) - 1);
                continue;
            }
            std::vector<PathTerm> terms{PathTerm{Scalar::one(f), make_path(q, word)}};
            const std::vector<int>& mem = frame_members[key];
            for (int c = 0; c < sol->rows(); ++c) {
                if (sol->at(c, 0).is_zero()) continue;
                const BPath& b = basis_paths[mem[c]];
                if (static_cast<int>(b.arrows.size()) < 2)
                    throw Error("Internal", "presentation relation involves an arrow");
                terms.push_back(PathTerm{-sol->at(c, 0), make_path(q, b.arrows)});
            }
            relations.push_back(make_relation(q, std::move(terms)));
        }
    }

    Presentation P;
    P.algebra = std::make_shared<BoundQuiverAlgebra>(f, q, relations);
    if (P.algebra->dim() != A.dim())
        throw Error("Internal", "presentation dimension mismatch: " +
                                    std::to_string(P.algebra->dim()) + " vs " +
                                    std::to_string(A.dim()));
    P.vertex_idem = idems;
    P.arrow_lift = lifts;
    return P;
}

Presentation gabriel_presentation(const OrbitAlgebra& O) {
    std::vector<Vec> idems;
    std::vector<std::string> names;
    for (size_t i = 0; i < O.objects.size(); ++i) {
        idems.push_back(O.sca.basis_vec(O.idem_key[i]));
        const WObj& x = O.objects[i];
        std::string nm = O.B->quiver().vertex_name(x.vertex);
        if (x.level != 0) nm += "@" + std::to_string(x.level);
        names.push_back(nm);
    }
    return gabriel_presentation(O.sca, idems, names);
}

Presentation gabriel_presentation(const TrivialExtension& T) {
    return gabriel_presentation(T.sca, T.idempotents, T.object_names);
}

/* ---- presentation matching ------------------------------------------------ */

namespace {

/* Invertible small-entry square matrices to try as slot assignments, in
   increasing "wildness" order. */
std::vector<Matrix> scalar_pool(const Field& f, int mu) {
    std::vector<Matrix> pool;
    auto push_if_inv = [&](const Matrix& m) {
        if (m.rank() == mu) pool.push_back(m);
    };
    if (mu == 1) {
        for (auto [num, den] : std::initializer_list<std::pair<int, int>>{
                 {1, 1}, {-1, 1}, {2, 1}, {-2, 1}, {1, 2}, {-1, 2}, {3, 1}, {-3, 1}}) {
            if (!f.is_rational() && den != 1 && f.p == 2) continue;
            Matrix m(f, 1, 1);
            m.at(0, 0) = Scalar(f, num, den);
            push_if_inv(m);
        }
        return pool;
    }
    std::vector<Scalar> entries{Scalar::one(f), -Scalar::one(f), Scalar(f)};
    int ne = static_cast<int>(entries.size());
    int cells = mu * mu;
    long total = 1;
    for (int i = 0; i < cells; ++i) total *= ne;
    if (total > 2000000) total = 2000000;
    for (long code = 0; code < total; ++code) {
        Matrix m(f, mu, mu);
        long c = code;
        for (int i = 0; i < cells; ++i) {
            m.at(i / mu, i % mu) = entries[c % ne];
            c /= ne;
        }
        push_if_inv(m);
    }
    return pool;
}

struct MatchContext {
    const BoundQuiverAlgebra* target;
    const StructureConstantAlgebra* A;
    const std::vector<Vec>* idems;
    std::vector<int> vmap;  // target vertex -> idem index
    /* per target arrow: assigned image in A */
    std::vector<Vec> img;
    std::vector<bool> assigned;
    /* slots: groups of parallel target arrows */
    struct SlotInfo {
        std::vector<int> arrows;   // target arrow indices
        std::vector<Vec> lifts;    // complement lifts in A for this frame
        std::vector<Matrix> pool;  // candidate coefficient matrices
    };
    std::vector<SlotInfo> slots;
    /* relations indexed by the last slot whose arrows complete them */
    std::vector<std::vector<int>> ready_after;

    Vec eval_rel(const PathElement& r) const {
        Vec acc = A->zero();
        for (const PathTerm& t : r.terms) {
            Vec v = (*idems)[vmap[t.path.source]];
            for (int a : t.path.arrows) v = A->mul(v, img[a]);
            acc = A->add(acc, A->scale(t.coef, v));
        }
        return acc;
    }
};

bool match_backtrack(MatchContext& ctx, size_t si) {
    if (si == ctx.slots.size()) return true;
    auto& slot = ctx.slots[si];
    int mu = static_cast<int>(slot.arrows.size());
    for (const Matrix& coeff : slot.pool) {
        for (int r = 0; r < mu; ++r) {
            Vec v = ctx.A->zero();
            for (int c = 0; c < mu; ++c)
                v = ctx.A->add(v, ctx.A->scale(coeff.at(r, c), slot.lifts[c]));
            ctx.img[slot.arrows[r]] = v;
        }
        bool ok = true;
        for (int ri : ctx.ready_after[si])
            if (!ctx.A->is_zero_vec(ctx.eval_rel(ctx.target->relations()[ri]))) {
                ok = false;
                break;
            }
        if (ok && match_backtrack(ctx, si + 1)) return true;
    }
    return false;
}

/* Dimension of the unital subalgebra generated by the idempotents and the
   arrow images. */
int generated_dim(const StructureConstantAlgebra& A, const std::vector<Vec>& gens) {
    std::vector<Vec> vs = gens;
    vs.push_back(A.unit());
    Matrix span = span_of_vecs(A.field(), A.dim(), vs);
    while (true) {
        Matrix grown = subspace_sum(span, product_span(A, span, span));
        if (grown.cols() == span.cols()) return span.cols();
        span = grown;
    }
}

}  // namespace

MatchResult match_presentation(const AlgebraPtr& target, const StructureConstantAlgebra& A,
                               const std::vector<Vec>& idems) {
    MatchResult res;
    const Field& f = A.field();
    int nv = target->quiver().num_vertices();
    if (static_cast<int>(idems.size()) != nv) {
        res.detail = "vertex counts differ";
        return res;
    }
    if (target->dim() != A.dim()) {
        res.detail = "dimensions differ";
        return res;
    }
    int n = A.dim();
    Matrix R = span_of_vecs(f, n, A.radical_basis());
    Matrix R2 = product_span(A, R, R);

    /* per idempotent pair: block dim, arrow count, complement lifts */
    std::vector<std::vector<int>> bdim(nv, std::vector<int>(nv));
    std::vector<std::vector<int>> acount(nv, std::vector<int>(nv));
    std::vector<std::vector<std::vector<Vec>>> clifts(nv, std::vector<std::vector<Vec>>(nv));
    for (int x = 0; x < nv; ++x)
        for (int y = 0; y < nv; ++y) {
            Matrix blk = slice(A, idems[x], idems[y], Matrix::identity(f, n));
            bdim[x][y] = blk.cols();
            Matrix big = slice(A, idems[x], idems[y], R);
            Matrix small = slice(A, idems[x], idems[y], R2);
            Matrix acc = small;
            for (int c = 0; c < big.cols(); ++c) {
                Matrix col = big.submatrix(0, c, n, 1);
                if (in_span(acc, col)) continue;
                acc = acc.hstack(col);
                clifts[x][y].push_back(vec_of(col));
            }
            acount[x][y] = static_cast<int>(clifts[x][y].size());
        }
    std::vector<std::vector<int>> tcount(nv, std::vector<int>(nv, 0));
    for (const Arrow& a : target->quiver().arrows()) ++tcount[a.from][a.to];

    /* enumerate vertex bijections compatible with block and arrow counts */
    std::vector<int> vmap(nv, -1), used(nv, 0);
    std::vector<std::vector<int>> all_maps;
    auto extend = [&](auto&& self, int v) -> void {
        if (v == nv) {
            all_maps.push_back(vmap);
            return;
        }
        for (int t = 0; t < nv; ++t) {
            if (used[t]) continue;
            bool ok = true;
            for (int w = 0; w < nv && ok; ++w) {
                if (vmap[w] < 0 && w != v) continue;
                int tw = (w == v) ? t : vmap[w];
                if (target->block_dim(v, w) != bdim[t][tw] ||
                    target->block_dim(w, v) != bdim[tw][t] || tcount[v][w] != acount[t][tw] ||
                    tcount[w][v] != acount[tw][t])
                    ok = false;
            }
            if (!ok) continue;
            vmap[v] = t;
            used[t] = 1;
            self(self, v + 1);
            vmap[v] = -1;
            used[t] = 0;
        }
    };
    extend(extend, 0);
    if (all_maps.empty()) {
        res.detail = "no vertex bijection preserves block dimensions and arrow counts";
        return res;
    }

    for (const std::vector<int>& vm : all_maps) {
        MatchContext ctx;
        ctx.target = target.get();
        ctx.A = &A;
        ctx.idems = &idems;
        ctx.vmap = vm;
        ctx.img.assign(target->quiver().num_arrows(), A.zero());
        /* group parallel target arrows into slots */
        std::map<std::pair<int, int>, int> slot_of;
        for (int a = 0; a < target->quiver().num_arrows(); ++a) {
            const Arrow& ar = target->quiver().arrow(a);
            auto key = std::make_pair(ar.from, ar.to);
            auto it = slot_of.find(key);
            if (it == slot_of.end()) {
                slot_of.emplace(key, static_cast<int>(ctx.slots.size()));
                ctx.slots.push_back(MatchContext::SlotInfo{
                    {a}, clifts[vm[ar.from]][vm[ar.to]], {}});
            } else {
                ctx.slots[it->second].arrows.push_back(a);
            }
        }
        for (auto& s : ctx.slots) s.pool = scalar_pool(f, static_cast<int>(s.arrows.size()));
        /* schedule each relation after its last needed slot */
        std::vector<int> slot_index(target->quiver().num_arrows());
        for (size_t s = 0; s < ctx.slots.size(); ++s)
            for (int a : ctx.slots[s].arrows) slot_index[a] = static_cast<int>(s);
        ctx.ready_after.assign(ctx.slots.size(), {});
        for (size_t ri = 0; ri < target->relations().size(); ++ri) {
            int last = 0;
            for (const PathTerm& t : target->relations()[ri].terms)
                for (int a : t.path.arrows) last = std::max(last, slot_index[a]);
            ctx.ready_after[last].push_back(static_cast<int>(ri));
        }
        if (!match_backtrack(ctx, 0)) continue;
        /* relations hold; certify isomorphism via surjectivity + equal dims */
        std::vector<Vec> gens = ctx.img;
        for (const Vec& e : idems) gens.push_back(e);
        if (generated_dim(A, gens) != A.dim()) continue;
        res.matched = true;
        res.vertex_map = vm;
        std::ostringstream os;
        os << "vertex map:";
        for (int v = 0; v < nv; ++v)
            os << " " << target->quiver().vertex_name(v) << "->" << vm[v];
        res.detail = os.str();
        return res;
    }
    res.detail = "arrow image search exhausted (inconclusive)";
    return res;
}

MatchResult match_presentation(const AlgebraPtr& target, const AlgebraPtr& A) {
    std::vector<Vec> idems;
    StructureConstantAlgebra sca = as_sca(*A, &idems);
    return match_presentation(target, sca, idems);
}

/* ---- selfinjectivity and symmetry ---------------------------------------- */

bool is_selfinjective(const AlgebraPtr& A) {
    int nv = A->quiver().num_vertices();
    std::vector<int> hit(nv, 0);
    for (int x = 0; x < nv; ++x) {
        Representation P = projective(A, x);
        std::vector<int> soc = socle_dims(P);
        int y = -1, total = 0;
        for (int v = 0; v < nv; ++v) {
            total += soc[v];
            if (soc[v] > 0) y = v;
        }
        if (total != 1) return false;  // socle not simple
        if (!is_isomorphic(P, injective(A, y))) return false;
        if (hit[y]++) return false;  // Nakayama map must be a bijection
    }
    return true;
}

bool is_symmetric(const AlgebraPtr& A) {
    const Field& f = A->field();
    int n = A->dim();
    /* functionals vanishing on all commutators */
    std::vector<Vec> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vec r = A->sub(A->mul_basis(i, j), A->mul_basis(j, i));
            if (!A->is_zero_elt(r)) rows.push_back(r);
        }
    Matrix K(f, static_cast<int>(rows.size()), n);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < n; ++c) K.at(static_cast<int>(r), c) = rows[r][c];
    Matrix W = K.nullspace();  // n x w
    if (W.cols() == 0) return false;

    auto nondegenerate = [&](const Vec& fv) {
        Matrix G(f, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Elt& p = A->mul_basis(i, j);
                Scalar s(f);
                for (int t = 0; t < n; ++t)
                    if (!p[t].is_zero()) s += p[t] * fv[t];
                G.at(i, j) = s;
            }
        return G.rank() == n;
    };

    /* The radical of the form of any f in W is a right ideal, and every
       nonzero right ideal meets the socle, where x A = x K.  So f works iff
       f is nonzero on each one-dimensional soc(e_v A); a form exists iff no
       evaluation functional soc(e_v A) -> W^* vanishes identically, and a
       witness is found by exact search over one-parameter combinations. */
    const Quiver& Q = A->quiver();
    int nv = Q.num_vertices();
    std::vector<Vec> socle;  // spanning vector of soc(e_v A), per vertex
    for (int v = 0; v < nv; ++v) {
        std::vector<int> blk;
        for (int i = 0; i < n; ++i)
            if (A->basis_source(i) == v) blk.push_back(i);
        int k = static_cast<int>(blk.size());
        Matrix S(f, n * Q.num_arrows(), k);
        for (int c = 0; c < k; ++c) {
            for (int a = 0; a < Q.num_arrows(); ++a) {
                Vec img = A->mul(A->basis_elt(blk[c]), A->arrow_elt(a));
                for (int r = 0; r < n; ++r) S.at(a * n + r, c) = img[r];
            }
        }
        Matrix NS = S.nullspace();
        if (NS.cols() != 1) return false;  // soc P(v) not simple: not selfinjective
        Vec s(n, Scalar(f));
        for (int c = 0; c < k; ++c) s[blk[c]] = NS.at(c, 0);
        socle.push_back(s);
    }
    int w = W.cols();
    Matrix L(f, nv, w);  // L(v, c) = value of functional W_c on soc(e_v A)
    for (int v = 0; v < nv; ++v)
        for (int c = 0; c < w; ++c) {
            Scalar s(f);
            for (int i = 0; i < n; ++i)
                if (!socle[v][i].is_zero()) s += socle[v][i] * W.at(i, c);
            L.at(v, c) = s;
        }
    for (int v = 0; v < nv; ++v) {
        bool nonzero = false;
        for (int c = 0; c < w; ++c) nonzero = nonzero || !L.at(v, c).is_zero();
        if (!nonzero) return false;  // provably no nondegenerate symmetric form
    }
    /* witness f = sum t^c W_c: each socle value is a nonzero polynomial in t
       of degree < w, so some t in [0, nv*w] avoids all roots */
    for (long t = 0; t <= static_cast<long>(nv) * w + 1; ++t) {
        Vec fv(n, Scalar(f));
        Scalar tc = Scalar::one(f);
        bool all = true;
        for (int c = 0; c < w; ++c) {
            for (int i = 0; i < n; ++i) fv[i] += tc * W.at(i, c);
            tc *= Scalar(f, t, 1);
        }
        for (int v = 0; v < nv && all; ++v) {
            Scalar s(f);
            for (int i = 0; i < n; ++i)
                if (!socle[v][i].is_zero()) s += socle[v][i] * fv[i];
            all = !s.is_zero();
        }
        if (all && nondegenerate(fv)) return true;
    }
    return false;
}

/* ---- ideal toolkit -------------------------------------------------------- */

namespace {

Matrix left_mult_mat(const BoundQuiverAlgebra& A, const Elt& x) {
    int n = A.dim();
    Matrix m(A.field(), n, n);
    for (int j = 0; j < n; ++j) {
        Elt p = A.mul(x, A.basis_elt(j));
        for (int i = 0; i < n; ++i) m.at(i, j) = p[i];
    }
    return m;
}

Matrix right_mult_mat(const BoundQuiverAlgebra& A, const Elt& x) {
    int n = A.dim();
    Matrix m(A.field(), n, n);
    for (int j = 0; j < n; ++j) {
        Elt p = A.mul(A.basis_elt(j), x);
        for (int i = 0; i < n; ++i) m.at(i, j) = p[i];
    }
    return m;
}

Elt elt_of_col(const Matrix& c) {
    Elt v;
    for (int i = 0; i < c.rows(); ++i) v.push_back(c.at(i, 0));
    return v;
}

Matrix radical_cols(const BoundQuiverAlgebra& A) {
    std::vector<Elt> vs;
    for (int i = 0; i < A.dim(); ++i)
        if (A.basis_path(i).length() >= 1) vs.push_back(A.basis_elt(i));
    return span_of_vecs(A.field(), A.dim(), vs);
}

}  // namespace

Ideal make_ideal(const AlgebraPtr& A, const Matrix& span_cols) {
    Matrix basis = span_cols.column_space();
    for (int c = 0; c < basis.cols(); ++c) {
        Elt v = elt_of_col(basis.submatrix(0, c, A->dim(), 1));
        for (int a = 0; a < A->quiver().num_arrows(); ++a) {
            Elt arrow = A->arrow_elt(a);
            if (!in_span(basis, col_of(A->field(), A->mul(arrow, v))) ||
                !in_span(basis, col_of(A->field(), A->mul(v, arrow))))
                throw Error("NotIdeal", "span is not closed under multiplication");
        }
    }
    return Ideal{basis};
}

Ideal ideal_closure(const AlgebraPtr& A, const Matrix& seed_cols) {
    Matrix basis = seed_cols.column_space();
    bool grew = true;
    while (grew) {
        grew = false;
        for (int c = 0; c < basis.cols(); ++c) {
            Elt v = elt_of_col(basis.submatrix(0, c, A->dim(), 1));
            for (int a = 0; a < A->quiver().num_arrows(); ++a) {
                Elt arrow = A->arrow_elt(a);
                for (const Elt& p : {A->mul(arrow, v), A->mul(v, arrow)}) {
                    Matrix col = col_of(A->field(), p);
                    if (!in_span(basis, col)) {
                        basis = basis.hstack(col);
                        grew = true;
                    }
                }
            }
        }
    }
    return Ideal{basis};
}

bool ideal_contains(const Ideal& I, const Elt& x) {
    Matrix col(I.basis.field(), I.basis.rows(), 1);
    for (int i = 0; i < col.rows(); ++i) col.at(i, 0) = x[i];
    return in_span(I.basis, col);
}

bool ideal_eq(const Ideal& I, const Ideal& J) { return subspace_eq(I.basis, J.basis); }

Ideal annihilator(const AlgebraPtr& A, const std::vector<Representation>& family) {
    const Field& f = A->field();
    int n = A->dim();
    if (family.empty()) return Ideal{Matrix::identity(f, n)};
    /* stack the flattened regular-action matrices of each module */
    std::vector<Matrix> stacks;
    int rows = 0;
    for (const Representation& M : family) {
        int d = M.total_dim();
        std::vector<int> off(A->quiver().num_vertices(), 0);
        for (int v = 1; v < A->quiver().num_vertices(); ++v) off[v] = off[v - 1] + M.dim(v - 1);
        Matrix phi(f, d * d, n);
        for (int i = 0; i < n; ++i) {
            const Path& p = A->basis_path(i);
            Matrix a = M.evaluate(p);  // M(source) -> M(target)
            for (int r = 0; r < a.rows(); ++r)
                for (int c = 0; c < a.cols(); ++c)
                    phi.at((off[p.target] + r) * d + (off[p.source] + c), i) = a.at(r, c);
        }
        stacks.push_back(phi);
        rows += d * d;
    }
    Matrix full = stacks[0];
    for (size_t i = 1; i < stacks.size(); ++i) full = full.vstack(stacks[i]);
    return make_ideal(A, full.nullspace());
}

Ideal trace_ideal(const AlgebraPtr& A, const std::vector<Representation>& family) {
    const Field& f = A->field();
    int n = A->dim();
    Matrix acc(f, n, 0);
    for (const Representation& M : family) {
        for (int x = 0; x < A->quiver().num_vertices(); ++x) {
            Representation P = projective(A, x);
            for (const Hom& h : hom_basis(M, P)) {
                for (int v = 0; v < A->quiver().num_vertices(); ++v) {
                    std::vector<int> blk = A->block(x, v);  // coordinates of P at v
                    for (int c = 0; c < h.f[v].cols(); ++c) {
                        Matrix col(f, n, 1);
                        for (int r = 0; r < h.f[v].rows(); ++r)
                            col.at(blk[r], 0) = h.f[v].at(r, c);
                        if (!in_span(acc, col)) acc = acc.hstack(col);
                    }
                }
            }
        }
    }
    return make_ideal(A, acc);
}

Ideal left_trace_ideal(const AlgebraPtr& A, const std::vector<Representation>& family) {
    const Field& f = A->field();
    int n = A->dim();
    AlgebraPtr Aop = opposite_algebra(A);
    std::vector<Representation> duals;
    for (const Representation& M : family) duals.push_back(dual(M, Aop));
    Ideal Jop = trace_ideal(Aop, duals);
    /* path reversal A -> Aop on the chosen basis of A */
    Matrix T(f, n, 0);
    for (int i = 0; i < n; ++i) {
        const Path& p = A->basis_path(i);
        Elt x = Aop->basis_elt(Aop->idempotent_index(p.target));
        for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it)
            x = Aop->mul(x, Aop->arrow_elt(*it));
        T = T.hstack(col_of(f, x));
    }
    auto back = T.solve(Jop.basis);
    if (!back) throw Error("Internal", "path reversal is not invertible");
    return make_ideal(A, *back);
}

Ideal left_annihilator(const AlgebraPtr& A, const Ideal& I) {
    const Field& f = A->field();
    int n = A->dim();
    if (I.dim() == 0) return Ideal{Matrix::identity(f, n)};
    Matrix full(f, 0, n);
    for (int c = 0; c < I.basis.cols(); ++c)
        full = full.vstack(right_mult_mat(*A, elt_of_col(I.basis.submatrix(0, c, n, 1))));
    return make_ideal(A, full.nullspace());
}

Ideal right_annihilator(const AlgebraPtr& A, const Ideal& I) {
    const Field& f = A->field();
    int n = A->dim();
    if (I.dim() == 0) return Ideal{Matrix::identity(f, n)};
    Matrix full(f, 0, n);
    for (int c = 0; c < I.basis.cols(); ++c)
        full = full.vstack(left_mult_mat(*A, elt_of_col(I.basis.submatrix(0, c, n, 1))));
    return make_ideal(A, full.nullspace());
}

Ideal socle_ideal(const AlgebraPtr& A) {
    return left_annihilator(A, Ideal{radical_cols(*A)});
}

Ideal ideal_product(const AlgebraPtr& A, const Ideal& I, const Ideal& J) {
    const Field& f = A->field();
    int n = A->dim();
    Matrix acc(f, n, 0);
    for (int a = 0; a < I.basis.cols(); ++a) {
        Elt u = elt_of_col(I.basis.submatrix(0, a, n, 1));
        for (int b = 0; b < J.basis.cols(); ++b) {
            Elt v = elt_of_col(J.basis.submatrix(0, b, n, 1));
            Matrix col = col_of(f, A->mul(u, v));
            if (!in_span(acc, col)) acc = acc.hstack(col);
        }
    }
    return Ideal{acc};
}

Ideal ideal_intersect(const AlgebraPtr&, const Ideal& I, const Ideal& J) {
    return Ideal{subspace_intersect(I.basis, J.basis)};
}

Matrix corner_slice(const AlgebraPtr& A, const Elt& e, const Matrix& X, bool left, bool right) {
    Matrix m = X;
    if (left) m = left_mult_mat(*A, e) * m;
    if (right) m = right_mult_mat(*A, e) * m;
    return m.column_space();
}

Elt residual_identity(const AlgebraPtr& A, const Ideal& I) {
    Elt e = A->zero();
    for (int v = 0; v < A->quiver().num_vertices(); ++v)
        if (!ideal_contains(I, A->idempotent(v))) e = A->add(e, A->idempotent(v));
    return e;
}

AcyclicQuotientReport check_acyclic_quotient(const AlgebraPtr& A, const Ideal& I) {
    AcyclicQuotientReport rep;
    rep.e = residual_identity(A, I);
    Matrix eI = corner_slice(A, rep.e, I.basis, true, false);
    rep.r_ann_eq_eI = subspace_eq(right_annihilator(A, I).basis, eI);

    std::vector<Vec> idems;
    StructureConstantAlgebra sca = as_sca(*A, &idems);
    QuotientAlgebra Q = quotient_algebra(sca, I.basis);
    std::vector<Vec> qidems;
    std::vector<std::string> qnames;
    for (int v = 0; v < A->quiver().num_vertices(); ++v) {
        if (ideal_contains(I, A->idempotent(v))) continue;
        qidems.push_back(vec_of(Q.projection * col_of(A->field(), idems[v])));
        qnames.push_back(A->quiver().vertex_name(v));
    }
    rep.quotient = gabriel_presentation(Q.algebra, qidems, qnames);
    rep.quotient_acyclic = rep.quotient.algebra->quiver().is_acyclic();
    rep.ok = rep.r_ann_eq_eI && rep.quotient_acyclic;
    return rep;
}

DeformingReport is_deforming(const AlgebraPtr& A, const Ideal& I) {
    DeformingReport rep;
    Elt e = residual_identity(A, I);
    Matrix eIe = corner_slice(A, e, I.basis, true, true);
    Matrix lI = left_annihilator(A, I).basis;
    Matrix rI = right_annihilator(A, I).basis;
    /* l_{eAe}(I) = eAe  ∩ l_A(I); eAe-slicing of an annihilator just corners it */
    rep.eIe_eq_left = subspace_eq(eIe, corner_slice(A, e, lI, true, true));
    rep.eIe_eq_right = subspace_eq(eIe, corner_slice(A, e, rI, true, true));

    AcyclicQuotientReport aq = check_acyclic_quotient(A, I);
    rep.quotient_triangular = aq.quotient_acyclic;
    rep.deforming = rep.eIe_eq_left && rep.eIe_eq_right && rep.quotient_triangular;

    /* IeI: span of x e y over ideal basis pairs */
    {
        const Field& f = A->field();
        int n = A->dim();
        Matrix acc(f, n, 0);
        for (int a = 0; a < I.basis.cols(); ++a) {
            Elt u = A->mul(elt_of_col(I.basis.submatrix(0, a, n, 1)), e);
            for (int b = 0; b < I.basis.cols(); ++b) {
                Matrix col = col_of(f, A->mul(u, elt_of_col(I.basis.submatrix(0, b, n, 1))));
                if (!in_span(acc, col)) acc = acc.hstack(col);
            }
        }
        rep.IeI_zero = acc.cols() == 0;
    }
    rep.soc_in_I = subspace_leq(socle_ideal(A).basis, I.basis);
    return rep;
}

}  // namespace qk
