#include "quivkit/rep.hpp"
#include "quivkit/structure_algebra.hpp"

namespace qk {

namespace {

using Vec = StructureConstantAlgebra::Vec;

Matrix hom_total_matrix(const Representation& M, const Hom& h) {
    const int n = M.total_dim();
    Matrix big(M.field(), n, n);
    int off = 0;
    for (size_t v = 0; v < h.f.size(); ++v) {
        const Matrix& m = h.f[v];
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) big.at(off + i, off + j) = m.at(i, j);
        off += m.rows();
    }
    return big;
}

Hom vec_to_hom(const Representation& M, const std::vector<Hom>& basis, const Vec& v) {
    Hom h = zero_hom(M, M);
    for (size_t i = 0; i < basis.size(); ++i)
        if (!v[i].is_zero()) h = add_hom(h, scale_hom(v[i], basis[i]));
    return h;
}

/* A non-trivial idempotent of the split semisimple algebra S, or nullopt if
   S is one-dimensional (local case).  Throws NonSplitEndo when splitting
   over the base field fails. */
std::optional<Vec> semisimple_idempotent(const StructureConstantAlgebra& S) {
    if (S.dim() == 1) return std::nullopt;
    const Field& f = S.field();

    auto lagrange = [&](const Vec& z, const std::vector<Scalar>& roots) {
        /* idempotent projecting onto the first eigenvalue */
        Vec e = S.unit();
        for (size_t i = 1; i < roots.size(); ++i) {
            Vec factor = S.sub(z, S.scale(roots[i], S.unit()));
            factor = S.scale((roots[0] - roots[i]).inverse(), factor);
            e = S.mul(e, factor);
        }
        return e;
    };

    auto z_basis = S.center_basis();
    /* try central elements first: their minimal polynomials must split into
       distinct rational linear factors if the algebra splits */
    for (const auto& z : z_basis) {
        auto mp = S.min_poly(z);
        if (mp.size() <= 2) continue;  // scalar element
        bool complete = true;
        auto roots = rational_roots(f, mp, &complete);
        if (roots.size() + 1 != mp.size()) {
            if (!complete)
                throw Error("NonSplitEndo", "could not factor a central minimal polynomial");
            throw Error("NonSplitEndo",
                        "central element with irrational eigenvalues: endomorphism ring "
                        "does not split over " + f.name());
        }
        Vec e = lagrange(z, roots);
        if (!S.is_zero_vec(e) && e != S.unit()) return e;
    }

    /* center is trivial: S is simple, so look for a singular element and a
       right identity of the proper left ideal it generates */
    std::vector<Vec> candidates;
    for (int i = 0; i < S.dim(); ++i) candidates.push_back(S.basis_vec(i));
    for (int i = 0; i < S.dim(); ++i) {
        auto mp = S.min_poly(S.basis_vec(i));
        bool complete = true;
        for (const auto& r : rational_roots(f, mp, &complete))
            candidates.push_back(S.sub(S.basis_vec(i), S.scale(r, S.unit())));
    }
    for (int i = 0; i < S.dim(); ++i)
        for (int j = 0; j < S.dim(); ++j)
            candidates.push_back(S.mul(S.basis_vec(i), S.basis_vec(j)));
    for (const auto& s : candidates) {
        if (S.is_zero_vec(s)) continue;
        /* left ideal S*s as the image of x |-> x*s */
        Matrix R = S.right_mult(s);
        if (R.rank() == S.dim()) continue;  // invertible, useless
        Matrix ideal = R.column_space();
        if (ideal.cols() == 0) continue;
        /* solve x*e = x for all x in the ideal, with e in the ideal */
        const int k = ideal.cols();
        Matrix sys(f, S.dim() * k, k);
        Matrix rhs(f, S.dim() * k, 1);
        for (int c = 0; c < k; ++c) {
            Vec x = S.zero();
            for (int r = 0; r < S.dim(); ++r) x[r] = ideal.at(r, c);
            /* x * (ideal * y) as a function of y: for each ideal column j compute x*col_j */
            for (int j = 0; j < k; ++j) {
                Vec ej = S.zero();
                for (int r = 0; r < S.dim(); ++r) ej[r] = ideal.at(r, j);
                Vec p = S.mul(x, ej);
                for (int r = 0; r < S.dim(); ++r) sys.at(c * S.dim() + r, j) = p[r];
            }
            for (int r = 0; r < S.dim(); ++r) rhs.at(c * S.dim() + r, 0) = x[r];
        }
        auto y = sys.solve(rhs);
        if (!y) continue;
        Vec e = S.zero();
        for (int j = 0; j < k; ++j)
            for (int r = 0; r < S.dim(); ++r) e[r] += ideal.at(r, j) * y->at(j, 0);
        if (!S.is_zero_vec(e) && e != S.unit() && S.mul(e, e) == e) return e;
    }
    throw Error("NonSplitEndo",
                "no splitting idempotent found; endomorphism ring may be a division "
                "algebra over " + f.name());
}

}  // namespace

std::vector<Representation> decompose(const Representation& M) {
    if (M.total_dim() == 0) return {};
    auto homs = hom_basis(M, M);
    if (homs.size() == 1) return {M};

    std::vector<Matrix> mats;
    for (const auto& h : homs) mats.push_back(hom_total_matrix(M, h));
    StructureConstantAlgebra E = StructureConstantAlgebra::from_matrices(
        M.field(), mats, Matrix::identity(M.field(), M.total_dim()));

    auto rad = E.radical_basis();
    Matrix radspan = span_of_vecs(M.field(), E.dim(), rad);
    auto Q = quotient_algebra(E, radspan);

    auto ebar = semisimple_idempotent(Q.algebra);
    if (!ebar) return {M};  // End(M) local: indecomposable

    /* lift along the section and correct by Newton iteration (rad nilpotent) */
    Matrix ecol(M.field(), Q.algebra.dim(), 1);
    for (int i = 0; i < Q.algebra.dim(); ++i) ecol.at(i, 0) = (*ebar)[i];
    Matrix lifted = Q.section * ecol;
    Vec e = E.zero();
    for (int i = 0; i < E.dim(); ++i) e[i] = lifted.at(i, 0);
    for (int it = 0; it < 64; ++it) {
        Vec e2 = E.mul(e, e);
        if (e2 == e) break;
        /* e <- 3e^2 - 2e^3 */
        Vec e3 = E.mul(e2, e);
        e = E.sub(E.scale(Scalar(M.field(), 3), e2), E.scale(Scalar(M.field(), 2), e3));
        if (it == 63) throw Error("Internal", "idempotent lifting did not converge");
    }
    if (E.is_zero_vec(e) || E.mul(e, e) != e)
        throw Error("Internal", "idempotent lifting failed");

    Hom eh = vec_to_hom(M, homs, e);
    SubSpaces im = image(M, eh, M);
    SubSpaces ker = kernel(M, eh, M);
    if (im.total_dim() == 0 || ker.total_dim() == 0)
        throw Error("Internal", "lifted idempotent is trivial");
    Representation M1 = sub_rep(M, im);
    Representation M2 = sub_rep(M, ker);
    std::vector<Representation> out;
    for (auto& part : decompose(M1)) out.push_back(std::move(part));
    for (auto& part : decompose(M2)) out.push_back(std::move(part));
    return out;
}

bool is_projective_rep(const Representation& M) {
    if (M.total_dim() == 0) return true;
    auto t = top_dims(M);
    std::vector<Representation> parts;
    for (size_t v = 0; v < t.size(); ++v)
        for (int k = 0; k < t[v]; ++k) parts.push_back(projective(M.algebra(), static_cast<int>(v)));
    Representation P = direct_sum(parts);
    if (P.dims() != M.dims()) return false;
    return is_isomorphic(P, M);
}

bool is_injective_rep(const Representation& M, const AlgebraPtr&) {
    if (M.total_dim() == 0) return true;
    auto s = socle_dims(M);
    std::vector<Representation> parts;
    for (size_t v = 0; v < s.size(); ++v)
        for (int k = 0; k < s[v]; ++k) parts.push_back(injective(M.algebra(), static_cast<int>(v)));
    Representation I = direct_sum(parts);
    if (I.dims() != M.dims()) return false;
    return is_isomorphic(I, M);
}

}  // namespace qk
