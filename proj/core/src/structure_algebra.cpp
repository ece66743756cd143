#include "quivkit/structure_algebra.hpp"

#include "quivkit/quiver.hpp"  // for Error

namespace qk {

StructureConstantAlgebra::StructureConstantAlgebra(const Field& f, std::vector<std::string> names,
                                                   std::vector<std::vector<Vec>> mult, Vec unit)
    : f_(f), names_(std::move(names)), mult_(std::move(mult)), unit_(std::move(unit)) {
    const size_t d = names_.size();
    if (mult_.size() != d || unit_.size() != d)
        throw Error("InvalidAlgebra", "structure constant table shape mismatch");
    for (const auto& row : mult_) {
        if (row.size() != d) throw Error("InvalidAlgebra", "structure constant table shape mismatch");
        for (const auto& v : row)
            if (v.size() != d) throw Error("InvalidAlgebra", "structure constant vector length mismatch");
    }
}

static Matrix vec_to_col(const Field& f, const std::vector<Scalar>& v) {
    Matrix m(f, static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
    return m;
}

static Matrix flatten_mats(const Field& f, const std::vector<Matrix>& ms) {
    const int n = ms.empty() ? 0 : ms[0].rows() * ms[0].cols();
    Matrix big(f, n, static_cast<int>(ms.size()));
    for (size_t k = 0; k < ms.size(); ++k) {
        int idx = 0;
        for (int i = 0; i < ms[k].rows(); ++i)
            for (int j = 0; j < ms[k].cols(); ++j) big.at(idx++, static_cast<int>(k)) = ms[k].at(i, j);
    }
    return big;
}

StructureConstantAlgebra StructureConstantAlgebra::from_matrices(const Field& f,
                                                                 const std::vector<Matrix>& basis,
                                                                 const Matrix& unit_mat) {
    const int d = static_cast<int>(basis.size());
    Matrix big = flatten_mats(f, basis);
    auto coords_of = [&](const Matrix& m) {
        std::vector<Matrix> one{m};
        auto x = big.solve(flatten_mats(f, one));
        if (!x) throw Error("InvalidAlgebra", "matrix span not closed under products");
        Vec v(d, Scalar(f));
        for (int i = 0; i < d; ++i) v[i] = x->at(i, 0);
        return v;
    };
    std::vector<std::vector<Vec>> mult(d, std::vector<Vec>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) mult[i][j] = coords_of(basis[i] * basis[j]);
    std::vector<std::string> names;
    for (int i = 0; i < d; ++i) names.push_back("b" + std::to_string(i));
    return StructureConstantAlgebra(f, names, mult, coords_of(unit_mat));
}

StructureConstantAlgebra::Vec StructureConstantAlgebra::basis_vec(int i) const {
    Vec v = zero();
    v[i] = Scalar::one(f_);
    return v;
}

StructureConstantAlgebra::Vec StructureConstantAlgebra::mul(const Vec& x, const Vec& y) const {
    Vec r = zero();
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            const Scalar c = x[i] * y[j];
            const Vec& m = mult_[i][j];
            for (int k = 0; k < dim(); ++k)
                if (!m[k].is_zero()) r[k] += c * m[k];
        }
    }
    return r;
}

bool StructureConstantAlgebra::is_zero_vec(const Vec& x) const {
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

StructureConstantAlgebra::Vec StructureConstantAlgebra::add(const Vec& x, const Vec& y) const {
    Vec r = x;
    for (int i = 0; i < dim(); ++i) r[i] += y[i];
    return r;
}

StructureConstantAlgebra::Vec StructureConstantAlgebra::sub(const Vec& x, const Vec& y) const {
    Vec r = x;
    for (int i = 0; i < dim(); ++i) r[i] -= y[i];
    return r;
}

StructureConstantAlgebra::Vec StructureConstantAlgebra::scale(const Scalar& c, const Vec& x) const {
    Vec r = x;
    for (auto& v : r) v *= c;
    return r;
}

Matrix StructureConstantAlgebra::left_mult(const Vec& x) const {
    Matrix m(f_, dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        Vec xj = mul(x, basis_vec(j));
        for (int i = 0; i < dim(); ++i) m.at(i, j) = xj[i];
    }
    return m;
}

Matrix StructureConstantAlgebra::right_mult(const Vec& x) const {
    Matrix m(f_, dim(), dim());
    for (int j = 0; j < dim(); ++j) {
        Vec xj = mul(basis_vec(j), x);
        for (int i = 0; i < dim(); ++i) m.at(i, j) = xj[i];
    }
    return m;
}

bool StructureConstantAlgebra::check_associativity() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
            for (int k = 0; k < dim(); ++k) {
                Vec lhs = mul(mult_[i][j], basis_vec(k));
                Vec rhs = mul(basis_vec(i), mult_[j][k]);
                if (lhs != rhs) return false;
            }
    return true;
}

std::vector<StructureConstantAlgebra::Vec> StructureConstantAlgebra::radical_basis() const {
    const int d = dim();
    /* tr(L_{b_i b_j}) precomputed from traces of left multiplications */
    std::vector<Scalar> trL(d, Scalar(f_));
    for (int k = 0; k < d; ++k) {
        Matrix L = left_mult(basis_vec(k));
        Scalar t(f_);
        for (int i = 0; i < d; ++i) t += L.at(i, i);
        trL[k] = t;
    }
    Matrix gram(f_, d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Scalar t(f_);
            const Vec& m = mult_[i][j];
            for (int k = 0; k < d; ++k)
                if (!m[k].is_zero()) t += m[k] * trL[k];
            gram.at(i, j) = t;
        }
    Matrix ns = gram.nullspace();
    std::vector<Vec> rad;
    for (int c = 0; c < ns.cols(); ++c) {
        Vec v = zero();
        for (int i = 0; i < d; ++i) v[i] = ns.at(i, c);
        rad.push_back(v);
    }

    /* verify: two-sided ideal and nilpotent */
    Matrix R = span_of_vecs(f_, d, rad);
    Matrix full = Matrix::identity(f_, d);
    Matrix lr = product_span(*this, full, R);
    Matrix rl = product_span(*this, R, full);
    if (!subspace_leq(lr, R) || !subspace_leq(rl, R))
        throw Error("RadicalFailure", "trace-form kernel is not an ideal");
    Matrix P = R;
    for (int step = 0; step < d + 1 && P.cols() > 0; ++step) P = product_span(*this, P, R);
    if (P.cols() > 0)
        throw Error("RadicalFailure", "trace-form kernel is not nilpotent");
    return rad;
}

std::vector<StructureConstantAlgebra::Vec> StructureConstantAlgebra::center_basis() const {
    const int d = dim();
    Matrix sys(f_, d * d, d);
    for (int j = 0; j < d; ++j) {
        Matrix diff = left_mult(basis_vec(j)) - right_mult(basis_vec(j));
        /* x central iff L_x = R_x, i.e. for all basis b_j: b_j x = x b_j.
           Using linearity in x: rows are (L_{b_j} - R_{b_j}) applied to x. */
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) sys.at(j * d + r, c) += diff.at(r, c);
    }
    Matrix ns = sys.nullspace();
    std::vector<Vec> z;
    for (int c = 0; c < ns.cols(); ++c) {
        Vec v = zero();
        for (int i = 0; i < d; ++i) v[i] = ns.at(i, c);
        z.push_back(v);
    }
    return z;
}

std::vector<Scalar> StructureConstantAlgebra::min_poly(const Vec& x) const {
    const int d = dim();
    std::vector<Vec> powers{unit_};
    for (;;) {
        Matrix span = span_of_vecs(f_, d, powers);
        Vec nxt = mul(powers.back(), x);
        Matrix col = vec_to_col(f_, nxt);
        auto sol = span.solve(col);
        if (sol) {
            std::vector<Scalar> poly;
            for (int i = 0; i < static_cast<int>(powers.size()); ++i) poly.push_back(-sol->at(i, 0));
            poly.push_back(Scalar::one(f_));
            return poly;
        }
        powers.push_back(nxt);
        if (static_cast<int>(powers.size()) > d + 1)
            throw Error("Internal", "min_poly did not terminate");
    }
}

Matrix span_of_vecs(const Field& f, int dim, const std::vector<StructureConstantAlgebra::Vec>& vs) {
    Matrix m(f, dim, static_cast<int>(vs.size()));
    for (size_t c = 0; c < vs.size(); ++c)
        for (int i = 0; i < dim; ++i) m.at(i, static_cast<int>(c)) = vs[c][i];
    return m.column_space();
}

Matrix product_span(const StructureConstantAlgebra& A, const Matrix& U, const Matrix& V) {
    std::vector<StructureConstantAlgebra::Vec> prods;
    for (int i = 0; i < U.cols(); ++i)
        for (int j = 0; j < V.cols(); ++j) {
            StructureConstantAlgebra::Vec u = A.zero(), v = A.zero();
            for (int k = 0; k < A.dim(); ++k) {
                u[k] = U.at(k, i);
                v[k] = V.at(k, j);
            }
            prods.push_back(A.mul(u, v));
        }
    return span_of_vecs(A.field(), A.dim(), prods);
}

bool subspace_leq(const Matrix& U, const Matrix& V) {
    return V.solve(U).has_value();
}

bool subspace_eq(const Matrix& U, const Matrix& V) {
    return subspace_leq(U, V) && subspace_leq(V, U);
}

Matrix subspace_sum(const Matrix& U, const Matrix& V) {
    return U.hstack(V).column_space();
}

Matrix subspace_intersect(const Matrix& U, const Matrix& V) {
    if (U.cols() == 0 || V.cols() == 0) return Matrix(U.field(), U.rows(), 0);
    Matrix neg = V.scaled(-Scalar::one(U.field()));
    Matrix ns = U.hstack(neg).nullspace();
    Matrix xs = ns.submatrix(0, 0, U.cols(), ns.cols());
    return (U * xs).column_space();
}

QuotientAlgebra quotient_algebra(const StructureConstantAlgebra& A, const Matrix& ideal) {
    const Field& f = A.field();
    const int n = A.dim(), k = ideal.cols();
    Matrix full = ideal.hstack(Matrix::identity(f, n)).column_space();
    if (full.cols() != n) throw Error("Internal", "ideal basis extension failed");
    auto inv = full.inverse();
    Matrix proj = inv->submatrix(k, 0, n - k, n);
    Matrix sect = full.submatrix(0, k, n, n - k);

    const int q = n - k;
    auto lift = [&](int j) {
        StructureConstantAlgebra::Vec v = A.zero();
        for (int i = 0; i < n; ++i) v[i] = sect.at(i, j);
        return v;
    };
    std::vector<std::vector<StructureConstantAlgebra::Vec>> mult(
        q, std::vector<StructureConstantAlgebra::Vec>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            auto p = A.mul(lift(i), lift(j));
            Matrix col = proj * vec_to_col(f, p);
            StructureConstantAlgebra::Vec v(q, Scalar(f));
            for (int r = 0; r < q; ++r) v[r] = col.at(r, 0);
            mult[i][j] = v;
        }
    Matrix ucol = proj * vec_to_col(f, A.unit());
    StructureConstantAlgebra::Vec u(q, Scalar(f));
    for (int r = 0; r < q; ++r) u[r] = ucol.at(r, 0);
    std::vector<std::string> names;
    for (int i = 0; i < q; ++i) names.push_back("q" + std::to_string(i));
    return {StructureConstantAlgebra(f, names, mult, u), proj, sect};
}

static std::vector<mpz_class> divisors_capped(const mpz_class& n0, bool* complete) {
    mpz_class n = abs(n0);
    std::vector<mpz_class> divs{1};
    if (n == 0) return divs;
    mpz_class rem = n;
    std::vector<std::pair<mpz_class, int>> fac;
    for (mpz_class p = 2; p * p <= rem && p < 2000000; ++p) {
        if (rem % p == 0) {
            int e = 0;
            while (rem % p == 0) { rem /= p; ++e; }
            fac.emplace_back(p, e);
        }
    }
    if (rem > 1) {
        if (rem < mpz_class("1000000000000"))
            fac.emplace_back(rem, 1);
        else
            *complete = false;  // unfactored large part: roots may be missed
    }
    for (const auto& [p, e] : fac) {
        std::vector<mpz_class> ext;
        for (const auto& d : divs) {
            mpz_class pk = 1;
            for (int i = 0; i <= e; ++i) {
                ext.push_back(d * pk);
                pk *= p;
            }
        }
        divs = ext;
        if (divs.size() > 4096) { *complete = false; break; }
    }
    return divs;
}

std::vector<Scalar> rational_roots(const Field& f, const std::vector<Scalar>& poly_in,
                                   bool* complete) {
    *complete = true;
    std::vector<Scalar> roots;
    std::vector<Scalar> poly = poly_in;
    auto eval = [&](const std::vector<Scalar>& p, const Scalar& x) {
        Scalar acc(f);
        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
        return acc;
    };
    auto deflate = [&](std::vector<Scalar>& p, const Scalar& r) {
        /* synthetic division by (t - r) */
        std::vector<Scalar> q(p.size() - 1, Scalar(f));
        Scalar carry(f);
        for (int i = static_cast<int>(p.size()) - 1; i >= 1; --i) {
            carry = p[i] + carry * r;
            q[i - 1] = carry;
        }
        p = q;
    };

    if (!f.is_rational()) {
        /* small prime fields: exhaustive root search */
        for (;;) {
            bool found = false;
            for (long v = 0; v < f.p && static_cast<int>(poly.size()) > 1; ++v) {
                Scalar x(f, v);
                if (eval(poly, x).is_zero()) {
                    roots.push_back(x);
                    deflate(poly, x);
                    found = true;
                    break;
                }
            }
            if (!found) break;
        }
        return roots;
    }

    for (;;) {
        while (poly.size() > 1 && poly[0].is_zero()) {
            roots.push_back(Scalar(f, 0));
            poly.erase(poly.begin());
        }
        if (poly.size() <= 1) break;
        /* scale to integer coefficients */
        mpz_class l(1);
        for (const auto& c : poly) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den().get_mpz_t());
        std::vector<mpz_class> ip;
        for (const auto& c : poly) ip.push_back(mpz_class(c.value() * l));
        auto nums = divisors_capped(ip.front(), complete);
        auto dens = divisors_capped(ip.back(), complete);
        bool found = false;
        for (const auto& num : nums) {
            for (const auto& den : dens) {
                for (int sign = 1; sign >= -1 && !found; sign -= 2) {
                    mpq_class cand(sign * num, den);
                    cand.canonicalize();
                    Scalar x(f, cand);
                    if (eval(poly, x).is_zero()) {
                        roots.push_back(x);
                        deflate(poly, x);
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    return roots;
}

}  // namespace qk
