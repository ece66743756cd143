#include "quivkit/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace qk {

namespace {

using SparseRow = std::map<int, Scalar>;  // path id -> coefficient

void add_term(SparseRow& r, int pid, const Scalar& c) {
    auto it = r.find(pid);
    if (it == r.end()) {
        if (!c.is_zero()) r.emplace(pid, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) r.erase(it);
    }
}

}  // namespace

BoundQuiverAlgebra::BoundQuiverAlgebra(const Field& f, Quiver q,
                                       std::vector<PathElement> relations, int length_cap)
    : field_(f), quiver_(std::move(q)), relations_(std::move(relations)) {
    for (auto& r : relations_) r = make_relation(quiver_, r.terms);  // validate
    build(length_cap);
}

void BoundQuiverAlgebra::build(int length_cap) {
    const int nv = quiver_.num_vertices();

    /* Path enumeration.  Trivial paths get ids 0..nv-1. */
    for (int v = 0; v < nv; ++v) paths_.push_back(trivial_path(v));
    std::vector<std::vector<int>> by_len;  // by_len[L] = path ids of length L
    by_len.push_back({});
    for (int v = 0; v < nv; ++v) by_len[0].push_back(v);

    auto intern_path = [&](const Path& p) {
        if (p.length() == 0) return p.source;
        auto it = path_id_.find(p.arrows);
        if (it != path_id_.end()) return it->second;
        const int id = static_cast<int>(paths_.size());
        paths_.push_back(p);
        path_id_.emplace(p.arrows, id);
        return id;
    };

    int spread = 0;
    for (const auto& r : relations_) {
        int lo = r.terms[0].path.length(), hi = lo;
        for (const auto& t : r.terms) {
            lo = std::min(lo, t.path.length());
            hi = std::max(hi, t.path.length());
        }
        spread = std::max(spread, hi - lo);
    }

    /* Accumulated ideal rows, kept reduced per (source,target) block. */
    std::map<std::pair<int, int>, std::vector<SparseRow>> rows;

    /* Sorts a block's column list: longer paths first so that RREF expresses
       pivot (reducible) paths through shorter basis paths. */
    auto block_cols = [&](int s, int t, int maxlen) {
        std::vector<int> cols;
        for (int L = 0; L <= maxlen && L < static_cast<int>(by_len.size()); ++L)
            for (int pid : by_len[L])
                if (paths_[pid].source == s && paths_[pid].target == t) cols.push_back(pid);
        std::sort(cols.begin(), cols.end(), [&](int a, int b) {
            if (paths_[a].length() != paths_[b].length())
                return paths_[a].length() > paths_[b].length();
            return paths_[a].arrows < paths_[b].arrows;
        });
        return cols;
    };

    /* Reduces a block's accumulated rows; returns the reduced sparse rows and
       fills `pivot_pids` with the ids of pivot (reducible) paths. */
    auto reduce_block = [&](const std::pair<int, int>& key, int maxlen,
                            std::vector<int>* pivot_pids,
                            std::vector<SparseRow>* reduced) {
        const auto cols = block_cols(key.first, key.second, maxlen);
        std::map<int, int> col_of;
        for (size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = static_cast<int>(j);
        const auto& rs = rows[key];
        Matrix m(field_, static_cast<int>(rs.size()), static_cast<int>(cols.size()));
        for (size_t i = 0; i < rs.size(); ++i)
            for (const auto& [pid, c] : rs[i]) m.at(static_cast<int>(i), col_of.at(pid)) = c;
        std::vector<int> piv = m.rref();
        pivot_pids->clear();
        reduced->clear();
        for (size_t k = 0; k < piv.size(); ++k) {
            pivot_pids->push_back(cols[piv[k]]);
            SparseRow r;
            for (size_t j = 0; j < cols.size(); ++j)
                if (!m.at(static_cast<int>(k), static_cast<int>(j)).is_zero())
                    r.emplace(cols[j], m.at(static_cast<int>(k), static_cast<int>(j)));
            reduced->push_back(std::move(r));
        }
    };

    auto finalize = [&](int top_degree) {
        basis_.clear();
        basis_index_of_path_.assign(paths_.size(), -1);
        reduction_.assign(paths_.size(), {});
        reducible_.assign(paths_.size(), false);
        std::map<std::pair<int, int>, std::vector<SparseRow>> reduced_rows;
        for (auto& [key, rs] : rows) {
            std::vector<int> piv;
            std::vector<SparseRow> red;
            reduce_block(key, top_degree, &piv, &red);
            for (int pid : piv) reducible_[pid] = true;
            reduced_rows[key] = red;
        }
        for (size_t pid = 0; pid < paths_.size(); ++pid)
            if (!reducible_[pid]) {
                basis_index_of_path_[pid] = static_cast<int>(basis_.size());
                basis_.push_back(static_cast<int>(pid));
            }
        for (auto& [key, red] : reduced_rows) {
            for (const auto& r : red) {
                /* leading (longest) entry is the pivot path */
                int pivot = -1;
                for (const auto& [pid, c] : r) {
                    if (pivot < 0 || paths_[pid].length() > paths_[pivot].length() ||
                        (paths_[pid].length() == paths_[pivot].length() &&
                         paths_[pid].arrows < paths_[pivot].arrows))
                        pivot = pid;
                }
                std::vector<std::pair<int, Scalar>> expr;
                for (const auto& [pid, c] : r)
                    if (pid != pivot) expr.emplace_back(basis_index_of_path_[pid], -c);
                reduction_[pivot] = std::move(expr);
            }
        }
        mul_memo_.clear();
    };

    for (int D = 1;; ++D) {
        if (D > length_cap)
            throw Error("NonAdmissible",
                        "basis did not stabilize within length cap " + std::to_string(length_cap));

        /* paths of length D */
        by_len.push_back({});
        for (int pid : by_len[D - 1]) {
            const Path p = paths_[pid];
            for (int a : quiver_.arrows_from(p.target))
                by_len[D].push_back(intern_path(concat(p, make_path(quiver_, {a}) )));
        }

        /* ideal rows of degree D: u * relation * w with |u| + max|r| + |w| = D */
        for (const auto& r : relations_) {
            int maxlen = 0;
            for (const auto& t : r.terms) maxlen = std::max(maxlen, t.path.length());
            if (D < maxlen) continue;
            for (int l1 = 0; l1 <= D - maxlen; ++l1) {
                const int l2 = D - maxlen - l1;
                if (l1 >= static_cast<int>(by_len.size()) || l2 >= static_cast<int>(by_len.size()))
                    continue;
                for (int u : by_len[l1]) {
                    if (paths_[u].target != r.source()) continue;
                    for (int w : by_len[l2]) {
                        if (paths_[w].source != r.target()) continue;
                        SparseRow row;
                        for (const auto& term : r.terms) {
                            const Path p = concat(concat(paths_[u], term.path), paths_[w]);
                            add_term(row, intern_path(p), term.coef);
                        }
                        if (!row.empty())
                            rows[{paths_[u].source, paths_[w].target}].push_back(std::move(row));
                    }
                }
            }
        }

        /* keep blocks reduced (also dedups accumulated rows) */
        std::map<std::pair<int, int>, std::vector<int>> pivots;
        for (auto& [key, rs] : rows) {
            std::vector<int> piv;
            std::vector<SparseRow> red;
            reduce_block(key, D, &piv, &red);
            rs = red;
            pivots[key] = piv;
        }

        /* stabilization trigger: every path of length in (D-spread, D] reduces */
        bool trigger = true;
        for (int L = std::max(1, D - spread); L <= D && trigger; ++L) {
            for (int pid : by_len[L]) {
                const Path& p = paths_[pid];
                const auto it = pivots.find({p.source, p.target});
                const bool red =
                    it != pivots.end() &&
                    std::find(it->second.begin(), it->second.end(), pid) != it->second.end();
                if (!red) { trigger = false; break; }
            }
        }
        if (!trigger) continue;

        finalize(D);
        stab_degree_ = D;

        /* Saturation: every reduced ideal row, multiplied by any arrow on
           either side, must still reduce to zero.  This certifies that the
           truncated row space captures the whole ideal (needed when relations
           mix path lengths). */
        bool saturated = true;
        for (const auto& [key, rs] : rows) {
            for (const auto& row : rs) {
                for (int a = 0; a < quiver_.num_arrows() && saturated; ++a) {
                    const Arrow& ar = quiver_.arrow(a);
                    if (ar.from == key.second) {
                        Elt acc = zero();
                        for (const auto& [pid, c] : row) {
                            Elt t = reduce_path(concat(paths_[pid], make_path(quiver_, {a})));
                            acc = add(acc, scale(c, t));
                        }
                        if (!is_zero_elt(acc)) saturated = false;
                    }
                    if (ar.to == key.first && saturated) {
                        Elt acc = zero();
                        for (const auto& [pid, c] : row) {
                            Elt t = reduce_path(concat(make_path(quiver_, {a}), paths_[pid]));
                            acc = add(acc, scale(c, t));
                        }
                        if (!is_zero_elt(acc)) saturated = false;
                    }
                }
                if (!saturated) break;
            }
            if (!saturated) break;
        }
        if (saturated) break;
    }
}

std::vector<int> BoundQuiverAlgebra::block(int s, int t) const {
    std::vector<int> r;
    for (int i = 0; i < dim(); ++i)
        if (basis_source(i) == s && basis_target(i) == t) r.push_back(i);
    return r;
}

int BoundQuiverAlgebra::idempotent_index(int v) const {
    return basis_index_of_path_[v];  // trivial path of v has path id v
}

BoundQuiverAlgebra::Elt BoundQuiverAlgebra::unit() const {
    Elt u = zero();
    for (int v = 0; v < quiver_.num_vertices(); ++v)
        u[idempotent_index(v)] = Scalar::one(field_);
    return u;
}

BoundQuiverAlgebra::Elt BoundQuiverAlgebra::idempotent(int v) const {
    Elt u = zero();
    u[idempotent_index(v)] = Scalar::one(field_);
    return u;
}

BoundQuiverAlgebra::Elt BoundQuiverAlgebra::basis_elt(int i) const {
    Elt u = zero();
    u[i] = Scalar::one(field_);
    return u;
}

BoundQuiverAlgebra::Elt BoundQuiverAlgebra::arrow_elt(int a) const {
    return reduce_path(make_path(quiver_, {a}));
}

bool BoundQuiverAlgebra::is_zero_elt(const Elt& x) const {
    for (const auto& c : x)
        if (!c.is_zero()) return false;
    return true;
}

BoundQuiverAlgebra::Elt BoundQuiverAlgebra::add(const Elt& x, const Elt& y) const {
    Elt r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] += y[i];
    return r;
}

BoundQuiverAlgebra::Elt BoundQuiverAlgebra::sub(const Elt& x, const Elt& y) const {
    Elt r = x;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
    return r;
}

BoundQuiverAlgebra::Elt BoundQuiverAlgebra::scale(const Scalar& c, const Elt& x) const {
    Elt r = x;
    for (auto& v : r) v *= c;
    return r;
}

BoundQuiverAlgebra::Elt BoundQuiverAlgebra::mul_elt_arrow(const Elt& x, int a) const {
    Elt r = zero();
    const Arrow& ar = quiver_.arrow(a);
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        if (basis_target(i) != ar.from) continue;
        const Path p = concat(basis_path(i), make_path(quiver_, {a}));
        auto it = path_id_.find(p.arrows);
        if (it == path_id_.end()) throw Error("Internal", "unenumerated product path");
        const int pid = it->second;
        if (!reducible_[pid]) {
            r[basis_index_of_path_[pid]] += x[i];
        } else {
            for (const auto& [bi, c] : reduction_[pid]) r[bi] += x[i] * c;
        }
    }
    return r;
}

BoundQuiverAlgebra::Elt BoundQuiverAlgebra::mul_arrow_elt(int a, const Elt& x) const {
    Elt r = zero();
    const Arrow& ar = quiver_.arrow(a);
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        if (basis_source(i) != ar.to) continue;
        const Path p = concat(make_path(quiver_, {a}), basis_path(i));
        auto it = path_id_.find(p.arrows);
        if (it == path_id_.end()) throw Error("Internal", "unenumerated product path");
        const int pid = it->second;
        if (!reducible_[pid]) {
            r[basis_index_of_path_[pid]] += x[i];
        } else {
            for (const auto& [bi, c] : reduction_[pid]) r[bi] += x[i] * c;
        }
    }
    return r;
}

const BoundQuiverAlgebra::Elt& BoundQuiverAlgebra::mul_basis(int i, int j) const {
    auto it = mul_memo_.find({i, j});
    if (it != mul_memo_.end()) return it->second;
    Elt r;
    if (basis_target(i) != basis_source(j)) {
        r = zero();
    } else {
        r = basis_elt(i);
        for (int a : basis_path(j).arrows) r = mul_elt_arrow(r, a);
    }
    return mul_memo_.emplace(std::make_pair(i, j), std::move(r)).first->second;
}

BoundQuiverAlgebra::Elt BoundQuiverAlgebra::mul(const Elt& x, const Elt& y) const {
    Elt r = zero();
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            const Elt& b = mul_basis(i, j);
            const Scalar c = x[i] * y[j];
            for (int k = 0; k < dim(); ++k)
                if (!b[k].is_zero()) r[k] += c * b[k];
        }
    }
    return r;
}

BoundQuiverAlgebra::Elt BoundQuiverAlgebra::reduce_path(const Path& p) const {
    if (p.length() == 0) return idempotent(p.source);
    auto it = path_id_.find(p.arrows);
    if (it != path_id_.end()) {
        const int pid = it->second;
        Elt r = zero();
        if (!reducible_[pid]) {
            r[basis_index_of_path_[pid]] = Scalar::one(field_);
        } else {
            for (const auto& [bi, c] : reduction_[pid]) r[bi] += c;
        }
        return r;
    }
    /* longer than the enumerated range: fold arrow by arrow */
    Elt r = idempotent(p.source);
    for (int a : p.arrows) r = mul_elt_arrow(r, a);
    return r;
}

BoundQuiverAlgebra::Elt BoundQuiverAlgebra::reduce(const PathElement& x) const {
    Elt r = zero();
    for (const auto& t : x.terms) r = add(r, scale(t.coef, reduce_path(t.path)));
    return r;
}

std::string BoundQuiverAlgebra::elt_str(const Elt& x) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!x[i].is_one()) os << x[i].str() << "*";
        os << basis_str(i);
    }
    if (first) os << "0";
    return os.str();
}

BoundQuiverAlgebra BoundQuiverAlgebra::opposite() const {
    Quiver qop = quiver_.opposite();
    std::vector<PathElement> rels;
    for (const auto& r : relations_) {
        PathElement e;
        for (const auto& t : r.terms) {
            Path p;
            p.arrows.assign(t.path.arrows.rbegin(), t.path.arrows.rend());
            p.source = t.path.target;
            p.target = t.path.source;
            e.terms.push_back({t.coef, p});
        }
        rels.push_back(e);
    }
    return BoundQuiverAlgebra(field_, qop, rels);
}

}  // namespace qk
