#include "quivkit/selfinjective.hpp"

#include <algorithm>
#include <sstream>

namespace qk {

namespace {

using Elt = BoundQuiverAlgebra::Elt;

void add_term(WElt& out, const WKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = out.find(k);
    if (it == out.end()) {
        out.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

/* (m+1,v)(m,f_w) = (m, v*f_w), (v*f_w)(x) = f_w(xv): the coefficient of w in
   x*v, for x ranging over block(src w, src v). */
void left_star(const BoundQuiverAlgebra& B, int v, int w, int level, const Scalar& c, WElt& out) {
    if (B.basis_target(v) != B.basis_target(w)) return;
    for (int x : B.block(B.basis_source(w), B.basis_source(v))) {
        const Scalar& cw = B.mul_basis(x, v)[w];
        if (!cw.is_zero()) add_term(out, WKey{level, true, x}, c * cw);
    }
}

/* (m,f_w)(m,u) = (m, f_w*u), (f_w*u)(x) = f_w(ux). */
void right_star(const BoundQuiverAlgebra& B, int w, int u, int level, const Scalar& c, WElt& out) {
    if (B.basis_source(u) != B.basis_source(w)) return;
    for (int x : B.block(B.basis_target(u), B.basis_target(w))) {
        const Scalar& cw = B.mul_basis(u, x)[w];
        if (!cw.is_zero()) add_term(out, WKey{level, true, x}, c * cw);
    }
}

}  // namespace

WObj left_frame(const BoundQuiverAlgebra& B, const WKey& k) {
    if (!k.dual) return WObj{k.level, B.basis_source(k.idx)};
    return WObj{k.level + 1, B.basis_target(k.idx)};
}

WObj right_frame(const BoundQuiverAlgebra& B, const WKey& k) {
    if (!k.dual) return WObj{k.level, B.basis_target(k.idx)};
    return WObj{k.level, B.basis_source(k.idx)};
}

WElt window_mul(const BoundQuiverAlgebra& B, const WElt& x, const WElt& y) {
    WElt out;
    for (const auto& [a, ca] : x) {
        for (const auto& [b, cb] : y) {
            Scalar c = ca * cb;
            if (!a.dual && !b.dual) {
                if (a.level != b.level) continue;
                const Elt& p = B.mul_basis(a.idx, b.idx);
                for (int i = 0; i < B.dim(); ++i)
                    if (!p[i].is_zero()) add_term(out, WKey{a.level, false, i}, c * p[i]);
            } else if (!a.dual && b.dual) {
                if (a.level != b.level + 1) continue;
                left_star(B, a.idx, b.idx, b.level, c, out);
            } else if (a.dual && !b.dual) {
                if (a.level != b.level) continue;
                right_star(B, a.idx, b.idx, a.level, c, out);
            }
        }
    }
    return out;
}

WElt window_add(const BoundQuiverAlgebra&, const WElt& x, const WElt& y) {
    WElt out = x;
    for (const auto& [k, c] : y) add_term(out, k, c);
    return out;
}

WElt window_scale(const Scalar& c, const WElt& x) {
    WElt out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : x) out.emplace(k, c * v);
    return out;
}

std::string wkey_str(const BoundQuiverAlgebra& B, const WKey& k) {
    std::ostringstream os;
    os << k.level << "|";
    if (k.dual) os << "D(" << B.basis_str(k.idx) << ")";
    else os << B.basis_str(k.idx);
    return os.str();
}

int RepetitiveWindow::key_index(const WKey& k) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it == keys.end() || !(*it == k)) return -1;
    return static_cast<int>(it - keys.begin());
}

RepetitiveWindow repetitive_window(const AlgebraPtr& B, int lo, int hi) {
    if (hi < lo) throw Error("BadSpec", "window needs hi >= lo");
    const Field& f = B->field();
    std::vector<WKey> keys;
    for (int m = lo; m <= hi; ++m)
        for (int i = 0; i < B->dim(); ++i) keys.push_back(WKey{m, false, i});
    for (int m = lo; m < hi; ++m)
        for (int i = 0; i < B->dim(); ++i) keys.push_back(WKey{m, true, i});
    std::sort(keys.begin(), keys.end());

    int n = static_cast<int>(keys.size());
    auto index_of = [&](const WKey& k) {
        auto it = std::lower_bound(keys.begin(), keys.end(), k);
        return (it != keys.end() && *it == k) ? static_cast<int>(it - keys.begin()) : -1;
    };

    std::vector<std::vector<StructureConstantAlgebra::Vec>> mult(
        n, std::vector<StructureConstantAlgebra::Vec>(n, StructureConstantAlgebra::Vec(n, Scalar(f))));
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = wkey_str(*B, keys[i]);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            WElt p = window_mul(*B, WElt{{keys[i], Scalar::one(f)}}, WElt{{keys[j], Scalar::one(f)}});
            for (const auto& [k, c] : p) {
                int t = index_of(k);
                if (t >= 0) mult[i][j][t] = c;  // boundary truncation
            }
        }
    }
    StructureConstantAlgebra::Vec unit(n, Scalar(f));
    for (int m = lo; m <= hi; ++m)
        for (int v = 0; v < B->quiver().num_vertices(); ++v)
            unit[index_of(WKey{m, false, B->idempotent_index(v)})] = Scalar::one(f);
    return RepetitiveWindow{B, lo, hi, keys,
                            StructureConstantAlgebra(f, std::move(names), std::move(mult), unit)};
}

/* ---- automorphisms ------------------------------------------------------ */

WObj apply_object(const AutomorphismSpec& g, const WObj& x) {
    return WObj{x.level + g.shift[x.vertex], g.perm[x.vertex]};
}

WElt apply_auto(const AutomorphismSpec& g, const WElt& x) {
    WElt out;
    for (const auto& [k, c] : x) {
        const BasisImage& im = k.dual ? g.d_image[k.idx] : g.b_image[k.idx];
        for (const WTerm& t : im.terms)
            add_term(out, WKey{k.level + im.level_offset, t.dual, t.idx}, c * t.c);
    }
    return out;
}

AutomorphismSpec nakayama(const AlgebraPtr& B) {
    AutomorphismSpec g;
    g.B = B;
    int nv = B->quiver().num_vertices();
    g.shift.assign(nv, 1);
    g.perm.resize(nv);
    for (int v = 0; v < nv; ++v) g.perm[v] = v;
    Scalar one = Scalar::one(B->field());
    for (int i = 0; i < B->dim(); ++i) {
        g.b_image.push_back(BasisImage{1, {WTerm{false, i, one}}});
        g.d_image.push_back(BasisImage{1, {WTerm{true, i, one}}});
    }
    return g;
}

AutomorphismSpec shift_automorphism(const AlgebraPtr& B, std::vector<int> shift,
                                    std::vector<int> perm) {
    AutomorphismSpec g;
    g.B = B;
    g.shift = std::move(shift);
    g.perm = std::move(perm);
    Scalar one = Scalar::one(B->field());
    g.b_image.resize(B->dim());
    g.d_image.resize(B->dim());
    int nv = B->quiver().num_vertices();
    for (int s = 0; s < nv; ++s) {
        for (int t = 0; t < nv; ++t) {
            std::vector<int> blk = B->block(s, t);
            if (blk.empty()) continue;
            int ss = g.perm[s], tt = g.perm[t];
            /* B-slot (s,t): frames (m,s) -> (m,t). */
            if (g.shift[s] == g.shift[t]) {
                std::vector<int> dst = B->block(ss, tt);
                if (dst.size() != blk.size())
                    throw Error("SlotMismatch", "block " + std::to_string(s) + "->" + std::to_string(t));
                for (size_t r = 0; r < blk.size(); ++r)
                    g.b_image[blk[r]] = BasisImage{g.shift[s], {WTerm{false, dst[r], one}}};
            } else if (g.shift[s] == g.shift[t] + 1) {
                std::vector<int> dst = B->block(tt, ss);  // image is a dual slot
                if (dst.size() != blk.size())
                    throw Error("SlotMismatch", "block " + std::to_string(s) + "->" + std::to_string(t));
                for (size_t r = 0; r < blk.size(); ++r)
                    g.b_image[blk[r]] = BasisImage{g.shift[t], {WTerm{true, dst[r], one}}};
            } else {
                throw Error("SlotMismatch",
                            "object map sends a nonzero slot to a zero slot of the repetitive algebra");
            }
            /* D-slot dual of block(s,t): frames (m+1,t) -> (m,s). */
            if (g.shift[s] == g.shift[t]) {
                std::vector<int> dst = B->block(ss, tt);
                for (size_t r = 0; r < blk.size(); ++r)
                    g.d_image[blk[r]] = BasisImage{g.shift[s], {WTerm{true, dst[r], one}}};
            } else {  // shift[t] == shift[s] - 1 here, by the check above... not necessarily
                if (g.shift[t] != g.shift[s] - 1)
                    throw Error("SlotMismatch",
                                "object map sends a dual slot to a zero slot of the repetitive algebra");
                std::vector<int> dst = B->block(tt, ss);
                for (size_t r = 0; r < blk.size(); ++r)
                    g.d_image[blk[r]] = BasisImage{g.shift[s], {WTerm{false, dst[r], one}}};
            }
        }
    }
    return g;
}

std::optional<AutomorphismSpec> complete_automorphism(
    const AlgebraPtr& B, std::vector<int> shift, std::vector<int> perm,
    const std::function<bool(const AutomorphismSpec&)>& accept) {
    const Field& f = B->field();
    const Quiver& Q = B->quiver();
    int n = B->dim();
    int nv = Q.num_vertices();
    int na = Q.num_arrows();
    if ((int)shift.size() != nv || (int)perm.size() != nv)
        throw Error("BadInput", "shift/perm size must equal the number of vertices");
    if (na > 20)
        throw Error("Unsupported", "sign search over more than 20 arrows");
    Scalar one = Scalar::one(f);

    /* Target slot of each arrow under the object map. */
    std::vector<WKey> arrow_target(na);
    std::vector<int> arrow_offset(na);
    std::vector<int> arrow_basis(na, -1);
    for (int i = 0; i < n; ++i)
        if (B->basis_path(i).length() == 1) arrow_basis[B->basis_path(i).arrows[0]] = i;
    for (int a = 0; a < na; ++a) {
        int s = Q.arrow(a).from, t = Q.arrow(a).to;
        std::vector<int> blk;
        if (shift[s] == shift[t]) {
            blk = B->block(perm[s], perm[t]);
            arrow_target[a] = WKey{0, false, blk.empty() ? -1 : blk[0]};
            arrow_offset[a] = shift[s];
        } else if (shift[s] == shift[t] + 1) {
            blk = B->block(perm[t], perm[s]);
            arrow_target[a] = WKey{0, true, blk.empty() ? -1 : blk[0]};
            arrow_offset[a] = shift[t];
        } else {
            return std::nullopt;  // arrow slot maps outside the repetitive algebra
        }
        if (blk.empty()) return std::nullopt;
        if (blk.size() != 1)
            throw Error("Unsupported", "arrow image slot of dimension > 1");
    }

    /* Target slot of each level-0 dual basis key. */
    struct DSlot {
        std::vector<WKey> keys;
        int offset = 0;
    };
    std::vector<DSlot> dslot(n);
    for (int w = 0; w < n; ++w) {
        int s = B->basis_source(w), t = B->basis_target(w);
        if (shift[s] == shift[t]) {
            for (int k : B->block(perm[s], perm[t])) dslot[w].keys.push_back(WKey{0, true, k});
        } else if (shift[t] == shift[s] - 1) {
            for (int k : B->block(perm[t], perm[s])) dslot[w].keys.push_back(WKey{0, false, k});
        } else {
            return std::nullopt;
        }
        dslot[w].offset = shift[s];
        if (dslot[w].keys.empty()) return std::nullopt;
    }
    std::vector<int> base(n);
    int nunk = 0;
    for (int w = 0; w < n; ++w) {
        base[w] = nunk;
        nunk += (int)dslot[w].keys.size();
    }

    for (long mask = 0; mask < (1L << na); ++mask) {
        std::vector<Scalar> sgn(na, one);
        for (int a = 0; a < na; ++a)
            if (mask & (1L << a)) sgn[a] = -one;
        auto arrow_img = [&](int a) {
            return WElt{{WKey{arrow_offset[a] + arrow_target[a].level, arrow_target[a].dual,
                              arrow_target[a].idx},
                         sgn[a]}};
        };

        /* Images of all B-part basis elements are forced by the arrow signs. */
        bool ok = true;
        std::vector<WElt> bimg(n);
        for (int v = 0; v < nv; ++v)
            bimg[B->idempotent_index(v)] =
                WElt{{WKey{shift[v], false, B->idempotent_index(perm[v])}, one}};
        for (int i = 0; i < n && ok; ++i) {
            const Path& p = B->basis_path(i);
            if (p.length() == 0) continue;
            WElt acc = arrow_img(p.arrows[0]);
            for (int j = 1; j < p.length() && !acc.empty(); ++j)
                acc = window_mul(*B, acc, arrow_img(p.arrows[j]));
            if (acc.empty()) ok = false;
            bimg[i] = acc;
        }
        if (!ok) continue;
        for (const PathElement& r : B->relations()) {
            WElt acc;
            for (const PathTerm& tm : r.terms) {
                int src = Q.arrow(tm.path.arrows[0]).from;
                WElt cur{{WKey{shift[src], false, B->idempotent_index(perm[src])}, tm.coef}};
                for (int a : tm.path.arrows) cur = window_mul(*B, cur, arrow_img(a));
                acc = window_add(*B, acc, cur);
            }
            if (!acc.empty()) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;

        AutomorphismSpec g;
        g.B = B;
        g.shift = shift;
        g.perm = perm;
        g.b_image.resize(n);
        g.d_image.resize(n);
        for (int i = 0; i < n && ok; ++i) {
            BasisImage im;
            bool first = true;
            for (auto& [k, c] : bimg[i]) {
                if (first) im.level_offset = k.level;
                first = false;
                if (k.level != im.level_offset) {
                    ok = false;
                    break;
                }
                im.terms.push_back(WTerm{k.dual, k.idx, c});
            }
            g.b_image[i] = im;
        }
        if (!ok) continue;

        /* Multiplicativity against the dual parts is linear in the dual-image
           coordinates once the B-part images are fixed:
             g((1,a)(0,f_w)) = g(1,a) g(0,f_w)   and
             g((0,f_w)(0,a)) = g(0,f_w) g(0,a). */
        std::map<std::pair<long, long>, int> rowindex;  // (equation, target key) -> row
        auto keycode = [nv](const WKey& k) {
            return ((long)(k.level + nv + 2) << 32) | ((long)k.dual << 31) | (long)k.idx;
        };
        std::vector<std::map<int, Scalar>> rows;
        long eqid = 0;
        auto row_of = [&](long eq, const WKey& k) {
            auto key = std::make_pair(eq, keycode(k));
            auto it = rowindex.find(key);
            if (it != rowindex.end()) return it->second;
            rowindex.emplace(key, (int)rows.size());
            rows.push_back({});
            return (int)rows.size() - 1;
        };
        auto add_entry = [&](int row, int unk, const Scalar& c) {
            auto it = rows[row].find(unk);
            if (it == rows[row].end())
                rows[row].emplace(unk, c);
            else
                it->second += c;
        };
        auto add_image_of = [&](long eq, const WElt& x, const Scalar& sign) {
            /* x lives in level-0 dual keys; substitute the unknown images. */
            for (auto& [k, c] : x) {
                int u = k.idx;
                for (size_t r = 0; r < dslot[u].keys.size(); ++r) {
                    WKey tk = dslot[u].keys[r];
                    tk.level += dslot[u].offset;
                    add_entry(row_of(eq, tk), base[u] + (int)r, sign * c);
                }
            }
        };
        for (int a = 0; a < na; ++a) {
            WElt pa = bimg[arrow_basis[a]];
            WElt pa1;
            for (auto& [k, c] : pa) pa1.emplace(WKey{k.level + 1, k.dual, k.idx}, c);
            for (int w = 0; w < n; ++w) {
                if (Q.arrow(a).to == B->basis_target(w)) {
                    long eq = eqid++;
                    add_image_of(eq,
                                 window_mul(*B, WElt{{WKey{1, false, arrow_basis[a]}, one}},
                                            WElt{{WKey{0, true, w}, one}}),
                                 one);
                    for (size_t r = 0; r < dslot[w].keys.size(); ++r) {
                        WKey tk = dslot[w].keys[r];
                        tk.level += dslot[w].offset;
                        WElt pr = window_mul(*B, pa1, WElt{{tk, one}});
                        for (auto& [k, c] : pr) add_entry(row_of(eq, k), base[w] + (int)r, -c);
                    }
                }
                if (Q.arrow(a).from == B->basis_source(w)) {
                    long eq = eqid++;
                    add_image_of(eq,
                                 window_mul(*B, WElt{{WKey{0, true, w}, one}},
                                            WElt{{WKey{0, false, arrow_basis[a]}, one}}),
                                 one);
                    for (size_t r = 0; r < dslot[w].keys.size(); ++r) {
                        WKey tk = dslot[w].keys[r];
                        tk.level += dslot[w].offset;
                        WElt pr = window_mul(*B, WElt{{tk, one}}, bimg[arrow_basis[a]]);
                        for (auto& [k, c] : pr) add_entry(row_of(eq, k), base[w] + (int)r, -c);
                    }
                }
            }
        }
        Matrix M(f, (int)rows.size(), nunk);
        for (size_t r = 0; r < rows.size(); ++r)
            for (auto& [c, v] : rows[r]) M.at((int)r, c) = v;
        Matrix NS = M.nullspace();
        if (NS.cols() == 0) continue;

        /* Candidate solutions: the nullspace basis vectors, then small random
           integer combinations of them. */
        std::vector<std::vector<Scalar>> tries;
        for (int c = 0; c < NS.cols(); ++c) {
            std::vector<Scalar> v;
            for (int i = 0; i < nunk; ++i) v.push_back(NS.at(i, c));
            tries.push_back(v);
        }
        unsigned long long st = 12345;
        for (int t = 0; t < 40; ++t) {
            std::vector<Scalar> v(nunk, Scalar(f));
            for (int c = 0; c < NS.cols(); ++c) {
                st = st * 6364136223846793005ull + 1442695040888963407ull;
                long k = (long)((st >> 33) % 5) - 2;
                if (!k) continue;
                for (int i = 0; i < nunk; ++i) v[i] += Scalar(f, k, 1) * NS.at(i, c);
            }
            tries.push_back(v);
        }
        for (auto& sol : tries) {
            for (int w = 0; w < n; ++w) {
                BasisImage im;
                im.level_offset = dslot[w].offset;
                for (size_t r = 0; r < dslot[w].keys.size(); ++r)
                    if (!sol[base[w] + r].is_zero())
                        im.terms.push_back(
                            WTerm{dslot[w].keys[r].dual, dslot[w].keys[r].idx, sol[base[w] + r]});
                g.d_image[w] = im;
            }
            if (verify_automorphism(g) && (!accept || accept(g))) return g;
        }
    }
    return std::nullopt;
}

namespace {

/* Slot partition of the level-0 basis keys, for inversion. */
struct Slot {
    bool dual;
    int s, t;  // block(s,t) (for dual slots: the dualized block)
};

std::vector<int> slot_keys(const BoundQuiverAlgebra& B, const Slot& sl) {
    return B.block(sl.s, sl.t);
}

}  // namespace

AutomorphismSpec invert_automorphism(const AutomorphismSpec& g) {
    const AlgebraPtr& B = g.B;
    const Field& f = B->field();
    int nv = B->quiver().num_vertices();
    AutomorphismSpec h;
    h.B = B;
    h.shift.assign(nv, 0);
    h.perm.assign(nv, 0);
    for (int v = 0; v < nv; ++v) {
        h.perm[g.perm[v]] = v;
        h.shift[g.perm[v]] = -g.shift[v];
    }
    h.b_image.resize(B->dim());
    h.d_image.resize(B->dim());
    for (int s = 0; s < nv; ++s) {
        for (int t = 0; t < nv; ++t) {
            for (bool dual : {false, true}) {
                std::vector<int> src = B->block(s, t);
                if (src.empty()) continue;
                /* read the forward slot map */
                int k0 = src[0];
                const BasisImage& probe = dual ? g.d_image[k0] : g.b_image[k0];
                if (probe.terms.empty())
                    throw Error("Invalid", "automorphism kills a basis element");
                bool ddual = probe.terms[0].dual;
                int off = probe.level_offset;
                std::vector<int> dst =
                    ddual ? B->block(B->basis_source(probe.terms[0].idx), B->basis_target(probe.terms[0].idx))
                          : B->block(B->basis_source(probe.terms[0].idx), B->basis_target(probe.terms[0].idx));
                if (dst.size() != src.size())
                    throw Error("Invalid", "non-square slot map");
                int d = static_cast<int>(src.size());
                Matrix M(f, d, d);
                for (int c = 0; c < d; ++c) {
                    const BasisImage& im = dual ? g.d_image[src[c]] : g.b_image[src[c]];
                    if (im.level_offset != off) throw Error("Invalid", "inconsistent slot offsets");
                    for (const WTerm& tm : im.terms) {
                        if (tm.dual != ddual) throw Error("Invalid", "mixed image slot");
                        auto it = std::find(dst.begin(), dst.end(), tm.idx);
                        if (it == dst.end()) throw Error("Invalid", "image leaves the target slot");
                        M.at(static_cast<int>(it - dst.begin()), c) = tm.c;
                    }
                }
                auto Minv = M.inverse();
                if (!Minv) throw Error("Invalid", "slot map not invertible");
                for (int r = 0; r < d; ++r) {
                    BasisImage im;
                    im.level_offset = -off;
                    for (int c = 0; c < d; ++c)
                        if (!Minv->at(c, r).is_zero())
                            im.terms.push_back(WTerm{dual, src[c], Minv->at(c, r)});
                    if (ddual) h.d_image[dst[r]] = im;
                    else h.b_image[dst[r]] = im;
                }
            }
        }
    }
    return h;
}

WElt apply_auto_power(const AutomorphismSpec& g, const WElt& x, int k) {
    if (k == 0) return x;
    WElt y = x;
    if (k > 0) {
        for (int i = 0; i < k; ++i) y = apply_auto(g, y);
    } else {
        AutomorphismSpec inv = invert_automorphism(g);
        for (int i = 0; i < -k; ++i) y = apply_auto(inv, y);
    }
    return y;
}

bool verify_automorphism(const AutomorphismSpec& g, std::string* why) {
    const AlgebraPtr& B = g.B;
    const Field& f = B->field();
    auto fail = [&](const std::string& m) {
        if (why) *why = m;
        return false;
    };
    int nv = B->quiver().num_vertices();
    if (static_cast<int>(g.perm.size()) != nv || static_cast<int>(g.shift.size()) != nv)
        return fail("object map has the wrong size");
    std::vector<int> seen(nv, 0);
    for (int v : g.perm) {
        if (v < 0 || v >= nv || seen[v]++) return fail("vertex map is not a permutation");
    }
    if (static_cast<int>(g.b_image.size()) != B->dim() ||
        static_cast<int>(g.d_image.size()) != B->dim())
        return fail("linear data has the wrong size");

    /* each image lies in the slot forced by the object map */
    Scalar one = Scalar::one(f);
    for (int i = 0; i < B->dim(); ++i) {
        for (bool dual : {false, true}) {
            WKey k{0, dual, i};
            WObj L = apply_object(g, left_frame(*B, k));
            WObj R = apply_object(g, right_frame(*B, k));
            const BasisImage& im = dual ? g.d_image[i] : g.b_image[i];
            if (im.terms.empty()) return fail("a basis element maps to zero");
            for (const WTerm& t : im.terms) {
                WKey kk{im.level_offset, t.dual, t.idx};
                if (!(left_frame(*B, kk) == L) || !(right_frame(*B, kk) == R))
                    return fail("image of " + wkey_str(*B, k) + " leaves its slot");
            }
        }
    }

    /* bijectivity via slot-map inversion */
    try {
        invert_automorphism(g);
    } catch (const Error& e) {
        return fail(std::string("not bijective: ") + e.what());
    }

    /* multiplicativity on all products reachable from levels 0 and 1 */
    std::vector<WKey> xs, ys;
    for (int i = 0; i < B->dim(); ++i) {
        xs.push_back(WKey{0, false, i});
        xs.push_back(WKey{1, false, i});
        xs.push_back(WKey{0, true, i});
        ys.push_back(WKey{0, false, i});
        ys.push_back(WKey{0, true, i});
    }
    for (const WKey& a : xs) {
        WElt ea{{a, one}};
        WElt fa = apply_auto(g, ea);
        for (const WKey& b : ys) {
            if (!(right_frame(*B, a) == left_frame(*B, b))) continue;
            WElt eb{{b, one}};
            WElt lhs = apply_auto(g, window_mul(*B, ea, eb));
            WElt rhs = window_mul(*B, fa, apply_auto(g, eb));
            if (!(lhs == rhs))
                return fail("not multiplicative on " + wkey_str(*B, a) + " * " + wkey_str(*B, b));
        }
    }
    return true;
}

bool same_object_map(const AutomorphismSpec& g1, const AutomorphismSpec& g2,
                     const AutomorphismSpec& h) {
    int nv = static_cast<int>(h.perm.size());
    for (int v = 0; v < nv; ++v) {
        WObj x = apply_object(g1, apply_object(g2, WObj{0, v}));
        if (!(x == apply_object(h, WObj{0, v}))) return false;
    }
    return true;
}

AutomorphismClass classify(const AutomorphismSpec& g) {
    if (!verify_automorphism(g)) return AutomorphismClass::Invalid;
    bool nonneg = true, all_zero = true;
    for (int s : g.shift) {
        if (s < 0) nonneg = false;
        if (s != 0) all_zero = false;
    }
    if (!nonneg) return AutomorphismClass::NotPositive;
    if (all_zero) return AutomorphismClass::Rigid;
    return AutomorphismClass::StrictlyPositive;
}

std::string automorphism_class_str(AutomorphismClass c) {
    switch (c) {
        case AutomorphismClass::Invalid: return "invalid";
        case AutomorphismClass::Rigid: return "rigid";
        case AutomorphismClass::StrictlyPositive: return "strictly_positive";
        case AutomorphismClass::Positive: return "positive";
        case AutomorphismClass::NotPositive: return "not_positive";
    }
    return "?";
}

/* ---- orbit algebras ------------------------------------------------------ */

namespace {

/* Canonical representative of the object orbit of x: the member with the
   smallest nonnegative level (smallest vertex index breaking ties), plus
   the exponent k with g^k(rep) = x. */
std::pair<WObj, int> object_rep(const AutomorphismSpec& g, const WObj& x) {
    /* walk backwards while staying at nonnegative levels */
    WObj cur = x;
    int k = 0;  // g^k(cur) = x throughout
    auto prev = [&](const WObj& o) {
        int v = 0;
        for (int i = 0; i < static_cast<int>(g.perm.size()); ++i)
            if (g.perm[i] == o.vertex) v = i;
        return WObj{o.level - g.shift[v], v};
    };
    /* levels are nondecreasing along the orbit (positive automorphism) */
    while (cur.level < 0) {
        cur = apply_object(g, cur);
        --k;
        if (k < -100000) throw Error("NotAdmissible", "object orbit does not reach level zero");
    }
    while (true) {
        WObj p = prev(cur);
        if (p.level < 0) break;
        cur = p;
        ++k;
        if (k > 100000) throw Error("NotAdmissible", "object orbit does not leave the window");
    }
    /* members at this minimal level form a run; take the smallest vertex */
    WObj best = cur;
    int bestk = k;
    WObj walk = cur;
    int wk = k;
    while (true) {
        WObj nxt = apply_object(g, walk);
        --wk;
        if (nxt.level != cur.level || nxt == cur) break;
        walk = nxt;
        if (walk.vertex < best.vertex) {
            best = walk;
            bestk = wk;
        }
    }
    return {best, bestk};
}

}  // namespace

int OrbitAlgebra::key_index(const WKey& k) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it == keys.end() || !(*it == k)) return -1;
    return static_cast<int>(it - keys.begin());
}

StructureConstantAlgebra::Vec OrbitAlgebra::project(const WElt& x) const {
    StructureConstantAlgebra::Vec out = sca.zero();
    for (const auto& [k, c] : x) {
        auto [rep, e] = object_rep(g, left_frame(*B, k));
        WElt canon = apply_auto_power(g, WElt{{k, c}}, -e);
        for (const auto& [kk, cc] : canon) {
            int i = key_index(kk);
            if (i < 0) throw Error("Internal", "orbit projection left the canonical basis");
            out[i] += cc;
        }
    }
    return out;
}

OrbitAlgebra orbit_algebra(const AlgebraPtr& B, const AutomorphismSpec& g) {
    std::string why;
    if (!verify_automorphism(g, &why)) throw Error("NotAdmissible", "invalid automorphism: " + why);
    int nv = B->quiver().num_vertices();
    /* free action with finitely many orbits: every perm-cycle must gain level */
    std::vector<int> done(nv, 0);
    int max_gain = 0;
    for (int v = 0; v < nv; ++v) {
        if (done[v]) continue;
        int gain = 0, w = v;
        do {
            if (g.shift[w] < 0) throw Error("NotAdmissible", "automorphism is not positive");
            gain += g.shift[w];
            done[w] = 1;
            w = g.perm[w];
        } while (w != v);
        if (gain == 0) throw Error("NotAdmissible", "a vertex cycle has zero total shift");
        max_gain = std::max(max_gain, gain);
    }

    OrbitAlgebra O;
    O.B = B;
    O.g = g;
    for (int m = 0; m < max_gain; ++m)
        for (int v = 0; v < nv; ++v) {
            WObj x{m, v};
            if (object_rep(g, x).first == x) O.objects.push_back(x);
        }
    auto is_canonical_obj = [&](const WObj& x) {
        return std::find(O.objects.begin(), O.objects.end(), x) != O.objects.end();
    };
    for (int m = -1; m <= max_gain; ++m) {
        for (int i = 0; i < B->dim(); ++i) {
            WKey kb{m, false, i};
            if (is_canonical_obj(left_frame(*B, kb))) O.keys.push_back(kb);
            WKey kd{m, true, i};
            if (is_canonical_obj(left_frame(*B, kd))) O.keys.push_back(kd);
        }
    }
    std::sort(O.keys.begin(), O.keys.end());

    const Field& f = B->field();
    int n = static_cast<int>(O.keys.size());
    Scalar one = Scalar::one(f);

    /* g^k(b) for the needed exponent range, per basis key */
    int K = nv * (max_gain + 3) + 3;
    std::vector<std::vector<std::pair<int, Scalar>>> sparse_mult(n * n);
    std::vector<WElt> shifted(n);
    AutomorphismSpec ginv = invert_automorphism(g);
    for (int j = 0; j < n; ++j) {
        shifted[j] = WElt{{O.keys[j], one}};
        for (int t = 0; t < K; ++t) shifted[j] = apply_auto(ginv, shifted[j]);
    }
    for (int k = -K; k <= K; ++k) {
        for (int j = 0; j < n; ++j) {
            if (k > -K) shifted[j] = apply_auto(g, shifted[j]);
            if (shifted[j].empty()) continue;
            WObj lf = left_frame(*B, shifted[j].begin()->first);
            for (int i = 0; i < n; ++i) {
                if (!(right_frame(*B, O.keys[i]) == lf)) continue;
                WElt p = window_mul(*B, WElt{{O.keys[i], one}}, shifted[j]);
                for (const auto& [kk, cc] : p) {
                    int t = O.key_index(kk);
                    if (t < 0) throw Error("Internal", "orbit product left the canonical basis");
                    sparse_mult[i * n + j].push_back({t, cc});
                }
            }
        }
    }

    std::vector<std::vector<StructureConstantAlgebra::Vec>> mult(
        n, std::vector<StructureConstantAlgebra::Vec>(n, StructureConstantAlgebra::Vec(n, Scalar(f))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [t, c] : sparse_mult[i * n + j]) mult[i][j][t] += c;

    /* sparse associativity check */
    auto sm = [&](int i, int j) -> const std::vector<std::pair<int, Scalar>>& {
        return sparse_mult[i * n + j];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (sm(i, j).empty() && sm(j, k).empty()) continue;
                std::map<int, Scalar> acc;
                for (const auto& [t, c] : sm(i, j))
                    for (const auto& [u, d] : sm(t, k)) {
                        auto it = acc.find(u);
                        if (it == acc.end()) acc.emplace(u, c * d);
                        else it->second += c * d;
                    }
                for (const auto& [t, c] : sm(j, k))
                    for (const auto& [u, d] : sm(i, t)) {
                        auto it = acc.find(u);
                        if (it == acc.end()) acc.emplace(u, -(c * d));
                        else it->second -= c * d;
                    }
                for (const auto& [u, c] : acc)
                    if (!c.is_zero()) throw Error("Internal", "orbit algebra is not associative");
            }

    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = wkey_str(*B, O.keys[i]);
    StructureConstantAlgebra::Vec unit(n, Scalar(f));
    for (const WObj& x : O.objects) {
        int i = O.key_index(WKey{x.level, false, B->idempotent_index(x.vertex)});
        if (i < 0) throw Error("Internal", "missing orbit idempotent");
        unit[i] = one;
        O.idem_key.push_back(i);
    }
    O.sca = StructureConstantAlgebra(f, std::move(names), std::move(mult), unit);
    for (int i = 0; i < n; ++i) {
        if (O.sca.mul(unit, O.sca.basis_vec(i)) != O.sca.basis_vec(i) ||
            O.sca.mul(O.sca.basis_vec(i), unit) != O.sca.basis_vec(i))
            throw Error("Internal", "orbit algebra unit failure");
    }
    return O;
}

TrivialExtension trivial_extension(const AlgebraPtr& B) {
    const Field& f = B->field();
    int d = B->dim();
    int n = 2 * d;  // B-part 0..d-1, D-part d..2d-1
    Scalar one = Scalar::one(f);
    std::vector<std::vector<StructureConstantAlgebra::Vec>> mult(
        n, std::vector<StructureConstantAlgebra::Vec>(n, StructureConstantAlgebra::Vec(n, Scalar(f))));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Elt& p = B->mul_basis(i, j);
            for (int t = 0; t < d; ++t) mult[i][j][t] = p[t];
        }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            WElt lo, ro;
            left_star(*B, i, j, 0, one, lo);   // b_i * f_j
            right_star(*B, i, j, 0, one, ro);  // f_i * b_j
            for (const auto& [k, c] : lo) mult[i][d + j][d + k.idx] = c;
            for (const auto& [k, c] : ro) mult[d + i][j][d + k.idx] = c;
        }
    std::vector<std::string> names(n);
    for (int i = 0; i < d; ++i) {
        names[i] = B->basis_str(i);
        names[d + i] = "D(" + B->basis_str(i) + ")";
    }
    StructureConstantAlgebra::Vec unit(n, Scalar(f));
    TrivialExtension T;
    T.B = B;
    for (int v = 0; v < B->quiver().num_vertices(); ++v) {
        StructureConstantAlgebra::Vec e(n, Scalar(f));
        e[B->idempotent_index(v)] = one;
        unit[B->idempotent_index(v)] = one;
        T.idempotents.push_back(e);
        T.object_names.push_back(B->quiver().vertex_name(v));
    }
    T.sca = StructureConstantAlgebra(f, std::move(names), std::move(mult), unit);
    if (!T.sca.check_associativity()) throw Error("Internal", "trivial extension not associative");
    return T;
}

/* ---- window modules and push-down ---------------------------------------- */

int WindowModule::obj_index(const WObj& x) const {
    auto it = std::lower_bound(support.begin(), support.end(), x);
    if (it == support.end() || !(*it == x)) return -1;
    return static_cast<int>(it - support.begin());
}

int WindowModule::dim_at(const WObj& x) const {
    int i = obj_index(x);
    return i < 0 ? 0 : dims[i];
}

Matrix WindowModule::action_of(const WKey& k) const {
    auto it = action.find(k);
    if (it != action.end()) return it->second;
    return Matrix(B->field(), dim_at(left_frame(*B, k)), dim_at(right_frame(*B, k)));
}

int WindowModule::total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
}

namespace {

/* Action matrices for all keys with both frames in the support, built from
   per-object bases given as window elements and right multiplication. */
WindowModule module_from_spanning(const AlgebraPtr& B, const std::vector<WObj>& support,
                                  const std::vector<std::vector<WElt>>& space_basis) {
    WindowModule M;
    M.B = B;
    M.support = support;
    for (const auto& sb : space_basis) M.dims.push_back(static_cast<int>(sb.size()));
    const Field& f = B->field();
    Scalar one = Scalar::one(f);
    /* coordinates of a window element in the basis of the space at x:
       spaces here are spanned by single keys, so match directly */
    auto coords = [&](const WElt& e, int xi) {
        Matrix c(f, M.dims[xi], 1);
        WElt rest = e;
        for (int r = 0; r < M.dims[xi]; ++r) {
            const WElt& b = space_basis[xi][r];
            if (b.size() != 1) throw Error("Internal", "window basis must be monomial");
            auto it = rest.find(b.begin()->first);
            if (it != rest.end()) {
                c.at(r, 0) = it->second / b.begin()->second;
                rest.erase(it);
            }
        }
        if (!rest.empty()) throw Error("Internal", "window action left the module");
        return c;
    };
    for (size_t li = 0; li < support.size(); ++li) {
        for (size_t ri = 0; ri < support.size(); ++ri) {
            for (int j = 0; j < B->dim(); ++j) {
                for (bool dual : {false, true}) {
                    for (int lev = support[li].level - 1; lev <= support[li].level + 1; ++lev) {
                        WKey k{lev, dual, j};
                        if (!(left_frame(*B, k) == support[li])) continue;
                        if (!(right_frame(*B, k) == support[ri])) continue;
                        Matrix act(f, M.dims[ri], M.dims[li]);
                        bool nonzero = false;
                        for (int c = 0; c < M.dims[li]; ++c) {
                            WElt img = window_mul(*B, space_basis[li][c], WElt{{k, one}});
                            Matrix col = coords(img, static_cast<int>(ri));
                            for (int r = 0; r < M.dims[ri]; ++r) {
                                act.at(r, c) = col.at(r, 0);
                                if (!col.at(r, 0).is_zero()) nonzero = true;
                            }
                        }
                        if (nonzero) M.action[k] = act;
                    }
                }
            }
        }
    }
    return M;
}

}  // namespace

WindowModule window_projective(const AlgebraPtr& B, int level, int vertex) {
    /* right module e_x Bhat, x = (level, vertex): B-part of block(vertex, -)
       at `level`, dual parts of block(-, vertex) at level-1 */
    std::vector<WObj> support;
    std::vector<std::vector<WElt>> basis;
    Scalar one = Scalar::one(B->field());
    int nv = B->quiver().num_vertices();
    for (int j = 0; j < nv; ++j) {
        std::vector<WElt> sb;
        for (int i : B->block(vertex, j)) sb.push_back(WElt{{WKey{level, false, i}, one}});
        if (!sb.empty()) {
            support.push_back(WObj{level, j});
            basis.push_back(sb);
        }
    }
    for (int j = 0; j < nv; ++j) {
        std::vector<WElt> sb;
        for (int i : B->block(j, vertex)) sb.push_back(WElt{{WKey{level - 1, true, i}, one}});
        if (!sb.empty()) {
            support.push_back(WObj{level - 1, j});
            basis.push_back(sb);
        }
    }
    std::vector<size_t> order(support.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return support[a] < support[b]; });
    std::vector<WObj> s2;
    std::vector<std::vector<WElt>> b2;
    for (size_t i : order) {
        s2.push_back(support[i]);
        b2.push_back(basis[i]);
    }
    return module_from_spanning(B, s2, b2);
}

WindowModule window_simple(const AlgebraPtr& B, int level, int vertex) {
    WindowModule M;
    M.B = B;
    M.support = {WObj{level, vertex}};
    M.dims = {1};
    return M;
}

WindowModule window_from_rep(const Representation& M, int level) {
    const AlgebraPtr& B = M.algebra();
    WindowModule W;
    W.B = B;
    int nv = B->quiver().num_vertices();
    std::vector<int> idx(nv, -1);
    for (int v = 0; v < nv; ++v) {
        if (M.dim(v) == 0) continue;
        idx[v] = static_cast<int>(W.support.size());
        W.support.push_back(WObj{level, v});
        W.dims.push_back(M.dim(v));
    }
    for (int i = 0; i < B->dim(); ++i) {
        const Path& p = B->basis_path(i);
        if (p.length() == 0) continue;
        if (idx[p.source] < 0 || idx[p.target] < 0) continue;
        Matrix a = M.evaluate(p);
        if (!a.is_zero()) W.action[WKey{level, false, i}] = a;
    }
    return W;
}

WObj apply_object_power(const AutomorphismSpec& g, const WObj& x, int k) {
    WObj y = x;
    if (k >= 0) {
        for (int i = 0; i < k; ++i) y = apply_object(g, y);
        return y;
    }
    int nv = static_cast<int>(g.perm.size());
    std::vector<int> inv(nv);
    for (int v = 0; v < nv; ++v) inv[g.perm[v]] = v;
    for (int i = 0; i < -k; ++i) y = WObj{y.level - g.shift[inv[y.vertex]], inv[y.vertex]};
    return y;
}

WindowModule twist_module(const WindowModule& M, const AutomorphismSpec& g, int k) {
    const AlgebraPtr& B = M.B;
    WindowModule T;
    T.B = B;
    for (size_t i = 0; i < M.support.size(); ++i) {
        T.support.push_back(apply_object_power(g, M.support[i], -k));
        T.dims.push_back(M.dims[i]);
    }
    /* obj_index needs sorted support */
    std::vector<size_t> order(T.support.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return T.support[a] < T.support[b]; });
    WindowModule S;
    S.B = B;
    for (size_t i : order) {
        S.support.push_back(T.support[i]);
        S.dims.push_back(T.dims[i]);
    }
    int lo = S.support.front().level, hi = S.support.back().level;
    Scalar one = Scalar::one(B->field());
    for (int m = lo - 1; m <= hi; ++m)
        for (int dual = 0; dual < 2; ++dual)
            for (int i = 0; i < B->dim(); ++i) {
                WKey key{m, dual != 0, i};
                int li = S.obj_index(left_frame(*B, key));
                int ri = S.obj_index(right_frame(*B, key));
                if (li < 0 || ri < 0) continue;
                WElt im = apply_auto_power(g, WElt{{key, one}}, k);
                Matrix a;
                bool first = true;
                for (const auto& [kk, c] : im) {
                    Matrix part = M.action_of(kk).scaled(c);
                    a = first ? part : a + part;
                    first = false;
                }
                if (!first && !a.is_zero()) S.action[key] = a;
            }
    return S;
}

Representation push_down(const WindowModule& M, const OrbitAlgebra& O, const Presentation& P) {
    const AlgebraPtr& B = O.B;
    const AlgebraPtr& A = P.algebra;
    const Field& f = B->field();
    int nv = A->quiver().num_vertices();
    if (nv != static_cast<int>(O.objects.size()))
        throw Error("BadSpec", "presentation does not match the orbit algebra");

    /* orbit class of each support object, with its exponent */
    std::vector<int> cls(M.support.size()), expo(M.support.size());
    for (size_t i = 0; i < M.support.size(); ++i) {
        auto [rep, e] = object_rep(O.g, M.support[i]);
        auto it = std::find(O.objects.begin(), O.objects.end(), rep);
        if (it == O.objects.end()) throw Error("SupportOverflow", "support object has no orbit class");
        cls[i] = static_cast<int>(it - O.objects.begin());
        expo[i] = e;
    }
    /* which orbit vertex corresponds to which presentation vertex: the
       presentation was built with vertex order = O.objects order */
    std::vector<int> dims(nv, 0);
    std::vector<std::vector<int>> parts(nv);  // support indices per vertex
    std::vector<int> offset(M.support.size(), 0);
    for (int v = 0; v < nv; ++v) {
        for (size_t i = 0; i < M.support.size(); ++i) {
            if (cls[i] != v) continue;
            parts[v].push_back(static_cast<int>(i));
            offset[i] = dims[v];
            dims[v] += M.dims[i];
        }
    }

    std::vector<Matrix> maps;
    for (int a = 0; a < A->quiver().num_arrows(); ++a) {
        int vs = A->quiver().arrow(a).from, vt = A->quiver().arrow(a).to;
        Matrix act(f, dims[vt], dims[vs]);
        const auto& lift = P.arrow_lift[a];
        for (int ki = 0; ki < static_cast<int>(O.keys.size()); ++ki) {
            if (lift[ki].is_zero()) continue;
            /* all translates of this canonical key act between matching blocks */
            for (int si : parts[vs]) {
                WElt tr = apply_auto_power(O.g, WElt{{O.keys[ki], lift[ki]}}, expo[si]);
                for (const auto& [k, c] : tr) {
                    if (!(left_frame(*B, k) == M.support[si])) continue;
                    int ti = M.obj_index(right_frame(*B, k));
                    if (ti < 0) continue;
                    if (cls[ti] != vt) throw Error("Internal", "push-down block mismatch");
                    Matrix blk = M.action_of(k).scaled(c);
                    for (int r = 0; r < blk.rows(); ++r)
                        for (int cc = 0; cc < blk.cols(); ++cc)
                            act.at(offset[ti] + r, offset[si] + cc) += blk.at(r, cc);
                }
            }
        }
        maps.push_back(act);
    }
    Representation R(A, dims, maps);
    std::string why;
    if (!R.check_relations(&why)) throw Error("Internal", "push-down failed relations: " + why);
    return R;
}

}  // namespace qk
