#include "quivkit/family.hpp"

#include <sstream>

namespace qk {

namespace {

std::string dims_str(const std::vector<int>& d) {
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

}  // namespace

TubeStats quasi_tube_stats(const TubeFragment& T) {
    if (static_cast<int>(T.layers.size()) < T.rank + 1)
        throw Error("DepthInsufficient",
                    "fragment of rank " + std::to_string(T.rank) + " knitted to depth " +
                        std::to_string(T.layers.size()) + " (< rank + 1)");
    return {T.simple_count, T.proj_count, T.rank};
}

bool is_smooth(const TubeFragment& T) {
    for (const auto& v : T.inserted)
        if (!v.projective_injective) return false;
    return true;
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::RefutedWithWitness: return "refuted-with-witness";
        default: return "inconclusive";
    }
}

std::optional<Hom> factor_through_witness(const Representation& E, const Representation& W) {
    /* composites are bilinear in (f, g), so basis pairs suffice */
    auto to = hom_basis(E, W);
    auto back = hom_basis(W, E);
    for (const auto& f : to)
        for (const auto& g : back) {
            Hom c = compose(E, f, W, g, E);
            if (!c.is_zero()) return c;
        }
    return std::nullopt;
}

FamilyReport check_ms(const std::vector<TubeFragment>& family, const Representation& S,
                      const Representation& T_mod) {
    FamilyReport rep;
    if (S.total_dim() != 1 || T_mod.total_dim() != 1)
        throw Error("BadInput", "S and T must be simple modules");
    const int nv = static_cast<int>(S.dims().size());

    rep.ms1 = true;
    for (size_t i = 0; i < family.size(); ++i) {
        TubeStats st = quasi_tube_stats(family[i]);
        rep.stats.push_back(st);
        if (st.s + st.p != st.r - 1) {
            rep.ms1 = false;
            rep.ms1_failures.push_back("fragment " + std::to_string(i) + ": s=" +
                                       std::to_string(st.s) + " p=" + std::to_string(st.p) +
                                       " r=" + std::to_string(st.r));
        }
        if (!is_smooth(family[i]))
            rep.notes.push_back("fragment " + std::to_string(i) +
                                " has a nonstable vertex that is not projective-injective");
    }

    /* allowed composition factors: S, T, the simples of the family, and the
       socles and tops of the projective modules of the family */
    std::vector<bool> allowed(nv, false);
    for (int v = 0; v < nv; ++v)
        if (S.dim(v) > 0 || T_mod.dim(v) > 0) allowed[v] = true;
    auto each_vertex = [&](const std::vector<TubeFragment>& f, auto&& fn) {
        for (size_t i = 0; i < f.size(); ++i) {
            for (const auto& layer : f[i].layers)
                for (const auto& tv : layer) fn(i, tv);
            for (const auto& tv : f[i].inserted) fn(i, tv);
        }
    };
    each_vertex(family, [&](size_t, const TubeVertex& tv) {
        if (tv.is_simple)
            for (int v = 0; v < nv; ++v)
                if (tv.M.dim(v) > 0) allowed[v] = true;
        if (tv.projective_injective) {
            auto t = top_dims(tv.M), s = socle_dims(tv.M);
            for (int v = 0; v < nv; ++v)
                if (t[v] > 0 || s[v] > 0) allowed[v] = true;
        }
    });
    rep.ms2 = true;
    each_vertex(family, [&](size_t i, const TubeVertex& tv) {
        for (int v = 0; v < nv; ++v)
            if (tv.M.dim(v) > 0 && !allowed[v]) {
                rep.ms2 = false;
                rep.ms2_failures.push_back("fragment " + std::to_string(i) + ": module " +
                                           dims_str(tv.M.dims()) + " has composition factor S(" +
                                           std::to_string(v) + ") outside the allowed set");
            }
    });
    rep.notes.push_back("composition factors checked as vertex-support containment; "
                        "multiplicities are unconstrained");

    /* per fragment, some module with soc = S and top = T */
    rep.ms3 = true;
    for (size_t i = 0; i < family.size(); ++i) {
        bool found = false;
        auto scan = [&](const TubeVertex& tv) {
            if (found) return;
            if (socle_dims(tv.M) == S.dims() && top_dims(tv.M) == T_mod.dims()) found = true;
        };
        for (const auto& layer : family[i].layers)
            for (const auto& tv : layer) scan(tv);
        for (const auto& tv : family[i].inserted) scan(tv);
        if (!found) {
            rep.ms3 = false;
            rep.ms3_failures.push_back("fragment " + std::to_string(i) +
                                       ": no module with the prescribed socle and top");
        }
    }
    rep.notes.push_back("scope: the given fragments only; completeness over all "
                        "quasi-tubes of the component quiver is not checked");
    return rep;
}

Verdict standardness_via_mouth(const TubeFragment& T, std::vector<std::string>* evidence) {
    if (T.proj_count > 0 || !T.inserted.empty())
        throw Error("HasProjectives", "mouth criterion applies to stable tubes only");
    if (T.layers.empty()) throw Error("BadInput", "empty fragment");
    const auto& mouth = T.layers[0];
    auto note = [&](const std::string& s) {
        if (evidence) evidence->push_back(s);
    };
    bool ok = true;
    for (size_t i = 0; i < mouth.size(); ++i) {
        if (!is_brick(mouth[i].M)) {
            ok = false;
            note("mouth module " + std::to_string(i) + " " + dims_str(mouth[i].M.dims()) +
                 " is not a brick");
        }
        for (size_t j = 0; j < mouth.size(); ++j) {
            if (i == j) continue;
            int h = hom_dim(mouth[i].M, mouth[j].M);
            if (h != 0) {
                ok = false;
                note("hom(mouth " + std::to_string(i) + ", mouth " + std::to_string(j) +
                     ") has dimension " + std::to_string(h));
            }
        }
    }
    if (ok) note("mouth consists of pairwise orthogonal bricks");
    return ok ? Verdict::Certified : Verdict::RefutedWithWitness;
}

std::vector<Representation> mouth_cycle(const Representation& M, int max_rank) {
    if (M.is_zero()) throw Error("BadInput", "zero module");
    std::vector<Representation> cycle{M};
    Representation X = tau(M);
    while (!(X.dims() == M.dims() && is_isomorphic(X, M))) {
        if (X.is_zero()) throw Error("NotPeriodic", "tau-orbit hits zero (projective module)");
        if (static_cast<int>(cycle.size()) >= max_rank)
            throw Error("NotPeriodic",
                        "no tau-period within " + std::to_string(max_rank) + " steps");
        cycle.push_back(X);
        X = tau(X);
    }
    return cycle;
}

std::string FamilyReport::str() const {
    std::ostringstream o;
    for (size_t i = 0; i < stats.size(); ++i)
        o << "fragment " << i << ": s=" << stats[i].s << " p=" << stats[i].p
          << " r=" << stats[i].r << "\n";
    o << "MS1 " << (ms1 ? "holds" : "fails") << "; MS2 " << (ms2 ? "holds" : "fails")
      << "; MS3 " << (ms3 ? "holds" : "fails") << "\n";
    for (const auto& s : ms1_failures) o << "  MS1: " << s << "\n";
    for (const auto& s : ms2_failures) o << "  MS2: " << s << "\n";
    for (const auto& s : ms3_failures) o << "  MS3: " << s << "\n";
    o << "standardness: " << verdict_str(standardness) << "\n";
    for (const auto& s : standardness_evidence) o << "  " << s << "\n";
    for (const auto& w : counterexamples)
        o << "  factorization witness: endomorphism of " << dims_str(w.E.dims())
          << " through " << dims_str(w.through.dims()) << (w.note.empty() ? "" : " — " + w.note)
          << "\n";
    for (const auto& s : notes) o << "note: " << s << "\n";
    return o.str();
}

}  // namespace qk
