#include "quivkit/canonical.hpp"

#include "quivkit/ar.hpp"

namespace qk {

int CanonicalAlgebra::arm_vertex(int i, int k) const {
    int idx = 1;
    for (int a = 1; a < i; ++a) idx += spec.weights[a - 1] - 1;
    return idx + (k - 1);
}

int CanonicalAlgebra::arm_arrow(int i, int k) const {
    int idx = 0;
    for (int a = 1; a < i; ++a) idx += spec.weights[a - 1];
    return idx + (k - 1);
}

CanonicalAlgebra canonical_algebra(const CanonicalSpec& spec) {
    const int m = static_cast<int>(spec.weights.size());
    if (m < 2) throw Error("BadSpec", "need at least two weights");
    if (static_cast<int>(spec.params.size()) != m)
        throw Error("BadSpec", "weights and parameters must have equal length");
    for (int p : spec.weights)
        if (p < 1) throw Error("BadSpec", "weights must be positive");
    if (!spec.params[0].infinite) throw Error("BadSpec", "first parameter must be inf");
    if (spec.params[1].infinite || !spec.params[1].value.is_zero())
        throw Error("BadSpec", "second parameter must be 0");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (spec.params[i] == spec.params[j])
                throw Error("BadSpec", "parameters must be pairwise distinct");

    std::vector<std::string> vnames{"0"};
    for (int i = 1; i <= m; ++i)
        for (int k = 1; k <= spec.weights[i - 1] - 1; ++k)
            vnames.push_back("(" + std::to_string(i) + "," + std::to_string(k) + ")");
    vnames.push_back("omega");
    const int omega = static_cast<int>(vnames.size()) - 1;

    /* temporary index helper matching CanonicalAlgebra::arm_vertex */
    auto av = [&](int i, int k) {
        int idx = 1;
        for (int a = 1; a < i; ++a) idx += spec.weights[a - 1] - 1;
        return idx + (k - 1);
    };

    std::vector<Arrow> arrows;
    for (int i = 1; i <= m; ++i) {
        int p = spec.weights[i - 1];
        for (int k = 1; k <= p; ++k) {
            int from = (k == p) ? omega : av(i, k);
            int to = (k == 1) ? 0 : av(i, k - 1);
            arrows.push_back({"a" + std::to_string(i) + "_" + std::to_string(k), from, to});
        }
    }
    Quiver q(vnames, arrows);

    auto aidx = [&](int i, int k) {
        int idx = 0;
        for (int a = 1; a < i; ++a) idx += spec.weights[a - 1];
        return idx + (k - 1);
    };
    auto arm_path = [&](int i) {
        std::vector<int> seq;
        for (int k = spec.weights[i - 1]; k >= 1; --k) seq.push_back(aidx(i, k));
        return make_path(q, seq);
    };

    std::vector<PathElement> rels;
    for (int j = 3; j <= m; ++j) {
        PathElement r;
        r.terms.push_back({Scalar::one(spec.field), arm_path(j)});
        r.terms.push_back({Scalar::one(spec.field), arm_path(1)});
        r.terms.push_back({spec.params[j - 1].value, arm_path(2)});
        rels.push_back(std::move(r));
    }

    CanonicalAlgebra C;
    C.A = std::make_shared<BoundQuiverAlgebra>(spec.field, q, rels);
    C.spec = spec;
    return C;
}

namespace {

/* index of t among the parameters, or -1 */
int param_index(const CanonicalAlgebra& C, const TubeIndex& t) {
    for (int i = 0; i < C.m(); ++i)
        if (C.spec.params[i] == t) return i + 1;
    return -1;
}

/* The nonsimple mouth module of the tube at t: zero spaces along the tube's
   own arm (index `dead`, 0 for none), K everywhere else, scalar `first(i)`
   on the first arrow of arm i and 1 on the rest. */
Representation mouth_e_module(const CanonicalAlgebra& C, int dead,
                              const std::vector<Scalar>& first) {
    const AlgebraPtr& A = C.A;
    const Field& f = A->field();
    const Quiver& q = A->quiver();
    std::vector<int> dims(q.num_vertices(), 1);
    for (int k = 1; k <= (dead >= 1 ? C.spec.weights[dead - 1] - 1 : 0); ++k)
        dims[C.arm_vertex(dead, k)] = 0;
    std::vector<Matrix> maps;
    for (int a = 0; a < q.num_arrows(); ++a)
        maps.emplace_back(f, dims[q.arrow(a).to], dims[q.arrow(a).from]);
    for (int i = 1; i <= C.m(); ++i) {
        if (i == dead) {
            /* a one-arrow dead arm keeps its (1 x 1) zero map */
            continue;
        }
        for (int k = 1; k <= C.spec.weights[i - 1]; ++k) {
            Matrix& mm = maps[C.arm_arrow(i, k)];
            mm.at(0, 0) = (k == 1) ? first[i - 1] : Scalar::one(f);
        }
    }
    Representation E(A, dims, maps);
    std::string why;
    if (!E.check_relations(&why)) throw Error("Internal", "mouth module fails relations: " + why);
    return E;
}

}  // namespace

std::vector<Representation> mouth_modules(const CanonicalAlgebra& C, const TubeIndex& t) {
    const Field& f = C.A->field();
    const Scalar one = Scalar::one(f);
    const int m = C.m();
    const int pi = param_index(C, t);
    std::vector<Scalar> first(m, one);
    int dead = pi;
    if (pi == 1) {
        /* infinity: arm 1 dies, arm j >= 3 twisted by -lambda_j */
        for (int j = 3; j <= m; ++j) first[j - 1] = -C.spec.params[j - 1].value;
    } else if (pi == 2) {
        /* zero: arm 2 dies, arm j >= 3 twisted by -1 */
        for (int j = 3; j <= m; ++j) first[j - 1] = -one;
    } else if (pi >= 3) {
        const Scalar& lj = C.spec.params[pi - 1].value;
        first[0] = -lj;
        for (int i = 3; i <= m; ++i)
            if (i != pi) first[i - 1] = lj - C.spec.params[i - 1].value;
    } else {
        if (t.infinite) throw Error("BadIndex", "unreachable");
        const Scalar& l = t.value;
        first[0] = -l;
        for (int j = 3; j <= m; ++j) first[j - 1] = l - C.spec.params[j - 1].value;
        dead = 0;
    }
    std::vector<Representation> mouth;
    if (pi >= 1)
        for (int k = 1; k <= C.spec.weights[pi - 1] - 1; ++k)
            mouth.push_back(simple(C.A, C.arm_vertex(pi, k)));
    mouth.push_back(mouth_e_module(C, dead, first));
    return mouth;
}

int tube_rank(const CanonicalAlgebra& C, const TubeIndex& t) {
    int pi = param_index(C, t);
    return pi >= 1 ? C.spec.weights[pi - 1] : 1;
}

FamilyCheckReport verify_canonical_family(const CanonicalAlgebra& C,
                                          const std::vector<TubeIndex>& sample) {
    FamilyCheckReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.failures.push_back(s);
    };
    if (C.m() == 3)
        rep.warnings.push_back(
            "three arms: the twisted-leg normal form has no untwisted third-arm rows; "
            "review mouth matrices manually");

    std::vector<std::vector<Representation>> mouths;
    for (const auto& t : sample) mouths.push_back(mouth_modules(C, t));

    for (size_t s = 0; s < sample.size(); ++s) {
        const std::string tag = "tube " + sample[s].str();
        const auto& mouth = mouths[s];
        for (size_t i = 0; i < mouth.size(); ++i) {
            std::string why;
            if (!mouth[i].check_relations(&why)) fail(tag + ": relations fail: " + why);
            if (!is_brick(mouth[i]))
                fail(tag + ": mouth module " + std::to_string(i) + " is not a brick");
            for (size_t j = 0; j < mouth.size(); ++j)
                if (i != j && hom_dim(mouth[i], mouth[j]) != 0)
                    fail(tag + ": mouth modules " + std::to_string(i) + "," + std::to_string(j) +
                         " are not orthogonal");
        }
        /* tau must act as one cycle of length tube_rank */
        int r = tube_rank(C, sample[s]);
        if (static_cast<int>(mouth.size()) != r)
            fail(tag + ": mouth size differs from the tube rank");
        try {
            knit_tube(mouth, 1);
        } catch (const Error& e) {
            fail(tag + ": " + e.what());
        }
        /* orthogonality across tubes */
        for (size_t s2 = s + 1; s2 < sample.size(); ++s2)
            for (const auto& X : mouth)
                for (const auto& Y : mouths[s2])
                    if (hom_dim(X, Y) != 0 || hom_dim(Y, X) != 0)
                        fail(tag + " vs tube " + sample[s2].str() + ": nonzero hom space");
    }
    return rep;
}

}  // namespace qk
