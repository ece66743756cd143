#include "quivkit/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qk::io {

using nlohmann::json;

namespace {

json field_json(const Field& f) { return json{{"p", f.p}}; }

Field field_from(const json& j) {
    long p = j.at("p").get<long>();
    return p == 0 ? Field::rationals() : Field::prime(p);
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from(const Field& f, const json& j) {
    int r = j.at("rows").get<int>(), c = j.at("cols").get<int>();
    Matrix m(f, r, c);
    const json& e = j.at("entries");
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < c; ++k) m.at(i, k) = Scalar::parse(f, e[i][k].get<std::string>());
    return m;
}

json relation_json(const Quiver& q, const PathElement& rel) {
    json terms = json::array();
    for (const auto& t : rel.terms) {
        json arrows = json::array();
        for (int a : t.path.arrows) arrows.push_back(q.arrow(a).name);
        terms.push_back(json{{"coef", t.coef.str()}, {"arrows", std::move(arrows)}});
    }
    return terms;
}

PathElement relation_from(const Field& f, const Quiver& q, const json& j) {
    std::vector<PathTerm> terms;
    for (const auto& t : j) {
        std::vector<int> arrows;
        for (const auto& name : t.at("arrows")) {
            int a = q.arrow_index(name.get<std::string>());
            if (a < 0) throw Error("BadInput", "unknown arrow " + name.get<std::string>());
            arrows.push_back(a);
        }
        terms.push_back({Scalar::parse(f, t.at("coef").get<std::string>()), make_path(q, arrows)});
    }
    return make_relation(q, std::move(terms));
}

json quiver_json(const Quiver& q) {
    json arrows = json::array();
    for (const auto& a : q.arrows())
        arrows.push_back(json{{"name", a.name},
                              {"from", q.vertex_name(a.from)},
                              {"to", q.vertex_name(a.to)}});
    return json{{"vertices", q.vertices()}, {"arrows", std::move(arrows)}};
}

Quiver quiver_from(const json& j) {
    std::vector<std::string> verts = j.at("vertices").get<std::vector<std::string>>();
    auto vidx = [&](const std::string& n) {
        for (size_t i = 0; i < verts.size(); ++i)
            if (verts[i] == n) return static_cast<int>(i);
        throw Error("BadInput", "unknown vertex " + n);
    };
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows"))
        arrows.push_back(Arrow{a.at("name").get<std::string>(),
                               vidx(a.at("from").get<std::string>()),
                               vidx(a.at("to").get<std::string>())});
    return Quiver(std::move(verts), std::move(arrows));
}

json tube_index_json(const TubeIndex& t) {
    return t.infinite ? json("inf") : json(t.value.str());
}

TubeIndex tube_index_from(const Field& f, const json& j) {
    std::string s = j.get<std::string>();
    if (s == "inf") return TubeIndex::inf(f);
    return TubeIndex::at(Scalar::parse(f, s));
}

json basis_images_json(const std::vector<BasisImage>& v) {
    json out = json::array();
    for (const auto& bi : v) {
        json terms = json::array();
        for (const auto& t : bi.terms)
            terms.push_back(json{{"dual", t.dual}, {"idx", t.idx}, {"c", t.c.str()}});
        out.push_back(json{{"offset", bi.level_offset}, {"terms", std::move(terms)}});
    }
    return out;
}

std::vector<BasisImage> basis_images_from(const Field& f, const json& j) {
    std::vector<BasisImage> out;
    for (const auto& bi : j) {
        BasisImage b;
        b.level_offset = bi.at("offset").get<int>();
        for (const auto& t : bi.at("terms"))
            b.terms.push_back(WTerm{t.at("dual").get<bool>(), t.at("idx").get<int>(),
                                    Scalar::parse(f, t.at("c").get<std::string>())});
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace

std::string quiver_to_json(const Quiver& q) { return quiver_json(q).dump(2); }
Quiver quiver_from_json(const std::string& text) { return quiver_from(json::parse(text)); }

std::string algebra_to_json(const BoundQuiverAlgebra& A) {
    json rels = json::array();
    for (const auto& r : A.relations()) rels.push_back(relation_json(A.quiver(), r));
    return json{{"field", field_json(A.field())},
                {"quiver", quiver_json(A.quiver())},
                {"relations", std::move(rels)}}
        .dump(2);
}

AlgebraPtr algebra_from_json(const std::string& text) {
    json j = json::parse(text);
    Field f = field_from(j.at("field"));
    Quiver q = quiver_from(j.at("quiver"));
    std::vector<PathElement> rels;
    for (const auto& r : j.value("relations", json::array())) rels.push_back(relation_from(f, q, r));
    return std::make_shared<BoundQuiverAlgebra>(f, q, rels);
}

std::string rep_to_json(const Representation& M) {
    json maps = json::array();
    for (int a = 0; a < M.algebra()->quiver().num_arrows(); ++a)
        maps.push_back(matrix_json(M.map(a)));
    return json{{"dims", M.dims()}, {"maps", std::move(maps)}}.dump(2);
}

Representation rep_from_json(const AlgebraPtr& A, const std::string& text) {
    json j = json::parse(text);
    std::vector<int> dims = j.at("dims").get<std::vector<int>>();
    std::vector<Matrix> maps;
    for (const auto& m : j.at("maps")) maps.push_back(matrix_from(A->field(), m));
    return Representation(A, std::move(dims), std::move(maps));
}

std::string automorphism_to_json(const AutomorphismSpec& g) {
    return json{{"shift", g.shift},
                {"perm", g.perm},
                {"b_image", basis_images_json(g.b_image)},
                {"d_image", basis_images_json(g.d_image)}}
        .dump(2);
}

AutomorphismSpec automorphism_from_json(const AlgebraPtr& B, const std::string& text) {
    json j = json::parse(text);
    std::vector<int> shift = j.at("shift").get<std::vector<int>>();
    std::vector<int> perm = j.at("perm").get<std::vector<int>>();
    if (j.contains("b_image")) {
        AutomorphismSpec g;
        g.B = B;
        g.shift = std::move(shift);
        g.perm = std::move(perm);
        g.b_image = basis_images_from(B->field(), j.at("b_image"));
        g.d_image = basis_images_from(B->field(), j.at("d_image"));
        std::string why;
        if (!verify_automorphism(g, &why)) throw Error("InvalidAutomorphism", why);
        return g;
    }
    std::string mode = j.value("data", "identity");
    if (mode == "identity") {
        AutomorphismSpec g = shift_automorphism(B, std::move(shift), std::move(perm));
        std::string why;
        if (!verify_automorphism(g, &why)) throw Error("InvalidAutomorphism", why);
        return g;
    }
    if (mode == "search") {
        auto g = complete_automorphism(B, std::move(shift), std::move(perm));
        if (!g) throw Error("NoAutomorphism", "slot-data search exhausted for the object map");
        return *g;
    }
    throw Error("BadInput", "unknown automorphism data mode " + mode);
}

std::string branch_spec_to_json(const BranchExtensionSpec& spec) {
    const auto& C = spec.base;
    json atts = json::array();
    for (const auto& at : spec.attachments) {
        /* locate the attachment module among the mouth modules of the base */
        json where;
        for (const auto& t : C.spec.params) {
            auto mouth = mouth_modules(C, t);
            for (size_t i = 0; i < mouth.size(); ++i)
                if (mouth[i].dims() == at.E.dims() && is_isomorphic(mouth[i], at.E))
                    where = json{{"tube", tube_index_json(t)}, {"mouth_index", i}};
        }
        if (where.is_null()) throw Error("BadInput", "attachment module is not a mouth module");
        json rels = json::array();
        for (const auto& r : at.branch.relations) rels.push_back(relation_json(at.branch.quiver, r));
        atts.push_back(json{{"at", where},
                            {"connector", at.connector_name},
                            {"branch", json{{"quiver", quiver_json(at.branch.quiver)},
                                            {"relations", std::move(rels)},
                                            {"root", at.branch.root}}}});
    }
    json params = json::array();
    for (const auto& t : C.spec.params) params.push_back(tube_index_json(t));
    return json{{"base", json{{"field", field_json(C.spec.field)},
                              {"weights", C.spec.weights},
                              {"params", std::move(params)}}},
                {"coextension", spec.coextension},
                {"attachments", std::move(atts)}}
        .dump(2);
}

BranchExtensionSpec branch_spec_from_json(const std::string& text) {
    json j = json::parse(text);
    CanonicalSpec cs;
    cs.field = field_from(j.at("base").at("field"));
    cs.weights = j.at("base").at("weights").get<std::vector<int>>();
    for (const auto& t : j.at("base").at("params")) cs.params.push_back(tube_index_from(cs.field, t));
    BranchExtensionSpec spec;
    spec.base = canonical_algebra(cs);
    spec.coextension = j.value("coextension", false);
    for (const auto& at : j.at("attachments")) {
        TubeIndex t = tube_index_from(cs.field, at.at("at").at("tube"));
        auto mouth = mouth_modules(spec.base, t);
        size_t idx = at.at("at").at("mouth_index").get<size_t>();
        if (idx >= mouth.size()) throw Error("BadInput", "mouth index out of range");
        Branch br;
        br.quiver = quiver_from(at.at("branch").at("quiver"));
        for (const auto& r : at.at("branch").value("relations", json::array()))
            br.relations.push_back(relation_from(cs.field, br.quiver, r));
        br.root = at.at("branch").value("root", 0);
        spec.attachments.push_back(
            BranchAttachment{mouth[idx], std::move(br), at.at("connector").get<std::string>()});
    }
    return spec;
}

std::string family_report_to_json(const FamilyReport& r) {
    json stats = json::array();
    for (const auto& s : r.stats) stats.push_back(json{{"s", s.s}, {"p", s.p}, {"r", s.r}});
    json wit = json::array();
    for (const auto& w : r.counterexamples)
        wit.push_back(json{{"endomorphism_of", w.E.dims()},
                           {"through", w.through.dims()},
                           {"note", w.note}});
    return json{{"stats", std::move(stats)},
                {"ms1", r.ms1},
                {"ms2", r.ms2},
                {"ms3", r.ms3},
                {"ms1_failures", r.ms1_failures},
                {"ms2_failures", r.ms2_failures},
                {"ms3_failures", r.ms3_failures},
                {"standardness", verdict_str(r.standardness)},
                {"standardness_evidence", r.standardness_evidence},
                {"factorization_witnesses", std::move(wit)},
                {"notes", r.notes}}
        .dump(2);
}

std::string match_result_to_json(const MatchResult& r) {
    return json{{"matched", r.matched}, {"detail", r.detail}, {"vertex_map", r.vertex_map}}
        .dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IO", "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("IO", "cannot write " + path);
    out << content;
}

}  // namespace qk::io
