#include "gral/io.hpp"

#include <json.hpp>

#include <sstream>

namespace gral {
namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<Scalar> parse_vec(Field f, const ordered_json& j, int32_t dim, const std::string& where) {
    if (!j.is_array() || int32_t(j.size()) != dim)
        throw Error("ValidationError", where + ": vector of length " + std::to_string(dim) + " expected");
    std::vector<Scalar> v;
    for (const auto& e : j) v.push_back(Scalar::parse(f, e.get<std::string>()));
    return v;
}

ordered_json dump_svec_dense(const SVec& v, int32_t dim, Field f) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : svec_to_dense(v, dim, f)) arr.push_back(s.to_string());
    return arr;
}

ordered_json dump_subspace(const Subspace& u) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : u.basis()) arr.push_back(dump_svec_dense(row, u.ambient_dim(), u.field()));
    return arr;
}

Subspace parse_subspace(Field f, int32_t dim, const ordered_json& j, const std::string& where) {
    if (!j.is_array()) throw Error("ValidationError", where + ": list of vectors expected");
    SpanBuilder b(f, dim);
    for (const auto& row : j) b.insert(svec_from_dense(parse_vec(f, row, dim, where)));
    return b.finish();
}

ordered_json dump_mat(const Mat& m) {
    ordered_json rows = ordered_json::array();
    for (int32_t i = 0; i < m.rows; ++i) {
        ordered_json row = ordered_json::array();
        for (int32_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat parse_mat(Field f, const ordered_json& j, int32_t rows, int32_t cols, const std::string& where) {
    Mat m(f, rows, cols);
    if (!j.is_array() || int32_t(j.size()) != rows)
        throw Error("ValidationError", where + ": matrix with " + std::to_string(rows) + " rows expected");
    for (int32_t i = 0; i < rows; ++i) {
        auto row = parse_vec(f, j[size_t(i)], cols, where);
        for (int32_t k = 0; k < cols; ++k) m.at(i, k) = row[size_t(k)];
    }
    return m;
}

ordered_json dump_algebra(const Algebra& a) {
    ordered_json j;
    j["dim"] = a.dim();
    j["field"] = a.field().to_string();
    ordered_json sc = ordered_json::array();
    for (int32_t i = 0; i < a.dim(); ++i)
        for (int32_t k = 0; k < a.dim(); ++k)
            if (const SVec* p = a.product(i, k))
                sc.push_back(ordered_json::array({i, k, dump_svec_dense(*p, a.dim(), a.field())}));
    j["sc"] = std::move(sc);
    return j;
}

Algebra parse_algebra(Field f, const ordered_json& j, const std::string& where) {
    if (!j.contains("dim")) throw Error("ValidationError", where + ": missing dim");
    const int32_t dim = j.at("dim").get<int32_t>();
    if (j.contains("field") && Field::parse(j.at("field").get<std::string>()) != f)
        throw Error("ValidationError", where + ": object field differs from the document field");
    Algebra a(f, dim);
    for (const auto& entry : j.at("sc")) {
        if (!entry.is_array() || entry.size() != 3)
            throw Error("ValidationError", where + ": sc entries are [i, j, coords]");
        a.set_product(entry[0].get<int32_t>(), entry[1].get<int32_t>(),
                      svec_from_dense(parse_vec(f, entry[2], dim, where)));
    }
    return a;
}

ordered_json dump_graded_algebra(const GradedAlgebra& b) {
    ordered_json j = dump_algebra(b.algebra());
    j["degree"] = b.degrees();
    return j;
}

GradedAlgebra parse_graded_algebra(Field f, const FiniteGroup& g, const ordered_json& j,
                                   const std::string& where) {
    Algebra a = parse_algebra(f, j, where);
    if (!j.contains("degree")) throw Error("ValidationError", where + ": missing degree list");
    std::vector<int32_t> deg = j.at("degree").get<std::vector<int32_t>>();
    try {
        return GradedAlgebra::validate(std::move(a), g, std::move(deg));
    } catch (const Error& e) {
        throw Error("ValidationError", where + ": " + e.what());
    }
}

ordered_json dump_partial_action(const PartialAction& p) {
    ordered_json j;
    j["algebra"] = dump_algebra(p.algebra());
    j["flavor"] = p.flavor() == PartialAction::Flavor::product ? "product" : "partial";
    ordered_json domains = ordered_json::array();
    ordered_json maps = ordered_json::array();
    for (int32_t t = 0; t < p.group().order(); ++t) {
        domains.push_back(dump_subspace(p.domain(t)));
        maps.push_back(dump_mat(p.map(t)));
    }
    j["domains"] = std::move(domains);
    j["maps"] = std::move(maps);
    return j;
}

PartialAction parse_partial_action(Field f, const FiniteGroup& g, const ordered_json& j,
                                   const std::string& where) {
    Algebra a = parse_algebra(f, j.at("algebra"), where);
    std::vector<Subspace> domains;
    std::vector<Mat> maps;
    const auto& jd = j.at("domains");
    const auto& jm = j.at("maps");
    if (int32_t(jd.size()) != g.order() || int32_t(jm.size()) != g.order())
        throw Error("ValidationError", where + ": one domain and one map per group element");
    for (int32_t t = 0; t < g.order(); ++t)
        domains.push_back(parse_subspace(f, a.dim(), jd[size_t(t)], where));
    for (int32_t t = 0; t < g.order(); ++t)
        maps.push_back(parse_mat(f, jm[size_t(t)], a.dim(), domains[size_t(g.inv(t))].rank(), where));
    const bool product = j.value("flavor", "product") == std::string("product");
    try {
        return product ? PartialAction::validate_product(g, std::move(a), std::move(domains),
                                                         std::move(maps))
                       : PartialAction::validate_partial(g, std::move(a), std::move(domains),
                                                          std::move(maps));
    } catch (const Error& e) {
        throw Error("ValidationError", where + ": " + e.what());
    }
}

ordered_json dump_global_action(const GlobalAction& b) {
    ordered_json j;
    j["algebra"] = dump_algebra(b.algebra);
    ordered_json maps = ordered_json::array();
    for (const auto& m : b.maps) maps.push_back(dump_mat(m));
    j["auto"] = std::move(maps);
    return j;
}

GlobalAction parse_global_action(Field f, const FiniteGroup& g, const ordered_json& j,
                                 const std::string& where) {
    Algebra a = parse_algebra(f, j.at("algebra"), where);
    std::vector<Mat> maps;
    const auto& jm = j.at("auto");
    if (int32_t(jm.size()) != g.order())
        throw Error("ValidationError", where + ": one automorphism per group element");
    for (const auto& m : jm) maps.push_back(parse_mat(f, m, a.dim(), a.dim(), where));
    try {
        return GlobalAction::validate(g, std::move(a), std::move(maps));
    } catch (const Error& e) {
        throw Error("ValidationError", where + ": " + e.what());
    }
}

}  // namespace

const DocObject* Document::find(const std::string& name) const {
    for (const auto& [n, obj] : objects)
        if (n == name) return &obj;
    return nullptr;
}

const std::pair<std::string, DocObject>& Document::unique(DocObject::Kind kind) const {
    const std::pair<std::string, DocObject>* found = nullptr;
    for (const auto& entry : objects) {
        if (entry.second.kind != kind) continue;
        if (found) throw Error("AmbiguousObject", "several objects of kind " + kind_name(kind) +
                                                      "; name one explicitly");
        found = &entry;
    }
    if (!found) throw Error("MissingObject", "no object of kind " + kind_name(kind));
    return *found;
}

std::string kind_name(DocObject::Kind k) {
    switch (k) {
        case DocObject::Kind::graded_algebra: return "graded_algebra";
        case DocObject::Kind::partial_action: return "partial_action";
        case DocObject::Kind::global_action: return "global_action";
        case DocObject::Kind::restriction: return "restriction";
        case DocObject::Kind::context: return "context";
        case DocObject::Kind::linear_map: return "linear_map";
    }
    return "?";
}

Document parse_document(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Count lines up to the reported byte offset.
        size_t line = 1;
        for (size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw Error("ParseError", "line " + std::to_string(line) + ": " + e.what());
    }
    Document doc;
    try {
        if (j.value("format_version", "") != "1")
            throw Error("ParseError", "unsupported format_version");
        doc.format_version = "1";
        doc.field = Field::parse(j.at("field").get<std::string>());
        const auto& jg = j.at("group");
        doc.group = FiniteGroup::validate(jg.at("table").get<std::vector<std::vector<int32_t>>>(),
                                          jg.at("identity").get<int32_t>(),
                                          jg.value("labels", std::vector<std::string>{}));
        if (jg.contains("order") && jg.at("order").get<int32_t>() != doc.group.order())
            throw Error("ValidationError", "group: order does not match the table");
    } catch (const nlohmann::json::exception& e) {
        throw Error("ParseError", std::string("document header: ") + e.what());
    }

    if (!j.contains("objects")) return doc;
    for (const auto& [name, jo] : j.at("objects").items()) {
        DocObject obj;
        std::string kind;
        try {
            kind = jo.at("kind").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw Error("ParseError", name + ": " + e.what());
        }
        try {
            if (kind == "graded_algebra") {
                obj.kind = DocObject::Kind::graded_algebra;
                obj.algebra = parse_graded_algebra(doc.field, doc.group, jo, name);
            } else if (kind == "partial_action") {
                obj.kind = DocObject::Kind::partial_action;
                obj.action = parse_partial_action(doc.field, doc.group, jo, name);
            } else if (kind == "global_action") {
                obj.kind = DocObject::Kind::global_action;
                obj.global = parse_global_action(doc.field, doc.group, jo, name);
            } else if (kind == "restriction") {
                obj.kind = DocObject::Kind::restriction;
                obj.global = parse_global_action(doc.field, doc.group, jo.at("action"), name);
                obj.ideal =
                    parse_subspace(doc.field, obj.global->algebra.dim(), jo.at("ideal"), name);
                obj.action = restrict_global(*obj.global, *obj.ideal);
            } else if (kind == "context") {
                obj.kind = DocObject::Kind::context;
                GradedAlgebra amb = parse_graded_algebra(doc.field, doc.group, jo.at("ambient"), name);
                const int32_t dim = amb.dim();
                EmbeddedContext ctx{std::move(amb),
                                    parse_subspace(doc.field, dim, jo.at("A"), name),
                                    parse_subspace(doc.field, dim, jo.at("B"), name),
                                    parse_subspace(doc.field, dim, jo.at("X"), name),
                                    parse_subspace(doc.field, dim, jo.at("Y"), name)};
                validate_embedded(ctx);
                obj.embedded = std::move(ctx);
            } else if (kind == "linear_map") {
                obj.kind = DocObject::Kind::linear_map;
                obj.map_matrix = parse_mat(doc.field, jo.at("matrix"), jo.at("rows").get<int32_t>(),
                                           jo.at("cols").get<int32_t>(), name);
            } else {
                throw Error("ValidationError", name + ": unknown kind " + kind);
            }
        } catch (const nlohmann::json::exception& e) {
            throw Error("ParseError", name + ": " + e.what());
        } catch (const Error& e) {
            if (e.code() == "ValidationError") throw;
            throw Error("ValidationError", name + ": " + e.what());
        }
        if (jo.contains("meta")) obj.meta = jo.at("meta").dump();
        doc.objects.emplace_back(name, std::move(obj));
    }
    return doc;
}

std::string serialize_document(const Document& doc) {
    ordered_json j;
    j["format_version"] = doc.format_version;
    j["field"] = doc.field.to_string();
    ordered_json jg;
    jg["order"] = doc.group.order();
    jg["table"] = doc.group.table();
    jg["identity"] = doc.group.identity();
    jg["labels"] = doc.group.labels();
    j["group"] = std::move(jg);
    ordered_json objs = ordered_json::object();
    for (const auto& [name, obj] : doc.objects) {
        ordered_json jo;
        jo["kind"] = kind_name(obj.kind);
        switch (obj.kind) {
            case DocObject::Kind::graded_algebra: {
                ordered_json body = dump_graded_algebra(*obj.algebra);
                for (auto& [k, v] : body.items()) jo[k] = v;
                break;
            }
            case DocObject::Kind::partial_action: {
                ordered_json body = dump_partial_action(*obj.action);
                for (auto& [k, v] : body.items()) jo[k] = v;
                break;
            }
            case DocObject::Kind::global_action: {
                ordered_json body = dump_global_action(*obj.global);
                for (auto& [k, v] : body.items()) jo[k] = v;
                break;
            }
            case DocObject::Kind::restriction: {
                jo["action"] = dump_global_action(*obj.global);
                jo["ideal"] = dump_subspace(*obj.ideal);
                break;
            }
            case DocObject::Kind::context: {
                jo["ambient"] = dump_graded_algebra(obj.embedded->C);
                jo["A"] = dump_subspace(obj.embedded->A);
                jo["B"] = dump_subspace(obj.embedded->B);
                jo["X"] = dump_subspace(obj.embedded->X);
                jo["Y"] = dump_subspace(obj.embedded->Y);
                break;
            }
            case DocObject::Kind::linear_map: {
                jo["rows"] = obj.map_matrix->rows;
                jo["cols"] = obj.map_matrix->cols;
                jo["matrix"] = dump_mat(*obj.map_matrix);
                break;
            }
        }
        if (!obj.meta.empty()) jo["meta"] = ordered_json::parse(obj.meta);
        objs[name] = std::move(jo);
    }
    j["objects"] = std::move(objs);
    return j.dump(2) + "\n";
}

std::string reports_to_machine(const std::vector<VerificationReport>& reports) {
    ordered_json j;
    j["format_version"] = "1";
    ordered_json runs = ordered_json::array();
    bool all = true;
    for (const auto& rep : reports) {
        ordered_json jr;
        jr["theorem"] = rep.theorem;
        jr["fixture"] = rep.fixture;
        ordered_json checks = ordered_json::array();
        for (const auto& c : rep.checks) {
            ordered_json jc;
            jc["name"] = c.name;
            jc["expected"] = c.expected;
            jc["computed"] = c.computed;
            jc["pass"] = c.pass;
            checks.push_back(std::move(jc));
        }
        jr["checks"] = std::move(checks);
        jr["pass"] = rep.pass();
        all = all && rep.pass();
        runs.push_back(std::move(jr));
    }
    j["runs"] = std::move(runs);
    j["pass"] = all;
    return j.dump(2) + "\n";
}

std::vector<VerificationReport> reports_from_machine(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    std::vector<VerificationReport> out;
    for (const auto& jr : j.at("runs")) {
        VerificationReport rep;
        rep.theorem = jr.at("theorem").get<std::string>();
        rep.fixture = jr.at("fixture").get<std::string>();
        for (const auto& jc : jr.at("checks"))
            rep.record(jc.at("name").get<std::string>(), jc.at("expected").get<std::string>(),
                       jc.at("computed").get<std::string>(), jc.at("pass").get<bool>());
        if (rep.pass() != jr.at("pass").get<bool>())
            throw Error("ParseError", "inconsistent pass flag in report");
        out.push_back(std::move(rep));
    }
    return out;
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    int failed = 0, total = 0;
    for (const auto& rep : reports)
        for (const auto& c : rep.checks) {
            ++total;
            if (!c.pass) ++failed;
        }
    // Failures first, so a broken run surfaces immediately.
    for (bool want_pass : {false, true}) {
        for (const auto& rep : reports) {
            for (const auto& c : rep.checks) {
                if (c.pass != want_pass) continue;
                os << (c.pass ? "pass" : "FAIL") << "  " << rep.theorem;
                if (!rep.fixture.empty()) os << "[" << rep.fixture << "]";
                os << "  " << c.name << "  expected " << c.expected << ", computed " << c.computed
                   << "\n";
            }
        }
        if (!want_pass && failed == 0) continue;
    }
    os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " checks FAILED") << " ("
       << total << " total)\n";
    return os.str();
}

}  // namespace gral
