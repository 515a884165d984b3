#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gral/fixtures.hpp"
#include "gral/io.hpp"
#include "gral/theorems.hpp"

using namespace gral;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("ParseError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error("ParseError", "cannot write " + path);
    out << text;
}

const DocObject& pick(const Document& doc, DocObject::Kind kind, const std::string& name) {
    if (name.empty()) return doc.unique(kind).second;
    const DocObject* obj = doc.find(name);
    if (!obj) throw Error("MissingObject", "no object named " + name);
    if (obj->kind != kind)
        throw Error("MissingObject", name + " is not of kind " + kind_name(kind));
    return *obj;
}

Document fixture_document(const std::string& id, Field f) {
    Fixture fx = fixture(id, f);
    Document doc;
    doc.field = f;
    DocObject obj;
    if (fx.algebra) {
        doc.group = fx.algebra->group();
        obj.kind = DocObject::Kind::graded_algebra;
        obj.algebra = fx.algebra;
    } else {
        doc.group = fx.global->group;
        obj.kind = DocObject::Kind::restriction;
        obj.global = fx.global;
        obj.ideal = fx.ideal;
        obj.action = fx.action;
    }
    obj.meta = "{\"description\":\"" + fx.description + "\"}";
    doc.objects.emplace_back(id, std::move(obj));
    return doc;
}

int emit_reports(const std::vector<VerificationReport>& reports, const std::string& mode) {
    std::string text = mode == "machine" ? reports_to_machine(reports) : reports_to_text(reports);
    // GRAL_COLOR=1 colorizes text reports; machine reports stay untouched.
    const char* color = std::getenv("GRAL_COLOR");
    if (mode != "machine" && color && std::string(color) == "1") {
        std::string colored;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.rfind("FAIL", 0) == 0 || line.find("FAILED") != std::string::npos)
                colored += "\033[31m" + line + "\033[0m\n";
            else if (line.rfind("pass", 0) == 0)
                colored += "\033[32m" + line + "\033[0m\n";
            else
                colored += line + "\n";
        }
        text = std::move(colored);
    }
    std::cout << text;
    for (const auto& r : reports)
        if (!r.pass()) return kExitFail;
    return kExitPass;
}

// The sign twist of a group algebra style fixture, when one exists, gives a
// nontrivial morphism for the naturality square.
std::optional<LinearMap> naturality_morphism(const GradedAlgebra& b) {
    const Field f = b.field();
    Mat m = Mat::identity(f, b.dim());
    bool nontrivial = false;
    for (int32_t i = 0; i < b.dim(); ++i)
        if (b.degree(i) != b.group().identity()) {
            m.at(i, i) = -Scalar::one(f);
            nontrivial = true;
        }
    if (!nontrivial) return std::nullopt;
    LinearMap lm{std::move(m)};
    if (!is_multiplicative(b.algebra(), b.algebra(), lm)) return std::nullopt;
    return lm;
}

std::vector<VerificationReport> run_suite(Field f, int32_t seeds, uint64_t seed_base) {
    std::vector<VerificationReport> out;
    auto push = [&](VerificationReport rep) { out.push_back(std::move(rep)); };

    for (const auto* id : {"F1", "F2", "F4", "F5"}) {
        Fixture fx = fixture(id, f);
        auto nat = naturality_morphism(*fx.algebra);
        push(verify_duality(*fx.algebra, id, nat ? &*nat : nullptr));
        push(verify_geq(*fx.algebra, id));
        {
            GradedMultiplierAlgebra gm = graded_multipliers(*fx.algebra);
            gm.report.fixture = id;
            push(std::move(gm.report));
        }
        if (fx.algebra->is_partially_strongly_graded()) {
            push(fx.algebra->psg_identity_report(id));
            push(verify_sg(*fx.algebra, id));
            push(verify_partialrep(*fx.algebra, id));
            push(verify_invsgeq(trivial_context(*fx.algebra), std::string("trivial-") + id));
        }
        if (fx.algebra->is_strongly_graded())
            push(verify_eq_strong_gr(trivial_context(*fx.algebra), std::string("trivial-") + id));
    }

    for (const auto* id : {"F3", "F6"}) {
        Fixture fx = fixture(id, f);
        push(verify_globalization(*fx.global, *fx.ideal, id));
        push(verify_moritaglob(*fx.action, id));
        ActionEquivalence self = self_equivalence(*fx.action);
        push(validate_action_equivalence(self, std::string("self-") + id));
        ActionToSge sge = action_equivalence_to_sge(self, std::string("self-") + id);
        push(std::move(sge.report));
        push(verify_invsgeq(to_abstract(sge.context), std::string("skew-self-") + id));
        GradedAlgebra skew = skew_group_algebra(*fx.action).carrier;
        push(canonical_partial_action(skew, std::string("skew-") + id).report);
    }

    const std::vector<FiniteGroup> groups = {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                             FiniteGroup::klein4()};
    for (int32_t s = 0; s < seeds; ++s) {
        const uint64_t seed = seed_base + uint64_t(s);
        const FiniteGroup& g = groups[size_t(s) % groups.size()];
        const std::string tagname = "seed-" + std::to_string(seed);

        GradedAlgebra b = random_graded_algebra(seed, g, f, 12);
        VerificationReport hier;
        hier.theorem = "grading-hierarchy";
        hier.fixture = tagname;
        const bool strong = b.is_strongly_graded();
        const bool psg = b.is_partially_strongly_graded();
        const bool idem = b.is_idempotent_graded();
        hier.record_bool("strong-implies-partially-strong", true, !strong || psg);
        hier.record_bool("partially-strong-implies-idempotent", true, !psg || idem);
        push(std::move(hier));

        PartialAction alpha = random_product_partial_action(seed, g, f, 8, nullptr);
        SkewAlgebra sk = skew_group_algebra(alpha);
        VerificationReport laws;
        laws.theorem = "skew-laws";
        laws.fixture = tagname;
        laws.record_bool("partially-strongly-graded", true,
                         sk.carrier.is_partially_strongly_graded());
        laws.record_bool("strongly-graded-iff-global", alpha.is_global(),
                         sk.carrier.is_strongly_graded());
        laws.record_bool("product-verdict-matches-grading", true, check_pa_prp_equivalence(alpha));
        push(std::move(laws));

        if (s < 10) {
            GradedAlgebra small = random_graded_algebra(seed, g, f, 8);
            LinearMap ident{Mat::identity(f, small.dim())};
            push(verify_duality(small, tagname, &ident));
            push(verify_sg(sk.carrier, tagname));
        }
    }
    return out;
}

int do_verify(const std::string& theorem, const Document& doc, const std::string& object,
              const std::string& mode) {
    std::vector<VerificationReport> reports;
    if (theorem == "duality") {
        const DocObject& obj = pick(doc, DocObject::Kind::graded_algebra, object);
        reports.push_back(verify_duality(*obj.algebra, object));
    } else if (theorem == "geq") {
        const DocObject& obj = pick(doc, DocObject::Kind::graded_algebra, object);
        reports.push_back(verify_geq(*obj.algebra, object));
    } else if (theorem == "globalization") {
        const DocObject& obj = pick(doc, DocObject::Kind::restriction, object);
        reports.push_back(verify_globalization(*obj.global, *obj.ideal, object));
    } else if (theorem == "sg") {
        const DocObject& obj = pick(doc, DocObject::Kind::graded_algebra, object);
        reports.push_back(verify_sg(*obj.algebra, object));
    } else if (theorem == "partialrep") {
        const DocObject& obj = pick(doc, DocObject::Kind::graded_algebra, object);
        reports.push_back(verify_partialrep(*obj.algebra, object));
    } else if (theorem == "invsgeq") {
        const DocObject& obj = pick(doc, DocObject::Kind::context, object);
        reports.push_back(verify_invsgeq(to_abstract(*obj.embedded), object));
    } else if (theorem == "eq-strong-gr") {
        const DocObject& obj = pick(doc, DocObject::Kind::context, object);
        reports.push_back(verify_eq_strong_gr(to_abstract(*obj.embedded), object));
    } else if (theorem == "moritaglob") {
        const DocObject* obj = nullptr;
        if (!object.empty()) {
            obj = doc.find(object);
            if (!obj) throw Error("MissingObject", "no object named " + object);
        } else {
            for (const auto& [n, o] : doc.objects)
                if (o.action) {
                    if (obj) throw Error("AmbiguousObject", "several actions; name one explicitly");
                    obj = &o;
                }
            if (!obj) throw Error("MissingObject", "no partial action in the document");
        }
        if (!obj->action) throw Error("MissingObject", "object carries no partial action");
        reports.push_back(verify_moritaglob(*obj->action, object));
    } else {
        throw Error("UsageError", "unknown theorem " + theorem);
    }
    return emit_reports(reports, mode);
}

int do_construct(const std::string& what, const Document& doc, const std::string& object,
                 const std::string& out_path) {
    Document out;
    out.field = doc.field;
    out.group = doc.group;

    auto smash_meta = [&](const SmashAlgebra& s) {
        std::ostringstream os;
        os << "{\"labels\":[";
        for (size_t i = 0; i < s.labels.size(); ++i) {
            if (i) os << ",";
            os << "{\"entry\":" << s.labels[i].k << ",\"row\":" << s.labels[i].r
               << ",\"col\":" << s.labels[i].s << "}";
        }
        os << "]}";
        return os.str();
    };

    if (what == "smash" || what == "fmat" || what == "partial-smash" || what == "dual-action" ||
        what == "duality") {
        const DocObject& obj = pick(doc, DocObject::Kind::graded_algebra, object);
        if (what == "smash" || what == "fmat") {
            SmashAlgebra s = what == "smash" ? smash(*obj.algebra) : fmat(*obj.algebra);
            DocObject o;
            o.kind = DocObject::Kind::graded_algebra;
            o.algebra = s.carrier;
            o.meta = smash_meta(s);
            out.objects.emplace_back(what, std::move(o));
        } else if (what == "partial-smash") {
            SmashAlgebra s = smash(*obj.algebra);
            Subspace ideal = partial_smash(s);
            DocObject o;
            o.kind = DocObject::Kind::graded_algebra;
            o.algebra = graded_algebra_on_subspace(s.carrier, ideal);
            o.meta = smash_meta(s);
            out.objects.emplace_back("partial-smash", std::move(o));
        } else if (what == "dual-action") {
            SmashAlgebra s = smash(*obj.algebra);
            DocObject o;
            o.kind = DocObject::Kind::global_action;
            o.global = dual_action(s);
            o.meta = smash_meta(s);
            out.objects.emplace_back("dual-action", std::move(o));
        } else {  // duality
            DualityIso d = duality_iso(*obj.algebra, object);
            if (!d.report.pass()) return kExitFail;
            DocObject mat_obj;
            mat_obj.kind = DocObject::Kind::graded_algebra;
            mat_obj.algebra = d.matrix_algebra.carrier;
            mat_obj.meta = smash_meta(d.matrix_algebra);
            out.objects.emplace_back("fmat", std::move(mat_obj));
            DocObject crossed;
            crossed.kind = DocObject::Kind::graded_algebra;
            crossed.algebra = d.crossed.carrier;
            out.objects.emplace_back("crossed", std::move(crossed));
            DocObject psi;
            psi.kind = DocObject::Kind::linear_map;
            psi.map_matrix = d.psi.m;
            out.objects.emplace_back("psi", std::move(psi));
        }
    } else if (what == "skew") {
        const DocObject* obj = nullptr;
        for (const auto& [n, o] : doc.objects)
            if (o.action && (object.empty() || n == object)) obj = &o;
        if (!obj) throw Error("MissingObject", "no partial action in the document");
        SkewAlgebra s = skew_group_algebra(*obj->action);
        DocObject o;
        o.kind = DocObject::Kind::graded_algebra;
        o.algebra = s.carrier;
        std::ostringstream os;
        os << "{\"block_offsets\":[";
        for (size_t i = 0; i < s.offsets.size(); ++i) os << (i ? "," : "") << s.offsets[i];
        os << "]}";
        o.meta = os.str();
        out.objects.emplace_back("skew", std::move(o));
    } else if (what == "linking") {
        const DocObject& obj = pick(doc, DocObject::Kind::context, object);
        AbstractContext ctx = to_abstract(*obj.embedded);
        VerificationReport rep = linking_report(ctx, object);
        Linking lk = linking_algebra(ctx);
        DocObject o;
        o.kind = DocObject::Kind::graded_algebra;
        o.algebra = lk.L;
        std::ostringstream os;
        os << "{\"block_offsets\":[" << lk.offA << "," << lk.offX << "," << lk.offY << ","
           << lk.offB << "]}";
        o.meta = os.str();
        out.objects.emplace_back("linking", std::move(o));
        if (!rep.pass()) return kExitFail;
    } else {
        throw Error("UsageError", "unknown construction " + what);
    }
    write_file(out_path, serialize_document(out));
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructions and checks for group-graded algebras and partial actions"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string field_spec = "fp:101";
    std::string report_mode = "text";
    uint64_t seed_base = 0;
    app.add_option("--field", field_spec, "coefficient field: q or fp:<p>");
    app.add_option("--report", report_mode, "report mode: text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--seed", seed_base, "base seed for generated inputs");

    auto* validate_cmd = app.add_subcommand("validate", "parse a document and validate every object");
    std::string validate_file;
    validate_cmd->add_option("file", validate_file)->required();

    auto* construct_cmd = app.add_subcommand("construct", "build a derived object from a document");
    std::string construct_what, construct_file, construct_out, construct_obj;
    construct_cmd->add_option("what", construct_what)
        ->required()
        ->check(CLI::IsMember({"smash", "fmat", "partial-smash", "skew", "dual-action", "linking",
                               "duality"}));
    construct_cmd->add_option("file", construct_file)->required();
    construct_cmd->add_option("-o,--output", construct_out)->required();
    construct_cmd->add_option("--object", construct_obj);

    auto* verify_cmd = app.add_subcommand("verify", "verify a statement on a document");
    std::string verify_theorem, verify_file, verify_obj;
    verify_cmd->add_option("theorem", verify_theorem)
        ->required()
        ->check(CLI::IsMember({"duality", "geq", "globalization", "sg", "partialrep", "invsgeq",
                               "eq-strong-gr", "moritaglob"}));
    verify_cmd->add_option("file", verify_file)->required();
    verify_cmd->add_option("--object", verify_obj);

    auto* fixtures_cmd = app.add_subcommand("fixtures", "list or emit registered fixtures");
    fixtures_cmd->require_subcommand(1);
    auto* fixtures_list = fixtures_cmd->add_subcommand("list", "print ids and descriptions");
    std::string emit_id, emit_out;
    auto* fixtures_emit = fixtures_cmd->add_subcommand("emit", "write a fixture document");
    fixtures_emit->add_option("id", emit_id)->required();
    fixtures_emit->add_option("-o,--output", emit_out);

    auto* suite_cmd = app.add_subcommand("suite", "run the verification suite");
    int32_t suite_seeds = 10;
    suite_cmd->add_option("--seeds", suite_seeds, "number of generated inputs per field");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        const Field field = Field::parse(field_spec);
        if (validate_cmd->parsed()) {
            Document doc = parse_document(read_file(validate_file));
            std::cout << "ok: " << doc.objects.size() << " object(s) validated\n";
            return kExitPass;
        }
        if (construct_cmd->parsed()) {
            Document doc = parse_document(read_file(construct_file));
            return do_construct(construct_what, doc, construct_obj, construct_out);
        }
        if (verify_cmd->parsed()) {
            Document doc = parse_document(read_file(verify_file));
            return do_verify(verify_theorem, doc, verify_obj, report_mode);
        }
        if (fixtures_list->parsed()) {
            for (const auto& id : fixture_ids())
                std::cout << id << "  " << fixture(id, field).description << "\n";
            return kExitPass;
        }
        if (fixtures_emit->parsed()) {
            std::string text = serialize_document(fixture_document(emit_id, field));
            if (emit_out.empty())
                std::cout << text;
            else
                write_file(emit_out, text);
            return kExitPass;
        }
        if (suite_cmd->parsed()) {
            std::vector<VerificationReport> reports;
            const bool both = !app.count("--field");
            std::vector<Field> fields =
                both ? std::vector<Field>{Field::q(), Field::fp(101)} : std::vector<Field>{field};
            for (const Field& f : fields) {
                auto part = run_suite(f, suite_seeds, seed_base);
                for (auto& rep : part) {
                    rep.fixture += "@" + f.to_string();
                    reports.push_back(std::move(rep));
                }
            }
            return emit_reports(reports, report_mode);
        }
    } catch (const Error& e) {
        if (e.code() == "VerificationFailed") {
            std::cerr << "verification failed: " << e.what() << "\n";
            return kExitFail;
        }
        std::cerr << e.code() << ": " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
