#include <doctest.h>

#include "gral/fixtures.hpp"
#include "gral/io.hpp"

#include <json.hpp>
#include "gral/theorems.hpp"

using namespace gral;

namespace {

const Field Q = Field::q();

Document fixture_doc(const std::string& id, Field f) {
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
    doc.objects.emplace_back(id, std::move(obj));
    return doc;
}

}  // namespace

TEST_CASE("documents round trip") {
    for (const auto& id : fixture_ids()) {
        Document doc = fixture_doc(id, Q);
        std::string text = serialize_document(doc);
        Document back = parse_document(text);
        CHECK(back.field == doc.field);
        CHECK(back.group == doc.group);
        CHECK(serialize_document(back) == text);
        const DocObject& obj = back.objects.front().second;
        if (doc.objects.front().second.algebra)
            CHECK(*obj.algebra == *doc.objects.front().second.algebra);
        else
            CHECK(*obj.action == *doc.objects.front().second.action);
    }
}

TEST_CASE("documents round trip over the fast field") {
    Field f = Field::fp(101);
    Document doc = fixture_doc("F6", f);
    Document back = parse_document(serialize_document(doc));
    CHECK(back.objects.front().second.action->algebra().field() == f);
}

TEST_CASE("parse errors carry line positions") {
    try {
        parse_document("{\n  \"format_version\": \"1\",\n  broken\n}");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == "ParseError");
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("validation failures name the culprit") {
    Document doc = fixture_doc("F1", Q);
    nlohmann::json j = nlohmann::json::parse(serialize_document(doc));

    // Wrong degree list length.
    nlohmann::json bad1 = j;
    bad1["objects"]["F1"]["degree"] = {0};
    CHECK_THROWS_AS(parse_document(bad1.dump()), Error);

    // Corrupt one structure constant: u_1 * u_g becomes u_1, which breaks
    // associativity; the reported triple is (1,0,1).
    nlohmann::json bad2 = j;
    bool patched = false;
    for (auto& entry : bad2["objects"]["F1"]["sc"])
        if (entry[0] == 0 && entry[1] == 1) {
            entry[2] = {"1", "0"};
            patched = true;
        }
    REQUIRE(patched);
    try {
        parse_document(bad2.dump());
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == "ValidationError");
        CHECK(std::string(e.what()).find("1,0,1") != std::string::npos);
    }
}

TEST_CASE("several named objects and unique lookup") {
    Document doc = fixture_doc("F1", Q);
    DocObject second;
    second.kind = DocObject::Kind::graded_algebra;
    second.algebra = fixture("F2", Q).algebra;
    doc.objects.emplace_back("other", std::move(second));
    Document back = parse_document(serialize_document(doc));
    CHECK(back.objects.size() == 2);
    CHECK(back.find("other") != nullptr);
    CHECK_THROWS_AS(back.unique(DocObject::Kind::graded_algebra), Error);
    CHECK_THROWS_AS(back.unique(DocObject::Kind::context), Error);
}

TEST_CASE("context objects round trip") {
    GradedAlgebra f4 = *fixture("F4", Q).algebra;
    Multiplier e11 = multiplication_by(f4.algebra(), {{0, Scalar::one(Q)}});
    EmbeddedContext ctx = corner_context(f4, e11);
    Document doc;
    doc.field = Q;
    doc.group = f4.group();
    DocObject obj;
    obj.kind = DocObject::Kind::context;
    obj.embedded = ctx;
    doc.objects.emplace_back("corner", std::move(obj));
    Document back = parse_document(serialize_document(doc));
    CHECK(back.objects.front().second.embedded->A == ctx.A);
    CHECK(back.objects.front().second.embedded->Y == ctx.Y);
}

TEST_CASE("machine reports round trip") {
    std::vector<VerificationReport> reports;
    reports.push_back(verify_duality(*fixture("F1", Q).algebra, "F1"));
    reports.push_back(verify_geq(*fixture("F2", Q).algebra, "F2"));
    std::string text = reports_to_machine(reports);
    auto back = reports_from_machine(text);
    CHECK(reports_to_machine(back) == text);
    CHECK(back.size() == 2);
    CHECK(back[0].pass());

    std::string pretty = reports_to_text(reports);
    CHECK(pretty.find("all checks passed") != std::string::npos);

    // A failing check is listed first in text mode.
    VerificationReport bad;
    bad.theorem = "demo";
    bad.record("first", "1", "2", false);
    bad.record("second", "1", "1", true);
    std::string t2 = reports_to_text({bad});
    CHECK(t2.find("FAIL") < t2.find("pass"));
    CHECK(t2.find("1 checks FAILED") != std::string::npos);
}
