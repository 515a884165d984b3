#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gral/fixtures.hpp"
#include "gral/io.hpp"
#include "gral/theorems.hpp"

namespace py = pybind11;
using namespace gral;

namespace {

Field parse_field(const std::string& spec) { return Field::parse(spec); }

py::dict report_to_dict(const VerificationReport& rep) {
    py::dict d;
    d["theorem"] = rep.theorem;
    d["fixture"] = rep.fixture;
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict jc;
        jc["name"] = c.name;
        jc["expected"] = c.expected;
        jc["computed"] = c.computed;
        jc["pass"] = c.pass;
        checks.append(jc);
    }
    d["checks"] = checks;
    d["pass"] = rep.pass();
    return d;
}

FiniteGroup group_by_name(const std::string& name) { return FiniteGroup::preset(name); }

}  // namespace

PYBIND11_MODULE(_gral, m) {
    m.doc() = "exact constructions and checks for group-graded algebras and partial actions";

    py::register_exception<Error>(m, "GralError");

    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def_static("preset", &group_by_name, py::arg("name"))
        .def("order", &FiniteGroup::order)
        .def("identity", &FiniteGroup::identity)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv);

    py::class_<GradedAlgebra>(m, "GradedAlgebra")
        .def("dim", &GradedAlgebra::dim)
        .def("group", &GradedAlgebra::group)
        .def("component_dim", [](const GradedAlgebra& b, int32_t t) { return b.component(t).rank(); })
        .def("degree_ideal_dim",
             [](const GradedAlgebra& b, int32_t t) { return b.degree_ideal(t).rank(); })
        .def("is_idempotent_graded", &GradedAlgebra::is_idempotent_graded)
        .def("is_partially_strongly_graded", &GradedAlgebra::is_partially_strongly_graded)
        .def("is_strongly_graded", &GradedAlgebra::is_strongly_graded);

    py::class_<PartialAction>(m, "PartialAction")
        .def("group", &PartialAction::group)
        .def("dim", [](const PartialAction& a) { return a.algebra().dim(); })
        .def("domain_dim", [](const PartialAction& a, int32_t t) { return a.domain(t).rank(); })
        .def("is_global", &PartialAction::is_global);

    py::class_<Fixture>(m, "Fixture")
        .def_readonly("id", &Fixture::id)
        .def_readonly("description", &Fixture::description)
        .def_property_readonly("algebra",
                               [](const Fixture& f) { return f.algebra ? py::cast(*f.algebra) : py::none().cast<py::object>(); })
        .def_property_readonly("action",
                               [](const Fixture& f) { return f.action ? py::cast(*f.action) : py::none().cast<py::object>(); });

    m.def("fixture_ids", &fixture_ids);
    m.def(
        "fixture",
        [](const std::string& id, const std::string& field) { return fixture(id, parse_field(field)); },
        py::arg("id"), py::arg("field") = "q");

    m.def(
        "random_graded_algebra",
        [](uint64_t seed, const std::string& group, const std::string& field, int32_t max_dim) {
            return random_graded_algebra(seed, group_by_name(group), parse_field(field), max_dim);
        },
        py::arg("seed"), py::arg("group") = "cyclic(2)", py::arg("field") = "q",
        py::arg("max_dim") = 12);
    m.def(
        "random_product_partial_action",
        [](uint64_t seed, const std::string& group, const std::string& field, int32_t max_dim) {
            return random_product_partial_action(seed, group_by_name(group), parse_field(field),
                                                 max_dim, nullptr);
        },
        py::arg("seed"), py::arg("group") = "cyclic(2)", py::arg("field") = "q",
        py::arg("max_dim") = 12);

    m.def("smash_dim", [](const GradedAlgebra& b) { return smash(b).carrier.dim(); });
    m.def("fmat_dim", [](const GradedAlgebra& b) { return fmat(b).carrier.dim(); });
    m.def("partial_smash_dim", [](const GradedAlgebra& b) { return partial_smash(smash(b)).rank(); });
    m.def("smash_algebra", [](const GradedAlgebra& b) { return smash(b).carrier; });
    m.def("matrix_algebra", [](const GradedAlgebra& b) { return fmat(b).carrier; });
    m.def("skew_group_algebra",
          [](const PartialAction& a) { return skew_group_algebra(a).carrier; });

    m.def(
        "verify_duality",
        [](const GradedAlgebra& b, const std::string& fx) { return report_to_dict(verify_duality(b, fx)); },
        py::arg("algebra"), py::arg("fixture") = "");
    m.def(
        "verify_geq",
        [](const GradedAlgebra& b, const std::string& fx) { return report_to_dict(verify_geq(b, fx)); },
        py::arg("algebra"), py::arg("fixture") = "");
    m.def(
        "verify_sg",
        [](const GradedAlgebra& b, const std::string& fx) { return report_to_dict(verify_sg(b, fx)); },
        py::arg("algebra"), py::arg("fixture") = "");
    m.def(
        "verify_partialrep",
        [](const GradedAlgebra& b, const std::string& fx) {
            return report_to_dict(verify_partialrep(b, fx));
        },
        py::arg("algebra"), py::arg("fixture") = "");
    m.def(
        "verify_moritaglob",
        [](const PartialAction& a, const std::string& fx) {
            return report_to_dict(verify_moritaglob(a, fx));
        },
        py::arg("action"), py::arg("fixture") = "");
    m.def(
        "verify_globalization_fixture",
        [](const std::string& id, const std::string& field, const std::string& fx) {
            Fixture f = fixture(id, parse_field(field));
            if (!f.global) throw Error("UnknownFixture", id + " is not a restriction fixture");
            return report_to_dict(verify_globalization(*f.global, *f.ideal, fx.empty() ? id : fx));
        },
        py::arg("id"), py::arg("field") = "q", py::arg("fixture") = "");
    m.def(
        "verify_self_equivalence",
        [](const PartialAction& a, const std::string& fx) {
            return report_to_dict(validate_action_equivalence(self_equivalence(a), fx));
        },
        py::arg("action"), py::arg("fixture") = "");
    m.def(
        "check_pa_prp_equivalence",
        [](const PartialAction& a) { return check_pa_prp_equivalence(a); }, py::arg("action"));

    m.def("parse_document_objects", [](const std::string& text) {
        Document doc = parse_document(text);
        py::list names;
        for (const auto& [name, obj] : doc.objects)
            names.append(py::make_tuple(name, kind_name(obj.kind)));
        return names;
    });
    m.def("fixture_document", [](const std::string& id, const std::string& field) {
        Fixture fx = fixture(id, parse_field(field));
        Document doc;
        doc.field = parse_field(field);
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
        return serialize_document(doc);
    });
}
