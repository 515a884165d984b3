#pragma once

#include "gral/morita.hpp"

namespace gral {

/// One named object of a document.
struct DocObject {
    enum class Kind { graded_algebra, partial_action, global_action, restriction, context, linear_map };

    Kind kind = Kind::graded_algebra;
    std::optional<GradedAlgebra> algebra;
    std::optional<PartialAction> action;
    std::optional<GlobalAction> global;
    std::optional<Subspace> ideal;
    std::optional<EmbeddedContext> embedded;
    std::optional<Mat> map_matrix;
    std::string meta;  // free-form label metadata, serialized verbatim
};

/// A batch document: one field, one group, several named objects. Parsing
/// validates every object.
struct Document {
    std::string format_version = "1";
    Field field = Field::fp(101);
    FiniteGroup group = FiniteGroup::cyclic(1);
    std::vector<std::pair<std::string, DocObject>> objects;

    const DocObject* find(const std::string& name) const;
    /// The unique object of a kind; throws AmbiguousObject / MissingObject.
    const std::pair<std::string, DocObject>& unique(DocObject::Kind kind) const;
};

/// Errors: ParseError("line N: ..."), ValidationError (object named).
Document parse_document(const std::string& text);
std::string serialize_document(const Document& doc);

std::string kind_name(DocObject::Kind k);

/// Machine-readable report schema; serialization is deterministic and
/// round-trips through the parser.
std::string reports_to_machine(const std::vector<VerificationReport>& reports);
std::vector<VerificationReport> reports_from_machine(const std::string& text);
std::string reports_to_text(const std::vector<VerificationReport>& reports);

}  // namespace gral
