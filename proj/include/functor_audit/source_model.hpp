#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "functor_audit/java_lexer.hpp"

namespace functor_audit {

/// Per-kind tallies of the branching constructs found in one method body.
/// Everything nested inside the body counts, including lambda and
/// anonymous-class bodies.
struct DecisionProfile {
    int if_count = 0;         // `if` and every `else if`
    int loop_count = 0;       // for, enhanced for, while, do
    int case_label_count = 0; // one per `case` keyword; `default` is free
    int catch_count = 0;
    int ternary_count = 0;
    int short_circuit_count = 0;  // each `&&` / `||` token

    friend bool operator==(const DecisionProfile&, const DecisionProfile&) = default;
};

enum class CognitiveKind {
    If,
    ElseIf,
    Else,
    Loop,
    Switch,
    Catch,
    Ternary,
    BooleanSequence,
    Recursion,
};

/// True for the constructs whose cognitive increment grows with nesting.
constexpr bool takes_nesting_penalty(CognitiveKind kind) noexcept {
    switch (kind) {
    case CognitiveKind::If:
    case CognitiveKind::Loop:
    case CognitiveKind::Switch:
    case CognitiveKind::Catch:
    case CognitiveKind::Ternary:
        return true;
    default:
        return false;
    }
}

std::string_view to_string(CognitiveKind kind) noexcept;

struct CognitiveEvent {
    CognitiveKind kind;
    int nesting_depth = 0;
    int line = 0;

    friend bool operator==(const CognitiveEvent&, const CognitiveEvent&) = default;
};

struct AttributeDecl {
    std::string name;
    bool is_static = false;

    friend bool operator==(const AttributeDecl&, const AttributeDecl&) = default;
};

struct MethodView {
    std::string name;
    bool is_static = false;
    std::vector<std::string> parameter_types;  // normalized, see normalize rules in README
    std::set<std::string> accessed_attributes;
    DecisionProfile decision_profile;
    std::vector<CognitiveEvent> cognitive_events;
    int first_line = 0;

    friend bool operator==(const MethodView&, const MethodView&) = default;
};

struct LineSpan {
    int first_line = 1;
    int last_line = 1;

    int length() const noexcept { return last_line - first_line + 1; }
    friend bool operator==(const LineSpan&, const LineSpan&) = default;
};

/// Structural view of one `class` declaration. Constructors never appear
/// in `methods`; members of nested named classes belong to those classes.
struct SourceClass {
    std::string name;
    std::string qualified_name;
    std::vector<AttributeDecl> attributes;
    std::vector<MethodView> methods;
    bool has_static_member = false;
    LineSpan line_span;
    int loc = 0;
    int blank_lines = 0;

    friend bool operator==(const SourceClass&, const SourceClass&) = default;
};

/// Extracts every `class` (top-level, member, and local to a type body)
/// from one compilation unit. Interfaces, enums, records, annotation types,
/// anonymous and method-local classes produce nothing, although classes
/// nested inside them are still found.
///
/// Throws ParseError on malformed input.
std::vector<SourceClass> parse_compilation_unit(std::string_view source_text,
                                                const std::string& file_id);

/// Names visible to a method body before its first statement.
struct AccessContext {
    std::set<std::string> attributes;
    std::vector<std::string> parameters;
    std::string method_name;  // for recursion detection; may be empty
};

/// Attribute names referenced in `body` (a block with or without its outer
/// braces). `this.f` always counts; a bare `f` counts unless a parameter or
/// an earlier local declaration in an enclosing block shadows it.
std::set<std::string> extract_attribute_accesses(std::string_view body,
                                                 const AccessContext& context);

struct BodyFacts {
    DecisionProfile profile;
    std::vector<CognitiveEvent> events;
    std::set<std::string> accessed_attributes;
};

/// Decision profile and cognitive events for a method body.
BodyFacts build_decision_profile(std::string_view body, const AccessContext& context = {});

/// Same analysis over an already lexed token range [begin, end) holding
/// the statements of a body (braces excluded).
BodyFacts analyze_body(const TokenStream& tokens, std::size_t begin, std::size_t end,
                       const AccessContext& context);

class SpanOutOfBounds : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

struct LineCounts {
    int loc = 0;
    int blank_lines = 0;

    friend bool operator==(const LineCounts&, const LineCounts&) = default;
};

/// Physical and whitespace-only line counts of `span` within `source_text`.
/// `\n`, `\r\n` and lone `\r` all terminate a line.
LineCounts count_loc_and_blank(std::string_view source_text, LineSpan span);

/// Number of physical lines in `text`; a trailing terminator does not open a
/// new line.
int count_lines(std::string_view text) noexcept;

}  // namespace functor_audit
