// Class-structure pass: finds type declarations, their fields, methods and
// nested types. Method bodies are handed to the body analyzer once the
// owning class's full attribute list is known.

#include <set>

#include "functor_audit/source_model.hpp"
#include "parse_util.hpp"

namespace functor_audit {

namespace {

using detail::at;
using detail::npos;

struct PendingMethod {
    MethodView view;
    std::vector<std::string> parameter_names;
    std::size_t body_begin = npos;  // first token inside the braces
    std::size_t body_end = npos;    // the closing brace
};

struct ClassBuilder {
    SourceClass cls;
    std::vector<PendingMethod> methods;
    std::set<std::string> attribute_names;
};

class StructureParser {
public:
    StructureParser(std::string_view source, const std::string& file_id)
        : source_(source), file_(file_id), ts_(lex_java(source, file_id)) {}

    std::vector<SourceClass> run() {
        const std::size_t end = ts_.size();
        std::size_t i = 0;
        std::string package;
        if (at(ts_, i, end, "package") || (at(ts_, i, end, "@") && package_follows_annotations())) {
            while (at(ts_, i, end, "@")) i = detail::skip_annotation(ts_, i, end);
            const std::size_t semi = detail::find_statement_end(ts_, i, end);
            package = detail::type_text(ts_, i + 1, semi);
            i = semi + 1;
        }
        while (i < end) {
            if (ts_[i].is(";")) {
                ++i;
            } else if (ts_[i].is("import")) {
                i = detail::find_statement_end(ts_, i, end) + 1;
            } else {
                const std::size_t start = i;
                i = detail::skip_modifiers(ts_, i, end);
                if (!detail::starts_type_declaration(ts_, i, end)) {
                    fail(i < end ? i : start, "expected type declaration");
                }
                i = type_declaration(start, i, package, end);
            }
        }
        return std::move(out_);
    }

private:
    [[noreturn]] void fail(std::size_t i, const std::string& msg) const {
        const int line = ts_.size() == 0 ? 1 : ts_[std::min(i, ts_.size() - 1)].line;
        throw ParseError(file_, line, msg);
    }

    bool package_follows_annotations() const {
        std::size_t i = 0;
        while (at(ts_, i, ts_.size(), "@") && !at(ts_, i + 1, ts_.size(), "interface")) {
            i = detail::skip_annotation(ts_, i, ts_.size());
        }
        return at(ts_, i, ts_.size(), "package");
    }

    // ts_[kw] is the declaration keyword; `start` is its first modifier.
    // Returns the index after the closing brace.
    std::size_t type_declaration(std::size_t start, std::size_t kw, const std::string& prefix,
                                 std::size_t end) {
        const bool is_annotation = ts_[kw].is("@");
        const std::size_t name_idx = kw + (is_annotation ? 2 : 1);
        if (name_idx >= end || !ts_[name_idx].is_ident() || is_java_keyword(ts_[name_idx].text)) {
            fail(name_idx, "expected type name");
        }
        const std::string name(ts_[name_idx].text);
        const std::string qualified = prefix.empty() ? name : prefix + "." + name;

        std::size_t open = name_idx + 1;
        while (open < end && !ts_[open].is("{")) {
            if (ts_[open].is(";") || ts_[open].is("}")) fail(open, "expected type body");
            open = detail::step(ts_, open);
        }
        if (open >= end) fail(name_idx, "expected type body");
        const std::size_t close = ts_.match[open];

        if (!ts_[kw].is("class")) {
            std::size_t i = open + 1;
            if (ts_[kw].is("enum")) i = skip_enum_constants(i, close);
            members(nullptr, name, qualified, i, close);
            return close + 1;
        }

        const std::size_t slot = out_.size();
        out_.emplace_back();
        ClassBuilder builder;
        builder.cls.name = name;
        builder.cls.qualified_name = qualified;
        members(&builder, name, qualified, open + 1, close);
        finish_class(builder, start, close);
        out_[slot] = std::move(builder.cls);
        return close + 1;
    }

    std::size_t skip_enum_constants(std::size_t i, std::size_t close) const {
        while (i < close && !ts_[i].is(";")) i = detail::step(ts_, i);
        return i < close ? i + 1 : close;
    }

    void members(ClassBuilder* builder, const std::string& type_name, const std::string& qualified,
                 std::size_t i, std::size_t close) {
        while (i < close) {
            const Token& t = ts_[i];
            if (t.is(";")) {
                ++i;
                continue;
            }
            if (t.is("{")) {  // instance initializer
                i = ts_.match[i] + 1;
                continue;
            }
            if (t.is("static") && at(ts_, i + 1, close, "{")) {
                i = ts_.match[i + 1] + 1;
                continue;
            }
            const std::size_t start = i;
            bool is_static = false;
            i = detail::skip_modifiers(ts_, i, close, &is_static);
            if (detail::starts_type_declaration(ts_, i, close)) {
                i = type_declaration(start, i, qualified, close);
                continue;
            }
            if (at(ts_, i, close, "<")) {
                const std::size_t after = detail::skip_type_args(ts_, i, close);
                if (after == npos) fail(i, "malformed type parameters");
                i = after;
            }
            if (i >= close) fail(start, "incomplete member declaration");
            if (ts_[i].is(type_name) && at(ts_, i + 1, close, "(")) {
                i = skip_callable_tail(ts_.match[i + 1] + 1, close);  // constructor
                continue;
            }
            if (ts_[i].is(type_name) && at(ts_, i + 1, close, "{")) {
                i = ts_.match[i + 1] + 1;  // compact record constructor
                continue;
            }
            const std::size_t type_end = detail::skip_type(ts_, i, close);
            if (type_end == npos || type_end >= close || !ts_[type_end].is_ident()) {
                fail(i, "expected member declaration");
            }
            if (at(ts_, type_end + 1, close, "(")) {
                i = method(builder, start, type_end, is_static, close);
            } else {
                i = fields(builder, type_end, is_static, close);
            }
        }
    }

    // After a parameter list: array dims, throws clause, annotation default,
    // then a body or ';'. Returns the index after it.
    std::size_t skip_callable_tail(std::size_t i, std::size_t close) const {
        while (i < close && !ts_[i].is("{") && !ts_[i].is(";")) i = detail::step(ts_, i);
        if (i >= close) fail(close, "expected method body or ';'");
        return ts_[i].is("{") ? ts_.match[i] + 1 : i + 1;
    }

    std::size_t method(ClassBuilder* builder, std::size_t start, std::size_t name_idx, bool is_static,
                       std::size_t close) {
        const std::size_t open = name_idx + 1;
        const std::size_t params_close = ts_.match[open];
        PendingMethod m;
        m.view.name = std::string(ts_[name_idx].text);
        m.view.is_static = is_static;
        m.view.first_line = ts_[start].line;
        for (auto& p : detail::parse_parameters(ts_, open, params_close, file_)) {
            m.view.parameter_types.push_back(std::move(p.type));
            m.parameter_names.push_back(std::move(p.name));
        }
        std::size_t i = params_close + 1;
        while (i < close && !ts_[i].is("{") && !ts_[i].is(";")) i = detail::step(ts_, i);
        if (i >= close) fail(close, "expected method body or ';'");
        if (ts_[i].is("{")) {
            m.body_begin = i + 1;
            m.body_end = ts_.match[i];
            i = ts_.match[i] + 1;
        } else {
            ++i;
        }
        if (builder) {
            builder->cls.has_static_member |= is_static;
            builder->methods.push_back(std::move(m));
        }
        return i;
    }

    std::size_t fields(ClassBuilder* builder, std::size_t i, bool is_static, std::size_t close) {
        while (true) {
            if (i >= close || !ts_[i].is_ident() || is_java_keyword(ts_[i].text)) {
                fail(i, "expected field name");
            }
            const std::string name(ts_[i].text);
            ++i;
            while (at(ts_, i, close, "[") && at(ts_, i + 1, close, "]")) i += 2;
            if (at(ts_, i, close, "=")) i = detail::find_initializer_end(ts_, i + 1, close);
            if (builder && builder->attribute_names.insert(name).second) {
                builder->cls.attributes.push_back(AttributeDecl{name, is_static});
                builder->cls.has_static_member |= is_static;
            }
            if (at(ts_, i, close, ",")) {
                ++i;
                continue;
            }
            if (at(ts_, i, close, ";")) return i + 1;
            fail(i, "expected ';' after field declaration");
        }
    }

    void finish_class(ClassBuilder& builder, std::size_t start, std::size_t close) {
        SourceClass& cls = builder.cls;
        cls.line_span = LineSpan{ts_[start].line, ts_[close].line};
        const LineCounts counts = count_loc_and_blank(source_, cls.line_span);
        cls.loc = counts.loc;
        cls.blank_lines = counts.blank_lines;
        for (PendingMethod& m : builder.methods) {
            if (m.body_begin != npos) {
                AccessContext ctx{builder.attribute_names, m.parameter_names, m.view.name};
                BodyFacts facts = analyze_body(ts_, m.body_begin, m.body_end, ctx);
                m.view.decision_profile = facts.profile;
                m.view.cognitive_events = std::move(facts.events);
                m.view.accessed_attributes = std::move(facts.accessed_attributes);
            }
            cls.methods.push_back(std::move(m.view));
        }
    }

    std::string_view source_;
    const std::string& file_;
    TokenStream ts_;
    std::vector<SourceClass> out_;
};

}  // namespace

std::vector<SourceClass> parse_compilation_unit(std::string_view source_text, const std::string& file_id) {
    return StructureParser(source_text, file_id).run();
}

}  // namespace functor_audit
