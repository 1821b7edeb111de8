#include "functor_audit/source_model.hpp"

#include <algorithm>

#include "parse_util.hpp"

namespace functor_audit {

std::string_view to_string(CognitiveKind kind) noexcept {
    switch (kind) {
    case CognitiveKind::If: return "if";
    case CognitiveKind::ElseIf: return "else-if";
    case CognitiveKind::Else: return "else";
    case CognitiveKind::Loop: return "loop";
    case CognitiveKind::Switch: return "switch";
    case CognitiveKind::Catch: return "catch";
    case CognitiveKind::Ternary: return "ternary";
    case CognitiveKind::BooleanSequence: return "boolean-sequence";
    case CognitiveKind::Recursion: return "recursion";
    }
    return "?";
}

namespace detail {

std::size_t skip_annotation(const TokenStream& ts, std::size_t i, std::size_t end) {
    ++i;  // '@'
    while (i < end && ts[i].is_ident()) {
        ++i;
        if (at(ts, i, end, ".") && i + 1 < end && ts[i + 1].is_ident()) {
            ++i;
        } else {
            break;
        }
    }
    if (at(ts, i, end, "(")) i = ts.match[i] + 1;
    return i;
}

std::size_t skip_modifiers(const TokenStream& ts, std::size_t i, std::size_t end, bool* is_static) {
    static constexpr std::string_view kModifiers[] = {
        "public", "protected", "private", "static", "final", "abstract", "native",
        "synchronized", "transient", "volatile", "strictfp", "default", "sealed"};
    while (i < end) {
        const Token& t = ts[i];
        if (t.is("@") && !at(ts, i + 1, end, "interface")) {
            i = skip_annotation(ts, i, end);
            continue;
        }
        if (t.is("non") && at(ts, i + 1, end, "-") && at(ts, i + 2, end, "sealed")) {
            i += 3;
            continue;
        }
        // `default` opens a switch label when followed by ':' or '->'.
        if (t.is("default") && (at(ts, i + 1, end, ":") || at(ts, i + 1, end, "->"))) break;
        // `synchronized (` is a statement, not a modifier.
        if (t.is("synchronized") && at(ts, i + 1, end, "(")) break;
        // `sealed` is contextual.
        if (t.is("sealed") && !(i + 1 < end && ts[i + 1].is_ident())) break;
        if (std::find(std::begin(kModifiers), std::end(kModifiers), t.text) == std::end(kModifiers)) break;
        if (t.is("static") && is_static) *is_static = true;
        ++i;
    }
    return i;
}

std::size_t skip_type_args(const TokenStream& ts, std::size_t i, std::size_t end) {
    int depth = 0;
    while (i < end) {
        const Token& t = ts[i];
        if (t.is("<")) {
            ++depth;
            ++i;
        } else if (t.is(">")) {
            --depth;
            ++i;
            if (depth == 0) return i;
        } else if (t.is("@")) {
            i = skip_annotation(ts, i, end);
        } else if (t.is("[")) {
            if (!at(ts, i + 1, end, "]")) return npos;
            i += 2;
        } else if (t.is_ident() && (!is_java_keyword(t.text) || is_primitive_type(t.text) ||
                                    t.is("extends") || t.is("super"))) {
            ++i;
        } else if (t.is(".") || t.is(",") || t.is("?") || t.is("&")) {
            ++i;
        } else {
            return npos;
        }
    }
    return npos;
}

std::size_t skip_type(const TokenStream& ts, std::size_t i, std::size_t end) {
    while (at(ts, i, end, "@")) i = skip_annotation(ts, i, end);
    if (i >= end || !ts[i].is_ident()) return npos;
    if (is_primitive_type(ts[i].text)) {
        ++i;
    } else {
        if (is_java_keyword(ts[i].text)) return npos;
        ++i;
        while (true) {
            if (at(ts, i, end, "<")) {
                const std::size_t after = skip_type_args(ts, i, end);
                if (after == npos) return npos;
                i = after;
            }
            if (at(ts, i, end, ".")) {
                std::size_t j = i + 1;
                while (at(ts, j, end, "@")) j = skip_annotation(ts, j, end);
                if (j < end && ts[j].is_ident() && !is_java_keyword(ts[j].text)) {
                    i = j + 1;
                    continue;
                }
            }
            break;
        }
    }
    while (true) {
        std::size_t j = i;
        while (at(ts, j, end, "@")) j = skip_annotation(ts, j, end);
        if (at(ts, j, end, "[") && at(ts, j + 1, end, "]")) {
            i = j + 2;
        } else {
            break;
        }
    }
    return i;
}

std::string type_text(const TokenStream& ts, std::size_t begin, std::size_t end) {
    std::string out;
    for (std::size_t i = begin; i < end;) {
        if (ts[i].is("@")) {
            i = skip_annotation(ts, i, end);
            continue;
        }
        out.append(ts[i].text);
        ++i;
    }
    return out;
}

std::size_t find_statement_end(const TokenStream& ts, std::size_t i, std::size_t end) {
    while (i < end && !ts[i].is(";")) i = step(ts, i);
    return std::min(i, end);
}

std::size_t find_initializer_end(const TokenStream& ts, std::size_t i, std::size_t end) {
    while (i < end) {
        const Token& t = ts[i];
        if (t.is(",") || t.is(";")) return i;
        if (t.is("new")) {
            const std::size_t after = skip_type(ts, i + 1, end);
            i = after == npos ? i + 1 : after;
        } else if (t.is(".") && at(ts, i + 1, end, "<")) {
            const std::size_t after = skip_type_args(ts, i + 1, end);
            i = after == npos ? i + 1 : after;
        } else {
            i = step(ts, i);
        }
    }
    return end;
}

bool starts_type_declaration(const TokenStream& ts, std::size_t i, std::size_t end) {
    if (i >= end) return false;
    const Token& t = ts[i];
    if (t.is("class") || t.is("interface") || t.is("enum")) return true;
    if (t.is("@") && at(ts, i + 1, end, "interface")) return true;
    return t.is("record") && i + 2 < end && ts[i + 1].is_ident() &&
           (ts[i + 2].is("(") || ts[i + 2].is("<"));
}

std::vector<Parameter> parse_parameters(const TokenStream& ts, std::size_t open, std::size_t close,
                                        const std::string& file_id) {
    std::vector<Parameter> params;
    std::size_t seg = open + 1;
    while (seg < close) {
        // Split at the next comma outside brackets and type arguments.
        std::size_t j = seg;
        int angle = 0;
        while (j < close) {
            if (ts[j].is("<")) ++angle;
            if (ts[j].is(">")) --angle;
            if (angle == 0 && ts[j].is(",")) break;
            j = step(ts, j);
        }
        std::size_t b = seg;
        while (b < j) {
            if (ts[b].is("@")) {
                b = skip_annotation(ts, b, j);
            } else if (ts[b].is("final")) {
                ++b;
            } else {
                break;
            }
        }
        std::size_t name_end = j;
        int dims = 0;
        while (name_end >= b + 2 && ts[name_end - 1].is("]") && ts[name_end - 2].is("[")) {
            name_end -= 2;
            ++dims;
        }
        if (name_end <= b + 1 || !ts[name_end - 1].is_ident()) {
            throw ParseError(file_id, ts[seg].line, "malformed parameter list");
        }
        const Token& name = ts[name_end - 1];
        if (!name.is("this")) {
            Parameter p;
            p.type = type_text(ts, b, name_end - 1);
            for (int d = 0; d < dims; ++d) p.type += "[]";
            p.name = std::string(name.text);
            params.push_back(std::move(p));
        }
        seg = j + 1;
    }
    return params;
}

}  // namespace detail

int count_lines(std::string_view text) noexcept {
    int lines = 0;
    bool open_line = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            ++lines;
            open_line = false;
        } else {
            open_line = true;
        }
    }
    return lines + (open_line ? 1 : 0);
}

LineCounts count_loc_and_blank(std::string_view source_text, LineSpan span) {
    const int total = count_lines(source_text);
    if (span.first_line < 1 || span.last_line < span.first_line || span.last_line > total) {
        throw SpanOutOfBounds("line span " + std::to_string(span.first_line) + "-" +
                              std::to_string(span.last_line) + " outside 1-" + std::to_string(total));
    }
    LineCounts counts;
    counts.loc = span.length();
    int line = 1;
    bool blank = true;
    auto finish_line = [&] {
        if (line >= span.first_line && line <= span.last_line && blank) ++counts.blank_lines;
        ++line;
        blank = true;
    };
    for (std::size_t i = 0; i < source_text.size() && line <= span.last_line; ++i) {
        const char c = source_text[i];
        if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < source_text.size() && source_text[i + 1] == '\n') ++i;
            finish_line();
        } else if (c != ' ' && c != '\t' && c != '\f' && c != '\v') {
            blank = false;
        }
    }
    // Last line without a terminator.
    if (line <= span.last_line && line == total) finish_line();
    return counts;
}

namespace {

// Strips one pair of enclosing braces when the whole text is a block.
std::pair<std::size_t, std::size_t> body_range(const TokenStream& ts) {
    if (ts.size() >= 2 && ts[0].is("{") && ts.match[0] == ts.size() - 1) return {1, ts.size() - 1};
    return {0, ts.size()};
}

}  // namespace

std::set<std::string> extract_attribute_accesses(std::string_view body, const AccessContext& context) {
    return build_decision_profile(body, context).accessed_attributes;
}

BodyFacts build_decision_profile(std::string_view body, const AccessContext& context) {
    const TokenStream ts = lex_java(body, "<body>");
    const auto [begin, end] = body_range(ts);
    return analyze_body(ts, begin, end, context);
}

}  // namespace functor_audit
