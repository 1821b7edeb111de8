// Method body analysis: a forgiving statement/expression walker that
// collects branching constructs, cognitive-complexity events with their
// nesting depth, and references to the owning class's attributes.
//
// Nesting rules: bodies of if/else, loops, switch cases and catch clauses,
// ternary branches, and lambda or anonymous/local class bodies sit one
// level deeper than the construct that owns them. Try and finally blocks
// and plain nested blocks do not change the level.

#include <algorithm>

#include "functor_audit/source_model.hpp"
#include "parse_util.hpp"

namespace functor_audit {

namespace {

using detail::at;
using detail::npos;

enum class BoolOp { None, And, Or };

bool is_assignment(const Token& t) {
    static constexpr std::string_view kOps[] = {"=", "+=", "-=", "*=", "/=", "%=",
                                                "&=", "|=", "^=", "<<=", ">>=", ">>>="};
    return t.kind == TokenKind::Operator &&
           std::find(std::begin(kOps), std::end(kOps), t.text) != std::end(kOps);
}

class BodyAnalyzer {
public:
    BodyAnalyzer(const TokenStream& ts, const AccessContext& ctx)
        : ts_(ts), attributes_(ctx.attributes), method_name_(ctx.method_name) {
        scopes_.emplace_back(ctx.parameters.begin(), ctx.parameters.end());
    }

    BodyFacts run(std::size_t begin, std::size_t end) {
        statements(begin, end, 0);
        return std::move(facts_);
    }

private:
    // Scopes ---------------------------------------------------------------

    void push_scope() { scopes_.emplace_back(); }
    void pop_scope() { scopes_.pop_back(); }
    void declare(std::string_view name) { scopes_.back().emplace(name); }

    bool shadowed(std::string_view name) const {
        return std::any_of(scopes_.begin(), scopes_.end(),
                           [&](const auto& s) { return s.count(std::string(name)) > 0; });
    }

    void event(CognitiveKind kind, int depth, std::size_t i) {
        facts_.events.push_back(CognitiveEvent{kind, depth, ts_[i].line});
    }

    // A method that calls itself is charged once, however many call sites.
    void recursion(int depth, std::size_t i) {
        if (recursion_seen_) return;
        recursion_seen_ = true;
        event(CognitiveKind::Recursion, depth, i);
    }

    // Statements -----------------------------------------------------------

    void statements(std::size_t begin, std::size_t end, int depth) {
        std::size_t i = begin;
        while (i < end) i = statement(i, end, depth);
    }

    void block(std::size_t open, int depth) {
        push_scope();
        statements(open + 1, ts_.match[open], depth);
        pop_scope();
    }

    // A statement in its own scope, e.g. the body of an `if`.
    std::size_t scoped_statement(std::size_t i, std::size_t end, int depth) {
        if (i >= end) return end;
        push_scope();
        const std::size_t next = statement(i, end, depth);
        pop_scope();
        return next;
    }

    std::size_t statement(std::size_t i, std::size_t end, int depth) {
        const Token& t = ts_[i];
        if (t.is("{")) {
            block(i, depth);
            return ts_.match[i] + 1;
        }
        if (t.is(";")) return i + 1;
        if (t.is("if")) return if_statement(i, end, depth);
        if (t.is("for")) return for_statement(i, end, depth);
        if (t.is("while")) return while_statement(i, end, depth);
        if (t.is("do")) return do_statement(i, end, depth);
        if (t.is("switch")) return switch_construct(i, end, depth);
        if (t.is("try")) return try_statement(i, end, depth);
        if (t.is("synchronized") && at(ts_, i + 1, end, "(")) {
            const std::size_t close = ts_.match[i + 1];
            expression(i + 2, close, depth);
            return statement(close + 1, end, depth);
        }
        if (t.is("break") || t.is("continue")) return detail::find_statement_end(ts_, i, end) + 1;
        if (t.is("return") || t.is("throw") || t.is("assert") ||
            (t.is("yield") && i + 1 < end && !is_assignment(ts_[i + 1]) && !ts_[i + 1].is(".") &&
             !ts_[i + 1].is("[") && !ts_[i + 1].is("++") && !ts_[i + 1].is("--"))) {
            const std::size_t e = detail::find_statement_end(ts_, i + 1, end);
            expression(i + 1, e, depth);
            return e + 1;
        }
        if (t.is("else")) return i + 1;  // stray, tolerated
        if (t.is_ident() && !is_java_keyword(t.text) && at(ts_, i + 1, end, ":")) {
            return statement(i + 2, end, depth);  // label
        }
        if (std::size_t next = local_type(i, end, depth); next != npos) return next;
        if (std::size_t name = local_declaration_name(i, end); name != npos) {
            const std::size_t stop = declarators(name, end, depth);
            return stop + 1;
        }
        const std::size_t e = detail::find_statement_end(ts_, i, end);
        expression(i, e, depth);
        return std::max(e + 1, i + 1);
    }

    std::size_t if_statement(std::size_t i, std::size_t end, int depth) {
        event(CognitiveKind::If, depth, i);
        ++facts_.profile.if_count;
        std::size_t j = condition_then_body(i + 1, end, depth);
        while (at(ts_, j, end, "else")) {
            if (at(ts_, j + 1, end, "if")) {
                event(CognitiveKind::ElseIf, depth, j);
                ++facts_.profile.if_count;
                j = condition_then_body(j + 2, end, depth);
            } else {
                event(CognitiveKind::Else, depth, j);
                j = scoped_statement(j + 1, end, depth + 1);
                break;
            }
        }
        return j;
    }

    // ts_[open] should be '(' of a condition; the body follows the ')'.
    std::size_t condition_then_body(std::size_t open, std::size_t end, int depth) {
        if (!at(ts_, open, end, "(")) return detail::find_statement_end(ts_, open, end) + 1;
        const std::size_t close = ts_.match[open];
        expression(open + 1, close, depth);
        return scoped_statement(close + 1, end, depth + 1);
    }

    std::size_t while_statement(std::size_t i, std::size_t end, int depth) {
        event(CognitiveKind::Loop, depth, i);
        ++facts_.profile.loop_count;
        return condition_then_body(i + 1, end, depth);
    }

    std::size_t do_statement(std::size_t i, std::size_t end, int depth) {
        event(CognitiveKind::Loop, depth, i);
        ++facts_.profile.loop_count;
        std::size_t j = scoped_statement(i + 1, end, depth + 1);
        if (at(ts_, j, end, "while") && at(ts_, j + 1, end, "(")) {
            const std::size_t close = ts_.match[j + 1];
            expression(j + 2, close, depth);
            j = close + 1;
        }
        if (at(ts_, j, end, ";")) ++j;
        return j;
    }

    // A `for (;;)` has no branch, so it counts toward CoCo but not CC.
    std::size_t for_statement(std::size_t i, std::size_t end, int depth) {
        event(CognitiveKind::Loop, depth, i);
        if (!at(ts_, i + 1, end, "(")) {
            ++facts_.profile.loop_count;
            return detail::find_statement_end(ts_, i, end) + 1;
        }
        const std::size_t open = i + 1;
        const std::size_t close = ts_.match[open];
        push_scope();
        const std::size_t semi1 = detail::find_statement_end(ts_, open + 1, close);
        if (semi1 == close) {
            ++facts_.profile.loop_count;
            // Enhanced for: `Type name : expr`.
            std::size_t colon = open + 1;
            while (colon < close && !ts_[colon].is(":")) colon = detail::step(ts_, colon);
            if (colon > open + 1 && ts_[colon - 1].is_ident()) declare(ts_[colon - 1].text);
            expression(colon + 1, close, depth);
        } else {
            const std::size_t semi2 = detail::find_statement_end(ts_, semi1 + 1, close);
            if (semi2 > semi1 + 1) ++facts_.profile.loop_count;
            if (std::size_t name = local_declaration_name(open + 1, semi1); name != npos) {
                declarators(name, semi1, depth);
            } else {
                expression(open + 1, semi1, depth);
            }
            expression(semi1 + 1, semi2, depth);
            expression(std::min(semi2 + 1, close), close, depth);
        }
        const std::size_t next = scoped_statement(close + 1, end, depth + 1);
        pop_scope();
        return next;
    }

    std::size_t try_statement(std::size_t i, std::size_t end, int depth) {
        std::size_t j = i + 1;
        push_scope();
        if (at(ts_, j, end, "(")) {
            const std::size_t close = ts_.match[j];
            std::size_t r = j + 1;
            while (r < close) {
                const std::size_t semi = detail::find_statement_end(ts_, r, close);
                if (std::size_t name = local_declaration_name(r, semi); name != npos) {
                    declarators(name, semi, depth);
                } else {
                    expression(r, semi, depth);
                }
                r = semi + 1;
            }
            j = close + 1;
        }
        if (at(ts_, j, end, "{")) {
            block(j, depth);
            j = ts_.match[j] + 1;
        }
        pop_scope();
        while (at(ts_, j, end, "catch") && at(ts_, j + 1, end, "(")) {
            event(CognitiveKind::Catch, depth, j);
            ++facts_.profile.catch_count;
            const std::size_t close = ts_.match[j + 1];
            push_scope();
            if (close > j + 2 && ts_[close - 1].is_ident()) declare(ts_[close - 1].text);
            j = close + 1;
            if (at(ts_, j, end, "{")) {
                block(j, depth + 1);
                j = ts_.match[j] + 1;
            }
            pop_scope();
        }
        if (at(ts_, j, end, "finally") && at(ts_, j + 1, end, "{")) {
            block(j + 1, depth);
            j = ts_.match[j + 1] + 1;
        }
        return j;
    }

    bool is_case_start(std::size_t k, std::size_t end) const {
        if (ts_[k].is("case")) return true;
        return ts_[k].is("default") && (at(ts_, k + 1, end, ":") || at(ts_, k + 1, end, "->"));
    }

    // Used both for switch statements and switch expressions.
    std::size_t switch_construct(std::size_t i, std::size_t end, int depth) {
        event(CognitiveKind::Switch, depth, i);
        std::size_t j = i + 1;
        if (at(ts_, j, end, "(")) {
            expression(j + 1, ts_.match[j], depth);
            j = ts_.match[j] + 1;
        }
        if (!at(ts_, j, end, "{")) return std::max(j, i + 1);
        const std::size_t close = ts_.match[j];
        push_scope();
        std::size_t k = j + 1;
        while (k < close) {
            if (!is_case_start(k, close)) {
                k = statement(k, close, depth + 1);
                continue;
            }
            std::size_t label_end = k + 1;
            if (ts_[k].is("case")) {
                ++facts_.profile.case_label_count;
                while (label_end < close && !ts_[label_end].is(":") && !ts_[label_end].is("->")) {
                    label_end = detail::step(ts_, label_end);
                }
                case_label(k + 1, label_end, depth + 1);
            }
            if (label_end >= close) break;
            if (ts_[label_end].is("->")) {
                const std::size_t b = label_end + 1;
                if (at(ts_, b, close, "{")) {
                    block(b, depth + 1);
                    k = ts_.match[b] + 1;
                } else if (at(ts_, b, close, "throw")) {
                    k = statement(b, close, depth + 1);
                } else {
                    const std::size_t e = detail::find_statement_end(ts_, b, close);
                    expression(b, e, depth + 1);
                    k = e + 1;
                }
            } else {
                k = label_end + 1;
                while (k < close && !is_case_start(k, close)) k = statement(k, close, depth + 1);
            }
        }
        pop_scope();
        return close + 1;
    }

    void case_label(std::size_t begin, std::size_t end, int depth) {
        std::size_t guard = begin;
        while (guard < end && !ts_[guard].is("when")) guard = detail::step(ts_, guard);
        const std::size_t n = guard - begin;
        // Type pattern `Type name`: the trailing identifier is a binding.
        if (n >= 2 && ts_[guard - 1].is_ident() &&
            (ts_[guard - 2].is_ident() || ts_[guard - 2].is(">") || ts_[guard - 2].is("]"))) {
            declare(ts_[guard - 1].text);
        } else {
            expression(begin, guard, depth);
        }
        if (guard < end) expression(guard + 1, end, depth);
    }

    // Local class/interface/enum/record declared inside a body. Its members
    // are analyzed as part of this method, one level deeper.
    std::size_t local_type(std::size_t i, std::size_t end, int depth) {
        std::size_t k = i;
        while (k < end) {
            if (ts_[k].is("@") && !at(ts_, k + 1, end, "interface")) {
                k = detail::skip_annotation(ts_, k, end);
            } else if (ts_[k].is("final") || ts_[k].is("abstract") || ts_[k].is("static") ||
                       ts_[k].is("strictfp")) {
                ++k;
            } else {
                break;
            }
        }
        if (!detail::starts_type_declaration(ts_, k, end)) return npos;
        std::size_t open = k + 1;
        while (open < end && !ts_[open].is("{")) open = detail::step(ts_, open);
        if (open >= end) return end;
        if (ts_[k].is("class")) class_body(open, depth + 1);
        return ts_.match[open] + 1;
    }

    // Index of the declared name if [i, end) starts a local variable
    // declaration, npos otherwise.
    std::size_t local_declaration_name(std::size_t i, std::size_t end) const {
        std::size_t k = i;
        while (k < end) {
            if (ts_[k].is("@")) {
                k = detail::skip_annotation(ts_, k, end);
            } else if (ts_[k].is("final")) {
                ++k;
            } else {
                break;
            }
        }
        if (k >= end) return npos;
        std::size_t name;
        if (ts_[k].is("var") && k + 1 < end && ts_[k + 1].is_ident()) {
            name = k + 1;
        } else {
            name = detail::skip_type(ts_, k, end);
            if (name == npos) return npos;
        }
        if (name >= end || !ts_[name].is_ident() || is_java_keyword(ts_[name].text)) return npos;
        if (name + 1 >= end) return name;  // e.g. resource or for-init ending at the boundary
        const Token& next = ts_[name + 1];
        if (next.is("=") || next.is(";") || next.is(",") || next.is("[") || next.is(":")) return name;
        return npos;
    }

    // Declarators starting at ts_[name]; returns the index of the
    // terminating `;` (or end).
    std::size_t declarators(std::size_t name, std::size_t end, int depth) {
        std::size_t i = name;
        while (i < end && ts_[i].is_ident()) {
            declare(ts_[i].text);
            ++i;
            while (at(ts_, i, end, "[") && at(ts_, i + 1, end, "]")) i += 2;
            if (at(ts_, i, end, "=")) {
                const std::size_t e = detail::find_initializer_end(ts_, i + 1, end);
                expression(i + 1, e, depth);
                i = e;
            }
            if (!at(ts_, i, end, ",")) break;
            ++i;
        }
        return i < end && ts_[i].is(";") ? i : detail::find_statement_end(ts_, i, end);
    }

    // Anonymous or local class body at ts_[open] == '{'.
    void class_body(std::size_t open, int depth) {
        const std::string saved = method_name_;
        method_name_.clear();
        push_scope();
        const std::size_t close = ts_.match[open];
        std::size_t k = open + 1;
        while (k < close) {
            if (ts_[k].is(";")) {
                ++k;
                continue;
            }
            const std::size_t start = k;
            k = detail::skip_modifiers(ts_, k, close);
            if (at(ts_, k, close, "{")) {
                block(k, depth);
                k = ts_.match[k] + 1;
                continue;
            }
            if (std::size_t next = local_type(k, close, depth - 1); next != npos) {
                k = next;
                continue;
            }
            if (at(ts_, k, close, "<")) {
                const std::size_t after = detail::skip_type_args(ts_, k, close);
                k = after == npos ? k + 1 : after;
            }
            std::size_t name = npos;
            if (k < close && ts_[k].is_ident() && at(ts_, k + 1, close, "(")) {
                name = k;  // constructor of a local class
            } else {
                const std::size_t te = detail::skip_type(ts_, k, close);
                if (te != npos && te < close && ts_[te].is_ident()) name = te;
            }
            if (name == npos) {
                k = std::max(detail::find_statement_end(ts_, k, close) + 1, start + 1);
                continue;
            }
            if (at(ts_, name + 1, close, "(")) {
                k = nested_method(name, close, depth);
            } else {
                k = declarators(name, close, depth) + 1;
            }
        }
        pop_scope();
        method_name_ = saved;
    }

    std::size_t nested_method(std::size_t name, std::size_t close, int depth) {
        const std::size_t params_close = ts_.match[name + 1];
        push_scope();
        for (const auto& p : lambda_parameter_names(name + 2, params_close)) declare(p);
        std::size_t j = params_close + 1;
        while (j < close && !ts_[j].is("{") && !ts_[j].is(";")) j = detail::step(ts_, j);
        if (at(ts_, j, close, "{")) {
            statements(j + 1, ts_.match[j], depth);
            j = ts_.match[j];
        }
        pop_scope();
        return j + 1;
    }

    // Last identifier of each comma-separated segment in [begin, end).
    std::vector<std::string_view> lambda_parameter_names(std::size_t begin, std::size_t end) const {
        std::vector<std::string_view> names;
        std::size_t last_ident = npos;
        int angle = 0;
        for (std::size_t i = begin; i < end; i = detail::step(ts_, i)) {
            if (ts_[i].is("<")) ++angle;
            if (ts_[i].is(">")) --angle;
            if (ts_[i].is_ident()) last_ident = i;
            if (angle == 0 && ts_[i].is(",")) {
                if (last_ident != npos) names.push_back(ts_[last_ident].text);
                last_ident = npos;
            }
        }
        if (last_ident != npos) names.push_back(ts_[last_ident].text);
        return names;
    }

    // Expressions ----------------------------------------------------------

    struct Frame {
        std::size_t close;      // closing bracket index; npos for the base frame
        int extra = 0;          // nesting added by ternaries/lambdas in this frame
        int base_extra = 0;
        int lambda_scopes = 0;  // scopes of expression-bodied lambdas still open
        BoolOp last = BoolOp::None;
    };

    void close_lambdas(Frame& f) {
        for (; f.lambda_scopes > 0; --f.lambda_scopes) pop_scope();
        f.extra = f.base_extra;
    }

    // Lambda whose body starts at ts_[body]. Block bodies are walked here;
    // expression bodies stay open in the current frame until `,` or the
    // frame closes. Returns where scanning continues.
    std::size_t lambda(std::size_t body, const std::vector<std::string_view>& params, int depth,
                       Frame& frame, std::size_t end) {
        push_scope();
        for (auto p : params) declare(p);
        if (at(ts_, body, end, "{")) {
            statements(body + 1, ts_.match[body], depth + 1);
            pop_scope();
            return ts_.match[body] + 1;
        }
        ++frame.lambda_scopes;
        ++frame.extra;
        frame.last = BoolOp::None;
        return body;
    }

    static bool is_wildcard(const TokenStream& ts, std::size_t i, std::size_t end) {
        if (i > 0 && ts[i - 1].is("<")) return true;
        return i + 1 < end && (ts[i + 1].is(">") || ts[i + 1].is(",") || ts[i + 1].is("extends") ||
                               ts[i + 1].is("super"));
    }

    void expression(std::size_t begin, std::size_t end, int depth) {
        std::vector<Frame> frames{Frame{npos}};
        std::size_t i = begin;
        while (i < end) {
            Frame& f = frames.back();
            if (i == f.close) {
                close_lambdas(f);
                frames.pop_back();
                ++i;
                continue;
            }
            const Token& t = ts_[i];
            const int cur = depth + f.extra;

            if (t.is("(")) {
                const std::size_t close = ts_.match[i];
                if (at(ts_, close + 1, end, "->")) {
                    i = lambda(close + 2, lambda_parameter_names(i + 1, close), cur, f, end);
                } else {
                    frames.push_back(Frame{close, f.extra, f.extra});
                    ++i;
                }
            } else if (t.is("[") || t.is("{")) {
                frames.push_back(Frame{ts_.match[i], f.extra, f.extra});
                ++i;
            } else if (t.is("&&") || t.is("||")) {
                const BoolOp op = t.is("&&") ? BoolOp::And : BoolOp::Or;
                ++facts_.profile.short_circuit_count;
                if (f.last != op) event(CognitiveKind::BooleanSequence, cur, i);
                f.last = op;
                ++i;
            } else if (t.is("?")) {
                if (!is_wildcard(ts_, i, end)) {
                    ++facts_.profile.ternary_count;
                    event(CognitiveKind::Ternary, cur, i);
                    ++f.extra;
                    f.last = BoolOp::None;
                }
                ++i;
            } else if (t.is(":") || t.is("->") || is_assignment(t)) {
                f.last = BoolOp::None;
                ++i;
            } else if (t.is(",")) {
                close_lambdas(f);
                f.last = BoolOp::None;
                ++i;
            } else if (t.is(".") && at(ts_, i + 1, end, "<")) {
                const std::size_t after = detail::skip_type_args(ts_, i + 1, end);
                i = after == npos ? i + 1 : after;
            } else if (t.is("new")) {
                i = creation(i, end, cur);
            } else if (t.is("switch")) {
                i = switch_construct(i, end, cur);
            } else if (t.is("this")) {
                i = this_access(i, end, cur);
            } else if (t.is("super") && at(ts_, i + 1, end, ".")) {
                i += 3;  // inherited members never count
            } else if (t.is("instanceof")) {
                i = instanceof_pattern(i, end);
            } else if (t.is_ident()) {
                if (at(ts_, i + 1, end, "->")) {
                    i = lambda(i + 2, {t.text}, cur, f, end);
                } else {
                    identifier(i, end, cur);
                    ++i;
                }
            } else {
                ++i;
            }
        }
        for (auto it = frames.rbegin(); it != frames.rend(); ++it) close_lambdas(*it);
    }

    void identifier(std::size_t i, std::size_t end, int depth) {
        const Token& t = ts_[i];
        if (is_java_keyword(t.text)) return;
        if (i > 0 && (ts_[i - 1].is(".") || ts_[i - 1].is("::"))) return;
        if (at(ts_, i + 1, end, "(")) {
            if (!method_name_.empty() && t.is(method_name_)) recursion(depth, i);
            return;
        }
        const std::string name(t.text);
        if (attributes_.count(name) && !shadowed(name)) facts_.accessed_attributes.insert(name);
    }

    std::size_t this_access(std::size_t i, std::size_t end, int depth) {
        const bool qualified_outer = i > 0 && ts_[i - 1].is(".");
        if (!(at(ts_, i + 1, end, ".") && i + 2 < end && ts_[i + 2].is_ident())) return i + 1;
        const Token& member = ts_[i + 2];
        if (at(ts_, i + 3, end, "(")) {
            if (!qualified_outer && !method_name_.empty() && member.is(method_name_)) recursion(depth, i);
        } else if (!qualified_outer && attributes_.count(std::string(member.text))) {
            facts_.accessed_attributes.insert(std::string(member.text));
        }
        return i + 3;
    }

    std::size_t creation(std::size_t i, std::size_t end, int depth) {
        std::size_t j = i + 1;
        if (at(ts_, j, end, "<")) {
            const std::size_t after = detail::skip_type_args(ts_, j, end);
            j = after == npos ? j + 1 : after;
        }
        const std::size_t te = detail::skip_type(ts_, j, end);
        if (te == npos) return j;
        if (at(ts_, te, end, "(")) {
            const std::size_t close = ts_.match[te];
            if (at(ts_, close + 1, end, "{")) {
                expression(te + 1, close, depth);
                class_body(close + 1, depth + 1);
                return ts_.match[close + 1] + 1;
            }
        }
        return te;
    }

    std::size_t instanceof_pattern(std::size_t i, std::size_t end) {
        std::size_t j = i + 1;
        if (at(ts_, j, end, "final")) ++j;
        const std::size_t te = detail::skip_type(ts_, j, end);
        if (te == npos) return j;
        if (te < end && ts_[te].is_ident() && !is_java_keyword(ts_[te].text)) {
            declare(ts_[te].text);
            return te + 1;
        }
        if (at(ts_, te, end, "(")) {  // record pattern
            const std::size_t close = ts_.match[te];
            for (std::size_t k = te + 1; k < close; ++k) {
                if (ts_[k].is_ident() && (ts_[k + 1].is(",") || ts_[k + 1].is(")")) &&
                    (ts_[k - 1].is_ident() || ts_[k - 1].is(">"))) {
                    declare(ts_[k].text);
                }
            }
            return close + 1;
        }
        return te;
    }

    const TokenStream& ts_;
    const std::set<std::string>& attributes_;
    std::string method_name_;
    bool recursion_seen_ = false;
    std::vector<std::set<std::string>> scopes_;
    BodyFacts facts_;
};

}  // namespace

BodyFacts analyze_body(const TokenStream& tokens, std::size_t begin, std::size_t end,
                       const AccessContext& context) {
    return BodyAnalyzer(tokens, context).run(begin, end);
}

}  // namespace functor_audit
