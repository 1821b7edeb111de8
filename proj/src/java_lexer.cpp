#include "functor_audit/java_lexer.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

namespace functor_audit {

ParseError::ParseError(std::string file, int line, std::string message)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + message),
      file_(std::move(file)),
      line_(line),
      reason_(std::move(message)) {}

namespace {

constexpr std::string_view kKeywords[] = {
    "abstract", "assert", "boolean", "break", "byte", "case",
    "catch", "char", "class", "const", "continue", "default", "do", "double",
    "else", "enum", "extends", "false", "final", "finally", "float", "for",
    "goto", "if", "implements", "import", "instanceof", "int", "interface",
    "long", "native", "new", "null", "package", "private", "protected",
    "public", "return", "short", "static", "strictfp", "super", "switch",
    "synchronized", "this", "throw", "throws", "transient", "true", "try",
    "void", "volatile", "while"};

constexpr std::string_view kPrimitives[] = {
    "boolean", "byte", "char", "short", "int", "long",
    "float", "double", "void"};

// Longest first so that greedy matching works.
constexpr std::string_view kOperators[] = {
    ">>>=", "<<=", ">>=", "...", "->", "::", "++", "--",
    "&&", "||", "==", "!=", "<=", ">=", "+=", "-=", "*=", "/=", "%=", "&=",
    "|=", "^=", "<<"};

constexpr std::string_view kSingleOps = "(){}[];,.@=><!~?:+-*/&|^%";

bool ident_start(unsigned char c) {
    return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool ident_part(unsigned char c) {
    return ident_start(c) || std::isdigit(c);
}

class Lexer {
public:
    Lexer(std::string_view src, const std::string& file) : src_(src), file_(file) {}

    TokenStream run() {
        TokenStream out;
        while (pos_ < src_.size()) {
            const unsigned char c = static_cast<unsigned char>(src_[pos_]);
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (c == '\r') {
                ++pos_;
                if (pos_ >= src_.size() || src_[pos_] != '\n') ++line_;
            } else if (c == ' ' || c == '\t' || c == '\f' || c == '\v') {
                ++pos_;
            } else if (c == '/' && peek(1) == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\r') ++pos_;
            } else if (c == '/' && peek(1) == '*') {
                block_comment();
            } else if (ident_start(c)) {
                const std::size_t start = pos_;
                while (pos_ < src_.size() && ident_part(static_cast<unsigned char>(src_[pos_]))) ++pos_;
                push(out, TokenKind::Identifier, start, line_);
            } else if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
                number(out);
            } else if (c == '"') {
                string_literal(out);
            } else if (c == '\'') {
                char_literal(out);
            } else {
                op(out);
            }
        }
        out.match = match_brackets(out.tokens);
        return out;
    }

private:
    char peek(std::size_t ahead) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    [[noreturn]] void fail(int line, const std::string& msg) const {
        throw ParseError(file_, line, msg);
    }

    void push(TokenStream& out, TokenKind kind, std::size_t start, int line) {
        out.tokens.push_back(Token{kind, src_.substr(start, pos_ - start), line});
    }

    void newline_at(std::size_t i) {
        if (src_[i] == '\n') {
            ++line_;
        } else if (src_[i] == '\r' && (i + 1 >= src_.size() || src_[i + 1] != '\n')) {
            ++line_;
        }
    }

    void block_comment() {
        const int start_line = line_;
        pos_ += 2;
        while (pos_ + 1 < src_.size() && !(src_[pos_] == '*' && src_[pos_ + 1] == '/')) {
            newline_at(pos_);
            ++pos_;
        }
        if (pos_ + 1 >= src_.size()) fail(start_line, "unterminated comment");
        pos_ += 2;
    }

    void number(TokenStream& out) {
        const std::size_t start = pos_;
        const bool hex = src_[pos_] == '0' && (peek(1) == 'x' || peek(1) == 'X');
        while (pos_ < src_.size()) {
            const unsigned char c = static_cast<unsigned char>(src_[pos_]);
            const bool exponent = hex ? (c == 'p' || c == 'P') : (c == 'e' || c == 'E');
            if (exponent && (peek(1) == '+' || peek(1) == '-')) {
                pos_ += 2;
            } else if (std::isalnum(c) || c == '_' || c == '.') {
                ++pos_;
            } else {
                break;
            }
        }
        push(out, TokenKind::Number, start, line_);
    }

    void string_literal(TokenStream& out) {
        const std::size_t start = pos_;
        const int start_line = line_;
        if (peek(1) == '"' && peek(2) == '"') {
            pos_ += 3;
            while (pos_ < src_.size()) {
                if (src_[pos_] == '\\') {
                    if (pos_ + 1 < src_.size()) newline_at(pos_ + 1);
                    pos_ += 2;
                } else if (src_[pos_] == '"' && peek(1) == '"' && peek(2) == '"') {
                    pos_ += 3;
                    out.tokens.push_back(Token{TokenKind::String, src_.substr(start, pos_ - start), start_line});
                    return;
                } else {
                    newline_at(pos_);
                    ++pos_;
                }
            }
            fail(start_line, "unterminated text block");
        }
        ++pos_;
        while (pos_ < src_.size() && src_[pos_] != '"') {
            if (src_[pos_] == '\n' || src_[pos_] == '\r') fail(start_line, "unterminated string literal");
            pos_ += src_[pos_] == '\\' ? 2 : 1;
        }
        if (pos_ >= src_.size()) fail(start_line, "unterminated string literal");
        ++pos_;
        push(out, TokenKind::String, start, start_line);
    }

    void char_literal(TokenStream& out) {
        const std::size_t start = pos_;
        ++pos_;
        while (pos_ < src_.size() && src_[pos_] != '\'') {
            if (src_[pos_] == '\n' || src_[pos_] == '\r') fail(line_, "unterminated character literal");
            pos_ += src_[pos_] == '\\' ? 2 : 1;
        }
        if (pos_ >= src_.size()) fail(line_, "unterminated character literal");
        ++pos_;
        push(out, TokenKind::Char, start, line_);
    }

    void op(TokenStream& out) {
        const std::string_view rest = src_.substr(pos_);
        for (std::string_view candidate : kOperators) {
            if (rest.starts_with(candidate)) {
                const std::size_t start = pos_;
                pos_ += candidate.size();
                push(out, TokenKind::Operator, start, line_);
                return;
            }
        }
        if (kSingleOps.find(src_[pos_]) == std::string_view::npos) {
            fail(line_, std::string("unexpected character '") + src_[pos_] + "'");
        }
        const std::size_t start = pos_++;
        push(out, TokenKind::Operator, start, line_);
    }

    std::vector<std::size_t> match_brackets(const std::vector<Token>& toks) const {
        std::vector<std::size_t> match(toks.size(), TokenStream::npos);
        std::vector<std::size_t> stack;
        for (std::size_t i = 0; i < toks.size(); ++i) {
            const Token& t = toks[i];
            if (t.kind != TokenKind::Operator || t.text.size() != 1) continue;
            const char c = t.text[0];
            if (c == '(' || c == '[' || c == '{') {
                stack.push_back(i);
            } else if (c == ')' || c == ']' || c == '}') {
                if (stack.empty()) fail(t.line, std::string("unbalanced '") + c + "'");
                const char open = toks[stack.back()].text[0];
                const char expected = open == '(' ? ')' : open == '[' ? ']' : '}';
                if (c != expected) {
                    fail(toks[stack.back()].line, std::string("unclosed '") + open + "' before '" + c + "' on line " +
                                                      std::to_string(t.line));
                }
                match[i] = stack.back();
                match[stack.back()] = i;
                stack.pop_back();
            }
        }
        if (!stack.empty()) fail(toks[stack.back()].line, "unclosed bracket");
        return match;
    }

    std::string_view src_;
    const std::string& file_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

}  // namespace

TokenStream lex_java(std::string_view source, const std::string& file_id) {
    return Lexer(source, file_id).run();
}

bool is_java_keyword(std::string_view word) noexcept {
    return std::find(std::begin(kKeywords), std::end(kKeywords), word) != std::end(kKeywords);
}

bool is_primitive_type(std::string_view word) noexcept {
    return std::find(std::begin(kPrimitives), std::end(kPrimitives), word) != std::end(kPrimitives);
}

}  // namespace functor_audit
