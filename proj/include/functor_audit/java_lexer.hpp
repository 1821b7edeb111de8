#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace functor_audit {

/// Raised for any input the Java front end cannot make sense of. The
/// offending file is skipped by callers, never the whole run.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, int line, std::string message);

    const std::string& file() const noexcept { return file_; }
    int line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string file_;
    int line_;
    std::string reason_;
};

enum class TokenKind { Identifier, Number, String, Char, Operator };

struct Token {
    TokenKind kind;
    std::string_view text;  // view into the lexed source
    int line;               // 1-based

    bool is(std::string_view s) const noexcept { return text == s; }
    bool is_ident() const noexcept { return kind == TokenKind::Identifier; }
};

/// Token stream plus a bracket-match table: for every `(`, `[`, `{` the
/// index of its closing partner and vice versa; npos for other tokens.
struct TokenStream {
    std::vector<Token> tokens;
    std::vector<std::size_t> match;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t size() const noexcept { return tokens.size(); }
    const Token& operator[](std::size_t i) const { return tokens[i]; }
};

/// Tokenizes Java source. Comments and whitespace are dropped. `>>` and
/// `>>>` are emitted as separate `>` tokens so generic argument lists close
/// cleanly; shift semantics are irrelevant for the metrics. Brackets must
/// balance, otherwise ParseError.
TokenStream lex_java(std::string_view source, const std::string& file_id);

/// Reserved words plus the literals true/false/null.
bool is_java_keyword(std::string_view word) noexcept;

bool is_primitive_type(std::string_view word) noexcept;

}  // namespace functor_audit
