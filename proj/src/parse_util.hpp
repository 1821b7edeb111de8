#pragma once

// Token-level helpers shared by the class-structure parser and the method
// body analyzer. All functions take a half-open token range and return the
// index just past what they consumed; TokenStream::npos means "not present".

#include <cstddef>
#include <string>
#include <vector>

#include "functor_audit/java_lexer.hpp"

namespace functor_audit::detail {

constexpr std::size_t npos = TokenStream::npos;

inline bool at(const TokenStream& ts, std::size_t i, std::size_t end, std::string_view text) {
    return i < end && ts[i].is(text);
}

/// `@Name`, `@a.b.Name` or `@Name(...)`. Caller guarantees ts[i] is `@`
/// and is not followed by `interface`.
std::size_t skip_annotation(const TokenStream& ts, std::size_t i, std::size_t end);

/// Annotations and modifier keywords (including `non-sealed`).
std::size_t skip_modifiers(const TokenStream& ts, std::size_t i, std::size_t end,
                           bool* is_static = nullptr);

/// Balanced `<...>` starting at ts[i] == `<`; npos when the tokens inside
/// cannot belong to a type argument list.
std::size_t skip_type_args(const TokenStream& ts, std::size_t i, std::size_t end);

/// A full type: primitive or qualified name with type arguments, followed
/// by any number of `[]` pairs. npos if ts[i] does not start a type.
std::size_t skip_type(const TokenStream& ts, std::size_t i, std::size_t end);

/// Token texts of [begin, end) concatenated without whitespace and with
/// annotations removed.
std::string type_text(const TokenStream& ts, std::size_t begin, std::size_t end);

/// Skips over a bracket group if ts[i] opens one, otherwise advances by one.
inline std::size_t step(const TokenStream& ts, std::size_t i) {
    const std::size_t m = ts.match[i];
    return (m != npos && m > i) ? m + 1 : i + 1;
}

/// Index of the first `;` at bracket depth zero in [i, end), or end.
std::size_t find_statement_end(const TokenStream& ts, std::size_t i, std::size_t end);

/// End of a variable initializer: first `,` or `;` at depth zero, treating
/// `new T<A, B>` and `.<A, B>` type arguments as opaque.
std::size_t find_initializer_end(const TokenStream& ts, std::size_t i, std::size_t end);

/// True for `class`, `interface`, `enum`, `@interface` and contextual
/// `record Name(` / `record Name<` at ts[i].
bool starts_type_declaration(const TokenStream& ts, std::size_t i, std::size_t end);

struct Parameter {
    std::string type;
    std::string name;
};

/// Formal parameters between ts[open] == `(` and ts[close] == `)`.
/// Receiver parameters (`Foo this`) are omitted.
std::vector<Parameter> parse_parameters(const TokenStream& ts, std::size_t open, std::size_t close,
                                        const std::string& file_id);

}  // namespace functor_audit::detail
