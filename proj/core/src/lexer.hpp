#pragma once

#include <causekit/error.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace causekit::detail {

enum class TokenKind {
    identifier, // [A-Za-z_][A-Za-z0-9_]*
    number,     // [0-9][A-Za-z0-9_]*
    quoted,     // "..." (text holds the unescaped content)
    lparen,
    rparen,
    comma,
    period,
    implied_by, // :-
    lbracket,
    rbracket,
    end,
};

struct Token {
    TokenKind kind = TokenKind::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

const char* describe(TokenKind kind);

/// Shared tokenizer for fact and rule files. `%` starts a line comment.
class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const noexcept { return current_; }
    Token next();
    bool at(TokenKind kind) const noexcept { return current_.kind == kind; }
    Token expect(TokenKind kind, const char* context);

    [[noreturn]] void fail(const std::string& message) const;
    [[noreturn]] static void fail_at(const Token& token, const std::string& message);

private:
    void advance();
    void skip_space_and_comments();
    char peek_char(std::size_t ahead = 0) const noexcept {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    void bump();

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
    Token current_;
};

bool is_bare_constant(std::string_view s) noexcept;

} // namespace causekit::detail
