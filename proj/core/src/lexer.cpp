#include "lexer.hpp"

#include <cctype>

namespace causekit::detail {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

} // namespace

const char* describe(TokenKind kind) {
    switch (kind) {
    case TokenKind::identifier: return "identifier";
    case TokenKind::number: return "number";
    case TokenKind::quoted: return "quoted string";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::comma: return "','";
    case TokenKind::period: return "'.'";
    case TokenKind::implied_by: return "':-'";
    case TokenKind::lbracket: return "'['";
    case TokenKind::rbracket: return "']'";
    case TokenKind::end: return "end of input";
    }
    return "token";
}

bool is_bare_constant(std::string_view s) noexcept {
    if (s.empty())
        return false;
    const char c = s.front();
    if (!(digit(c) || (c >= 'a' && c <= 'z')))
        return false;
    for (char ch : s)
        if (!ident_char(ch))
            return false;
    return true;
}

Token Lexer::next() {
    Token t = std::move(current_);
    advance();
    return t;
}

Token Lexer::expect(TokenKind kind, const char* context) {
    if (current_.kind != kind)
        fail_at(current_, std::string("expected ") + describe(kind) + " " + context + ", found " +
                              describe(current_.kind) +
                              (current_.text.empty() ? "" : " '" + current_.text + "'"));
    return next();
}

void Lexer::fail(const std::string& message) const { fail_at(current_, message); }

void Lexer::fail_at(const Token& token, const std::string& message) {
    throw ParseError(message, token.line, token.column);
}

void Lexer::bump() {
    if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
    } else {
        ++column_;
    }
    ++pos_;
}

void Lexer::skip_space_and_comments() {
    while (pos_ < text_.size()) {
        const char c = text_[pos_];
        if (std::isspace(static_cast<unsigned char>(c))) {
            bump();
        } else if (c == '%') {
            while (pos_ < text_.size() && text_[pos_] != '\n')
                bump();
        } else {
            break;
        }
    }
}

void Lexer::advance() {
    skip_space_and_comments();
    current_ = Token{};
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
        current_.kind = TokenKind::end;
        return;
    }
    const char c = text_[pos_];
    auto single = [&](TokenKind kind) {
        current_.kind = kind;
        current_.text = std::string(1, c);
        bump();
    };
    switch (c) {
    case '(': single(TokenKind::lparen); return;
    case ')': single(TokenKind::rparen); return;
    case ',': single(TokenKind::comma); return;
    case '.': single(TokenKind::period); return;
    case '[': single(TokenKind::lbracket); return;
    case ']': single(TokenKind::rbracket); return;
    case ':':
        if (peek_char(1) == '-') {
            current_.kind = TokenKind::implied_by;
            current_.text = ":-";
            bump();
            bump();
            return;
        }
        fail("unexpected ':'");
    case '"': {
        bump();
        std::string value;
        while (true) {
            if (pos_ >= text_.size())
                fail("unterminated string");
            const char ch = text_[pos_];
            if (ch == '"') {
                bump();
                break;
            }
            if (ch == '\n')
                fail("newline in string");
            if (ch == '\\') {
                bump();
                if (pos_ >= text_.size())
                    fail("unterminated string");
                const char esc = text_[pos_];
                if (esc != '"' && esc != '\\')
                    fail(std::string("unknown escape '\\") + esc + "'");
                value.push_back(esc);
                bump();
                continue;
            }
            value.push_back(ch);
            bump();
        }
        current_.kind = TokenKind::quoted;
        current_.text = std::move(value);
        return;
    }
    default:
        break;
    }
    if (ident_start(c) || digit(c)) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && ident_char(text_[pos_]))
            bump();
        current_.kind = digit(c) ? TokenKind::number : TokenKind::identifier;
        current_.text = std::string(text_.substr(start, pos_ - start));
        return;
    }
    fail(std::string("unexpected character '") + c + "'");
}

} // namespace causekit::detail
