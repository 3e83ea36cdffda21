#pragma once

// Internal lexer shared by the program parser and the formula parser.

#include <amt/errors.hpp>
#include <amt/syntax.hpp>

#include <cctype>
#include <string>
#include <string_view>

namespace amt::detail {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    struct Token {
        enum Kind {
            Ident, Number, Dot, Comma, Semi, LBrace, RBrace, LParen, RParen, Star, Minus,
            If, Rel_, Not, AmpSum, AmpDiff, External, Amp, Pipe, Arrow, End
        };
        Kind kind = End;
        std::string value;
        Rel rel = Rel::Le;
        int line = 1;
        int col = 1;
    };

    Token tok;

    explicit Lexer(std::string_view t) : text(t) { advance(); }

    [[noreturn]] void fail(const std::string& msg, int l, int c) const { throw ParseError(msg, l, c); }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, tok.line, tok.col); }

    char peek(std::size_t ahead = 0) const { return pos + ahead < text.size() ? text[pos + ahead] : '\0'; }

    char bump() {
        char c = text[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip_ws() {
        while (pos < text.size()) {
            char c = peek();
            if (c == '%') {
                while (pos < text.size() && peek() != '\n') {
                    bump();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
    }

    // True when the characters at the cursor spell `word` followed
    // (possibly after whitespace) by '{'. Does not consume anything.
    bool peek_theory_prefix(std::string_view word) const {
        std::size_t p = pos;
        for (char c : word) {
            if (p >= text.size() || text[p] != c) {
                return false;
            }
            ++p;
        }
        while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) {
            ++p;
        }
        return p < text.size() && text[p] == '{';
    }

    void advance() {
        skip_ws();
        tok.line = line;
        tok.col = col;
        tok.value.clear();
        if (pos >= text.size()) {
            tok.kind = Token::End;
            return;
        }
        char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '\'')) {
                tok.value.push_back(bump());
            }
            tok.kind = tok.value == "not" ? Token::Not : Token::Ident;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
                tok.value.push_back(bump());
            }
            tok.kind = Token::Number;
            return;
        }
        bump();
        switch (c) {
            case '.': tok.kind = Token::Dot; return;
            case ',': tok.kind = Token::Comma; return;
            case ';': tok.kind = Token::Semi; return;
            case '{': tok.kind = Token::LBrace; return;
            case '}': tok.kind = Token::RBrace; return;
            case '(': tok.kind = Token::LParen; return;
            case ')': tok.kind = Token::RParen; return;
            case '*': tok.kind = Token::Star; return;
            case '|': tok.kind = Token::Pipe; return;
            case '-':
                if (peek() == '>') {
                    bump();
                    tok.kind = Token::Arrow;
                    return;
                }
                tok.kind = Token::Minus;
                return;
            case ':':
                if (peek() == '-') {
                    bump();
                    tok.kind = Token::If;
                    return;
                }
                fail("expected '-' after ':'", tok.line, tok.col);
            case '<':
                tok.kind = Token::Rel_;
                if (peek() == '=') {
                    bump();
                    tok.rel = Rel::Le;
                } else {
                    tok.rel = Rel::Lt;
                }
                return;
            case '>':
                tok.kind = Token::Rel_;
                if (peek() == '=') {
                    bump();
                    tok.rel = Rel::Ge;
                } else {
                    tok.rel = Rel::Gt;
                }
                return;
            case '=':
                tok.kind = Token::Rel_;
                tok.rel = Rel::Eq;
                return;
            case '!':
                if (peek() == '=') {
                    bump();
                    tok.kind = Token::Rel_;
                    tok.rel = Rel::Ne;
                    return;
                }
                fail("expected '=' after '!'", tok.line, tok.col);
            case '&': {
                if (peek_theory_prefix("sum")) {
                    pos += 3;
                    col += 3;
                    tok.kind = Token::AmpSum;
                    return;
                }
                if (peek_theory_prefix("diff")) {
                    pos += 4;
                    col += 4;
                    tok.kind = Token::AmpDiff;
                    return;
                }
                tok.kind = Token::Amp;
                return;
            }
            case '#': {
                std::string word;
                while (pos < text.size() && std::isalpha(static_cast<unsigned char>(peek()))) {
                    word.push_back(bump());
                }
                if (word == "external") {
                    tok.kind = Token::External;
                    return;
                }
                fail("unknown directive '#" + word + "'", tok.line, tok.col);
            }
            default:
                fail(std::string("unexpected character '") + c + "'", tok.line, tok.col);
        }
    }
};

// Shared atom-level parsing over a lexer.
struct AtomParser {
    Lexer& lex;
    bool normalize_terms = false;

    using Token = Lexer::Token;

    bool at(Token::Kind k) const { return lex.tok.kind == k; }

    void expect(Token::Kind k, const char* what) {
        if (!at(k)) {
            lex.fail(std::string("expected ") + what);
        }
        lex.advance();
    }

    Int parse_int() {
        bool neg = false;
        if (at(Token::Minus)) {
            neg = true;
            lex.advance();
        }
        if (!at(Token::Number)) {
            lex.fail("expected integer");
        }
        Int n(lex.tok.value);
        lex.advance();
        return neg ? Int(-n) : n;
    }

    std::string parse_ident() {
        if (!at(Token::Ident)) {
            lex.fail("expected identifier");
        }
        std::string s = lex.tok.value;
        lex.advance();
        return s;
    }

    TheoryAtom parse_tatom();
};

} // namespace amt::detail
