// Copyright 2026 The fzq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fzn/lexer.hpp"

#include <cctype>
#include <charconv>

namespace fzq::fzn::detail {

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space_and_comments();
            Token t;
            t.loc = {line_, col_};
            if (pos_ >= src_.size()) {
                t.kind = Tok::End;
                out.push_back(std::move(t));
                return out;
            }
            const char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                lex_ident(t);
            } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                       (c == '-' && pos_ + 1 < src_.size() &&
                        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
                lex_number(t);
            } else if (c == '"') {
                lex_string(t);
            } else {
                lex_punct(t);
            }
            out.push_back(std::move(t));
        }
    }

private:
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    void lex_ident(Token& t) {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            advance();
        }
        t.kind = Tok::Ident;
        t.text = std::string(src_.substr(start, pos_ - start));
    }

    void lex_number(Token& t) {
        const std::size_t start = pos_;
        if (peek() == '-') {
            advance();
        }
        bool is_float = false;
        int base = 10;
        if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'o')) {
            base = peek(1) == 'x' ? 16 : 8;
            advance();
            advance();
        }
        while (pos_ < src_.size() && std::isxdigit(static_cast<unsigned char>(src_[pos_])) &&
               (base == 16 || std::isdigit(static_cast<unsigned char>(src_[pos_])))) {
            advance();
        }
        // "1..3" is a range, "1.5" a float.
        if (base == 10 && peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            is_float = true;
            advance();
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                advance();
            }
        }
        if (base == 10 && (peek() == 'e' || peek() == 'E')) {
            is_float = true;
            advance();
            if (peek() == '+' || peek() == '-') {
                advance();
            }
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                advance();
            }
        }
        t.text = std::string(src_.substr(start, pos_ - start));
        if (is_float) {
            t.kind = Tok::Float;
            return;
        }
        t.kind = Tok::Int;
        std::string_view digits = t.text;
        const bool negative = digits.front() == '-';
        if (negative) {
            digits.remove_prefix(1);
        }
        if (base != 10) {
            digits.remove_prefix(2);
        }
        std::uint64_t magnitude = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), magnitude, base);
        const std::uint64_t limit = negative ? (std::uint64_t{1} << 63) : (std::uint64_t{1} << 63) - 1;
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || magnitude > limit) {
            throw Error(ErrorCode::SyntaxError, t.text, "integer literal out of range: " + t.text, t.loc);
        }
        t.value = negative ? static_cast<std::int64_t>(0 - magnitude) : static_cast<std::int64_t>(magnitude);
    }

    void lex_string(Token& t) {
        advance();
        std::string s;
        while (pos_ < src_.size() && src_[pos_] != '"') {
            if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) {
                advance();
            }
            s.push_back(src_[pos_]);
            advance();
        }
        if (pos_ >= src_.size()) {
            throw Error(ErrorCode::SyntaxError, "\"", "unterminated string literal", t.loc);
        }
        advance();
        t.kind = Tok::String;
        t.text = std::move(s);
    }

    void lex_punct(Token& t) {
        const char c = peek();
        auto single = [&](Tok k) {
            t.kind = k;
            t.text = std::string(1, c);
            advance();
        };
        switch (c) {
            case ';': return single(Tok::Semi);
            case ',': return single(Tok::Comma);
            case '[': return single(Tok::LBracket);
            case ']': return single(Tok::RBracket);
            case '(': return single(Tok::LParen);
            case ')': return single(Tok::RParen);
            case '{': return single(Tok::LBrace);
            case '}': return single(Tok::RBrace);
            case '=': return single(Tok::Equals);
            case ':':
                if (peek(1) == ':') {
                    t.kind = Tok::ColonColon;
                    t.text = "::";
                    advance();
                    advance();
                    return;
                }
                return single(Tok::Colon);
            case '.':
                if (peek(1) == '.') {
                    t.kind = Tok::DotDot;
                    t.text = "..";
                    advance();
                    advance();
                    return;
                }
                break;
            default:
                break;
        }
        throw Error(ErrorCode::SyntaxError, std::string(1, c),
                    std::string("unexpected character '") + c + "'", t.loc);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

std::string_view describe(Tok kind) {
    switch (kind) {
        case Tok::Ident: return "identifier";
        case Tok::Int: return "integer";
        case Tok::Float: return "float";
        case Tok::String: return "string";
        case Tok::Semi: return "';'";
        case Tok::Colon: return "':'";
        case Tok::ColonColon: return "'::'";
        case Tok::Comma: return "','";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::Equals: return "'='";
        case Tok::DotDot: return "'..'";
        case Tok::End: return "end of input";
    }
    return "token";
}

}  // namespace fzq::fzn::detail
