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

#ifndef FZQ_SRC_FZN_LEXER_HPP
#define FZQ_SRC_FZN_LEXER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fzq/error.hpp"

namespace fzq::fzn::detail {

enum class Tok {
    Ident,
    Int,
    Float,
    String,
    Semi,
    Colon,
    ColonColon,
    Comma,
    LBracket,
    RBracket,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Equals,
    DotDot,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::int64_t value = 0;
    SourceLoc loc;
};

/// Splits FlatZinc source into tokens; `%` starts a comment running to end of line.
std::vector<Token> tokenize(std::string_view source);

std::string_view describe(Tok kind);

}  // namespace fzq::fzn::detail

#endif  // FZQ_SRC_FZN_LEXER_HPP
