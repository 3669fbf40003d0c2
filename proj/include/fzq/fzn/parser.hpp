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

#ifndef FZQ_FZN_PARSER_HPP
#define FZQ_FZN_PARSER_HPP

#include <string_view>

#include "fzq/fzn/ast.hpp"

namespace fzq::fzn {

/// Parses the supported FlatZinc fragment. Annotations are parsed and dropped.
/// Throws Error (SyntaxError / UnsupportedItem) with a source location.
FzModel parse_model(std::string_view source);

}  // namespace fzq::fzn

#endif  // FZQ_FZN_PARSER_HPP
