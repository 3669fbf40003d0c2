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

#ifndef FZQ_FZN_BUILTINS_HPP
#define FZQ_FZN_BUILTINS_HPP

#include <span>
#include <string_view>
#include <vector>

namespace fzq::fzn {

enum class ParamKind {
    VarInt,        // var int (int literals accepted)
    VarBool,       // var bool (bool literals accepted)
    ParInt,        // int
    ArrayParInt,   // array [int] of int
    ArrayParBool,  // array [int] of bool
    ArrayVarInt,   // array [int] of var int
    ArrayVarBool,  // array [int] of var bool
    ParSet,        // set of int
};

struct Signature {
    std::string_view name;
    std::vector<ParamKind> params;
};

/// All supported builtin signatures. `bool_xor` appears twice (binary and ternary).
const std::vector<Signature>& builtin_signatures();

/// Distinct supported builtin names, in table order.
std::vector<std::string_view> builtin_names();

/// Signatures registered under `name`; empty when the builtin is unsupported.
std::vector<const Signature*> find_signatures(std::string_view name);

bool is_supported_builtin(std::string_view name);

/// Builtins whose last argument is the reification variable.
bool is_reified(std::string_view name);

}  // namespace fzq::fzn

#endif  // FZQ_FZN_BUILTINS_HPP
