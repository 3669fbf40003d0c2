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

#include "fzq/fzn/builtins.hpp"

#include <algorithm>

namespace fzq::fzn {

namespace {

using enum ParamKind;

std::vector<Signature> make_table() {
    return {
        // integer builtins
        {"array_int_element", {VarInt, ArrayParInt, VarInt}},
        {"array_int_maximum", {VarInt, ArrayVarInt}},
        {"array_int_minimum", {VarInt, ArrayVarInt}},
        {"array_var_int_element", {VarInt, ArrayVarInt, VarInt}},
        {"int_abs", {VarInt, VarInt}},
        {"int_div", {VarInt, VarInt, VarInt}},
        {"int_eq", {VarInt, VarInt}},
        {"int_eq_reif", {VarInt, VarInt, VarBool}},
        {"int_le", {VarInt, VarInt}},
        {"int_le_reif", {VarInt, VarInt, VarBool}},
        {"int_lin_eq", {ArrayParInt, ArrayVarInt, ParInt}},
        {"int_lin_eq_reif", {ArrayParInt, ArrayVarInt, ParInt, VarBool}},
        {"int_lin_le", {ArrayParInt, ArrayVarInt, ParInt}},
        {"int_lin_le_reif", {ArrayParInt, ArrayVarInt, ParInt, VarBool}},
        {"int_lin_ne", {ArrayParInt, ArrayVarInt, ParInt}},
        {"int_lin_ne_reif", {ArrayParInt, ArrayVarInt, ParInt, VarBool}},
        {"int_lt", {VarInt, VarInt}},
        {"int_lt_reif", {VarInt, VarInt, VarBool}},
        {"int_max", {VarInt, VarInt, VarInt}},
        {"int_min", {VarInt, VarInt, VarInt}},
        {"int_mod", {VarInt, VarInt, VarInt}},
        {"int_ne", {VarInt, VarInt}},
        {"int_ne_reif", {VarInt, VarInt, VarBool}},
        {"int_plus", {VarInt, VarInt, VarInt}},
        {"int_pow", {VarInt, VarInt, VarInt}},
        {"int_times", {VarInt, VarInt, VarInt}},
        // Boolean builtins
        {"array_bool_and", {ArrayVarBool, VarBool}},
        {"array_bool_element", {VarInt, ArrayParBool, VarBool}},
        {"array_bool_xor", {ArrayVarBool}},
        {"array_var_bool_element", {VarInt, ArrayVarBool, VarBool}},
        {"bool2int", {VarBool, VarInt}},
        {"bool_and", {VarBool, VarBool, VarBool}},
        {"bool_clause", {ArrayVarBool, ArrayVarBool}},
        {"bool_eq", {VarBool, VarBool}},
        {"bool_eq_reif", {VarBool, VarBool, VarBool}},
        {"bool_le", {VarBool, VarBool}},
        {"bool_le_reif", {VarBool, VarBool, VarBool}},
        {"bool_lin_eq", {ArrayParInt, ArrayVarBool, VarInt}},
        {"bool_lin_le", {ArrayParInt, ArrayVarBool, ParInt}},
        {"bool_lt", {VarBool, VarBool}},
        {"bool_lt_reif", {VarBool, VarBool, VarBool}},
        {"bool_not", {VarBool, VarBool}},
        {"bool_or", {VarBool, VarBool, VarBool}},
        {"bool_xor", {VarBool, VarBool, VarBool}},
        {"bool_xor", {VarBool, VarBool}},
        // set builtins over fixed sets
        {"set_in", {VarInt, ParSet}},
        {"set_in_reif", {VarInt, ParSet, VarBool}},
    };
}

}  // namespace

const std::vector<Signature>& builtin_signatures() {
    static const std::vector<Signature> table = make_table();
    return table;
}

std::vector<std::string_view> builtin_names() {
    std::vector<std::string_view> names;
    for (const auto& sig : builtin_signatures()) {
        if (std::find(names.begin(), names.end(), sig.name) == names.end()) {
            names.push_back(sig.name);
        }
    }
    return names;
}

std::vector<const Signature*> find_signatures(std::string_view name) {
    std::vector<const Signature*> out;
    for (const auto& sig : builtin_signatures()) {
        if (sig.name == name) {
            out.push_back(&sig);
        }
    }
    return out;
}

bool is_supported_builtin(std::string_view name) { return !find_signatures(name).empty(); }

bool is_reified(std::string_view name) { return name.ends_with("_reif"); }

}  // namespace fzq::fzn
