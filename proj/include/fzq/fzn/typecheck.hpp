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

#ifndef FZQ_FZN_TYPECHECK_HPP
#define FZQ_FZN_TYPECHECK_HPP

#include "fzq/fzn/ast.hpp"

namespace fzq::fzn {

/// Resolves parameters, array aliases and array accesses in constraint
/// arguments, lowers `var ... = e` and set-valued domains into constraints,
/// and checks every argument against the builtin's signature.
///
/// After a successful call every constraint argument is a literal, a variable
/// identifier, an array of those, or a set literal, and `checked` is true.
/// Throws Error with UndeclaredIdentifier, ArityMismatch, KindMismatch or EmptyDomain.
FzModel typecheck(FzModel model);

/// parse_model followed by typecheck.
FzModel load_model(std::string_view source);

}  // namespace fzq::fzn

#endif  // FZQ_FZN_TYPECHECK_HPP
