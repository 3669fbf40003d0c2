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

#ifndef FZQ_REWRITE_COMPILE_HPP
#define FZQ_REWRITE_COMPILE_HPP

#include <cstddef>
#include <set>

#include "fzq/fzn/ast.hpp"
#include "fzq/qip/problem.hpp"

namespace fzq::rewrite {

/// Deliberate miscompilations, only for negative-control fixtures.
enum class Fault {
    None,
    BigMMinusOne,       // int_div uses M - 1
    DropAndLowerBound,  // array_bool_and loses r >= sum(as) - n + 1
};

struct Options {
    /// bool_and / bool_lt_reif use their product encodings where the result
    /// is never a product operand elsewhere.
    bool prefer_products = false;
    /// int_div / int_mod with D(d) = {0} is UNSAT at compile time; otherwise
    /// the contradiction 0 = 1 is emitted.
    bool strict_div_zero = true;
    /// Emit the division system without the n = 0 indicator.
    bool paper_faithful_div = false;
    Fault fault = Fault::None;
};

/// Rewrites a type-checked model into a validated QipProblem.
///
/// Throws Error(Unsat) naming the constraint when a restricted domain becomes
/// empty, and rethrows other rewrite errors with the constraint location.
qip::QipProblem compile(const fzn::FzModel& model, const Options& options = {});

}  // namespace fzq::rewrite

#endif  // FZQ_REWRITE_COMPILE_HPP
