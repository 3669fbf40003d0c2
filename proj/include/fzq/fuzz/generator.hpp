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

#ifndef FZQ_FUZZ_GENERATOR_HPP
#define FZQ_FUZZ_GENERATOR_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "fzq/fzn/ast.hpp"

namespace fzq::fuzz {

struct FuzzOptions {
    /// Keep 0 out of D(n) for int_div and int_mod (needed by the unmodified
    /// division system).
    bool nonzero_numerator = false;
    /// Domain bounds are drawn from [-bound, bound].
    std::int64_t bound = 4;
    std::size_t max_array = 3;
};

/// One random single-constraint model for `builtin`. Every argument is a
/// fresh variable, a constant, or (sometimes) a variable reused from an
/// earlier argument; a reification argument is always a fresh variable.
/// The result is unchecked; pass it through typecheck before compiling.
fzn::FzModel random_instance(std::string_view builtin, std::mt19937_64& rng, const FuzzOptions& options = {});

/// `count` instances from one seed, reproducible across platforms.
std::vector<fzn::FzModel> random_instances(std::string_view builtin, std::size_t count, std::uint64_t seed,
                                           const FuzzOptions& options = {});

/// 2-3 integer variables, 2-3 constraints over them, minimizing or
/// maximizing one of the variables. Most models are built around a hidden
/// assignment and are therefore feasible.
fzn::FzModel random_optimization_model(std::mt19937_64& rng);

}  // namespace fzq::fuzz

#endif  // FZQ_FUZZ_GENERATOR_HPP
