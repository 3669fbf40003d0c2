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

#ifndef FZQ_ORACLE_ENUMERATE_HPP
#define FZQ_ORACLE_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fzq/fzn/ast.hpp"
#include "fzq/qip/problem.hpp"

namespace fzq::oracle {

inline constexpr std::uint64_t kDefaultCap = 2'000'000;

struct AssignmentSet {
    std::vector<std::string> vars;
    std::set<std::vector<std::int64_t>> tuples;
};

/// Every assignment of the model variables satisfying all constraints.
/// Throws CapExceeded when the domain product exceeds `cap`.
AssignmentSet enumerate_fzn(const fzn::FzModel& model, std::uint64_t cap = kDefaultCap);

/// A QIP row: equality, inequality or product constraint by index.
struct RowRef {
    enum class Kind { Equality, Inequality, Product, Domain };
    Kind kind = Kind::Equality;
    std::size_t index = 0;  // variable index for Domain

    friend bool operator==(const RowRef&, const RowRef&) = default;
};

struct QipSearchOptions {
    std::uint64_t cap = kDefaultCap;
    /// Variables pinned to a value (need not lie in their domain).
    std::map<std::string, std::int64_t> fixed;
};

struct QipSearchReport {
    /// Row that failed at the greatest search depth, if any failed.
    std::optional<RowRef> deepest_failure;
};

/// Depth-first search over all QIP solutions in declaration order.
/// `visit` receives one value per variable and returns false to stop.
/// Product results and variables fixed by an equality are computed, not
/// branched on; `cap` bounds the domain product of the branched variables.
void for_each_qip_solution(const qip::QipProblem& problem,
                           const std::function<bool(std::span<const std::int64_t>)>& visit,
                           const QipSearchOptions& options = {}, QipSearchReport* report = nullptr);

/// All solutions over all variables.
AssignmentSet enumerate_qip(const qip::QipProblem& problem, std::uint64_t cap = kDefaultCap);

struct Optimum {
    std::int64_t value = 0;             // in the source model's sense
    std::vector<std::int64_t> witness;  // one value per variable
};

/// Minimum of the objective (maximum for a negated objective, reported
/// sign-corrected); nullopt when infeasible.
std::optional<Optimum> solve_optimum(const qip::QipProblem& problem, std::uint64_t cap = kDefaultCap);

/// Optimum of the FlatZinc model by direct enumeration; witness is over the
/// model variables. A satisfaction model reports 0.
std::optional<Optimum> fzn_optimum(const fzn::FzModel& model, std::uint64_t cap = kDefaultCap);

}  // namespace fzq::oracle

#endif  // FZQ_ORACLE_ENUMERATE_HPP
