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

#ifndef FZQ_ORACLE_EQUIVALENCE_HPP
#define FZQ_ORACLE_EQUIVALENCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fzq/fzn/ast.hpp"
#include "fzq/oracle/enumerate.hpp"
#include "fzq/qip/problem.hpp"

namespace fzq::oracle {

struct Counterexample {
    enum class Direction {
        Missing,  // satisfies the FlatZinc model, no QIP extension exists
        Extra,    // a QIP solution projects onto it, the FlatZinc model rejects it
    };
    std::vector<std::string> vars;  // model variables in declaration order
    std::vector<std::int64_t> witness;
    Direction direction = Direction::Missing;
    /// Constraint to blame, `builtin#k` (k is the 0-based model constraint index).
    std::string provenance;
    std::string detail;
};

struct EquivalenceResult {
    std::size_t fzn_solutions = 0;
    std::size_t qip_projections = 0;
    std::optional<Counterexample> counterexample;

    bool equal() const { return !counterexample; }
};

/// Compares the FlatZinc solution set with the QIP solutions projected onto
/// the model variables. Throws CapExceeded.
EquivalenceResult check_equivalence(const fzn::FzModel& model, const qip::QipProblem& problem,
                                    std::uint64_t cap = kDefaultCap);

/// The same comparison when compilation already proved the model UNSAT.
EquivalenceResult check_unsat(const fzn::FzModel& model, std::uint64_t cap = kDefaultCap);

/// Human-readable report, one finding per line.
std::string format_report(const EquivalenceResult& result);

}  // namespace fzq::oracle

#endif  // FZQ_ORACLE_EQUIVALENCE_HPP
