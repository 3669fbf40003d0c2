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

#ifndef FZQ_ORACLE_SEMANTICS_HPP
#define FZQ_ORACLE_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fzq/fzn/ast.hpp"

namespace fzq::oracle {

using Assignment = std::map<std::string, std::int64_t>;

/// Truth of one builtin under its FlatZinc meaning. Division by zero makes
/// the constraint false. Throws UndeclaredIdentifier for an unassigned variable.
bool eval_builtin(std::string_view builtin, const std::vector<fzn::Expr>& args, const Assignment& assignment);

/// A constraint with its variables resolved to positions, for repeated evaluation.
class BoundConstraint {
public:
    /// `index` maps variable names to positions in the value vectors passed to eval.
    BoundConstraint(const fzn::ConstraintItem& c, const std::map<std::string, std::size_t>& index);

    bool eval(std::span<const std::int64_t> values) const;

    /// Distinct positions referenced, ascending.
    const std::vector<std::size_t>& positions() const { return positions_; }
    const std::string& builtin() const { return builtin_; }

private:
    struct Ref {
        std::int64_t value = 0;
        std::ptrdiff_t pos = -1;  // -1 for a constant

        std::int64_t get(std::span<const std::int64_t> v) const {
            return pos < 0 ? value : v[static_cast<std::size_t>(pos)];
        }
    };
    struct Arg {
        std::vector<Ref> elems;  // one element for a scalar
        fzn::IntSet set;
    };

    std::string builtin_;
    int op_ = 0;
    std::vector<Arg> args_;
    std::vector<std::size_t> positions_;
};

}  // namespace fzq::oracle

#endif  // FZQ_ORACLE_SEMANTICS_HPP
