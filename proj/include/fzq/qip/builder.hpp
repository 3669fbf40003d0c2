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

#ifndef FZQ_QIP_BUILDER_HPP
#define FZQ_QIP_BUILDER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fzq/qip/problem.hpp"

namespace fzq::qip {

/// Single-writer construction API for a QipProblem.
///
/// Auxiliary variables are named `__<builtin>_<k>_<role>`, k being the
/// 1-based ordinal of the builtin instance that introduced them.
class QipBuilder {
public:
    QipBuilder() = default;

    const QipProblem& problem() const { return problem_; }
    QipProblem& problem() { return problem_; }
    QipProblem finish() && { return std::move(problem_); }

    void add_model_var(const std::string& name, Domain domain);

    /// Starts a new instance of `builtin`; returns its ordinal (1, 2, ...).
    std::int64_t open_instance(const std::string& builtin);

    /// Creates an auxiliary variable for the current instance of `builtin`.
    /// If there is no open instance, or `role` is already taken in it, a new
    /// instance is opened. Throws EmptyDomain.
    const QipVar& fresh_var(const std::string& builtin, const std::string& role, Domain domain);

    bool has_var(const std::string& name) const { return index_.contains(name); }
    const QipVar& var(const std::string& name) const;
    std::size_t position(const std::string& name) const;

    /// Intersects the domain of `name` with `d`. Throws EmptyDomain when the
    /// result is empty. One-hot bits for values that leave the domain are
    /// dropped from their group and fixed to 0.
    void restrict_domain(const std::string& name, Domain d);

    /// Provenance attached to rows added from now on.
    void set_provenance(Provenance p) { provenance_ = std::move(p); }

    void add_equality(LinExpr e);
    void add_inequality(LinExpr e);
    void add_product(const std::string& result, const std::string& left, const std::string& right);
    bool is_product_result(const std::string& name) const { return product_results_.contains(name); }
    void mark_exclusive_result(const std::string& name);

    /// Returns the one-hot group of `int_var`, creating or extending it so that
    /// it has a bit for every requested value the variable may still take.
    ///
    /// The first call creates bits and emits `sum(bits) = 1` and
    /// `int_var = sum(value * bit)`. A request covered by the cached group is a
    /// cache hit. A request with new values extends the bits to the union and
    /// rewrites both equalities in place, so a variable never owns two groups.
    /// Bits are named after `builtin`'s current instance.
    ///
    /// Throws ValueOutOfDomain if a value lies outside the variable's domain.
    OneHotGroup onehot_get_or_create(const std::string& int_var, const std::vector<std::int64_t>& values,
                                     const std::string& builtin);

    /// Restricts `int_var` to `allowed` through its one-hot group: bits for
    /// other values are dropped and fixed to 0, later requests never re-add
    /// them. Throws EmptyDomain if no bit survives.
    void onehot_restrict(const std::string& int_var, const std::set<std::int64_t>& allowed);

    std::optional<OneHotGroup> onehot_group(const std::string& int_var) const;

private:
    struct GroupState {
        std::size_t group = 0;
        std::size_t sum_row = 0;
        std::size_t link_row = 0;
        std::optional<std::set<std::int64_t>> allowed;
    };

    void rederive(const GroupState& gs);
    void drop_bits(GroupState& gs, const std::vector<std::int64_t>& values);
    QipVar& mutable_var(const std::string& name);

    QipProblem problem_;
    std::map<std::string, std::size_t> index_;
    std::map<std::string, std::int64_t> instance_count_;
    std::map<std::string, std::int64_t> open_instance_;
    std::set<std::string> product_results_;
    std::map<std::string, GroupState> groups_;
    Provenance provenance_;
};

}  // namespace fzq::qip

#endif  // FZQ_QIP_BUILDER_HPP
