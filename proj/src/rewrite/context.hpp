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

#ifndef FZQ_REWRITE_CONTEXT_HPP
#define FZQ_REWRITE_CONTEXT_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>

#include "fzq/fzn/ast.hpp"
#include "fzq/qip/builder.hpp"
#include "fzq/rewrite/compile.hpp"

namespace fzq::rewrite {

using fzn::Operand;
using qip::LinExpr;

class RewriteContext {
public:
    RewriteContext(qip::QipBuilder& builder, const Options& options, const std::set<std::size_t>& forced)
        : b_(builder), options_(options), forced_(forced) {}

    void begin(const fzn::ConstraintItem& c, std::size_t index);

    const std::string& builtin() const { return builtin_; }
    std::size_t index() const { return index_; }
    const Options& options() const { return options_; }
    /// The product encoding of this constraint was rejected on a previous pass.
    bool forced_inequality() const { return forced_.contains(index_); }
    qip::QipBuilder& qip() { return b_; }

    Domain dom(const Operand& x) const;
    LinExpr lin(const Operand& x) const;

    /// Aux variable of the current instance; returns its name.
    std::string fresh(const std::string& role, Domain d);

    /// Rows with no terms are decided here: a false one is UNSAT.
    void eq(LinExpr e);
    void le(LinExpr e);

    /// a * b as a linear form: folded when an operand is constant, otherwise an
    /// aux `role` with a product constraint.
    LinExpr product(const Operand& a, const Operand& b, const std::string& role);

    /// result = a * b, using `result` itself as the product result when it is
    /// declared after both operands and not already defined by a product.
    /// Returns true when that direct form was used.
    bool bind_product(const Operand& result, const Operand& a, const Operand& b, const std::string& role);

    /// b, z = b * x; returns z. With y >= 0 and y = x - 2z, y = |x|.
    LinExpr abs_core(const Operand& x, const std::string& prefix);

    /// Fresh y = |x| with domain `d`.
    Operand abs_var(const Operand& x, Domain d, const std::string& prefix);

    /// Narrows a variable, or checks a constant, against `d`.
    void restrict(const Operand& x, Domain d);

    /// Records that this constraint needs `r` to never be a product operand.
    void mark_exclusive(const Operand& r);
    /// exclusive result -> constraints that claimed it
    const std::map<std::string, std::set<std::size_t>>& claims() const { return claims_; }

    [[noreturn]] void unsat(const std::string& message) const;

private:
    qip::QipBuilder& b_;
    const Options& options_;
    const std::set<std::size_t>& forced_;
    std::string builtin_;
    std::size_t index_ = 0;
    std::map<std::string, std::set<std::size_t>> claims_;
};

void rewrite_element(RewriteContext& ctx, const fzn::ConstraintItem& c);
void rewrite_array_minmax(RewriteContext& ctx, const fzn::ConstraintItem& c);
void rewrite_abs(RewriteContext& ctx, const fzn::ConstraintItem& c);
void rewrite_div(RewriteContext& ctx, const fzn::ConstraintItem& c);
void rewrite_mod(RewriteContext& ctx, const fzn::ConstraintItem& c);
void rewrite_pow(RewriteContext& ctx, const fzn::ConstraintItem& c);
void rewrite_simple(RewriteContext& ctx, const fzn::ConstraintItem& c);
void rewrite_int_ne(RewriteContext& ctx, const fzn::ConstraintItem& c);
void rewrite_comparison_reif(RewriteContext& ctx, const fzn::ConstraintItem& c);
void rewrite_minmax_binary(RewriteContext& ctx, const fzn::ConstraintItem& c);
void rewrite_linear(RewriteContext& ctx, const fzn::ConstraintItem& c);
void rewrite_linear_reif(RewriteContext& ctx, const fzn::ConstraintItem& c);
void rewrite_bool_gates(RewriteContext& ctx, const fzn::ConstraintItem& c);
void rewrite_set(RewriteContext& ctx, const fzn::ConstraintItem& c);

}  // namespace fzq::rewrite

#endif  // FZQ_REWRITE_CONTEXT_HPP
