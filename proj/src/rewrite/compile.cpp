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

#include "fzq/rewrite/compile.hpp"

#include <map>
#include <stdexcept>
#include <string_view>

#include "fzq/error.hpp"
#include "fzq/fzn/typecheck.hpp"
#include "fzq/qip/validate.hpp"
#include "rewrite/context.hpp"

namespace fzq::rewrite {

namespace {

using Rewriter = void (*)(RewriteContext&, const fzn::ConstraintItem&);

const std::map<std::string_view, Rewriter>& rewriters() {
    static const std::map<std::string_view, Rewriter> table = {
        {"array_int_element", rewrite_element},
        {"array_var_int_element", rewrite_element},
        {"array_bool_element", rewrite_element},
        {"array_var_bool_element", rewrite_element},
        {"array_int_maximum", rewrite_array_minmax},
        {"array_int_minimum", rewrite_array_minmax},
        {"int_abs", rewrite_abs},
        {"int_div", rewrite_div},
        {"int_mod", rewrite_mod},
        {"int_pow", rewrite_pow},
        {"int_eq", rewrite_simple},
        {"int_le", rewrite_simple},
        {"int_lt", rewrite_simple},
        {"int_plus", rewrite_simple},
        {"int_times", rewrite_simple},
        {"bool2int", rewrite_simple},
        {"bool_eq", rewrite_simple},
        {"bool_le", rewrite_simple},
        {"bool_lt", rewrite_simple},
        {"bool_not", rewrite_simple},
        {"int_ne", rewrite_int_ne},
        {"int_eq_reif", rewrite_comparison_reif},
        {"int_le_reif", rewrite_comparison_reif},
        {"int_lt_reif", rewrite_comparison_reif},
        {"int_ne_reif", rewrite_comparison_reif},
        {"bool_eq_reif", rewrite_comparison_reif},
        {"bool_le_reif", rewrite_comparison_reif},
        {"bool_lt_reif", rewrite_comparison_reif},
        {"int_max", rewrite_minmax_binary},
        {"int_min", rewrite_minmax_binary},
        {"int_lin_eq", rewrite_linear},
        {"int_lin_le", rewrite_linear},
        {"int_lin_ne", rewrite_linear},
        {"bool_lin_eq", rewrite_linear},
        {"bool_lin_le", rewrite_linear},
        {"int_lin_eq_reif", rewrite_linear_reif},
        {"int_lin_le_reif", rewrite_linear_reif},
        {"int_lin_ne_reif", rewrite_linear_reif},
        {"array_bool_and", rewrite_bool_gates},
        {"array_bool_xor", rewrite_bool_gates},
        {"bool_and", rewrite_bool_gates},
        {"bool_clause", rewrite_bool_gates},
        {"bool_or", rewrite_bool_gates},
        {"bool_xor", rewrite_bool_gates},
        {"set_in", rewrite_set},
        {"set_in_reif", rewrite_set},
    };
    return table;
}

struct Pass {
    qip::QipProblem problem;
    // exclusive product result -> constraints that claimed it
    std::map<std::string, std::set<std::size_t>> claims;
};

Pass run_pass(const fzn::FzModel& model, const Options& options, const std::set<std::size_t>& forced) {
    qip::QipBuilder b;
    for (const auto& v : model.vars) {
        b.add_model_var(v.name, v.domain);
    }
    RewriteContext ctx(b, options, forced);
    Pass pass;
    for (std::size_t k = 0; k < model.constraints.size(); ++k) {
        const auto& c = model.constraints[k];
        auto it = rewriters().find(c.builtin);
        if (it == rewriters().end()) {
            throw Error(ErrorCode::UnsupportedItem, c.builtin, "unsupported constraint '" + c.builtin + "'", c.loc);
        }
        try {
            ctx.begin(c, k);
            it->second(ctx, c);
        } catch (const Error& e) {
            const std::string where = c.builtin + "#" + std::to_string(k);
            if (e.code() == ErrorCode::EmptyDomain || e.code() == ErrorCode::Unsat) {
                throw Error(ErrorCode::Unsat, where, where + ": " + e.what(), c.loc);
            }
            throw Error(e.code(), e.subject(), e.what(), e.loc().known() ? e.loc() : c.loc);
        }
    }
    pass.claims = ctx.claims();

    qip::Objective obj;
    if (model.solve.kind != fzn::SolveItem::Kind::Satisfy) {
        const fzn::Operand v = fzn::as_operand(*model.solve.objective);
        obj.sense = qip::Objective::Sense::Min;
        obj.expr = v.is_var() ? qip::LinExpr::of_var(v.var) : qip::LinExpr::of_constant(v.value);
        if (model.solve.kind == fzn::SolveItem::Kind::Maximize) {
            obj.expr *= -1;
            obj.negated = true;
        }
    }
    b.problem().objective = std::move(obj);
    pass.problem = std::move(b).finish();
    return pass;
}

}  // namespace

qip::QipProblem compile(const fzn::FzModel& input, const Options& options) {
    const fzn::FzModel model = input.checked ? input : fzn::typecheck(input);
    std::set<std::size_t> forced;
    for (;;) {
        Pass pass = run_pass(model, options, forced);
        const auto violations = qip::validate(pass.problem);
        if (violations.empty()) {
            return std::move(pass.problem);
        }
        bool retry = false;
        for (const auto& v : violations) {
            if (v.code != "product-exclusive") {
                throw std::logic_error("rewriter produced an invalid problem: " + v.code + " at " + v.entity + ": " +
                                       v.detail);
            }
            for (std::size_t k : pass.claims[v.entity]) {
                retry |= forced.insert(k).second;
            }
        }
        if (!retry) {
            throw std::logic_error("product-form results could not be made exclusive");
        }
    }
}

}  // namespace fzq::rewrite
