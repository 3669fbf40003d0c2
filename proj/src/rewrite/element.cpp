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

#include <algorithm>

#include "fzq/bounds/interval_bounds.hpp"
#include "rewrite/context.hpp"

namespace fzq::rewrite {

namespace {

std::string index_role(const char* prefix, std::int64_t j) { return prefix + std::to_string(j); }

}  // namespace

// array_int_element, array_bool_element, array_var_int_element,
// array_var_bool_element: c = a[i].
void rewrite_element(RewriteContext& ctx, const fzn::ConstraintItem& c) {
    const Operand i = fzn::as_operand(c.args[0]);
    const std::vector<Operand> a = fzn::as_operands(c.args[1]);
    const Operand res = fzn::as_operand(c.args[2]);
    const bool var_array = ctx.builtin().starts_with("array_var_");

    if (a.empty()) {
        ctx.unsat("element of an empty array");
    }
    std::vector<Domain> values;
    for (const auto& x : a) {
        values.push_back(ctx.dom(x));
    }
    const auto r = bounds::element_domain_restrict(ctx.dom(i), values);
    ctx.restrict(i, r.index);
    ctx.restrict(res, r.value);
    // i and c may be the same variable.
    const Domain index = ctx.dom(i);

    if (!i.is_var()) {
        ctx.eq(ctx.lin(res) - ctx.lin(a[static_cast<std::size_t>(i.value - 1)]));
        return;
    }

    if (ctx.builtin() == "array_bool_element") {
        const auto first = a.begin() + (index.lo - 1);
        const auto last = a.begin() + index.hi;
        for (std::int64_t v : {1, 0}) {
            if (std::all_of(first, last, [v](const Operand& x) { return x.value == v; })) {
                ctx.eq(ctx.lin(res) - v);
                return;
            }
        }
    }

    std::vector<std::int64_t> wanted;
    for (std::int64_t j = index.lo; j <= index.hi; ++j) {
        wanted.push_back(j);
    }
    const qip::OneHotGroup g = ctx.qip().onehot_get_or_create(i.var, wanted, ctx.builtin());

    LinExpr sum = ctx.lin(res);
    for (const auto& bit : g.bits) {
        const Operand& aj = a[static_cast<std::size_t>(bit.value - 1)];
        if (var_array) {
            sum -= ctx.product(aj, Operand::variable(bit.var), index_role("z", bit.value));
        } else {
            sum.add_term(bit.var, -aj.value);
        }
    }
    ctx.eq(std::move(sum));
}

// array_int_maximum, array_int_minimum: m = max(x) / min(x).
void rewrite_array_minmax(RewriteContext& ctx, const fzn::ConstraintItem& c) {
    const Operand m = fzn::as_operand(c.args[0]);
    const std::vector<Operand> xs = fzn::as_operands(c.args[1]);
    const auto mode = ctx.builtin() == "array_int_maximum" ? bounds::MinMax::Max : bounds::MinMax::Min;
    if (xs.empty()) {
        ctx.unsat("extremum of an empty array");
    }

    std::vector<Domain> doms;
    for (const auto& x : xs) {
        doms.push_back(ctx.dom(x));
    }
    const auto r = bounds::minmax_domain_restrict(ctx.dom(m), doms, mode);
    ctx.restrict(m, r.m);
    for (std::size_t j = 0; j < xs.size(); ++j) {
        ctx.restrict(xs[j], r.xs[j]);
    }

    LinExpr one = LinExpr::of_constant(-1);
    LinExpr sum = ctx.lin(m);
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const auto k = static_cast<std::int64_t>(j + 1);
        const std::string b = ctx.fresh(index_role("b", k), Domain::binary());
        one.add_term(b, 1);
        sum -= ctx.product(xs[j], Operand::variable(b), index_role("z", k));
    }
    ctx.eq(std::move(one));
    ctx.eq(std::move(sum));
    for (const auto& x : xs) {
        ctx.le(mode == bounds::MinMax::Max ? ctx.lin(x) - ctx.lin(m) : ctx.lin(m) - ctx.lin(x));
    }
}

}  // namespace fzq::rewrite
