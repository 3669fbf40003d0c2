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

#include "rewrite/context.hpp"

namespace fzq::rewrite {

// array_bool_and, array_bool_xor, bool_and, bool_clause, bool_or, bool_xor.
void rewrite_bool_gates(RewriteContext& ctx, const fzn::ConstraintItem& c) {
    const std::string& name = ctx.builtin();

    if (name == "array_bool_and") {
        const auto as = fzn::as_operands(c.args[0]);
        const LinExpr r = ctx.lin(fzn::as_operand(c.args[1]));
        LinExpr lower = 1 - static_cast<std::int64_t>(as.size()) - r;
        for (const auto& a : as) {
            ctx.le(r - ctx.lin(a));
            lower += ctx.lin(a);
        }
        if (ctx.options().fault != Fault::DropAndLowerBound) {
            ctx.le(std::move(lower));
        }
        return;
    }
    if (name == "array_bool_xor") {
        LinExpr sum = LinExpr::of_constant(-1);
        for (const auto& a : fzn::as_operands(c.args[0])) {
            sum += ctx.lin(a);
        }
        ctx.eq(std::move(sum));
        return;
    }
    if (name == "bool_clause") {
        LinExpr e = LinExpr::of_constant(1);
        for (const auto& a : fzn::as_operands(c.args[0])) {
            e -= ctx.lin(a);
        }
        for (const auto& b : fzn::as_operands(c.args[1])) {
            e -= 1 - ctx.lin(b);
        }
        ctx.le(std::move(e));
        return;
    }

    const Operand a = fzn::as_operand(c.args[0]);
    const Operand b = fzn::as_operand(c.args[1]);
    const LinExpr la = ctx.lin(a);
    const LinExpr lb = ctx.lin(b);
    if (c.args.size() == 2) {  // binary bool_xor
        ctx.eq(la + lb - 1);
        return;
    }
    const Operand r = fzn::as_operand(c.args[2]);
    const LinExpr lr = ctx.lin(r);

    if (name == "bool_and") {
        if (ctx.options().prefer_products && !ctx.forced_inequality()) {
            ctx.bind_product(r, a, b, "t");
            ctx.mark_exclusive(r);
        } else {
            ctx.le(lr - la);
            ctx.le(lr - lb);
            ctx.le(la + lb - 1 - lr);
        }
    } else if (name == "bool_or") {
        ctx.le(lr - la - lb);
        ctx.le(la + lb - 2 * lr);
    } else if (name == "bool_xor") {
        const LinExpr x = ctx.product(r, a, "x");
        const LinExpr y = ctx.product(r, b, "y");
        ctx.eq(la - x - lb + y);
        ctx.eq(x + y - lr);
    }
}

}  // namespace fzq::rewrite
