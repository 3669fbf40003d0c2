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

#include "fzq/bounds/interval_bounds.hpp"
#include "fzq/error.hpp"
#include "rewrite/context.hpp"

namespace fzq::rewrite {

namespace {

struct Linear {
    std::vector<std::int64_t> as;
    std::vector<Operand> bs;
    Operand c;
};

Linear read_linear(const fzn::ConstraintItem& c) {
    Linear l{fzn::as_int_values(c.args[0]), fzn::as_operands(c.args[1]), fzn::as_operand(c.args[2])};
    if (l.as.size() != l.bs.size()) {
        throw Error(ErrorCode::LengthMismatch, c.builtin,
                    c.builtin + ": " + std::to_string(l.as.size()) + " coefficients for " +
                        std::to_string(l.bs.size()) + " variables",
                    c.loc);
    }
    return l;
}

// sum(as * bs) - c
LinExpr weighted_sum(RewriteContext& ctx, const Linear& l) {
    LinExpr e = -1 * ctx.lin(l.c);
    for (std::size_t i = 0; i < l.as.size(); ++i) {
        e += l.as[i] * ctx.lin(l.bs[i]);
    }
    return e;
}

// Fresh x = sum(as * bs) - c with its interval bounds.
Operand sum_var(RewriteContext& ctx, const Linear& l) {
    std::vector<Domain> doms;
    for (const auto& b : l.bs) {
        doms.push_back(ctx.dom(b));
    }
    const Domain dx = bounds::lin_bounds(l.as, doms, l.c.value);
    const Operand x = Operand::variable(ctx.fresh("x", dx));
    ctx.eq(ctx.lin(x) - weighted_sum(ctx, l));
    return x;
}

}  // namespace

// int_lin_eq, int_lin_le, int_lin_ne, bool_lin_eq, bool_lin_le.
void rewrite_linear(RewriteContext& ctx, const fzn::ConstraintItem& c) {
    const Linear l = read_linear(c);
    const std::string& name = ctx.builtin();
    if (name == "int_lin_eq" || name == "bool_lin_eq") {
        ctx.eq(weighted_sum(ctx, l));
    } else if (name == "int_lin_le" || name == "bool_lin_le") {
        ctx.le(weighted_sum(ctx, l));
    } else if (l.as.empty()) {
        if (l.c.value == 0) {
            ctx.unsat("empty sum is equal to 0");
        }
    } else {
        // 1 <= |x|; an |x| domain that cannot reach 1 is UNSAT.
        const Operand x = sum_var(ctx, l);
        const Domain ab = bounds::abs_bounds(ctx.dom(x));
        const Operand ax = ctx.abs_var(x, {std::max<std::int64_t>(1, ab.lo), ab.hi}, "x_");
        ctx.le(1 - ctx.lin(ax));
    }
}

// int_lin_eq_reif, int_lin_le_reif, int_lin_ne_reif.
void rewrite_linear_reif(RewriteContext& ctx, const fzn::ConstraintItem& c) {
    const Linear l = read_linear(c);
    const Operand r = fzn::as_operand(c.args[3]);
    const LinExpr lr = ctx.lin(r);
    const Operand x = sum_var(ctx, l);
    const LinExpr lx = ctx.lin(x);
    const Domain dx = ctx.dom(x);
    const std::string& name = ctx.builtin();

    if (name == "int_lin_eq_reif") {
        const Domain ab = bounds::abs_bounds(dx);
        const LinExpr ax = ctx.lin(ctx.abs_var(x, ab, "x_"));
        ctx.le(ax - ab.hi * (1 - lr));
        ctx.le(1 - lr - ax);
    } else if (name == "int_lin_le_reif") {
        ctx.le(lx - dx.hi * (1 - lr));
        ctx.le(1 - lx - lr + dx.lo * lr);
    } else {
        const LinExpr y = ctx.product(r, x, "y");
        ctx.eq(lx - y);
        const Domain ab = bounds::abs_bounds(dx);
        const Operand ax = ctx.abs_var(x, {dx.lo <= 0 ? 0 : dx.lo, ab.hi}, "x_");
        const LinExpr z = ctx.product(r, ax, "z");
        ctx.le(lr - z);
    }
}

}  // namespace fzq::rewrite
