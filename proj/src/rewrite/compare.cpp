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
#include "fzq/checked.hpp"
#include "rewrite/context.hpp"

namespace fzq::rewrite {

namespace {

using checked::add, checked::sub;

Operand arg(const fzn::ConstraintItem& c, std::size_t k) { return fzn::as_operand(c.args[k]); }

Domain difference_bounds(const Domain& a, const Domain& b) { return {sub(a.lo, b.hi), sub(a.hi, b.lo)}; }

// int_eq_reif: the product system with |a|, |b|, plus 1 - r <= |a - b|.
void int_eq_reif(RewriteContext& ctx, const Operand& a, const Operand& b, const Operand& r) {
    const LinExpr x = ctx.product(r, a, "x");
    const LinExpr y = ctx.product(r, b, "y");
    ctx.eq(x - y);

    const LinExpr p = ctx.abs_core(a, "a_");
    const Operand u = Operand::variable(ctx.fresh("u", bounds::abs_bounds(ctx.dom(a))));
    const LinExpr q = ctx.abs_core(b, "b_");
    const Operand v = Operand::variable(ctx.fresh("v", bounds::abs_bounds(ctx.dom(b))));
    const LinExpr s = ctx.product(r, u, "s");
    const LinExpr t = ctx.product(r, v, "t");
    ctx.le(s + t - ctx.lin(u) - ctx.lin(v) + 1 - ctx.lin(r));
    ctx.eq(ctx.lin(u) - ctx.lin(a) + 2 * p);
    ctx.eq(ctx.lin(v) - ctx.lin(b) + 2 * q);

    // Without this row r = 0 stays feasible whenever a = b != 0.
    const Domain wd = difference_bounds(ctx.dom(a), ctx.dom(b));
    const Operand w = Operand::variable(ctx.fresh("w", wd));
    ctx.eq(ctx.lin(w) - ctx.lin(a) + ctx.lin(b));
    const Operand aw = ctx.abs_var(w, bounds::abs_bounds(wd), "w_");
    ctx.le(1 - ctx.lin(r) - ctx.lin(aw));
}

// Domain of |x| used by the not-equal reifications.
Domain reif_abs_domain(const Domain& x) {
    const Domain ab = bounds::abs_bounds(x);
    return {x.lo <= 0 ? 0 : x.lo, ab.hi};
}

// int_ne_reif: z = a - b, z = r * z, r <= r * |z|.
void int_ne_reif(RewriteContext& ctx, const Operand& a, const Operand& b, const Operand& r) {
    const Domain zd = difference_bounds(ctx.dom(a), ctx.dom(b));
    const Operand z = Operand::variable(ctx.fresh("z", zd));
    ctx.eq(ctx.lin(z) - ctx.lin(a) + ctx.lin(b));
    const LinExpr y = ctx.product(r, z, "y");
    ctx.eq(ctx.lin(z) - y);
    const Operand az = ctx.abs_var(z, reif_abs_domain(zd), "z_");
    const LinExpr w = ctx.product(r, az, "w");
    ctx.le(ctx.lin(r) - w);
}

}  // namespace

// int_eq, int_le, int_lt, int_plus, int_times, bool2int, bool_eq, bool_le,
// bool_lt, bool_not.
void rewrite_simple(RewriteContext& ctx, const fzn::ConstraintItem& c) {
    const std::string& name = ctx.builtin();
    const LinExpr a = ctx.lin(arg(c, 0));
    const LinExpr b = ctx.lin(arg(c, 1));
    if (name == "int_eq" || name == "bool_eq" || name == "bool2int") {
        ctx.eq(a - b);
    } else if (name == "int_le" || name == "bool_le") {
        ctx.le(a - b);
    } else if (name == "int_lt") {
        ctx.le(a - b + 1);
    } else if (name == "bool_lt") {
        ctx.eq(a);
        ctx.eq(b - 1);
    } else if (name == "bool_not") {
        ctx.eq(a + b - 1);
    } else if (name == "int_plus") {
        ctx.eq(a + b - ctx.lin(arg(c, 2)));
    } else if (name == "int_times") {
        ctx.bind_product(arg(c, 2), arg(c, 0), arg(c, 1), "t");
    }
}

// int_ne(a, b) with a fresh direction bit r.
void rewrite_int_ne(RewriteContext& ctx, const fzn::ConstraintItem& c) {
    const Operand a = arg(c, 0);
    const Operand b = arg(c, 1);
    const Domain da = ctx.dom(a);
    const Domain db = ctx.dom(b);
    const LinExpr r = LinExpr::of_var(ctx.fresh("r", Domain::binary()));
    const std::int64_t k1 = add(sub(da.hi, db.lo), 1);
    const std::int64_t k2 = add(sub(db.hi, da.lo), 1);
    ctx.le(ctx.lin(a) - ctx.lin(b) + 1 - k1 * r);
    ctx.le(ctx.lin(b) - ctx.lin(a) + 1 - k2 * (1 - r));
}

void rewrite_comparison_reif(RewriteContext& ctx, const fzn::ConstraintItem& c) {
    const std::string& name = ctx.builtin();
    const Operand a = arg(c, 0);
    const Operand b = arg(c, 1);
    const Operand r = arg(c, 2);
    const LinExpr la = ctx.lin(a);
    const LinExpr lb = ctx.lin(b);
    const LinExpr lr = ctx.lin(r);
    const Domain da = ctx.dom(a);
    const Domain db = ctx.dom(b);

    if (name == "int_eq_reif") {
        int_eq_reif(ctx, a, b, r);
    } else if (name == "int_ne_reif") {
        int_ne_reif(ctx, a, b, r);
    } else if (name == "int_le_reif") {
        ctx.le(la - lb - sub(da.hi, db.lo) * (1 - lr));
        ctx.le(lb - la + 1 - add(sub(db.hi, da.lo), 1) * lr);
    } else if (name == "int_lt_reif") {
        ctx.le(la - lb + 1 - add(sub(da.hi, db.lo), 1) * (1 - lr));
        ctx.le(lb - la - sub(db.hi, da.lo) * lr);
    } else if (name == "bool_eq_reif") {
        const LinExpr x = ctx.product(r, a, "x");
        const LinExpr y = ctx.product(r, b, "y");
        ctx.eq(x - y);
        // (1 - r) = (1 - r)(a + b)
        ctx.eq(1 - lr - la - lb + x + y);
    } else if (name == "bool_le_reif") {
        ctx.le(la - lb - 1 + lr);
        ctx.le(lb - la + 1 - 2 * lr);
    } else if (name == "bool_lt_reif") {
        if (ctx.options().prefer_products && !ctx.forced_inequality()) {
            // r = (1 - a) * b = b - a * b
            const LinExpr t = ctx.product(a, b, "t");
            ctx.eq(lr - lb + t);
            ctx.mark_exclusive(r);
        } else {
            ctx.le(la - lb - 1 + 2 * lr);
            ctx.le(lb - la - lr);
        }
    }
}

// int_max(a, b, c) / int_min(a, b, c) with a fresh selector r.
void rewrite_minmax_binary(RewriteContext& ctx, const fzn::ConstraintItem& c) {
    const Operand a = arg(c, 0);
    const Operand b = arg(c, 1);
    const Operand m = arg(c, 2);
    const LinExpr la = ctx.lin(a);
    const LinExpr lb = ctx.lin(b);
    const LinExpr lm = ctx.lin(m);
    const LinExpr r = LinExpr::of_var(ctx.fresh("r", Domain::binary()));
    const Domain da = ctx.dom(a);
    const Domain db = ctx.dom(b);
    const Domain dm = ctx.dom(m);
    if (ctx.builtin() == "int_max") {
        ctx.le(la - lm);
        ctx.le(lb - lm);
        ctx.le(lm - la - sub(dm.hi, da.lo) * r);
        ctx.le(lm - lb - sub(dm.hi, db.lo) * (1 - r));
    } else {
        ctx.le(lm - la);
        ctx.le(lm - lb);
        ctx.le(la - lm - sub(da.hi, dm.lo) * r);
        ctx.le(lb - lm - sub(db.hi, dm.lo) * (1 - r));
    }
}

}  // namespace fzq::rewrite
