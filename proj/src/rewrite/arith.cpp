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
#include <array>
#include <optional>

#include "fzq/bounds/interval_bounds.hpp"
#include "fzq/checked.hpp"
#include "fzq/error.hpp"
#include "rewrite/context.hpp"

namespace fzq::rewrite {

namespace {

std::int64_t max_abs(const Domain& d) { return std::max(checked::abs(d.lo), checked::abs(d.hi)); }

// Upper bound of e over the current variable domains.
std::int64_t upper_bound(RewriteContext& ctx, const LinExpr& e) {
    std::int64_t ub = e.constant;
    for (const auto& t : e.terms) {
        const Domain d = ctx.qip().var(t.var).domain;
        ub = checked::add(ub, checked::mul(t.coef, t.coef < 0 ? d.lo : d.hi));
    }
    return ub;
}

// The ten inequalities of the division system, each "<= 0".
std::array<LinExpr, 10> div_rows(const LinExpr& n, const LinExpr& d, const LinExpr& p, const Domain& dn,
                                 const Domain& dd, const LinExpr& a, const LinExpr& b, const LinExpr& g,
                                 std::int64_t M) {
    using checked::add, checked::sub;
    return {
        dn.lo - sub(dn.lo, 1) * a - n,
        n - add(dn.hi, 1) * a + 1,
        dd.lo - sub(dd.lo, 1) * b - d,
        d - add(dd.hi, 1) * b + 1,
        p - n - M + M * a,
        n - M * a - p,
        n - d - p - M + M * g + 1,
        p - M * a - M * b + M * g + 1 - n + d,
        n + d - p - M + M * a - M * g + 1,
        // The simplified listing has +gamma*M here; expanding the
        // (1 - beta*(1 - alpha)) relaxation gives -gamma*M.
        p - M + M * b - M * g + 1 - n - d,
    };
}

// Emits int_div(n, d, q); returns the linear form of p = d * q.
// Returns nullopt when D(d) = {0} and the contradiction was emitted instead.
std::optional<LinExpr> emit_div(RewriteContext& ctx, const Operand& n, const Operand& d, const Operand& q) {
    const Domain d0 = ctx.dom(d);
    if (d0 == Domain::singleton(0)) {
        if (ctx.options().strict_div_zero) {
            ctx.unsat("division by zero: the divisor domain is {0}");
        }
        ctx.qip().add_equality(LinExpr::of_constant(1));
        return std::nullopt;
    }
    if (d0.lo == 0) {
        ctx.restrict(d, {1, d0.hi});
    } else if (d0.hi == 0) {
        ctx.restrict(d, {d0.lo, -1});
    }

    const Domain dn = ctx.dom(n);
    const Domain dd = ctx.dom(d);
    const Domain dq = ctx.dom(q);
    const Domain dp = bounds::product_bounds(dd, dq);

    const LinExpr p = ctx.product(d, q, "p");
    const Operand alpha = Operand::variable(ctx.fresh("alpha", Domain::binary()));
    const Operand beta = Operand::variable(ctx.fresh("beta", Domain::binary()));
    const LinExpr gamma = ctx.product(alpha, beta, "gamma");

    std::int64_t M = bounds::compute_big_M(dn, dd, dq, dp);
    if (ctx.options().fault == Fault::BigMMinusOne) {
        M = checked::sub(M, 1);
    }

    auto rows = div_rows(ctx.lin(n), ctx.lin(d), p, dn, dd, ctx.lin(alpha), ctx.lin(beta), gamma, M);

    const bool with_zeta = !ctx.options().paper_faithful_div && dn.contains(0);
    std::string zeta;
    if (with_zeta) {
        // zeta = 1 marks n = 0; the sign and case rows are switched off there.
        zeta = ctx.fresh("zeta", Domain::binary());
        const auto at_zero = div_rows(LinExpr{}, ctx.lin(d), LinExpr{}, dn, dd, ctx.lin(alpha), ctx.lin(beta),
                                      gamma, M);
        for (std::size_t k : {0, 1, 6, 7, 8, 9}) {
            const std::int64_t K = std::max<std::int64_t>(1, upper_bound(ctx, at_zero[k]));
            rows[k].add_term(zeta, -K);
        }
    }
    for (auto& r : rows) {
        ctx.le(std::move(r));
    }
    if (with_zeta) {
        const std::int64_t M2 = std::max({max_abs(dn), max_abs(dq), std::int64_t{1}});
        for (const Operand* v : {&n, &q}) {
            for (std::int64_t sign : {1, -1}) {
                LinExpr e = sign * ctx.lin(*v) - M2;
                e.add_term(zeta, M2);
                ctx.le(std::move(e));
            }
        }
    }
    return p;
}

}  // namespace

// int_abs(x, y): y = |x|.
void rewrite_abs(RewriteContext& ctx, const fzn::ConstraintItem& c) {
    const Operand x = fzn::as_operand(c.args[0]);
    const Operand y = fzn::as_operand(c.args[1]);
    ctx.restrict(y, bounds::abs_bounds(ctx.dom(x)));
    const LinExpr z = ctx.abs_core(x, "");
    ctx.eq(ctx.lin(y) - ctx.lin(x) + 2 * z);
}

// int_div(n, d, q): q = n / d truncated toward zero.
void rewrite_div(RewriteContext& ctx, const fzn::ConstraintItem& c) {
    emit_div(ctx, fzn::as_operand(c.args[0]), fzn::as_operand(c.args[1]), fzn::as_operand(c.args[2]));
}

// int_mod(n, d, r): r = n - d * (n / d).
void rewrite_mod(RewriteContext& ctx, const fzn::ConstraintItem& c) {
    const Operand n = fzn::as_operand(c.args[0]);
    const Operand d = fzn::as_operand(c.args[1]);
    const Operand r = fzn::as_operand(c.args[2]);

    const std::int64_t U = max_abs(ctx.dom(n));
    const Operand q = Operand::variable(ctx.fresh("q", {-U, U}));
    const auto p = emit_div(ctx, n, d, q);
    if (!p) {
        return;
    }

    const std::int64_t ud = checked::sub(max_abs(ctx.dom(d)), 1);
    Domain rd{-ud, ud};
    const Domain dn = ctx.dom(n);
    if (dn.lo >= 0) {
        rd.lo = std::max<std::int64_t>(rd.lo, 0);
    }
    if (dn.hi <= 0) {
        rd.hi = std::min<std::int64_t>(rd.hi, 0);
    }
    ctx.restrict(r, rd);
    ctx.eq(*p + ctx.lin(r) - ctx.lin(n));
}

namespace {

// Variable equal to x^n (n >= 1), built by squaring.
Operand power_var(RewriteContext& ctx, const Operand& x, std::int64_t n) {
    if (n == 1) {
        return x;
    }
    const Operand u = power_var(ctx, x, n / 2);
    if (n % 2 == 0) {
        return Operand::variable(*ctx.product(u, u, "x" + std::to_string(n)).as_var());
    }
    const Operand v = Operand::variable(*ctx.product(u, u, "x" + std::to_string(n - 1)).as_var());
    return Operand::variable(*ctx.product(x, v, "x" + std::to_string(n)).as_var());
}

}  // namespace

// int_pow(x, y, z): z = x^y for a fixed y >= 0.
void rewrite_pow(RewriteContext& ctx, const fzn::ConstraintItem& c) {
    const Operand x = fzn::as_operand(c.args[0]);
    const Operand y = fzn::as_operand(c.args[1]);
    const Operand z = fzn::as_operand(c.args[2]);

    const Domain dy = ctx.dom(y);
    if (!dy.is_fixed()) {
        throw Error(ErrorCode::UnsupportedExponent, y.var, "int_pow needs a fixed exponent, got " + dy.str());
    }
    const std::int64_t n = dy.lo;
    if (n < 0) {
        throw Error(ErrorCode::UnsupportedExponent, std::to_string(n), "int_pow with a negative exponent");
    }
    if (n == 0) {
        ctx.eq(ctx.lin(z) - 1);
        return;
    }
    if (!x.is_var()) {
        std::int64_t v = 1;
        for (std::int64_t k = 0; k < n; ++k) {
            v = checked::mul(v, x.value);
        }
        ctx.eq(ctx.lin(z) - v);
        return;
    }
    if (n == 1) {
        ctx.eq(ctx.lin(z) - ctx.lin(x));
        return;
    }
    // The last product is bound to z directly when the order allows it.
    const std::string role = "x" + std::to_string(n);
    const Operand u = power_var(ctx, x, n / 2);
    if (n % 2 == 0) {
        ctx.bind_product(z, u, u, role);
        return;
    }
    const Operand v = Operand::variable(*ctx.product(u, u, "x" + std::to_string(n - 1)).as_var());
    ctx.bind_product(z, x, v, role);
}

}  // namespace fzq::rewrite
