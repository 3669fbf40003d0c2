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

#include <set>

#include "fzq/error.hpp"
#include "rewrite/context.hpp"

namespace fzq::rewrite {

namespace {

constexpr std::uint64_t kMaxReifWidth = std::uint64_t{1} << 20;

}  // namespace

// set_in(x, S), set_in_reif(x, S, r).
void rewrite_set(RewriteContext& ctx, const fzn::ConstraintItem& c) {
    const Operand x = fzn::as_operand(c.args[0]);
    const fzn::IntSet& s = fzn::as_set(c.args[1]);
    const Domain dx = ctx.dom(x);

    if (ctx.builtin() == "set_in") {
        const std::vector<std::int64_t> vals = s.values_within(dx);
        if (vals.empty()) {
            ctx.unsat("no value of " + dx.str() + " lies in the set");
        }
        if (!x.is_var()) {
            return;
        }
        ctx.restrict(x, {vals.front(), vals.back()});
        ctx.qip().onehot_get_or_create(x.var, vals, ctx.builtin());
        ctx.qip().onehot_restrict(x.var, std::set<std::int64_t>(vals.begin(), vals.end()));
        return;
    }

    const Operand r = fzn::as_operand(c.args[2]);
    if (!x.is_var()) {
        ctx.eq(ctx.lin(r) - (s.contains(x.value) ? 1 : 0));
        return;
    }
    if (dx.size() > kMaxReifWidth) {
        throw Error(ErrorCode::Overflow, x.var, "one-hot encoding of '" + x.var + "' needs too many bits");
    }
    std::vector<std::int64_t> all;
    for (std::int64_t v = dx.lo;; ++v) {
        all.push_back(v);
        if (v == dx.hi) {
            break;
        }
    }
    const qip::OneHotGroup g = ctx.qip().onehot_get_or_create(x.var, all, ctx.builtin());
    LinExpr e = ctx.lin(r);
    for (const auto& bit : g.bits) {
        if (s.contains(bit.value)) {
            e.add_term(bit.var, -1);
        }
    }
    ctx.eq(std::move(e));
}

}  // namespace fzq::rewrite
