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

#include "fzq/bounds/interval_bounds.hpp"
#include "fzq/error.hpp"

namespace fzq::rewrite {

void RewriteContext::begin(const fzn::ConstraintItem& c, std::size_t index) {
    builtin_ = c.builtin;
    index_ = index;
    b_.set_provenance({c.builtin, static_cast<std::int64_t>(index)});
    b_.open_instance(c.builtin);
}

Domain RewriteContext::dom(const Operand& x) const {
    return x.is_var() ? b_.var(x.var).domain : Domain::singleton(x.value);
}

LinExpr RewriteContext::lin(const Operand& x) const {
    return x.is_var() ? LinExpr::of_var(x.var) : LinExpr::of_constant(x.value);
}

std::string RewriteContext::fresh(const std::string& role, Domain d) {
    return b_.fresh_var(builtin_, role, d).name;
}

void RewriteContext::eq(LinExpr e) {
    if (e.is_constant()) {
        if (e.constant != 0) {
            unsat("constant equality " + std::to_string(e.constant) + " = 0");
        }
        return;
    }
    b_.add_equality(std::move(e));
}

void RewriteContext::le(LinExpr e) {
    if (e.is_constant()) {
        if (e.constant > 0) {
            unsat("constant inequality " + std::to_string(e.constant) + " <= 0");
        }
        return;
    }
    b_.add_inequality(std::move(e));
}

LinExpr RewriteContext::product(const Operand& a, const Operand& b, const std::string& role) {
    if (!a.is_var()) {
        return a.value * lin(b);
    }
    if (!b.is_var()) {
        return b.value * lin(a);
    }
    const std::string t = fresh(role, bounds::product_bounds(dom(a), dom(b)));
    b_.add_product(t, a.var, b.var);
    return LinExpr::of_var(t);
}

bool RewriteContext::bind_product(const Operand& result, const Operand& a, const Operand& b,
                                  const std::string& role) {
    if (result.is_var() && a.is_var() && b.is_var() && !b_.is_product_result(result.var)) {
        const std::size_t r = b_.position(result.var);
        if (b_.position(a.var) < r && b_.position(b.var) < r) {
            b_.add_product(result.var, a.var, b.var);
            return true;
        }
    }
    eq(lin(result) - product(a, b, role));
    return false;
}

LinExpr RewriteContext::abs_core(const Operand& x, const std::string& prefix) {
    const std::string bit = fresh(prefix + "b", Domain::binary());
    return product(Operand::variable(bit), x, prefix + "z");
}

Operand RewriteContext::abs_var(const Operand& x, Domain d, const std::string& prefix) {
    const LinExpr z = abs_core(x, prefix);
    const Operand y = Operand::variable(fresh(prefix + "abs", d));
    eq(lin(y) - lin(x) + 2 * z);
    return y;
}

void RewriteContext::restrict(const Operand& x, Domain d) {
    if (x.is_var()) {
        b_.restrict_domain(x.var, d);
    } else if (!d.contains(x.value)) {
        unsat("constant " + std::to_string(x.value) + " outside " + d.str());
    }
}

void RewriteContext::mark_exclusive(const Operand& r) {
    if (r.is_var()) {
        b_.mark_exclusive_result(r.var);
        claims_[r.var].insert(index_);
    }
}

void RewriteContext::unsat(const std::string& message) const {
    throw Error(ErrorCode::Unsat, builtin_ + "#" + std::to_string(index_), message);
}

}  // namespace fzq::rewrite
