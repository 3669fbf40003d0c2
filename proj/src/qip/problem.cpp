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

#include "fzq/qip/problem.hpp"

#include <algorithm>

#include "fzq/checked.hpp"

namespace fzq::qip {

LinExpr LinExpr::of_constant(std::int64_t c) {
    LinExpr e;
    e.constant = c;
    return e;
}

LinExpr LinExpr::of_var(const std::string& var, std::int64_t coef) {
    LinExpr e;
    e.add_term(var, coef);
    return e;
}

LinExpr& LinExpr::add_term(const std::string& var, std::int64_t coef) {
    auto it = std::lower_bound(terms.begin(), terms.end(), var,
                               [](const Term& t, const std::string& v) { return t.var < v; });
    if (it != terms.end() && it->var == var) {
        it->coef = checked::add(it->coef, coef);
        if (it->coef == 0) {
            terms.erase(it);
        }
    } else if (coef != 0) {
        terms.insert(it, Term{var, coef});
    }
    return *this;
}

LinExpr& LinExpr::add_constant(std::int64_t c) {
    constant = checked::add(constant, c);
    return *this;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
    for (const auto& t : o.terms) {
        add_term(t.var, t.coef);
    }
    return add_constant(o.constant);
}

LinExpr& LinExpr::operator-=(const LinExpr& o) {
    for (const auto& t : o.terms) {
        add_term(t.var, checked::neg(t.coef));
    }
    return add_constant(checked::neg(o.constant));
}

LinExpr& LinExpr::operator*=(std::int64_t k) {
    if (k == 0) {
        terms.clear();
        constant = 0;
        return *this;
    }
    for (auto& t : terms) {
        t.coef = checked::mul(t.coef, k);
    }
    constant = checked::mul(constant, k);
    return *this;
}

LinExpr operator-(LinExpr a, std::int64_t c) { return a.add_constant(checked::neg(c)); }

LinExpr operator-(std::int64_t c, const LinExpr& a) {
    LinExpr r = LinExpr::of_constant(c);
    r -= a;
    return r;
}

std::int64_t LinExpr::coef_of(const std::string& var) const {
    for (const auto& t : terms) {
        if (t.var == var) {
            return t.coef;
        }
    }
    return 0;
}

const std::string* LinExpr::as_var() const {
    if (terms.size() == 1 && terms.front().coef == 1 && constant == 0) {
        return &terms.front().var;
    }
    return nullptr;
}

const OneHotBit* OneHotGroup::bit_for(std::int64_t value) const {
    for (const auto& b : bits) {
        if (b.value == value) {
            return &b;
        }
    }
    return nullptr;
}

std::string Provenance::str() const {
    if (constraint < 0) {
        return builtin.empty() ? std::string("<none>") : builtin;
    }
    return builtin + "#" + std::to_string(constraint);
}

std::map<std::string, std::size_t> QipProblem::index() const {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        idx.emplace(vars[i].name, i);
    }
    return idx;
}

}  // namespace fzq::qip
