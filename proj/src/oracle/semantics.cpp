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

#include "fzq/oracle/semantics.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "fzq/error.hpp"

namespace fzq::oracle {

namespace {

enum Op {
    ArrayIntElement,
    ArrayVarIntElement,
    ArrayBoolElement,
    ArrayVarBoolElement,
    ArrayIntMaximum,
    ArrayIntMinimum,
    IntAbs,
    IntDiv,
    IntMod,
    IntPow,
    IntTimes,
    IntPlus,
    IntEq,
    IntEqReif,
    IntLe,
    IntLeReif,
    IntLt,
    IntLtReif,
    IntNe,
    IntNeReif,
    IntMax,
    IntMin,
    IntLinEq,
    IntLinEqReif,
    IntLinLe,
    IntLinLeReif,
    IntLinNe,
    IntLinNeReif,
    ArrayBoolAnd,
    ArrayBoolXor,
    Bool2Int,
    BoolAnd,
    BoolClause,
    BoolEq,
    BoolEqReif,
    BoolLe,
    BoolLeReif,
    BoolLinEq,
    BoolLinLe,
    BoolLt,
    BoolLtReif,
    BoolNot,
    BoolOr,
    BoolXor,
    SetIn,
    SetInReif,
};

const std::map<std::string_view, Op>& op_table() {
    static const std::map<std::string_view, Op> t = {
        {"array_int_element", ArrayIntElement},
        {"array_var_int_element", ArrayVarIntElement},
        {"array_bool_element", ArrayBoolElement},
        {"array_var_bool_element", ArrayVarBoolElement},
        {"array_int_maximum", ArrayIntMaximum},
        {"array_int_minimum", ArrayIntMinimum},
        {"int_abs", IntAbs},
        {"int_div", IntDiv},
        {"int_mod", IntMod},
        {"int_pow", IntPow},
        {"int_times", IntTimes},
        {"int_plus", IntPlus},
        {"int_eq", IntEq},
        {"int_eq_reif", IntEqReif},
        {"int_le", IntLe},
        {"int_le_reif", IntLeReif},
        {"int_lt", IntLt},
        {"int_lt_reif", IntLtReif},
        {"int_ne", IntNe},
        {"int_ne_reif", IntNeReif},
        {"int_max", IntMax},
        {"int_min", IntMin},
        {"int_lin_eq", IntLinEq},
        {"int_lin_eq_reif", IntLinEqReif},
        {"int_lin_le", IntLinLe},
        {"int_lin_le_reif", IntLinLeReif},
        {"int_lin_ne", IntLinNe},
        {"int_lin_ne_reif", IntLinNeReif},
        {"array_bool_and", ArrayBoolAnd},
        {"array_bool_xor", ArrayBoolXor},
        {"bool2int", Bool2Int},
        {"bool_and", BoolAnd},
        {"bool_clause", BoolClause},
        {"bool_eq", BoolEq},
        {"bool_eq_reif", BoolEqReif},
        {"bool_le", BoolLe},
        {"bool_le_reif", BoolLeReif},
        {"bool_lin_eq", BoolLinEq},
        {"bool_lin_le", BoolLinLe},
        {"bool_lt", BoolLt},
        {"bool_lt_reif", BoolLtReif},
        {"bool_not", BoolNot},
        {"bool_or", BoolOr},
        {"bool_xor", BoolXor},
        {"set_in", SetIn},
        {"set_in_reif", SetInReif},
    };
    return t;
}

using Wide = __int128;

// x^y for y >= 0; nullopt when it leaves int64.
std::optional<std::int64_t> ipow(std::int64_t x, std::int64_t y) {
    if (y == 0) {
        return 1;
    }
    if (x == 0 || x == 1) {
        return x;
    }
    if (x == -1) {
        return y % 2 == 0 ? 1 : -1;
    }
    std::int64_t r = 1;
    for (std::int64_t k = 0; k < y; ++k) {
        if (__builtin_mul_overflow(r, x, &r)) {
            return std::nullopt;
        }
    }
    return r;
}

}  // namespace

BoundConstraint::BoundConstraint(const fzn::ConstraintItem& c, const std::map<std::string, std::size_t>& index)
    : builtin_(c.builtin) {
    auto it = op_table().find(c.builtin);
    if (it == op_table().end()) {
        throw Error(ErrorCode::UnsupportedItem, c.builtin, "no semantics for '" + c.builtin + "'", c.loc);
    }
    op_ = it->second;
    auto ref = [&](const fzn::Expr& e) {
        const fzn::Operand o = fzn::as_operand(e);
        if (!o.is_var()) {
            return Ref{o.value, -1};
        }
        auto vit = index.find(o.var);
        if (vit == index.end()) {
            throw Error(ErrorCode::UndeclaredIdentifier, o.var, "unassigned variable '" + o.var + "'", e.loc);
        }
        positions_.push_back(vit->second);
        return Ref{0, static_cast<std::ptrdiff_t>(vit->second)};
    };
    for (const auto& a : c.args) {
        Arg arg;
        if (a.kind == fzn::Expr::Kind::Array) {
            for (const auto& e : a.elems) {
                arg.elems.push_back(ref(e));
            }
        } else if (a.kind == fzn::Expr::Kind::Set) {
            arg.set = a.set;
        } else {
            arg.elems.push_back(ref(a));
        }
        args_.push_back(std::move(arg));
    }
    std::sort(positions_.begin(), positions_.end());
    positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
}

bool BoundConstraint::eval(std::span<const std::int64_t> v) const {
    auto s = [&](std::size_t k) { return args_[k].elems[0].get(v); };
    auto arr = [&](std::size_t k) -> const std::vector<Ref>& { return args_[k].elems; };
    auto lin = [&]() {
        Wide sum = 0;
        const auto& as = arr(0);
        const auto& bs = arr(1);
        for (std::size_t i = 0; i < as.size() && i < bs.size(); ++i) {
            sum += static_cast<Wide>(as[i].get(v)) * bs[i].get(v);
        }
        return sum;
    };
    auto element = [&]() {
        const std::int64_t i = s(0);
        const auto& a = arr(1);
        if (i < 1 || i > static_cast<std::int64_t>(a.size())) {
            return false;
        }
        return a[static_cast<std::size_t>(i - 1)].get(v) == s(2);
    };

    switch (static_cast<Op>(op_)) {
        case ArrayIntElement:
        case ArrayVarIntElement:
        case ArrayBoolElement:
        case ArrayVarBoolElement:
            return element();
        case ArrayIntMaximum:
        case ArrayIntMinimum: {
            const auto& xs = arr(1);
            if (xs.empty()) {
                return false;
            }
            std::int64_t best = xs[0].get(v);
            for (const auto& x : xs) {
                best = op_ == ArrayIntMaximum ? std::max(best, x.get(v)) : std::min(best, x.get(v));
            }
            return s(0) == best;
        }
        case IntAbs: {
            const Wide x = s(0);
            return (x < 0 ? -x : x) == s(1);
        }
        case IntDiv:
        case IntMod: {
            const std::int64_t n = s(0), d = s(1);
            if (d == 0) {
                return false;
            }
            if (n == std::numeric_limits<std::int64_t>::min() && d == -1) {
                return op_ == IntMod ? s(2) == 0 : false;
            }
            return s(2) == (op_ == IntDiv ? n / d : n % d);
        }
        case IntPow: {
            const std::int64_t x = s(0), y = s(1), z = s(2);
            if (y >= 0) {
                const auto r = ipow(x, y);
                return r && *r == z;
            }
            if (x == 0) {
                return false;
            }
            // 1 div x^-y
            if (x == 1) {
                return z == 1;
            }
            if (x == -1) {
                return z == ((-y) % 2 == 0 ? 1 : -1);
            }
            return z == 0;
        }
        case IntTimes:
            return static_cast<Wide>(s(0)) * s(1) == s(2);
        case IntPlus:
            return static_cast<Wide>(s(0)) + s(1) == s(2);
        case IntEq:
        case BoolEq:
        case Bool2Int:
            return s(0) == s(1);
        case IntLe:
        case BoolLe:
            return s(0) <= s(1);
        case IntLt:
        case BoolLt:
            return s(0) < s(1);
        case IntNe:
        case BoolNot:
            return s(0) != s(1);
        case IntEqReif:
        case BoolEqReif:
            return (s(0) == s(1)) == (s(2) == 1);
        case IntLeReif:
        case BoolLeReif:
            return (s(0) <= s(1)) == (s(2) == 1);
        case IntLtReif:
        case BoolLtReif:
            return (s(0) < s(1)) == (s(2) == 1);
        case IntNeReif:
            return (s(0) != s(1)) == (s(2) == 1);
        case IntMax:
            return std::max(s(0), s(1)) == s(2);
        case IntMin:
            return std::min(s(0), s(1)) == s(2);
        case IntLinEq:
        case BoolLinEq:
            return lin() == s(2);
        case IntLinLe:
        case BoolLinLe:
            return lin() <= s(2);
        case IntLinNe:
            return lin() != s(2);
        case IntLinEqReif:
            return (lin() == s(2)) == (s(3) == 1);
        case IntLinLeReif:
            return (lin() <= s(2)) == (s(3) == 1);
        case IntLinNeReif:
            return (lin() != s(2)) == (s(3) == 1);
        case ArrayBoolAnd: {
            bool all = true;
            for (const auto& a : arr(0)) {
                all = all && a.get(v) == 1;
            }
            return all == (s(1) == 1);
        }
        case ArrayBoolXor: {
            // Exactly one true element.
            std::int64_t ones = 0;
            for (const auto& a : arr(0)) {
                ones += a.get(v);
            }
            return ones == 1;
        }
        case BoolAnd:
            return (s(0) == 1 && s(1) == 1) == (s(2) == 1);
        case BoolOr:
            return (s(0) == 1 || s(1) == 1) == (s(2) == 1);
        case BoolXor:
            if (args_.size() == 2) {
                return s(0) != s(1);
            }
            return (s(0) != s(1)) == (s(2) == 1);
        case BoolClause: {
            for (const auto& a : arr(0)) {
                if (a.get(v) == 1) {
                    return true;
                }
            }
            for (const auto& b : arr(1)) {
                if (b.get(v) == 0) {
                    return true;
                }
            }
            return false;
        }
        case SetIn:
            return args_[1].set.contains(s(0));
        case SetInReif:
            return args_[1].set.contains(s(0)) == (s(2) == 1);
    }
    return false;
}

bool eval_builtin(std::string_view builtin, const std::vector<fzn::Expr>& args, const Assignment& assignment) {
    std::map<std::string, std::size_t> index;
    std::vector<std::int64_t> values;
    for (const auto& [name, value] : assignment) {
        index.emplace(name, values.size());
        values.push_back(value);
    }
    fzn::ConstraintItem c;
    c.builtin = std::string(builtin);
    c.args = args;
    return BoundConstraint(c, index).eval(values);
}

}  // namespace fzq::oracle
