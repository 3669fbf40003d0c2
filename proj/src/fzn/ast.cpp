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

#include "fzq/fzn/ast.hpp"

#include <algorithm>

namespace fzq::fzn {

IntSet IntSet::from_range(std::int64_t lo, std::int64_t hi) {
    IntSet s;
    if (lo <= hi) {
        s.ranges.push_back({lo, hi});
    }
    return s;
}

IntSet IntSet::from_values(std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    IntSet s;
    for (auto v : values) {
        if (!s.ranges.empty() && s.ranges.back().hi + 1 == v) {
            s.ranges.back().hi = v;
        } else {
            s.ranges.push_back({v, v});
        }
    }
    return s;
}

bool IntSet::contains(std::int64_t v) const {
    return std::any_of(ranges.begin(), ranges.end(), [v](const Domain& r) { return r.contains(v); });
}

std::vector<std::int64_t> IntSet::values_within(const Domain& d) const {
    std::vector<std::int64_t> out;
    for (const auto& r : ranges) {
        if (auto clipped = r.intersect(d)) {
            for (std::int64_t v = clipped->lo;; ++v) {
                out.push_back(v);
                if (v == clipped->hi) {
                    break;
                }
            }
        }
    }
    return out;
}

Expr Expr::int_lit(std::int64_t v, SourceLoc loc) {
    Expr e;
    e.kind = Kind::IntLit;
    e.value = v;
    e.loc = loc;
    return e;
}

Expr Expr::bool_lit(bool b, SourceLoc loc) {
    Expr e;
    e.kind = Kind::BoolLit;
    e.value = b ? 1 : 0;
    e.loc = loc;
    return e;
}

Expr Expr::ident(std::string name, SourceLoc loc) {
    Expr e;
    e.kind = Kind::Ident;
    e.name = std::move(name);
    e.loc = loc;
    return e;
}

Expr Expr::array(std::vector<Expr> elems, SourceLoc loc) {
    Expr e;
    e.kind = Kind::Array;
    e.elems = std::move(elems);
    e.loc = loc;
    return e;
}

Expr Expr::set_lit(IntSet s, SourceLoc loc) {
    Expr e;
    e.kind = Kind::Set;
    e.set = std::move(s);
    e.loc = loc;
    return e;
}

bool Expr::operator==(const Expr& o) const {
    return kind == o.kind && value == o.value && name == o.name && elems == o.elems && set == o.set;
}

const VarDecl* FzModel::find_var(const std::string& name) const {
    for (const auto& v : vars) {
        if (v.name == name) {
            return &v;
        }
    }
    return nullptr;
}

Operand as_operand(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::IntLit:
        case Expr::Kind::BoolLit:
            return Operand::constant(e.value);
        case Expr::Kind::Ident:
            return Operand::variable(e.name);
        default:
            throw Error(ErrorCode::KindMismatch, e.name, "expected a scalar argument", e.loc);
    }
}

std::vector<Operand> as_operands(const Expr& array) {
    if (array.kind != Expr::Kind::Array) {
        throw Error(ErrorCode::KindMismatch, array.name, "expected an array argument", array.loc);
    }
    std::vector<Operand> out;
    out.reserve(array.elems.size());
    for (const auto& e : array.elems) {
        out.push_back(as_operand(e));
    }
    return out;
}

std::vector<std::int64_t> as_int_values(const Expr& array) {
    std::vector<std::int64_t> out;
    for (const auto& op : as_operands(array)) {
        if (op.is_var()) {
            throw Error(ErrorCode::KindMismatch, op.var, "expected a constant array element");
        }
        out.push_back(op.value);
    }
    return out;
}

const IntSet& as_set(const Expr& e) {
    if (e.kind != Expr::Kind::Set) {
        throw Error(ErrorCode::KindMismatch, e.name, "expected a set argument", e.loc);
    }
    return e.set;
}

}  // namespace fzq::fzn
