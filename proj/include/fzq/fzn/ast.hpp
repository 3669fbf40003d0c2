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

#ifndef FZQ_FZN_AST_HPP
#define FZQ_FZN_AST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fzq/domain.hpp"
#include "fzq/error.hpp"

namespace fzq::fzn {

enum class VarKind { Int, Bool };

/// Finite set of integers stored as sorted, disjoint, non-adjacent ranges.
struct IntSet {
    std::vector<Domain> ranges;

    static IntSet from_range(std::int64_t lo, std::int64_t hi);
    static IntSet from_values(std::vector<std::int64_t> values);

    bool empty() const { return ranges.empty(); }
    bool contains(std::int64_t v) const;
    /// Values of the set that lie inside `d`, ascending.
    std::vector<std::int64_t> values_within(const Domain& d) const;

    friend bool operator==(const IntSet&, const IntSet&) = default;
};

/// Argument-level expression. After typecheck only IntLit, BoolLit, Ident
/// (naming a variable), Array (of those) and Set remain.
struct Expr {
    enum class Kind { IntLit, BoolLit, Ident, Access, Array, Set };

    Kind kind = Kind::IntLit;
    std::int64_t value = 0;  // IntLit, BoolLit (0/1), Access index
    std::string name;        // Ident, Access
    std::vector<Expr> elems; // Array
    IntSet set;              // Set
    SourceLoc loc;

    static Expr int_lit(std::int64_t v, SourceLoc loc = {});
    static Expr bool_lit(bool b, SourceLoc loc = {});
    static Expr ident(std::string name, SourceLoc loc = {});
    static Expr array(std::vector<Expr> elems, SourceLoc loc = {});
    static Expr set_lit(IntSet s, SourceLoc loc = {});

    bool is_literal() const { return kind == Kind::IntLit || kind == Kind::BoolLit; }

    // Structural equality ignores source locations.
    bool operator==(const Expr& o) const;
};

struct VarDecl {
    std::string name;
    VarKind kind = VarKind::Int;
    Domain domain;
    bool is_introduced = false;
    std::optional<IntSet> set_domain;  // `var {1,3}: x`, lowered by typecheck
    std::optional<Expr> assigned;      // `var 1..3: x = e`, lowered by typecheck
    SourceLoc loc;

    bool operator==(const VarDecl& o) const {
        return name == o.name && kind == o.kind && domain == o.domain &&
               is_introduced == o.is_introduced && set_domain == o.set_domain &&
               assigned == o.assigned;
    }
};

struct ParamDecl {
    enum class Type { Int, Bool, IntArray, BoolArray, IntSet };
    std::string name;
    Type type = Type::Int;
    Expr value;
    SourceLoc loc;

    bool operator==(const ParamDecl& o) const {
        return name == o.name && type == o.type && value == o.value;
    }
};

/// `array [1..n] of var T: name = [...]`; a pure alias of existing variables.
struct VarArrayDecl {
    std::string name;
    VarKind elem_kind = VarKind::Int;
    std::vector<Expr> elems;
    SourceLoc loc;

    bool operator==(const VarArrayDecl& o) const {
        return name == o.name && elem_kind == o.elem_kind && elems == o.elems;
    }
};

struct ConstraintItem {
    std::string builtin;
    std::vector<Expr> args;
    SourceLoc loc;

    bool operator==(const ConstraintItem& o) const {
        return builtin == o.builtin && args == o.args;
    }
};

struct SolveItem {
    enum class Kind { Satisfy, Minimize, Maximize };
    Kind kind = Kind::Satisfy;
    std::optional<Expr> objective;
    SourceLoc loc;

    bool operator==(const SolveItem& o) const {
        return kind == o.kind && objective == o.objective;
    }
};

struct FzModel {
    std::vector<ParamDecl> params;
    std::vector<VarDecl> vars;
    std::vector<VarArrayDecl> var_arrays;
    std::vector<ConstraintItem> constraints;
    SolveItem solve;
    bool checked = false;

    const VarDecl* find_var(const std::string& name) const;

    bool operator==(const FzModel& o) const {
        return params == o.params && vars == o.vars && var_arrays == o.var_arrays &&
               constraints == o.constraints && solve == o.solve;
    }
};

/// A scalar argument of a checked constraint: either a variable or a constant.
struct Operand {
    std::string var;  // empty for constants
    std::int64_t value = 0;

    bool is_var() const { return !var.empty(); }
    static Operand constant(std::int64_t v) { return {std::string{}, v}; }
    static Operand variable(std::string name) { return {std::move(name), 0}; }

    friend bool operator==(const Operand&, const Operand&) = default;
};

// Views over checked-model arguments.
Operand as_operand(const Expr& e);
std::vector<Operand> as_operands(const Expr& array);
std::vector<std::int64_t> as_int_values(const Expr& array);
const IntSet& as_set(const Expr& e);

}  // namespace fzq::fzn

#endif  // FZQ_FZN_AST_HPP
