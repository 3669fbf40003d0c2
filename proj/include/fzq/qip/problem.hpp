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

#ifndef FZQ_QIP_PROBLEM_HPP
#define FZQ_QIP_PROBLEM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fzq/domain.hpp"

namespace fzq::qip {

/// Where a variable came from: the source model, or a rewrite of one builtin
/// instance (`__<builtin>_<ordinal>_<role>`).
struct Origin {
    enum class Kind { Model, Aux };
    Kind kind = Kind::Model;
    std::string builtin;
    std::int64_t ordinal = 0;
    std::string role;

    static Origin model() { return {}; }
    static Origin aux(std::string builtin, std::int64_t ordinal, std::string role) {
        return {Kind::Aux, std::move(builtin), ordinal, std::move(role)};
    }

    friend bool operator==(const Origin&, const Origin&) = default;
};

struct QipVar {
    std::string name;
    Domain domain;
    Origin origin;

    friend bool operator==(const QipVar&, const QipVar&) = default;
};

struct Term {
    std::string var;
    std::int64_t coef = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

/// sum(coef * var) + constant over integers.
///
/// The mutators keep the canonical form: terms sorted by variable name, no
/// duplicate variables, no zero coefficients. `terms` is public so that a
/// deserialized expression can be held (and rejected by validate) as written.
struct LinExpr {
    std::vector<Term> terms;
    std::int64_t constant = 0;

    static LinExpr of_constant(std::int64_t c);
    static LinExpr of_var(const std::string& var, std::int64_t coef = 1);

    LinExpr& add_term(const std::string& var, std::int64_t coef);
    LinExpr& add_constant(std::int64_t c);
    LinExpr& operator+=(const LinExpr& o);
    LinExpr& operator-=(const LinExpr& o);
    LinExpr& operator*=(std::int64_t k);

    bool is_constant() const { return terms.empty(); }
    std::int64_t coef_of(const std::string& var) const;
    /// Non-null when the expression is exactly `1 * var`.
    const std::string* as_var() const;

    friend LinExpr operator+(LinExpr a, const LinExpr& b) { return a += b; }
    friend LinExpr operator-(LinExpr a, const LinExpr& b) { return a -= b; }
    friend LinExpr operator*(std::int64_t k, LinExpr a) { return a *= k; }
    friend LinExpr operator+(LinExpr a, std::int64_t c) { return a.add_constant(c); }
    friend LinExpr operator-(LinExpr a, std::int64_t c);
    friend LinExpr operator+(std::int64_t c, LinExpr a) { return a.add_constant(c); }
    friend LinExpr operator-(std::int64_t c, const LinExpr& a);

    friend bool operator==(const LinExpr&, const LinExpr&) = default;
};

/// result = left * right
struct ProductConstraint {
    std::string result;
    std::string left;
    std::string right;

    friend bool operator==(const ProductConstraint&, const ProductConstraint&) = default;
};

struct OneHotBit {
    std::string var;
    std::int64_t value = 0;

    friend bool operator==(const OneHotBit&, const OneHotBit&) = default;
};

/// int_var = sum(value * bit), sum(bit) = 1, bits sorted by value.
struct OneHotGroup {
    std::string int_var;
    std::vector<OneHotBit> bits;

    const OneHotBit* bit_for(std::int64_t value) const;

    friend bool operator==(const OneHotGroup&, const OneHotGroup&) = default;
};

struct Objective {
    enum class Sense { Min, Satisfy };
    Sense sense = Sense::Satisfy;
    bool negated = false;  // source model maximized; reported optima are sign-corrected
    LinExpr expr;

    friend bool operator==(const Objective&, const Objective&) = default;
};

/// Source constraint an emitted row came from; constraint < 0 for rows that
/// do not stem from one model constraint.
struct Provenance {
    std::string builtin;
    std::int64_t constraint = -1;

    std::string str() const;
    friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Meta {
    std::vector<Provenance> equalities;
    std::vector<Provenance> inequalities;
    std::vector<Provenance> products;
    /// Variables that must never be used as a product operand.
    std::vector<std::string> exclusive_results;

    friend bool operator==(const Meta&, const Meta&) = default;
};

/// Finite-domain quadratic integer program:
///   minimize objective
///   s.t. equalities (expr = 0), inequalities (expr <= 0),
///        products (result = left * right), var in [lo, hi].
struct QipProblem {
    std::vector<QipVar> vars;
    Objective objective;
    std::vector<LinExpr> equalities;
    std::vector<LinExpr> inequalities;
    std::vector<ProductConstraint> products;
    std::vector<OneHotGroup> onehot_groups;
    Meta meta;

    /// name -> position in `vars` (first occurrence wins).
    std::map<std::string, std::size_t> index() const;

    friend bool operator==(const QipProblem&, const QipProblem&) = default;
};

}  // namespace fzq::qip

#endif  // FZQ_QIP_PROBLEM_HPP
