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

#include "fzq/qip/validate.hpp"

#include <set>

namespace fzq::qip {

namespace {

class Validator {
public:
    explicit Validator(const QipProblem& p) : p_(p), index_(p.index()) {}

    std::vector<Violation> run() {
        check_vars();
        check_expr(p_.objective.expr, "objective");
        for (std::size_t i = 0; i < p_.equalities.size(); ++i) {
            check_expr(p_.equalities[i], "equality " + std::to_string(i));
        }
        for (std::size_t i = 0; i < p_.inequalities.size(); ++i) {
            check_expr(p_.inequalities[i], "inequality " + std::to_string(i));
        }
        check_products();
        check_onehot();
        check_meta();
        return std::move(out_);
    }

private:
    void report(std::string code, std::string entity, std::string detail) {
        out_.push_back({std::move(code), std::move(entity), std::move(detail)});
    }

    bool declared(const std::string& name, const std::string& where) {
        if (index_.contains(name)) {
            return true;
        }
        report("undeclared-var", name, "referenced by " + where);
        return false;
    }

    void check_vars() {
        std::set<std::string> seen;
        for (const auto& v : p_.vars) {
            if (!seen.insert(v.name).second) {
                report("duplicate-var", v.name, "declared more than once");
            }
            if (v.domain.empty()) {
                report("empty-domain", v.name, "domain " + v.domain.str());
            }
        }
    }

    void check_expr(const LinExpr& e, const std::string& where) {
        for (std::size_t i = 0; i < e.terms.size(); ++i) {
            const Term& t = e.terms[i];
            declared(t.var, where);
            if (t.coef == 0) {
                report("non-canonical expr", where, "zero coefficient on '" + t.var + "'");
            }
            if (i > 0) {
                const std::string& prev = e.terms[i - 1].var;
                if (prev == t.var) {
                    report("non-canonical expr", where, "duplicate term '" + t.var + "'");
                } else if (prev > t.var) {
                    report("non-canonical expr", where, "terms not sorted at '" + t.var + "'");
                }
            }
        }
    }

    void check_products() {
        std::set<std::string> results;
        std::set<std::string> operands;
        for (std::size_t i = 0; i < p_.products.size(); ++i) {
            const auto& pc = p_.products[i];
            const std::string where = "product " + std::to_string(i);
            const bool ok = declared(pc.result, where) & declared(pc.left, where) & declared(pc.right, where);
            operands.insert(pc.left);
            operands.insert(pc.right);
            if (!results.insert(pc.result).second) {
                report("product-duplicate-result", pc.result, where + " redefines its result");
            }
            if (!ok) {
                continue;
            }
            const auto r = index_.at(pc.result);
            if (index_.at(pc.left) >= r || index_.at(pc.right) >= r) {
                report("product-order", pc.result,
                       where + ": operands must be declared before the result (" + pc.result + " = " + pc.left +
                           " * " + pc.right + ")");
            }
        }
        for (const auto& ex : p_.meta.exclusive_results) {
            if (operands.contains(ex)) {
                report("product-exclusive", ex, "product-form result is also used as a product operand");
            }
        }
    }

    void check_onehot() {
        std::set<std::string> owners;
        for (const auto& g : p_.onehot_groups) {
            if (!declared(g.int_var, "one-hot group")) {
                continue;
            }
            if (!owners.insert(g.int_var).second) {
                report("onehot-duplicate-owner", g.int_var, "variable owns more than one one-hot group");
            }
            const Domain dom = p_.vars[index_.at(g.int_var)].domain;
            std::set<std::int64_t> values;
            for (const auto& b : g.bits) {
                if (declared(b.var, "one-hot group of " + g.int_var) &&
                    p_.vars[index_.at(b.var)].domain != Domain::binary()) {
                    report("onehot-bit-domain", b.var, "one-hot bit must have domain [0,1]");
                }
                if (!values.insert(b.value).second) {
                    report("onehot-duplicate-value", g.int_var, "value " + std::to_string(b.value) + " repeated");
                }
                if (!dom.contains(b.value)) {
                    report("onehot-value-out-of-domain", g.int_var,
                           "value " + std::to_string(b.value) + " outside " + dom.str());
                }
            }
        }
    }

    void check_meta() {
        if (p_.meta.equalities.size() != p_.equalities.size() ||
            p_.meta.inequalities.size() != p_.inequalities.size() || p_.meta.products.size() != p_.products.size()) {
            report("meta-size", "meta", "provenance lists do not match the constraint lists");
        }
    }

    const QipProblem& p_;
    std::map<std::string, std::size_t> index_;
    std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> validate(const QipProblem& problem) { return Validator(problem).run(); }

}  // namespace fzq::qip
