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

#include "fzq/oracle/enumerate.hpp"

#include <algorithm>

#include "fzq/error.hpp"
#include "fzq/fzn/typecheck.hpp"
#include "fzq/oracle/semantics.hpp"

namespace fzq::oracle {

namespace {

using Wide = __int128;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_mul_overflow(a, b, &r) ? UINT64_MAX : r;
}

[[noreturn]] void cap_exceeded(std::uint64_t size, std::uint64_t cap, const std::string& what) {
    const std::string n = size == UINT64_MAX ? std::string(">1.8e19") : std::to_string(size);
    throw Error(ErrorCode::CapExceeded, what,
                what + " search space of " + n + " assignments exceeds the cap of " + std::to_string(cap));
}

class FznSearch {
public:
    FznSearch(const fzn::FzModel& model, std::uint64_t cap) {
        std::map<std::string, std::size_t> index;
        std::uint64_t size = 1;
        for (const auto& v : model.vars) {
            index.emplace(v.name, dom_.size());
            dom_.push_back(v.domain);
            out_.vars.push_back(v.name);
            size = saturating_mul(size, v.domain.size());
        }
        if (size > cap) {
            cap_exceeded(size, cap, "FlatZinc");
        }
        check_at_.resize(dom_.size());
        for (const auto& c : model.constraints) {
            constraints_.emplace_back(c, index);
        }
        for (std::size_t i = 0; i < constraints_.size(); ++i) {
            const auto& pos = constraints_[i].positions();
            if (pos.empty()) {
                ground_.push_back(i);
            } else {
                check_at_[pos.back()].push_back(i);
            }
        }
        val_.assign(dom_.size(), 0);
    }

    template <class Visit>
    void run(Visit&& visit) {
        for (std::size_t i : ground_) {
            if (!constraints_[i].eval(val_)) {
                return;
            }
        }
        dfs(0, visit);
    }

    AssignmentSet& result() { return out_; }
    const std::vector<BoundConstraint>& constraints() const { return constraints_; }

private:
    template <class Visit>
    bool dfs(std::size_t k, Visit& visit) {
        if (k == dom_.size()) {
            return visit(std::span<const std::int64_t>(val_));
        }
        for (std::int64_t v = dom_[k].lo;; ++v) {
            val_[k] = v;
            bool ok = true;
            for (std::size_t i : check_at_[k]) {
                if (!constraints_[i].eval(val_)) {
                    ok = false;
                    break;
                }
            }
            if (ok && !dfs(k + 1, visit)) {
                return false;
            }
            if (v == dom_[k].hi) {
                break;
            }
        }
        return true;
    }

    std::vector<Domain> dom_;
    std::vector<BoundConstraint> constraints_;
    std::vector<std::vector<std::size_t>> check_at_;
    std::vector<std::size_t> ground_;
    std::vector<std::int64_t> val_;
    AssignmentSet out_;
};

const fzn::FzModel& checked_model(const fzn::FzModel& model, fzn::FzModel& storage) {
    if (model.checked) {
        return model;
    }
    storage = fzn::typecheck(model);
    return storage;
}

class QipSearch {
public:
    QipSearch(const qip::QipProblem& p, const QipSearchOptions& opt) : p_(p) {
        const std::size_t n = p.vars.size();
        std::map<std::string, std::size_t> index;
        for (std::size_t k = 0; k < n; ++k) {
            index.emplace(p.vars[k].name, k);
            dom_.push_back(p.vars[k].domain);
        }
        auto pos = [&](const std::string& name) {
            auto it = index.find(name);
            if (it == index.end()) {
                throw Error(ErrorCode::UndeclaredIdentifier, name, "QIP references undeclared variable '" + name + "'");
            }
            return it->second;
        };
        for (const auto& [name, value] : opt.fixed) {
            const std::size_t k = pos(name);
            if (!dom_[k].contains(value)) {
                infeasible_fixed_ = k;
            }
            dom_[k] = Domain::singleton(value);
        }

        auto add_row = [&](const qip::LinExpr& e, bool is_eq, RowRef ref) {
            Row r;
            r.is_eq = is_eq;
            r.constant = e.constant;
            r.ref = ref;
            for (const auto& t : e.terms) {
                r.terms.push_back({pos(t.var), t.coef});
            }
            std::sort(r.terms.begin(), r.terms.end());
            rows_.push_back(std::move(r));
        };
        for (std::size_t i = 0; i < p.equalities.size(); ++i) {
            add_row(p.equalities[i], true, {RowRef::Kind::Equality, i});
        }
        for (std::size_t i = 0; i < p.inequalities.size(); ++i) {
            add_row(p.inequalities[i], false, {RowRef::Kind::Inequality, i});
        }

        mode_.assign(n, Mode::Branch);
        def_.assign(n, 0);
        for (std::size_t i = 0; i < p.products.size(); ++i) {
            const auto& pc = p.products[i];
            Prod pr{pos(pc.result), pos(pc.left), pos(pc.right), i};
            if (pr.left < pr.result && pr.right < pr.result && mode_[pr.result] == Mode::Branch) {
                mode_[pr.result] = Mode::Product;
                def_[pr.result] = prods_.size();
            }
            prods_.push_back(pr);
        }
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Row& r = rows_[i];
            if (!r.is_eq || r.terms.empty()) {
                continue;
            }
            const auto [last, coef] = r.terms.back();
            const bool unit = coef == 1 || coef == -1;
            if (mode_[last] == Mode::Branch ||
                (mode_[last] == Mode::Equality && unit && !rows_[def_[last]].unit_last())) {
                mode_[last] = Mode::Equality;
                def_[last] = i;
            }
        }

        rows_at_.resize(n);
        prods_at_.resize(n);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].terms.empty()) {
                ground_.push_back(i);
            }
            for (const auto& [k, c] : rows_[i].terms) {
                (void)c;
                rows_at_[k].push_back(i);
            }
        }
        for (std::size_t i = 0; i < prods_.size(); ++i) {
            const Prod& pr = prods_[i];
            if (mode_[pr.result] == Mode::Product && def_[pr.result] == i) {
                continue;
            }
            prods_at_[std::max({pr.result, pr.left, pr.right})].push_back(i);
        }

        std::uint64_t size = 1;
        for (std::size_t k = 0; k < n; ++k) {
            if (mode_[k] == Mode::Branch) {
                size = saturating_mul(size, dom_[k].size());
            }
        }
        if (size > opt.cap) {
            cap_exceeded(size, opt.cap, "QIP");
        }
        val_.assign(n, 0);
    }

    void run(const std::function<bool(std::span<const std::int64_t>)>& visit, QipSearchReport* report) {
        report_ = report;
        if (infeasible_fixed_) {
            fail(0, {RowRef::Kind::Domain, *infeasible_fixed_});
            return;
        }
        for (std::size_t i : ground_) {
            if ((rows_[i].is_eq && rows_[i].constant != 0) || (!rows_[i].is_eq && rows_[i].constant > 0)) {
                fail(0, rows_[i].ref);
                return;
            }
        }
        visit_ = &visit;
        dfs(0);
    }

private:
    enum class Mode { Branch, Product, Equality };

    struct Row {
        std::vector<std::pair<std::size_t, std::int64_t>> terms;  // (position, coef), by position
        std::int64_t constant = 0;
        bool is_eq = false;
        RowRef ref;

        bool unit_last() const { return terms.back().second == 1 || terms.back().second == -1; }
    };

    struct Prod {
        std::size_t result, left, right, index;
    };

    void fail(std::size_t depth, RowRef ref) {
        if (report_ != nullptr && (!report_->deepest_failure || depth > deepest_)) {
            report_->deepest_failure = ref;
            deepest_ = depth;
        }
    }

    // Rows touching k stay satisfiable given the values up to k and the
    // domains after it.
    bool consistent(std::size_t k) {
        for (std::size_t i : rows_at_[k]) {
            const Row& r = rows_[i];
            Wide lo = r.constant, hi = r.constant;
            for (const auto& [pos, c] : r.terms) {
                if (pos <= k) {
                    lo += static_cast<Wide>(c) * val_[pos];
                    hi += static_cast<Wide>(c) * val_[pos];
                } else if (c > 0) {
                    lo += static_cast<Wide>(c) * dom_[pos].lo;
                    hi += static_cast<Wide>(c) * dom_[pos].hi;
                } else {
                    lo += static_cast<Wide>(c) * dom_[pos].hi;
                    hi += static_cast<Wide>(c) * dom_[pos].lo;
                }
            }
            if (lo > 0 || (r.is_eq && hi < 0)) {
                fail(k, r.ref);
                return false;
            }
        }
        for (std::size_t i : prods_at_[k]) {
            const Prod& pr = prods_[i];
            if (static_cast<Wide>(val_[pr.left]) * val_[pr.right] != val_[pr.result]) {
                fail(k, {RowRef::Kind::Product, pr.index});
                return false;
            }
        }
        return true;
    }

    bool descend(std::size_t k) {
        if (!consistent(k)) {
            return true;
        }
        return dfs(k + 1);
    }

    // Returns false once the visitor asked to stop.
    bool dfs(std::size_t k) {
        if (k == val_.size()) {
            return (*visit_)(std::span<const std::int64_t>(val_));
        }
        const Domain& d = dom_[k];
        switch (mode_[k]) {
            case Mode::Branch:
                for (std::int64_t v = d.lo;; ++v) {
                    val_[k] = v;
                    if (!descend(k)) {
                        return false;
                    }
                    if (v == d.hi) {
                        break;
                    }
                }
                return true;
            case Mode::Product: {
                const Prod& pr = prods_[def_[k]];
                const Wide v = static_cast<Wide>(val_[pr.left]) * val_[pr.right];
                if (v < d.lo || v > d.hi) {
                    fail(k, {RowRef::Kind::Product, pr.index});
                    return true;
                }
                val_[k] = static_cast<std::int64_t>(v);
                return descend(k);
            }
            case Mode::Equality: {
                const Row& r = rows_[def_[k]];
                Wide rest = r.constant;
                for (std::size_t t = 0; t + 1 < r.terms.size(); ++t) {
                    rest += static_cast<Wide>(r.terms[t].second) * val_[r.terms[t].first];
                }
                const std::int64_t c = r.terms.back().second;
                if (rest % c != 0) {
                    fail(k, r.ref);
                    return true;
                }
                const Wide v = -rest / c;
                if (v < d.lo || v > d.hi) {
                    fail(k, r.ref);
                    return true;
                }
                val_[k] = static_cast<std::int64_t>(v);
                return descend(k);
            }
        }
        return true;
    }

    const qip::QipProblem& p_;
    std::vector<Domain> dom_;
    std::vector<Row> rows_;
    std::vector<Prod> prods_;
    std::vector<Mode> mode_;
    std::vector<std::size_t> def_;
    std::vector<std::vector<std::size_t>> rows_at_;
    std::vector<std::vector<std::size_t>> prods_at_;
    std::vector<std::size_t> ground_;
    std::vector<std::int64_t> val_;
    std::optional<std::size_t> infeasible_fixed_;
    const std::function<bool(std::span<const std::int64_t>)>* visit_ = nullptr;
    QipSearchReport* report_ = nullptr;
    std::size_t deepest_ = 0;
};

}  // namespace

AssignmentSet enumerate_fzn(const fzn::FzModel& model, std::uint64_t cap) {
    fzn::FzModel storage;
    FznSearch s(checked_model(model, storage), cap);
    AssignmentSet& out = s.result();
    s.run([&](std::span<const std::int64_t> v) {
        out.tuples.emplace(v.begin(), v.end());
        return true;
    });
    return std::move(out);
}

void for_each_qip_solution(const qip::QipProblem& problem,
                           const std::function<bool(std::span<const std::int64_t>)>& visit,
                           const QipSearchOptions& options, QipSearchReport* report) {
    QipSearch(problem, options).run(visit, report);
}

AssignmentSet enumerate_qip(const qip::QipProblem& problem, std::uint64_t cap) {
    AssignmentSet out;
    for (const auto& v : problem.vars) {
        out.vars.push_back(v.name);
    }
    QipSearchOptions opt;
    opt.cap = cap;
    for_each_qip_solution(
        problem,
        [&](std::span<const std::int64_t> v) {
            out.tuples.emplace(v.begin(), v.end());
            return true;
        },
        opt);
    return out;
}

std::optional<Optimum> solve_optimum(const qip::QipProblem& problem, std::uint64_t cap) {
    std::map<std::string, std::size_t> index = problem.index();
    std::vector<std::pair<std::size_t, std::int64_t>> obj;
    for (const auto& t : problem.objective.expr.terms) {
        obj.emplace_back(index.at(t.var), t.coef);
    }
    std::optional<Optimum> best;
    Wide best_value = 0;
    QipSearchOptions opt;
    opt.cap = cap;
    for_each_qip_solution(
        problem,
        [&](std::span<const std::int64_t> v) {
            Wide value = problem.objective.expr.constant;
            for (const auto& [k, c] : obj) {
                value += static_cast<Wide>(c) * v[k];
            }
            if (!best || value < best_value) {
                best_value = value;
                best = Optimum{0, std::vector<std::int64_t>(v.begin(), v.end())};
            }
            return true;
        },
        opt);
    if (best) {
        const Wide reported = problem.objective.negated ? -best_value : best_value;
        if (reported > INT64_MAX || reported < INT64_MIN) {
            throw Error(ErrorCode::Overflow, "objective", "objective value leaves the 64-bit range");
        }
        best->value = static_cast<std::int64_t>(reported);
    }
    return best;
}

std::optional<Optimum> fzn_optimum(const fzn::FzModel& input, std::uint64_t cap) {
    fzn::FzModel storage;
    const fzn::FzModel& model = checked_model(input, storage);
    const auto kind = model.solve.kind;
    std::optional<fzn::Operand> objective;
    std::size_t obj_pos = 0;
    if (kind != fzn::SolveItem::Kind::Satisfy) {
        objective = fzn::as_operand(*model.solve.objective);
        for (std::size_t k = 0; k < model.vars.size(); ++k) {
            if (objective->is_var() && model.vars[k].name == objective->var) {
                obj_pos = k;
            }
        }
    }
    FznSearch s(model, cap);
    std::optional<Optimum> best;
    s.run([&](std::span<const std::int64_t> v) {
        std::int64_t value = 0;
        if (objective) {
            value = objective->is_var() ? v[obj_pos] : objective->value;
        }
        const bool better = !best || (kind == fzn::SolveItem::Kind::Maximize ? value > best->value
                                                                             : value < best->value);
        if (better) {
            best = Optimum{value, std::vector<std::int64_t>(v.begin(), v.end())};
        }
        return true;
    });
    return best;
}

}  // namespace fzq::oracle
