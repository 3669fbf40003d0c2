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

#include "fzq/oracle/equivalence.hpp"

#include <sstream>

#include "fzq/error.hpp"
#include "fzq/fzn/typecheck.hpp"
#include "fzq/oracle/semantics.hpp"

namespace fzq::oracle {

namespace {

std::string tuple_str(const std::vector<std::string>& vars, const std::vector<std::int64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        out += (i == 0 ? "" : ", ") + vars[i] + "=" + std::to_string(values[i]);
    }
    return out;
}

std::string row_str(const qip::QipProblem& p, const RowRef& r) {
    switch (r.kind) {
        case RowRef::Kind::Equality:
            return r.index < p.meta.equalities.size() ? p.meta.equalities[r.index].str() : "equality";
        case RowRef::Kind::Inequality:
            return r.index < p.meta.inequalities.size() ? p.meta.inequalities[r.index].str() : "inequality";
        case RowRef::Kind::Product:
            return r.index < p.meta.products.size() ? p.meta.products[r.index].str() : "product";
        case RowRef::Kind::Domain:
            return "domain of " + p.vars[r.index].name;
    }
    return "?";
}

std::string row_kind(RowRef::Kind k) {
    switch (k) {
        case RowRef::Kind::Equality: return "equality";
        case RowRef::Kind::Inequality: return "inequality";
        case RowRef::Kind::Product: return "product";
        case RowRef::Kind::Domain: return "domain";
    }
    return "?";
}

// First model constraint the witness violates, as builtin#k.
std::string violated_constraint(const fzn::FzModel& model, const std::vector<std::int64_t>& witness) {
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < model.vars.size(); ++k) {
        index.emplace(model.vars[k].name, k);
    }
    for (std::size_t i = 0; i < model.constraints.size(); ++i) {
        const BoundConstraint bc(model.constraints[i], index);
        if (!bc.eval(witness)) {
            return bc.builtin() + "#" + std::to_string(i);
        }
    }
    for (std::size_t k = 0; k < model.vars.size(); ++k) {
        if (!model.vars[k].domain.contains(witness[k])) {
            return "domain of " + model.vars[k].name;
        }
    }
    return "<none>";
}

}  // namespace

EquivalenceResult check_equivalence(const fzn::FzModel& input, const qip::QipProblem& problem, std::uint64_t cap) {
    const fzn::FzModel model = input.checked ? input : fzn::typecheck(input);
    const AssignmentSet fzn_set = enumerate_fzn(model, cap);

    const auto qindex = problem.index();
    std::vector<std::size_t> proj;
    for (const auto& v : model.vars) {
        auto it = qindex.find(v.name);
        if (it == qindex.end()) {
            throw Error(ErrorCode::UndeclaredIdentifier, v.name, "model variable '" + v.name + "' is missing from the QIP");
        }
        proj.push_back(it->second);
    }

    EquivalenceResult result;
    result.fzn_solutions = fzn_set.tuples.size();
    std::set<std::vector<std::int64_t>> projected;
    QipSearchOptions opt;
    opt.cap = cap;
    for_each_qip_solution(
        problem,
        [&](std::span<const std::int64_t> v) {
            std::vector<std::int64_t> t;
            t.reserve(proj.size());
            for (std::size_t k : proj) {
                t.push_back(v[k]);
            }
            if (!fzn_set.tuples.contains(t)) {
                Counterexample ce;
                ce.vars = fzn_set.vars;
                ce.direction = Counterexample::Direction::Extra;
                ce.provenance = violated_constraint(model, t);
                ce.detail = "QIP solution violates " + ce.provenance;
                ce.witness = std::move(t);
                result.counterexample = std::move(ce);
                return false;
            }
            projected.insert(std::move(t));
            return true;
        },
        opt);
    result.qip_projections = projected.size();
    if (result.counterexample) {
        return result;
    }

    for (const auto& t : fzn_set.tuples) {
        if (projected.contains(t)) {
            continue;
        }
        QipSearchOptions fixed;
        fixed.cap = cap;
        for (std::size_t i = 0; i < proj.size(); ++i) {
            fixed.fixed[model.vars[i].name] = t[i];
        }
        QipSearchReport report;
        for_each_qip_solution(problem, [](std::span<const std::int64_t>) { return false; }, fixed, &report);
        Counterexample ce;
        ce.vars = fzn_set.vars;
        ce.witness = t;
        ce.direction = Counterexample::Direction::Missing;
        if (report.deepest_failure) {
            ce.provenance = row_str(problem, *report.deepest_failure);
            ce.detail = "no QIP extension; deepest failing row is " + row_kind(report.deepest_failure->kind) + " " +
                        std::to_string(report.deepest_failure->index) + " from " + ce.provenance;
        } else {
            ce.provenance = "<none>";
            ce.detail = "no QIP extension";
        }
        result.counterexample = std::move(ce);
        break;
    }
    return result;
}

EquivalenceResult check_unsat(const fzn::FzModel& input, std::uint64_t cap) {
    const fzn::FzModel model = input.checked ? input : fzn::typecheck(input);
    const AssignmentSet fzn_set = enumerate_fzn(model, cap);
    EquivalenceResult result;
    result.fzn_solutions = fzn_set.tuples.size();
    if (!fzn_set.tuples.empty()) {
        Counterexample ce;
        ce.vars = fzn_set.vars;
        ce.witness = *fzn_set.tuples.begin();
        ce.direction = Counterexample::Direction::Missing;
        ce.provenance = "<compile>";
        ce.detail = "compilation reported UNSAT but the model has solutions";
        result.counterexample = std::move(ce);
    }
    return result;
}

std::string format_report(const EquivalenceResult& r) {
    std::ostringstream os;
    if (r.equal()) {
        os << "Equal\n";
        os << "solutions: " << r.fzn_solutions << "\n";
        return os.str();
    }
    const Counterexample& ce = *r.counterexample;
    os << "Counterexample\n";
    os << "direction: " << (ce.direction == Counterexample::Direction::Missing ? "missing" : "extra") << "\n";
    os << "witness: " << tuple_str(ce.vars, ce.witness) << "\n";
    os << "provenance: " << ce.provenance << "\n";
    os << "detail: " << ce.detail << "\n";
    return os.str();
}

}  // namespace fzq::oracle
