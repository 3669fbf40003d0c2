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

#include "fzq/qip/builder.hpp"

#include <algorithm>

#include "fzq/error.hpp"

namespace fzq::qip {

namespace {

// One-hot over a domain this wide is never what a desk-scale model wants.
constexpr std::size_t kMaxOneHotBits = std::size_t{1} << 20;

std::string value_role(std::int64_t v) {
    const std::string digits = std::to_string(v);
    return v < 0 ? "b_m" + digits.substr(1) : "b_" + digits;
}

}  // namespace

void QipBuilder::add_model_var(const std::string& name, Domain domain) {
    if (domain.empty()) {
        throw Error(ErrorCode::EmptyDomain, name, "variable '" + name + "' has an empty domain");
    }
    index_.emplace(name, problem_.vars.size());
    problem_.vars.push_back({name, domain, Origin::model()});
}

std::int64_t QipBuilder::open_instance(const std::string& builtin) {
    const std::int64_t k = ++instance_count_[builtin];
    open_instance_[builtin] = k;
    return k;
}

const QipVar& QipBuilder::fresh_var(const std::string& builtin, const std::string& role, Domain domain) {
    if (domain.empty()) {
        throw Error(ErrorCode::EmptyDomain, role,
                    "auxiliary variable '" + role + "' for " + builtin + " would have domain " + domain.str());
    }
    auto it = open_instance_.find(builtin);
    std::int64_t k = it == open_instance_.end() ? open_instance(builtin) : it->second;
    std::string name = "__" + builtin + "_" + std::to_string(k) + "_" + role;
    while (index_.contains(name)) {
        k = open_instance(builtin);
        name = "__" + builtin + "_" + std::to_string(k) + "_" + role;
    }
    index_.emplace(name, problem_.vars.size());
    problem_.vars.push_back({name, domain, Origin::aux(builtin, k, role)});
    return problem_.vars.back();
}

const QipVar& QipBuilder::var(const std::string& name) const { return problem_.vars[position(name)]; }

QipVar& QipBuilder::mutable_var(const std::string& name) { return problem_.vars[position(name)]; }

std::size_t QipBuilder::position(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
        throw Error(ErrorCode::UndeclaredIdentifier, name, "unknown QIP variable '" + name + "'");
    }
    return it->second;
}

void QipBuilder::restrict_domain(const std::string& name, Domain d) {
    QipVar& v = mutable_var(name);
    auto r = v.domain.intersect(d);
    if (!r) {
        throw Error(ErrorCode::EmptyDomain, name,
                    "domain of '" + name + "' " + v.domain.str() + " has no value in " + d.str());
    }
    v.domain = *r;
    auto git = groups_.find(name);
    if (git == groups_.end()) {
        return;
    }
    std::vector<std::int64_t> outside;
    for (const auto& b : problem_.onehot_groups[git->second.group].bits) {
        if (!r->contains(b.value)) {
            outside.push_back(b.value);
        }
    }
    if (!outside.empty()) {
        drop_bits(git->second, outside);
        rederive(git->second);
    }
}

void QipBuilder::add_equality(LinExpr e) {
    problem_.equalities.push_back(std::move(e));
    problem_.meta.equalities.push_back(provenance_);
}

void QipBuilder::add_inequality(LinExpr e) {
    problem_.inequalities.push_back(std::move(e));
    problem_.meta.inequalities.push_back(provenance_);
}

void QipBuilder::add_product(const std::string& result, const std::string& left, const std::string& right) {
    product_results_.insert(result);
    problem_.products.push_back({result, left, right});
    problem_.meta.products.push_back(provenance_);
}

void QipBuilder::mark_exclusive_result(const std::string& name) {
    auto& ex = problem_.meta.exclusive_results;
    if (std::find(ex.begin(), ex.end(), name) == ex.end()) {
        ex.push_back(name);
    }
}

OneHotGroup QipBuilder::onehot_get_or_create(const std::string& int_var, const std::vector<std::int64_t>& values,
                                             const std::string& builtin) {
    const Domain dom = var(int_var).domain;
    std::vector<std::int64_t> wanted = values;
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    for (auto v : wanted) {
        if (!dom.contains(v)) {
            throw Error(ErrorCode::ValueOutOfDomain, int_var,
                        "one-hot value " + std::to_string(v) + " outside domain " + dom.str() + " of '" + int_var +
                            "'");
        }
    }
    if (wanted.size() > kMaxOneHotBits) {
        throw Error(ErrorCode::Overflow, int_var, "one-hot encoding of '" + int_var + "' needs too many bits");
    }

    auto git = groups_.find(int_var);
    if (git == groups_.end()) {
        OneHotGroup g{int_var, {}};
        for (auto v : wanted) {
            g.bits.push_back({fresh_var(builtin, value_role(v), Domain::binary()).name, v});
        }
        GroupState gs;
        gs.group = problem_.onehot_groups.size();
        problem_.onehot_groups.push_back(std::move(g));
        gs.sum_row = problem_.equalities.size();
        add_equality({});
        gs.link_row = problem_.equalities.size();
        add_equality({});
        rederive(gs);
        groups_.emplace(int_var, gs);
        return problem_.onehot_groups[gs.group];
    }

    GroupState& gs = git->second;
    OneHotGroup& g = problem_.onehot_groups[gs.group];
    bool extended = false;
    for (auto v : wanted) {
        if (g.bit_for(v) != nullptr || (gs.allowed && !gs.allowed->contains(v))) {
            continue;
        }
        const std::string bit = fresh_var(builtin, value_role(v), Domain::binary()).name;
        // fresh_var may not invalidate g: onehot_groups is untouched by it.
        auto pos = std::lower_bound(g.bits.begin(), g.bits.end(), v,
                                    [](const OneHotBit& b, std::int64_t x) { return b.value < x; });
        g.bits.insert(pos, OneHotBit{bit, v});
        extended = true;
    }
    if (extended) {
        rederive(gs);
    }
    return g;
}

void QipBuilder::onehot_restrict(const std::string& int_var, const std::set<std::int64_t>& allowed) {
    auto git = groups_.find(int_var);
    if (git == groups_.end()) {
        throw Error(ErrorCode::ValueOutOfDomain, int_var, "no one-hot group for '" + int_var + "'");
    }
    GroupState& gs = git->second;
    std::set<std::int64_t> next;
    for (auto v : allowed) {
        if (!gs.allowed || gs.allowed->contains(v)) {
            next.insert(v);
        }
    }
    gs.allowed = next;
    std::vector<std::int64_t> outside;
    for (const auto& b : problem_.onehot_groups[gs.group].bits) {
        if (!next.contains(b.value)) {
            outside.push_back(b.value);
        }
    }
    if (!outside.empty()) {
        drop_bits(gs, outside);
        rederive(gs);
    }
}

std::optional<OneHotGroup> QipBuilder::onehot_group(const std::string& int_var) const {
    auto git = groups_.find(int_var);
    if (git == groups_.end()) {
        return std::nullopt;
    }
    return problem_.onehot_groups[git->second.group];
}

void QipBuilder::drop_bits(GroupState& gs, const std::vector<std::int64_t>& values) {
    OneHotGroup& g = problem_.onehot_groups[gs.group];
    for (auto v : values) {
        auto it = std::find_if(g.bits.begin(), g.bits.end(), [v](const OneHotBit& b) { return b.value == v; });
        if (it == g.bits.end()) {
            continue;
        }
        // The bit may already appear in other rows; pinning it to 0 keeps them sound.
        mutable_var(it->var).domain = Domain::singleton(0);
        g.bits.erase(it);
    }
    if (g.bits.empty()) {
        throw Error(ErrorCode::EmptyDomain, g.int_var, "no admissible value left for '" + g.int_var + "'");
    }
}

void QipBuilder::rederive(const GroupState& gs) {
    const OneHotGroup& g = problem_.onehot_groups[gs.group];
    LinExpr sum = LinExpr::of_constant(-1);
    LinExpr link = LinExpr::of_var(g.int_var);
    for (const auto& b : g.bits) {
        sum.add_term(b.var, 1);
        link.add_term(b.var, -b.value);
    }
    problem_.equalities[gs.sum_row] = std::move(sum);
    problem_.equalities[gs.link_row] = std::move(link);
}

}  // namespace fzq::qip
