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

#include "fzq/fuzz/generator.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fzq/error.hpp"
#include "fzq/fzn/builtins.hpp"
#include "fzq/oracle/semantics.hpp"

namespace fzq::fuzz {

namespace {

using fzn::Expr;
using fzn::ParamKind;
using fzn::VarKind;

// Plain modulo draw: std::uniform_int_distribution differs between standard
// libraries, this does not.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
}

bool chance(std::mt19937_64& rng, int percent) { return draw(rng, 0, 99) < percent; }

class InstanceBuilder {
public:
    InstanceBuilder(std::mt19937_64& rng, const FuzzOptions& o) : rng_(rng), o_(o) {}

    Domain int_domain() {
        std::int64_t a = draw(rng_, -o_.bound, o_.bound);
        std::int64_t b = draw(rng_, -o_.bound, o_.bound);
        return {std::min(a, b), std::max(a, b)};
    }

    Domain nonzero_domain() {
        const std::int64_t a = draw(rng_, 1, o_.bound);
        const std::int64_t b = draw(rng_, 1, o_.bound);
        Domain d{std::min(a, b), std::max(a, b)};
        return chance(rng_, 50) ? d : Domain{-d.hi, -d.lo};
    }

    Expr var(VarKind kind, Domain d) {
        const std::string name = "x" + std::to_string(m_.vars.size() + 1);
        fzn::VarDecl v;
        v.name = name;
        v.kind = kind;
        v.domain = d;
        m_.vars.push_back(std::move(v));
        return Expr::ident(name);
    }

    Expr reuse_or(VarKind kind, Domain d) {
        std::vector<std::size_t> same;
        for (std::size_t i = 0; i < m_.vars.size(); ++i) {
            if (m_.vars[i].kind == kind && !reserved_.contains(m_.vars[i].name)) {
                same.push_back(i);
            }
        }
        if (!same.empty() && chance(rng_, 12)) {
            return Expr::ident(m_.vars[same[static_cast<std::size_t>(draw(rng_, 0, std::ssize(same) - 1))]].name);
        }
        return var(kind, d);
    }

    Expr int_arg() {
        if (chance(rng_, 8)) {
            return Expr::int_lit(draw(rng_, -o_.bound, o_.bound));
        }
        return reuse_or(VarKind::Int, int_domain());
    }

    Expr bool_arg() {
        if (chance(rng_, 8)) {
            return Expr::bool_lit(chance(rng_, 50));
        }
        return reuse_or(VarKind::Bool, Domain::binary());
    }

    Expr reif_arg() {
        Expr r = var(VarKind::Bool, Domain::binary());
        reserved_.insert(r.name);
        return r;
    }

    std::size_t length() { return static_cast<std::size_t>(draw(rng_, 1, static_cast<std::int64_t>(o_.max_array))); }

    Expr coefs(std::size_t n) {
        std::vector<Expr> out;
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t c = draw(rng_, -3, 3);
            out.push_back(Expr::int_lit(c == 0 ? 1 : c));
        }
        return Expr::array(std::move(out));
    }

    Expr int_values(std::size_t n) {
        std::vector<Expr> out;
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(Expr::int_lit(draw(rng_, -o_.bound, o_.bound)));
        }
        return Expr::array(std::move(out));
    }

    Expr bool_values(std::size_t n) {
        std::vector<Expr> out;
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(Expr::bool_lit(chance(rng_, 50)));
        }
        return Expr::array(std::move(out));
    }

    Expr int_vars(std::size_t n) {
        std::vector<Expr> out;
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(int_arg());
        }
        return Expr::array(std::move(out));
    }

    Expr bool_vars(std::size_t n) {
        std::vector<Expr> out;
        for (std::size_t i = 0; i < n; ++i) {
            out.push_back(bool_arg());
        }
        return Expr::array(std::move(out));
    }

    Expr set() {
        std::vector<std::int64_t> values;
        for (std::int64_t v = -o_.bound; v <= o_.bound; ++v) {
            if (chance(rng_, 40)) {
                values.push_back(v);
            }
        }
        if (values.empty()) {
            values.push_back(draw(rng_, -o_.bound, o_.bound));
        }
        return Expr::set_lit(fzn::IntSet::from_values(std::move(values)));
    }

    // Index domain around the valid range [1, n] so most instances are feasible.
    Expr index(std::size_t n) {
        const auto top = static_cast<std::int64_t>(n) + 1;
        const std::int64_t a = draw(rng_, 0, top);
        const std::int64_t b = draw(rng_, 0, top);
        return var(VarKind::Int, {std::min(a, b), std::max(a, b)});
    }

    fzn::FzModel build(std::string_view builtin) {
        const auto sigs = fzn::find_signatures(builtin);
        if (sigs.empty()) {
            throw Error(ErrorCode::UnsupportedItem, std::string(builtin),
                        "no generator for unsupported builtin '" + std::string(builtin) + "'");
        }
        const fzn::Signature& sig = *sigs[static_cast<std::size_t>(draw(rng_, 0, std::ssize(sigs) - 1))];
        fzn::ConstraintItem c;
        c.builtin = std::string(builtin);
        const bool reified = fzn::is_reified(builtin);
        const std::size_t n = length();

        if (builtin == "array_int_element" || builtin == "array_bool_element" ||
            builtin == "array_var_int_element" || builtin == "array_var_bool_element") {
            c.args.push_back(index(n));
            if (builtin == "array_int_element") {
                c.args.push_back(int_values(n));
            } else if (builtin == "array_bool_element") {
                c.args.push_back(bool_values(n));
            } else if (builtin == "array_var_int_element") {
                c.args.push_back(int_vars(n));
            } else {
                c.args.push_back(bool_vars(n));
            }
            c.args.push_back(builtin.starts_with("array_bool") || builtin.starts_with("array_var_bool") ? bool_arg()
                                                                                                      : int_arg());
        } else if (builtin == "int_div" || builtin == "int_mod") {
            c.args.push_back(o_.nonzero_numerator ? var(VarKind::Int, nonzero_domain()) : int_arg());
            c.args.push_back(int_arg());
            c.args.push_back(int_arg());
        } else if (builtin == "int_pow") {
            c.args.push_back(int_arg());
            c.args.push_back(Expr::int_lit(draw(rng_, 0, 5)));
            c.args.push_back(int_arg());
        } else {
            for (std::size_t i = 0; i < sig.params.size(); ++i) {
                const bool last = i + 1 == sig.params.size();
                switch (sig.params[i]) {
                    case ParamKind::VarInt: c.args.push_back(int_arg()); break;
                    case ParamKind::VarBool: c.args.push_back(reified && last ? reif_arg() : bool_arg()); break;
                    case ParamKind::ParInt: c.args.push_back(Expr::int_lit(draw(rng_, -o_.bound, o_.bound))); break;
                    case ParamKind::ArrayParInt: c.args.push_back(coefs(n)); break;
                    case ParamKind::ArrayParBool: c.args.push_back(bool_values(n)); break;
                    case ParamKind::ArrayVarInt: c.args.push_back(int_vars(n)); break;
                    case ParamKind::ArrayVarBool: c.args.push_back(bool_vars(builtin == "bool_clause" ? length() : n));
                        break;
                    case ParamKind::ParSet: c.args.push_back(set()); break;
                }
            }
        }
        m_.constraints.push_back(std::move(c));
        // Declaration order decides which product forms apply; vary it.
        if (chance(rng_, 50)) {
            for (std::size_t i = m_.vars.size(); i > 1; --i) {
                std::swap(m_.vars[i - 1], m_.vars[static_cast<std::size_t>(draw(rng_, 0, std::ssize(m_.vars) - 1))]);
            }
        }
        return std::move(m_);
    }

private:
    std::mt19937_64& rng_;
    const FuzzOptions& o_;
    fzn::FzModel m_;
    std::set<std::string> reserved_;
};

}  // namespace

fzn::FzModel random_instance(std::string_view builtin, std::mt19937_64& rng, const FuzzOptions& options) {
    return InstanceBuilder(rng, options).build(builtin);
}

std::vector<fzn::FzModel> random_instances(std::string_view builtin, std::size_t count, std::uint64_t seed,
                                           const FuzzOptions& options) {
    std::mt19937_64 rng(seed);
    std::vector<fzn::FzModel> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_instance(builtin, rng, options));
    }
    return out;
}

fzn::FzModel random_optimization_model(std::mt19937_64& rng) {
    static const std::vector<std::string> kinds = {"int_le", "int_lt",  "int_ne",  "int_eq",     "int_plus",
                                                   "int_times", "int_max", "int_min", "int_abs", "int_lin_le",
                                                   "int_lin_eq", "int_lin_ne", "int_div", "int_mod"};
    fzn::FzModel m;
    const auto nvars = static_cast<std::size_t>(draw(rng, 2, 3));
    for (std::size_t i = 0; i < nvars; ++i) {
        fzn::VarDecl v;
        v.name = "x" + std::to_string(i + 1);
        const std::int64_t a = draw(rng, -4, 4);
        const std::int64_t b = draw(rng, -4, 4);
        v.domain = {std::min(a, b), std::max(a, b)};
        m.vars.push_back(std::move(v));
    }
    // Three models in four keep only constraints a hidden assignment satisfies.
    oracle::Assignment witness;
    const bool planted = draw(rng, 0, 3) != 0;
    for (const auto& v : m.vars) {
        witness[v.name] = draw(rng, v.domain.lo, v.domain.hi);
    }
    auto pick = [&] { return Expr::ident(m.vars[static_cast<std::size_t>(draw(rng, 0, std::ssize(m.vars) - 1))].name); };
    auto random_constraint = [&] {
        fzn::ConstraintItem c;
        c.builtin = kinds[static_cast<std::size_t>(draw(rng, 0, std::ssize(kinds) - 1))];
        const auto sig = fzn::find_signatures(c.builtin).front();
        if (c.builtin.starts_with("int_lin")) {
            std::vector<Expr> coefs, xs;
            for (const auto& v : m.vars) {
                coefs.push_back(Expr::int_lit(draw(rng, 0, 1) == 0 ? -1 : draw(rng, 1, 2)));
                xs.push_back(Expr::ident(v.name));
            }
            c.args = {Expr::array(std::move(coefs)), Expr::array(std::move(xs)), Expr::int_lit(draw(rng, -3, 3))};
        } else {
            for (std::size_t i = 0; i < sig->params.size(); ++i) {
                c.args.push_back(pick());
            }
        }
        return c;
    };
    const auto ncons = draw(rng, 2, 3);
    for (std::int64_t k = 0; k < ncons; ++k) {
        fzn::ConstraintItem c = random_constraint();
        for (int attempt = 0; planted && attempt < 100 && !oracle::eval_builtin(c.builtin, c.args, witness); ++attempt) {
            c = random_constraint();
        }
        m.constraints.push_back(std::move(c));
    }
    m.solve.kind = draw(rng, 0, 1) == 0 ? fzn::SolveItem::Kind::Minimize : fzn::SolveItem::Kind::Maximize;
    m.solve.objective = pick();
    return m;
}

}  // namespace fzq::fuzz
