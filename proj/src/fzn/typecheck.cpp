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

#include "fzq/fzn/typecheck.hpp"

#include <map>

#include "fzq/fzn/builtins.hpp"
#include "fzq/fzn/parser.hpp"

namespace fzq::fzn {

namespace {

class Checker {
public:
    explicit Checker(FzModel& model) : m_(model) {}

    void run() {
        declare_all();
        std::vector<ConstraintItem> lowered;
        lower_var_decls(lowered);
        for (auto& arr : m_.var_arrays) {
            for (auto& e : arr.elems) {
                e = resolve_scalar(e, arr.elem_kind == VarKind::Bool ? ParamKind::VarBool : ParamKind::VarInt);
            }
        }
        for (auto& c : m_.constraints) {
            check_constraint(c);
        }
        for (auto& c : lowered) {
            check_constraint(c);
        }
        m_.constraints.insert(m_.constraints.begin(), lowered.begin(), lowered.end());
        if (m_.solve.objective) {
            m_.solve.objective = resolve_scalar(*m_.solve.objective, ParamKind::VarInt);
        }
        m_.checked = true;
    }

private:
    enum class Sym { Param, Var, VarArray };

    void declare(const std::string& name, Sym sym, std::size_t index, SourceLoc loc) {
        if (!symbols_.emplace(name, std::pair{sym, index}).second) {
            throw Error(ErrorCode::SyntaxError, name, "'" + name + "' is declared more than once", loc);
        }
    }

    void declare_all() {
        for (std::size_t i = 0; i < m_.params.size(); ++i) {
            declare(m_.params[i].name, Sym::Param, i, m_.params[i].loc);
        }
        for (std::size_t i = 0; i < m_.vars.size(); ++i) {
            const auto& v = m_.vars[i];
            declare(v.name, Sym::Var, i, v.loc);
            if (v.domain.empty()) {
                throw Error(ErrorCode::EmptyDomain, v.name, "variable '" + v.name + "' has an empty domain", v.loc);
            }
        }
        for (std::size_t i = 0; i < m_.var_arrays.size(); ++i) {
            declare(m_.var_arrays[i].name, Sym::VarArray, i, m_.var_arrays[i].loc);
        }
    }

    // `var T: x = e` and `var {..}: x` become domain narrowing or constraints.
    void lower_var_decls(std::vector<ConstraintItem>& out) {
        for (auto& v : m_.vars) {
            if (v.set_domain) {
                ConstraintItem c;
                c.builtin = "set_in";
                c.loc = v.loc;
                c.args = {Expr::ident(v.name, v.loc), Expr::set_lit(*v.set_domain, v.loc)};
                out.push_back(std::move(c));
                v.set_domain.reset();
            }
            if (!v.assigned) {
                continue;
            }
            const ParamKind pk = v.kind == VarKind::Bool ? ParamKind::VarBool : ParamKind::VarInt;
            Expr value = resolve_scalar(*v.assigned, pk);
            v.assigned.reset();
            if (value.is_literal()) {
                auto d = v.domain.intersect(Domain::singleton(value.value));
                if (!d) {
                    throw Error(ErrorCode::EmptyDomain, v.name,
                                "assigned value lies outside the domain of '" + v.name + "'", v.loc);
                }
                v.domain = *d;
            } else {
                ConstraintItem c;
                c.builtin = v.kind == VarKind::Bool ? "bool_eq" : "int_eq";
                c.loc = v.loc;
                c.args = {Expr::ident(v.name, v.loc), std::move(value)};
                out.push_back(std::move(c));
            }
        }
    }

    const std::pair<Sym, std::size_t>& lookup(const std::string& name, SourceLoc loc) const {
        auto it = symbols_.find(name);
        if (it == symbols_.end()) {
            throw Error(ErrorCode::UndeclaredIdentifier, name, "undeclared identifier '" + name + "'", loc);
        }
        return it->second;
    }

    [[noreturn]] static void kind_mismatch(const Expr& e, std::string_view expected) {
        std::string subject = e.name.empty() ? std::to_string(e.value) : e.name;
        throw Error(ErrorCode::KindMismatch, subject, "expected " + std::string(expected), e.loc);
    }

    static std::string_view describe(ParamKind k) {
        switch (k) {
            case ParamKind::VarInt: return "var int";
            case ParamKind::VarBool: return "var bool";
            case ParamKind::ParInt: return "int";
            case ParamKind::ArrayParInt: return "array of int";
            case ParamKind::ArrayParBool: return "array of bool";
            case ParamKind::ArrayVarInt: return "array of var int";
            case ParamKind::ArrayVarBool: return "array of var bool";
            case ParamKind::ParSet: return "set of int";
        }
        return "?";
    }

    // Element of an array identifier, 1-based.
    Expr access(const Expr& e) {
        const auto& [sym, idx] = lookup(e.name, e.loc);
        const std::vector<Expr>* elems = nullptr;
        if (sym == Sym::VarArray) {
            elems = &m_.var_arrays[idx].elems;
        } else if (sym == Sym::Param && m_.params[idx].value.kind == Expr::Kind::Array) {
            elems = &m_.params[idx].value.elems;
        } else {
            kind_mismatch(e, "an array");
        }
        if (e.value < 1 || e.value > static_cast<std::int64_t>(elems->size())) {
            throw Error(ErrorCode::ArityMismatch, e.name,
                        "index " + std::to_string(e.value) + " out of bounds for array '" + e.name + "' of length " +
                            std::to_string(elems->size()),
                        e.loc);
        }
        Expr out = (*elems)[static_cast<std::size_t>(e.value - 1)];
        out.loc = e.loc;
        return out;
    }

    Expr resolve_scalar(const Expr& e, ParamKind kind) {
        const bool want_bool = kind == ParamKind::VarBool;
        const bool want_var = kind == ParamKind::VarInt || kind == ParamKind::VarBool;
        switch (e.kind) {
            case Expr::Kind::IntLit:
                if (want_bool) {
                    kind_mismatch(e, describe(kind));
                }
                return e;
            case Expr::Kind::BoolLit:
                return e;
            case Expr::Kind::Access:
                return resolve_scalar(access(e), kind);
            case Expr::Kind::Ident: {
                const auto& [sym, idx] = lookup(e.name, e.loc);
                if (sym == Sym::Param) {
                    const auto& p = m_.params[idx];
                    if (p.type == ParamDecl::Type::Int && want_bool) {
                        kind_mismatch(e, describe(kind));
                    }
                    if (p.type != ParamDecl::Type::Int && p.type != ParamDecl::Type::Bool) {
                        kind_mismatch(e, describe(kind));
                    }
                    Expr out = resolve_scalar(p.value, kind);
                    out.loc = e.loc;
                    return out;
                }
                if (sym == Sym::Var && want_var) {
                    const bool is_bool = m_.vars[idx].kind == VarKind::Bool;
                    if (is_bool != want_bool) {
                        kind_mismatch(e, describe(kind));
                    }
                    return e;
                }
                kind_mismatch(e, describe(kind));
            }
            default:
                kind_mismatch(e, describe(kind));
        }
    }

    Expr resolve_array(const Expr& e, ParamKind kind) {
        const ParamKind elem = [&] {
            switch (kind) {
                case ParamKind::ArrayParInt: return ParamKind::ParInt;
                case ParamKind::ArrayParBool: return ParamKind::VarBool;
                case ParamKind::ArrayVarInt: return ParamKind::VarInt;
                default: return ParamKind::VarBool;
            }
        }();
        const std::vector<Expr>* elems = nullptr;
        if (e.kind == Expr::Kind::Array) {
            elems = &e.elems;
        } else if (e.kind == Expr::Kind::Ident) {
            const auto& [sym, idx] = lookup(e.name, e.loc);
            if (sym == Sym::VarArray) {
                elems = &m_.var_arrays[idx].elems;
            } else if (sym == Sym::Param && m_.params[idx].value.kind == Expr::Kind::Array) {
                elems = &m_.params[idx].value.elems;
            }
        }
        if (elems == nullptr) {
            kind_mismatch(e, describe(kind));
        }
        std::vector<Expr> out;
        out.reserve(elems->size());
        for (const auto& x : *elems) {
            Expr r = resolve_scalar(x, elem);
            const bool par_only = kind == ParamKind::ArrayParInt || kind == ParamKind::ArrayParBool;
            if (par_only && !r.is_literal()) {
                kind_mismatch(x, describe(kind));
            }
            if (kind == ParamKind::ArrayParBool && r.kind != Expr::Kind::BoolLit) {
                kind_mismatch(x, describe(kind));
            }
            out.push_back(std::move(r));
        }
        return Expr::array(std::move(out), e.loc);
    }

    Expr resolve_set(const Expr& e) {
        if (e.kind == Expr::Kind::Set) {
            return e;
        }
        if (e.kind == Expr::Kind::Ident) {
            const auto& [sym, idx] = lookup(e.name, e.loc);
            if (sym == Sym::Param && m_.params[idx].type == ParamDecl::Type::IntSet) {
                Expr out = resolve_set(m_.params[idx].value);
                out.loc = e.loc;
                return out;
            }
        }
        kind_mismatch(e, "set of int");
    }

    Expr resolve(const Expr& e, ParamKind kind) {
        switch (kind) {
            case ParamKind::VarInt:
            case ParamKind::VarBool:
                return resolve_scalar(e, kind);
            case ParamKind::ParInt: {
                Expr r = resolve_scalar(e, ParamKind::VarInt);
                if (!r.is_literal()) {
                    kind_mismatch(e, describe(kind));
                }
                return r;
            }
            case ParamKind::ParSet:
                return resolve_set(e);
            default:
                return resolve_array(e, kind);
        }
    }

    void check_constraint(ConstraintItem& c) {
        const Signature* sig = nullptr;
        for (const Signature* s : find_signatures(c.builtin)) {
            if (s->params.size() == c.args.size()) {
                sig = s;
            }
        }
        if (sig == nullptr) {
            throw Error(ErrorCode::ArityMismatch, c.builtin,
                        "wrong number of arguments (" + std::to_string(c.args.size()) + ") for '" + c.builtin + "'",
                        c.loc);
        }
        for (std::size_t i = 0; i < c.args.size(); ++i) {
            c.args[i] = resolve(c.args[i], sig->params[i]);
        }
    }

    FzModel& m_;
    std::map<std::string, std::pair<Sym, std::size_t>> symbols_;
};

}  // namespace

FzModel typecheck(FzModel model) {
    Checker(model).run();
    return model;
}

FzModel load_model(std::string_view source) { return typecheck(parse_model(source)); }

}  // namespace fzq::fzn
