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

#include "fzq/fzn/printer.hpp"

#include <sstream>

namespace fzq::fzn {

namespace {

void print_set(std::ostream& os, const IntSet& s) {
    if (s.ranges.size() == 1 && s.ranges.front().lo != s.ranges.front().hi) {
        os << s.ranges.front().lo << ".." << s.ranges.front().hi;
        return;
    }
    os << '{';
    bool first = true;
    for (const auto& r : s.ranges) {
        for (std::int64_t v = r.lo;; ++v) {
            os << (first ? "" : ", ") << v;
            first = false;
            if (v == r.hi) {
                break;
            }
        }
    }
    os << '}';
}

void print(std::ostream& os, const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::IntLit: os << e.value; break;
        case Expr::Kind::BoolLit: os << (e.value != 0 ? "true" : "false"); break;
        case Expr::Kind::Ident: os << e.name; break;
        case Expr::Kind::Access: os << e.name << '[' << e.value << ']'; break;
        case Expr::Kind::Set: print_set(os, e.set); break;
        case Expr::Kind::Array: {
            os << '[';
            for (std::size_t i = 0; i < e.elems.size(); ++i) {
                os << (i ? ", " : "");
                print(os, e.elems[i]);
            }
            os << ']';
            break;
        }
    }
}

}  // namespace

std::string print_expr(const Expr& e) {
    std::ostringstream os;
    print(os, e);
    return os.str();
}

std::string print_model(const FzModel& model) {
    std::ostringstream os;
    for (const auto& p : model.params) {
        switch (p.type) {
            case ParamDecl::Type::Int: os << "int: "; break;
            case ParamDecl::Type::Bool: os << "bool: "; break;
            case ParamDecl::Type::IntSet: os << "set of int: "; break;
            case ParamDecl::Type::IntArray:
            case ParamDecl::Type::BoolArray:
                os << "array [1.." << p.value.elems.size() << "] of "
                   << (p.type == ParamDecl::Type::BoolArray ? "bool" : "int")
                   << ": ";
                break;
        }
        os << p.name << " = ";
        print(os, p.value);
        os << ";\n";
    }
    for (const auto& v : model.vars) {
        os << "var ";
        if (v.set_domain) {
            print_set(os, *v.set_domain);
        } else if (v.kind == VarKind::Bool) {
            os << "bool";
        } else {
            os << v.domain.lo << ".." << v.domain.hi;
        }
        os << ": " << v.name;
        if (v.is_introduced) {
            os << " :: var_is_introduced";
        }
        if (v.assigned) {
            os << " = ";
            print(os, *v.assigned);
        } else if (v.kind == VarKind::Bool && v.domain.is_fixed()) {
            os << " = " << (v.domain.lo != 0 ? "true" : "false");
        }
        os << ";\n";
    }
    for (const auto& a : model.var_arrays) {
        os << "array [1.." << a.elems.size() << "] of var " << (a.elem_kind == VarKind::Bool ? "bool" : "int")
           << ": " << a.name << " = ";
        print(os, Expr::array(a.elems));
        os << ";\n";
    }
    for (const auto& c : model.constraints) {
        os << "constraint " << c.builtin << '(';
        for (std::size_t i = 0; i < c.args.size(); ++i) {
            os << (i ? ", " : "");
            print(os, c.args[i]);
        }
        os << ");\n";
    }
    os << "solve ";
    switch (model.solve.kind) {
        case SolveItem::Kind::Satisfy: os << "satisfy"; break;
        case SolveItem::Kind::Minimize: os << "minimize "; break;
        case SolveItem::Kind::Maximize: os << "maximize "; break;
    }
    if (model.solve.objective) {
        print(os, *model.solve.objective);
    }
    os << ";\n";
    return os.str();
}

}  // namespace fzq::fzn
