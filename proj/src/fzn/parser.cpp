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

#include "fzq/fzn/parser.hpp"

#include "fzn/lexer.hpp"
#include "fzq/fzn/builtins.hpp"

namespace fzq::fzn {

namespace {

using detail::Tok;
using detail::Token;

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    FzModel run() {
        FzModel model;
        bool have_solve = false;
        while (!at(Tok::End)) {
            const Token& t = cur();
            if (t.kind != Tok::Ident) {
                fail_expected("an item");
            }
            if (have_solve) {
                throw Error(ErrorCode::SyntaxError, t.text, "item after solve item", t.loc);
            }
            if (t.text == "predicate") {
                throw Error(ErrorCode::UnsupportedItem, "predicate",
                            "predicate declarations are not supported", t.loc);
            } else if (t.text == "constraint") {
                model.constraints.push_back(parse_constraint());
            } else if (t.text == "solve") {
                model.solve = parse_solve();
                have_solve = true;
            } else if (t.text == "var") {
                model.vars.push_back(parse_var_decl());
            } else if (t.text == "array") {
                parse_array_decl(model);
            } else if (t.text == "output") {
                throw Error(ErrorCode::UnsupportedItem, "output", "output items are not supported", t.loc);
            } else {
                model.params.push_back(parse_param_decl());
            }
            expect(Tok::Semi);
        }
        if (!have_solve) {
            throw Error(ErrorCode::SyntaxError, "solve", "missing solve item", cur().loc);
        }
        return model;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    const Token& next_tok() const { return toks_[std::min(pos_ + 1, toks_.size() - 1)]; }
    bool at(Tok k) const { return cur().kind == k; }
    bool at_keyword(std::string_view kw) const { return at(Tok::Ident) && cur().text == kw; }

    const Token& take() {
        const Token& t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) {
            ++pos_;
        }
        return t;
    }

    [[noreturn]] void fail_expected(std::string_view what) const {
        const Token& t = cur();
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw Error(ErrorCode::SyntaxError, t.text, "expected " + std::string(what) + ", got " + got, t.loc);
    }

    const Token& expect(Tok k) {
        if (!at(k)) {
            fail_expected(detail::describe(k));
        }
        return take();
    }

    void expect_keyword(std::string_view kw) {
        if (!at_keyword(kw)) {
            fail_expected("'" + std::string(kw) + "'");
        }
        take();
    }

    bool accept(Tok k) {
        if (at(k)) {
            take();
            return true;
        }
        return false;
    }

    [[noreturn]] void unsupported_type(const Token& t) const {
        if (t.text == "float" || t.kind == Tok::Float) {
            throw Error(ErrorCode::UnsupportedItem, "float", "float variables and parameters are not supported",
                        t.loc);
        }
        if (t.text == "set") {
            throw Error(ErrorCode::UnsupportedItem, "set", "set variables are not supported", t.loc);
        }
        throw Error(ErrorCode::UnsupportedItem, t.text, "unsupported type '" + t.text + "'", t.loc);
    }

    // ---- annotations (parsed, then dropped) ----

    void skip_annotations() {
        while (accept(Tok::ColonColon)) {
            skip_ann_expr();
        }
    }

    void skip_ann_expr() {
        if (at(Tok::Ident)) {
            take();
            if (accept(Tok::LParen)) {
                if (!at(Tok::RParen)) {
                    do {
                        skip_ann_expr();
                    } while (accept(Tok::Comma));
                }
                expect(Tok::RParen);
            } else if (accept(Tok::LBracket)) {
                expect(Tok::Int);
                expect(Tok::RBracket);
            }
            return;
        }
        if (accept(Tok::LBracket) || accept(Tok::LBrace)) {
            const Tok close = toks_[pos_ - 1].kind == Tok::LBracket ? Tok::RBracket : Tok::RBrace;
            if (!at(close)) {
                do {
                    skip_ann_expr();
                } while (accept(Tok::Comma));
            }
            expect(close);
            return;
        }
        if (at(Tok::Int) || at(Tok::Float)) {
            take();
            if (accept(Tok::DotDot)) {
                if (!accept(Tok::Int) && !accept(Tok::Float)) {
                    fail_expected("a number");
                }
            }
            return;
        }
        if (accept(Tok::String)) {
            return;
        }
        fail_expected("an annotation");
    }

    // ---- expressions ----

    Expr parse_expr() {
        const Token& t = cur();
        switch (t.kind) {
            case Tok::Int: {
                take();
                if (accept(Tok::DotDot)) {
                    const Token& hi = expect(Tok::Int);
                    return Expr::set_lit(IntSet::from_range(t.value, hi.value), t.loc);
                }
                return Expr::int_lit(t.value, t.loc);
            }
            case Tok::Float:
                unsupported_type(t);
            case Tok::Ident: {
                take();
                if (t.text == "true" || t.text == "false") {
                    return Expr::bool_lit(t.text == "true", t.loc);
                }
                if (accept(Tok::LBracket)) {
                    Expr e = Expr::ident(t.text, t.loc);
                    e.kind = Expr::Kind::Access;
                    e.value = expect(Tok::Int).value;
                    expect(Tok::RBracket);
                    return e;
                }
                return Expr::ident(t.text, t.loc);
            }
            case Tok::LBracket: {
                take();
                std::vector<Expr> elems;
                if (!at(Tok::RBracket)) {
                    do {
                        elems.push_back(parse_expr());
                    } while (accept(Tok::Comma));
                }
                expect(Tok::RBracket);
                return Expr::array(std::move(elems), t.loc);
            }
            case Tok::LBrace: {
                take();
                std::vector<std::int64_t> values;
                if (!at(Tok::RBrace)) {
                    do {
                        values.push_back(expect(Tok::Int).value);
                    } while (accept(Tok::Comma));
                }
                expect(Tok::RBrace);
                return Expr::set_lit(IntSet::from_values(std::move(values)), t.loc);
            }
            default:
                fail_expected("an expression");
        }
    }

    // ---- items ----

    ConstraintItem parse_constraint() {
        expect_keyword("constraint");
        const Token& name = expect(Tok::Ident);
        if (!is_supported_builtin(name.text)) {
            throw Error(ErrorCode::UnsupportedItem, name.text, "unsupported predicate '" + name.text + "'",
                        name.loc);
        }
        ConstraintItem item;
        item.builtin = name.text;
        item.loc = name.loc;
        expect(Tok::LParen);
        if (!at(Tok::RParen)) {
            do {
                item.args.push_back(parse_expr());
            } while (accept(Tok::Comma));
        }
        expect(Tok::RParen);
        skip_annotations();
        return item;
    }

    SolveItem parse_solve() {
        SolveItem s;
        s.loc = cur().loc;
        expect_keyword("solve");
        skip_annotations();
        if (at_keyword("satisfy")) {
            take();
            s.kind = SolveItem::Kind::Satisfy;
        } else if (at_keyword("minimize") || at_keyword("maximize")) {
            s.kind = cur().text == "minimize" ? SolveItem::Kind::Minimize : SolveItem::Kind::Maximize;
            take();
            s.objective = parse_expr();
        } else {
            fail_expected("'satisfy', 'minimize' or 'maximize'");
        }
        return s;
    }

    // Variable type after `var`: bool, lo..hi, {v, ...}.
    void parse_var_type(VarKind& kind, Domain& domain, std::optional<IntSet>& set_domain) {
        const Token& t = cur();
        if (t.kind == Tok::Ident) {
            if (t.text == "bool") {
                take();
                kind = VarKind::Bool;
                domain = Domain::binary();
                return;
            }
            if (t.text == "int") {
                throw Error(ErrorCode::UnsupportedItem, "int", "unbounded integer variables are not supported",
                            t.loc);
            }
            unsupported_type(t);
        }
        if (t.kind == Tok::Int) {
            take();
            expect(Tok::DotDot);
            if (at(Tok::Float)) {
                unsupported_type(cur());
            }
            const Token& hi = expect(Tok::Int);
            kind = VarKind::Int;
            domain = {t.value, hi.value};
            return;
        }
        if (t.kind == Tok::Float) {
            unsupported_type(t);
        }
        if (t.kind == Tok::LBrace) {
            Expr s = parse_expr();
            kind = VarKind::Int;
            if (s.set.empty()) {
                domain = {1, 0};
            } else {
                domain = {s.set.ranges.front().lo, s.set.ranges.back().hi};
            }
            set_domain = std::move(s.set);
            return;
        }
        fail_expected("a variable type");
    }

    VarDecl parse_var_decl() {
        VarDecl v;
        v.loc = cur().loc;
        expect_keyword("var");
        parse_var_type(v.kind, v.domain, v.set_domain);
        expect(Tok::Colon);
        v.name = expect(Tok::Ident).text;
        while (accept(Tok::ColonColon)) {
            if (at_keyword("var_is_introduced") || at_keyword("is_defined_var")) {
                v.is_introduced = v.is_introduced || cur().text == "var_is_introduced";
            }
            skip_ann_expr();
        }
        if (accept(Tok::Equals)) {
            v.assigned = parse_expr();
        }
        return v;
    }

    ParamDecl parse_param_decl() {
        ParamDecl p;
        p.loc = cur().loc;
        const Token& t = cur();
        if (t.kind == Tok::Ident && t.text == "int") {
            take();
            p.type = ParamDecl::Type::Int;
        } else if (t.kind == Tok::Ident && t.text == "bool") {
            take();
            p.type = ParamDecl::Type::Bool;
        } else if (t.kind == Tok::Ident && t.text == "set") {
            take();
            expect_keyword("of");
            expect_keyword("int");
            p.type = ParamDecl::Type::IntSet;
        } else if (t.kind == Tok::Int) {
            // ranged parameter type `1..5: n = 3`
            take();
            expect(Tok::DotDot);
            expect(Tok::Int);
            p.type = ParamDecl::Type::Int;
        } else if (t.kind == Tok::Ident || t.kind == Tok::Float) {
            unsupported_type(t);
        } else {
            fail_expected("an item");
        }
        expect(Tok::Colon);
        p.name = expect(Tok::Ident).text;
        skip_annotations();
        expect(Tok::Equals);
        p.value = parse_expr();
        return p;
    }

    void parse_array_decl(FzModel& model) {
        const SourceLoc loc = cur().loc;
        expect_keyword("array");
        expect(Tok::LBracket);
        const Token& lo = expect(Tok::Int);
        expect(Tok::DotDot);
        const Token& hi = expect(Tok::Int);
        expect(Tok::RBracket);
        if (lo.value != 1) {
            throw Error(ErrorCode::SyntaxError, lo.text, "array index sets must start at 1", lo.loc);
        }
        expect_keyword("of");
        const bool is_var = at_keyword("var");
        if (is_var) {
            take();
        }
        VarKind elem_kind = VarKind::Int;
        ParamDecl::Type ptype = ParamDecl::Type::IntArray;
        const Token& t = cur();
        if (t.kind == Tok::Ident && t.text == "bool") {
            take();
            elem_kind = VarKind::Bool;
            ptype = ParamDecl::Type::BoolArray;
        } else if (t.kind == Tok::Ident && t.text == "int") {
            take();
        } else if (t.kind == Tok::Int && is_var) {
            take();
            expect(Tok::DotDot);
            expect(Tok::Int);
        } else if (t.kind == Tok::LBrace && is_var) {
            parse_expr();
        } else {
            unsupported_type(t);
        }
        expect(Tok::Colon);
        const Token& name = expect(Tok::Ident);
        skip_annotations();
        expect(Tok::Equals);
        Expr value = parse_expr();
        if (value.kind != Expr::Kind::Array) {
            throw Error(ErrorCode::SyntaxError, name.text, "array declaration needs an array literal", value.loc);
        }
        const auto declared = hi.value - lo.value + 1;
        if (static_cast<std::int64_t>(value.elems.size()) != std::max<std::int64_t>(declared, 0)) {
            throw Error(ErrorCode::ArityMismatch, name.text,
                        "array '" + name.text + "' declared with " + std::to_string(declared) + " elements but has " +
                            std::to_string(value.elems.size()),
                        value.loc);
        }
        if (is_var) {
            model.var_arrays.push_back({name.text, elem_kind, std::move(value.elems), loc});
        } else {
            model.params.push_back({name.text, ptype, std::move(value), loc});
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

FzModel parse_model(std::string_view source) { return Parser(detail::tokenize(source)).run(); }

}  // namespace fzq::fzn
