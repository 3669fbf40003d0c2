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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fzq/error.hpp"
#include "fzq/fuzz/generator.hpp"
#include "fzq/fzn/builtins.hpp"
#include "fzq/fzn/parser.hpp"
#include "fzq/fzn/printer.hpp"
#include "fzq/fzn/typecheck.hpp"

namespace fzq {
namespace {

using fzn::load_model;
using fzn::parse_model;

ErrorCode code_of(const std::function<void()>& f, std::string* subject = nullptr) {
    try {
        f();
    } catch (const Error& e) {
        if (subject != nullptr) {
            *subject = e.subject();
        }
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::SyntaxError;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(Parser, MinimalModel) {
    const auto m = parse_model("var 1..3: x; constraint int_le(x, 2); solve satisfy;");
    ASSERT_EQ(m.vars.size(), 1u);
    EXPECT_EQ(m.vars[0].name, "x");
    EXPECT_EQ(m.vars[0].domain, (Domain{1, 3}));
    ASSERT_EQ(m.constraints.size(), 1u);
    EXPECT_EQ(m.constraints[0].builtin, "int_le");
    EXPECT_EQ(m.solve.kind, fzn::SolveItem::Kind::Satisfy);
}

TEST(Parser, BoolVarIsBinary) {
    const auto m = parse_model("var bool: b; solve satisfy;");
    ASSERT_EQ(m.vars.size(), 1u);
    EXPECT_EQ(m.vars[0].kind, fzn::VarKind::Bool);
    EXPECT_EQ(m.vars[0].domain, Domain::binary());
}

TEST(Parser, FloatRejected) {
    std::string subject;
    EXPECT_EQ(code_of([] { parse_model("var float: f; solve satisfy;"); }, &subject), ErrorCode::UnsupportedItem);
    EXPECT_EQ(subject, "float");
}

TEST(Parser, UnknownPredicateRejected) {
    std::string subject;
    EXPECT_EQ(code_of([] { parse_model("var 1..2: x; constraint all_different_int([x]); solve satisfy;"); },
                      &subject),
              ErrorCode::UnsupportedItem);
    EXPECT_EQ(subject, "all_different_int");
}

TEST(Parser, SetVarRejected) {
    EXPECT_EQ(code_of([] { parse_model("var set of 1..3: s; solve satisfy;"); }), ErrorCode::UnsupportedItem);
}

TEST(Parser, CommentsAndAnnotationsIgnored) {
    const auto a = parse_model(
        "% header\nvar 1..3: x :: output_var; % trailing\n"
        "constraint int_le(x, 2) :: domain;\nsolve :: int_search([x], input_order, indomain_min, complete) satisfy;");
    const auto b = parse_model("var 1..3: x; constraint int_le(x, 2); solve satisfy;");
    EXPECT_EQ(a, b);
}

TEST(Parser, SyntaxErrorHasLocation) {
    try {
        parse_model("var 1..3: x;\nconstraint int_le(x 2);\nsolve satisfy;");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
        EXPECT_EQ(e.loc().line, 2u);
        EXPECT_GT(e.loc().column, 0u);
        EXPECT_EQ(e.diagnostic("m.fzn").rfind("m.fzn:2:", 0), 0u);
    }
}

TEST(Typecheck, UndeclaredIdentifier) {
    std::string subject;
    EXPECT_EQ(code_of([] { load_model("var 1..3: x; constraint int_eq(x, y); solve satisfy;"); }, &subject),
              ErrorCode::UndeclaredIdentifier);
    EXPECT_EQ(subject, "y");
}

TEST(Typecheck, EmptyDomain) {
    std::string subject;
    EXPECT_EQ(code_of([] { load_model("var 5..2: x; solve satisfy;"); }, &subject), ErrorCode::EmptyDomain);
    EXPECT_EQ(subject, "x");
}

TEST(Typecheck, BoolLiteralFoldsToOne) {
    const auto m = load_model("var 0..3: x; constraint int_eq(x, true); solve satisfy;");
    const auto op = fzn::as_operand(m.constraints[0].args[1]);
    EXPECT_FALSE(op.is_var());
    EXPECT_EQ(op.value, 1);
}

TEST(Typecheck, ArityAndKind) {
    EXPECT_EQ(code_of([] { load_model("var 1..3: x; constraint int_le(x); solve satisfy;"); }),
              ErrorCode::ArityMismatch);
    EXPECT_EQ(code_of([] { load_model("var 1..3: x; var bool: b; constraint int_le(x, b); solve satisfy;"); }),
              ErrorCode::KindMismatch);
    EXPECT_EQ(code_of([] {
                  load_model("var 1..3: x; array [1..2] of var int: a = [x, x]; constraint int_le(a[3], 1); solve "
                             "satisfy;");
              }),
              ErrorCode::ArityMismatch);
}

TEST(Typecheck, ParametersAndAliasesResolved) {
    const auto m = load_model(
        "int: k = 2; array [1..2] of int: w = [1, -1];\n"
        "var 0..3: x; var 0..3: y; array [1..2] of var int: xs = [x, y];\n"
        "constraint int_lin_le(w, xs, k); constraint int_le(xs[2], k); solve satisfy;");
    const auto& c = m.constraints[0];
    EXPECT_EQ(fzn::as_int_values(c.args[0]), (std::vector<std::int64_t>{1, -1}));
    const auto xs = fzn::as_operands(c.args[1]);
    ASSERT_EQ(xs.size(), 2u);
    EXPECT_EQ(xs[1].var, "y");
    EXPECT_EQ(fzn::as_operand(c.args[2]).value, 2);
    EXPECT_EQ(fzn::as_operand(m.constraints[1].args[0]).var, "y");
}

TEST(Typecheck, SetDomainBecomesSetIn) {
    const auto m = load_model("var {1, 3}: x; solve satisfy;");
    EXPECT_EQ(m.vars[0].domain, (Domain{1, 3}));
    ASSERT_EQ(m.constraints.size(), 1u);
    EXPECT_EQ(m.constraints[0].builtin, "set_in");
}

TEST(Builtins, TableCoversEveryName) {
    const auto names = fzn::builtin_names();
    EXPECT_EQ(names.size(), 46u);
    EXPECT_EQ(fzn::builtin_signatures().size(), 47u);
    EXPECT_EQ(fzn::find_signatures("bool_xor").size(), 2u);
}

void expect_round_trip(const fzn::FzModel& checked) {
    const std::string text = fzn::print_model(checked);
    const auto again = load_model(text);
    EXPECT_EQ(again, checked) << text;
    EXPECT_EQ(fzn::print_model(again), text);
}

TEST(Printer, CorpusRoundTrip) {
    std::size_t seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(FZQ_FIXTURES "/corpus")) {
        expect_round_trip(load_model(slurp(entry.path())));
        ++seen;
    }
    EXPECT_GE(seen, 5u);
}

TEST(Printer, RandomInstancesRoundTrip) {
    for (auto name : fzn::builtin_names()) {
        for (const auto& m : fuzz::random_instances(name, 10, 7)) {
            expect_round_trip(fzn::typecheck(m));
        }
    }
}

TEST(Parser, TotalOnMutatedInput) {
    const std::string base = slurp(FZQ_FIXTURES "/corpus/linear.fzn");
    const std::string alphabet = "abcxyz0123456789-+.,;:[]{}()=%\n \"'_";
    std::mt19937_64 rng(11);
    for (int i = 0; i < 3000; ++i) {
        std::string s = base;
        const int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits; ++e) {
            const std::size_t at = rng() % (s.size() + 1);
            switch (rng() % 3) {
                case 0: s.insert(at, 1, alphabet[rng() % alphabet.size()]); break;
                case 1: if (at < s.size()) s.erase(at, 1); break;
                default: if (at < s.size()) s[at] = alphabet[rng() % alphabet.size()]; break;
            }
        }
        try {
            (void)load_model(s);
        } catch (const Error&) {
        } catch (const std::exception& e) {
            FAIL() << "non-diagnostic failure: " << e.what() << "\n" << s;
        }
    }
}

TEST(Parser, HugeLiteralIsDiagnosed) {
    EXPECT_EQ(code_of([] { parse_model("var 1..99999999999999999999: x; solve satisfy;"); }),
              ErrorCode::SyntaxError);
}

}  // namespace
}  // namespace fzq
