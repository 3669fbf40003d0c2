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

#include "fzq/fuzz/generator.hpp"
#include "fzq/fzn/builtins.hpp"
#include "fzq/fzn/printer.hpp"
#include "fzq/fzn/typecheck.hpp"

namespace fzq {
namespace {

TEST(Generator, SameSeedSameModels) {
    for (auto name : fzn::builtin_names()) {
        const auto a = fuzz::random_instances(name, 5, 42);
        const auto b = fuzz::random_instances(name, 5, 42);
        ASSERT_EQ(a.size(), 5u);
        for (std::size_t i = 0; i < a.size(); ++i) {
            EXPECT_EQ(fzn::print_model(a[i]), fzn::print_model(b[i]));
        }
    }
}

TEST(Generator, InstancesAreWellTypedAndSmall) {
    for (auto name : fzn::builtin_names()) {
        for (const auto& m : fuzz::random_instances(name, 30, 1)) {
            const auto c = fzn::typecheck(m);
            for (const auto& v : c.vars) {
                EXPECT_GE(v.domain.lo, -4);
                EXPECT_LE(v.domain.hi, 4);
            }
            const auto& item = c.constraints.back();
            EXPECT_EQ(item.builtin, name);
            for (const auto& arg : item.args) {
                if (arg.kind == fzn::Expr::Kind::Array) {
                    EXPECT_LE(arg.elems.size(), 3u);
                }
            }
            if (fzn::is_reified(name)) {
                const auto r = fzn::as_operand(item.args.back());
                ASSERT_TRUE(r.is_var());
                std::size_t uses = 0;
                for (const auto& arg : item.args) {
                    for (const auto& e : arg.kind == fzn::Expr::Kind::Array ? arg.elems : std::vector{arg}) {
                        uses += e.kind == fzn::Expr::Kind::Ident && e.name == r.var ? 1 : 0;
                    }
                }
                EXPECT_EQ(uses, 1u);
            }
        }
    }
}

TEST(Generator, NonzeroNumerator) {
    fuzz::FuzzOptions o;
    o.nonzero_numerator = true;
    for (const char* b : {"int_div", "int_mod"}) {
        for (const auto& m : fuzz::random_instances(b, 50, 3, o)) {
            const auto c = fzn::typecheck(m);
            const auto n = fzn::as_operand(c.constraints[0].args[0]);
            ASSERT_TRUE(n.is_var());
            EXPECT_FALSE(c.find_var(n.var)->domain.contains(0));
        }
    }
}

}  // namespace
}  // namespace fzq
