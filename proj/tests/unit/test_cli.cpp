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
#include <sstream>

#include "fzq/cli.hpp"
#include "fzq/qip/serialize.hpp"

namespace fzq {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run fzq_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(FZQ_FIXTURES) + "/" + name; }

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() / ("fzq_test_" + name);
    std::ofstream(p) << text;
    return p;
}

TEST(Cli, CompileWritesFile) {
    const auto out = std::filesystem::temp_directory_path() / "fzq_test_out.json";
    std::filesystem::remove(out);
    const auto r = fzq_run({"compile", fixture("corpus/abs.fzn"), "-o", out.string()});
    EXPECT_EQ(r.code, cli::kOk) << r.err;
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_NO_THROW(qip::deserialize(ss.str()));
    EXPECT_EQ(fzq_run({"compile", fixture("corpus/abs.fzn")}).out, ss.str());
}

TEST(Cli, SolvePrintsOptimum) {
    const auto r = fzq_run({"solve", fixture("corpus/min.fzn")});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out, "optimum: 2\nx = 2\n");
    EXPECT_EQ(fzq_run({"solve", fixture("corpus/max_ne.fzn")}).out, "optimum: 3\nx = 3\n");
}

TEST(Cli, CheckEqualAndCounterexample) {
    auto r = fzq_run({"check", fixture("corrupted-M.fzn")});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_EQ(r.out.rfind("Equal\n", 0), 0u);
    r = fzq_run({"check", fixture("corrupted-M.fzn"), "--inject-fault", "big-m-minus-one"});
    EXPECT_EQ(r.code, cli::kCounterexample);
    EXPECT_NE(r.out.find("witness: n=2, d=3, q=0"), std::string::npos) << r.out;
    r = fzq_run({"check", fixture("bool_and_lower.fzn"), "--inject-fault", "drop-and-lower-bound"});
    EXPECT_EQ(r.code, cli::kCounterexample);
    EXPECT_NE(r.out.find("provenance: array_bool_and#0"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
    const auto bad = temp_file("bad.fzn", "var 1..3: x;\nconstraint int_le(x 2);\nsolve satisfy;\n");
    auto r = fzq_run({"check", bad.string()});
    EXPECT_EQ(r.code, cli::kDiagnostics);
    EXPECT_EQ(r.err.rfind(bad.string() + ":2:", 0), 0u) << r.err;
    EXPECT_NE(r.err.find("SyntaxError"), std::string::npos);

    const auto unsupported = temp_file("float.fzn", "var float: f;\nsolve satisfy;\n");
    EXPECT_EQ(fzq_run({"compile", unsupported.string()}).code, cli::kDiagnostics);

    EXPECT_EQ(fzq_run({"check", fixture("corpus/divmod.fzn"), "--cap", "10"}).code, cli::kCapExceeded);

    const auto unsat = temp_file("unsat.fzn", "var 1..6: x;\nconstraint set_in(x, {7, 9});\nsolve satisfy;\n");
    r = fzq_run({"compile", unsat.string()});
    EXPECT_EQ(r.code, cli::kUnsat);
    EXPECT_NE(r.err.find(":2:"), std::string::npos) << r.err;
    EXPECT_EQ(fzq_run({"check", unsat.string()}).code, cli::kUnsat);

    EXPECT_EQ(fzq_run({"solve", fixture("corpus/unsat.fzn")}).code, cli::kUnsat);
    EXPECT_EQ(fzq_run({"check", "/nonexistent/model.fzn"}).code, cli::kDiagnostics);
    EXPECT_EQ(fzq_run({"frobnicate"}).code, cli::kDiagnostics);
    EXPECT_EQ(fzq_run({}).code, cli::kDiagnostics);
}

TEST(Cli, Stats) {
    const auto r = fzq_run({"stats", fixture("corpus/element.fzn")});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("one-hot groups: 1\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("equalities: 3\n"), std::string::npos) << r.out;
}

TEST(Cli, FuzzIsDeterministic) {
    const auto a = fzq_run({"fuzz", "int_div", "--instances", "20", "--seed", "4"});
    const auto b = fzq_run({"fuzz", "int_div", "--instances", "20", "--seed", "4"});
    EXPECT_EQ(a.code, cli::kOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, "int_div: 20/20 equal\n");
    EXPECT_EQ(fzq_run({"fuzz", "no_such_builtin"}).code, cli::kDiagnostics);
}

TEST(Cli, FuzzEmitsFiles) {
    const auto dir = std::filesystem::temp_directory_path() / "fzq_test_emit";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    EXPECT_EQ(fzq_run({"fuzz", "int_abs", "--instances", "3", "--emit", dir.string()}).code, cli::kOk);
    std::size_t n = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        // A random instance may be infeasible; it must never be a counterexample.
        const int code = fzq_run({"check", e.path().string()}).code;
        EXPECT_TRUE(code == cli::kOk || code == cli::kUnsat) << e.path() << " exits " << code;
        ++n;
    }
    EXPECT_EQ(n, 3u);
}

}  // namespace
}  // namespace fzq
