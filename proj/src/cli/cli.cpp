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

#include "fzq/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "fzq/error.hpp"
#include "fzq/fuzz/generator.hpp"
#include "fzq/fzn/builtins.hpp"
#include "fzq/fzn/printer.hpp"
#include "fzq/fzn/typecheck.hpp"
#include "fzq/oracle/enumerate.hpp"
#include "fzq/oracle/equivalence.hpp"
#include "fzq/qip/serialize.hpp"
#include "fzq/rewrite/compile.hpp"

namespace fzq::cli {

namespace {

struct Settings {
    std::uint64_t cap = oracle::kDefaultCap;
    bool prefer_products = false;
    bool paper_faithful_div = false;
    std::string fault = "none";
    std::uint64_t seed = 1;
    std::size_t instances = 50;
    std::string input;
    std::string output;
    std::string builtin;
    std::string emit_dir;

    rewrite::Options options() const {
        rewrite::Options o;
        o.prefer_products = prefer_products;
        o.paper_faithful_div = paper_faithful_div;
        if (fault == "big-m-minus-one") {
            o.fault = rewrite::Fault::BigMMinusOne;
        } else if (fault == "drop-and-lower-bound") {
            o.fault = rewrite::Fault::DropAndLowerBound;
        }
        return o;
    }
};

int code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::CapExceeded: return kCapExceeded;
        case ErrorCode::Unsat: return kUnsat;
        default: return kDiagnostics;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error(path + ": cannot read file");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string assignment(const std::vector<std::string>& vars, std::span<const std::int64_t> values) {
    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        out += vars[i] + " = " + std::to_string(values[i]) + "\n";
    }
    return out;
}

class Runner {
public:
    Runner(const Settings& s, std::ostream& out, std::ostream& err) : s_(s), out_(out), err_(err) {}

    int compile() {
        const auto problem = rewrite::compile(load(), s_.options());
        const std::string text = qip::serialize(problem);
        if (s_.output.empty()) {
            out_ << text;
            return kOk;
        }
        std::ofstream f(s_.output, std::ios::binary);
        f << text;
        if (!f) {
            err_ << s_.output << ": cannot write file\n";
            return kDiagnostics;
        }
        return kOk;
    }

    int check() {
        const fzn::FzModel model = load();
        const auto [result, code] = check_model(model);
        out_ << oracle::format_report(result);
        return code;
    }

    int solve() {
        const fzn::FzModel model = load();
        const auto problem = rewrite::compile(model, s_.options());
        const auto best = oracle::solve_optimum(problem, s_.cap);
        if (!best) {
            out_ << "UNSAT\n";
            return kUnsat;
        }
        if (problem.objective.sense == qip::Objective::Sense::Min) {
            out_ << "optimum: " << best->value << "\n";
        } else {
            out_ << "satisfiable\n";
        }
        std::vector<std::string> names;
        std::vector<std::int64_t> values;
        for (std::size_t k = 0; k < problem.vars.size(); ++k) {
            if (problem.vars[k].origin.kind == qip::Origin::Kind::Model) {
                names.push_back(problem.vars[k].name);
                values.push_back(best->witness[k]);
            }
        }
        out_ << assignment(names, values);
        return kOk;
    }

    int stats() {
        const fzn::FzModel model = load();
        const auto p = rewrite::compile(model, s_.options());
        std::size_t model_vars = 0;
        for (const auto& v : p.vars) {
            model_vars += v.origin.kind == qip::Origin::Kind::Model ? 1 : 0;
        }
        out_ << "variables: " << p.vars.size() << "\n";
        out_ << "model variables: " << model_vars << "\n";
        out_ << "auxiliary variables: " << p.vars.size() - model_vars << "\n";
        out_ << "source constraints: " << model.constraints.size() << "\n";
        out_ << "equalities: " << p.equalities.size() << "\n";
        out_ << "inequalities: " << p.inequalities.size() << "\n";
        out_ << "products: " << p.products.size() << "\n";
        out_ << "one-hot groups: " << p.onehot_groups.size() << "\n";
        return kOk;
    }

    int fuzz() {
        std::vector<std::string> builtins;
        if (s_.builtin == "all") {
            for (auto name : fzn::builtin_names()) {
                builtins.emplace_back(name);
            }
        } else if (fzn::is_supported_builtin(s_.builtin)) {
            builtins.push_back(s_.builtin);
        } else {
            throw Error(ErrorCode::UnsupportedItem, s_.builtin, "unsupported builtin '" + s_.builtin + "'");
        }
        fuzz::FuzzOptions fo;
        fo.nonzero_numerator = s_.paper_faithful_div;
        int worst = kOk;
        for (const auto& b : builtins) {
            const auto models = fuzz::random_instances(b, s_.instances, s_.seed, fo);
            std::size_t failed = 0;
            for (std::size_t i = 0; i < models.size(); ++i) {
                const std::string label = b + "#" + std::to_string(i);
                if (!s_.emit_dir.empty()) {
                    const std::string path = s_.emit_dir + "/" + b + "_" + std::to_string(i) + ".fzn";
                    std::ofstream f(path, std::ios::binary);
                    f << fzn::print_model(models[i]);
                    if (!f) {
                        err_ << path << ": cannot write file\n";
                        return kDiagnostics;
                    }
                    continue;
                }
                int code = kOk;
                std::string line;
                try {
                    const auto [result, c] = check_model(fzn::typecheck(models[i]));
                    code = c;
                    line = result.equal() ? "Equal" : "Counterexample";
                    if (!result.equal()) {
                        const auto& ce = *result.counterexample;
                        std::string w;
                        for (std::size_t k = 0; k < ce.vars.size(); ++k) {
                            w += (k == 0 ? "" : ", ") + ce.vars[k] + "=" + std::to_string(ce.witness[k]);
                        }
                        line += " (" + w + ") " + ce.provenance;
                    }
                } catch (const Error& e) {
                    code = code_for(e);
                    line = std::string(to_string(e.code())) + ": " + e.what();
                }
                if (code == kCounterexample || code == kDiagnostics || code == kCapExceeded) {
                    ++failed;
                    worst = std::max(worst, code);
                    out_ << label << ": " << line << "\n";
                    out_ << fzn::print_model(models[i]);
                }
            }
            if (s_.emit_dir.empty()) {
                out_ << b << ": " << models.size() - failed << "/" << models.size() << " equal\n";
            }
        }
        return worst;
    }

private:
    fzn::FzModel load() { return fzn::load_model(read_file(s_.input)); }

    // A compile-time UNSAT is checked against the model too; it stays exit 4
    // when the model agrees.
    std::pair<oracle::EquivalenceResult, int> check_model(const fzn::FzModel& model) {
        std::optional<qip::QipProblem> problem;
        try {
            problem = rewrite::compile(model, s_.options());
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Unsat) {
                throw;
            }
            auto r = oracle::check_unsat(model, s_.cap);
            return {r, r.equal() ? kUnsat : kCounterexample};
        }
        auto r = oracle::check_equivalence(model, *problem, s_.cap);
        return {r, r.equal() ? kOk : kCounterexample};
    }

    const Settings& s_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"FlatZinc to QIP(FD) compiler with an exhaustive equivalence oracle", "fzq"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--cap", s.cap, "Enumeration cap on the search-space size")->capture_default_str();
    app.add_flag("--prefer-products", s.prefer_products, "Use product encodings for bool_and and bool_lt_reif");
    app.add_flag("--paper-faithful-div", s.paper_faithful_div,
                 "Emit the division system without the n = 0 extension");
    app.add_option("--inject-fault", s.fault)
        ->check(CLI::IsMember({"none", "big-m-minus-one", "drop-and-lower-bound"}))
        ->group("");

    auto* compile = app.add_subcommand("compile", "Write the serialized QIP");
    compile->add_option("input", s.input, "FlatZinc file")->required();
    compile->add_option("-o,--output", s.output, "Output file (default: stdout)");
    auto* check = app.add_subcommand("check", "Compile and compare solution sets");
    check->add_option("input", s.input, "FlatZinc file")->required();
    auto* solve = app.add_subcommand("solve", "Compile and find the optimum by enumeration");
    solve->add_option("input", s.input, "FlatZinc file")->required();
    auto* stats = app.add_subcommand("stats", "Print size counts of the compiled QIP");
    stats->add_option("input", s.input, "FlatZinc file")->required();
    auto* fuzz = app.add_subcommand("fuzz", "Check random instances of a builtin (or 'all')");
    fuzz->add_option("builtin", s.builtin, "Builtin name")->required();
    fuzz->add_option("--instances", s.instances, "Number of instances")->capture_default_str();
    fuzz->add_option("--seed", s.seed, "Random seed")->capture_default_str();
    fuzz->add_option("--emit", s.emit_dir, "Write the instances as .fzn files into this directory instead");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kDiagnostics;
    }

    Runner r(s, out, err);
    try {
        if (*compile) return r.compile();
        if (*check) return r.check();
        if (*solve) return r.solve();
        if (*stats) return r.stats();
        return r.fuzz();
    } catch (const Error& e) {
        err << e.diagnostic(s.input.empty() ? "fzq" : s.input) << "\n";
        return code_for(e);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kDiagnostics;
    }
}

}  // namespace fzq::cli
