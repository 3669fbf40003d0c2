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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "fzq/bounds/interval_bounds.hpp"
#include "fzq/cli.hpp"
#include "fzq/error.hpp"
#include "fzq/fuzz/generator.hpp"
#include "fzq/fzn/builtins.hpp"
#include "fzq/fzn/printer.hpp"
#include "fzq/fzn/typecheck.hpp"
#include "fzq/oracle/enumerate.hpp"
#include "fzq/oracle/equivalence.hpp"
#include "fzq/qip/serialize.hpp"
#include "fzq/rewrite/compile.hpp"

namespace {

using namespace fzq;
using Tuple = std::vector<std::int64_t>;

constexpr std::size_t kInstances = 50;
constexpr std::uint64_t kSeed = 20260415;

struct Verdict {
    bool ok = true;
    std::string note;
    std::vector<std::string> failures;

    void fail(std::string what) {
        ok = false;
        if (failures.size() < 5) {
            failures.push_back(std::move(what));
        }
    }
};

struct Config {
    std::string name;
    rewrite::Options options;
    fuzz::FuzzOptions fuzz;
};

std::vector<Config> configs() {
    Config zeta{"default", {}, {}};
    Config faithful{"paper-faithful-div", {}, {}};
    faithful.options.paper_faithful_div = true;
    faithful.fuzz.nonzero_numerator = true;
    Config products{"prefer-products", {}, {}};
    products.options.prefer_products = true;
    return {zeta, faithful, products};
}

struct Instance {
    std::string label;
    fzn::FzModel model;
    std::optional<qip::QipProblem> problem;  // empty when compile proved UNSAT
};

std::string label_of(const Config& c, std::string_view b, std::size_t i) {
    return c.name + "/" + std::string(b) + "#" + std::to_string(i);
}

std::vector<std::int64_t> six(Domain n, Domain d, Domain p) {
    return {n.hi - p.lo,          -p.lo + n.hi,          n.hi - d.lo - p.lo + 1,
            -n.lo + d.hi + p.hi + 1, n.hi + d.hi - p.lo + 1, -n.lo - d.lo + p.hi + 1};
}

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Domain random_domain(std::mt19937_64& rng, std::int64_t width) {
    const std::int64_t lo = draw(rng, -6, 6);
    return {lo, lo + draw(rng, 0, width - 1)};
}

// Criterion 2 and 5 facts gathered from one walk over the QIP solutions.
void inspect_solutions(const Instance& inst, bool reified, Verdict& c2, Verdict& c5) {
    const auto& p = *inst.problem;
    const auto index = p.index();
    std::map<std::string, int> owners;
    for (const auto& g : p.onehot_groups) {
        if (++owners[g.int_var] > 1) {
            c5.fail(inst.label + ": " + g.int_var + " owns two one-hot groups");
        }
    }
    struct Group {
        std::size_t var;
        std::vector<std::pair<std::size_t, std::int64_t>> bits;
    };
    std::vector<Group> groups;
    for (const auto& g : p.onehot_groups) {
        Group gg{index.at(g.int_var), {}};
        for (const auto& b : g.bits) {
            gg.bits.emplace_back(index.at(b.var), b.value);
        }
        groups.push_back(std::move(gg));
    }

    const auto& vars = inst.model.vars;
    std::vector<std::size_t> proj;
    for (const auto& v : vars) {
        proj.push_back(index.at(v.name));
    }
    std::string r_name;
    if (reified) {
        r_name = fzn::as_operand(inst.model.constraints.back().args.back()).var;
    }
    std::map<Tuple, std::set<std::int64_t>> r_values;
    oracle::for_each_qip_solution(p, [&](std::span<const std::int64_t> v) {
        for (const auto& g : groups) {
            std::int64_t sum = 0, value = 0;
            for (const auto& [k, val] : g.bits) {
                sum += v[k];
                value += val * v[k];
            }
            if (sum != 1 || value != v[g.var]) {
                c5.fail(inst.label + ": one-hot group of " + p.vars[g.var].name + " broken in a solution");
            }
        }
        if (reified) {
            Tuple key;
            std::int64_t r = 0;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if (vars[i].name == r_name) {
                    r = v[proj[i]];
                } else {
                    key.push_back(v[proj[i]]);
                }
            }
            r_values[key].insert(r);
        }
        return true;
    });
    if (!reified) {
        return;
    }
    // Every assignment of the other variables over their declared domains.
    std::vector<Domain> doms;
    for (const auto& v : vars) {
        if (v.name != r_name) {
            doms.push_back(v.domain);
        }
    }
    Tuple t(doms.size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == doms.size()) {
            auto it = r_values.find(t);
            const std::size_t n = it == r_values.end() ? 0 : it->second.size();
            if (n != 1) {
                c2.fail(inst.label + ": " + std::to_string(n) + " feasible values of " + r_name);
            }
            return;
        }
        for (auto x = doms[k].lo; x <= doms[k].hi; ++x) {
            t[k] = x;
            rec(k + 1);
        }
    };
    rec(0);
}

void print(int id, const std::string& title, const Verdict& v) {
    std::cout << (v.ok ? "[PASS] " : "[FAIL] ") << id << " " << title;
    if (!v.note.empty()) {
        std::cout << ": " << v.note;
    }
    std::cout << "\n";
    for (const auto& f : v.failures) {
        std::cout << "         " << f << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    const std::filesystem::path fixtures = argc > 1 ? argv[1] : FZQ_FIXTURES;
    const auto start = std::chrono::steady_clock::now();
    bool all_ok = true;
    auto report = [&](int id, const std::string& title, const Verdict& v) {
        print(id, title, v);
        all_ok = all_ok && v.ok;
    };

    // Criteria 1, 2, 4 (restriction half) and 5 share the per-builtin instances.
    Verdict c1, c2, c4r, c5;
    std::size_t checked = 0, unsat = 0, reified_instances = 0, solutions_seen = 0;
    const auto names = fzn::builtin_names();
    for (const auto& cfg : configs()) {
        for (auto b : names) {
            const auto models = fuzz::random_instances(b, kInstances, kSeed, cfg.fuzz);
            for (std::size_t i = 0; i < models.size(); ++i) {
                Instance inst{label_of(cfg, b, i), fzn::typecheck(models[i]), std::nullopt};
                try {
                    try {
                        inst.problem = rewrite::compile(inst.model, cfg.options);
                    } catch (const Error& e) {
                        if (e.code() != ErrorCode::Unsat) {
                            throw;
                        }
                    }
                    const auto eq = inst.problem ? oracle::check_equivalence(inst.model, *inst.problem)
                                                 : oracle::check_unsat(inst.model);
                    ++checked;
                    if (!inst.problem) {
                        ++unsat;
                    }
                    if (!eq.equal()) {
                        c1.fail(inst.label + ": " + eq.counterexample->detail + "\n" + fzn::print_model(inst.model));
                        continue;
                    }
                    if (!inst.problem) {
                        if (fzn::is_reified(b)) {
                            c2.fail(inst.label + ": compiled to UNSAT");
                        }
                        continue;
                    }
                    // Declared-domain restrictions keep every solution value.
                    const auto fzn_set = oracle::enumerate_fzn(inst.model);
                    solutions_seen += fzn_set.tuples.size();
                    const auto index = inst.problem->index();
                    for (const auto& t : fzn_set.tuples) {
                        for (std::size_t k = 0; k < t.size(); ++k) {
                            if (!inst.problem->vars[index.at(fzn_set.vars[k])].domain.contains(t[k])) {
                                c4r.fail(inst.label + ": restriction of " + fzn_set.vars[k] + " drops " +
                                         std::to_string(t[k]));
                            }
                        }
                    }
                    reified_instances += fzn::is_reified(b) ? 1 : 0;
                    inspect_solutions(inst, fzn::is_reified(b), c2, c5);
                } catch (const std::exception& e) {
                    c1.fail(inst.label + ": " + e.what());
                }
            }
        }
    }
    const double c1_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c1_seconds > 600) {
        c1.fail("took " + std::to_string(c1_seconds) + " s");
    }
    c1.note = std::to_string(names.size()) + " builtins x " + std::to_string(kInstances) + " instances x " +
              std::to_string(configs().size()) + " configurations, " + std::to_string(checked) + " checked (" +
              std::to_string(unsat) + " UNSAT at compile), " + std::to_string(static_cast<int>(c1_seconds)) + " s";
    report(1, "per-builtin exhaustive equivalence", c1);
    c2.note = std::to_string(reified_instances) + " reified instances";
    report(2, "reified truth-table exactness", c2);

    // 3. Big-M minimality.
    {
        Verdict v;
        std::mt19937_64 rng(kSeed + 3);
        for (int it = 0; it < 100; ++it) {
            const Domain n = random_domain(rng, 7), d = random_domain(rng, 7), q = random_domain(rng, 7);
            const Domain p = bounds::product_bounds(d, q);
            const std::int64_t M = bounds::compute_big_M(n, d, q, p);
            const auto rhs = six(n, d, p);
            if (!std::all_of(rhs.begin(), rhs.end(), [&](auto x) { return M >= x; }) ||
                !std::any_of(rhs.begin(), rhs.end(), [&](auto x) { return M - 1 < x; })) {
                v.fail("not minimal for n=" + n.str() + " d=" + d.str() + " q=" + q.str());
            }
        }
        const std::int64_t worked = bounds::compute_big_M({-3, 3}, {-2, 2}, {-3, 3}, {-6, 6});
        if (worked != 12) {
            v.fail("worked instance gives " + std::to_string(worked));
        }
        v.note = "100 random triples, worked instance M = " + std::to_string(worked);
        report(3, "big-M minimality", v);
    }

    // 4. Bounds exactness.
    {
        Verdict v = c4r;
        std::mt19937_64 rng(kSeed + 4);
        for (int it = 0; it < 200; ++it) {
            const std::size_t len = static_cast<std::size_t>(draw(rng, 1, 3));
            std::vector<std::int64_t> coeffs;
            std::vector<Domain> doms;
            for (std::size_t i = 0; i < len; ++i) {
                coeffs.push_back(draw(rng, -4, 4));
                doms.push_back(random_domain(rng, 7));
            }
            const std::int64_t c = draw(rng, -5, 5);
            std::int64_t lo = INT64_MAX, hi = INT64_MIN;
            Tuple t(len);
            std::function<void(std::size_t)> rec = [&](std::size_t k) {
                if (k == len) {
                    std::int64_t s = -c;
                    for (std::size_t i = 0; i < len; ++i) {
                        s += coeffs[i] * t[i];
                    }
                    lo = std::min(lo, s);
                    hi = std::max(hi, s);
                    return;
                }
                for (auto x = doms[k].lo; x <= doms[k].hi; ++x) {
                    t[k] = x;
                    rec(k + 1);
                }
            };
            rec(0);
            if (bounds::lin_bounds(coeffs, doms, c) != Domain{lo, hi}) {
                v.fail("lin_bounds mismatch");
            }
        }
        for (int it = 0; it < 200; ++it) {
            const Domain a = random_domain(rng, 7), b = random_domain(rng, 7);
            std::int64_t lo = INT64_MAX, hi = INT64_MIN;
            for (auto x = a.lo; x <= a.hi; ++x) {
                for (auto y = b.lo; y <= b.hi; ++y) {
                    lo = std::min(lo, x * y);
                    hi = std::max(hi, x * y);
                }
            }
            if (bounds::product_bounds(a, b) != Domain{lo, hi}) {
                v.fail("product_bounds mismatch for " + a.str() + " x " + b.str());
            }
        }
        for (int it = 0; it < 200; ++it) {
            const Domain a = random_domain(rng, 7);
            std::int64_t lo = INT64_MAX, hi = INT64_MIN;
            for (auto x = a.lo; x <= a.hi; ++x) {
                lo = std::min(lo, x < 0 ? -x : x);
                hi = std::max(hi, x < 0 ? -x : x);
            }
            if (bounds::abs_bounds(a) != Domain{lo, hi}) {
                v.fail("abs_bounds mismatch for " + a.str());
            }
        }
        v.note = "3 x 200 random instances; restrictions kept all " + std::to_string(solutions_seen) +
                 " solutions of the equivalence instances";
        report(4, "bounds exactness", v);
    }

    report(5, "one-hot invariants", c5);

    // 6. Optimization agreement.
    {
        Verdict v;
        std::mt19937_64 rng(kSeed + 6);
        std::size_t feasible = 0;
        for (int it = 0; it < 20; ++it) {
            const auto model = fzn::typecheck(fuzz::random_optimization_model(rng));
            const auto direct = oracle::fzn_optimum(model);
            std::optional<oracle::Optimum> compiled;
            try {
                compiled = oracle::solve_optimum(rewrite::compile(model));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::Unsat) {
                    v.fail(std::string("model ") + std::to_string(it) + ": " + e.what());
                    continue;
                }
            }
            if (direct.has_value() != compiled.has_value() || (direct && direct->value != compiled->value)) {
                v.fail("model " + std::to_string(it) + " disagrees\n" + fzn::print_model(model));
            }
            feasible += direct ? 1 : 0;
        }
        v.note = "20 models, " + std::to_string(feasible) + " feasible";
        report(6, "optimization agreement", v);
    }

    // 7. int_pow decomposition.
    {
        Verdict v;
        const auto p5 = rewrite::compile(fzn::load_model(
            "var -2..2: x; var -32..32: z; constraint int_pow(x, 5, z); solve satisfy;"));
        if (p5.products.size() != 3) {
            v.fail("x^5 uses " + std::to_string(p5.products.size()) + " products");
        }
        const auto idx = p5.index();
        std::map<std::int64_t, std::set<std::int64_t>> values;
        for (const auto& t : oracle::enumerate_qip(p5).tuples) {
            values[t[idx.at("x")]].insert(t[idx.at("z")]);
        }
        for (std::int64_t x = -2; x <= 2; ++x) {
            const std::int64_t want = x * x * x * x * x;
            if (values[x] != std::set<std::int64_t>{want}) {
                v.fail("x^5 wrong at x = " + std::to_string(x));
            }
        }
        const auto p8 = rewrite::compile(fzn::load_model(
            "var -2..2: x; var -256..256: z; constraint int_pow(x, 8, z); solve satisfy;"));
        if (p8.products.size() != 3) {
            v.fail("x^8 uses " + std::to_string(p8.products.size()) + " products");
        }
        v.note = "x^5: " + std::to_string(p5.products.size()) + " products, x^8: " +
                 std::to_string(p8.products.size()) + " products";
        report(7, "int_pow decomposition", v);
    }

    // 8. Determinism.
    {
        Verdict v;
        std::size_t files = 0;
        std::vector<std::filesystem::path> paths;
        for (const auto& dir : {fixtures / "corpus", fixtures}) {
            for (const auto& e : std::filesystem::directory_iterator(dir)) {
                if (e.path().extension() == ".fzn") {
                    paths.push_back(e.path());
                }
            }
        }
        std::sort(paths.begin(), paths.end());
        for (const auto& path : paths) {
            for (const auto& cfg : configs()) {
                std::ostringstream o1, o2, e1, e2;
                std::vector<std::string> args{"compile", path.string()};
                if (cfg.options.paper_faithful_div) args.push_back("--paper-faithful-div");
                if (cfg.options.prefer_products) args.push_back("--prefer-products");
                const int r1 = cli::run(args, o1, e1);
                const int r2 = cli::run(args, o2, e2);
                if (r1 != r2 || o1.str() != o2.str() || e1.str() != e2.str()) {
                    v.fail(path.filename().string() + " differs between runs");
                }
            }
            ++files;
        }
        if (files == 0) {
            v.fail("no corpus files under " + fixtures.string());
        }
        v.note = std::to_string(files) + " files x " + std::to_string(configs().size()) + " configurations";
        report(8, "determinism", v);
    }

    // 9. Negative controls.
    {
        Verdict v;
        struct Control {
            std::string file, fault;
        };
        for (const auto& c : {Control{"corrupted-M.fzn", "big-m-minus-one"},
                              Control{"bool_and_lower.fzn", "drop-and-lower-bound"}}) {
            const std::string path = (fixtures / c.file).string();
            std::ostringstream out, err;
            const int clean = cli::run({"check", path}, out, err);
            const int faulty = cli::run({"check", path, "--inject-fault", c.fault}, out, err);
            if (clean != cli::kOk) {
                v.fail(c.file + " without fault exits " + std::to_string(clean));
            }
            if (faulty != cli::kCounterexample) {
                v.fail(c.file + " with " + c.fault + " exits " + std::to_string(faulty));
            }
            v.note += (v.note.empty() ? "" : ", ") + c.file + " exits " + std::to_string(faulty);
        }
        report(9, "negative controls", v);
    }

    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "total " << static_cast<int>(total) << " s\n";
    return all_ok ? 0 : 1;
}
