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

#ifndef FZQ_TESTS_SUPPORT_HPP
#define FZQ_TESTS_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fzq/domain.hpp"
#include "fzq/fzn/typecheck.hpp"
#include "fzq/oracle/enumerate.hpp"
#include "fzq/qip/problem.hpp"
#include "fzq/rewrite/compile.hpp"

namespace fzq::test {

using Tuple = std::vector<std::int64_t>;
using TupleSet = std::set<Tuple>;

inline qip::QipProblem compile_text(std::string_view src, const rewrite::Options& o = {}) {
    return rewrite::compile(fzn::load_model(src), o);
}

/// QIP solutions projected onto `names`.
inline TupleSet project(const qip::QipProblem& p, const std::vector<std::string>& names) {
    const auto index = p.index();
    std::vector<std::size_t> pos;
    for (const auto& n : names) {
        pos.push_back(index.at(n));
    }
    TupleSet out;
    oracle::for_each_qip_solution(p, [&](std::span<const std::int64_t> v) {
        Tuple t;
        for (auto k : pos) {
            t.push_back(v[k]);
        }
        out.insert(t);
        return true;
    });
    return out;
}

/// Points of the box `doms` accepted by `keep`, written out by hand.
inline TupleSet box(const std::vector<Domain>& doms, const std::function<bool(const Tuple&)>& keep) {
    TupleSet out;
    Tuple t(doms.size());
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == doms.size()) {
            if (keep(t)) {
                out.insert(t);
            }
            return;
        }
        for (std::int64_t v = doms[k].lo; v <= doms[k].hi; ++v) {
            t[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

inline std::size_t count_aux(const qip::QipProblem& p) {
    std::size_t n = 0;
    for (const auto& v : p.vars) {
        n += v.origin.kind == qip::Origin::Kind::Aux ? 1 : 0;
    }
    return n;
}

inline const qip::QipVar& var_named(const qip::QipProblem& p, const std::string& name) {
    return p.vars.at(p.index().at(name));
}

/// Truncating division, spelled out without the / operator on negatives.
inline std::int64_t trunc_div(std::int64_t n, std::int64_t d) {
    const std::int64_t an = n < 0 ? -n : n;
    const std::int64_t ad = d < 0 ? -d : d;
    std::int64_t q = 0;
    while ((q + 1) * ad <= an) {
        ++q;
    }
    return (n < 0) != (d < 0) ? -q : q;
}

}  // namespace fzq::test

#endif  // FZQ_TESTS_SUPPORT_HPP
