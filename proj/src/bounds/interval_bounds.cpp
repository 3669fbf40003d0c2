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

#include "fzq/bounds/interval_bounds.hpp"

#include <algorithm>
#include <initializer_list>

#include "fzq/checked.hpp"
#include "fzq/error.hpp"

namespace fzq::bounds {

namespace chk = fzq::checked;

Domain lin_bounds(std::span<const std::int64_t> coeffs, std::span<const Domain> vars, std::int64_t c) {
    if (coeffs.size() != vars.size()) {
        throw Error(ErrorCode::LengthMismatch, "lin_bounds",
                    std::to_string(coeffs.size()) + " coefficients for " + std::to_string(vars.size()) + " variables");
    }
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const std::int64_t a = coeffs[i];
        const Domain& d = vars[i];
        if (a < 0) {
            lo = chk::add(lo, chk::mul(a, d.hi));
            hi = chk::add(hi, chk::mul(a, d.lo));
        } else {
            lo = chk::add(lo, chk::mul(a, d.lo));
            hi = chk::add(hi, chk::mul(a, d.hi));
        }
    }
    return {chk::sub(lo, c), chk::sub(hi, c)};
}

Domain product_bounds(const Domain& a, const Domain& b) {
    const std::int64_t c[] = {chk::mul(a.lo, b.lo), chk::mul(a.lo, b.hi), chk::mul(a.hi, b.lo), chk::mul(a.hi, b.hi)};
    return {*std::min_element(std::begin(c), std::end(c)), *std::max_element(std::begin(c), std::end(c))};
}

Domain abs_bounds(const Domain& d) {
    if (d.lo >= 0) {
        return d;
    }
    if (d.hi <= 0) {
        return {chk::neg(d.hi), chk::neg(d.lo)};
    }
    return {0, std::max(chk::neg(d.lo), d.hi)};
}

ElementRestriction element_domain_restrict(const Domain& index, std::span<const Domain> values) {
    const auto n = static_cast<std::int64_t>(values.size());
    const Domain i{std::max<std::int64_t>(1, index.lo), std::min(n, index.hi)};
    if (i.empty()) {
        throw Error(ErrorCode::EmptyDomain, "index",
                    "index domain " + index.str() + " has no position in an array of length " + std::to_string(n));
    }
    Domain c = values[static_cast<std::size_t>(i.lo - 1)];
    for (std::int64_t k = i.lo + 1; k <= i.hi; ++k) {
        const Domain& v = values[static_cast<std::size_t>(k - 1)];
        c.lo = std::min(c.lo, v.lo);
        c.hi = std::max(c.hi, v.hi);
    }
    return {i, c};
}

MinMaxRestriction minmax_domain_restrict(const Domain& m, std::span<const Domain> xs, MinMax mode) {
    if (xs.empty()) {
        throw Error(ErrorCode::EmptyDomain, "m", "extremum of an empty array");
    }
    std::int64_t max_lo = xs[0].lo, max_hi = xs[0].hi, min_lo = xs[0].lo, min_hi = xs[0].hi;
    for (const auto& x : xs) {
        max_lo = std::max(max_lo, x.lo);
        max_hi = std::max(max_hi, x.hi);
        min_lo = std::min(min_lo, x.lo);
        min_hi = std::min(min_hi, x.hi);
    }
    MinMaxRestriction out;
    out.m = mode == MinMax::Max ? Domain{std::max(m.lo, max_lo), std::min(m.hi, max_hi)}
                                : Domain{std::max(m.lo, min_lo), std::min(m.hi, min_hi)};
    if (out.m.empty()) {
        throw Error(ErrorCode::EmptyDomain, "m", "no value of " + m.str() + " can be the extremum");
    }
    for (std::size_t k = 0; k < xs.size(); ++k) {
        const Domain x = mode == MinMax::Max ? Domain{xs[k].lo, std::min(xs[k].hi, out.m.hi)}
                                             : Domain{std::max(xs[k].lo, out.m.lo), xs[k].hi};
        if (x.empty()) {
            throw Error(ErrorCode::EmptyDomain, "x" + std::to_string(k + 1),
                        "element " + std::to_string(k + 1) + " " + xs[k].str() + " is incompatible with " +
                            out.m.str());
        }
        out.xs.push_back(x);
    }
    return out;
}

std::int64_t compute_big_M(const Domain& n, const Domain& d, const Domain& q, const Domain& p) {
    (void)q;
    using chk::add, chk::sub;
    const std::int64_t candidates[] = {
        sub(n.hi, p.lo),
        add(chk::neg(p.lo), n.hi),
        add(sub(sub(n.hi, d.lo), p.lo), 1),
        add(add(add(chk::neg(n.lo), d.hi), p.hi), 1),
        add(sub(add(n.hi, d.hi), p.lo), 1),
        add(add(sub(chk::neg(n.lo), d.lo), p.hi), 1),
    };
    return *std::max_element(std::begin(candidates), std::end(candidates));
}

}  // namespace fzq::bounds
