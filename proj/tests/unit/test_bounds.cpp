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

#include <algorithm>
#include <random>

#include "fzq/bounds/interval_bounds.hpp"
#include "fzq/error.hpp"
#include "support.hpp"

namespace fzq {
namespace {

using bounds::MinMax;

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Domain narrow(std::mt19937_64& rng) {
    const std::int64_t lo = draw(rng, -6, 6);
    return {lo, lo + draw(rng, 0, 6)};
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::SyntaxError;
}

TEST(LinBounds, Examples) {
    const std::vector<std::int64_t> c{2, -1};
    const std::vector<Domain> d{{0, 3}, {1, 2}};
    EXPECT_EQ(bounds::lin_bounds(c, d, 3), (Domain{-5, 2}));
    // Brute force over the 4 x 2 points.
    const auto pts = test::box(d, [](const test::Tuple&) { return true; });
    std::int64_t lo = INT64_MAX, hi = INT64_MIN;
    for (const auto& t : pts) {
        lo = std::min(lo, 2 * t[0] - t[1] - 3);
        hi = std::max(hi, 2 * t[0] - t[1] - 3);
    }
    EXPECT_EQ(lo, -5);
    EXPECT_EQ(hi, 2);

    EXPECT_EQ(bounds::lin_bounds({}, {}, 0), (Domain{0, 0}));
    const std::vector<std::int64_t> one{1};
    const std::vector<Domain> fixed{{4, 4}};
    EXPECT_EQ(bounds::lin_bounds(one, fixed, 0), (Domain{4, 4}));
}

TEST(LinBounds, Errors) {
    const std::vector<std::int64_t> c{1, 2};
    const std::vector<Domain> d{{0, 1}};
    EXPECT_EQ(code_of([&] { bounds::lin_bounds(c, d, 0); }), ErrorCode::LengthMismatch);
    const std::vector<std::int64_t> big{INT64_MAX, INT64_MAX};
    const std::vector<Domain> wide{{0, 2}, {0, 2}};
    EXPECT_EQ(code_of([&] { bounds::lin_bounds(big, wide, 0); }), ErrorCode::Overflow);
}

TEST(ProductBounds, Examples) {
    EXPECT_EQ(bounds::product_bounds({-2, 2}, {-3, 3}), (Domain{-6, 6}));
    EXPECT_EQ(bounds::product_bounds({0, 1}, {0, 1}), (Domain{0, 1}));
    EXPECT_EQ(bounds::product_bounds({2, 3}, {-1, -1}), (Domain{-3, -2}));
    EXPECT_EQ(code_of([] { bounds::product_bounds({0, INT64_MAX}, {0, 2}); }), ErrorCode::Overflow);
}

TEST(AbsBounds, Examples) {
    EXPECT_EQ(bounds::abs_bounds({-2, 3}), (Domain{0, 3}));
    EXPECT_EQ(bounds::abs_bounds({1, 4}), (Domain{1, 4}));
    EXPECT_EQ(bounds::abs_bounds({-5, -2}), (Domain{2, 5}));
}

TEST(Bounds, ExactOnRandomDomains) {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        const std::size_t n = static_cast<std::size_t>(draw(rng, 1, 3));
        std::vector<std::int64_t> c;
        std::vector<Domain> d;
        for (std::size_t i = 0; i < n; ++i) {
            c.push_back(draw(rng, -4, 4));
            d.push_back(narrow(rng));
        }
        const std::int64_t k = draw(rng, -5, 5);
        std::int64_t lo = INT64_MAX, hi = INT64_MIN;
        test::box(d, [&](const test::Tuple& t) {
            std::int64_t s = -k;
            for (std::size_t i = 0; i < n; ++i) {
                s += c[i] * t[i];
            }
            lo = std::min(lo, s);
            hi = std::max(hi, s);
            return false;
        });
        EXPECT_EQ(bounds::lin_bounds(c, d, k), (Domain{lo, hi}));

        const Domain a = narrow(rng), b = narrow(rng);
        lo = INT64_MAX, hi = INT64_MIN;
        for (auto x = a.lo; x <= a.hi; ++x) {
            for (auto y = b.lo; y <= b.hi; ++y) {
                lo = std::min(lo, x * y);
                hi = std::max(hi, x * y);
            }
        }
        EXPECT_EQ(bounds::product_bounds(a, b), (Domain{lo, hi}));

        lo = INT64_MAX, hi = INT64_MIN;
        for (auto x = a.lo; x <= a.hi; ++x) {
            lo = std::min(lo, x < 0 ? -x : x);
            hi = std::max(hi, x < 0 ? -x : x);
        }
        EXPECT_EQ(bounds::abs_bounds(a), (Domain{lo, hi}));
    }
}

TEST(ElementRestrict, Examples) {
    const std::vector<Domain> a{{4, 4}, {7, 7}, {1, 1}};
    const auto r = bounds::element_domain_restrict({0, 5}, a);
    EXPECT_EQ(r.index, (Domain{1, 3}));
    EXPECT_EQ(r.value, (Domain{1, 7}));
    EXPECT_EQ(bounds::element_domain_restrict({2, 2}, a).value, (Domain{7, 7}));
    EXPECT_EQ(code_of([&] { bounds::element_domain_restrict({4, 9}, a); }), ErrorCode::EmptyDomain);
}

TEST(MinMaxRestrict, Examples) {
    const std::vector<Domain> xs{{0, 3}, {1, 2}};
    const auto r = bounds::minmax_domain_restrict({-10, 10}, xs, MinMax::Max);
    EXPECT_EQ(r.m, (Domain{1, 3}));
    EXPECT_EQ(r.xs, xs);
    // Brute force: max over all pairs takes exactly {1, 2, 3}.
    std::set<std::int64_t> maxima;
    test::box(xs, [&](const test::Tuple& t) {
        maxima.insert(std::max(t[0], t[1]));
        return false;
    });
    EXPECT_EQ(maxima, (std::set<std::int64_t>{1, 2, 3}));

    const std::vector<Domain> one{{0, 5}};
    EXPECT_EQ(bounds::minmax_domain_restrict({2, 2}, one, MinMax::Min).xs[0], (Domain{2, 5}));
    EXPECT_EQ(code_of([&] { bounds::minmax_domain_restrict({5, 9}, xs, MinMax::Max); }), ErrorCode::EmptyDomain);
}

TEST(Restrictions, NeverLoseASolutionValue) {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 300; ++it) {
        const std::size_t n = static_cast<std::size_t>(draw(rng, 1, 3));
        std::vector<Domain> xs;
        for (std::size_t j = 0; j < n; ++j) {
            xs.push_back(narrow(rng));
        }
        const Domain m = narrow(rng);
        for (MinMax mode : {MinMax::Max, MinMax::Min}) {
            std::vector<Domain> all = xs;
            all.push_back(m);
            const auto sols = test::box(all, [&](const test::Tuple& t) {
                const auto e = mode == MinMax::Max ? *std::max_element(t.begin(), t.end() - 1)
                                                   : *std::min_element(t.begin(), t.end() - 1);
                return e == t.back();
            });
            try {
                const auto r = bounds::minmax_domain_restrict(m, xs, mode);
                for (const auto& t : sols) {
                    EXPECT_TRUE(r.m.contains(t.back()));
                    for (std::size_t j = 0; j < n; ++j) {
                        EXPECT_TRUE(r.xs[j].contains(t[j]));
                    }
                }
            } catch (const Error& e) {
                EXPECT_EQ(e.code(), ErrorCode::EmptyDomain);
                EXPECT_TRUE(sols.empty());
            }
        }

        const Domain index = {draw(rng, -1, 2), draw(rng, 2, 5)};
        std::vector<Domain> all = xs;
        all.push_back(index);
        all.push_back(narrow(rng));
        const auto sols = test::box(all, [&](const test::Tuple& t) {
            const auto i = t[n];
            return i >= 1 && i <= static_cast<std::int64_t>(n) && t[static_cast<std::size_t>(i - 1)] == t[n + 1];
        });
        try {
            const auto r = bounds::element_domain_restrict(index, xs);
            for (const auto& t : sols) {
                EXPECT_TRUE(r.index.contains(t[n]));
                EXPECT_TRUE(r.value.contains(t[n + 1]));
            }
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::EmptyDomain);
            EXPECT_TRUE(sols.empty());
        }
    }
}

// The six right-hand sides, written out independently.
std::vector<std::int64_t> six(Domain n, Domain d, Domain p) {
    return {n.hi - p.lo,
            -p.lo + n.hi,
            n.hi - d.lo - p.lo + 1,
            -n.lo + d.hi + p.hi + 1,
            n.hi + d.hi - p.lo + 1,
            -n.lo - d.lo + p.hi + 1};
}

TEST(BigM, WorkedInstances) {
    EXPECT_EQ(six({-3, 3}, {-2, 2}, {-6, 6}), (std::vector<std::int64_t>{9, 9, 12, 12, 12, 12}));
    EXPECT_EQ(bounds::compute_big_M({-3, 3}, {-2, 2}, {-3, 3}, {-6, 6}), 12);
    // Singleton case: the six values are {0, 0, 0, 2, 2, 0}, so M = 2.
    EXPECT_EQ(six({0, 0}, {1, 1}, {0, 0}), (std::vector<std::int64_t>{0, 0, 0, 2, 2, 0}));
    EXPECT_EQ(bounds::compute_big_M({0, 0}, {1, 1}, {0, 0}, {0, 0}), 2);
    for (std::int64_t k = 1; k <= 4; ++k) {
        const Domain s{-k, k};
        const Domain p = bounds::product_bounds(s, s);
        EXPECT_EQ(six(s, s, p)[0], k + k * k);
        EXPECT_GE(bounds::compute_big_M(s, s, s, p), k + k * k);
    }
}

TEST(BigM, MinimalOnRandomTriples) {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 100; ++it) {
        const Domain n = narrow(rng), d = narrow(rng), q = narrow(rng);
        const Domain p = bounds::product_bounds(d, q);
        const auto rhs = six(n, d, p);
        const std::int64_t M = bounds::compute_big_M(n, d, q, p);
        EXPECT_TRUE(std::all_of(rhs.begin(), rhs.end(), [&](auto v) { return M >= v; }));
        EXPECT_TRUE(std::any_of(rhs.begin(), rhs.end(), [&](auto v) { return M - 1 < v; }));
    }
}

}  // namespace
}  // namespace fzq
