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

#ifndef FZQ_BOUNDS_INTERVAL_BOUNDS_HPP
#define FZQ_BOUNDS_INTERVAL_BOUNDS_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fzq/domain.hpp"

namespace fzq::bounds {

/// Bounds of sum(coeffs[i] * vars[i]) - c. Throws LengthMismatch, Overflow.
Domain lin_bounds(std::span<const std::int64_t> coeffs, std::span<const Domain> vars, std::int64_t c);

/// Hull of the four corner products. Throws Overflow.
Domain product_bounds(const Domain& a, const Domain& b);

/// Bounds of |x| for x in d.
Domain abs_bounds(const Domain& d);

struct ElementRestriction {
    Domain index;
    Domain value;
};

/// Index clamped to [1, n]; value hull over the reachable indices.
/// `values[k]` bounds the element at index k + 1. Throws EmptyDomain.
ElementRestriction element_domain_restrict(const Domain& index, std::span<const Domain> values);

enum class MinMax { Max, Min };

struct MinMaxRestriction {
    Domain m;
    std::vector<Domain> xs;
};

/// m = max(xs) or m = min(xs). Throws EmptyDomain.
MinMaxRestriction minmax_domain_restrict(const Domain& m, std::span<const Domain> xs, MinMax mode);

/// Smallest M accepted by the big-M system of integer division, where
/// p = product_bounds(d, q). Throws Overflow.
std::int64_t compute_big_M(const Domain& n, const Domain& d, const Domain& q, const Domain& p);

}  // namespace fzq::bounds

#endif  // FZQ_BOUNDS_INTERVAL_BOUNDS_HPP
