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

#ifndef FZQ_DOMAIN_HPP
#define FZQ_DOMAIN_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace fzq {

/// Closed integer interval [lo, hi]. A Domain with lo > hi is empty; most
/// APIs reject empty domains, so construct through `make` when unsure.
struct Domain {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    static constexpr Domain binary() { return {0, 1}; }
    static constexpr Domain singleton(std::int64_t v) { return {v, v}; }

    bool empty() const { return lo > hi; }
    bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
    bool is_fixed() const { return lo == hi; }

    /// Number of values, saturating at UINT64_MAX.
    std::uint64_t size() const;

    std::optional<Domain> intersect(const Domain& other) const;

    std::string str() const;

    friend bool operator==(const Domain&, const Domain&) = default;
};

std::ostream& operator<<(std::ostream& os, const Domain& d);

}  // namespace fzq

#endif  // FZQ_DOMAIN_HPP
