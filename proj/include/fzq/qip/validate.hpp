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

#ifndef FZQ_QIP_VALIDATE_HPP
#define FZQ_QIP_VALIDATE_HPP

#include <string>
#include <vector>

#include "fzq/qip/problem.hpp"

namespace fzq::qip {

struct Violation {
    std::string code;    // e.g. "product-order", "non-canonical expr"
    std::string entity;  // offending variable / row
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks every structural invariant of a QipProblem; empty result means valid.
///
/// Codes: duplicate-var, empty-domain, undeclared-var, non-canonical expr,
/// product-order, product-duplicate-result, product-exclusive,
/// onehot-bit-domain, onehot-duplicate-value, onehot-value-out-of-domain,
/// onehot-duplicate-owner, meta-size.
std::vector<Violation> validate(const QipProblem& problem);

}  // namespace fzq::qip

#endif  // FZQ_QIP_VALIDATE_HPP
