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

#ifndef FZQ_QIP_SERIALIZE_HPP
#define FZQ_QIP_SERIALIZE_HPP

#include <string>
#include <string_view>

#include "fzq/qip/problem.hpp"

namespace fzq::qip {

/// JSON text with a fixed key order; identical problems give identical bytes.
std::string serialize(const QipProblem& problem);

/// Inverse of serialize. Throws Error(SchemaError) on malformed input.
QipProblem deserialize(std::string_view text);

}  // namespace fzq::qip

#endif  // FZQ_QIP_SERIALIZE_HPP
