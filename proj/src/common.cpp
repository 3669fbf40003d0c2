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

#include <algorithm>
#include <limits>
#include <sstream>

#include "fzq/domain.hpp"
#include "fzq/error.hpp"

namespace fzq {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnsupportedItem: return "UnsupportedItem";
        case ErrorCode::UndeclaredIdentifier: return "UndeclaredIdentifier";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::KindMismatch: return "KindMismatch";
        case ErrorCode::EmptyDomain: return "EmptyDomain";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::UnsupportedExponent: return "UnsupportedExponent";
        case ErrorCode::ValueOutOfDomain: return "ValueOutOfDomain";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::Unsat: return "Unsat";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, std::string subject, std::string message, SourceLoc loc)
    : std::runtime_error(std::move(message)), code_(code), subject_(std::move(subject)), loc_(loc) {}

std::string Error::diagnostic(std::string_view file) const {
    std::ostringstream os;
    os << file << ':';
    if (loc_.known()) {
        os << loc_.line << ':' << loc_.column << ':';
    }
    os << ' ' << to_string(code_) << ": " << what();
    return os.str();
}

std::uint64_t Domain::size() const {
    if (empty()) {
        return 0;
    }
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == std::numeric_limits<std::uint64_t>::max()) {
        return span;
    }
    return span + 1;
}

std::optional<Domain> Domain::intersect(const Domain& other) const {
    Domain d{std::max(lo, other.lo), std::min(hi, other.hi)};
    if (d.empty()) {
        return std::nullopt;
    }
    return d;
}

std::string Domain::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Domain& d) {
    return os << '[' << d.lo << ',' << d.hi << ']';
}

}  // namespace fzq
