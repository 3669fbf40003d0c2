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

#ifndef FZQ_ERROR_HPP
#define FZQ_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fzq {

enum class ErrorCode {
    SyntaxError,
    UnsupportedItem,
    UndeclaredIdentifier,
    ArityMismatch,
    KindMismatch,
    EmptyDomain,
    LengthMismatch,
    Overflow,
    UnsupportedExponent,
    ValueOutOfDomain,
    SchemaError,
    CapExceeded,
    Unsat,
};

std::string_view to_string(ErrorCode code);

/// 1-based position in a source file; line 0 means "no location".
struct SourceLoc {
    std::size_t line = 0;
    std::size_t column = 0;

    bool known() const { return line != 0; }
    friend bool operator==(const SourceLoc&, const SourceLoc&) = default;
};

/// Every failure in the library is reported as an Error carrying a code.
/// `subject` names the offending entity (identifier, builtin, ...).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string subject, std::string message, SourceLoc loc = {});

    ErrorCode code() const { return code_; }
    const std::string& subject() const { return subject_; }
    const SourceLoc& loc() const { return loc_; }

    /// `file:line:col: code: message`, or `file: code: message` without a location.
    std::string diagnostic(std::string_view file) const;

private:
    ErrorCode code_;
    std::string subject_;
    SourceLoc loc_;
};

}  // namespace fzq

#endif  // FZQ_ERROR_HPP
