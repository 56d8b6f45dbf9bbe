// Copyright 2026 The fewweight Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace fewweight {

/// Error categories. The numeric values double as CLI exit codes.
enum class ErrorKind : int {
    validation = 2,    ///< bad parameters or domain violation
    cap_exceeded = 3,  ///< field / enumeration / pair cap exceeded
    mismatch = 4,      ///< a verification check failed
    internal = 5,      ///< broken internal assertion (e.g. non-integral weight)
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::validation: return "validation";
        case ErrorKind::cap_exceeded: return "cap_exceeded";
        case ErrorKind::mismatch: return "mismatch";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

/// Library-wide exception. `condition` is a stable machine-readable id
/// (e.g. "h_not_divisor"), `what()` is the human-readable message.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string condition, const std::string& message)
        : std::runtime_error(message), kind_(kind), condition_(std::move(condition)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& condition() const noexcept { return condition_; }
    int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
    std::string condition_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string condition, const std::string& message) {
    throw Error(kind, std::move(condition), message);
}

/// Resource caps shared by the field, enumeration and pair-cover stages.
struct Limits {
    std::uint64_t field_cap = std::uint64_t{1} << 22;
    std::uint64_t enum_cap = std::uint64_t{1} << 24;
    std::uint64_t pair_cap = 729;
};

}  // namespace fewweight
