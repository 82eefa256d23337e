// Copyright 2026 The tgate Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace tgate {

enum class ErrorCode {
    InvalidArgument,
    OverflowDomain,
    ToleranceNotMet,
    ParaxialDomain,
    DegenerateGeometry,
    ZeroProjection,
    NotUnitary,
    DegenerateRatio,
    OutOfRange,
    NoSolution,
    ExpansionInvalid,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every numerical operation in the library.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message);
    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

/// A tolerance failure that still carries the best estimate obtained.
template <typename Result>
class ToleranceNotMet : public Error {
   public:
    ToleranceNotMet(const std::string &message, Result best)
        : Error(ErrorCode::ToleranceNotMet, message), best_(std::move(best)) {
    }
    const Result &best() const noexcept {
        return best_;
    }

   private:
    Result best_;
};

}  // namespace tgate
