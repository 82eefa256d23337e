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

#include "tgate/error.h"

namespace tgate {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::OverflowDomain:
            return "OverflowDomain";
        case ErrorCode::ToleranceNotMet:
            return "ToleranceNotMet";
        case ErrorCode::ParaxialDomain:
            return "ParaxialDomain";
        case ErrorCode::DegenerateGeometry:
            return "DegenerateGeometry";
        case ErrorCode::ZeroProjection:
            return "ZeroProjection";
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::DegenerateRatio:
            return "DegenerateRatio";
        case ErrorCode::OutOfRange:
            return "OutOfRange";
        case ErrorCode::NoSolution:
            return "NoSolution";
        case ErrorCode::ExpansionInvalid:
            return "ExpansionInvalid";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {
}

}  // namespace tgate
