// Copyright 2026 The qgraph Authors
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

#include "qgraph/error.h"

namespace qgraph {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidOrder:
            return "InvalidOrder";
        case ErrorCode::InvalidVertex:
            return "InvalidVertex";
        case ErrorCode::UseSetLoop:
            return "UseSetLoop";
        case ErrorCode::ZeroTrace:
            return "ZeroTrace";
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::OrderMismatch:
            return "OrderMismatch";
        case ErrorCode::TooLarge:
            return "TooLarge";
        case ErrorCode::PositionOutOfRange:
            return "PositionOutOfRange";
        case ErrorCode::NeedsTwoQubits:
            return "NeedsTwoQubits";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::UnsupportedGate:
            return "UnsupportedGate";
        case ErrorCode::LengthMismatch:
            return "LengthMismatch";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace qgraph
