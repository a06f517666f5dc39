// Copyright 2026 The quasiprob Authors
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
#include "quasiprob/error.hpp"

namespace quasiprob {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotSquare:
        return "not square";
    case ErrorCode::DimensionMismatch:
        return "dimension mismatch";
    case ErrorCode::NotPowerOfTwo:
        return "dimension is not a power of two";
    case ErrorCode::NotHermitian:
        return "not Hermitian";
    case ErrorCode::UnknownLabel:
        return "unknown label";
    case ErrorCode::UnphysicalState:
        return "unphysical state";
    case ErrorCode::InvalidTrace:
        return "invalid trace";
    case ErrorCode::InvalidDensity:
        return "invalid density matrix";
    case ErrorCode::InvalidBasis:
        return "invalid measurement basis";
    case ErrorCode::OrthogonalProjectors:
        return "orthogonal projectors";
    case ErrorCode::IndexOutOfRange:
        return "index out of range";
    case ErrorCode::MalformedInput:
        return "malformed input";
    case ErrorCode::InternalConsistency:
        return "internal consistency failure";
    }
    return "unknown error";
}

} // namespace quasiprob
