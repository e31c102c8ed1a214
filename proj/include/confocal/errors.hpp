/*
   Copyright 2026 The confocal authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CONFOCAL_ERRORS_HPP
#define CONFOCAL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace confocal {

enum class ErrorCode {
    InvalidArgument,
    ParseError,
    ZeroPolynomial,
    DegreeTooLow,
    NotDivisible,
    NonConvergence,
    DegenerateFocalPolynomial,
    NormalizationFailure,
    DegenerateCurve,
    SingularInputRejected,
    SchemeOnIsotropicConic,
    ToleranceAmbiguity,
    TooFewFoci,
    GenerationExhausted,
    CensusMismatch,
    ClusterAmbiguity,
    Inadmissible,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::DegreeTooLow: return "DegreeTooLow";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::DegenerateFocalPolynomial: return "DegenerateFocalPolynomial";
        case ErrorCode::NormalizationFailure: return "NormalizationFailure";
        case ErrorCode::DegenerateCurve: return "DegenerateCurve";
        case ErrorCode::SingularInputRejected: return "SingularInputRejected";
        case ErrorCode::SchemeOnIsotropicConic: return "SchemeOnIsotropicConic";
        case ErrorCode::ToleranceAmbiguity: return "ToleranceAmbiguity";
        case ErrorCode::TooFewFoci: return "TooFewFoci";
        case ErrorCode::GenerationExhausted: return "GenerationExhausted";
        case ErrorCode::CensusMismatch: return "CensusMismatch";
        case ErrorCode::ClusterAmbiguity: return "ClusterAmbiguity";
        case ErrorCode::Inadmissible: return "Inadmissible";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace confocal

#endif  // CONFOCAL_ERRORS_HPP
