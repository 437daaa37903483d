// Copyright 2026 The tamerel Authors
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

#include "tamerel/error.hpp"

namespace tamerel {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::mixed_semiring: return "MixedSemiring";
    case ErrorCode::carrier_mismatch: return "CarrierMismatch";
    case ErrorCode::irrational_residue: return "IrrationalResidue";
    case ErrorCode::negative: return "Negative";
    case ErrorCode::not_representable: return "NotRepresentable";
    case ErrorCode::zero_vector: return "ZeroVector";
    case ErrorCode::division_unavailable: return "DivisionUnavailable";
    case ErrorCode::negation_unavailable: return "NegationUnavailable";
    case ErrorCode::infinite_carrier: return "InfiniteCarrier";
    case ErrorCode::non_square: return "NonSquare";
    case ErrorCode::not_unitary: return "NotUnitary";
    case ErrorCode::not_a_field: return "NotAField";
    case ErrorCode::dependent_input: return "DependentInput";
    case ErrorCode::normalization_failed: return "NormalizationFailed";
    case ErrorCode::not_in_kernel: return "NotInKernel";
    case ErrorCode::entry_out_of_range: return "EntryOutOfRange";
    case ErrorCode::not_tame: return "NotTame";
    case ErrorCode::not_injective: return "NotInjective";
    case ErrorCode::not_explicit: return "NotExplicit";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::coherence_error: return "CoherenceError";
    case ErrorCode::unknown_builtin: return "UnknownBuiltin";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace tamerel
