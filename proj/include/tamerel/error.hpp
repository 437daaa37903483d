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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamerel {

enum class ErrorCode {
  mixed_semiring,
  carrier_mismatch,
  irrational_residue,
  negative,
  not_representable,
  zero_vector,
  division_unavailable,
  negation_unavailable,
  infinite_carrier,
  non_square,
  not_unitary,
  not_a_field,
  dependent_input,
  normalization_failed,
  not_in_kernel,
  entry_out_of_range,
  not_tame,
  not_injective,
  not_explicit,
  parse_error,
  coherence_error,
  unknown_builtin,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library. The code identifies the failure
/// class; the message carries context (element names, JSON paths).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tamerel
