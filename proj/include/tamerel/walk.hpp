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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamerel/relation.hpp"

namespace tamerel {

inline constexpr const char* kHadamardWalkBuiltin = "hadamard_walk";

/// ℤ + ℤ: κ₁ (left) and κ₂ (right) copies of the integers.
Carrier walk_carrier();

/// The Hadamard walk on ℤ + ℤ, lazy:
///   κ₁n ↦ (1/√2)·κ₁(n−1) + (1/√2)·κ₂(n+1)
///   κ₂n ↦ (1/√2)·κ₁(n−1) − (1/√2)·κ₂(n+1)
/// Available over f64, c64, qsqrt2 and qisqrt2.
BifMRel hadamard_step(SemiringTag tag = SemiringTag::qisqrt2);

/// 1·κ₁(n) or 1·κ₂(n).
FinMultiset walk_basis_state(SemiringTag tag, Side side, std::int64_t position);
/// (1/√2)·κ₁(0) + (i/√2)·κ₂(0), over qisqrt2 or c64.
FinMultiset walk_symmetric_state(SemiringTag tag = SemiringTag::qisqrt2);

/// Throws CarrierMismatch for elements outside ℤ + ℤ and NotUnitary when
/// the total probability differs from 1 (exactly, or by more than tol).
void validate_walk_state(const FinMultiset& state, double tol = 1e-9);

enum class StepKernel {
  /// Push every amplitude through its row, one element at a time.
  serial_scatter,
  /// Each target amplitude gathered from its column, targets in parallel.
  parallel_gather,
};

/// One application of q.
FinMultiset walk_step(const BifMRel& q, const FinMultiset& state,
                      StepKernel kernel = StepKernel::parallel_gather);
/// `steps` applications of q to the validated initial state.
FinMultiset walk_run(const FinMultiset& init, int steps, const BifMRel& q,
                     StepKernel kernel = StepKernel::parallel_gather);
/// walk_run with hadamard_step over the initial state's semiring.
FinMultiset walk_run(const FinMultiset& init, int steps);
/// Every step 0..steps, inclusive.
std::vector<FinMultiset> walk_trajectory(const FinMultiset& init, int steps, const BifMRel& q,
                                         StepKernel kernel = StepKernel::parallel_gather);
/// Independent runs, one per initial state, spread over threads; each run
/// uses the serial kernel.
std::vector<FinMultiset> walk_run_many(const std::vector<FinMultiset>& inits, int steps,
                                       const BifMRel& q);

struct ProbabilityRow {
  /// Set only in the joint (branch, position) table.
  std::optional<Side> branch;
  std::int64_t position = 0;
  /// rat for exact semirings, f64 otherwise.
  Value probability;
};

/// Per-position ‖amplitude‖², summed over the coin when marginalize_coin.
/// Rows are ordered by position, then branch (left first).
std::vector<ProbabilityRow> distribution(const FinMultiset& state, bool marginalize_coin = true);
/// Σ of the probabilities.
Value total_probability(const FinMultiset& state);

struct WindowFailure {
  /// "mono" for q†∘q, "epi" for q∘q†.
  std::string law;
  Element u;
  Element v;
  Value value;
};

struct WindowReport {
  bool ok = true;
  /// Pairs (u, v) in the window whose entry depends only on window elements.
  std::size_t verified = 0;
  /// Pairs whose entry needs elements outside the window.
  std::size_t indeterminate = 0;
  std::vector<WindowFailure> failures;
};

/// Checks (q†∘q)(u, v) = δ(u, v) and (q∘q†)(u, v) = δ(u, v) for u, v in
/// ℤ + ℤ with positions in [lo, hi].
WindowReport verify_window_unitary(const BifMRel& q, std::int64_t lo, std::int64_t hi,
                                   double tol = 1e-9);

}  // namespace tamerel
