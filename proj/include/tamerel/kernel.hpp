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

#include <optional>
#include <vector>

#include "tamerel/relation.hpp"

namespace tamerel {

/// Default rank tolerance for float elimination.
inline constexpr double kDefaultKernelTol = 1e-10;

/// Elements of dom(r) with a nonzero row: the variables of the equations
/// r(−, y) = 0.
std::vector<Element> touched_elements(const BifMRel& r);

/// A basis of {φ over touched_elements(r) : Σₓ φ(x)·r(x, y) = 0 for all y}.
/// Pivots with |p| ≤ tol·max|r(x, y)| count as zero on float semirings.
/// Throws NotAField, InfiniteCarrier, NotExplicit.
std::vector<FinMultiset> left_nullspace_basis(const BifMRel& r, double tol = kDefaultKernelTol);

struct GramSchmidtResult {
  std::vector<FinMultiset> vectors;
  /// Per vector: false when its norm had no square root in the semiring and
  /// the vector was left orthogonal but unnormalized.
  std::vector<bool> normalized;

  bool all_normalized() const;
};

/// Orthogonalizes vs in order, then scales each vector to norm 1 where the
/// semiring allows. Throws DependentInput when a residual vanishes.
GramSchmidtResult gram_schmidt(const std::vector<FinMultiset>& vs, double tol = kDefaultKernelTol);

struct KernelResult {
  /// X_r, in structural order.
  std::vector<Element> touched;
  /// B_r; orthonormal when `normalized`.
  std::vector<FinMultiset> basis;
  Carrier kernel_object;
  /// Ker(r) → X: passthrough x ↦ 1·x, adjoined label i ↦ basis[i].
  BifMRel kernel_map;
  bool normalized = true;
  /// The relation whose kernel this is.
  std::optional<BifMRel> source;
};

/// The kernel, even when some basis vector could not be normalized
/// (`normalized` is then false and k†∘k is only diagonal).
KernelResult dagger_kernel_orthogonal(const BifMRel& r, double tol = kDefaultKernelTol);

/// The dagger kernel of r. Throws NormalizationFailed where
/// dagger_kernel_orthogonal would return an unnormalized basis.
KernelResult dagger_kernel(const BifMRel& r, double tol = kDefaultKernelTol);

/// The mediating map t′ with ker∘t′ = t for t: Z → X with r∘t = 0, i.e.
/// compose(t′, kernel_map) = t. Throws NotInKernel when r∘t ≠ 0 or the
/// reconstruction residual exceeds tol.
BifMRel factor_through_kernel(const KernelResult& k, const BifMRel& t,
                              double tol = kDefaultKernelTol);

}  // namespace tamerel
