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

#include <utility>
#include <vector>

#include "tamerel/relation.hpp"

namespace tamerel {

/// A tame formal distribution p ∈ S[[X + Y]] is held as the bifinite
/// relation monomials(X) → monomials(Y) with entry (φ, ψ) = p(φ ⋆ ψ).

/// φ ⋆ ψ: φ relabeled into the left summand times ψ relabeled into the right.
Monomial star(const Monomial& phi, const Monomial& psi);
/// χ restricted to each summand; the inverse of star.
std::pair<Monomial, Monomial> split(const Monomial& chi);

/// The distribution with the given finitely many coefficients; keys are
/// monomials over X + Y (elements of kind monomial).
BifMRel fdist_from_series(const std::vector<Element>& x_vars, const std::vector<Element>& y_vars,
                          const FinMultiset& coefficients);
/// The coefficients of an explicit distribution, keyed by φ ⋆ ψ.
FinMultiset fdist_to_series(const BifMRel& p);
/// p(χ) for χ over X + Y.
Value fdist_coefficient(const BifMRel& p, const Monomial& chi);

/// The diagonal distribution on monomials(vars): coefficient 1 exactly at
/// the χ whose two halves agree. Lazy.
BifMRel fdist_identity(SemiringTag tag, const std::vector<Element>& vars);

/// (p then q)(χ) = Σ_ψ p(χ_L ⋆ ψ)·q(ψ ⋆ χ_R), evaluated coefficient by
/// coefficient.
BifMRel fdist_compose_formula(const BifMRel& p, const BifMRel& q);
/// p†(χ) = p(χ_R ⋆ χ_L). No conjugation is applied.
BifMRel fdist_dagger_formula(const BifMRel& p);

/// p̂(q) = Σ_ψ q(ψ)·p(−, ψ): a finite polynomial over X.
FinMultiset phat_apply(const BifMRel& p, const FinMultiset& q);

}  // namespace tamerel
