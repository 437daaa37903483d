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

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tamerel/carrier.hpp"
#include "tamerel/multiset.hpp"

namespace tamerel {

struct Entry {
  Element x;
  Element y;
  Value value;
};

/// A bifinite multirelation r: X × Y → S, stored by its row action
/// x ↦ r(x, −) and its column action y ↦ r(−, y).
///
/// Explicit relations materialize both tables and have finite total
/// support. Lazy relations hold pure functions for both actions over a
/// countable carrier; their bifiniteness is trusted and coherence is
/// sample-checked (see check_coherent).
///
/// The dagger is a constant-time view: rows and columns swap roles and
/// values are conjugated on access.
class BifMRel {
 public:
  using Table = std::map<Element, FinMultiset>;
  using ActionFn = std::function<FinMultiset(const Element&)>;

  BifMRel();

  /// Explicit relation; repeated (x, y) keys accumulate. Throws
  /// CarrierMismatch for elements outside dom/cod.
  static BifMRel from_entries(SemiringTag tag, Carrier dom, Carrier cod,
                              const std::vector<Entry>& entries);
  /// Explicit relation from its rows; columns are derived.
  static BifMRel from_rows(SemiringTag tag, Carrier dom, Carrier cod, Table rows);
  /// Explicit relation from its columns; rows are derived.
  static BifMRel from_cols(SemiringTag tag, Carrier dom, Carrier cod, Table cols);
  /// Explicit relation from independently supplied tables. No coherence
  /// check is made; use check_coherent.
  static BifMRel from_tables_unchecked(SemiringTag tag, Carrier dom, Carrier cod, Table rows,
                                       Table cols);
  /// Lazy relation. `builtin` names a library-provided relation so that it
  /// can be serialized by reference.
  static BifMRel lazy(SemiringTag tag, Carrier dom, Carrier cod, ActionFn row, ActionFn col,
                      std::string builtin = {});

  SemiringTag tag() const;
  const Carrier& dom() const { return dom_; }
  const Carrier& cod() const { return cod_; }
  bool is_explicit() const;
  /// Builtin name for serialization by reference; empty for daggered views.
  std::string builtin_name() const;

  /// r(x, −) as a multiset over cod.
  FinMultiset row(const Element& x) const;
  /// r(−, y) as a multiset over dom.
  FinMultiset col(const Element& y) const;
  Value entry(const Element& x, const Element& y) const;

  /// Domain elements with a nonzero row, structural order. Explicit only.
  std::vector<Element> row_support() const;
  /// Codomain elements with a nonzero column, structural order. Explicit only.
  std::vector<Element> col_support() const;
  /// All nonzero entries in structural (x, y) order. Explicit only.
  std::vector<Entry> entries() const;
  std::size_t nnz() const;

  BifMRel dagger() const;

 private:
  struct Impl;
  BifMRel(std::shared_ptr<const Impl> impl, bool flipped, Carrier dom, Carrier cod)
      : impl_(std::move(impl)), flipped_(flipped), dom_(std::move(dom)), cod_(std::move(cod)) {}
  void require_explicit(const char* what) const;

  std::shared_ptr<const Impl> impl_;
  bool flipped_ = false;
  Carrier dom_;
  Carrier cod_;
};

inline BifMRel dagger(const BifMRel& r) { return r.dagger(); }

// Category structure ---------------------------------------------------------

BifMRel identity(SemiringTag tag, const Carrier& x);
BifMRel zero_rel(SemiringTag tag, const Carrier& x, const Carrier& y);
/// r then s: (s∘r)(x, z) = Σ_y r(x, y)·s(y, z). The result is explicit when
/// either factor is; rows are computed in parallel.
BifMRel compose(const BifMRel& r, const BifMRel& s);
BifMRel hom_add(const BifMRel& r, const BifMRel& s);
BifMRel scale(const Value& c, const BifMRel& r);
BifMRel tensor(const BifMRel& r1, const BifMRel& r2);

/// Relation whose rows are the graph of a partial bijection fwd with
/// inverse bwd, valued 1.
BifMRel graph_relation(SemiringTag tag, const Carrier& dom, const Carrier& cod,
                       std::function<std::optional<Element>(const Element&)> fwd,
                       std::function<std::optional<Element>(const Element&)> bwd,
                       std::string builtin = {});

// Biproducts -----------------------------------------------------------------

/// κᵢ: Xᵢ → X₁ + X₂ for i ∈ {1, 2}.
BifMRel coprojection(int i, SemiringTag tag, const Carrier& x1, const Carrier& x2);
/// πᵢ = κᵢ†.
BifMRel projection(int i, SemiringTag tag, const Carrier& x1, const Carrier& x2);
/// ⟨r₁, r₂⟩: Z → X₁ + X₂.
BifMRel tuple(const BifMRel& r1, const BifMRel& r2);
/// [t₁, t₂]: X₁ + X₂ → Z.
BifMRel cotuple(const BifMRel& t1, const BifMRel& t2);
/// r₁ ⊕ r₂: X₁ + X₂ → Y₁ + Y₂.
BifMRel oplus(const BifMRel& r1, const BifMRel& r2);

// Monoidal isomorphisms ------------------------------------------------------

enum class StructuralIso { lambda_unit, rho_unit, gamma_swap, alpha_assoc, distribute };

/// λ: 1 × X → X.
BifMRel lambda_unit(SemiringTag tag, const Carrier& x);
/// ρ: X × 1 → X.
BifMRel rho_unit(SemiringTag tag, const Carrier& x);
/// γ: X × Y → Y × X.
BifMRel gamma_swap(SemiringTag tag, const Carrier& x, const Carrier& y);
/// α: (X × Y) × Z → X × (Y × Z).
BifMRel alpha_assoc(SemiringTag tag, const Carrier& x, const Carrier& y, const Carrier& z);
/// X × (Y₁ + Y₂) → (X × Y₁) + (X × Y₂).
BifMRel distribute(SemiringTag tag, const Carrier& x, const Carrier& y1, const Carrier& y2);
/// Dispatch by name; `carriers` supplies 1 (λ, ρ), 2 (γ) or 3 (α, distribute).
BifMRel structural_iso(StructuralIso which, SemiringTag tag, std::span<const Carrier> carriers);

// Trace and compact structure ------------------------------------------------

/// tr(s): X → Y for s: X × A → Y × A, A finite. Default is the undivided
/// diagonal sum, which is the trace induced by compact_unit_counit. With
/// `normalized` every term is divided by #A·1.
BifMRel trace(const BifMRel& s, bool normalized = false);

struct CompactStructure {
  BifMRel unit;    // η: 1 → X × X
  BifMRel counit;  // ε: X × X → 1
};
CompactStructure compact_unit_counit(SemiringTag tag, const Carrier& x);

// States and scalars ---------------------------------------------------------

/// (r·σ)(y) = Σₓ σ(x)·r(x, y).
FinMultiset apply_state(const BifMRel& r, const FinMultiset& sigma);
/// σ viewed as a morphism 1 → X.
BifMRel state_relation(const Carrier& x, const FinMultiset& sigma);
BifMRel scalar_relation(const Value& s);
Value scalar_value(const BifMRel& r);

// Predicates -----------------------------------------------------------------

struct Classification {
  bool dagger_mono = false;
  bool dagger_epi = false;
  bool unitary = false;
  /// Unset when dom ≠ cod.
  std::optional<bool> self_adjoint;
  std::optional<bool> projection;
  /// Verdicts only cover a finite window of a lazy relation.
  bool partial = false;
  /// The composite route (r†∘r = id) and the orthonormal-rows route agree,
  /// and likewise for the epi side.
  bool routes_agree = true;
};

struct Window {
  std::vector<Element> dom;
  std::vector<Element> cod;
};

/// Explicit relations are classified exhaustively; lazy ones need a window.
Classification classify(const BifMRel& r, double tol,
                        const std::optional<Window>& window = std::nullopt);
bool is_dagger_mono(const BifMRel& r, double tol);
bool is_dagger_epi(const BifMRel& r, double tol);
bool is_unitary(const BifMRel& r, double tol);
/// Throws NonSquare when dom ≠ cod.
bool is_self_adjoint(const BifMRel& r, double tol);
bool is_projection(const BifMRel& r, double tol);

/// Entrywise ‖r(x, y)‖² as a rat (exact semirings) or f64 relation. For
/// explicit input on finite carriers rows and columns are re-checked to sum
/// to 1 (NotUnitary otherwise).
BifMRel norm_sq_extract(const BifMRel& r, double tol = 1e-9);
/// Σₓ ‖q(*, x)‖² = 1 for q: 1 → X.
bool is_unit_state(const BifMRel& q, double tol = 1e-9);

struct CoherenceViolation {
  Element x;
  Element y;
  Value row_value;
  Value col_value;
};
struct CoherenceReport {
  std::vector<CoherenceViolation> violations;
  bool exhaustive = false;
  bool ok() const { return violations.empty(); }
};
/// Explicit: every stored entry is checked from both sides. Lazy: rows of
/// the samples, columns of the cod samples, and their one-step
/// neighbourhoods.
CoherenceReport check_coherent(const BifMRel& r, const std::vector<Element>& dom_samples = {},
                               const std::vector<Element>& cod_samples = {});

/// Entrywise equality of explicit relations (same carriers and semiring),
/// within tol on float semirings.
bool rel_approx_equal(const BifMRel& a, const BifMRel& b, double tol);
/// Row-by-row equality restricted to the given domain elements.
bool rel_approx_equal_on(const BifMRel& a, const BifMRel& b, std::span<const Element> rows,
                         double tol);

}  // namespace tamerel
