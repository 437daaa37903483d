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
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tamerel/relation.hpp"

namespace tamerel {

/// A partial injection X ⇀ Y given by mutually inverse partial maps.
class PartialInjection {
 public:
  using Map = std::function<std::optional<Element>(const Element&)>;

  PartialInjection() = default;

  /// Finite graph; throws NotInjective if two pairs share an x or a y and
  /// CarrierMismatch for non-members.
  static PartialInjection from_pairs(Carrier dom, Carrier cod,
                                     const std::vector<std::pair<Element, Element>>& pairs);
  /// Computable maps over arbitrary carriers; mutual inverseness is trusted
  /// (see is_mutually_inverse).
  static PartialInjection lazy(Carrier dom, Carrier cod, Map fwd, Map bwd);
  static PartialInjection identity(const Carrier& x);

  const Carrier& dom() const { return dom_; }
  const Carrier& cod() const { return cod_; }
  bool is_explicit() const { return explicit_; }

  std::optional<Element> fwd(const Element& x) const;
  std::optional<Element> bwd(const Element& y) const;
  /// The graph in structural x order. Explicit only.
  std::vector<std::pair<Element, Element>> pairs() const;

 private:
  Carrier dom_;
  Carrier cod_;
  bool explicit_ = true;
  std::map<Element, Element> fwd_map_;
  std::map<Element, Element> bwd_map_;
  Map fwd_fn_;
  Map bwd_fn_;
};

/// f then g.
PartialInjection pinj_compose(const PartialInjection& f, const PartialInjection& g);
PartialInjection pinj_dagger(const PartialInjection& f);
/// fwd(x) = y ⟺ bwd(y) = x; exhaustive when explicit, on the samples otherwise.
bool is_mutually_inverse(const PartialInjection& f, const std::vector<Element>& dom_samples = {},
                         const std::vector<Element>& cod_samples = {});
bool pinj_equal(const PartialInjection& f, const PartialInjection& g);

/// The 0/1 relation over bool2 with entry 1 iff fwd(x) = y.
BifMRel pinj_embed(const PartialInjection& f);
/// A bool2 relation read in another semiring through {0, 1} ↪ S.
BifMRel embed_bool(const BifMRel& r, SemiringTag tag);

/// A Boolean relation given by a membership predicate; used to lint
/// candidate relations before they are turned into tables.
struct PredicateRelation {
  Carrier dom;
  Carrier cod;
  std::function<bool(const Element&, const Element&)> holds;
};

struct BifinitenessReport {
  bool bifinite = true;
  /// The verdict only covers a window; it is a heuristic, never a proof.
  bool partial = false;
  /// A row or column whose support kept growing.
  std::optional<Element> witness;
};

/// Explicit relations are bifinite by construction.
BifinitenessReport is_bifinite_bool(const BifMRel& r);
/// Window-growth lint: rows and columns indexed by window(lo, hi) are
/// counted in two wider windows; growth between them flags the relation.
BifinitenessReport is_bifinite_bool(const PredicateRelation& r, std::int64_t lo, std::int64_t hi);

/// Rows and columns each sum to 1 over finite carriers (rat exactly, f64
/// within tol). Throws EntryOutOfRange for entries outside [0, 1] or a
/// semiring other than rat and f64.
bool is_bistochastic(const BifMRel& r, double tol = 1e-9);

}  // namespace tamerel
