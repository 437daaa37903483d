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

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tamerel/relation.hpp"

namespace tamerel {

/// A finite bounded poset with an orthocomplement, given by its order table.
/// Elements are addressed by index into names().
class OrthoLattice {
 public:
  using Index = std::size_t;

  /// `leq` lists generating pairs a ≤ b; the reflexive-transitive closure is
  /// taken. `ortho` lists pairs (a, a⊥); each pair also sets b⊥ = a. Throws
  /// ParseError for unknown names or elements left without a complement.
  static OrthoLattice make(std::vector<std::string> names,
                           const std::vector<std::pair<std::string, std::string>>& leq,
                           const std::vector<std::pair<std::string, std::string>>& ortho);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Index> index_of(const std::string& name) const;
  const std::string& name(Index i) const { return names_.at(i); }

  bool leq(Index a, Index b) const { return leq_[a * size() + b]; }
  Index ortho(Index a) const { return ortho_.at(a); }
  /// Least / greatest element, when they exist.
  std::optional<Index> bottom() const;
  std::optional<Index> top() const;
  std::optional<Index> meet(Index a, Index b) const;
  std::optional<Index> join(Index a, Index b) const;

  /// The order as the pairs (a, b) with a ≤ b, a ≠ b.
  std::vector<std::pair<Index, Index>> strict_pairs() const;

  bool operator==(const OrthoLattice& other) const;

  /// The underlying finite carrier, elements named as in names().
  Carrier carrier() const;

 private:
  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<Index> ortho_;
};

/// Powerset of n points, complement as orthocomplement.
OrthoLattice boolean_algebra(std::size_t n);
/// 0, 1 and two incomparable complementary pairs a, a', b, b'.
OrthoLattice mo2();
/// The hexagon: chains 0 < x < y < 1 and 0 < y' < x' < 1. Ortholattice,
/// not orthomodular.
OrthoLattice o6();

struct OmlFailure {
  std::string axiom;
  std::vector<OrthoLattice::Index> witness;
};

struct OmlReport {
  std::vector<OmlFailure> failures;
  bool ok() const { return failures.empty(); }
  /// First failure of the given axiom, if any.
  const OmlFailure* find(const std::string& axiom) const;
};

/// Exhaustive check of the partial-order, lattice, ortho and orthomodular
/// axioms. Axiom names: reflexive, antisymmetric, transitive, bounded, meet,
/// join, involution, antitone, noncontradiction, excluded_middle,
/// orthomodular.
OmlReport validate_oml(const OrthoLattice& l);

/// An antitone Galois connection: f_sharp: source → target and
/// f_cosharp: target → source with x ≤ f_cosharp(y) ⟺ y ≤ f_sharp(x).
struct GaloisConnection {
  std::shared_ptr<const OrthoLattice> source;
  std::shared_ptr<const OrthoLattice> target;
  std::vector<OrthoLattice::Index> f_sharp;
  std::vector<OrthoLattice::Index> f_cosharp;

  bool operator==(const GaloisConnection& other) const;
};

/// f_sharp = f_cosharp = ⊥.
GaloisConnection identity_connection(std::shared_ptr<const OrthoLattice> l);
/// f(x) = ⊤ if x ≤ c else d; g(y) = ⊤ if y ≤ d else c.
GaloisConnection elementary_connection(std::shared_ptr<const OrthoLattice> source,
                                       std::shared_ptr<const OrthoLattice> target,
                                       OrthoLattice::Index c, OrthoLattice::Index d);
/// Pointwise meet of two connections between the same lattices.
GaloisConnection connection_meet(const GaloisConnection& a, const GaloisConnection& b);

/// Exhaustive adjunction check; the witness is the first failing (x, y).
std::optional<std::pair<OrthoLattice::Index, OrthoLattice::Index>> galois_witness(
    const GaloisConnection& g);
bool galois_check(const GaloisConnection& g);

/// r then s: (s∘r)_# = s_# ∘ ⊥ ∘ r_#, (s∘r)^# = r^# ∘ ⊥ ∘ s^#.
GaloisConnection galois_compose(const GaloisConnection& r, const GaloisConnection& s);
GaloisConnection galois_dagger(const GaloisConnection& r);

/// The tame relation of r over bool2: entry 1 iff (f_sharp(x⊥))⊥ ≤ y.
/// Throws NotTame if this disagrees with x⊥ ≤ f_cosharp(y⊥) anywhere.
BifMRel galois_to_tame(const GaloisConnection& r);
/// Inverse of galois_to_tame on tables it produces. Throws NotTame when a
/// row has no least element.
GaloisConnection galois_from_tame(const BifMRel& table, std::shared_ptr<const OrthoLattice> source,
                                  std::shared_ptr<const OrthoLattice> target);

}  // namespace tamerel
