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

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tamerel/element.hpp"
#include "tamerel/semiring.hpp"

namespace tamerel {

/// A finitely supported map from carrier elements to semiring values: an
/// element of the free module M_S(X). Zero values are never stored, so a
/// lookup of an absent key yields zero.
class FinMultiset {
 public:
  using Entries = std::map<Element, Value>;

  explicit FinMultiset(SemiringTag tag = SemiringTag::rat) : tag_(tag) {}

  /// The basis vector 1·x.
  static FinMultiset unit(SemiringTag tag, const Element& x);
  static FinMultiset from_entries(SemiringTag tag,
                                  std::vector<std::pair<Element, Value>> entries);

  SemiringTag tag() const { return tag_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Entries::const_iterator begin() const { return entries_.begin(); }
  Entries::const_iterator end() const { return entries_.end(); }
  const Entries& entries() const { return entries_; }

  Value at(const Element& x) const;
  bool contains(const Element& x) const { return entries_.count(x) != 0; }

  /// Adds v to the coefficient of x, dropping the entry if it cancels.
  void accumulate(const Element& x, const Value& v);
  /// Adds s·other into this multiset.
  void accumulate_scaled(const Value& s, const FinMultiset& other);

  FinMultiset scaled(const Value& s) const;
  FinMultiset conjugated() const;

  bool operator==(const FinMultiset& other) const {
    return tag_ == other.tag_ && entries_ == other.entries_;
  }

  std::string to_string() const;

 private:
  SemiringTag tag_;
  Entries entries_;
};

/// Σᵢ sᵢ·φᵢ over a shared semiring; throws MixedSemiring otherwise.
FinMultiset linear_combine(SemiringTag tag,
                           std::span<const std::pair<Value, FinMultiset>> terms);

/// Σₓ conj(φ(x))·ψ(x). Conjugate-linear in the first argument.
Value inner(const FinMultiset& phi, const FinMultiset& psi);
/// inner(φ, φ).
Value norm_sq(const FinMultiset& phi);
/// φ scaled to unit norm. Throws ZeroVector or NotRepresentable.
FinMultiset normalize(const FinMultiset& phi);
/// Pairwise inners are 0 and self-inners 1, within tol on float semirings.
bool is_orthonormal(std::span<const FinMultiset> vs, double tol);

/// Entrywise approx_equal over the union of supports.
bool approx_equal(const FinMultiset& x, const FinMultiset& y, double tol);

}  // namespace tamerel
