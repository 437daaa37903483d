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
#include <memory>
#include <string>
#include <vector>

#include "tamerel/element.hpp"
#include "tamerel/multiset.hpp"

namespace tamerel {

enum class CarrierKind : std::uint8_t {
  finite,
  int_line,
  sum,
  pair,
  unit,
  empty,
  monomials,
  basis_extension,
};

/// An object of the category: a finite named set or a countable domain
/// (the integers, sums, pairs and monomials built from them).
///
/// Canonical element order: finite carriers by declared order, int_line by
/// integer order, sums L before R, pairs lexicographically, monomials by
/// degree then lexicographically, basis extensions passthrough elements
/// first then adjoined vectors by index.
class Carrier {
 public:
  Carrier();

  static Carrier finite(std::vector<std::string> names);
  static Carrier int_line();
  static Carrier sum(Carrier left, Carrier right);
  static Carrier pair(Carrier first, Carrier second);
  static Carrier unit();
  static Carrier empty();
  static Carrier monomials(std::vector<Element> variables);
  /// (base − passthrough-complement) ∪ adjoined: the kernel object. The
  /// passthrough list must consist of base elements.
  static Carrier basis_extension(Carrier base, std::vector<Element> passthrough,
                                 std::vector<FinMultiset> adjoined);

  CarrierKind kind() const;

  const std::vector<std::string>& names() const;
  /// Components of sum and pair carriers.
  const Carrier& left() const;
  const Carrier& right() const;
  const std::vector<Element>& variables() const;
  const Carrier& base() const;
  const std::vector<Element>& passthrough() const;
  const std::vector<FinMultiset>& adjoined() const;

  bool is_finite() const;
  /// Number of elements; throws InfiniteCarrier.
  std::size_t size() const;
  /// All elements in canonical order; throws InfiniteCarrier.
  std::vector<Element> elements() const;
  bool contains(const Element& e) const;
  /// Three-way canonical comparison of two members.
  int compare(const Element& a, const Element& b) const;
  /// A finite sample: integers restricted to [lo, hi], monomials to degree
  /// ≤ hi; finite carriers are returned whole.
  std::vector<Element> window(std::int64_t lo, std::int64_t hi) const;

  bool operator==(const Carrier& other) const;
  std::string to_string() const;

  struct Impl;

 private:
  explicit Carrier(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Every monomial over vars of total degree ≤ max_degree, in canonical order.
std::vector<Monomial> monomials_up_to_degree(const std::vector<Element>& vars,
                                             std::uint32_t max_degree);

}  // namespace tamerel
