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

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace tamerel {

class FinMultiset;
class Monomial;

enum class ElementKind : std::uint8_t {
  star,
  atom,
  integer,
  tagged,
  pair,
  monomial,
  adjoined,
};

enum class Side : std::uint8_t { left, right };

/// An element of some carrier. Elements are small immutable values; the
/// recursive kinds share their children.
///
/// The built-in ordering is structural (kind first, then payload). For
/// int_line, sums and pairs it coincides with the canonical carrier order;
/// finite carriers impose their declared order through Carrier::compare.
class Element {
 public:
  Element() = default;

  static Element star();
  static Element atom(std::string name);
  static Element integer(std::int64_t n);
  static Element tagged(Side side, Element inner);
  static Element left(Element inner) { return tagged(Side::left, std::move(inner)); }
  static Element right(Element inner) { return tagged(Side::right, std::move(inner)); }
  static Element pair(Element first, Element second);
  static Element monomial(Monomial m);
  /// A basis label adjoined by a kernel construction; identified by index.
  static Element adjoined(std::size_t index, FinMultiset vec);

  ElementKind kind() const { return kind_; }

  const std::string& name() const { return name_; }
  std::int64_t integer_value() const { return num_; }
  Side side() const { return static_cast<Side>(num_); }
  const Element& inner() const { return (*parts_)[0]; }
  const Element& first() const { return (*parts_)[0]; }
  const Element& second() const { return (*parts_)[1]; }
  const Monomial& as_monomial() const { return *mono_; }
  std::size_t adjoined_index() const { return static_cast<std::size_t>(num_); }
  const FinMultiset& adjoined_vector() const { return *vec_; }

  std::strong_ordering operator<=>(const Element& other) const;
  bool operator==(const Element& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
  }

  std::string to_string() const;

 private:
  ElementKind kind_ = ElementKind::star;
  std::int64_t num_ = 0;
  std::string name_;
  std::shared_ptr<const std::vector<Element>> parts_;
  std::shared_ptr<const Monomial> mono_;
  std::shared_ptr<const FinMultiset> vec_;
};

/// x₁^{n₁}⋯x_k^{n_k}: a finitely supported map from variables to positive
/// exponents. The empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<Element, std::uint32_t>;

  Monomial() = default;

  /// Merges repeated variables and drops zero exponents.
  static Monomial from_powers(std::vector<Factor> powers);
  static Monomial variable(Element var, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t exponent(const Element& var) const;
  std::uint32_t degree() const;
  bool is_one() const { return factors_.empty(); }

  friend Monomial operator*(const Monomial& x, const Monomial& y);

  /// Graded order: total degree, then factors lexicographically.
  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

}  // namespace tamerel
