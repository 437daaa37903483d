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

#include "tamerel/element.hpp"

#include <algorithm>
#include <map>

#include "tamerel/multiset.hpp"

namespace tamerel {

Element Element::star() { return Element(); }

Element Element::atom(std::string name) {
  Element e;
  e.kind_ = ElementKind::atom;
  e.name_ = std::move(name);
  return e;
}

Element Element::integer(std::int64_t n) {
  Element e;
  e.kind_ = ElementKind::integer;
  e.num_ = n;
  return e;
}

Element Element::tagged(Side side, Element inner) {
  Element e;
  e.kind_ = ElementKind::tagged;
  e.num_ = static_cast<std::int64_t>(side);
  e.parts_ = std::make_shared<const std::vector<Element>>(1, std::move(inner));
  return e;
}

Element Element::pair(Element first, Element second) {
  Element e;
  e.kind_ = ElementKind::pair;
  std::vector<Element> parts;
  parts.reserve(2);
  parts.push_back(std::move(first));
  parts.push_back(std::move(second));
  e.parts_ = std::make_shared<const std::vector<Element>>(std::move(parts));
  return e;
}

Element Element::monomial(Monomial m) {
  Element e;
  e.kind_ = ElementKind::monomial;
  e.mono_ = std::make_shared<const Monomial>(std::move(m));
  return e;
}

Element Element::adjoined(std::size_t index, FinMultiset vec) {
  Element e;
  e.kind_ = ElementKind::adjoined;
  e.num_ = static_cast<std::int64_t>(index);
  e.vec_ = std::make_shared<const FinMultiset>(std::move(vec));
  return e;
}

std::strong_ordering Element::operator<=>(const Element& other) const {
  if (auto c = kind_ <=> other.kind_; c != 0) return c;
  switch (kind_) {
    case ElementKind::star: return std::strong_ordering::equal;
    case ElementKind::atom: return name_ <=> other.name_;
    case ElementKind::integer:
    case ElementKind::adjoined: return num_ <=> other.num_;
    case ElementKind::tagged:
      if (auto c = num_ <=> other.num_; c != 0) return c;
      return inner() <=> other.inner();
    case ElementKind::pair:
      if (auto c = first() <=> other.first(); c != 0) return c;
      return second() <=> other.second();
    case ElementKind::monomial: return *mono_ <=> *other.mono_;
  }
  return std::strong_ordering::equal;
}

std::string Element::to_string() const {
  switch (kind_) {
    case ElementKind::star: return "*";
    case ElementKind::atom: return name_;
    case ElementKind::integer: return std::to_string(num_);
    case ElementKind::tagged:
      return std::string(side() == Side::left ? "L" : "R") + "(" + inner().to_string() + ")";
    case ElementKind::pair: return "(" + first().to_string() + "," + second().to_string() + ")";
    case ElementKind::monomial: return mono_->to_string();
    case ElementKind::adjoined: return "vec#" + std::to_string(num_);
  }
  return "?";
}

Monomial Monomial::from_powers(std::vector<Factor> powers) {
  std::map<Element, std::uint32_t> merged;
  for (auto& [var, exp] : powers) {
    if (exp != 0) merged[var] += exp;
  }
  Monomial m;
  m.factors_.assign(merged.begin(), merged.end());
  return m;
}

Monomial Monomial::variable(Element var, std::uint32_t exponent) {
  return from_powers({{std::move(var), exponent}});
}

std::uint32_t Monomial::exponent(const Element& var) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                             [](const Factor& f, const Element& v) { return f.first < v; });
  return (it != factors_.end() && it->first == var) ? it->second : 0;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  std::vector<Monomial::Factor> all = x.factors_;
  all.insert(all.end(), y.factors_.begin(), y.factors_.end());
  return Monomial::from_powers(std::move(all));
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
  if (auto c = degree() <=> other.degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
      [](const Factor& a, const Factor& b) {
        if (auto c = a.first <=> b.first; c != 0) return c;
        return a.second <=> b.second;
      });
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [var, exp] : factors_) {
    if (!out.empty()) out += "*";
    out += var.to_string();
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

}  // namespace tamerel
