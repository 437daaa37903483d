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

#include "tamerel/carrier.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "tamerel/error.hpp"

namespace tamerel {

struct Carrier::Impl {
  CarrierKind kind = CarrierKind::empty;
  std::vector<std::string> names;
  std::unordered_map<std::string, std::size_t> name_index;
  std::vector<Carrier> parts;
  std::vector<Element> elems;  // monomial variables or passthrough elements
  std::vector<FinMultiset> adjoined;
};

namespace {

int sign_of(std::strong_ordering c) { return c < 0 ? -1 : (c > 0 ? 1 : 0); }

}  // namespace

Carrier::Carrier() : Carrier(empty()) {}

Carrier Carrier::finite(std::vector<std::string> names) {
  auto impl = std::make_shared<Impl>();
  impl->kind = CarrierKind::finite;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!impl->name_index.emplace(names[i], i).second) {
      throw Error(ErrorCode::parse_error, "duplicate element name '" + names[i] + "'");
    }
  }
  impl->names = std::move(names);
  return Carrier(std::move(impl));
}

Carrier Carrier::int_line() {
  static const Carrier line = [] {
    auto impl = std::make_shared<Impl>();
    impl->kind = CarrierKind::int_line;
    return Carrier(std::move(impl));
  }();
  return line;
}

Carrier Carrier::sum(Carrier left, Carrier right) {
  auto impl = std::make_shared<Impl>();
  impl->kind = CarrierKind::sum;
  impl->parts = {std::move(left), std::move(right)};
  return Carrier(std::move(impl));
}

Carrier Carrier::pair(Carrier first, Carrier second) {
  auto impl = std::make_shared<Impl>();
  impl->kind = CarrierKind::pair;
  impl->parts = {std::move(first), std::move(second)};
  return Carrier(std::move(impl));
}

Carrier Carrier::unit() {
  static const Carrier one = [] {
    auto impl = std::make_shared<Impl>();
    impl->kind = CarrierKind::unit;
    return Carrier(std::move(impl));
  }();
  return one;
}

Carrier Carrier::empty() {
  static const Carrier* zero = new Carrier(std::make_shared<Impl>());
  return *zero;
}

Carrier Carrier::monomials(std::vector<Element> variables) {
  std::sort(variables.begin(), variables.end());
  variables.erase(std::unique(variables.begin(), variables.end()), variables.end());
  auto impl = std::make_shared<Impl>();
  impl->kind = CarrierKind::monomials;
  impl->elems = std::move(variables);
  return Carrier(std::move(impl));
}

Carrier Carrier::basis_extension(Carrier base, std::vector<Element> passthrough,
                                 std::vector<FinMultiset> adjoined) {
  for (const auto& e : passthrough) {
    if (!base.contains(e)) {
      throw Error(ErrorCode::carrier_mismatch,
                  "passthrough element " + e.to_string() + " not in base carrier");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = CarrierKind::basis_extension;
  impl->parts = {std::move(base)};
  std::sort(passthrough.begin(), passthrough.end(),
            [&](const Element& a, const Element& b) {
              return impl->parts[0].compare(a, b) < 0;
            });
  impl->elems = std::move(passthrough);
  impl->adjoined = std::move(adjoined);
  return Carrier(std::move(impl));
}

CarrierKind Carrier::kind() const { return impl_->kind; }
const std::vector<std::string>& Carrier::names() const { return impl_->names; }
const Carrier& Carrier::left() const { return impl_->parts.at(0); }
const Carrier& Carrier::right() const { return impl_->parts.at(1); }
const std::vector<Element>& Carrier::variables() const { return impl_->elems; }
const Carrier& Carrier::base() const { return impl_->parts.at(0); }
const std::vector<Element>& Carrier::passthrough() const { return impl_->elems; }
const std::vector<FinMultiset>& Carrier::adjoined() const { return impl_->adjoined; }

bool Carrier::is_finite() const {
  switch (impl_->kind) {
    case CarrierKind::finite:
    case CarrierKind::unit:
    case CarrierKind::empty:
    case CarrierKind::basis_extension: return true;
    case CarrierKind::int_line: return false;
    case CarrierKind::sum: return left().is_finite() && right().is_finite();
    case CarrierKind::pair:
      // A product with an empty factor is empty.
      if (left().is_finite() && left().size() == 0) return true;
      if (right().is_finite() && right().size() == 0) return true;
      return left().is_finite() && right().is_finite();
    case CarrierKind::monomials: return impl_->elems.empty();
  }
  return false;
}

std::size_t Carrier::size() const {
  if (!is_finite()) throw Error(ErrorCode::infinite_carrier, to_string());
  switch (impl_->kind) {
    case CarrierKind::finite: return impl_->names.size();
    case CarrierKind::unit: return 1;
    case CarrierKind::empty: return 0;
    case CarrierKind::basis_extension: return impl_->elems.size() + impl_->adjoined.size();
    case CarrierKind::sum: return left().size() + right().size();
    case CarrierKind::pair: {
      if (left().is_finite() && left().size() == 0) return 0;
      if (right().is_finite() && right().size() == 0) return 0;
      return left().size() * right().size();
    }
    case CarrierKind::monomials: return 1;
    case CarrierKind::int_line: break;
  }
  throw Error(ErrorCode::infinite_carrier, to_string());
}

std::vector<Element> Carrier::elements() const {
  if (!is_finite()) throw Error(ErrorCode::infinite_carrier, to_string());
  std::vector<Element> out;
  switch (impl_->kind) {
    case CarrierKind::finite:
      for (const auto& n : impl_->names) out.push_back(Element::atom(n));
      break;
    case CarrierKind::unit: out.push_back(Element::star()); break;
    case CarrierKind::empty: break;
    case CarrierKind::basis_extension:
      out = impl_->elems;
      for (std::size_t i = 0; i < impl_->adjoined.size(); ++i) {
        out.push_back(Element::adjoined(i, impl_->adjoined[i]));
      }
      break;
    case CarrierKind::sum:
      for (auto& e : left().elements()) out.push_back(Element::left(e));
      for (auto& e : right().elements()) out.push_back(Element::right(e));
      break;
    case CarrierKind::pair: {
      if (size() == 0) break;
      auto rs = right().elements();
      for (auto& a : left().elements()) {
        for (auto& b : rs) out.push_back(Element::pair(a, b));
      }
      break;
    }
    case CarrierKind::monomials: out.push_back(Element::monomial(Monomial())); break;
    case CarrierKind::int_line: break;
  }
  return out;
}

bool Carrier::contains(const Element& e) const {
  switch (impl_->kind) {
    case CarrierKind::finite:
      return e.kind() == ElementKind::atom && impl_->name_index.count(e.name()) != 0;
    case CarrierKind::int_line: return e.kind() == ElementKind::integer;
    case CarrierKind::unit: return e.kind() == ElementKind::star;
    case CarrierKind::empty: return false;
    case CarrierKind::sum:
      if (e.kind() != ElementKind::tagged) return false;
      return (e.side() == Side::left ? left() : right()).contains(e.inner());
    case CarrierKind::pair:
      return e.kind() == ElementKind::pair && left().contains(e.first()) &&
             right().contains(e.second());
    case CarrierKind::monomials: {
      if (e.kind() != ElementKind::monomial) return false;
      for (const auto& [var, exp] : e.as_monomial().factors()) {
        if (!std::binary_search(impl_->elems.begin(), impl_->elems.end(), var)) return false;
      }
      return true;
    }
    case CarrierKind::basis_extension:
      if (e.kind() == ElementKind::adjoined) return e.adjoined_index() < impl_->adjoined.size();
      return std::find(impl_->elems.begin(), impl_->elems.end(), e) != impl_->elems.end();
  }
  return false;
}

int Carrier::compare(const Element& a, const Element& b) const {
  switch (impl_->kind) {
    case CarrierKind::finite: {
      auto ia = impl_->name_index.find(a.name());
      auto ib = impl_->name_index.find(b.name());
      if (ia == impl_->name_index.end() || ib == impl_->name_index.end()) {
        return sign_of(a <=> b);
      }
      return ia->second < ib->second ? -1 : (ia->second > ib->second ? 1 : 0);
    }
    case CarrierKind::sum: {
      if (a.kind() != ElementKind::tagged || b.kind() != ElementKind::tagged) {
        return sign_of(a <=> b);
      }
      if (a.side() != b.side()) return a.side() == Side::left ? -1 : 1;
      return (a.side() == Side::left ? left() : right()).compare(a.inner(), b.inner());
    }
    case CarrierKind::pair: {
      if (a.kind() != ElementKind::pair || b.kind() != ElementKind::pair) {
        return sign_of(a <=> b);
      }
      if (int c = left().compare(a.first(), b.first()); c != 0) return c;
      return right().compare(a.second(), b.second());
    }
    case CarrierKind::basis_extension: {
      bool aa = a.kind() == ElementKind::adjoined, ba = b.kind() == ElementKind::adjoined;
      if (aa != ba) return aa ? 1 : -1;
      if (aa) return sign_of(a <=> b);
      return base().compare(a, b);
    }
    default: return sign_of(a <=> b);
  }
}

std::vector<Element> Carrier::window(std::int64_t lo, std::int64_t hi) const {
  switch (impl_->kind) {
    case CarrierKind::int_line: {
      std::vector<Element> out;
      for (std::int64_t n = lo; n <= hi; ++n) out.push_back(Element::integer(n));
      return out;
    }
    case CarrierKind::sum: {
      std::vector<Element> out;
      for (auto& e : left().window(lo, hi)) out.push_back(Element::left(e));
      for (auto& e : right().window(lo, hi)) out.push_back(Element::right(e));
      return out;
    }
    case CarrierKind::pair: {
      std::vector<Element> out;
      auto rs = right().window(lo, hi);
      for (auto& a : left().window(lo, hi)) {
        for (auto& b : rs) out.push_back(Element::pair(a, b));
      }
      return out;
    }
    case CarrierKind::monomials: {
      std::vector<Element> out;
      auto top = static_cast<std::uint32_t>(std::max<std::int64_t>(hi, 0));
      for (auto& m : monomials_up_to_degree(impl_->elems, top)) {
        out.push_back(Element::monomial(std::move(m)));
      }
      return out;
    }
    default: return elements();
  }
}

bool Carrier::operator==(const Carrier& other) const {
  if (impl_ == other.impl_) return true;
  if (impl_->kind != other.impl_->kind) return false;
  switch (impl_->kind) {
    case CarrierKind::finite: return impl_->names == other.impl_->names;
    case CarrierKind::sum:
    case CarrierKind::pair: return impl_->parts == other.impl_->parts;
    case CarrierKind::monomials: return impl_->elems == other.impl_->elems;
    case CarrierKind::basis_extension:
      return impl_->parts == other.impl_->parts && impl_->elems == other.impl_->elems &&
             impl_->adjoined == other.impl_->adjoined;
    default: return true;
  }
}

std::string Carrier::to_string() const {
  switch (impl_->kind) {
    case CarrierKind::finite: {
      std::string out = "{";
      for (std::size_t i = 0; i < impl_->names.size(); ++i) {
        if (i) out += ",";
        out += impl_->names[i];
      }
      return out + "}";
    }
    case CarrierKind::int_line: return "Z";
    case CarrierKind::sum: return "(" + left().to_string() + "+" + right().to_string() + ")";
    case CarrierKind::pair: return "(" + left().to_string() + "x" + right().to_string() + ")";
    case CarrierKind::unit: return "1";
    case CarrierKind::empty: return "0";
    case CarrierKind::monomials: {
      std::string out = "Mon[";
      for (std::size_t i = 0; i < impl_->elems.size(); ++i) {
        if (i) out += ",";
        out += impl_->elems[i].to_string();
      }
      return out + "]";
    }
    case CarrierKind::basis_extension:
      return "Ker(" + base().to_string() + "; " + std::to_string(impl_->elems.size()) +
             " passthrough, " + std::to_string(impl_->adjoined.size()) + " adjoined)";
  }
  return "?";
}

std::vector<Monomial> monomials_up_to_degree(const std::vector<Element>& vars,
                                             std::uint32_t max_degree) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(vars.size(), 0);
  // Depth-first over exponent vectors with bounded total degree.
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t budget) -> void {
    if (i == vars.size()) {
      std::vector<Monomial::Factor> f;
      for (std::size_t k = 0; k < vars.size(); ++k) {
        if (exps[k] != 0) f.emplace_back(vars[k], exps[k]);
      }
      out.push_back(Monomial::from_powers(std::move(f)));
      return;
    }
    for (std::uint32_t e = 0; e <= budget; ++e) {
      exps[i] = e;
      self(self, i + 1, budget - e);
    }
    exps[i] = 0;
  };
  rec(rec, 0, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tamerel
