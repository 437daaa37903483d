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

#include "tamerel/formaldist.hpp"

#include <map>
#include <set>
#include <string>

#include "relation_internal.hpp"
#include "tamerel/error.hpp"

namespace tamerel {

namespace {

void require_monomials(const Carrier& c, const char* what) {
  if (c.kind() != CarrierKind::monomials) {
    throw Error(ErrorCode::carrier_mismatch,
                std::string(what) + " must be a monomials carrier, got " + c.to_string());
  }
}

Element mono(Monomial m) { return Element::monomial(std::move(m)); }

}  // namespace

Monomial star(const Monomial& phi, const Monomial& psi) {
  std::vector<Monomial::Factor> factors;
  for (const auto& [var, e] : phi.factors()) factors.emplace_back(Element::left(var), e);
  for (const auto& [var, e] : psi.factors()) factors.emplace_back(Element::right(var), e);
  return Monomial::from_powers(std::move(factors));
}

std::pair<Monomial, Monomial> split(const Monomial& chi) {
  std::vector<Monomial::Factor> left;
  std::vector<Monomial::Factor> right;
  for (const auto& [var, e] : chi.factors()) {
    if (var.kind() != ElementKind::tagged) {
      throw Error(ErrorCode::carrier_mismatch,
                  "variable " + var.to_string() + " is not tagged with a summand");
    }
    (var.side() == Side::left ? left : right).emplace_back(var.inner(), e);
  }
  return {Monomial::from_powers(std::move(left)), Monomial::from_powers(std::move(right))};
}

BifMRel fdist_from_series(const std::vector<Element>& x_vars, const std::vector<Element>& y_vars,
                          const FinMultiset& coefficients) {
  std::vector<Entry> entries;
  for (const auto& [chi, v] : coefficients) {
    if (chi.kind() != ElementKind::monomial) {
      throw Error(ErrorCode::carrier_mismatch, chi.to_string() + " is not a monomial");
    }
    auto [phi, psi] = split(chi.as_monomial());
    entries.push_back({mono(phi), mono(psi), v});
  }
  return BifMRel::from_entries(coefficients.tag(), Carrier::monomials(x_vars),
                               Carrier::monomials(y_vars), entries);
}

FinMultiset fdist_to_series(const BifMRel& p) {
  FinMultiset out(p.tag());
  for (const auto& e : p.entries()) {
    out.accumulate(mono(star(e.x.as_monomial(), e.y.as_monomial())), e.value);
  }
  return out;
}

Value fdist_coefficient(const BifMRel& p, const Monomial& chi) {
  auto [phi, psi] = split(chi);
  return p.entry(mono(phi), mono(psi));
}

BifMRel fdist_identity(SemiringTag tag, const std::vector<Element>& vars) {
  return identity(tag, Carrier::monomials(vars));
}

namespace {

/// Coefficient table of an explicit distribution, keyed by φ ⋆ ψ.
using Coefficients = std::map<Monomial, Value>;

Coefficients coefficients_of(const BifMRel& p) {
  Coefficients out;
  for (const auto& e : p.entries()) out.emplace(star(e.x.as_monomial(), e.y.as_monomial()), e.value);
  return out;
}

Value lookup(const Coefficients& c, const Monomial& chi, SemiringTag tag) {
  auto it = c.find(chi);
  return it == c.end() ? Value::zero(tag) : it->second;
}

}  // namespace

BifMRel fdist_compose_formula(const BifMRel& p, const BifMRel& q) {
  require_monomials(p.dom(), "distribution domain");
  require_monomials(p.cod(), "distribution codomain");
  require_monomials(q.cod(), "distribution codomain");
  detail::require_same_carrier(p.cod(), q.dom(), "fdist_compose_formula");
  detail::require_same_tag(p.tag(), q.tag());
  const SemiringTag tag = p.tag();

  if (p.is_explicit() && q.is_explicit()) {
    const Coefficients cp = coefficients_of(p);
    const Coefficients cq = coefficients_of(q);
    std::set<Monomial> phis;
    std::set<Monomial> psis;
    std::set<Monomial> xis;
    for (const auto& [chi, v] : cp) {
      auto [phi, psi] = split(chi);
      phis.insert(phi);
      psis.insert(psi);
    }
    for (const auto& [chi, v] : cq) xis.insert(split(chi).second);
    std::vector<Entry> entries;
    for (const auto& phi : phis) {
      for (const auto& xi : xis) {
        Value sum = Value::zero(tag);
        for (const auto& psi : psis) {
          sum += lookup(cp, star(phi, psi), tag) * lookup(cq, star(psi, xi), tag);
        }
        if (!sum.is_zero()) entries.push_back({mono(phi), mono(xi), sum});
      }
    }
    return BifMRel::from_entries(tag, p.dom(), q.cod(), entries);
  }

  // One side is lazy: the sum over ψ runs over the finite row p(φ ⋆ −) or
  // the finite column q(− ⋆ ξ).
  auto entry = [p, q, tag](const Element& phi, const Element& xi) {
    Value sum = Value::zero(tag);
    for (const auto& [psi, v] : p.row(phi)) sum += v * q.entry(psi, xi);
    return sum;
  };
  auto row = [p, q, entry](const Element& phi) {
    FinMultiset out(p.tag());
    std::set<Element> xis;
    for (const auto& [psi, v] : p.row(phi)) {
      for (const auto& [xi, w] : q.row(psi)) xis.insert(xi);
    }
    for (const auto& xi : xis) out.accumulate(xi, entry(phi, xi));
    return out;
  };
  auto col = [p, q, entry](const Element& xi) {
    FinMultiset out(p.tag());
    std::set<Element> phis;
    for (const auto& [psi, w] : q.col(xi)) {
      for (const auto& [phi, v] : p.col(psi)) phis.insert(phi);
    }
    for (const auto& phi : phis) out.accumulate(phi, entry(phi, xi));
    return out;
  };
  if (p.is_explicit()) {
    BifMRel::Table rows;
    for (const auto& phi : p.row_support()) {
      FinMultiset m = row(phi);
      if (!m.empty()) rows.emplace(phi, std::move(m));
    }
    return BifMRel::from_rows(tag, p.dom(), q.cod(), std::move(rows));
  }
  if (q.is_explicit()) {
    BifMRel::Table cols;
    for (const auto& xi : q.col_support()) {
      FinMultiset m = col(xi);
      if (!m.empty()) cols.emplace(xi, std::move(m));
    }
    return BifMRel::from_cols(tag, p.dom(), q.cod(), std::move(cols));
  }
  return BifMRel::lazy(tag, p.dom(), q.cod(), row, col);
}

BifMRel fdist_dagger_formula(const BifMRel& p) {
  require_monomials(p.dom(), "distribution domain");
  require_monomials(p.cod(), "distribution codomain");
  if (p.is_explicit()) {
    std::vector<Entry> entries;
    for (const auto& e : p.entries()) {
      auto [phi, psi] = split(star(e.x.as_monomial(), e.y.as_monomial()));
      entries.push_back({mono(psi), mono(phi), e.value});
    }
    return BifMRel::from_entries(p.tag(), p.cod(), p.dom(), entries);
  }
  return BifMRel::lazy(
      p.tag(), p.cod(), p.dom(), [p](const Element& psi) { return p.col(psi); },
      [p](const Element& phi) { return p.row(phi); });
}

FinMultiset phat_apply(const BifMRel& p, const FinMultiset& q) {
  detail::require_same_tag(p.tag(), q.tag());
  FinMultiset out(p.tag());
  for (const auto& [psi, s] : q) out.accumulate_scaled(s, p.col(psi));
  return out;
}

}  // namespace tamerel
