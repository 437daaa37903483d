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

#include <set>
#include <string>
#include <utility>

#include "relation_internal.hpp"
#include "tamerel/error.hpp"
#include "tamerel/relation.hpp"

namespace tamerel {

namespace {

/// Restriction of m to the given keys.
FinMultiset restrict_to(const FinMultiset& m, const std::set<Element>& keys) {
  FinMultiset out(m.tag());
  for (const auto& [e, v] : m) {
    if (keys.count(e)) out.accumulate(e, v);
  }
  return out;
}

/// The composite route: every row of r†∘r over `xs` is the basis vector at
/// that row, looking only at columns in `window` when one is given.
bool composite_is_identity(const BifMRel& r, const std::vector<Element>& xs,
                           const std::set<Element>* window, double tol) {
  BifMRel back = r.dagger();
  for (const auto& x : xs) {
    FinMultiset row = apply_state(back, r.row(x));
    if (window) row = restrict_to(row, *window);
    if (!approx_equal(row, FinMultiset::unit(r.tag(), x), tol)) return false;
  }
  return true;
}

/// The orthonormality route on the rows of r indexed by xs.
bool rows_orthonormal(const BifMRel& r, const std::vector<Element>& xs, double tol) {
  std::vector<FinMultiset> rows;
  rows.reserve(xs.size());
  for (const auto& x : xs) rows.push_back(r.row(x));
  return is_orthonormal(rows, tol);
}

struct SideVerdict {
  bool composite = false;
  bool rows = false;
};

SideVerdict mono_side(const BifMRel& r, const std::vector<Element>* window, double tol) {
  if (window) {
    std::set<Element> keys(window->begin(), window->end());
    return {composite_is_identity(r, *window, &keys, tol), rows_orthonormal(r, *window, tol)};
  }
  if (!r.dom().is_finite()) return {false, false};
  const auto xs = r.dom().elements();
  BifMRel composite = compose(r, r.dagger());
  bool via_composite = true;
  for (const auto& x : xs) {
    if (!approx_equal(composite.row(x), FinMultiset::unit(r.tag(), x), tol)) {
      via_composite = false;
      break;
    }
  }
  return {via_composite, rows_orthonormal(r, xs, tol)};
}

bool self_adjoint_on(const BifMRel& r, const std::vector<Element>& xs, double tol) {
  BifMRel d = r.dagger();
  for (const auto& x : xs) {
    if (!approx_equal(r.row(x), d.row(x), tol)) return false;
  }
  return true;
}

bool idempotent_on(const BifMRel& r, const std::vector<Element>& xs, double tol) {
  for (const auto& x : xs) {
    if (!approx_equal(apply_state(r, r.row(x)), r.row(x), tol)) return false;
  }
  return true;
}

std::vector<Element> support_union(const BifMRel& r) {
  std::set<Element> keys;
  for (const auto& x : r.row_support()) keys.insert(x);
  for (const auto& y : r.col_support()) keys.insert(y);
  return {keys.begin(), keys.end()};
}

}  // namespace

Classification classify(const BifMRel& r, double tol, const std::optional<Window>& window) {
  if (!r.is_explicit() && !window) {
    throw Error(ErrorCode::not_explicit, "classifying a lazy relation needs a window");
  }
  Classification c;
  c.partial = !r.is_explicit();
  const std::vector<Element>* dom_window = window ? &window->dom : nullptr;
  const std::vector<Element>* cod_window = window ? &window->cod : nullptr;
  SideVerdict mono = mono_side(r, dom_window, tol);
  SideVerdict epi = mono_side(r.dagger(), cod_window, tol);
  c.dagger_mono = mono.composite;
  c.dagger_epi = epi.composite;
  c.unitary = c.dagger_mono && c.dagger_epi;
  c.routes_agree = mono.composite == mono.rows && epi.composite == epi.rows;
  if (r.dom() == r.cod()) {
    std::vector<Element> xs = window ? window->dom : support_union(r);
    bool sa = self_adjoint_on(r, xs, tol);
    c.self_adjoint = sa;
    c.projection = sa && idempotent_on(r, xs, tol);
  }
  return c;
}

bool is_dagger_mono(const BifMRel& r, double tol) { return classify(r, tol).dagger_mono; }
bool is_dagger_epi(const BifMRel& r, double tol) { return classify(r, tol).dagger_epi; }
bool is_unitary(const BifMRel& r, double tol) { return classify(r, tol).unitary; }

bool is_self_adjoint(const BifMRel& r, double tol) {
  if (!(r.dom() == r.cod())) {
    throw Error(ErrorCode::non_square, r.dom().to_string() + " → " + r.cod().to_string());
  }
  return *classify(r, tol).self_adjoint;
}

bool is_projection(const BifMRel& r, double tol) {
  if (!(r.dom() == r.cod())) {
    throw Error(ErrorCode::non_square, r.dom().to_string() + " → " + r.cod().to_string());
  }
  return *classify(r, tol).projection;
}

namespace {

SemiringTag probability_tag(SemiringTag tag) {
  return (tag == SemiringTag::f64 || tag == SemiringTag::c64) ? SemiringTag::f64
                                                               : SemiringTag::rat;
}

FinMultiset probabilities(const FinMultiset& m, SemiringTag out_tag) {
  FinMultiset out(out_tag);
  for (const auto& [e, v] : m) out.accumulate(e, to_unit_interval(norm_sq(v)));
  return out;
}

Value total(const FinMultiset& m, SemiringTag tag) {
  Value sum = Value::zero(tag);
  for (const auto& [e, v] : m) sum += v;
  return sum;
}

}  // namespace

BifMRel norm_sq_extract(const BifMRel& r, double tol) {
  const SemiringTag out_tag = probability_tag(r.tag());
  if (!r.is_explicit()) {
    return BifMRel::lazy(
        out_tag, r.dom(), r.cod(),
        [r, out_tag](const Element& x) { return probabilities(r.row(x), out_tag); },
        [r, out_tag](const Element& y) { return probabilities(r.col(y), out_tag); });
  }
  BifMRel::Table rows;
  for (const auto& x : r.row_support()) {
    FinMultiset m = probabilities(r.row(x), out_tag);
    if (!m.empty()) rows.emplace(x, std::move(m));
  }
  BifMRel out = BifMRel::from_rows(out_tag, r.dom(), r.cod(), std::move(rows));
  const Value one = Value::one(out_tag);
  auto check = [&](const Carrier& carrier, bool by_rows) {
    if (!carrier.is_finite()) return;
    for (const auto& e : carrier.elements()) {
      Value sum = total(by_rows ? out.row(e) : out.col(e), out_tag);
      if (!approx_equal(sum, one, tol)) {
        throw Error(ErrorCode::not_unitary, std::string(by_rows ? "row " : "column ") +
                                                e.to_string() + " sums to " + sum.to_string());
      }
    }
  };
  check(r.dom(), true);
  check(r.cod(), false);
  return out;
}

bool is_unit_state(const BifMRel& q, double tol) {
  detail::require_same_carrier(q.dom(), Carrier::unit(), "state domain");
  Value sum = Value::zero(q.tag());
  for (const auto& [x, v] : q.row(Element::star())) sum += norm_sq(v);
  return approx_equal(sum, Value::one(q.tag()), tol);
}

CoherenceReport check_coherent(const BifMRel& r, const std::vector<Element>& dom_samples,
                               const std::vector<Element>& cod_samples) {
  CoherenceReport report;
  std::set<std::pair<Element, Element>> seen;
  auto compare = [&](const Element& x, const Element& y) {
    if (!seen.emplace(x, y).second) return;
    Value from_row = r.row(x).at(y);
    Value from_col = r.col(y).at(x);
    if (!(from_row == from_col)) report.violations.push_back({x, y, from_row, from_col});
  };
  if (r.is_explicit()) {
    report.exhaustive = true;
    for (const auto& x : r.row_support()) {
      for (const auto& [y, v] : r.row(x)) compare(x, y);
    }
    for (const auto& y : r.col_support()) {
      for (const auto& [x, v] : r.col(y)) compare(x, y);
    }
    return report;
  }
  for (const auto& x : dom_samples) {
    for (const auto& [y, v] : r.row(x)) {
      compare(x, y);
      for (const auto& [x2, w] : r.col(y)) compare(x2, y);
    }
  }
  for (const auto& y : cod_samples) {
    for (const auto& [x, v] : r.col(y)) {
      compare(x, y);
      for (const auto& [y2, w] : r.row(x)) compare(x, y2);
    }
  }
  return report;
}

bool rel_approx_equal(const BifMRel& a, const BifMRel& b, double tol) {
  if (a.tag() != b.tag() || !(a.dom() == b.dom()) || !(a.cod() == b.cod())) return false;
  std::set<Element> keys;
  for (const auto& x : a.row_support()) keys.insert(x);
  for (const auto& x : b.row_support()) keys.insert(x);
  for (const auto& x : keys) {
    if (!approx_equal(a.row(x), b.row(x), tol)) return false;
  }
  return true;
}

bool rel_approx_equal_on(const BifMRel& a, const BifMRel& b, std::span<const Element> rows,
                         double tol) {
  if (a.tag() != b.tag()) return false;
  for (const auto& x : rows) {
    if (!approx_equal(a.row(x), b.row(x), tol)) return false;
  }
  return true;
}

}  // namespace tamerel
