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

#include <string>

#include "relation_internal.hpp"
#include "tamerel/error.hpp"
#include "tamerel/relation.hpp"

namespace tamerel {

using detail::require_same_carrier;
using detail::require_same_tag;

namespace {

using MaybeElement = std::optional<Element>;

Side side_of(int i) {
  if (i != 1 && i != 2) {
    throw Error(ErrorCode::carrier_mismatch, "biproduct index must be 1 or 2, got " +
                                                 std::to_string(i));
  }
  return i == 1 ? Side::left : Side::right;
}

FinMultiset tag_all(Side side, const FinMultiset& m) {
  FinMultiset out(m.tag());
  for (const auto& [e, v] : m) out.accumulate(Element::tagged(side, e), v);
  return out;
}

bool is_tagged(const Element& e, Side side) {
  return e.kind() == ElementKind::tagged && e.side() == side;
}

bool is_pair(const Element& e) { return e.kind() == ElementKind::pair; }

}  // namespace

BifMRel coprojection(int i, SemiringTag tag, const Carrier& x1, const Carrier& x2) {
  const Side side = side_of(i);
  return graph_relation(
      tag, side == Side::left ? x1 : x2, Carrier::sum(x1, x2),
      [side](const Element& x) -> MaybeElement { return Element::tagged(side, x); },
      [side](const Element& u) -> MaybeElement {
        if (!is_tagged(u, side)) return std::nullopt;
        return u.inner();
      },
      i == 1 ? "coprojection1" : "coprojection2");
}

BifMRel projection(int i, SemiringTag tag, const Carrier& x1, const Carrier& x2) {
  return coprojection(i, tag, x1, x2).dagger();
}

BifMRel tuple(const BifMRel& r1, const BifMRel& r2) {
  require_same_tag(r1.tag(), r2.tag());
  require_same_carrier(r1.dom(), r2.dom(), "tuple domain");
  const SemiringTag tag = r1.tag();
  Carrier cod = Carrier::sum(r1.cod(), r2.cod());
  auto row = [r1, r2](const Element& z) {
    FinMultiset m = tag_all(Side::left, r1.row(z));
    m.accumulate_scaled(Value::one(r1.tag()), tag_all(Side::right, r2.row(z)));
    return m;
  };
  if (r1.is_explicit() && r2.is_explicit()) {
    BifMRel::Table rows;
    for (const auto& z : r1.row_support()) rows.emplace(z, FinMultiset(tag));
    for (const auto& z : r2.row_support()) rows.emplace(z, FinMultiset(tag));
    for (auto& [z, m] : rows) m = row(z);
    return BifMRel::from_rows(tag, r1.dom(), std::move(cod), std::move(rows));
  }
  return BifMRel::lazy(tag, r1.dom(), std::move(cod), row, [r1, r2](const Element& u) {
    if (is_tagged(u, Side::left)) return r1.col(u.inner());
    if (is_tagged(u, Side::right)) return r2.col(u.inner());
    return FinMultiset(r1.tag());
  });
}

BifMRel cotuple(const BifMRel& t1, const BifMRel& t2) {
  return tuple(t1.dagger(), t2.dagger()).dagger();
}

BifMRel oplus(const BifMRel& r1, const BifMRel& r2) {
  require_same_tag(r1.tag(), r2.tag());
  const SemiringTag tag = r1.tag();
  Carrier dom = Carrier::sum(r1.dom(), r2.dom());
  Carrier cod = Carrier::sum(r1.cod(), r2.cod());
  if (r1.is_explicit() && r2.is_explicit()) {
    BifMRel::Table rows;
    for (const auto& x : r1.row_support()) {
      rows.emplace(Element::left(x), tag_all(Side::left, r1.row(x)));
    }
    for (const auto& x : r2.row_support()) {
      rows.emplace(Element::right(x), tag_all(Side::right, r2.row(x)));
    }
    return BifMRel::from_rows(tag, std::move(dom), std::move(cod), std::move(rows));
  }
  auto side_action = [](BifMRel a, BifMRel b, bool rows) {
    return [a, b, rows](const Element& u) {
      if (is_tagged(u, Side::left)) {
        return tag_all(Side::left, rows ? a.row(u.inner()) : a.col(u.inner()));
      }
      if (is_tagged(u, Side::right)) {
        return tag_all(Side::right, rows ? b.row(u.inner()) : b.col(u.inner()));
      }
      return FinMultiset(a.tag());
    };
  };
  return BifMRel::lazy(tag, std::move(dom), std::move(cod), side_action(r1, r2, true),
                       side_action(r1, r2, false));
}

BifMRel lambda_unit(SemiringTag tag, const Carrier& x) {
  return graph_relation(
      tag, Carrier::pair(Carrier::unit(), x), x,
      [](const Element& u) -> MaybeElement {
        if (!is_pair(u)) return std::nullopt;
        return u.second();
      },
      [](const Element& v) -> MaybeElement { return Element::pair(Element::star(), v); },
      "lambda_unit");
}

BifMRel rho_unit(SemiringTag tag, const Carrier& x) {
  return graph_relation(
      tag, Carrier::pair(x, Carrier::unit()), x,
      [](const Element& u) -> MaybeElement {
        if (!is_pair(u)) return std::nullopt;
        return u.first();
      },
      [](const Element& v) -> MaybeElement { return Element::pair(v, Element::star()); },
      "rho_unit");
}

BifMRel gamma_swap(SemiringTag tag, const Carrier& x, const Carrier& y) {
  auto swap = [](const Element& u) -> MaybeElement {
    if (!is_pair(u)) return std::nullopt;
    return Element::pair(u.second(), u.first());
  };
  return graph_relation(tag, Carrier::pair(x, y), Carrier::pair(y, x), swap, swap,
                        "gamma_swap");
}

BifMRel alpha_assoc(SemiringTag tag, const Carrier& x, const Carrier& y, const Carrier& z) {
  return graph_relation(
      tag, Carrier::pair(Carrier::pair(x, y), z), Carrier::pair(x, Carrier::pair(y, z)),
      [](const Element& u) -> MaybeElement {
        if (!is_pair(u) || !is_pair(u.first())) return std::nullopt;
        return Element::pair(u.first().first(), Element::pair(u.first().second(), u.second()));
      },
      [](const Element& v) -> MaybeElement {
        if (!is_pair(v) || !is_pair(v.second())) return std::nullopt;
        return Element::pair(Element::pair(v.first(), v.second().first()), v.second().second());
      },
      "alpha_assoc");
}

BifMRel distribute(SemiringTag tag, const Carrier& x, const Carrier& y1, const Carrier& y2) {
  return graph_relation(
      tag, Carrier::pair(x, Carrier::sum(y1, y2)),
      Carrier::sum(Carrier::pair(x, y1), Carrier::pair(x, y2)),
      [](const Element& u) -> MaybeElement {
        if (!is_pair(u) || u.second().kind() != ElementKind::tagged) return std::nullopt;
        return Element::tagged(u.second().side(), Element::pair(u.first(), u.second().inner()));
      },
      [](const Element& v) -> MaybeElement {
        if (v.kind() != ElementKind::tagged || !is_pair(v.inner())) return std::nullopt;
        return Element::pair(v.inner().first(), Element::tagged(v.side(), v.inner().second()));
      },
      "distribute");
}

BifMRel structural_iso(StructuralIso which, SemiringTag tag, std::span<const Carrier> carriers) {
  auto need = [&](std::size_t n) {
    if (carriers.size() != n) {
      throw Error(ErrorCode::carrier_mismatch, "structural iso expects " + std::to_string(n) +
                                                   " carriers, got " +
                                                   std::to_string(carriers.size()));
    }
  };
  switch (which) {
    case StructuralIso::lambda_unit:
      need(1);
      return lambda_unit(tag, carriers[0]);
    case StructuralIso::rho_unit:
      need(1);
      return rho_unit(tag, carriers[0]);
    case StructuralIso::gamma_swap:
      need(2);
      return gamma_swap(tag, carriers[0], carriers[1]);
    case StructuralIso::alpha_assoc:
      need(3);
      return alpha_assoc(tag, carriers[0], carriers[1], carriers[2]);
    case StructuralIso::distribute:
      need(3);
      return distribute(tag, carriers[0], carriers[1], carriers[2]);
  }
  throw Error(ErrorCode::unknown_builtin, "unknown structural iso");
}

namespace {

/// Σ_a of the (−, a) → (−, a) diagonal block of a row of s.
FinMultiset trace_row(const BifMRel& s, const Element& x, const std::vector<Element>& as,
                      const Value& weight) {
  FinMultiset out(s.tag());
  for (const auto& a : as) {
    for (const auto& [u, v] : s.row(Element::pair(x, a))) {
      if (u.second() == a) out.accumulate(u.first(), v * weight);
    }
  }
  return out;
}

FinMultiset trace_col(const BifMRel& s, const Element& y, const std::vector<Element>& as,
                      const Value& weight) {
  FinMultiset out(s.tag());
  for (const auto& a : as) {
    for (const auto& [u, v] : s.col(Element::pair(y, a))) {
      if (u.second() == a) out.accumulate(u.first(), v * weight);
    }
  }
  return out;
}

}  // namespace

BifMRel trace(const BifMRel& s, bool normalized) {
  if (s.dom().kind() != CarrierKind::pair || s.cod().kind() != CarrierKind::pair) {
    throw Error(ErrorCode::carrier_mismatch, "trace expects X × A → Y × A, got " +
                                                 s.dom().to_string() + " → " +
                                                 s.cod().to_string());
  }
  const Carrier& a_carrier = s.dom().right();
  require_same_carrier(a_carrier, s.cod().right(), "trace feedback object");
  const Carrier x = s.dom().left();
  const Carrier y = s.cod().left();
  const SemiringTag tag = s.tag();
  const std::vector<Element> as = a_carrier.elements();
  Value weight = Value::one(tag);
  if (normalized) {
    if (!is_field(tag)) {
      throw Error(ErrorCode::division_unavailable,
                  "normalized trace needs a field, got " + std::string(semiring_name(tag)));
    }
    if (as.empty()) return zero_rel(tag, x, y);
    weight = inverse(Value::from_int(tag, static_cast<long>(as.size())));
  }
  if (as.empty()) return zero_rel(tag, x, y);
  if (s.is_explicit()) {
    BifMRel::Table rows;
    for (const auto& e : s.entries()) {
      if (e.x.second() == e.y.second()) {
        rows.try_emplace(e.x.first(), tag).first->second.accumulate(e.y.first(),
                                                                    e.value * weight);
      }
    }
    std::erase_if(rows, [](const auto& kv) { return kv.second.empty(); });
    return BifMRel::from_rows(tag, x, y, std::move(rows));
  }
  return BifMRel::lazy(
      tag, x, y, [s, as, weight](const Element& e) { return trace_row(s, e, as, weight); },
      [s, as, weight](const Element& e) { return trace_col(s, e, as, weight); });
}

CompactStructure compact_unit_counit(SemiringTag tag, const Carrier& x) {
  if (!x.is_finite()) {
    throw Error(ErrorCode::infinite_carrier, "compact structure needs a finite carrier, got " +
                                                 x.to_string());
  }
  FinMultiset diag(tag);
  for (const auto& e : x.elements()) diag.accumulate(Element::pair(e, e), Value::one(tag));
  BifMRel unit = state_relation(Carrier::pair(x, x), diag);
  return {unit, unit.dagger()};
}

}  // namespace tamerel
