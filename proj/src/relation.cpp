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

#include "tamerel/relation.hpp"

#include "parallel.hpp"
#include "relation_internal.hpp"
#include "tamerel/error.hpp"

namespace tamerel {

struct BifMRel::Impl {
  SemiringTag tag = SemiringTag::rat;
  bool is_explicit = true;
  Table rows;
  Table cols;
  ActionFn row_fn;
  ActionFn col_fn;
  std::string builtin;

  FinMultiset row(const Element& x) const {
    if (!is_explicit) return row_fn(x);
    auto it = rows.find(x);
    return it == rows.end() ? FinMultiset(tag) : it->second;
  }
  FinMultiset col(const Element& y) const {
    if (!is_explicit) return col_fn(y);
    auto it = cols.find(y);
    return it == cols.end() ? FinMultiset(tag) : it->second;
  }
};

namespace detail {

void require_same_tag(SemiringTag a, SemiringTag b) {
  if (a != b) {
    throw Error(ErrorCode::mixed_semiring,
                std::string(semiring_name(a)) + " vs " + std::string(semiring_name(b)));
  }
}

void require_same_carrier(const Carrier& a, const Carrier& b, const char* what) {
  if (!(a == b)) {
    throw Error(ErrorCode::carrier_mismatch,
                std::string(what) + ": " + a.to_string() + " vs " + b.to_string());
  }
}

BifMRel::Table transpose(const BifMRel::Table& table, SemiringTag tag) {
  BifMRel::Table out;
  for (const auto& [x, row] : table) {
    for (const auto& [y, v] : row) {
      auto it = out.try_emplace(y, tag).first;
      it->second.accumulate(x, v);
    }
  }
  return out;
}

BifMRel::Table table_from(const std::vector<Element>& keys, std::vector<FinMultiset> values) {
  BifMRel::Table out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!values[i].empty()) out.emplace_hint(out.end(), keys[i], std::move(values[i]));
  }
  return out;
}

}  // namespace detail

using detail::require_same_carrier;
using detail::require_same_tag;

BifMRel::BifMRel() : BifMRel(zero_rel(SemiringTag::rat, Carrier::empty(), Carrier::empty())) {}

BifMRel BifMRel::from_entries(SemiringTag tag, Carrier dom, Carrier cod,
                              const std::vector<Entry>& entries) {
  Table rows;
  for (const auto& e : entries) {
    if (!dom.contains(e.x)) {
      throw Error(ErrorCode::carrier_mismatch,
                  e.x.to_string() + " is not an element of " + dom.to_string());
    }
    if (!cod.contains(e.y)) {
      throw Error(ErrorCode::carrier_mismatch,
                  e.y.to_string() + " is not an element of " + cod.to_string());
    }
    require_same_tag(tag, e.value.tag());
    rows.try_emplace(e.x, tag).first->second.accumulate(e.y, e.value);
  }
  std::erase_if(rows, [](const auto& kv) { return kv.second.empty(); });
  return from_rows(tag, std::move(dom), std::move(cod), std::move(rows));
}

BifMRel BifMRel::from_rows(SemiringTag tag, Carrier dom, Carrier cod, Table rows) {
  Table cols = detail::transpose(rows, tag);
  return from_tables_unchecked(tag, std::move(dom), std::move(cod), std::move(rows),
                               std::move(cols));
}

BifMRel BifMRel::from_cols(SemiringTag tag, Carrier dom, Carrier cod, Table cols) {
  Table rows = detail::transpose(cols, tag);
  return from_tables_unchecked(tag, std::move(dom), std::move(cod), std::move(rows),
                               std::move(cols));
}

BifMRel BifMRel::from_tables_unchecked(SemiringTag tag, Carrier dom, Carrier cod, Table rows,
                                       Table cols) {
  auto impl = std::make_shared<Impl>();
  impl->tag = tag;
  impl->is_explicit = true;
  impl->rows = std::move(rows);
  impl->cols = std::move(cols);
  return BifMRel(std::move(impl), false, std::move(dom), std::move(cod));
}

BifMRel BifMRel::lazy(SemiringTag tag, Carrier dom, Carrier cod, ActionFn row, ActionFn col,
                      std::string builtin) {
  auto impl = std::make_shared<Impl>();
  impl->tag = tag;
  impl->is_explicit = false;
  impl->row_fn = std::move(row);
  impl->col_fn = std::move(col);
  impl->builtin = std::move(builtin);
  return BifMRel(std::move(impl), false, std::move(dom), std::move(cod));
}

SemiringTag BifMRel::tag() const { return impl_->tag; }
bool BifMRel::is_explicit() const { return impl_->is_explicit; }
std::string BifMRel::builtin_name() const { return flipped_ ? std::string() : impl_->builtin; }

FinMultiset BifMRel::row(const Element& x) const {
  return flipped_ ? impl_->col(x).conjugated() : impl_->row(x);
}

FinMultiset BifMRel::col(const Element& y) const {
  return flipped_ ? impl_->row(y).conjugated() : impl_->col(y);
}

Value BifMRel::entry(const Element& x, const Element& y) const {
  if (impl_->is_explicit) {
    const Table& t = flipped_ ? impl_->cols : impl_->rows;
    auto it = t.find(x);
    if (it == t.end()) return Value::zero(impl_->tag);
    Value v = it->second.at(y);
    return flipped_ ? conj(v) : v;
  }
  return row(x).at(y);
}

void BifMRel::require_explicit(const char* what) const {
  if (!impl_->is_explicit) {
    throw Error(ErrorCode::not_explicit, std::string(what) + " needs an explicit relation");
  }
}

std::vector<Element> BifMRel::row_support() const {
  require_explicit("row_support");
  std::vector<Element> out;
  for (const auto& [x, row] : flipped_ ? impl_->cols : impl_->rows) out.push_back(x);
  return out;
}

std::vector<Element> BifMRel::col_support() const {
  require_explicit("col_support");
  std::vector<Element> out;
  for (const auto& [y, col] : flipped_ ? impl_->rows : impl_->cols) out.push_back(y);
  return out;
}

std::vector<Entry> BifMRel::entries() const {
  require_explicit("entries");
  std::vector<Entry> out;
  for (const auto& [x, row] : flipped_ ? impl_->cols : impl_->rows) {
    for (const auto& [y, v] : row) out.push_back({x, y, flipped_ ? conj(v) : v});
  }
  return out;
}

std::size_t BifMRel::nnz() const {
  require_explicit("nnz");
  std::size_t n = 0;
  for (const auto& [x, row] : impl_->rows) n += row.size();
  return n;
}

BifMRel BifMRel::dagger() const { return BifMRel(impl_, !flipped_, cod_, dom_); }

BifMRel identity(SemiringTag tag, const Carrier& x) {
  auto same = [](const Element& e) -> std::optional<Element> { return e; };
  return graph_relation(tag, x, x, same, same, "identity");
}

BifMRel zero_rel(SemiringTag tag, const Carrier& x, const Carrier& y) {
  return BifMRel::from_tables_unchecked(tag, x, y, {}, {});
}

FinMultiset apply_state(const BifMRel& r, const FinMultiset& sigma) {
  require_same_tag(r.tag(), sigma.tag());
  FinMultiset out(r.tag());
  for (const auto& [x, s] : sigma) out.accumulate_scaled(s, r.row(x));
  return out;
}

namespace {

/// Σ_y vec(y)·r(−, y): the column-side counterpart of apply_state.
FinMultiset pull_back(const BifMRel& r, const FinMultiset& vec) {
  FinMultiset out(r.tag());
  for (const auto& [y, s] : vec) out.accumulate_scaled(s, r.col(y));
  return out;
}

}  // namespace

BifMRel compose(const BifMRel& r, const BifMRel& s) {
  require_same_tag(r.tag(), s.tag());
  require_same_carrier(r.cod(), s.dom(), "compose");
  const SemiringTag tag = r.tag();
  if (r.is_explicit()) {
    auto keys = r.row_support();
    auto rows = detail::parallel_map(keys, FinMultiset(tag), [&](const Element& x) {
      return apply_state(s, r.row(x));
    });
    return BifMRel::from_rows(tag, r.dom(), s.cod(), detail::table_from(keys, std::move(rows)));
  }
  if (s.is_explicit()) {
    auto keys = s.col_support();
    auto cols = detail::parallel_map(keys, FinMultiset(tag), [&](const Element& z) {
      return pull_back(r, s.col(z));
    });
    return BifMRel::from_cols(tag, r.dom(), s.cod(), detail::table_from(keys, std::move(cols)));
  }
  return BifMRel::lazy(
      tag, r.dom(), s.cod(), [r, s](const Element& x) { return apply_state(s, r.row(x)); },
      [r, s](const Element& z) { return pull_back(r, s.col(z)); });
}

BifMRel hom_add(const BifMRel& r, const BifMRel& s) {
  require_same_tag(r.tag(), s.tag());
  require_same_carrier(r.dom(), s.dom(), "hom_add domain");
  require_same_carrier(r.cod(), s.cod(), "hom_add codomain");
  const SemiringTag tag = r.tag();
  const Value one = Value::one(tag);
  if (r.is_explicit() && s.is_explicit()) {
    BifMRel::Table rows;
    for (const auto& x : r.row_support()) rows.emplace(x, r.row(x));
    for (const auto& x : s.row_support()) {
      rows.try_emplace(x, tag).first->second.accumulate_scaled(one, s.row(x));
    }
    std::erase_if(rows, [](const auto& kv) { return kv.second.empty(); });
    return BifMRel::from_rows(tag, r.dom(), r.cod(), std::move(rows));
  }
  return BifMRel::lazy(
      tag, r.dom(), r.cod(),
      [r, s, one](const Element& x) {
        FinMultiset m = r.row(x);
        m.accumulate_scaled(one, s.row(x));
        return m;
      },
      [r, s, one](const Element& y) {
        FinMultiset m = r.col(y);
        m.accumulate_scaled(one, s.col(y));
        return m;
      });
}

BifMRel scale(const Value& c, const BifMRel& r) {
  require_same_tag(r.tag(), c.tag());
  if (r.is_explicit()) {
    BifMRel::Table rows;
    for (const auto& x : r.row_support()) {
      FinMultiset m = r.row(x).scaled(c);
      if (!m.empty()) rows.emplace(x, std::move(m));
    }
    return BifMRel::from_rows(r.tag(), r.dom(), r.cod(), std::move(rows));
  }
  return BifMRel::lazy(
      r.tag(), r.dom(), r.cod(), [r, c](const Element& x) { return r.row(x).scaled(c); },
      [r, c](const Element& y) { return r.col(y).scaled(c); });
}

namespace {

FinMultiset tensor_vectors(const FinMultiset& a, const FinMultiset& b) {
  FinMultiset out(a.tag());
  for (const auto& [y1, v1] : a) {
    for (const auto& [y2, v2] : b) out.accumulate(Element::pair(y1, y2), v1 * v2);
  }
  return out;
}

}  // namespace

BifMRel tensor(const BifMRel& r1, const BifMRel& r2) {
  require_same_tag(r1.tag(), r2.tag());
  const SemiringTag tag = r1.tag();
  Carrier dom = Carrier::pair(r1.dom(), r2.dom());
  Carrier cod = Carrier::pair(r1.cod(), r2.cod());
  bool zero1 = r1.is_explicit() && r1.row_support().empty();
  bool zero2 = r2.is_explicit() && r2.row_support().empty();
  if (zero1 || zero2) return zero_rel(tag, dom, cod);
  if (r1.is_explicit() && r2.is_explicit()) {
    BifMRel::Table rows;
    auto keys2 = r2.row_support();
    for (const auto& x1 : r1.row_support()) {
      FinMultiset row1 = r1.row(x1);
      for (const auto& x2 : keys2) {
        FinMultiset m = tensor_vectors(row1, r2.row(x2));
        if (!m.empty()) rows.emplace(Element::pair(x1, x2), std::move(m));
      }
    }
    return BifMRel::from_rows(tag, std::move(dom), std::move(cod), std::move(rows));
  }
  return BifMRel::lazy(
      tag, std::move(dom), std::move(cod),
      [r1, r2](const Element& x) {
        if (x.kind() != ElementKind::pair) return FinMultiset(r1.tag());
        return tensor_vectors(r1.row(x.first()), r2.row(x.second()));
      },
      [r1, r2](const Element& y) {
        if (y.kind() != ElementKind::pair) return FinMultiset(r1.tag());
        return tensor_vectors(r1.col(y.first()), r2.col(y.second()));
      });
}

BifMRel graph_relation(SemiringTag tag, const Carrier& dom, const Carrier& cod,
                       std::function<std::optional<Element>(const Element&)> fwd,
                       std::function<std::optional<Element>(const Element&)> bwd,
                       std::string builtin) {
  const Value one = Value::one(tag);
  if (dom.is_finite() || cod.is_finite()) {
    BifMRel::Table rows;
    if (dom.is_finite()) {
      for (const auto& x : dom.elements()) {
        if (auto y = fwd(x)) rows.emplace(x, FinMultiset::unit(tag, *y));
      }
    } else {
      for (const auto& y : cod.elements()) {
        if (auto x = bwd(y)) rows.emplace(*x, FinMultiset::unit(tag, y));
      }
    }
    return BifMRel::from_rows(tag, dom, cod, std::move(rows));
  }
  return BifMRel::lazy(
      tag, dom, cod,
      [tag, fwd](const Element& x) {
        auto y = fwd(x);
        return y ? FinMultiset::unit(tag, *y) : FinMultiset(tag);
      },
      [tag, bwd](const Element& y) {
        auto x = bwd(y);
        return x ? FinMultiset::unit(tag, *x) : FinMultiset(tag);
      },
      std::move(builtin));
}

BifMRel state_relation(const Carrier& x, const FinMultiset& sigma) {
  BifMRel::Table rows;
  if (!sigma.empty()) rows.emplace(Element::star(), sigma);
  return BifMRel::from_rows(sigma.tag(), Carrier::unit(), x, std::move(rows));
}

BifMRel scalar_relation(const Value& s) {
  FinMultiset m(s.tag());
  m.accumulate(Element::star(), s);
  return state_relation(Carrier::unit(), m);
}

Value scalar_value(const BifMRel& r) {
  require_same_carrier(r.dom(), Carrier::unit(), "scalar domain");
  require_same_carrier(r.cod(), Carrier::unit(), "scalar codomain");
  return r.entry(Element::star(), Element::star());
}

}  // namespace tamerel
