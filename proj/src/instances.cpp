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

#include "tamerel/instances.hpp"

#include <string>

#include "relation_internal.hpp"
#include "tamerel/error.hpp"

namespace tamerel {

PartialInjection PartialInjection::from_pairs(
    Carrier dom, Carrier cod, const std::vector<std::pair<Element, Element>>& pairs) {
  PartialInjection f;
  for (const auto& [x, y] : pairs) {
    if (!dom.contains(x) || !cod.contains(y)) {
      throw Error(ErrorCode::carrier_mismatch,
                  "(" + x.to_string() + ", " + y.to_string() + ") is outside the carriers");
    }
    if (!f.fwd_map_.emplace(x, y).second) {
      throw Error(ErrorCode::not_injective, x.to_string() + " has two images");
    }
    if (!f.bwd_map_.emplace(y, x).second) {
      throw Error(ErrorCode::not_injective, y.to_string() + " has two preimages");
    }
  }
  f.dom_ = std::move(dom);
  f.cod_ = std::move(cod);
  return f;
}

PartialInjection PartialInjection::lazy(Carrier dom, Carrier cod, Map fwd, Map bwd) {
  PartialInjection f;
  f.dom_ = std::move(dom);
  f.cod_ = std::move(cod);
  f.explicit_ = false;
  f.fwd_fn_ = std::move(fwd);
  f.bwd_fn_ = std::move(bwd);
  return f;
}

PartialInjection PartialInjection::identity(const Carrier& x) {
  if (x.is_finite()) {
    std::vector<std::pair<Element, Element>> pairs;
    for (const auto& e : x.elements()) pairs.emplace_back(e, e);
    return from_pairs(x, x, pairs);
  }
  auto same = [](const Element& e) -> std::optional<Element> { return e; };
  return lazy(x, x, same, same);
}

std::optional<Element> PartialInjection::fwd(const Element& x) const {
  if (!explicit_) return fwd_fn_(x);
  auto it = fwd_map_.find(x);
  if (it == fwd_map_.end()) return std::nullopt;
  return it->second;
}

std::optional<Element> PartialInjection::bwd(const Element& y) const {
  if (!explicit_) return bwd_fn_(y);
  auto it = bwd_map_.find(y);
  if (it == bwd_map_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<Element, Element>> PartialInjection::pairs() const {
  if (!explicit_) {
    throw Error(ErrorCode::not_explicit, "pairs of a lazy partial injection");
  }
  return {fwd_map_.begin(), fwd_map_.end()};
}

PartialInjection pinj_compose(const PartialInjection& f, const PartialInjection& g) {
  detail::require_same_carrier(f.cod(), g.dom(), "pinj_compose");
  if (f.is_explicit() || g.is_explicit()) {
    std::vector<std::pair<Element, Element>> out;
    if (f.is_explicit()) {
      for (const auto& [x, y] : f.pairs()) {
        if (auto z = g.fwd(y)) out.emplace_back(x, *z);
      }
    } else {
      for (const auto& [y, z] : g.pairs()) {
        if (auto x = f.bwd(y)) out.emplace_back(*x, z);
      }
    }
    return PartialInjection::from_pairs(f.dom(), g.cod(), out);
  }
  return PartialInjection::lazy(
      f.dom(), g.cod(),
      [f, g](const Element& x) -> std::optional<Element> {
        auto y = f.fwd(x);
        return y ? g.fwd(*y) : std::nullopt;
      },
      [f, g](const Element& z) -> std::optional<Element> {
        auto y = g.bwd(z);
        return y ? f.bwd(*y) : std::nullopt;
      });
}

PartialInjection pinj_dagger(const PartialInjection& f) {
  if (f.is_explicit()) {
    std::vector<std::pair<Element, Element>> out;
    for (const auto& [x, y] : f.pairs()) out.emplace_back(y, x);
    return PartialInjection::from_pairs(f.cod(), f.dom(), out);
  }
  return PartialInjection::lazy(
      f.cod(), f.dom(), [f](const Element& y) { return f.bwd(y); },
      [f](const Element& x) { return f.fwd(x); });
}

bool is_mutually_inverse(const PartialInjection& f, const std::vector<Element>& dom_samples,
                         const std::vector<Element>& cod_samples) {
  auto check_x = [&](const Element& x) {
    auto y = f.fwd(x);
    if (!y) return true;
    auto back = f.bwd(*y);
    return back && *back == x;
  };
  auto check_y = [&](const Element& y) {
    auto x = f.bwd(y);
    if (!x) return true;
    auto back = f.fwd(*x);
    return back && *back == y;
  };
  if (f.is_explicit()) {
    for (const auto& [x, y] : f.pairs()) {
      if (!check_x(x) || !check_y(y)) return false;
    }
    return true;
  }
  for (const auto& x : dom_samples) {
    if (!check_x(x)) return false;
  }
  for (const auto& y : cod_samples) {
    if (!check_y(y)) return false;
  }
  return true;
}

bool pinj_equal(const PartialInjection& f, const PartialInjection& g) {
  return f.dom() == g.dom() && f.cod() == g.cod() && f.pairs() == g.pairs();
}

BifMRel pinj_embed(const PartialInjection& f) {
  const SemiringTag tag = SemiringTag::bool2;
  if (f.is_explicit()) {
    BifMRel::Table rows;
    for (const auto& [x, y] : f.pairs()) rows.emplace(x, FinMultiset::unit(tag, y));
    return BifMRel::from_rows(tag, f.dom(), f.cod(), std::move(rows));
  }
  return graph_relation(
      tag, f.dom(), f.cod(), [f](const Element& x) { return f.fwd(x); },
      [f](const Element& y) { return f.bwd(y); });
}

namespace {

FinMultiset embed_vector(const FinMultiset& m, SemiringTag tag) {
  FinMultiset out(tag);
  for (const auto& [e, v] : m) {
    if (v.as_bool()) out.accumulate(e, Value::one(tag));
  }
  return out;
}

}  // namespace

BifMRel embed_bool(const BifMRel& r, SemiringTag tag) {
  detail::require_same_tag(r.tag(), SemiringTag::bool2);
  if (r.is_explicit()) {
    BifMRel::Table rows;
    for (const auto& x : r.row_support()) rows.emplace(x, embed_vector(r.row(x), tag));
    return BifMRel::from_rows(tag, r.dom(), r.cod(), std::move(rows));
  }
  return BifMRel::lazy(
      tag, r.dom(), r.cod(), [r, tag](const Element& x) { return embed_vector(r.row(x), tag); },
      [r, tag](const Element& y) { return embed_vector(r.col(y), tag); });
}

BifinitenessReport is_bifinite_bool(const BifMRel& r) {
  BifinitenessReport report;
  report.partial = !r.is_explicit();
  return report;
}

BifinitenessReport is_bifinite_bool(const PredicateRelation& r, std::int64_t lo,
                                    std::int64_t hi) {
  BifinitenessReport report;
  report.partial = !(r.dom.is_finite() && r.cod.is_finite());
  const std::int64_t span = std::max<std::int64_t>(hi - lo, 1);
  auto count = [&](const Element& e, const std::vector<Element>& others, bool as_row) {
    std::size_t n = 0;
    for (const auto& o : others) {
      if (as_row ? r.holds(e, o) : r.holds(o, e)) ++n;
    }
    return n;
  };
  auto scan = [&](const Carrier& index, const Carrier& other, bool as_row) {
    const auto near = other.window(lo - span, hi + span);
    const auto far = other.window(lo - 3 * span, hi + 3 * span);
    for (const auto& e : index.window(lo, hi)) {
      if (count(e, far, as_row) > count(e, near, as_row)) {
        report.bifinite = false;
        report.witness = e;
        return;
      }
    }
  };
  scan(r.dom, r.cod, true);
  if (report.bifinite) scan(r.cod, r.dom, false);
  return report;
}

namespace {

void check_probability(const Value& v, double tol) {
  bool ok = false;
  if (v.tag() == SemiringTag::rat) {
    ok = sgn(v.as_rational()) >= 0 && v.as_rational() <= 1;
  } else if (v.tag() == SemiringTag::f64) {
    ok = v.as_real() >= -tol && v.as_real() <= 1.0 + tol;
  } else {
    throw Error(ErrorCode::entry_out_of_range,
                "bistochastic relations take rat or f64 values, got " +
                    std::string(semiring_name(v.tag())));
  }
  if (!ok) throw Error(ErrorCode::entry_out_of_range, v.to_string() + " is not in [0, 1]");
}

}  // namespace

bool is_bistochastic(const BifMRel& r, double tol) {
  if (r.tag() != SemiringTag::rat && r.tag() != SemiringTag::f64) {
    check_probability(Value::zero(r.tag()), tol);
  }
  for (const auto& e : r.entries()) check_probability(e.value, tol);
  if (!r.dom().is_finite() || !r.cod().is_finite()) return false;
  const Value one = Value::one(r.tag());
  auto sums_to_one = [&](const FinMultiset& m) {
    Value sum = Value::zero(r.tag());
    for (const auto& [e, v] : m) sum += v;
    return approx_equal(sum, one, tol);
  };
  for (const auto& x : r.dom().elements()) {
    if (!sums_to_one(r.row(x))) return false;
  }
  for (const auto& y : r.cod().elements()) {
    if (!sums_to_one(r.col(y))) return false;
  }
  return true;
}

}  // namespace tamerel
