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

#include "tamerel/multiset.hpp"

#include "tamerel/error.hpp"

namespace tamerel {

namespace {

void require_tag(SemiringTag expected, SemiringTag got) {
  if (expected != got) {
    throw Error(ErrorCode::mixed_semiring, std::string(semiring_name(expected)) + " vs " +
                                               std::string(semiring_name(got)));
  }
}

}  // namespace

FinMultiset FinMultiset::unit(SemiringTag tag, const Element& x) {
  FinMultiset m(tag);
  m.entries_.emplace(x, Value::one(tag));
  return m;
}

FinMultiset FinMultiset::from_entries(SemiringTag tag,
                                      std::vector<std::pair<Element, Value>> entries) {
  FinMultiset m(tag);
  for (auto& [x, v] : entries) m.accumulate(x, v);
  return m;
}

Value FinMultiset::at(const Element& x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? Value::zero(tag_) : it->second;
}

void FinMultiset::accumulate(const Element& x, const Value& v) {
  require_tag(tag_, v.tag());
  if (v.is_zero()) return;
  auto [it, inserted] = entries_.try_emplace(x, v);
  if (inserted) return;
  it->second += v;
  if (it->second.is_zero()) entries_.erase(it);
}

void FinMultiset::accumulate_scaled(const Value& s, const FinMultiset& other) {
  require_tag(tag_, other.tag_);
  if (s.is_zero()) return;
  for (const auto& [x, v] : other.entries_) accumulate(x, s * v);
}

FinMultiset FinMultiset::scaled(const Value& s) const {
  FinMultiset out(tag_);
  out.accumulate_scaled(s, *this);
  return out;
}

FinMultiset FinMultiset::conjugated() const {
  if (has_trivial_involution(tag_)) return *this;
  FinMultiset out(tag_);
  for (const auto& [x, v] : entries_) out.entries_.emplace_hint(out.entries_.end(), x, conj(v));
  return out;
}

std::string FinMultiset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [x, v] : entries_) {
    if (!first) out += ", ";
    first = false;
    out += x.to_string() + ": " + v.to_string();
  }
  return out + "}";
}

FinMultiset linear_combine(SemiringTag tag,
                           std::span<const std::pair<Value, FinMultiset>> terms) {
  FinMultiset out(tag);
  for (const auto& [s, phi] : terms) {
    require_tag(tag, s.tag());
    out.accumulate_scaled(s, phi);
  }
  return out;
}

Value inner(const FinMultiset& phi, const FinMultiset& psi) {
  require_tag(phi.tag(), psi.tag());
  Value acc = Value::zero(phi.tag());
  const auto& small = phi.size() <= psi.size() ? phi : psi;
  const auto& large = phi.size() <= psi.size() ? psi : phi;
  for (const auto& [x, v] : small) {
    auto it = large.entries().find(x);
    if (it == large.entries().end()) continue;
    const Value& a = (&small == &phi) ? v : it->second;
    const Value& b = (&small == &phi) ? it->second : v;
    acc += conj(a) * b;
  }
  return acc;
}

Value norm_sq(const FinMultiset& phi) {
  Value acc = Value::zero(phi.tag());
  for (const auto& [x, v] : phi) acc += norm_sq(v);
  return acc;
}

FinMultiset normalize(const FinMultiset& phi) {
  Value n = norm_sq(phi);
  if (n.is_zero()) throw Error(ErrorCode::zero_vector, "cannot normalize the zero multiset");
  Value root = sqrt_nonneg(n);
  return phi.scaled(inverse(root));
}

bool is_orthonormal(std::span<const FinMultiset> vs, double tol) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i; j < vs.size(); ++j) {
      Value expected = i == j ? Value::one(vs[i].tag()) : Value::zero(vs[i].tag());
      if (!approx_equal(inner(vs[i], vs[j]), expected, tol)) return false;
    }
  }
  return true;
}

bool approx_equal(const FinMultiset& x, const FinMultiset& y, double tol) {
  require_tag(x.tag(), y.tag());
  if (is_exact(x.tag())) return x == y;
  for (const auto& [e, v] : x) {
    if (!approx_equal(v, y.at(e), tol)) return false;
  }
  for (const auto& [e, v] : y) {
    if (!x.contains(e) && !approx_equal(v, Value::zero(y.tag()), tol)) return false;
  }
  return true;
}

}  // namespace tamerel
