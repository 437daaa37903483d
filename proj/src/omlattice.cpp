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

#include "tamerel/omlattice.hpp"

#include <string>

#include "tamerel/error.hpp"

namespace tamerel {

using Index = OrthoLattice::Index;

namespace {

constexpr Index kUnset = static_cast<Index>(-1);

}  // namespace

OrthoLattice OrthoLattice::make(std::vector<std::string> names,
                                const std::vector<std::pair<std::string, std::string>>& leq,
                                const std::vector<std::pair<std::string, std::string>>& ortho) {
  OrthoLattice l;
  l.names_ = std::move(names);
  const std::size_t n = l.names_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (l.names_[i] == l.names_[j]) {
        throw Error(ErrorCode::parse_error, "duplicate lattice element '" + l.names_[i] + "'");
      }
    }
  }
  auto lookup = [&](const std::string& s) {
    auto i = l.index_of(s);
    if (!i) throw Error(ErrorCode::parse_error, "unknown lattice element '" + s + "'");
    return *i;
  };
  l.leq_.assign(n * n, false);
  for (std::size_t i = 0; i < n; ++i) l.leq_[i * n + i] = true;
  for (const auto& [a, b] : leq) l.leq_[lookup(a) * n + lookup(b)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!l.leq_[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (l.leq_[k * n + j]) l.leq_[i * n + j] = true;
      }
    }
  }
  l.ortho_.assign(n, kUnset);
  for (const auto& [a, b] : ortho) {
    Index ia = lookup(a);
    Index ib = lookup(b);
    l.ortho_[ia] = ib;
    if (l.ortho_[ib] == kUnset) l.ortho_[ib] = ia;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (l.ortho_[i] == kUnset) {
      throw Error(ErrorCode::parse_error, "lattice element '" + l.names_[i] + "' has no ⊥");
    }
  }
  return l;
}

std::optional<Index> OrthoLattice::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<Index> OrthoLattice::bottom() const {
  for (Index i = 0; i < size(); ++i) {
    bool least = true;
    for (Index j = 0; j < size() && least; ++j) least = leq(i, j);
    if (least) return i;
  }
  return std::nullopt;
}

std::optional<Index> OrthoLattice::top() const {
  for (Index i = 0; i < size(); ++i) {
    bool greatest = true;
    for (Index j = 0; j < size() && greatest; ++j) greatest = leq(j, i);
    if (greatest) return i;
  }
  return std::nullopt;
}

std::optional<Index> OrthoLattice::meet(Index a, Index b) const {
  std::optional<Index> best;
  for (Index c = 0; c < size(); ++c) {
    if (!leq(c, a) || !leq(c, b)) continue;
    if (!best || leq(*best, c)) best = c;
  }
  if (!best) return std::nullopt;
  for (Index c = 0; c < size(); ++c) {
    if (leq(c, a) && leq(c, b) && !leq(c, *best)) return std::nullopt;
  }
  return best;
}

std::optional<Index> OrthoLattice::join(Index a, Index b) const {
  std::optional<Index> best;
  for (Index c = 0; c < size(); ++c) {
    if (!leq(a, c) || !leq(b, c)) continue;
    if (!best || leq(c, *best)) best = c;
  }
  if (!best) return std::nullopt;
  for (Index c = 0; c < size(); ++c) {
    if (leq(a, c) && leq(b, c) && !leq(*best, c)) return std::nullopt;
  }
  return best;
}

std::vector<std::pair<Index, Index>> OrthoLattice::strict_pairs() const {
  std::vector<std::pair<Index, Index>> out;
  for (Index a = 0; a < size(); ++a) {
    for (Index b = 0; b < size(); ++b) {
      if (a != b && leq(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

bool OrthoLattice::operator==(const OrthoLattice& other) const {
  return names_ == other.names_ && leq_ == other.leq_ && ortho_ == other.ortho_;
}

Carrier OrthoLattice::carrier() const { return Carrier::finite(names_); }

OrthoLattice boolean_algebra(std::size_t n) {
  const std::size_t count = std::size_t{1} << n;
  auto name = [n](std::size_t mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  };
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> leq;
  std::vector<std::pair<std::string, std::string>> ortho;
  for (std::size_t a = 0; a < count; ++a) {
    names.push_back(name(a));
    ortho.emplace_back(name(a), name((count - 1) ^ a));
    for (std::size_t b = 0; b < count; ++b) {
      if ((a & b) == a) leq.emplace_back(name(a), name(b));
    }
  }
  return OrthoLattice::make(names, leq, ortho);
}

OrthoLattice mo2() {
  std::vector<std::string> names = {"0", "a", "a'", "b", "b'", "1"};
  std::vector<std::pair<std::string, std::string>> leq;
  for (const auto& m : {"a", "a'", "b", "b'"}) {
    leq.emplace_back("0", m);
    leq.emplace_back(m, "1");
  }
  return OrthoLattice::make(names, leq, {{"0", "1"}, {"a", "a'"}, {"b", "b'"}});
}

OrthoLattice o6() {
  return OrthoLattice::make({"0", "x", "y", "y'", "x'", "1"},
                            {{"0", "x"}, {"x", "y"}, {"y", "1"}, {"0", "y'"}, {"y'", "x'"},
                             {"x'", "1"}},
                            {{"0", "1"}, {"x", "x'"}, {"y", "y'"}});
}

const OmlFailure* OmlReport::find(const std::string& axiom) const {
  for (const auto& f : failures) {
    if (f.axiom == axiom) return &f;
  }
  return nullptr;
}

OmlReport validate_oml(const OrthoLattice& l) {
  OmlReport report;
  const std::size_t n = l.size();
  auto fail = [&](const char* axiom, std::vector<Index> w) {
    report.failures.push_back({axiom, std::move(w)});
  };
  for (Index a = 0; a < n; ++a) {
    if (!l.leq(a, a)) fail("reflexive", {a});
    for (Index b = 0; b < n; ++b) {
      if (a != b && l.leq(a, b) && l.leq(b, a)) fail("antisymmetric", {a, b});
      for (Index c = 0; c < n; ++c) {
        if (l.leq(a, b) && l.leq(b, c) && !l.leq(a, c)) fail("transitive", {a, b, c});
      }
    }
  }
  auto bottom = l.bottom();
  auto top = l.top();
  if (!bottom || !top) {
    fail("bounded", {});
    return report;
  }
  bool lattice = true;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!l.meet(a, b)) {
        fail("meet", {a, b});
        lattice = false;
      }
      if (!l.join(a, b)) {
        fail("join", {a, b});
        lattice = false;
      }
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (l.ortho(l.ortho(a)) != a) fail("involution", {a});
    for (Index b = 0; b < n; ++b) {
      if (l.leq(a, b) && !l.leq(l.ortho(b), l.ortho(a))) fail("antitone", {a, b});
    }
    if (!lattice) continue;
    if (*l.meet(a, l.ortho(a)) != *bottom) fail("noncontradiction", {a});
    if (*l.join(a, l.ortho(a)) != *top) fail("excluded_middle", {a});
  }
  if (!lattice) return report;
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (!l.leq(a, b)) continue;
      if (*l.join(a, *l.meet(l.ortho(a), b)) != b) fail("orthomodular", {a, b});
    }
  }
  return report;
}

bool GaloisConnection::operator==(const GaloisConnection& other) const {
  return *source == *other.source && *target == *other.target && f_sharp == other.f_sharp &&
         f_cosharp == other.f_cosharp;
}

GaloisConnection identity_connection(std::shared_ptr<const OrthoLattice> l) {
  GaloisConnection g{l, l, {}, {}};
  for (Index i = 0; i < l->size(); ++i) g.f_sharp.push_back(l->ortho(i));
  g.f_cosharp = g.f_sharp;
  return g;
}

GaloisConnection elementary_connection(std::shared_ptr<const OrthoLattice> source,
                                       std::shared_ptr<const OrthoLattice> target, Index c,
                                       Index d) {
  const Index top_t = target->top().value();
  const Index top_s = source->top().value();
  GaloisConnection g{source, target, {}, {}};
  for (Index x = 0; x < source->size(); ++x) g.f_sharp.push_back(source->leq(x, c) ? top_t : d);
  for (Index y = 0; y < target->size(); ++y) g.f_cosharp.push_back(target->leq(y, d) ? top_s : c);
  return g;
}

namespace {

void require_same_lattice(const OrthoLattice& a, const OrthoLattice& b, const char* what) {
  if (!(a == b)) throw Error(ErrorCode::carrier_mismatch, std::string(what) + ": lattices differ");
}

Index checked_meet(const OrthoLattice& l, Index a, Index b) {
  auto m = l.meet(a, b);
  if (!m) {
    throw Error(ErrorCode::not_tame, "no meet of " + l.name(a) + " and " + l.name(b));
  }
  return *m;
}

}  // namespace

GaloisConnection connection_meet(const GaloisConnection& a, const GaloisConnection& b) {
  require_same_lattice(*a.source, *b.source, "connection_meet source");
  require_same_lattice(*a.target, *b.target, "connection_meet target");
  GaloisConnection g{a.source, a.target, {}, {}};
  for (Index x = 0; x < a.source->size(); ++x) {
    g.f_sharp.push_back(checked_meet(*a.target, a.f_sharp[x], b.f_sharp[x]));
  }
  for (Index y = 0; y < a.target->size(); ++y) {
    g.f_cosharp.push_back(checked_meet(*a.source, a.f_cosharp[y], b.f_cosharp[y]));
  }
  return g;
}

std::optional<std::pair<Index, Index>> galois_witness(const GaloisConnection& g) {
  for (Index x = 0; x < g.source->size(); ++x) {
    for (Index y = 0; y < g.target->size(); ++y) {
      bool left = g.source->leq(x, g.f_cosharp[y]);
      bool right = g.target->leq(y, g.f_sharp[x]);
      if (left != right) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

bool galois_check(const GaloisConnection& g) { return !galois_witness(g); }

GaloisConnection galois_compose(const GaloisConnection& r, const GaloisConnection& s) {
  require_same_lattice(*r.target, *s.source, "galois_compose");
  const OrthoLattice& mid = *r.target;
  GaloisConnection g{r.source, s.target, {}, {}};
  for (Index x = 0; x < r.source->size(); ++x) {
    g.f_sharp.push_back(s.f_sharp[mid.ortho(r.f_sharp[x])]);
  }
  for (Index z = 0; z < s.target->size(); ++z) {
    g.f_cosharp.push_back(r.f_cosharp[mid.ortho(s.f_cosharp[z])]);
  }
  return g;
}

GaloisConnection galois_dagger(const GaloisConnection& r) {
  return {r.target, r.source, r.f_cosharp, r.f_sharp};
}

BifMRel galois_to_tame(const GaloisConnection& r) {
  const OrthoLattice& x = *r.source;
  const OrthoLattice& y = *r.target;
  const Carrier dom = x.carrier();
  const Carrier cod = y.carrier();
  std::vector<Entry> entries;
  for (Index a = 0; a < x.size(); ++a) {
    const Index lower = y.ortho(r.f_sharp[x.ortho(a)]);
    for (Index b = 0; b < y.size(); ++b) {
      const bool holds = y.leq(lower, b);
      const bool adjoint = x.leq(x.ortho(a), r.f_cosharp[y.ortho(b)]);
      if (holds != adjoint) {
        throw Error(ErrorCode::not_tame,
                    "adjointness fails at (" + x.name(a) + ", " + y.name(b) + ")");
      }
      if (holds) {
        entries.push_back({Element::atom(x.name(a)), Element::atom(y.name(b)),
                           Value::boolean(true)});
      }
    }
  }
  return BifMRel::from_entries(SemiringTag::bool2, dom, cod, entries);
}

namespace {

/// The least element of {e : member(e)}.
Index least_of(const OrthoLattice& l, const std::function<bool(Index)>& member,
               const std::string& where) {
  for (Index c = 0; c < l.size(); ++c) {
    if (!member(c)) continue;
    bool least = true;
    for (Index d = 0; d < l.size() && least; ++d) {
      if (member(d)) least = l.leq(c, d);
    }
    if (least) return c;
  }
  throw Error(ErrorCode::not_tame, where + " has no least element");
}

}  // namespace

GaloisConnection galois_from_tame(const BifMRel& table, std::shared_ptr<const OrthoLattice> source,
                                  std::shared_ptr<const OrthoLattice> target) {
  const OrthoLattice& x = *source;
  const OrthoLattice& y = *target;
  GaloisConnection g{source, target, {}, {}};
  for (Index a = 0; a < x.size(); ++a) {
    const Element row = Element::atom(x.name(x.ortho(a)));
    Index least = least_of(
        y, [&](Index b) { return table.entry(row, Element::atom(y.name(b))).as_bool(); },
        "row " + x.name(x.ortho(a)));
    g.f_sharp.push_back(y.ortho(least));
  }
  for (Index b = 0; b < y.size(); ++b) {
    const Element col = Element::atom(y.name(y.ortho(b)));
    Index least = least_of(
        x, [&](Index a) { return table.entry(Element::atom(x.name(a)), col).as_bool(); },
        "column " + y.name(y.ortho(b)));
    g.f_cosharp.push_back(x.ortho(least));
  }
  return g;
}

}  // namespace tamerel
