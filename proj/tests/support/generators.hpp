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

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "tamerel/formaldist.hpp"
#include "tamerel/instances.hpp"
#include "tamerel/omlattice.hpp"
#include "tamerel/relation.hpp"

namespace tamerel::testing {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}
inline double uniform_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline Rational small_rational(Rng& rng) {
  Rational q(uniform_int(rng, -6, 6), uniform_int(rng, 1, 6));
  q.canonicalize();
  return q;
}

/// A random value of the semiring; zero with some probability.
inline Value random_value(Rng& rng, SemiringTag tag) {
  switch (tag) {
    case SemiringTag::bool2:
      return Value::boolean(coin(rng));
    case SemiringTag::nat:
      return Value::natural(Integer(uniform_int(rng, 0, 6)));
    case SemiringTag::integer:
      return Value::integer(Integer(uniform_int(rng, -6, 6)));
    case SemiringTag::rat:
      return Value::rational(small_rational(rng));
    case SemiringTag::f64:
      return Value::real(uniform_real(rng, -2.0, 2.0));
    case SemiringTag::c64:
      return Value::complex(uniform_real(rng, -2.0, 2.0), uniform_real(rng, -2.0, 2.0));
    case SemiringTag::qsqrt2:
      return Value::qsqrt2(small_rational(rng), small_rational(rng));
    case SemiringTag::qisqrt2:
      return Value::qisqrt2(small_rational(rng), small_rational(rng), small_rational(rng),
                            small_rational(rng));
  }
  return Value::zero(tag);
}

inline Value random_nonzero(Rng& rng, SemiringTag tag) {
  for (;;) {
    Value v = random_value(rng, tag);
    if (!v.is_zero()) return v;
  }
}

/// Named elements prefix0, prefix1, ...
inline Carrier finite_carrier(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return Carrier::finite(std::move(names));
}

inline Carrier random_carrier(Rng& rng, std::size_t max_size, const std::string& prefix) {
  return finite_carrier(static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(max_size))),
                        prefix);
}

inline FinMultiset random_multiset(Rng& rng, SemiringTag tag, const std::vector<Element>& support,
                                   double density = 0.5) {
  FinMultiset m(tag);
  for (const auto& x : support) {
    if (coin(rng, density)) m.accumulate(x, random_nonzero(rng, tag));
  }
  return m;
}

inline BifMRel random_relation(Rng& rng, SemiringTag tag, const Carrier& dom, const Carrier& cod,
                               double density = 0.5) {
  std::vector<Entry> entries;
  for (const auto& x : dom.elements()) {
    for (const auto& y : cod.elements()) {
      if (coin(rng, density)) entries.push_back({x, y, random_nonzero(rng, tag)});
    }
  }
  return BifMRel::from_entries(tag, dom, cod, entries);
}

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

using Matrix = std::vector<std::vector<Value>>;

/// Relation X → Y read off a dense matrix; zero cells are skipped.
inline BifMRel relation_from_matrix(SemiringTag tag, const Carrier& dom, const Carrier& cod,
                                    const Matrix& m) {
  auto xs = dom.elements();
  auto ys = cod.elements();
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (!m[i][j].is_zero()) entries.push_back({xs[i], ys[j], m[i][j]});
    }
  }
  return BifMRel::from_entries(tag, dom, cod, entries);
}

/// A permutation matrix whose columns are then mixed pairwise by 2×2
/// unitary blocks: rotations with a phase over c64/f64, the Hadamard block
/// over qsqrt2/qisqrt2, and sign flips everywhere.
inline Matrix random_unitary_matrix(Rng& rng, std::size_t n, SemiringTag tag,
                                    std::size_t blocks = 3) {
  Matrix m(n, std::vector<Value>(n, Value::zero(tag)));
  auto perm = random_permutation(rng, n);
  for (std::size_t i = 0; i < n; ++i) m[i][perm[i]] = Value::one(tag);
  auto mix = [&](std::size_t i, std::size_t j, const Value& a, const Value& b, const Value& c,
                 const Value& d) {
    for (std::size_t row = 0; row < n; ++row) {
      const Value u = m[row][i];
      const Value v = m[row][j];
      m[row][i] = u * a + v * c;
      m[row][j] = u * b + v * d;
    }
  };
  for (std::size_t k = 0; k < blocks && n >= 2; ++k) {
    auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    if (tag == SemiringTag::c64 || tag == SemiringTag::f64) {
      const double theta = uniform_real(rng, 0.0, 2 * M_PI);
      const double phi = tag == SemiringTag::c64 ? uniform_real(rng, 0.0, 2 * M_PI) : 0.0;
      auto make = [&](std::complex<double> z) {
        return tag == SemiringTag::c64 ? Value::complex(z.real(), z.imag()) : Value::real(z.real());
      };
      const std::complex<double> phase = std::polar(1.0, phi);
      mix(i, j, make(std::cos(theta)), make(-std::sin(theta) * std::conj(phase)),
          make(std::sin(theta) * phase), make(std::cos(theta)));
    } else if (tag == SemiringTag::qsqrt2 || tag == SemiringTag::qisqrt2) {
      const Value h = Value::inv_sqrt2(tag);
      mix(i, j, h, h, h, -h);
    }
    if (coin(rng) && SemiringSpec::of(tag).has_negation) {
      const Value minus = -Value::one(tag);
      for (std::size_t row = 0; row < n; ++row) m[row][i] = m[row][i] * minus;
    }
  }
  return m;
}

inline BifMRel random_unitary(Rng& rng, std::size_t n, SemiringTag tag, std::size_t blocks = 3) {
  Carrier x = finite_carrier(n, "u");
  return relation_from_matrix(tag, x, x, random_unitary_matrix(rng, n, tag, blocks));
}

inline BifMRel random_unitary_c64(Rng& rng, std::size_t n, std::size_t blocks = 3) {
  return random_unitary(rng, n, SemiringTag::c64, blocks);
}

inline PartialInjection random_pinj(Rng& rng, const Carrier& dom, const Carrier& cod,
                                    double density = 0.6) {
  auto xs = dom.elements();
  auto ys = cod.elements();
  std::shuffle(ys.begin(), ys.end(), rng);
  std::vector<std::pair<Element, Element>> pairs;
  for (std::size_t i = 0; i < xs.size() && i < ys.size(); ++i) {
    if (coin(rng, density)) pairs.emplace_back(xs[i], ys[i]);
  }
  return PartialInjection::from_pairs(dom, cod, pairs);
}

/// Meet of a few elementary connections; every antitone Galois connection
/// between finite lattices arises this way.
inline GaloisConnection random_connection(Rng& rng, std::shared_ptr<const OrthoLattice> source,
                                          std::shared_ptr<const OrthoLattice> target) {
  auto pick = [&](const OrthoLattice& l) {
    return static_cast<OrthoLattice::Index>(uniform_int(rng, 0, static_cast<long>(l.size()) - 1));
  };
  GaloisConnection g = elementary_connection(source, target, pick(*source), pick(*target));
  const long extra = uniform_int(rng, 0, 3);
  for (long i = 0; i < extra; ++i) {
    g = connection_meet(g, elementary_connection(source, target, pick(*source), pick(*target)));
  }
  return g;
}

inline std::vector<Element> atoms(std::initializer_list<const char*> names) {
  std::vector<Element> out;
  for (const char* n : names) out.push_back(Element::atom(n));
  return out;
}

/// A random monomial over vars of total degree ≤ max_degree.
inline Monomial random_monomial(Rng& rng, const std::vector<Element>& vars, long max_degree) {
  std::vector<Monomial::Factor> powers;
  long budget = uniform_int(rng, 0, max_degree);
  for (const auto& v : vars) {
    if (budget == 0) break;
    long e = uniform_int(rng, 0, budget);
    budget -= e;
    if (e > 0) powers.emplace_back(v, static_cast<std::uint32_t>(e));
  }
  return Monomial::from_powers(std::move(powers));
}

/// A finite-support tame distribution X → Y with up to `terms` coefficients.
inline BifMRel random_fdist(Rng& rng, SemiringTag tag, const std::vector<Element>& xs,
                            const std::vector<Element>& ys, long max_degree, long terms) {
  std::vector<Entry> entries;
  Carrier dom = Carrier::monomials(xs);
  Carrier cod = Carrier::monomials(ys);
  for (long t = 0; t < terms; ++t) {
    entries.push_back({Element::monomial(random_monomial(rng, xs, max_degree)),
                       Element::monomial(random_monomial(rng, ys, max_degree)),
                       random_nonzero(rng, tag)});
  }
  return BifMRel::from_entries(tag, dom, cod, entries);
}

}  // namespace tamerel::testing
