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

#include <gtest/gtest.h>

#include <array>

#include "expect_error.hpp"
#include "laws.hpp"

namespace tamerel {
namespace {

using testing::Rng;
namespace laws = testing::laws;

const auto Q = SemiringTag::rat;
const Element a = Element::atom("a");
const Element b = Element::atom("b");
const Element c = Element::atom("c");

TEST(Structure, CoprojectionExamples) {
  Carrier x1 = Carrier::finite({"a", "b"});
  Carrier x2 = Carrier::finite({"c"});
  BifMRel k1 = coprojection(1, Q, x1, x2);
  EXPECT_TRUE(laws::is_identity(compose(k1, k1.dagger()), 0));
  EXPECT_TRUE(laws::is_zero_map(compose(k1, coprojection(2, Q, x1, x2).dagger()), 0));
  EXPECT_TRUE(coprojection(2, Q, x1, x2).entry(c, Element::right(c)).is_one());
  EXPECT_EQ(k1.cod(), Carrier::sum(x1, x2));
}

TEST(Structure, TupleExamples) {
  Rng rng(61);
  Carrier z = Carrier::finite({"z"});
  Carrier x1 = Carrier::finite({"a", "b"});
  Carrier x2 = Carrier::finite({"c"});
  BifMRel r1 = testing::random_relation(rng, Q, z, x1, 1.0);
  BifMRel r2 = testing::random_relation(rng, Q, z, x2, 1.0);
  BifMRel t = tuple(r1, r2);
  EXPECT_EQ(t.entry(Element::atom("z"), Element::left(a)), r1.entry(Element::atom("z"), a));
  EXPECT_EQ(t.entry(Element::atom("z"), Element::right(c)), r2.entry(Element::atom("z"), c));
  EXPECT_TRUE(laws::same(compose(t, projection(1, Q, x1, x2)), r1, 0));
  EXPECT_TRUE(laws::is_identity(tuple(projection(1, Q, x1, x2), projection(2, Q, x1, x2)), 0));
  EXPECT_TRUE(laws::is_identity(cotuple(coprojection(1, Q, x1, x2), coprojection(2, Q, x1, x2)), 0));
  EXPECT_TAMEREL_ERROR(tuple(r1, identity(Q, x2)), ErrorCode::carrier_mismatch);
}

TEST(Structure, StructuralIsoExamples) {
  Carrier ab = Carrier::finite({"a", "b"});
  Carrier ys = Carrier::finite({"y"});
  BifMRel g = gamma_swap(Q, ab, ab);
  EXPECT_TRUE(laws::is_identity(compose(g, g.dagger()), 0));
  EXPECT_TRUE(g.entry(Element::pair(a, b), Element::pair(b, a)).is_one());
  EXPECT_TRUE(g.entry(Element::pair(a, b), Element::pair(a, b)).is_zero());

  const Element y = Element::atom("y");
  BifMRel d = distribute(Q, ab, ys, ys);
  EXPECT_TRUE(d.entry(Element::pair(a, Element::left(y)), Element::left(Element::pair(a, y))).is_one());
  EXPECT_TRUE(d.entry(Element::pair(a, Element::left(y)), Element::right(Element::pair(a, y))).is_zero());

  BifMRel l = lambda_unit(Q, ab);
  EXPECT_TRUE(l.entry(Element::pair(Element::star(), a), a).is_one());

  std::array<Carrier, 1> one = {ab};
  EXPECT_TRUE(laws::same(structural_iso(StructuralIso::lambda_unit, Q, one), l, 0));
  std::array<Carrier, 2> two = {ab, ys};
  EXPECT_TRUE(laws::same(structural_iso(StructuralIso::gamma_swap, Q, two), gamma_swap(Q, ab, ys), 0));
  std::array<Carrier, 3> three = {ab, ys, ys};
  EXPECT_TRUE(laws::same(structural_iso(StructuralIso::distribute, Q, three), d, 0));
  for (auto iso : {StructuralIso::lambda_unit, StructuralIso::rho_unit}) {
    BifMRel r = structural_iso(iso, Q, one);
    EXPECT_TRUE(is_unitary(r, 0));
  }
  EXPECT_TRUE(is_unitary(structural_iso(StructuralIso::gamma_swap, Q, two), 0));
  EXPECT_TRUE(is_unitary(structural_iso(StructuralIso::alpha_assoc, Q, three), 0));
  EXPECT_TRUE(is_unitary(structural_iso(StructuralIso::distribute, Q, three), 0));
}

TEST(Structure, BiproductAndTensorLaws) {
  Rng rng(62);
  for (int i = 0; i < 30; ++i) {
    for (SemiringTag tag : {SemiringTag::rat, SemiringTag::qisqrt2}) {
      EXPECT_EQ(laws::projection_after_tuple(rng, tag), "");
      EXPECT_EQ(laws::tuple_of_projections(rng, tag), "");
      EXPECT_EQ(laws::projection_is_dagger(rng, tag), "");
      EXPECT_EQ(laws::tuple_dagger(rng, tag), "");
      EXPECT_EQ(laws::tensor_bifunctorial(rng, tag), "");
      EXPECT_EQ(laws::distribute_natural(rng, tag), "");
    }
  }
}

TEST(Structure, TraceExamples) {
  Carrier x = Carrier::finite({"a", "b"});
  Carrier y = Carrier::finite({"c"});
  Rng rng(63);
  BifMRel s = laws::random_loop(rng, Q, x, y, Carrier::unit());
  BifMRel t = trace(s);
  for (const auto& xe : x.elements()) {
    EXPECT_EQ(t.entry(xe, c), s.entry(Element::pair(xe, Element::star()), Element::pair(c, Element::star())));
  }
  EXPECT_TRUE(laws::is_identity(trace(gamma_swap(Q, x, x)), 0));

  BifMRel over_empty = zero_rel(Q, Carrier::pair(x, Carrier::empty()), Carrier::pair(y, Carrier::empty()));
  EXPECT_EQ(trace(over_empty).nnz(), 0u);
  EXPECT_EQ(trace(over_empty, true).nnz(), 0u);
  EXPECT_EQ(trace(over_empty).dom(), x);

  EXPECT_TAMEREL_ERROR(trace(gamma_swap(SemiringTag::integer, x, x), true),
                       ErrorCode::division_unavailable);
  EXPECT_TAMEREL_ERROR(trace(identity(Q, x)), ErrorCode::carrier_mismatch);
}

TEST(Structure, TraceLaws) {
  Rng rng(64);
  for (int i = 0; i < 25; ++i) {
    for (SemiringTag tag : {SemiringTag::rat, SemiringTag::c64}) {
      EXPECT_EQ(laws::trace_yanking(rng, tag), "");
      EXPECT_EQ(laws::trace_vanishing_unit(rng, tag, 1e-9), "");
      EXPECT_EQ(laws::trace_vanishing_pair(rng, tag, 1e-9), "");
      EXPECT_EQ(laws::trace_superposition(rng, tag, 1e-9), "");
      EXPECT_EQ(laws::trace_naturality(rng, tag, 1e-9), "");
      EXPECT_EQ(laws::trace_exchange(rng, tag, 1e-9), "");
      EXPECT_EQ(laws::trace_normalized_formula(rng, tag, 1e-9), "");
    }
  }
}

// Dividing by #A breaks yanking whenever #A > 1: tr(γ) comes out as id/#A.
TEST(Structure, NormalizedTraceFailsYanking) {
  for (std::size_t n = 2; n <= 6; ++n) {
    Carrier x = testing::finite_carrier(n, "a");
    BifMRel t = trace(gamma_swap(Q, x, x), true);
    EXPECT_FALSE(laws::is_identity(t, 0)) << n;
    EXPECT_TRUE(laws::same(t, scale(Value::rational(Rational(1, static_cast<long>(n))), identity(Q, x)), 0));
  }
  Carrier single = Carrier::finite({"a"});
  EXPECT_TRUE(laws::is_identity(trace(gamma_swap(Q, single, single), true), 0));
}

TEST(Structure, CompactStructure) {
  Carrier x = Carrier::finite({"a", "b"});
  CompactStructure cs = compact_unit_counit(Q, x);
  EXPECT_EQ(cs.unit.nnz(), 2u);
  EXPECT_TRUE(cs.unit.entry(Element::star(), Element::pair(a, a)).is_one());
  EXPECT_TRUE(cs.unit.entry(Element::star(), Element::pair(b, b)).is_one());
  EXPECT_TRUE(cs.unit.entry(Element::star(), Element::pair(a, b)).is_zero());
  EXPECT_TRUE(laws::same(cs.counit, cs.unit.dagger(), 0));

  // X → X×1 → X×(X×X) → (X×X)×X → 1×X → X
  BifMRel snake = compose(
      compose(compose(compose(rho_unit(Q, x).dagger(), tensor(identity(Q, x), cs.unit)),
                      alpha_assoc(Q, x, x, x).dagger()),
              tensor(cs.counit, identity(Q, x))),
      lambda_unit(Q, x));
  EXPECT_TRUE(laws::is_identity(snake, 0));

  Carrier one = Carrier::finite({"a"});
  CompactStructure c1 = compact_unit_counit(Q, one);
  EXPECT_TRUE(laws::same(c1.unit.dagger(), c1.counit, 0));
  EXPECT_TAMEREL_ERROR(compact_unit_counit(Q, Carrier::int_line()), ErrorCode::infinite_carrier);
}

// The trace is the one induced by the compact structure:
// tr(s) = (1⊗ε)∘(s⊗1)∘(1⊗η), up to unitors and associators.
TEST(Structure, TraceMatchesCompactStructure) {
  Rng rng(65);
  for (int i = 0; i < 20; ++i) {
    Carrier x = testing::random_carrier(rng, 3, "x");
    Carrier y = testing::random_carrier(rng, 3, "y");
    Carrier A = testing::random_carrier(rng, 3, "a");
    BifMRel s = laws::random_loop(rng, Q, x, y, A);
    CompactStructure cs = compact_unit_counit(Q, A);
    // X → X×1 → X×(A×A) → (X×A)×A → (Y×A)×A → Y×(A×A) → Y×1 → Y
    BifMRel m = rho_unit(Q, x).dagger();
    m = compose(m, tensor(identity(Q, x), cs.unit));
    m = compose(m, alpha_assoc(Q, x, A, A).dagger());
    m = compose(m, tensor(s, identity(Q, A)));
    m = compose(m, alpha_assoc(Q, y, A, A));
    m = compose(m, tensor(identity(Q, y), cs.counit));
    m = compose(m, rho_unit(Q, y));
    EXPECT_TRUE(laws::same(m, trace(s), 0));
  }
}

}  // namespace
}  // namespace tamerel
