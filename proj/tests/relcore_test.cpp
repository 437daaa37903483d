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

#include "expect_error.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "tamerel/reference.hpp"
#include "tamerel/relation.hpp"
#include "tamerel/walk.hpp"

namespace tamerel {
namespace {

using testing::Rng;

const Element a = Element::atom("a");
const Element b = Element::atom("b");
const Element x = Element::atom("x");
const Element y = Element::atom("y");
const Element y1 = Element::atom("y1");
const Element y2 = Element::atom("y2");
const Element z = Element::atom("z");

Value q(long n, long d = 1) { return Value::rational(Rational(n, d)); }

TEST(Relcore, IdentityExamples) {
  Carrier ab = Carrier::finite({"a", "b"});
  BifMRel id = identity(SemiringTag::rat, ab);
  EXPECT_TRUE(id.is_explicit());
  EXPECT_EQ(id.nnz(), 2u);
  EXPECT_TRUE(id.entry(a, a).is_one());
  EXPECT_TRUE(id.entry(b, b).is_one());
  EXPECT_TRUE(id.entry(a, b).is_zero());

  BifMRel line = identity(SemiringTag::rat, Carrier::int_line());
  EXPECT_FALSE(line.is_explicit());
  EXPECT_TRUE(line.entry(Element::integer(5), Element::integer(5)).is_one());
  EXPECT_TRUE(line.entry(Element::integer(5), Element::integer(6)).is_zero());

  BifMRel none = identity(SemiringTag::rat, Carrier::empty());
  EXPECT_EQ(none.nnz(), 0u);
}

TEST(Relcore, ComposeExamples) {
  Carrier A = Carrier::finite({"a"});
  Carrier B = Carrier::finite({"b"});
  Carrier Y = Carrier::finite({"y"});
  BifMRel r = BifMRel::from_entries(SemiringTag::bool2, A, Y, {{a, y, Value::boolean(true)}});
  BifMRel s = BifMRel::from_entries(SemiringTag::bool2, Y, B, {{y, b, Value::boolean(true)}});
  BifMRel sr = compose(r, s);
  EXPECT_EQ(sr.nnz(), 1u);
  EXPECT_EQ(sr.entry(a, b), Value::boolean(true));

  Carrier X = Carrier::finite({"x"});
  Carrier Y2 = Carrier::finite({"y1", "y2"});
  Carrier Z = Carrier::finite({"z"});
  BifMRel r2 = BifMRel::from_entries(SemiringTag::rat, X, Y2, {{x, y1, q(1, 2)}, {x, y2, q(1, 2)}});
  BifMRel s2 = BifMRel::from_entries(SemiringTag::rat, Y2, Z, {{y1, z, q(1, 3)}, {y2, z, q(2, 3)}});
  EXPECT_EQ(compose(r2, s2).entry(x, z), q(1, 2));

  EXPECT_TRUE(rel_approx_equal(compose(r2, identity(SemiringTag::rat, Y2)), r2, 0));
}

TEST(Relcore, ComposeRejectsMismatches) {
  Carrier X = Carrier::finite({"x"});
  Carrier Y = Carrier::finite({"y"});
  BifMRel r = identity(SemiringTag::rat, X);
  EXPECT_TAMEREL_ERROR(compose(r, identity(SemiringTag::rat, Y)), ErrorCode::carrier_mismatch);
  EXPECT_TAMEREL_ERROR(compose(r, identity(SemiringTag::f64, X)), ErrorCode::mixed_semiring);
  EXPECT_TAMEREL_ERROR(BifMRel::from_entries(SemiringTag::rat, X, Y, {{y, x, q(1)}}),
                       ErrorCode::carrier_mismatch);
}

TEST(Relcore, DaggerExamples) {
  Carrier X = Carrier::finite({"x"});
  Carrier Y = Carrier::finite({"y"});
  BifMRel r = BifMRel::from_entries(SemiringTag::c64, X, Y, {{x, y, Value::complex(0, 1)}});
  BifMRel d = r.dagger();
  EXPECT_EQ(d.dom(), Y);
  EXPECT_EQ(d.entry(y, x), Value::complex(0, -1));
  EXPECT_TRUE(rel_approx_equal(d.dagger(), r, 0));

  Carrier AB = Carrier::finite({"a", "b"});
  BifMRel rel = BifMRel::from_entries(SemiringTag::bool2, AB, AB, {{a, b, Value::boolean(true)}});
  EXPECT_EQ(rel.dagger().entry(b, a), Value::boolean(true));
  EXPECT_TRUE(rel.dagger().entry(a, b).is_zero());
}

TEST(Relcore, HomAddExamples) {
  Carrier X = Carrier::finite({"x"});
  Carrier Y = Carrier::finite({"y"});
  const auto I = SemiringTag::integer;
  BifMRel p = BifMRel::from_entries(I, X, Y, {{x, y, Value::integer(2)}});
  BifMRel m = BifMRel::from_entries(I, X, Y, {{x, y, Value::integer(-2)}});
  EXPECT_EQ(hom_add(p, m).nnz(), 0u);
  EXPECT_TRUE(rel_approx_equal(hom_add(p, zero_rel(I, X, Y)), p, 0));
  BifMRel h = BifMRel::from_entries(SemiringTag::rat, X, Y, {{x, y, q(1, 2)}});
  BifMRel t = BifMRel::from_entries(SemiringTag::rat, X, Y, {{x, y, q(1, 3)}});
  EXPECT_EQ(hom_add(h, t).entry(x, y), q(5, 6));
  EXPECT_TAMEREL_ERROR(hom_add(p, identity(I, X)), ErrorCode::carrier_mismatch);
}

TEST(Relcore, ZeroExamples) {
  Rng rng(51);
  Carrier X = testing::finite_carrier(3, "x");
  Carrier Y = testing::finite_carrier(4, "y");
  BifMRel r = testing::random_relation(rng, SemiringTag::rat, X, Y);
  EXPECT_EQ(compose(zero_rel(SemiringTag::rat, X, X), r).nnz(), 0u);
  BifMRel d = zero_rel(SemiringTag::rat, X, Y).dagger();
  EXPECT_EQ(d.dom(), Y);
  EXPECT_EQ(d.cod(), X);
  EXPECT_EQ(d.nnz(), 0u);
  EXPECT_TRUE(rel_approx_equal(hom_add(zero_rel(SemiringTag::rat, X, Y), r), r, 0));
}

TEST(Relcore, TensorExamples) {
  Carrier AB = Carrier::finite({"a", "b"});
  Carrier XY = Carrier::finite({"x", "y"});
  BifMRel t = tensor(identity(SemiringTag::rat, AB), identity(SemiringTag::rat, XY));
  EXPECT_TRUE(rel_approx_equal(t, identity(SemiringTag::rat, Carrier::pair(AB, XY)), 0));

  Rng rng(52);
  BifMRel r = testing::random_relation(rng, SemiringTag::rat, AB, XY);
  EXPECT_EQ(tensor(r, zero_rel(SemiringTag::rat, AB, XY)).nnz(), 0u);

  Carrier A = Carrier::finite({"a"});
  Carrier B = Carrier::finite({"b"});
  Carrier C = Carrier::finite({"c"});
  Carrier D = Carrier::finite({"d"});
  const Element c = Element::atom("c");
  const Element d = Element::atom("d");
  BifMRel r1 = BifMRel::from_entries(SemiringTag::rat, A, B, {{a, b, q(2)}});
  BifMRel r2 = BifMRel::from_entries(SemiringTag::rat, C, D, {{c, d, q(3)}});
  BifMRel prod = tensor(r1, r2);
  EXPECT_EQ(prod.nnz(), 1u);
  EXPECT_EQ(prod.entry(Element::pair(a, c), Element::pair(b, d)), q(6));
  EXPECT_TAMEREL_ERROR(tensor(r1, identity(SemiringTag::f64, C)), ErrorCode::mixed_semiring);
}

TEST(Relcore, ApplyStateExamples) {
  Rng rng(53);
  Carrier X = testing::finite_carrier(4, "x");
  Carrier Y = testing::finite_carrier(3, "y");
  FinMultiset sigma = testing::random_multiset(rng, SemiringTag::rat, X.elements());
  EXPECT_EQ(apply_state(identity(SemiringTag::rat, X), sigma), sigma);
  BifMRel r = testing::random_relation(rng, SemiringTag::rat, X, Y);
  for (const auto& e : X.elements()) {
    EXPECT_EQ(apply_state(r, FinMultiset::unit(SemiringTag::rat, e)), r.row(e));
  }
  // equals composing the state morphism 1 → X with r
  BifMRel as_map = compose(state_relation(X, sigma), r);
  EXPECT_EQ(as_map.row(Element::star()), apply_state(r, sigma));

  BifMRel walk = hadamard_step(SemiringTag::qisqrt2);
  FinMultiset start = FinMultiset::unit(SemiringTag::qisqrt2, Element::left(Element::integer(0)));
  FinMultiset next = apply_state(walk, start);
  const Value h = Value::inv_sqrt2(SemiringTag::qisqrt2);
  EXPECT_EQ(next, FinMultiset::from_entries(SemiringTag::qisqrt2,
                                            {{Element::left(Element::integer(-1)), h},
                                             {Element::right(Element::integer(1)), h}}));
}

TEST(Relcore, ScalarsAreOneByOneRelations) {
  Rng rng(54);
  for (int i = 0; i < 100; ++i) {
    Value s = testing::random_value(rng, SemiringTag::qisqrt2);
    Value t = testing::random_value(rng, SemiringTag::qisqrt2);
    EXPECT_EQ(scalar_value(scalar_relation(s)), s);
    EXPECT_EQ(scalar_value(compose(scalar_relation(s), scalar_relation(t))), s * t);
    EXPECT_EQ(scalar_value(scalar_relation(s).dagger()), conj(s));
  }
}

TEST(Relcore, ComposeAgreesWithDenseOracle) {
  Rng rng(55);
  const SemiringTag tags[] = {SemiringTag::bool2, SemiringTag::nat,    SemiringTag::integer,
                              SemiringTag::rat,   SemiringTag::qisqrt2, SemiringTag::c64};
  for (SemiringTag tag : tags) {
    for (int i = 0; i < 40; ++i) {
      Carrier X = testing::random_carrier(rng, 6, "x");
      Carrier Y = testing::random_carrier(rng, 6, "y");
      Carrier Z = testing::random_carrier(rng, 6, "z");
      BifMRel r = testing::random_relation(rng, tag, X, Y);
      BifMRel s = testing::random_relation(rng, tag, Y, Z);
      BifMRel sr = compose(r, s);
      auto want = testing::dense_compose(testing::dense_of(r), testing::dense_of(s));
      ASSERT_TRUE(testing::dense_equal(testing::dense_of(sr), want, 1e-12)) << semiring_name(tag);
      ASSERT_TRUE(check_coherent(sr).ok());
      ASSERT_TRUE(rel_approx_equal(sr, reference::compose_serial(r, s), 0));
      ASSERT_TRUE(rel_approx_equal(sr, reference::compose_dense(r, s), 1e-12));
    }
  }
}

TEST(Relcore, DaggerAgreesWithDenseOracle) {
  Rng rng(56);
  for (int i = 0; i < 50; ++i) {
    Carrier X = testing::random_carrier(rng, 5, "x");
    Carrier Y = testing::random_carrier(rng, 5, "y");
    BifMRel r = testing::random_relation(rng, SemiringTag::qisqrt2, X, Y);
    EXPECT_TRUE(testing::dense_equal(testing::dense_of(r.dagger()),
                                     testing::dense_dagger(testing::dense_of(r)), 0));
  }
}

TEST(Relcore, CategoryAndDaggerLawsOnRandomTriples) {
  Rng rng(57);
  for (SemiringTag tag : {SemiringTag::rat, SemiringTag::qisqrt2, SemiringTag::integer}) {
    for (int i = 0; i < 60; ++i) {
      Carrier W = testing::random_carrier(rng, 5, "w");
      Carrier X = testing::random_carrier(rng, 5, "x");
      Carrier Y = testing::random_carrier(rng, 5, "y");
      Carrier Z = testing::random_carrier(rng, 5, "z");
      BifMRel r = testing::random_relation(rng, tag, W, X);
      BifMRel s = testing::random_relation(rng, tag, X, Y);
      BifMRel t = testing::random_relation(rng, tag, Y, Z);
      EXPECT_TRUE(rel_approx_equal(compose(compose(r, s), t), compose(r, compose(s, t)), 0));
      EXPECT_TRUE(rel_approx_equal(compose(identity(tag, W), r), r, 0));
      EXPECT_TRUE(rel_approx_equal(compose(r, identity(tag, X)), r, 0));
      EXPECT_TRUE(rel_approx_equal(compose(r, s).dagger(), compose(s.dagger(), r.dagger()), 0));
      EXPECT_TRUE(rel_approx_equal(r.dagger().dagger(), r, 0));
      EXPECT_TRUE(rel_approx_equal(identity(tag, X).dagger(), identity(tag, X), 0));
      BifMRel s2 = testing::random_relation(rng, tag, X, Y);
      EXPECT_TRUE(rel_approx_equal(compose(r, hom_add(s, s2)),
                                   hom_add(compose(r, s), compose(r, s2)), 0));
    }
  }
}

TEST(Relcore, LazyRelationsComposeLazily) {
  const auto tag = SemiringTag::qisqrt2;
  BifMRel q = hadamard_step(tag);
  BifMRel q2 = compose(q, q);
  EXPECT_FALSE(q2.is_explicit());
  const Element l0 = Element::left(Element::integer(0));
  // two steps from κ₁0: κ₁(−2): 1/2, κ₁0: 1/2, κ₂0: 1/2, κ₂2: −1/2
  FinMultiset row = q2.row(l0);
  const Value half = Value::qisqrt2(Rational(1, 2), 0, 0, 0);
  EXPECT_EQ(row, FinMultiset::from_entries(tag, {{Element::left(Element::integer(-2)), half},
                                                 {Element::left(Element::integer(0)), half},
                                                 {Element::right(Element::integer(0)), half},
                                                 {Element::right(Element::integer(2)), -half}}));
  auto window = walk_carrier().window(-8, 8);
  EXPECT_TRUE(check_coherent(q2, window, window).ok());
  EXPECT_TRUE(check_coherent(q2.dagger(), window, window).ok());
  EXPECT_TAMEREL_ERROR(q2.entries(), ErrorCode::not_explicit);

  // lazy ∘ explicit is explicit when the explicit side bounds the rows
  Carrier small = Carrier::finite({"p"});
  BifMRel into = BifMRel::from_entries(tag, small, walk_carrier(),
                                       {{Element::atom("p"), l0, Value::one(tag)}});
  BifMRel pushed = compose(into, q2);
  EXPECT_TRUE(pushed.is_explicit());
  EXPECT_EQ(pushed.row(Element::atom("p")), row);
}

TEST(Relcore, CoherenceReportsDisagreement) {
  Rng rng(58);
  Carrier X = testing::finite_carrier(3, "x");
  Carrier Y = testing::finite_carrier(3, "y");
  BifMRel r = testing::random_relation(rng, SemiringTag::rat, X, Y);
  EXPECT_TRUE(check_coherent(r).ok());
  EXPECT_TRUE(check_coherent(r).exhaustive);
  EXPECT_TRUE(check_coherent(compose(r, r.dagger())).ok());

  const Element x0 = Element::atom("x0");
  const Element y0 = Element::atom("y0");
  BifMRel::Table rows;
  rows.emplace(x0, FinMultiset::from_entries(SemiringTag::rat, {{y0, q(1)}}));
  BifMRel::Table cols;
  cols.emplace(y0, FinMultiset::from_entries(SemiringTag::rat, {{x0, q(2)}}));
  BifMRel bad = BifMRel::from_tables_unchecked(SemiringTag::rat, X, Y, rows, cols);
  CoherenceReport report = check_coherent(bad);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].x, x0);
  EXPECT_EQ(report.violations[0].y, y0);

  auto window = walk_carrier().window(-10, 10);
  EXPECT_TRUE(check_coherent(hadamard_step(), window, window).ok());
}

TEST(Relcore, ExplicitRowsAndColumnsFromEitherTable) {
  Rng rng(59);
  Carrier X = testing::finite_carrier(4, "x");
  Carrier Y = testing::finite_carrier(5, "y");
  BifMRel r = testing::random_relation(rng, SemiringTag::c64, X, Y);
  BifMRel::Table rows;
  BifMRel::Table cols;
  for (const auto& e : X.elements()) {
    if (!r.row(e).empty()) rows.emplace(e, r.row(e));
  }
  for (const auto& e : Y.elements()) {
    if (!r.col(e).empty()) cols.emplace(e, r.col(e));
  }
  EXPECT_TRUE(rel_approx_equal(BifMRel::from_rows(SemiringTag::c64, X, Y, rows), r, 0));
  EXPECT_TRUE(rel_approx_equal(BifMRel::from_cols(SemiringTag::c64, X, Y, cols), r, 0));
}

}  // namespace
}  // namespace tamerel
