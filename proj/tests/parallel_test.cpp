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

#include <omp.h>

#include "laws.hpp"
#include "tamerel/reference.hpp"
#include "tamerel/walk.hpp"

namespace tamerel {
namespace {

using testing::Rng;
namespace laws = testing::laws;

TEST(Parallel, ComposeMatchesSerialReference) {
  Rng rng(131);
  for (SemiringTag tag : {SemiringTag::nat, SemiringTag::rat, SemiringTag::f64, SemiringTag::c64,
                          SemiringTag::qisqrt2}) {
    for (int i = 0; i < 5; ++i) {
      Carrier x = testing::finite_carrier(60, "x");
      Carrier y = testing::finite_carrier(50, "y");
      Carrier z = testing::finite_carrier(40, "z");
      BifMRel r = testing::random_relation(rng, tag, x, y, 0.1);
      BifMRel s = testing::random_relation(rng, tag, y, z, 0.1);
      BifMRel par = compose(r, s);
      BifMRel ser = reference::compose_serial(r, s);
      // same algorithm, same summation order: bitwise equal even on floats
      ASSERT_TRUE(laws::same(par, ser, 0)) << semiring_name(tag);
      ASSERT_EQ(par.nnz(), ser.nnz());
    }
  }
}

TEST(Parallel, ThreadCountDoesNotChangeResults) {
  Rng rng(132);
  Carrier x = testing::finite_carrier(80, "x");
  BifMRel r = testing::random_relation(rng, SemiringTag::c64, x, x, 0.1);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  BifMRel one = compose(r, r);
  omp_set_num_threads(std::max(saved, 4));
  BifMRel many = compose(r, r);
  omp_set_num_threads(saved);
  EXPECT_TRUE(laws::same(one, many, 0));
}

TEST(Parallel, ErrorsPropagateFromWorkers) {
  Rng rng(133);
  Carrier x = testing::finite_carrier(30, "x");
  BifMRel r = testing::random_relation(rng, SemiringTag::rat, x, x, 0.3);
  BifMRel s = testing::random_relation(rng, SemiringTag::f64, x, x, 0.3);
  EXPECT_THROW(compose(r, s), Error);
}

TEST(Parallel, WalkKernelsAgreeOnLongRuns) {
  for (SemiringTag tag : {SemiringTag::qisqrt2, SemiringTag::c64}) {
    BifMRel q = hadamard_step(tag);
    FinMultiset init = walk_symmetric_state(tag);
    FinMultiset a = walk_run(init, 120, q, StepKernel::serial_scatter);
    FinMultiset b = walk_run(init, 120, q, StepKernel::parallel_gather);
    if (is_exact(tag)) {
      EXPECT_EQ(a, b);
    } else {
      EXPECT_TRUE(approx_equal(a, b, 1e-12));
    }
  }
}

}  // namespace
}  // namespace tamerel
