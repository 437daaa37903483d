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

#include "tamerel/relation.hpp"

/// Single-threaded implementations kept as baselines for the parallel
/// kernels. Results must agree exactly with the library versions.
namespace tamerel::reference {

/// Same sparse algorithm as compose, one row at a time.
BifMRel compose_serial(const BifMRel& r, const BifMRel& s);

/// Dense triple loop over the finite carriers of both relations.
BifMRel compose_dense(const BifMRel& r, const BifMRel& s);

}  // namespace tamerel::reference
