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

#include <vector>

#include "tamerel/relation.hpp"

namespace tamerel::detail {

void require_same_tag(SemiringTag a, SemiringTag b);
void require_same_carrier(const Carrier& a, const Carrier& b, const char* what);

BifMRel::Table transpose(const BifMRel::Table& table, SemiringTag tag);
/// Pairs keys with values, skipping empty multisets.
BifMRel::Table table_from(const std::vector<Element>& keys, std::vector<FinMultiset> values);

}  // namespace tamerel::detail
