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

#include "tamerel/reference.hpp"

#include "relation_internal.hpp"

namespace tamerel::reference {

BifMRel compose_serial(const BifMRel& r, const BifMRel& s) {
  detail::require_same_tag(r.tag(), s.tag());
  detail::require_same_carrier(r.cod(), s.dom(), "compose");
  BifMRel::Table rows;
  for (const auto& x : r.row_support()) {
    FinMultiset m = apply_state(s, r.row(x));
    if (!m.empty()) rows.emplace(x, std::move(m));
  }
  return BifMRel::from_rows(r.tag(), r.dom(), s.cod(), std::move(rows));
}

BifMRel compose_dense(const BifMRel& r, const BifMRel& s) {
  detail::require_same_tag(r.tag(), s.tag());
  detail::require_same_carrier(r.cod(), s.dom(), "compose");
  const auto xs = r.dom().elements();
  const auto ys = r.cod().elements();
  const auto zs = s.cod().elements();
  std::vector<Entry> entries;
  for (const auto& x : xs) {
    for (const auto& z : zs) {
      Value sum = Value::zero(r.tag());
      for (const auto& y : ys) sum += r.entry(x, y) * s.entry(y, z);
      if (!sum.is_zero()) entries.push_back({x, z, sum});
    }
  }
  return BifMRel::from_entries(r.tag(), r.dom(), s.cod(), entries);
}

}  // namespace tamerel::reference
