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

#include "tamerel/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "relation_internal.hpp"
#include "tamerel/error.hpp"

namespace tamerel {

namespace {

void require_field(SemiringTag tag) {
  if (!is_field(tag)) {
    throw Error(ErrorCode::not_a_field,
                "kernels need a field, got " + std::string(semiring_name(tag)));
  }
}

bool negligible(const Value& v, SemiringTag tag, double threshold) {
  if (is_exact(tag)) return v.is_zero();
  return magnitude(v) <= threshold;
}

}  // namespace

bool GramSchmidtResult::all_normalized() const {
  return std::all_of(normalized.begin(), normalized.end(), [](bool b) { return b; });
}

std::vector<Element> touched_elements(const BifMRel& r) { return r.row_support(); }

std::vector<FinMultiset> left_nullspace_basis(const BifMRel& r, double tol) {
  const SemiringTag tag = r.tag();
  require_field(tag);
  if (!r.dom().is_finite()) {
    throw Error(ErrorCode::infinite_carrier, "kernel domain " + r.dom().to_string());
  }
  const std::vector<Element> vars = r.row_support();
  const std::vector<Element> eqs = r.col_support();
  const std::size_t n = vars.size();
  const std::size_t m = eqs.size();

  std::vector<std::vector<Value>> a(m, std::vector<Value>(n, Value::zero(tag)));
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    FinMultiset col = r.col(eqs[i]);
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = col.at(vars[j]);
      scale = std::max(scale, magnitude(a[i][j]));
    }
  }
  const double threshold = tol * scale;

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < m; ++c) {
    std::size_t best = m;
    double best_mag = -1.0;
    for (std::size_t i = row; i < m; ++i) {
      if (negligible(a[i][c], tag, threshold)) continue;
      if (is_exact(tag)) {
        best = i;
        break;
      }
      double mag = magnitude(a[i][c]);
      if (mag > best_mag) {
        best = i;
        best_mag = mag;
      }
    }
    if (best == m) continue;
    std::swap(a[row], a[best]);
    const Value inv = inverse(a[row][c]);
    for (std::size_t j = 0; j < n; ++j) a[row][j] = a[row][j] * inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][c].is_zero()) continue;
      const Value f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] = a[i][j] - f * a[row][j];
    }
    pivot_cols.push_back(c);
    ++row;
  }

  std::set<std::size_t> pivots(pivot_cols.begin(), pivot_cols.end());
  std::vector<FinMultiset> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (pivots.count(f)) continue;
    FinMultiset phi(tag);
    phi.accumulate(vars[f], Value::one(tag));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      if (!negligible(a[i][f], tag, threshold)) phi.accumulate(vars[pivot_cols[i]], -a[i][f]);
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

GramSchmidtResult gram_schmidt(const std::vector<FinMultiset>& vs, double tol) {
  GramSchmidtResult out;
  if (vs.empty()) return out;
  const SemiringTag tag = vs.front().tag();
  require_field(tag);
  const int passes = is_exact(tag) ? 1 : 2;
  std::vector<Value> norms;
  for (std::size_t idx = 0; idx < vs.size(); ++idx) {
    detail::require_same_tag(tag, vs[idx].tag());
    FinMultiset w = vs[idx];
    for (int pass = 0; pass < passes; ++pass) {
      for (std::size_t k = 0; k < out.vectors.size(); ++k) {
        const Value c = inner(out.vectors[k], w) / norms[k];
        if (c.is_zero()) continue;
        w.accumulate_scaled(-c, out.vectors[k]);
      }
    }
    const Value n2 = norm_sq(w);
    const bool vanished = is_exact(tag)
                              ? n2.is_zero()
                              : std::sqrt(magnitude(n2)) <= tol * std::sqrt(magnitude(norm_sq(vs[idx])));
    if (w.empty() || vanished) {
      throw Error(ErrorCode::dependent_input,
                  "vector " + std::to_string(idx) + " lies in the span of its predecessors");
    }
    bool ok = true;
    try {
      const Value s = sqrt_nonneg(n2);
      w = w.scaled(inverse(s));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::not_representable) throw;
      ok = false;
    }
    norms.push_back(ok ? Value::one(tag) : n2);
    out.vectors.push_back(std::move(w));
    out.normalized.push_back(ok);
  }
  return out;
}

KernelResult dagger_kernel_orthogonal(const BifMRel& r, double tol) {
  const SemiringTag tag = r.tag();
  GramSchmidtResult gs = gram_schmidt(left_nullspace_basis(r, tol), tol);
  KernelResult k;
  k.touched = r.row_support();
  k.basis = gs.vectors;
  k.normalized = gs.all_normalized();
  k.source = r;

  std::set<Element> touched(k.touched.begin(), k.touched.end());
  std::vector<Element> passthrough;
  for (const auto& x : r.dom().elements()) {
    if (!touched.count(x)) passthrough.push_back(x);
  }
  k.kernel_object = Carrier::basis_extension(r.dom(), passthrough, k.basis);

  BifMRel::Table rows;
  for (const auto& x : passthrough) rows.emplace(x, FinMultiset::unit(tag, x));
  for (std::size_t i = 0; i < k.basis.size(); ++i) {
    rows.emplace(Element::adjoined(i, k.basis[i]), k.basis[i]);
  }
  k.kernel_map = BifMRel::from_rows(tag, k.kernel_object, r.dom(), std::move(rows));
  return k;
}

KernelResult dagger_kernel(const BifMRel& r, double tol) {
  KernelResult k = dagger_kernel_orthogonal(r, tol);
  if (!k.normalized) {
    throw Error(ErrorCode::normalization_failed,
                "a kernel basis vector has no normalizing square root in " +
                    std::string(semiring_name(r.tag())));
  }
  return k;
}

BifMRel factor_through_kernel(const KernelResult& k, const BifMRel& t, double tol) {
  detail::require_same_carrier(t.cod(), k.kernel_map.cod(), "factor target");
  if (!k.normalized) {
    throw Error(ErrorCode::normalization_failed, "factoring needs an orthonormal kernel basis");
  }
  if (k.source) {
    BifMRel rt = compose(t, *k.source);
    for (const auto& z : rt.row_support()) {
      if (!approx_equal(rt.row(z), FinMultiset(rt.tag()), tol)) {
        throw Error(ErrorCode::not_in_kernel,
                    "r∘t is nonzero at row " + z.to_string());
      }
    }
  }
  BifMRel mediating = compose(t, k.kernel_map.dagger());
  BifMRel rebuilt = compose(mediating, k.kernel_map);
  std::set<Element> keys;
  for (const auto& z : t.row_support()) keys.insert(z);
  for (const auto& z : rebuilt.row_support()) keys.insert(z);
  for (const auto& z : keys) {
    if (!approx_equal(rebuilt.row(z), t.row(z), tol)) {
      throw Error(ErrorCode::not_in_kernel,
                  "t does not factor through the kernel at row " + z.to_string());
    }
  }
  return mediating;
}

}  // namespace tamerel
