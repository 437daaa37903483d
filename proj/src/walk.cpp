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

#include "tamerel/walk.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>

#include "parallel.hpp"
#include "relation_internal.hpp"
#include "tamerel/error.hpp"

namespace tamerel {

namespace {

Element at(Side side, std::int64_t n) { return Element::tagged(side, Element::integer(n)); }

bool is_walk_element(const Element& e) {
  return e.kind() == ElementKind::tagged && e.inner().kind() == ElementKind::integer;
}

}  // namespace

Carrier walk_carrier() { return Carrier::sum(Carrier::int_line(), Carrier::int_line()); }

BifMRel hadamard_step(SemiringTag tag) {
  const Value h = Value::inv_sqrt2(tag);
  const Value neg_h = -h;
  auto row = [tag, h, neg_h](const Element& u) {
    FinMultiset out(tag);
    if (!is_walk_element(u)) return out;
    const std::int64_t n = u.inner().integer_value();
    out.accumulate(at(Side::left, n - 1), h);
    out.accumulate(at(Side::right, n + 1), u.side() == Side::left ? h : neg_h);
    return out;
  };
  auto col = [tag, h, neg_h](const Element& v) {
    FinMultiset out(tag);
    if (!is_walk_element(v)) return out;
    const std::int64_t m = v.inner().integer_value();
    if (v.side() == Side::left) {
      out.accumulate(at(Side::left, m + 1), h);
      out.accumulate(at(Side::right, m + 1), h);
    } else {
      out.accumulate(at(Side::left, m - 1), h);
      out.accumulate(at(Side::right, m - 1), neg_h);
    }
    return out;
  };
  return BifMRel::lazy(tag, walk_carrier(), walk_carrier(), row, col, kHadamardWalkBuiltin);
}

FinMultiset walk_basis_state(SemiringTag tag, Side side, std::int64_t position) {
  return FinMultiset::unit(tag, at(side, position));
}

FinMultiset walk_symmetric_state(SemiringTag tag) {
  FinMultiset out(tag);
  const Value h = Value::inv_sqrt2(tag);
  Value i_h;
  if (tag == SemiringTag::qisqrt2) {
    i_h = Value::qisqrt2(0, 0, 0, Rational(1, 2));
  } else if (tag == SemiringTag::c64) {
    i_h = Value::complex(0.0, h.as_complex().real());
  } else {
    throw Error(ErrorCode::not_representable,
                "the symmetric state needs i, unavailable in " + std::string(semiring_name(tag)));
  }
  out.accumulate(at(Side::left, 0), h);
  out.accumulate(at(Side::right, 0), i_h);
  return out;
}

void validate_walk_state(const FinMultiset& state, double tol) {
  const Carrier c = walk_carrier();
  for (const auto& [e, v] : state) {
    if (!c.contains(e)) {
      throw Error(ErrorCode::carrier_mismatch, e.to_string() + " is not an element of ℤ + ℤ");
    }
  }
  Value sum = Value::zero(state.tag());
  for (const auto& [e, v] : state) sum += norm_sq(v);
  if (!approx_equal(sum, Value::one(state.tag()), tol)) {
    throw Error(ErrorCode::not_unitary, "initial state has total probability " + sum.to_string());
  }
}

FinMultiset walk_step(const BifMRel& q, const FinMultiset& state, StepKernel kernel) {
  if (kernel == StepKernel::serial_scatter) return apply_state(q, state);
  detail::require_same_tag(q.tag(), state.tag());
  std::set<Element> targets;
  for (const auto& [x, v] : state) {
    for (const auto& [y, w] : q.row(x)) targets.insert(y);
  }
  std::vector<Element> keys(targets.begin(), targets.end());
  const Value zero = Value::zero(q.tag());
  auto values = detail::parallel_map(keys, zero, [&](const Element& y) {
    Value sum = zero;
    for (const auto& [x, w] : q.col(y)) {
      auto it = state.entries().find(x);
      if (it != state.entries().end()) sum += it->second * w;
    }
    return sum;
  });
  FinMultiset out(q.tag());
  for (std::size_t i = 0; i < keys.size(); ++i) out.accumulate(keys[i], values[i]);
  return out;
}

FinMultiset walk_run(const FinMultiset& init, int steps, const BifMRel& q, StepKernel kernel) {
  validate_walk_state(init);
  FinMultiset state = init;
  for (int i = 0; i < steps; ++i) state = walk_step(q, state, kernel);
  return state;
}

FinMultiset walk_run(const FinMultiset& init, int steps) {
  return walk_run(init, steps, hadamard_step(init.tag()));
}

std::vector<FinMultiset> walk_trajectory(const FinMultiset& init, int steps, const BifMRel& q,
                                         StepKernel kernel) {
  validate_walk_state(init);
  std::vector<FinMultiset> out{init};
  for (int i = 0; i < steps; ++i) out.push_back(walk_step(q, out.back(), kernel));
  return out;
}

std::vector<FinMultiset> walk_run_many(const std::vector<FinMultiset>& inits, int steps,
                                       const BifMRel& q) {
  for (const auto& init : inits) validate_walk_state(init);
  return detail::parallel_map(inits, FinMultiset(q.tag()), [&](const FinMultiset& init) {
    FinMultiset state = init;
    for (int i = 0; i < steps; ++i) state = walk_step(q, state, StepKernel::serial_scatter);
    return state;
  });
}

std::vector<ProbabilityRow> distribution(const FinMultiset& state, bool marginalize_coin) {
  std::map<std::pair<std::int64_t, int>, Value> table;
  for (const auto& [e, amp] : state) {
    if (!is_walk_element(e)) {
      throw Error(ErrorCode::carrier_mismatch, e.to_string() + " is not an element of ℤ + ℤ");
    }
    Value p = to_unit_interval(norm_sq(amp));
    const int branch = marginalize_coin ? -1 : static_cast<int>(e.side());
    auto key = std::make_pair(e.inner().integer_value(), branch);
    auto it = table.find(key);
    if (it == table.end()) {
      table.emplace(key, p);
    } else {
      it->second += p;
    }
  }
  std::vector<ProbabilityRow> rows;
  for (const auto& [key, p] : table) {
    ProbabilityRow row;
    if (key.second >= 0) row.branch = static_cast<Side>(key.second);
    row.position = key.first;
    row.probability = p;
    rows.push_back(std::move(row));
  }
  return rows;
}

Value total_probability(const FinMultiset& state) {
  const bool is_float = state.tag() == SemiringTag::f64 || state.tag() == SemiringTag::c64;
  Value sum = Value::zero(is_float ? SemiringTag::f64 : SemiringTag::rat);
  for (const auto& [e, amp] : state) sum += to_unit_interval(norm_sq(amp));
  return sum;
}

WindowReport verify_window_unitary(const BifMRel& q, std::int64_t lo, std::int64_t hi,
                                   double tol) {
  std::vector<Element> window;
  for (Side side : {Side::left, Side::right}) {
    for (std::int64_t n = lo; n <= hi; ++n) window.push_back(at(side, n));
  }
  const std::set<Element> inside(window.begin(), window.end());
  WindowReport report;
  const SemiringTag tag = q.tag();

  auto run = [&](const char* law, bool rows, auto action) {
    std::vector<FinMultiset> vecs;
    std::vector<bool> contained;
    for (const auto& u : window) {
      FinMultiset full = action(u);
      FinMultiset cut(tag);
      bool all_inside = true;
      for (const auto& [w, v] : full) {
        if (inside.count(w)) {
          cut.accumulate(w, v);
        } else {
          all_inside = false;
        }
      }
      vecs.push_back(std::move(cut));
      contained.push_back(all_inside);
    }
    for (std::size_t i = 0; i < window.size(); ++i) {
      for (std::size_t j = 0; j < window.size(); ++j) {
        if (!contained[i] || !contained[j]) {
          ++report.indeterminate;
          continue;
        }
        ++report.verified;
        Value value = rows ? inner(vecs[j], vecs[i]) : inner(vecs[i], vecs[j]);
        Value expected = i == j ? Value::one(tag) : Value::zero(tag);
        if (!approx_equal(value, expected, tol)) {
          report.ok = false;
          report.failures.push_back({law, window[i], window[j], value});
        }
      }
    }
  };
  run("mono", true, [&](const Element& u) { return q.row(u); });
  run("epi", false, [&](const Element& u) { return q.col(u); });
  return report;
}

}  // namespace tamerel
