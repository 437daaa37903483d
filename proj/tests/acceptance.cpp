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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <nlohmann/json.hpp>
#include <set>
#include <string>

#include "laws.hpp"
#include "tamerel/io.hpp"
#include "tamerel/kernel.hpp"

namespace tamerel {
namespace {

using testing::Rng;
namespace laws = testing::laws;

/// Collects the first few failure messages of a criterion.
struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void record(const std::string& failure) {
    ++checks;
    if (!failure.empty() && failures.size() < 5) failures.push_back(failure);
    else if (!failure.empty()) failures.back() = "... more failures";
  }
  void expect(bool ok, const std::string& what) { record(ok ? "" : what); }
};

struct Criterion {
  int number;
  std::string title;
  double time_limit_s;  // 0: none
  std::function<void(Outcome&)> body;
};

// 1 ---------------------------------------------------------------------------

void dagger_category(Outcome& o) {
  Rng rng(1001);
  for (int i = 0; i < 500; ++i) {
    o.record(laws::dagger_category(rng, SemiringTag::rat, 0, 8));
    o.record(laws::dagger_category(rng, SemiringTag::c64, 1e-9, 8));
  }
}

// 2 ---------------------------------------------------------------------------

void biproducts(Outcome& o) {
  Rng rng(1002);
  const auto Q = SemiringTag::rat;
  for (int i = 0; i < 200; ++i) {
    o.record(laws::projection_after_tuple(rng, Q));
    o.record(laws::tuple_of_projections(rng, Q));
    o.record(laws::projection_is_dagger(rng, Q));
    o.record(laws::tuple_dagger(rng, Q));
    o.record(laws::tensor_bifunctorial(rng, Q));
    o.record(laws::distribute_natural(rng, Q));
  }
}

// 3 ---------------------------------------------------------------------------

void traces(Outcome& o) {
  Rng rng(1003);
  for (SemiringTag tag : {SemiringTag::rat, SemiringTag::c64}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      Carrier a = testing::finite_carrier(n, "a");
      o.expect(laws::is_identity(trace(gamma_swap(tag, a, a)), 0),
               "tr(γ) = id for |A| = " + std::to_string(n));
    }
    const double tol = 1e-9;
    for (int i = 0; i < 100; ++i) {
      o.record(laws::trace_vanishing_unit(rng, tag, tol));
      o.record(laws::trace_vanishing_pair(rng, tag, tol));
      o.record(laws::trace_superposition(rng, tag, tol));
      o.record(laws::trace_naturality(rng, tag, tol));
      o.record(laws::trace_exchange(rng, tag, tol));
      o.record(laws::trace_normalized_formula(rng, tag, tol));
    }
  }
  // the normalized variant does not yank: tr_norm(γ) = (1/n)·id
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto Q = SemiringTag::rat;
    Carrier a = testing::finite_carrier(n, "a");
    BifMRel t = trace(gamma_swap(Q, a, a), true);
    BifMRel want = scale(inverse(Value::from_int(Q, static_cast<long>(n))), identity(Q, a));
    o.expect(laws::same(t, want, 0), "normalized tr(γ) = id/n");
    o.expect(!laws::is_identity(t, 0), "normalized tr(γ) ≠ id");
  }
}

// 4 ---------------------------------------------------------------------------

void dagger_monos(Outcome& o) {
  Rng rng(1004);
  for (SemiringTag tag : {SemiringTag::rat, SemiringTag::qsqrt2, SemiringTag::c64}) {
    std::size_t monos = 0;
    for (int i = 0; i < 300; ++i) {
      bool was_mono = false;
      o.record(laws::dagger_mono_equivalence(rng, tag, 1e-9, &was_mono));
      monos += was_mono ? 1 : 0;
    }
    o.expect(monos > 0 && monos < 300,
             std::string("both directions exercised over ") + std::string(semiring_name(tag)));
  }
}

// 5 ---------------------------------------------------------------------------

BifMRel pairing_example(SemiringTag tag) {
  Carrier x = Carrier::finite({"0", "1", "2", "3", "4", "5"});
  Carrier y = Carrier::finite({"0", "1", "2"});
  std::vector<Entry> entries;
  for (int j = 0; j < 3; ++j) {
    entries.push_back({Element::atom(std::to_string(2 * j)), Element::atom(std::to_string(j)),
                       Value::one(tag)});
    entries.push_back({Element::atom(std::to_string(2 * j + 1)), Element::atom(std::to_string(j)),
                       -Value::one(tag)});
  }
  return BifMRel::from_entries(tag, x, y, entries);
}

void kernel_example(Outcome& o) {
  for (SemiringTag tag : {SemiringTag::qsqrt2, SemiringTag::f64}) {
    const double tol = is_exact(tag) ? 0 : 1e-9;
    const std::string name(semiring_name(tag));
    BifMRel r = pairing_example(tag);
    KernelResult k = dagger_kernel(r);
    o.expect(k.kernel_object.size() == 3, "kernel dimension 3 over " + name);
    BifMRel rk = compose(k.kernel_map, r);
    o.expect(laws::max_abs_diff(rk, zero_rel(tag, rk.dom(), rk.cod())) <= tol, "r∘ker = 0 over " + name);
    BifMRel kk = compose(k.kernel_map, k.kernel_map.dagger());
    o.expect(laws::max_abs_diff(kk, identity(tag, kk.dom())) <= tol, "ker†∘ker = id over " + name);
    for (int i = 0; i < 3; ++i) {
      FinMultiset phi = FinMultiset::from_entries(
          tag, {{Element::atom(std::to_string(2 * i)), Value::inv_sqrt2(tag)},
                {Element::atom(std::to_string(2 * i + 1)), Value::inv_sqrt2(tag)}});
      FinMultiset residual = phi;
      for (const auto& v : k.basis) residual.accumulate_scaled(-inner(v, phi), v);
      double worst = 0;
      for (const auto& [e, v] : residual) worst = std::max(worst, magnitude(v));
      o.expect(worst <= tol, "φ" + std::to_string(i) + " in the span over " + name);
    }
  }
}

// 6 ---------------------------------------------------------------------------

void kernel_universality(Outcome& o) {
  Rng rng(1006);
  for (int i = 0; i < 200; ++i) o.record(laws::kernel_universality(rng, SemiringTag::c64, 1e-8, 8, 6));
}

// 7 ---------------------------------------------------------------------------

/// Unit states on ℤ + ℤ: basis states with a phase, and normalized pairs
/// with phases.
FinMultiset random_unit_state(Rng& rng) {
  const auto QI = SemiringTag::qisqrt2;
  const Value phases[4] = {Value::one(QI), Value::qisqrt2(0, 0, 1, 0), -Value::one(QI),
                           Value::qisqrt2(0, 0, -1, 0)};
  auto element = [&] {
    const std::int64_t p = testing::uniform_int(rng, -5, 5);
    return testing::coin(rng) ? Element::left(Element::integer(p)) : Element::right(Element::integer(p));
  };
  auto phase = [&] { return phases[testing::uniform_int(rng, 0, 3)]; };
  if (testing::coin(rng, 0.3)) return FinMultiset::unit(QI, element()).scaled(phase());
  Element a = element();
  Element b = element();
  while (b == a) b = element();
  return FinMultiset::from_entries(QI, {{a, phase() * Value::inv_sqrt2(QI)},
                                        {b, phase() * Value::inv_sqrt2(QI)}});
}

void walk_exactness(Outcome& o) {
  const auto QI = SemiringTag::qisqrt2;
  const Value one = Value::one(SemiringTag::rat);
  BifMRel q = hadamard_step(QI);
  Rng rng(1007);
  for (int i = 0; i < 20; ++i) {
    FinMultiset s = random_unit_state(rng);
    for (int n = 0; n <= 25; ++n) {
      o.expect(total_probability(s) == one, "total probability 1 at n = " + std::to_string(n));
      s = walk_step(q, s);
    }
  }
  auto d2 = distribution(walk_run(walk_basis_state(QI, Side::left, 0), 2));
  std::vector<std::pair<std::int64_t, Rational>> want = {{-2, Rational(1, 4)}, {0, Rational(1, 2)},
                                                         {2, Rational(1, 4)}};
  o.expect(d2.size() == want.size(), "step-2 support is {−2, 0, 2}");
  for (std::size_t i = 0; i < d2.size() && i < want.size(); ++i) {
    o.expect(d2[i].position == want[i].first && d2[i].probability.as_rational() == want[i].second,
             "step-2 distribution");
  }
  FinMultiset s = walk_symmetric_state(QI);
  for (int n = 0; n <= 25; ++n) {
    std::map<std::int64_t, Rational> p;
    for (const auto& row : distribution(s)) p[row.position] = row.probability.as_rational();
    bool mirrored = true;
    for (const auto& [pos, v] : p) mirrored = mirrored && p.count(-pos) && p[-pos] == v;
    o.expect(mirrored, "mirror symmetry at n = " + std::to_string(n));
    s = walk_step(q, s);
  }
  WindowReport rep = verify_window_unitary(q, -30, 30, 0);
  o.expect(rep.ok && rep.verified > 0, "verify_window_unitary on [−30, 30]");
}

// 8 ---------------------------------------------------------------------------

void bistochastic(Outcome& o) {
  Rng rng(1008);
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 8));
    BifMRel u = testing::random_unitary_c64(rng, n);
    BifMRel p = norm_sq_extract(u, 1e-9);
    o.expect(is_bistochastic(p, 1e-9), "‖u‖² is bistochastic");
  }
}

// 9 ---------------------------------------------------------------------------

void partial_injections(Outcome& o) {
  Rng rng(1009);
  for (int i = 0; i < 300; ++i) o.record(laws::pinj_laws(rng));
}

// 10 --------------------------------------------------------------------------

void orthomodular(Outcome& o) {
  auto b3 = std::make_shared<const OrthoLattice>(boolean_algebra(3));
  auto m2 = std::make_shared<const OrthoLattice>(mo2());
  auto h6 = std::make_shared<const OrthoLattice>(o6());
  o.expect(validate_oml(*b3).ok(), "2³ is orthomodular");
  o.expect(validate_oml(*m2).ok(), "MO2 is orthomodular");
  OmlReport rep = validate_oml(*h6);
  const OmlFailure* f = rep.find("orthomodular");
  o.expect(f != nullptr && f->witness.size() == 2, "O6 fails with a witness");
  if (f != nullptr && f->witness.size() == 2) {
    const auto a = f->witness[0];
    const auto b = f->witness[1];
    o.expect(h6->leq(a, b) && *h6->join(a, *h6->meet(h6->ortho(a), b)) != b, "O6 witness is genuine");
  }
  Rng rng(1010);
  std::vector<laws::LatticePtr> all = {b3, m2, h6};
  for (const auto& a : all) {
    for (int i = 0; i < 100; ++i) {
      const auto& b = all[static_cast<std::size_t>(testing::uniform_int(rng, 0, 2))];
      const auto& c = all[static_cast<std::size_t>(testing::uniform_int(rng, 0, 2))];
      o.record(laws::galois_laws(rng, a, b, c));
    }
  }
}

// 11 --------------------------------------------------------------------------

void formal_distributions(Outcome& o) {
  Rng rng(1011);
  for (int i = 0; i < 100; ++i) o.record(laws::fdist_agreement(rng, SemiringTag::rat));
  for (int i = 0; i < 20; ++i) o.record(laws::fdist_identity_laws(rng, SemiringTag::rat, 6));
  auto xs = testing::atoms({"x0", "x1"});
  auto ys = testing::atoms({"y0", "y1"});
  std::set<Monomial> images;
  bool inverse_ok = true;
  for (const auto& phi : monomials_up_to_degree(xs, 10)) {
    for (const auto& psi : monomials_up_to_degree(ys, 10 - phi.degree())) {
      Monomial chi = star(phi, psi);
      inverse_ok = inverse_ok && split(chi) == std::make_pair(phi, psi);
      images.insert(chi);
    }
  }
  std::vector<Element> sum_vars = {Element::left(xs[0]), Element::left(xs[1]), Element::right(ys[0]),
                                   Element::right(ys[1])};
  auto chis = monomials_up_to_degree(sum_vars, 10);
  for (const auto& chi : chis) {
    auto [phi, psi] = split(chi);
    inverse_ok = inverse_ok && star(phi, psi) == chi;
  }
  o.expect(inverse_ok, "split ∘ star = id and star ∘ split = id");
  o.expect(images.size() == chis.size(), "star is onto monomials over X + Y");
}

// 12 --------------------------------------------------------------------------

void io_round_trips(Outcome& o) {
  Rng rng(1012);
  for (SemiringTag tag : {SemiringTag::bool2, SemiringTag::nat, SemiringTag::integer, SemiringTag::rat,
                          SemiringTag::f64, SemiringTag::c64, SemiringTag::qsqrt2, SemiringTag::qisqrt2}) {
    for (int i = 0; i < 100; ++i) {
      BifMRel r = laws::random_io_relation(rng, tag);
      const std::string text = write_relation(r);
      try {
        BifMRel back = read_relation(text);
        o.expect(laws::explicit_equal(back, r), "round trip is entrywise equal");
        o.expect(write_relation(back) == text, "re-serialization is byte-identical");
      } catch (const Error& e) {
        o.expect(false, std::string("round trip threw: ") + e.what());
      }
    }
  }
  using nlohmann::json;
  Carrier two = Carrier::finite({"0", "1"});
  const json good = json::parse(write_relation(identity(SemiringTag::rat, two)));
  std::vector<std::string> bad = {"", "{", "[]", "null"};
  auto variant = [&](const std::function<void(json&)>& edit) {
    json d = good;
    edit(d);
    bad.push_back(d.dump());
  };
  variant([](json& d) { d["format"] = "other"; });
  variant([](json& d) { d["semiring"] = "quaternion"; });
  variant([](json& d) { d.erase("dom"); });
  variant([](json& d) { d["entries"].push_back(d["entries"][0]); });
  variant([](json& d) { d["entries"][0][2] = "0"; });
  variant([](json& d) { d["entries"][0][2] = "one"; });
  variant([](json& d) { d["entries"][0][0] = "7"; });
  variant([](json& d) { d["entries"][0] = json::array({"0"}); });
  variant([](json& d) { d["cod"]["kind"] = "tree"; });
  variant([](json& d) { d["builtin"] = "hadamard_walk"; });
  for (const auto& text : bad) {
    try {
      (void)read_relation(text);
      o.expect(false, "malformed document accepted: " + text);
    } catch (const Error& e) {
      o.expect(e.code() == ErrorCode::parse_error,
               std::string("malformed document gave ") + std::string(error_code_name(e.code())));
    }
  }
}

}  // namespace
}  // namespace tamerel

int main() {
  using namespace tamerel;
  const std::vector<Criterion> criteria = {
      {1, "dagger-category laws (rat exact, c64 1e-9)", 10, dagger_category},
      {2, "biproduct and tensor laws (rat exact)", 0, biproducts},
      {3, "trace laws and normalized-trace discrepancy", 0, traces},
      {4, "dagger mono iff orthonormal rows", 0, dagger_monos},
      {5, "kernel of the pairing example", 0, kernel_example},
      {6, "kernel universality (c64, 1e-8)", 20, kernel_universality},
      {7, "exact Hadamard walk", 5, walk_exactness},
      {8, "bistochastic extraction from unitaries", 0, bistochastic},
      {9, "partial injections and embeddings", 0, partial_injections},
      {10, "orthomodular lattices and Galois connections", 0, orthomodular},
      {11, "formal distributions", 0, formal_distributions},
      {12, "serialization round trips and malformed input", 0, io_round_trips},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("uncaught: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
      o.failures.push_back("runtime " + std::to_string(secs) + " s over the " +
                           std::to_string(c.time_limit_s) + " s limit");
    }
    const bool pass = o.failures.empty();
    failed += pass ? 0 : 1;
    std::printf("%s  %2d  %-48s %7zu checks  %7.2f s\n", pass ? "PASS" : "FAIL", c.number,
                c.title.c_str(), o.checks, secs);
    for (const auto& f : o.failures) std::printf("        - %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
