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

#include "cli.hpp"

#include <CLI11.hpp>

#include <memory>
#include <ostream>
#include <sstream>

#include "tamerel/error.hpp"
#include "tamerel/formaldist.hpp"
#include "tamerel/instances.hpp"
#include "tamerel/io.hpp"
#include "tamerel/kernel.hpp"
#include "tamerel/omlattice.hpp"
#include "tamerel/relation.hpp"
#include "tamerel/walk.hpp"

namespace tamerel::cli {

namespace {

struct Options {
  std::string a;
  std::string b;
  std::string output;
  std::string property;
  std::string window;
  std::string init;
  std::string semiring = "qisqrt2";
  double tol = 0.0;
  int steps = 0;
  bool joint = false;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

BifMRel load_relation(const std::string& path) { return read_relation(read_text_file(path)); }

GaloisConnection load_connection(const std::string& path) {
  return read_connection(read_text_file(path));
}

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& text) {
  auto colon = text.find(':', text.empty() || text[0] != '-' ? 0 : 1);
  if (colon == std::string::npos) {
    throw Error(ErrorCode::parse_error, "--window expects LO:HI, got \"" + text + "\"");
  }
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo_text = text.substr(0, colon);
    const std::string hi_text = text.substr(colon + 1);
    std::int64_t lo = std::stoll(lo_text, &used_lo);
    std::int64_t hi = std::stoll(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size() || lo > hi) throw 0;
    return {lo, hi};
  } catch (...) {
    throw Error(ErrorCode::parse_error, "--window expects LO:HI, got \"" + text + "\"");
  }
}

void tolerance_notice(const CLI::App& cmd, SemiringTag tag, std::ostream& err) {
  if (cmd.count("--tol") > 0 && is_exact(tag)) {
    err << "note: " << semiring_name(tag) << " is exact; --tol is ignored\n";
  }
}

int verdict(bool value, std::ostream& out) {
  out << (value ? "true" : "false") << '\n';
  return value ? kExitOk : kExitFalse;
}

int run_check(const CLI::App& cmd, const Options& o, std::ostream& out, std::ostream& err) {
  const BifMRel r = load_relation(o.a);
  const double tol = cmd.count("--tol") > 0 ? o.tol : 1e-9;
  tolerance_notice(cmd, r.tag(), err);
  std::optional<Window> window;
  if (!o.window.empty() || !r.is_explicit()) {
    auto [lo, hi] = parse_window(o.window.empty() ? "-10:10" : o.window);
    window = Window{r.dom().window(lo, hi), r.cod().window(lo, hi)};
  }
  const std::string& p = o.property;
  if (p == "coherent") {
    CoherenceReport report = window ? check_coherent(r, window->dom, window->cod)
                                    : check_coherent(r);
    for (const auto& v : report.violations) {
      err << "violation at (" << v.x.to_string() << ", " << v.y.to_string()
          << "): row " << v.row_value.to_string() << ", column " << v.col_value.to_string()
          << '\n';
    }
    return verdict(report.ok(), out);
  }
  if (p == "bistochastic") return verdict(is_bistochastic(r, tol), out);
  if ((p == "self-adjoint" || p == "projection") && !(r.dom() == r.cod())) {
    throw Error(ErrorCode::non_square, r.dom().to_string() + " → " + r.cod().to_string());
  }
  Classification c = classify(r, tol, r.is_explicit() ? std::optional<Window>() : window);
  if (c.partial) err << "note: verdict covers the window only\n";
  if (p == "unitary") return verdict(c.unitary, out);
  if (p == "dagger-mono") return verdict(c.dagger_mono, out);
  if (p == "dagger-epi") return verdict(c.dagger_epi, out);
  if (p == "self-adjoint") return verdict(*c.self_adjoint, out);
  return verdict(*c.projection, out);
}

KernelResult kernel_from_map(const BifMRel& k) {
  if (k.dom().kind() != CarrierKind::basis_extension) {
    throw Error(ErrorCode::parse_error, "kernel file must have a basis_extension domain");
  }
  KernelResult out;
  out.kernel_object = k.dom();
  out.basis = k.dom().adjoined();
  out.kernel_map = k;
  out.normalized = true;
  return out;
}

int run_walk(const CLI::App& cmd, const Options& o, std::ostream& out) {
  if (o.steps < 0) throw Error(ErrorCode::parse_error, "--steps must be nonnegative");
  auto tag = parse_semiring_name(o.semiring);
  if (!tag || (*tag != SemiringTag::qisqrt2 && *tag != SemiringTag::c64)) {
    throw Error(ErrorCode::parse_error, "--semiring must be qisqrt2 or c64");
  }
  FinMultiset init = walk_basis_state(*tag, Side::left, 0);
  if (!o.init.empty()) {
    auto [carrier, state] = read_multiset(read_text_file(o.init));
    if (!(carrier == walk_carrier())) {
      throw Error(ErrorCode::carrier_mismatch, "initial state must live on ℤ + ℤ");
    }
    if (cmd.count("--semiring") > 0 && state.tag() != *tag) {
      throw Error(ErrorCode::mixed_semiring, "initial state is over " +
                                                 std::string(semiring_name(state.tag())));
    }
    init = state;
  }
  std::vector<FinMultiset> states = walk_trajectory(init, o.steps, hadamard_step(init.tag()));
  std::vector<DistributionStep> steps;
  for (std::size_t i = 0; i < states.size(); ++i) {
    steps.push_back({static_cast<int>(i), distribution(states[i], !o.joint)});
  }
  emit(write_distribution_csv(steps, o.joint), o.output, out);
  return kExitOk;
}

int run_oml(const std::string& action, const Options& o, std::ostream& out, std::ostream& err) {
  if (action == "validate") {
    OrthoLattice l = read_lattice(read_text_file(o.a));
    OmlReport report = validate_oml(l);
    for (const auto& f : report.failures) {
      err << f.axiom << " fails at";
      for (auto i : f.witness) err << ' ' << l.name(i);
      err << '\n';
    }
    return verdict(report.ok(), out);
  }
  if (action == "check") {
    GaloisConnection g = load_connection(o.a);
    if (auto w = galois_witness(g)) {
      err << "adjunction fails at (" << g.source->name(w->first) << ", "
          << g.target->name(w->second) << ")\n";
    }
    return verdict(galois_check(g), out);
  }
  if (action == "dagger") {
    emit(write_connection(galois_dagger(load_connection(o.a))), o.output, out);
    return kExitOk;
  }
  emit(write_connection(galois_compose(load_connection(o.a), load_connection(o.b))), o.output,
       out);
  return kExitOk;
}

int run_fdist(const std::string& action, const Options& o, std::ostream& out) {
  const BifMRel p = load_relation(o.a);
  if (action == "dagger") {
    emit(write_relation(fdist_dagger_formula(p)), o.output, out);
  } else if (action == "compose") {
    emit(write_relation(fdist_compose_formula(p, load_relation(o.b))), o.output, out);
  } else {
    auto [carrier, q] = read_multiset(read_text_file(o.b));
    if (!(carrier == p.cod())) {
      throw Error(ErrorCode::carrier_mismatch, "polynomial must live on " + p.cod().to_string());
    }
    emit(write_multiset(p.dom(), phat_apply(p, q)), o.output, out);
  }
  return kExitOk;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bifinite multirelations over involutive semirings", "tamerel"};
  app.require_subcommand(1, 1);
  Options o;

  auto binary = [&](const char* name, const char* help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("A", o.a, "first relation")->required();
    cmd->add_option("B", o.b, "second relation")->required();
    cmd->add_option("-o,--output", o.output, "output file (default: stdout)");
    return cmd;
  };
  auto* compose_cmd = binary("compose", "A then B");
  auto* tensor_cmd = binary("tensor", "A ⊗ B");
  auto* oplus_cmd = binary("oplus", "A ⊕ B");
  auto* add_cmd = binary("add", "A + B");

  auto* dagger_cmd = app.add_subcommand("dagger", "conjugate transpose");
  dagger_cmd->add_option("A", o.a, "relation")->required();
  dagger_cmd->add_option("-o,--output", o.output, "output file (default: stdout)");

  auto* check_cmd = app.add_subcommand("check", "test a property; exit 0 if it holds, 1 if not");
  check_cmd->add_option("property", o.property)
      ->required()
      ->check(CLI::IsMember({"unitary", "dagger-mono", "dagger-epi", "self-adjoint", "projection",
                             "bistochastic", "coherent"}));
  check_cmd->add_option("A", o.a, "relation")->required();
  check_cmd->add_option("--tol", o.tol, "float tolerance (default 1e-9)");
  check_cmd->add_option("--window", o.window, "LO:HI sample window for lazy relations");

  auto* kernel_cmd = app.add_subcommand("kernel", "dagger kernel of a finite relation");
  kernel_cmd->add_option("A", o.a, "relation")->required();
  kernel_cmd->add_option("-o,--output", o.output, "output file (default: stdout)");
  kernel_cmd->add_option("--tol", o.tol, "rank tolerance (default 1e-10)");

  auto* factor_cmd = app.add_subcommand("factor", "mediating map of T through a kernel");
  factor_cmd->add_option("KER", o.a, "kernel map written by `kernel`")->required();
  factor_cmd->add_option("T", o.b, "relation into the kernel's codomain")->required();
  factor_cmd->add_option("-o,--output", o.output, "output file (default: stdout)");
  factor_cmd->add_option("--tol", o.tol, "residual tolerance (default 1e-10)");

  auto* walk_cmd = app.add_subcommand("walk", "Hadamard walk on ℤ + ℤ");
  walk_cmd->add_option("--steps", o.steps, "number of steps")->required();
  walk_cmd->add_option("--init", o.init, "initial state (multiset document)");
  walk_cmd->add_option("--semiring", o.semiring, "qisqrt2 (default) or c64");
  walk_cmd->add_option("--out", o.output, "CSV file (default: stdout)");
  walk_cmd->add_flag("--joint", o.joint, "report (branch, position) instead of position");

  auto* fdist_cmd = app.add_subcommand("fdist", "tame formal distributions");
  fdist_cmd->require_subcommand(1, 1);
  auto* fd_compose = fdist_cmd->add_subcommand("compose", "P then Q by the coefficient formula");
  fd_compose->add_option("P", o.a)->required();
  fd_compose->add_option("Q", o.b)->required();
  fd_compose->add_option("-o,--output", o.output);
  auto* fd_dagger = fdist_cmd->add_subcommand("dagger", "swap the two variable sets");
  fd_dagger->add_option("P", o.a)->required();
  fd_dagger->add_option("-o,--output", o.output);
  auto* fd_apply = fdist_cmd->add_subcommand("apply", "p̂(q) for a polynomial q");
  fd_apply->add_option("P", o.a)->required();
  fd_apply->add_option("Q", o.b, "polynomial (multiset document)")->required();
  fd_apply->add_option("-o,--output", o.output);

  auto* oml_cmd = app.add_subcommand("oml", "orthomodular lattices and Galois connections");
  oml_cmd->require_subcommand(1, 1);
  auto* oml_validate = oml_cmd->add_subcommand("validate", "check the lattice axioms");
  oml_validate->add_option("L", o.a)->required();
  auto* oml_compose = oml_cmd->add_subcommand("compose", "R then S");
  oml_compose->add_option("R", o.a)->required();
  oml_compose->add_option("S", o.b)->required();
  oml_compose->add_option("-o,--output", o.output);
  auto* oml_dagger = oml_cmd->add_subcommand("dagger", "swap the two maps");
  oml_dagger->add_option("R", o.a)->required();
  oml_dagger->add_option("-o,--output", o.output);
  auto* oml_check = oml_cmd->add_subcommand("check", "exhaustive adjunction check");
  oml_check->add_option("R", o.a)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    const CLI::App* deepest = &app;
    for (bool descended = true; descended;) {
      descended = false;
      for (const CLI::App* sub : deepest->get_subcommands()) {
        deepest = sub;
        descended = true;
        break;
      }
    }
    err << "error: " << e.what() << "\n\n" << deepest->help();
    return kExitError;
  }

  try {
    if (*compose_cmd) {
      emit(write_relation(compose(load_relation(o.a), load_relation(o.b))), o.output, out);
    } else if (*tensor_cmd) {
      emit(write_relation(tensor(load_relation(o.a), load_relation(o.b))), o.output, out);
    } else if (*oplus_cmd) {
      emit(write_relation(oplus(load_relation(o.a), load_relation(o.b))), o.output, out);
    } else if (*add_cmd) {
      emit(write_relation(hom_add(load_relation(o.a), load_relation(o.b))), o.output, out);
    } else if (*dagger_cmd) {
      BifMRel d = load_relation(o.a).dagger();
      if (d.is_explicit()) {
        emit(write_relation(BifMRel::from_entries(d.tag(), d.dom(), d.cod(), d.entries())),
             o.output, out);
      } else {
        emit(write_relation(d), o.output, out);
      }
    } else if (*check_cmd) {
      return run_check(*check_cmd, o, out, err);
    } else if (*kernel_cmd) {
      BifMRel r = load_relation(o.a);
      tolerance_notice(*kernel_cmd, r.tag(), err);
      const double tol = kernel_cmd->count("--tol") > 0 ? o.tol : kDefaultKernelTol;
      emit(write_relation(dagger_kernel(r, tol).kernel_map), o.output, out);
    } else if (*factor_cmd) {
      BifMRel k = load_relation(o.a);
      tolerance_notice(*factor_cmd, k.tag(), err);
      const double tol = factor_cmd->count("--tol") > 0 ? o.tol : kDefaultKernelTol;
      BifMRel mediating = factor_through_kernel(kernel_from_map(k), load_relation(o.b), tol);
      emit(write_relation(mediating), o.output, out);
    } else if (*walk_cmd) {
      return run_walk(*walk_cmd, o, out);
    } else if (*fdist_cmd) {
      return run_fdist(*fd_compose ? "compose" : (*fd_dagger ? "dagger" : "apply"), o, out);
    } else if (*oml_cmd) {
      std::string action = *oml_validate  ? "validate"
                           : *oml_compose ? "compose"
                           : *oml_dagger  ? "dagger"
                                          : "check";
      return run_oml(action, o, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace tamerel::cli
