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

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tamerel/instances.hpp"
#include "tamerel/omlattice.hpp"
#include "tamerel/relation.hpp"
#include "tamerel/walk.hpp"

namespace tamerel {

inline constexpr const char* kRelationFormat = "tamerel-v1";
inline constexpr const char* kLatticeFormat = "tamerel-oml-v1";
inline constexpr const char* kConnectionFormat = "tamerel-galois-v1";
inline constexpr const char* kMultisetFormat = "tamerel-multiset-v1";

// All readers throw ParseError (with a JSON-pointer style location) on
// malformed input and never return a partially built object.

/// Entries in canonical (x, y) order. Lazy relations are written by their
/// builtin name; other lazy relations throw NotExplicit.
std::string write_relation(const BifMRel& r, bool pinj = false);
BifMRel read_relation(std::string_view text);

struct RelationDocument {
  BifMRel relation;
  bool pinj = false;
};
RelationDocument read_relation_document(std::string_view text);

/// A lazy relation known by name: "hadamard_walk" (on ℤ + ℤ) or "identity".
/// Throws UnknownBuiltin.
BifMRel builtin_relation(const std::string& name, SemiringTag tag, const Carrier& dom,
                         const Carrier& cod);

/// Boolean relation document annotated "pinj": true.
std::string write_pinj(const PartialInjection& f);
/// Throws NotInjective when the table is not bi-single-valued.
PartialInjection read_pinj(std::string_view text);

std::string write_multiset(const Carrier& carrier, const FinMultiset& m);
std::pair<Carrier, FinMultiset> read_multiset(std::string_view text);

std::string write_lattice(const OrthoLattice& l);
OrthoLattice read_lattice(std::string_view text);

std::string write_connection(const GaloisConnection& g);
GaloisConnection read_connection(std::string_view text);

/// Decimal or exact text of a probability: "p/q" for rat, %.17g for f64.
std::string probability_text(const Value& p);

struct DistributionStep {
  int step = 0;
  std::vector<ProbabilityRow> rows;
};
/// "step,position,probability" or, when the rows carry branches,
/// "step,branch,position,probability" (branch L or R).
std::string write_distribution_csv(const std::vector<DistributionStep>& steps, bool joint = false);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace tamerel
