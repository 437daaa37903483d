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

#include "tamerel/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tamerel/error.hpp"

namespace tamerel {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::parse_error, (path.empty() ? std::string("/") : path) + ": " + msg);
}

const Json& member(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

const std::string& as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get_ref<const std::string&>();
}

const Json::array_t& as_array(const Json& j, const std::string& path, std::size_t size = 0) {
  if (!j.is_array()) fail(path, "expected an array");
  if (size != 0 && j.size() != size) {
    fail(path, "expected an array of length " + std::to_string(size));
  }
  return j.get_ref<const Json::array_t&>();
}

std::string at_index(const std::string& path, std::size_t i) {
  return path + "/" + std::to_string(i);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

void expect_format(const Json& doc, const char* format) {
  const std::string& f = as_string(member(doc, "format", ""), "/format");
  if (f != format) fail("/format", "expected \"" + std::string(format) + "\", got \"" + f + "\"");
}

// Numbers -------------------------------------------------------------------

std::int64_t parse_int64(const std::string& s, const std::string& path) {
  static const std::regex re("-?(0|[1-9][0-9]*)");
  if (!std::regex_match(s, re)) fail(path, "malformed integer \"" + s + "\"");
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(path, "integer out of range: " + s);
  return v;
}

Integer parse_integer(const std::string& s, const std::string& path) {
  static const std::regex re("-?(0|[1-9][0-9]*)");
  if (!std::regex_match(s, re)) fail(path, "malformed integer \"" + s + "\"");
  return Integer(s, 10);
}

Rational parse_rational(const Json& j, const std::string& path) {
  const std::string& s = as_string(j, path);
  static const std::regex re("-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?");
  if (!std::regex_match(s, re)) fail(path, "malformed rational \"" + s + "\"");
  Rational q(s, 10);
  q.canonicalize();
  return q;
}

double parse_double(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

// Values --------------------------------------------------------------------

Json encode_value(const Value& v) {
  switch (v.tag()) {
    case SemiringTag::bool2: return v.as_bool();
    case SemiringTag::nat:
    case SemiringTag::integer: return v.as_integer().get_str(10);
    case SemiringTag::rat: return v.as_rational().get_str(10);
    case SemiringTag::f64: return v.as_real();
    case SemiringTag::c64: {
      Json j = Json::object();
      j["re"] = v.as_complex().real();
      j["im"] = v.as_complex().imag();
      return j;
    }
    case SemiringTag::qsqrt2: {
      Json j = Json::object();
      j["a"] = v.as_qsqrt2().a.get_str(10);
      j["b"] = v.as_qsqrt2().b.get_str(10);
      return j;
    }
    case SemiringTag::qisqrt2: {
      const auto& z = v.as_qisqrt2();
      Json j = Json::object();
      j["a"] = z.re.a.get_str(10);
      j["b"] = z.re.b.get_str(10);
      j["c"] = z.im.a.get_str(10);
      j["d"] = z.im.b.get_str(10);
      return j;
    }
  }
  return nullptr;
}

Value decode_value(SemiringTag tag, const Json& j, const std::string& path) {
  switch (tag) {
    case SemiringTag::bool2:
      if (!j.is_boolean()) fail(path, "expected true or false");
      return Value::boolean(j.get<bool>());
    case SemiringTag::nat: {
      Integer n = parse_integer(as_string(j, path), path);
      if (sgn(n) < 0) fail(path, "negative nat value");
      return Value::natural(n);
    }
    case SemiringTag::integer: return Value::integer(parse_integer(as_string(j, path), path));
    case SemiringTag::rat: return Value::rational(parse_rational(j, path));
    case SemiringTag::f64: return Value::real(parse_double(j, path));
    case SemiringTag::c64:
      return Value::complex(parse_double(member(j, "re", path), path + "/re"),
                            parse_double(member(j, "im", path), path + "/im"));
    case SemiringTag::qsqrt2:
      return Value::qsqrt2(parse_rational(member(j, "a", path), path + "/a"),
                           parse_rational(member(j, "b", path), path + "/b"));
    case SemiringTag::qisqrt2:
      return Value::qisqrt2(parse_rational(member(j, "a", path), path + "/a"),
                            parse_rational(member(j, "b", path), path + "/b"),
                            parse_rational(member(j, "c", path), path + "/c"),
                            parse_rational(member(j, "d", path), path + "/d"));
  }
  fail(path, "unknown semiring");
}

SemiringTag decode_semiring(const Json& doc) {
  const std::string& name = as_string(member(doc, "semiring", ""), "/semiring");
  auto tag = parse_semiring_name(name);
  if (!tag) fail("/semiring", "unknown semiring \"" + name + "\"");
  return *tag;
}

// Elements and carriers -----------------------------------------------------

Json encode_multiset(const Carrier& carrier, const FinMultiset& m);
FinMultiset decode_multiset(const Carrier& carrier, SemiringTag tag, const Json& j,
                            const std::string& path);

Json encode_element(const Carrier& c, const Element& e) {
  switch (c.kind()) {
    case CarrierKind::finite: return e.name();
    case CarrierKind::int_line: return std::to_string(e.integer_value());
    case CarrierKind::sum: {
      const bool left = e.side() == Side::left;
      return Json::array({left ? "L" : "R", encode_element(left ? c.left() : c.right(), e.inner())});
    }
    case CarrierKind::pair:
      return Json::array(
          {encode_element(c.left(), e.first()), encode_element(c.right(), e.second())});
    case CarrierKind::unit: return "*";
    case CarrierKind::empty: break;
    case CarrierKind::monomials: {
      Json j = Json::object();
      for (const auto& [var, exp] : e.as_monomial().factors()) {
        if (var.kind() != ElementKind::atom) {
          throw Error(ErrorCode::parse_error, "monomial variable " + var.to_string() +
                                                  " has no text encoding");
        }
        j[var.name()] = exp;
      }
      return j;
    }
    case CarrierKind::basis_extension:
      if (e.kind() == ElementKind::adjoined) {
        Json j = Json::object();
        j["vec"] = encode_multiset(c.base(), e.adjoined_vector());
        return j;
      }
      return encode_element(c.base(), e);
  }
  throw Error(ErrorCode::carrier_mismatch, "the empty carrier has no elements");
}

Element decode_element(const Carrier& c, SemiringTag tag, const Json& j, const std::string& path) {
  switch (c.kind()) {
    case CarrierKind::finite: {
      const std::string& name = as_string(j, path);
      Element e = Element::atom(name);
      if (!c.contains(e)) fail(path, "\"" + name + "\" is not an element of " + c.to_string());
      return e;
    }
    case CarrierKind::int_line:
      return Element::integer(parse_int64(as_string(j, path), path));
    case CarrierKind::sum: {
      const auto& a = as_array(j, path, 2);
      const std::string& side = as_string(a[0], path + "/0");
      if (side == "L") return Element::left(decode_element(c.left(), tag, a[1], path + "/1"));
      if (side == "R") return Element::right(decode_element(c.right(), tag, a[1], path + "/1"));
      fail(path + "/0", "expected \"L\" or \"R\"");
    }
    case CarrierKind::pair: {
      const auto& a = as_array(j, path, 2);
      return Element::pair(decode_element(c.left(), tag, a[0], path + "/0"),
                           decode_element(c.right(), tag, a[1], path + "/1"));
    }
    case CarrierKind::unit:
      if (as_string(j, path) != "*") fail(path, "expected \"*\"");
      return Element::star();
    case CarrierKind::empty: fail(path, "the empty carrier has no elements");
    case CarrierKind::monomials: {
      if (!j.is_object()) fail(path, "expected a monomial object");
      std::vector<Monomial::Factor> factors;
      for (const auto& [name, exp] : j.items()) {
        if (!exp.is_number_unsigned() || exp.get<std::uint64_t>() == 0 ||
            exp.get<std::uint64_t>() > UINT32_MAX) {
          fail(path + "/" + name, "expected a positive exponent");
        }
        factors.emplace_back(Element::atom(name), static_cast<std::uint32_t>(exp.get<std::uint64_t>()));
      }
      Element e = Element::monomial(Monomial::from_powers(std::move(factors)));
      if (!c.contains(e)) fail(path, e.to_string() + " uses an undeclared variable");
      return e;
    }
    case CarrierKind::basis_extension: {
      if (j.is_object() && j.contains("vec")) {
        FinMultiset v = decode_multiset(c.base(), tag, j["vec"], path + "/vec");
        const auto& adjoined = c.adjoined();
        for (std::size_t i = 0; i < adjoined.size(); ++i) {
          if (adjoined[i] == v) return Element::adjoined(i, v);
        }
        fail(path, "vector is not among the adjoined basis vectors");
      }
      Element e = decode_element(c.base(), tag, j, path);
      if (!c.contains(e)) fail(path, e.to_string() + " is not a passthrough element");
      return e;
    }
  }
  fail(path, "unknown carrier kind");
}

std::vector<std::size_t> canonical_order(const Carrier& c, const std::vector<Element>& elems) {
  std::vector<std::size_t> idx(elems.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return c.compare(elems[a], elems[b]) < 0; });
  return idx;
}

Json encode_multiset(const Carrier& carrier, const FinMultiset& m) {
  std::vector<Element> keys;
  for (const auto& [e, v] : m) keys.push_back(e);
  Json out = Json::array();
  for (std::size_t i : canonical_order(carrier, keys)) {
    out.push_back(Json::array({encode_element(carrier, keys[i]), encode_value(m.at(keys[i]))}));
  }
  return out;
}

FinMultiset decode_multiset(const Carrier& carrier, SemiringTag tag, const Json& j,
                            const std::string& path) {
  FinMultiset out(tag);
  std::set<Element> seen;
  const auto& items = as_array(j, path);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string p = at_index(path, i);
    const auto& item = as_array(items[i], p, 2);
    Element e = decode_element(carrier, tag, item[0], p + "/0");
    Value v = decode_value(tag, item[1], p + "/1");
    if (v.is_zero()) fail(p + "/1", "zero values are not stored");
    if (!seen.insert(e).second) fail(p + "/0", "duplicate key " + e.to_string());
    out.accumulate(e, v);
  }
  return out;
}

Json encode_carrier(const Carrier& c) {
  Json j = Json::object();
  switch (c.kind()) {
    case CarrierKind::finite:
      j["kind"] = "finite";
      j["elements"] = c.names();
      break;
    case CarrierKind::int_line: j["kind"] = "int_line"; break;
    case CarrierKind::sum:
      j["kind"] = "sum";
      j["left"] = encode_carrier(c.left());
      j["right"] = encode_carrier(c.right());
      break;
    case CarrierKind::pair:
      j["kind"] = "pair";
      j["first"] = encode_carrier(c.left());
      j["second"] = encode_carrier(c.right());
      break;
    case CarrierKind::unit: j["kind"] = "unit"; break;
    case CarrierKind::empty: j["kind"] = "empty"; break;
    case CarrierKind::monomials: {
      j["kind"] = "monomials";
      Json vars = Json::array();
      for (const auto& v : c.variables()) {
        if (v.kind() != ElementKind::atom) {
          throw Error(ErrorCode::parse_error,
                      "monomial variable " + v.to_string() + " has no text encoding");
        }
        vars.push_back(v.name());
      }
      j["variables"] = vars;
      break;
    }
    case CarrierKind::basis_extension: {
      j["kind"] = "basis_extension";
      j["base"] = encode_carrier(c.base());
      Json pass = Json::array();
      for (const auto& e : c.passthrough()) pass.push_back(encode_element(c.base(), e));
      j["passthrough"] = pass;
      Json adj = Json::array();
      for (const auto& v : c.adjoined()) adj.push_back(encode_multiset(c.base(), v));
      j["adjoined"] = adj;
      break;
    }
  }
  return j;
}

Carrier decode_carrier(const Json& j, SemiringTag tag, const std::string& path) {
  const std::string& kind = as_string(member(j, "kind", path), path + "/kind");
  if (kind == "finite") {
    std::vector<std::string> names;
    const auto& elems = as_array(member(j, "elements", path), path + "/elements");
    for (std::size_t i = 0; i < elems.size(); ++i) {
      names.push_back(as_string(elems[i], at_index(path + "/elements", i)));
    }
    try {
      return Carrier::finite(std::move(names));
    } catch (const Error& e) {
      fail(path + "/elements", e.what());
    }
  }
  if (kind == "int_line") return Carrier::int_line();
  if (kind == "unit") return Carrier::unit();
  if (kind == "empty") return Carrier::empty();
  if (kind == "sum") {
    return Carrier::sum(decode_carrier(member(j, "left", path), tag, path + "/left"),
                        decode_carrier(member(j, "right", path), tag, path + "/right"));
  }
  if (kind == "pair") {
    return Carrier::pair(decode_carrier(member(j, "first", path), tag, path + "/first"),
                         decode_carrier(member(j, "second", path), tag, path + "/second"));
  }
  if (kind == "monomials") {
    std::vector<Element> vars;
    const auto& items = as_array(member(j, "variables", path), path + "/variables");
    for (std::size_t i = 0; i < items.size(); ++i) {
      vars.push_back(Element::atom(as_string(items[i], at_index(path + "/variables", i))));
    }
    return Carrier::monomials(std::move(vars));
  }
  if (kind == "basis_extension") {
    Carrier base = decode_carrier(member(j, "base", path), tag, path + "/base");
    std::vector<Element> pass;
    const auto& items = as_array(member(j, "passthrough", path), path + "/passthrough");
    for (std::size_t i = 0; i < items.size(); ++i) {
      pass.push_back(decode_element(base, tag, items[i], at_index(path + "/passthrough", i)));
    }
    std::vector<FinMultiset> adjoined;
    const auto& vecs = as_array(member(j, "adjoined", path), path + "/adjoined");
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      adjoined.push_back(decode_multiset(base, tag, vecs[i], at_index(path + "/adjoined", i)));
    }
    try {
      return Carrier::basis_extension(std::move(base), std::move(pass), std::move(adjoined));
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }
  fail(path + "/kind", "unknown carrier kind \"" + kind + "\"");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

/// Runs a reader, turning library and JSON type errors into ParseError.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::parse_error:
      case ErrorCode::unknown_builtin:
      case ErrorCode::coherence_error:
      case ErrorCode::not_injective:
        throw;
      default:
        throw Error(ErrorCode::parse_error, e.what());
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

Json encode_lattice(const OrthoLattice& l) {
  Json j = Json::object();
  j["format"] = kLatticeFormat;
  j["elements"] = l.names();
  Json leq = Json::array();
  for (const auto& [a, b] : l.strict_pairs()) leq.push_back(Json::array({l.name(a), l.name(b)}));
  j["leq"] = leq;
  Json ortho = Json::array();
  for (std::size_t a = 0; a < l.size(); ++a) {
    ortho.push_back(Json::array({l.name(a), l.name(l.ortho(a))}));
  }
  j["ortho"] = ortho;
  return j;
}

OrthoLattice decode_lattice(const Json& j, const std::string& path) {
  std::vector<std::string> names;
  const auto& elems = as_array(member(j, "elements", path), path + "/elements");
  for (std::size_t i = 0; i < elems.size(); ++i) {
    names.push_back(as_string(elems[i], at_index(path + "/elements", i)));
  }
  auto pairs = [&](const char* key) {
    std::vector<std::pair<std::string, std::string>> out;
    const std::string p = path + "/" + key;
    const auto& items = as_array(member(j, key, path), p);
    for (std::size_t i = 0; i < items.size(); ++i) {
      const auto& pr = as_array(items[i], at_index(p, i), 2);
      out.emplace_back(as_string(pr[0], at_index(p, i) + "/0"),
                       as_string(pr[1], at_index(p, i) + "/1"));
    }
    return out;
  };
  return OrthoLattice::make(std::move(names), pairs("leq"), pairs("ortho"));
}

}  // namespace

BifMRel builtin_relation(const std::string& name, SemiringTag tag, const Carrier& dom,
                         const Carrier& cod) {
  if (name == kHadamardWalkBuiltin) {
    if (!(dom == walk_carrier()) || !(cod == walk_carrier())) {
      throw Error(ErrorCode::parse_error, "hadamard_walk lives on ℤ + ℤ");
    }
    return hadamard_step(tag);
  }
  if (name == "identity") {
    if (!(dom == cod)) throw Error(ErrorCode::parse_error, "identity needs dom = cod");
    return identity(tag, dom);
  }
  throw Error(ErrorCode::unknown_builtin, "unknown builtin relation \"" + name + "\"");
}

std::string write_relation(const BifMRel& r, bool pinj) {
  Json j = Json::object();
  j["format"] = kRelationFormat;
  j["semiring"] = std::string(semiring_name(r.tag()));
  j["dom"] = encode_carrier(r.dom());
  j["cod"] = encode_carrier(r.cod());
  if (pinj) j["pinj"] = true;
  if (!r.is_explicit()) {
    const std::string name = r.builtin_name();
    if (name.empty()) {
      throw Error(ErrorCode::not_explicit, "only explicit or builtin relations can be written");
    }
    j["builtin"] = name;
    return dump(j);
  }
  std::vector<Entry> entries = r.entries();
  std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
    int c = r.dom().compare(a.x, b.x);
    if (c != 0) return c < 0;
    return r.cod().compare(a.y, b.y) < 0;
  });
  Json list = Json::array();
  for (const auto& e : entries) {
    list.push_back(Json::array(
        {encode_element(r.dom(), e.x), encode_element(r.cod(), e.y), encode_value(e.value)}));
  }
  j["entries"] = list;
  return dump(j);
}

RelationDocument read_relation_document(std::string_view text) {
  return guarded([&] {
    const Json doc = parse_json(text);
    expect_format(doc, kRelationFormat);
    const SemiringTag tag = decode_semiring(doc);
    Carrier dom = decode_carrier(member(doc, "dom", ""), tag, "/dom");
    Carrier cod = decode_carrier(member(doc, "cod", ""), tag, "/cod");
    RelationDocument out;
    if (doc.contains("pinj")) {
      if (!doc["pinj"].is_boolean()) fail("/pinj", "expected true or false");
      out.pinj = doc["pinj"].get<bool>();
    }
    if (doc.contains("builtin")) {
      if (doc.contains("entries")) fail("/entries", "a builtin relation has no entry list");
      out.relation = builtin_relation(as_string(doc["builtin"], "/builtin"), tag, dom, cod);
      return out;
    }
    const auto& items = as_array(member(doc, "entries", ""), "/entries");
    std::vector<Entry> entries;
    std::set<std::pair<Element, Element>> seen;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::string p = at_index("/entries", i);
      const auto& item = as_array(items[i], p, 3);
      Element x = decode_element(dom, tag, item[0], p + "/0");
      Element y = decode_element(cod, tag, item[1], p + "/1");
      Value v = decode_value(tag, item[2], p + "/2");
      if (v.is_zero()) fail(p + "/2", "zero values are not stored");
      if (!seen.emplace(x, y).second) {
        fail(p, "duplicate entry (" + x.to_string() + ", " + y.to_string() + ")");
      }
      entries.push_back({std::move(x), std::move(y), std::move(v)});
    }
    out.relation = BifMRel::from_entries(tag, dom, cod, entries);
    if (!check_coherent(out.relation).ok()) {
      throw Error(ErrorCode::coherence_error, "row and column tables disagree");
    }
    return out;
  });
}

BifMRel read_relation(std::string_view text) { return read_relation_document(text).relation; }

std::string write_pinj(const PartialInjection& f) { return write_relation(pinj_embed(f), true); }

PartialInjection read_pinj(std::string_view text) {
  RelationDocument doc = read_relation_document(text);
  if (!doc.pinj) throw Error(ErrorCode::parse_error, "/pinj: document is not marked as a pinj");
  if (doc.relation.tag() != SemiringTag::bool2) {
    throw Error(ErrorCode::parse_error, "/semiring: a pinj document is over bool2");
  }
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& e : doc.relation.entries()) pairs.emplace_back(e.x, e.y);
  return PartialInjection::from_pairs(doc.relation.dom(), doc.relation.cod(), pairs);
}

std::string write_multiset(const Carrier& carrier, const FinMultiset& m) {
  Json j = Json::object();
  j["format"] = kMultisetFormat;
  j["semiring"] = std::string(semiring_name(m.tag()));
  j["carrier"] = encode_carrier(carrier);
  j["entries"] = encode_multiset(carrier, m);
  return dump(j);
}

std::pair<Carrier, FinMultiset> read_multiset(std::string_view text) {
  return guarded([&] {
    const Json doc = parse_json(text);
    expect_format(doc, kMultisetFormat);
    const SemiringTag tag = decode_semiring(doc);
    Carrier carrier = decode_carrier(member(doc, "carrier", ""), tag, "/carrier");
    FinMultiset m = decode_multiset(carrier, tag, member(doc, "entries", ""), "/entries");
    return std::make_pair(carrier, m);
  });
}

std::string write_lattice(const OrthoLattice& l) { return dump(encode_lattice(l)); }

OrthoLattice read_lattice(std::string_view text) {
  return guarded([&] {
    const Json doc = parse_json(text);
    expect_format(doc, kLatticeFormat);
    return decode_lattice(doc, "");
  });
}

std::string write_connection(const GaloisConnection& g) {
  Json j = Json::object();
  j["format"] = kConnectionFormat;
  j["source"] = encode_lattice(*g.source);
  j["target"] = encode_lattice(*g.target);
  Json sharp = Json::array();
  for (std::size_t x = 0; x < g.f_sharp.size(); ++x) {
    sharp.push_back(Json::array({g.source->name(x), g.target->name(g.f_sharp[x])}));
  }
  Json cosharp = Json::array();
  for (std::size_t y = 0; y < g.f_cosharp.size(); ++y) {
    cosharp.push_back(Json::array({g.target->name(y), g.source->name(g.f_cosharp[y])}));
  }
  j["f_sharp"] = sharp;
  j["f_cosharp"] = cosharp;
  return dump(j);
}

GaloisConnection read_connection(std::string_view text) {
  return guarded([&] {
    const Json doc = parse_json(text);
    expect_format(doc, kConnectionFormat);
    auto source = std::make_shared<const OrthoLattice>(
        decode_lattice(member(doc, "source", ""), "/source"));
    auto target = std::make_shared<const OrthoLattice>(
        decode_lattice(member(doc, "target", ""), "/target"));
    auto read_map = [&](const char* key, const OrthoLattice& from, const OrthoLattice& to) {
      const std::string path = std::string("/") + key;
      std::vector<OrthoLattice::Index> out(from.size(), from.size());
      const auto& items = as_array(member(doc, key, ""), path);
      for (std::size_t i = 0; i < items.size(); ++i) {
        const std::string p = at_index(path, i);
        const auto& pr = as_array(items[i], p, 2);
        auto a = from.index_of(as_string(pr[0], p + "/0"));
        auto b = to.index_of(as_string(pr[1], p + "/1"));
        if (!a) fail(p + "/0", "unknown element");
        if (!b) fail(p + "/1", "unknown element");
        if (out[*a] != from.size()) fail(p, "element mapped twice");
        out[*a] = *b;
      }
      for (std::size_t a = 0; a < out.size(); ++a) {
        if (out[a] == from.size()) fail(path, "no image for " + from.name(a));
      }
      return out;
    };
    GaloisConnection g{source, target, {}, {}};
    g.f_sharp = read_map("f_sharp", *source, *target);
    g.f_cosharp = read_map("f_cosharp", *target, *source);
    return g;
  });
}

std::string probability_text(const Value& p) {
  if (p.tag() == SemiringTag::f64) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", p.as_real());
    return buf;
  }
  return p.to_string();
}

std::string write_distribution_csv(const std::vector<DistributionStep>& steps, bool joint) {
  std::ostringstream out;
  out << (joint ? "step,branch,position,probability\n" : "step,position,probability\n");
  for (const auto& s : steps) {
    for (const auto& row : s.rows) {
      out << s.step << ',';
      if (joint) out << (row.branch && *row.branch == Side::right ? "R" : "L") << ',';
      out << row.position << ',' << probability_text(row.probability) << '\n';
    }
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::parse_error, "cannot write " + path);
  out << text;
}

}  // namespace tamerel
