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

#include "tamerel/semiring.hpp"

#include <cmath>
#include <cstdio>

#include "tamerel/error.hpp"

namespace tamerel {

namespace {

void require_same(const Value& x, const Value& y) {
  if (x.tag() != y.tag()) {
    throw Error(ErrorCode::mixed_semiring,
                std::string(semiring_name(x.tag())) + " vs " +
                    std::string(semiring_name(y.tag())));
  }
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string rational_text(const Rational& q) { return q.get_str(10); }

std::string qsqrt2_text(const QSqrt2& x) {
  return rational_text(x.a) + "+" + rational_text(x.b) + "*sqrt2";
}

std::optional<QSqrt2> qsqrt2_sqrt(const QSqrt2& s) {
  if (s.is_zero()) return QSqrt2{};
  if (s.sign() < 0) return std::nullopt;
  if (sgn(s.b) == 0) {
    if (auto r = rational_sqrt(s.a)) return QSqrt2{*r, 0};
    Rational half = s.a / 2;
    if (auto r = rational_sqrt(half)) return QSqrt2{0, *r};
    return std::nullopt;
  }
  // (x + y√2)² = x² + 2y² + 2xy√2, so x² = (a ± √(a² − 2b²)) / 2.
  Rational disc = s.a * s.a - 2 * s.b * s.b;
  auto d = rational_sqrt(disc);
  if (!d) return std::nullopt;
  for (int pm : {1, -1}) {
    Rational x2 = (s.a + pm * *d) / 2;
    if (sgn(x2) <= 0) continue;
    auto x = rational_sqrt(x2);
    if (!x) continue;
    Rational y = s.b / (2 * *x);
    QSqrt2 t{*x, y};
    if (t.sign() < 0) t = -t;
    if (t * t == s) return t;
  }
  return std::nullopt;
}

}  // namespace

SemiringSpec SemiringSpec::of(SemiringTag tag) {
  switch (tag) {
    case SemiringTag::bool2: return {tag, false, false, true, true, true};
    case SemiringTag::nat: return {tag, false, false, true, true, true};
    case SemiringTag::integer: return {tag, true, false, true, true, true};
    case SemiringTag::rat: return {tag, true, true, true, true, true};
    case SemiringTag::f64: return {tag, true, true, false, true, true};
    case SemiringTag::c64: return {tag, true, true, false, true, true};
    case SemiringTag::qsqrt2: return {tag, true, true, true, true, true};
    case SemiringTag::qisqrt2: return {tag, true, true, true, true, true};
  }
  return {tag, false, false, false, false, false};
}

std::string_view semiring_name(SemiringTag tag) {
  switch (tag) {
    case SemiringTag::bool2: return "bool2";
    case SemiringTag::nat: return "nat";
    case SemiringTag::integer: return "int";
    case SemiringTag::rat: return "rat";
    case SemiringTag::f64: return "f64";
    case SemiringTag::c64: return "c64";
    case SemiringTag::qsqrt2: return "qsqrt2";
    case SemiringTag::qisqrt2: return "qisqrt2";
  }
  return "?";
}

std::optional<SemiringTag> parse_semiring_name(std::string_view name) {
  for (auto tag : {SemiringTag::bool2, SemiringTag::nat, SemiringTag::integer,
                   SemiringTag::rat, SemiringTag::f64, SemiringTag::c64,
                   SemiringTag::qsqrt2, SemiringTag::qisqrt2}) {
    if (semiring_name(tag) == name) return tag;
  }
  return std::nullopt;
}

bool has_trivial_involution(SemiringTag tag) {
  return tag != SemiringTag::c64 && tag != SemiringTag::qisqrt2;
}

QSqrt2 QSqrt2::inverse() const {
  Rational n = a * a - 2 * b * b;
  if (sgn(n) == 0) throw Error(ErrorCode::zero_vector, "inverse of 0 in qsqrt2");
  return {a / n, -b / n};
}

int QSqrt2::sign() const {
  int sa = sgn(a), sb = sgn(b);
  if (sa >= 0 && sb >= 0) return (sa > 0 || sb > 0) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // Opposite signs: compare a² with 2b².
  int cmp_sq = cmp(Rational(a * a), Rational(2 * b * b));
  if (cmp_sq == 0) return 0;
  if (sa > 0) return cmp_sq > 0 ? 1 : -1;
  return cmp_sq > 0 ? -1 : 1;
}

double QSqrt2::to_double() const {
  return a.get_d() + b.get_d() * std::sqrt(2.0);
}

QISqrt2 QISqrt2::inverse() const {
  QSqrt2 n = re * re + im * im;
  if (n.is_zero()) throw Error(ErrorCode::zero_vector, "inverse of 0 in qisqrt2");
  QSqrt2 inv = n.inverse();
  return {re * inv, -(im * inv)};
}

Value Value::zero(SemiringTag tag) {
  switch (tag) {
    case SemiringTag::bool2: return {tag, false};
    case SemiringTag::nat:
    case SemiringTag::integer: return {tag, Integer(0)};
    case SemiringTag::rat: return {tag, Rational(0)};
    case SemiringTag::f64: return {tag, 0.0};
    case SemiringTag::c64: return {tag, std::complex<double>(0.0, 0.0)};
    case SemiringTag::qsqrt2: return {tag, QSqrt2{}};
    case SemiringTag::qisqrt2: return {tag, QISqrt2{}};
  }
  throw Error(ErrorCode::mixed_semiring, "unknown semiring tag");
}

Value Value::one(SemiringTag tag) { return from_int(tag, 1); }

Value Value::from_int(SemiringTag tag, long value) {
  switch (tag) {
    case SemiringTag::bool2: return {tag, value != 0};
    case SemiringTag::nat:
      if (value < 0) throw Error(ErrorCode::negative, "nat value " + std::to_string(value));
      return {tag, Integer(value)};
    case SemiringTag::integer: return {tag, Integer(value)};
    case SemiringTag::rat: return {tag, Rational(value)};
    case SemiringTag::f64: return {tag, static_cast<double>(value)};
    case SemiringTag::c64:
      return {tag, std::complex<double>(static_cast<double>(value), 0.0)};
    case SemiringTag::qsqrt2: return {tag, QSqrt2{Rational(value), 0}};
    case SemiringTag::qisqrt2:
      return {tag, QISqrt2{QSqrt2{Rational(value), 0}, QSqrt2{}}};
  }
  throw Error(ErrorCode::mixed_semiring, "unknown semiring tag");
}

Value Value::inv_sqrt2(SemiringTag tag) {
  switch (tag) {
    case SemiringTag::f64: return real(1.0 / std::sqrt(2.0));
    case SemiringTag::c64: return complex(1.0 / std::sqrt(2.0), 0.0);
    case SemiringTag::qsqrt2: return qsqrt2(0, Rational(1, 2));
    case SemiringTag::qisqrt2: return qisqrt2(0, Rational(1, 2), 0, 0);
    default:
      throw Error(ErrorCode::not_representable,
                  "1/sqrt2 in " + std::string(semiring_name(tag)));
  }
}

Value Value::boolean(bool b) { return {SemiringTag::bool2, b}; }

Value Value::natural(Integer n) {
  if (sgn(n) < 0) throw Error(ErrorCode::negative, "nat value " + n.get_str());
  return {SemiringTag::nat, std::move(n)};
}

Value Value::integer(Integer n) { return {SemiringTag::integer, std::move(n)}; }

Value Value::rational(Rational q) {
  q.canonicalize();
  return {SemiringTag::rat, std::move(q)};
}

Value Value::real(double x) { return {SemiringTag::f64, x}; }

Value Value::complex(double re, double im) {
  return {SemiringTag::c64, std::complex<double>(re, im)};
}

Value Value::qsqrt2(Rational a, Rational b) {
  a.canonicalize();
  b.canonicalize();
  return {SemiringTag::qsqrt2, QSqrt2{std::move(a), std::move(b)}};
}

Value Value::qisqrt2(Rational a, Rational b, Rational c, Rational d) {
  a.canonicalize();
  b.canonicalize();
  c.canonicalize();
  d.canonicalize();
  return {SemiringTag::qisqrt2, QISqrt2{QSqrt2{std::move(a), std::move(b)},
                                        QSqrt2{std::move(c), std::move(d)}}};
}

bool Value::is_zero() const {
  return std::visit(
      [](const auto& p) -> bool {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, bool>) {
          return !p;
        } else if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, Rational>) {
          return sgn(p) == 0;
        } else if constexpr (std::is_same_v<T, double>) {
          return p == 0.0;
        } else if constexpr (std::is_same_v<T, std::complex<double>>) {
          return p.real() == 0.0 && p.imag() == 0.0;
        } else {
          return p.is_zero();
        }
      },
      payload_);
}

bool Value::is_one() const { return *this == one(tag_); }

Value operator+(const Value& x, const Value& y) {
  require_same(x, y);
  return std::visit(
      [&](const auto& p) -> Value {
        using T = std::decay_t<decltype(p)>;
        const T& q = std::get<T>(y.payload_);
        if constexpr (std::is_same_v<T, bool>) {
          return Value(x.tag_, p || q);
        } else {
          return Value(x.tag_, T(p + q));
        }
      },
      x.payload_);
}

Value operator*(const Value& x, const Value& y) {
  require_same(x, y);
  return std::visit(
      [&](const auto& p) -> Value {
        using T = std::decay_t<decltype(p)>;
        const T& q = std::get<T>(y.payload_);
        if constexpr (std::is_same_v<T, bool>) {
          return Value(x.tag_, p && q);
        } else {
          return Value(x.tag_, T(p * q));
        }
      },
      x.payload_);
}

Value operator-(const Value& x) {
  if (!SemiringSpec::of(x.tag_).has_negation) {
    throw Error(ErrorCode::negation_unavailable, std::string(semiring_name(x.tag_)));
  }
  return std::visit(
      [&](const auto& p) -> Value {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, bool>) {
          return Value(x.tag_, p);
        } else {
          return Value(x.tag_, T(-p));
        }
      },
      x.payload_);
}

Value operator-(const Value& x, const Value& y) {
  require_same(x, y);
  return x + (-y);
}

Value operator/(const Value& x, const Value& y) {
  require_same(x, y);
  return x * inverse(y);
}

bool Value::operator==(const Value& y) const {
  return tag_ == y.tag_ && payload_ == y.payload_;
}

std::string Value::to_string() const {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, bool>) {
          return p ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Integer>) {
          return p.get_str(10);
        } else if constexpr (std::is_same_v<T, Rational>) {
          return rational_text(p);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(p);
        } else if constexpr (std::is_same_v<T, std::complex<double>>) {
          return "(" + format_double(p.real()) + "," + format_double(p.imag()) + ")";
        } else if constexpr (std::is_same_v<T, QSqrt2>) {
          return qsqrt2_text(p);
        } else {
          return qsqrt2_text(p.re) + "+i*(" + qsqrt2_text(p.im) + ")";
        }
      },
      payload_);
}

Value conj(const Value& s) {
  switch (s.tag()) {
    case SemiringTag::c64: return Value::complex(s.as_complex().real(), -s.as_complex().imag());
    case SemiringTag::qisqrt2: {
      const auto& z = s.as_qisqrt2();
      return Value::qisqrt2(z.re.a, z.re.b, -z.im.a, -z.im.b);
    }
    default: return s;
  }
}

Value norm_sq(const Value& s) {
  switch (s.tag()) {
    case SemiringTag::c64: return Value::complex(std::norm(s.as_complex()), 0.0);
    case SemiringTag::qisqrt2: {
      const auto& z = s.as_qisqrt2();
      QSqrt2 n = z.re * z.re + z.im * z.im;
      return Value::qisqrt2(n.a, n.b, 0, 0);
    }
    default: return s * conj(s);
  }
}

Value to_unit_interval(const Value& s) {
  auto nonneg_rat = [&](Rational q) {
    if (sgn(q) < 0) throw Error(ErrorCode::negative, s.to_string());
    return Value::rational(std::move(q));
  };
  auto residue = [&]() {
    return Error(ErrorCode::irrational_residue, s.to_string());
  };
  switch (s.tag()) {
    case SemiringTag::bool2: return Value::rational(s.as_bool() ? 1 : 0);
    case SemiringTag::nat:
    case SemiringTag::integer: return nonneg_rat(Rational(s.as_integer()));
    case SemiringTag::rat: return nonneg_rat(s.as_rational());
    case SemiringTag::f64:
      if (s.as_real() < 0.0) throw Error(ErrorCode::negative, s.to_string());
      return s;
    case SemiringTag::c64:
      if (s.as_complex().imag() != 0.0) throw residue();
      if (s.as_complex().real() < 0.0) throw Error(ErrorCode::negative, s.to_string());
      return Value::real(s.as_complex().real());
    case SemiringTag::qsqrt2:
      if (sgn(s.as_qsqrt2().b) != 0) throw residue();
      return nonneg_rat(s.as_qsqrt2().a);
    case SemiringTag::qisqrt2: {
      const auto& z = s.as_qisqrt2();
      if (sgn(z.re.b) != 0 || !z.im.is_zero()) throw residue();
      return nonneg_rat(z.re.a);
    }
  }
  throw residue();
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  return Rational(sqrt(num), sqrt(den));
}

Value sqrt_nonneg(const Value& s) {
  auto fail = [&]() {
    return Error(ErrorCode::not_representable, "no square root of " + s.to_string() +
                                                   " in " + std::string(semiring_name(s.tag())));
  };
  switch (s.tag()) {
    case SemiringTag::bool2: return s;
    case SemiringTag::nat:
    case SemiringTag::integer: {
      const Integer& n = s.as_integer();
      if (sgn(n) < 0 || !mpz_perfect_square_p(n.get_mpz_t())) throw fail();
      Integer r = sqrt(n);
      return s.tag() == SemiringTag::nat ? Value::natural(r) : Value::integer(r);
    }
    case SemiringTag::rat: {
      auto r = rational_sqrt(s.as_rational());
      if (!r) throw fail();
      return Value::rational(*r);
    }
    case SemiringTag::f64:
      if (s.as_real() < 0.0) throw fail();
      return Value::real(std::sqrt(s.as_real()));
    case SemiringTag::c64:
      if (s.as_complex().imag() != 0.0 || s.as_complex().real() < 0.0) throw fail();
      return Value::complex(std::sqrt(s.as_complex().real()), 0.0);
    case SemiringTag::qsqrt2: {
      auto r = qsqrt2_sqrt(s.as_qsqrt2());
      if (!r) throw fail();
      return Value::qsqrt2(r->a, r->b);
    }
    case SemiringTag::qisqrt2: {
      const auto& z = s.as_qisqrt2();
      if (!z.im.is_zero()) throw fail();
      auto r = qsqrt2_sqrt(z.re);
      if (!r) throw fail();
      return Value::qisqrt2(r->a, r->b, 0, 0);
    }
  }
  throw fail();
}

Value inverse(const Value& s) {
  if (!is_field(s.tag())) {
    throw Error(ErrorCode::division_unavailable, std::string(semiring_name(s.tag())));
  }
  if (s.is_zero()) throw Error(ErrorCode::zero_vector, "division by zero");
  switch (s.tag()) {
    case SemiringTag::rat: return Value::rational(1 / s.as_rational());
    case SemiringTag::f64: return Value::real(1.0 / s.as_real());
    case SemiringTag::c64: {
      auto z = 1.0 / s.as_complex();
      return Value::complex(z.real(), z.imag());
    }
    case SemiringTag::qsqrt2: {
      auto z = s.as_qsqrt2().inverse();
      return Value::qsqrt2(z.a, z.b);
    }
    case SemiringTag::qisqrt2: {
      auto z = s.as_qisqrt2().inverse();
      return Value::qisqrt2(z.re.a, z.re.b, z.im.a, z.im.b);
    }
    default: break;
  }
  throw Error(ErrorCode::division_unavailable, std::string(semiring_name(s.tag())));
}

bool approx_equal(const Value& x, const Value& y, double tol) {
  require_same(x, y);
  switch (x.tag()) {
    case SemiringTag::f64: return std::abs(x.as_real() - y.as_real()) <= tol;
    case SemiringTag::c64: return std::abs(x.as_complex() - y.as_complex()) <= tol;
    default: return x == y;
  }
}

double magnitude(const Value& s) {
  switch (s.tag()) {
    case SemiringTag::bool2: return s.as_bool() ? 1.0 : 0.0;
    case SemiringTag::nat:
    case SemiringTag::integer: return std::abs(s.as_integer().get_d());
    case SemiringTag::rat: return std::abs(s.as_rational().get_d());
    case SemiringTag::f64: return std::abs(s.as_real());
    case SemiringTag::c64: return std::abs(s.as_complex());
    case SemiringTag::qsqrt2: return std::abs(s.as_qsqrt2().to_double());
    case SemiringTag::qisqrt2:
      return std::hypot(s.as_qisqrt2().re.to_double(), s.as_qisqrt2().im.to_double());
  }
  return 0.0;
}

}  // namespace tamerel
