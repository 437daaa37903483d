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

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace tamerel {

using Integer = mpz_class;
using Rational = mpq_class;

/// The registered involutive commutative semirings.
enum class SemiringTag : std::uint8_t {
  bool2,
  nat,
  integer,
  rat,
  f64,
  c64,
  qsqrt2,
  qisqrt2,
};

struct SemiringSpec {
  SemiringTag tag;
  bool has_negation;
  bool has_division;
  bool has_exact_eq;
  bool has_norm_sq;
  bool has_sqrt_nonneg;

  static SemiringSpec of(SemiringTag tag);
};

std::string_view semiring_name(SemiringTag tag);
std::optional<SemiringTag> parse_semiring_name(std::string_view name);

inline bool is_field(SemiringTag tag) {
  return SemiringSpec::of(tag).has_division;
}
inline bool is_exact(SemiringTag tag) {
  return SemiringSpec::of(tag).has_exact_eq;
}
/// True where conj is the identity map.
bool has_trivial_involution(SemiringTag tag);

/// a + b√2 with rational a, b.
struct QSqrt2 {
  Rational a;
  Rational b;

  bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
  bool operator==(const QSqrt2& o) const { return a == o.a && b == o.b; }

  friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend QSqrt2 operator-(const QSqrt2& x) { return {-x.a, -x.b}; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  QSqrt2 inverse() const;
  /// Sign of the real number a + b√2.
  int sign() const;
  double to_double() const;
};

/// x + i·y with x, y in ℚ(√2); the quadruple (a, b, c, d) of the text
/// encoding is (x.a, x.b, y.a, y.b).
struct QISqrt2 {
  QSqrt2 re;
  QSqrt2 im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool operator==(const QISqrt2& o) const { return re == o.re && im == o.im; }

  friend QISqrt2 operator+(const QISqrt2& x, const QISqrt2& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend QISqrt2 operator-(const QISqrt2& x, const QISqrt2& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend QISqrt2 operator-(const QISqrt2& x) { return {-x.re, -x.im}; }
  friend QISqrt2 operator*(const QISqrt2& x, const QISqrt2& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  QISqrt2 inverse() const;
};

/// An element of one of the registered semirings. Immutable once built;
/// arithmetic between values of different tags throws MixedSemiring.
class Value {
 public:
  using Payload = std::variant<bool, Integer, Rational, double,
                               std::complex<double>, QSqrt2, QISqrt2>;

  Value() : Value(zero(SemiringTag::rat)) {}

  static Value zero(SemiringTag tag);
  static Value one(SemiringTag tag);
  /// Image of an integer under the unique map ℤ → S (ℕ → S for bool2/nat).
  static Value from_int(SemiringTag tag, long value);
  /// 1/√2, available in f64, c64, qsqrt2 and qisqrt2.
  static Value inv_sqrt2(SemiringTag tag);

  static Value boolean(bool b);
  static Value natural(Integer n);
  static Value integer(Integer n);
  static Value rational(Rational q);
  static Value real(double x);
  static Value complex(double re, double im);
  static Value qsqrt2(Rational a, Rational b);
  static Value qisqrt2(Rational a, Rational b, Rational c, Rational d);

  SemiringTag tag() const { return tag_; }
  const Payload& payload() const { return payload_; }

  bool as_bool() const { return std::get<bool>(payload_); }
  const Integer& as_integer() const { return std::get<Integer>(payload_); }
  const Rational& as_rational() const { return std::get<Rational>(payload_); }
  double as_real() const { return std::get<double>(payload_); }
  std::complex<double> as_complex() const {
    return std::get<std::complex<double>>(payload_);
  }
  const QSqrt2& as_qsqrt2() const { return std::get<QSqrt2>(payload_); }
  const QISqrt2& as_qisqrt2() const { return std::get<QISqrt2>(payload_); }

  bool is_zero() const;
  bool is_one() const;

  friend Value operator+(const Value& x, const Value& y);
  friend Value operator*(const Value& x, const Value& y);
  /// Ring subtraction; throws on bool2/nat.
  friend Value operator-(const Value& x, const Value& y);
  friend Value operator-(const Value& x);
  /// Field division; throws DivisionUnavailable outside fields and
  /// ZeroVector-style errors on division by zero.
  friend Value operator/(const Value& x, const Value& y);

  Value& operator+=(const Value& y) { return *this = *this + y; }
  Value& operator*=(const Value& y) { return *this = *this * y; }

  /// Exact payload equality (bitwise-value equality for floats).
  bool operator==(const Value& y) const;

  std::string to_string() const;

 private:
  template <class T>
  Value(SemiringTag tag, T v)
      : tag_(tag), payload_(std::in_place_type<T>, std::move(v)) {}

  SemiringTag tag_;
  Payload payload_;
};

Value conj(const Value& s);
/// s·conj(s), staying in the same semiring.
Value norm_sq(const Value& s);
/// The rational (rat) or float (f64) value of a real, nonnegative s with no
/// √2 or imaginary residue.
Value to_unit_interval(const Value& s);
/// Nonnegative real square root inside the same semiring.
Value sqrt_nonneg(const Value& s);
Value inverse(const Value& s);

/// Exact equality on exact tags, |x − y| ≤ tol on f64/c64.
bool approx_equal(const Value& x, const Value& y, double tol);
/// |s| as a double; used for pivot selection and tolerance scaling.
double magnitude(const Value& s);

std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace tamerel
