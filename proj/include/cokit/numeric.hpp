#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace cokit {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Err {
  DivisionByZero,
  FieldMismatch,
  NotRealField,
  NotImaginaryField,
  InvalidField,
  InvalidRing,
  NotSquare,
  Singular,
  NotSubmodule,
  InfiniteIndex,
  MixedAmbient,
  DimensionMismatch,
  AmbientMismatch,
  NotOrthogonal,
  NotASimilarity,
  NotAKModule,
  ZeroElement,
  NotRepresentable,
  PerfectPower,
  UnsupportedM,
  UnsupportedModule,
  InvalidDiscriminant,
  InternalMismatch,
  ParseError,
  BadTarget
};

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

const char* err_name(Err c);

// "p", "-p", "p/q" with arbitrary precision; rejects q = 0.
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);

inline int sgn(const Rational& q) { return ::sgn(q); }
inline int sgn(const Integer& z) { return ::sgn(z); }

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

// Exact square root of a nonnegative rational, if it is a perfect square.
std::optional<Rational> rational_sqrt(const Rational& q);

using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatZ = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

// Closed rational interval [lo, hi].
struct QInterval {
  Rational lo, hi;
  QInterval() : lo(0), hi(0) {}
  QInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}
  static QInterval point(const Rational& v) { return {v, v}; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
};

QInterval operator+(const QInterval& a, const QInterval& b);
QInterval operator-(const QInterval& a, const QInterval& b);
QInterval operator*(const QInterval& a, const QInterval& b);
QInterval operator+(const QInterval& a, const Rational& b);
QInterval operator*(const QInterval& a, const Rational& b);

// Axis-aligned rational box in the complex plane.
struct QBox {
  QInterval re, im;
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

inline QBox operator+(const QBox& a, const QBox& b) { return {a.re + b.re, a.im + b.im}; }
inline QBox operator*(const QBox& a, const QBox& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace cokit

namespace Eigen {

template <>
struct NumTraits<cokit::Rational> : GenericNumTraits<cokit::Rational> {
  typedef cokit::Rational Real;
  typedef cokit::Rational NonInteger;
  typedef cokit::Rational Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

template <>
struct NumTraits<cokit::Integer> : GenericNumTraits<cokit::Integer> {
  typedef cokit::Integer Real;
  typedef cokit::Rational NonInteger;
  typedef cokit::Integer Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen
