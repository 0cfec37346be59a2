#include "cokit/numeric.hpp"

#include <cctype>

namespace cokit {

const char* err_name(Err c) {
  switch (c) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::NotRealField: return "NotRealField";
    case Err::NotImaginaryField: return "NotImaginaryField";
    case Err::InvalidField: return "InvalidField";
    case Err::InvalidRing: return "InvalidRing";
    case Err::NotSquare: return "NotSquare";
    case Err::Singular: return "Singular";
    case Err::NotSubmodule: return "NotSubmodule";
    case Err::InfiniteIndex: return "InfiniteIndex";
    case Err::MixedAmbient: return "MixedAmbient";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::AmbientMismatch: return "AmbientMismatch";
    case Err::NotOrthogonal: return "NotOrthogonal";
    case Err::NotASimilarity: return "NotASimilarity";
    case Err::NotAKModule: return "NotAKModule";
    case Err::ZeroElement: return "ZeroElement";
    case Err::NotRepresentable: return "NotRepresentable";
    case Err::PerfectPower: return "PerfectPower";
    case Err::UnsupportedM: return "UnsupportedM";
    case Err::UnsupportedModule: return "UnsupportedModule";
    case Err::InvalidDiscriminant: return "InvalidDiscriminant";
    case Err::InternalMismatch: return "InternalMismatch";
    case Err::ParseError: return "ParseError";
    case Err::BadTarget: return "BadTarget";
  }
  return "Unknown";
}

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw Error(Err::ParseError, "empty rational literal");
  auto ok_part = [](const std::string& p) {
    if (p.empty()) return false;
    std::size_t i = (p[0] == '+' || p[0] == '-') ? 1 : 0;
    if (i >= p.size()) return false;
    for (; i < p.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(p[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  if (slash == std::string::npos) {
    if (!ok_part(t)) throw Error(Err::ParseError, "bad rational literal '" + s + "'");
  } else {
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!ok_part(num) || !ok_part(den))
      throw Error(Err::ParseError, "bad rational literal '" + s + "'");
  }
  Rational q;
  if (q.set_str(t, 10) != 0) throw Error(Err::ParseError, "bad rational literal '" + s + "'");
  if (sgn(q.get_den()) == 0 || q.get_den() == 0)
    throw Error(Err::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  Integer num = q.get_num(), den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

namespace {
Rational min4(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return std::min(std::min(a, b), std::min(c, d));
}
Rational max4(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return std::max(std::max(a, b), std::max(c, d));
}
}  // namespace

QInterval operator+(const QInterval& a, const QInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
QInterval operator-(const QInterval& a, const QInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
QInterval operator*(const QInterval& a, const QInterval& b) {
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {min4(p1, p2, p3, p4), max4(p1, p2, p3, p4)};
}
QInterval operator+(const QInterval& a, const Rational& b) { return {a.lo + b, a.hi + b}; }
QInterval operator*(const QInterval& a, const Rational& b) {
  return sgn(b) >= 0 ? QInterval{a.lo * b, a.hi * b} : QInterval{a.hi * b, a.lo * b};
}

}  // namespace cokit
