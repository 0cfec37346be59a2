#pragma once

#include <vector>

#include "cokit/numeric.hpp"

namespace cokit {

// Dense polynomial over the rationals; coeffs[i] multiplies x^i.
// Invariant: empty means zero, otherwise the leading coefficient is nonzero.
struct RatPoly {
  std::vector<Rational> c;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rational& v);
  static RatPoly x();

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Rational& leading() const { return c.back(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
};

bool operator==(const RatPoly& a, const RatPoly& b);
RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const Rational& s);
RatPoly operator-(const RatPoly& a);

// Quotient and remainder with deg(rem) < deg(b); requires b nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly derivative(const RatPoly& a);
// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
RatPoly poly_gcd(RatPoly a, RatPoly b);
// g = u·a + v·b with g the monic gcd.
struct PolyXgcd {
  RatPoly g, u, v;
};
PolyXgcd poly_xgcd(const RatPoly& a, const RatPoly& b);
bool is_squarefree(const RatPoly& a);

Rational eval(const RatPoly& a, const Rational& x);
// Interval Horner: encloses {a(x) : x in iv}.
QInterval eval_interval(const RatPoly& a, const QInterval& iv);

// True iff `a` (nonconstant, rational coefficients) has a rational root.
bool has_rational_root(const RatPoly& a);

// Number of distinct real roots in (lo, hi], by Sturm's theorem.
int count_real_roots(const RatPoly& a, const Rational& lo, const Rational& hi);

// Real part P and imaginary part Q of t -> a(z0 + t*dz), for rational complex
// z0, dz given by (re, im) pairs.
struct EdgeImage {
  RatPoly P, Q;
};
EdgeImage compose_linear(const RatPoly& a, const Rational& z0re, const Rational& z0im,
                         const Rational& dzre, const Rational& dzim);

// Number of roots of `a` inside the open box, certified exactly; requires no
// root of `a` on the boundary (error InvalidField otherwise).  Computed as the
// winding number of the boundary image around 0, with the image polyline
// refined until each segment's value box excludes 0.
int winding_number(const RatPoly& a, const QBox& box);

// True iff some root of `a` lies on the closed boundary of the box.
bool root_on_boundary(const RatPoly& a, const QBox& box);

}  // namespace cokit
