#pragma once

#include <random>
#include <vector>

#include "cokit/numberfield.hpp"

namespace testsup {

using namespace cokit;

inline RatPoly poly(std::vector<long> coeffs) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return RatPoly(std::move(c));
}

inline QInterval iv(long lo, long hi) { return {Rational(lo), Rational(hi)}; }

// ℚ(√2), root in [1,2], radical table {√2}.
inline FieldPtr sqrt2_field() {
  static FieldPtr f = AlgebraicField::make_real(poly({-2, 0, 1}), iv(1, 2),
                                                {{Rational(0), Rational(1)}});
  return f;
}

// ℚ(√3), root in [1,2].
inline FieldPtr sqrt3_field() {
  static FieldPtr f = AlgebraicField::make_real(poly({-3, 0, 1}), iv(1, 2),
                                                {{Rational(0), Rational(1)}});
  return f;
}

// ℚ(τ), τ² = τ + 1, root in [1,2]; radical √5 = 2τ−1.
inline FieldPtr tau_field() {
  static FieldPtr f = AlgebraicField::make_real(poly({-1, -1, 1}), iv(1, 2),
                                                {{Rational(-1), Rational(2)}});
  return f;
}

// ℚ(2^{1/4}), root in [1,2].
inline FieldPtr root4of2_field() {
  static FieldPtr f = AlgebraicField::make_real(poly({-2, 0, 0, 0, 1}), iv(1, 2));
  return f;
}

// ℚ(i): x²+1, box [−1/4,1/4]×[1/2,2].
inline FieldPtr gauss_field() {
  static FieldPtr f = AlgebraicField::make_imaginary(
      poly({1, 0, 1}), QBox{{Rational(-1, 4), Rational(1, 4)}, {Rational(1, 2), Rational(2)}});
  return f;
}

// ℚ(ζ₅): x⁴+x³+x²+x+1, ζ₅ ≈ 0.309 + 0.951i, conj ζ₅⁴ = −1−ζ−ζ²−ζ³.
inline FieldPtr zeta5_field() {
  static FieldPtr f = AlgebraicField::make_imaginary(
      poly({1, 1, 1, 1, 1}),
      QBox{{Rational(1, 4), Rational(3, 8)}, {Rational(7, 8), Rational(1)}},
      std::vector<Rational>{Rational(-1), Rational(-1), Rational(-1), Rational(-1)});
  return f;
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  long pick(long lo, long hi) {
    return lo + static_cast<long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rat(long bound) {
    Rational q(pick(-bound, bound), pick(1, 6));
    q.canonicalize();
    return q;
  }
  FieldElement element(const FieldPtr& f, long bound = 5) {
    std::vector<Rational> c;
    for (int i = 0; i < f->degree(); ++i) c.push_back(rat(bound));
    return make_element(f, c);
  }
};

}  // namespace testsup
