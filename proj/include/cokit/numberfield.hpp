#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cokit/polynomial.hpp"

namespace cokit {

class AlgebraicField;
using FieldPtr = std::shared_ptr<const AlgebraicField>;

// Eigen's Scalar(0)/Scalar(1) construct elements with no owner yet; such plain
// rational constants adopt the owner of the first attached operand they meet.
class FieldElement {
 public:
  FieldElement() : coeffs_{Rational(0)} {}
  FieldElement(long v) : coeffs_{Rational(v)} {}  // NOLINT: implicit for Eigen
  explicit FieldElement(Rational v) : coeffs_{std::move(v)} {}
  FieldElement(FieldPtr f, std::vector<Rational> coeffs);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  // Representation-level test: no generator component.  Exact for values too,
  // since the power basis is ℚ-independent.
  bool is_rational_form() const;
  std::optional<Rational> as_rational() const;
  FieldElement lifted_to(const FieldPtr& f) const;

  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);

 private:
  FieldPtr field_;  // null: plain rational constant
  std::vector<Rational> coeffs_;

  friend FieldElement operator+(const FieldElement&, const FieldElement&);
  friend FieldElement operator-(const FieldElement&, const FieldElement&);
  friend FieldElement operator*(const FieldElement&, const FieldElement&);
  friend FieldElement operator/(const FieldElement&, const FieldElement&);
};

FieldElement operator-(const FieldElement& a);
bool operator==(const FieldElement& a, const FieldElement& b);
inline bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
inline bool scalar_is_zero(const FieldElement& a) { return a.is_zero(); }

struct RealEmbedding {
  QInterval interval;  // isolates exactly one real root of the minimal polynomial
};

struct ComplexEmbedding {
  QBox box;  // upper half-plane rectangle isolating exactly one root
  std::vector<Rational> conj_coeffs;  // image of the generator under conjugation
};

class AlgebraicField {
 public:
  // Degree-1 field with minpoly x: the rationals, generator 0.
  static FieldPtr rationals();
  // radical_coeffs: optional elements w with w² rational, one per quadratic
  // subfield, backing exact square roots of rationals inside this field.
  static FieldPtr make_real(RatPoly minpoly, QInterval interval,
                            std::vector<std::vector<Rational>> radical_coeffs = {});
  // Degree 2 derives the conjugation image automatically; higher degrees must
  // supply it (it is validated as the root-mirroring involution).
  static FieldPtr make_imaginary(RatPoly minpoly, QBox box,
                                 std::optional<std::vector<Rational>> conj_coeffs = std::nullopt);

  int degree() const { return minpoly_.degree(); }
  bool is_real() const { return std::holds_alternative<RealEmbedding>(embedding_); }
  bool is_imaginary() const { return !is_real(); }
  const RatPoly& minpoly() const { return minpoly_; }
  const QInterval& real_interval() const;
  const QBox& complex_box() const;
  const std::vector<Rational>& conj_coeffs() const;
  // Pairs (coeffs of w, rational value of w²), with w sign-normalized positive.
  const std::vector<std::pair<std::vector<Rational>, Rational>>& radicals() const {
    return radicals_;
  }

  bool same_presentation(const AlgebraicField& o) const;

  // Raw coefficient-vector arithmetic (size = degree).
  std::vector<Rational> mul_coeffs(const std::vector<Rational>& a,
                                   const std::vector<Rational>& b) const;
  std::vector<Rational> inv_coeffs(const std::vector<Rational>& a) const;
  // Poly with rational coefficients evaluated at the element `at`.
  std::vector<Rational> compose_coeffs(const std::vector<Rational>& poly,
                                       const std::vector<Rational>& at) const;

 private:
  AlgebraicField(RatPoly mp, std::variant<RealEmbedding, ComplexEmbedding> emb);
  void build_reduction_table();

  RatPoly minpoly_;
  std::variant<RealEmbedding, ComplexEmbedding> embedding_;
  // reduction_[k] = coeffs of θ^(degree+k), k = 0..degree-2.
  std::vector<std::vector<Rational>> reduction_;
  std::vector<std::pair<std::vector<Rational>, Rational>> radicals_;
};

FieldElement make_element(const FieldPtr& f, std::vector<Rational> coeffs);
FieldElement make_rational(const FieldPtr& f, const Rational& v);
FieldElement generator(const FieldPtr& f);

// Exact sign under the chosen real embedding (zero test first, then interval
// bisection until the value interval excludes 0).
int sign(const FieldElement& a);
std::string to_string(const FieldElement& a);

// Determinant of the multiplication-by-κ matrix on the power basis.
Rational field_norm(const FieldElement& kappa);

// Image under the conjugation automorphism (imaginary fields).
FieldElement conj(const FieldElement& a);
// a·ā, an element of the maximal real subfield.
FieldElement complex_abs_square(const FieldElement& a);

// √q as an element of f (nonnegative), via exact rational square roots and the
// field's radical table; nullopt when not representable in f.
std::optional<FieldElement> sqrt_rational_in(const FieldPtr& f, const Rational& q);

struct SubfieldEmbedding {
  FieldPtr ambient;
  FieldElement gen;
  int k_degree = 1;
  MatQ power_matrix;  // degree(ambient) × k_degree; column j holds coeffs of gen^j

  // Determines k_degree as the number of ℚ-independent powers of gen.
  static SubfieldEmbedding make(FieldPtr ambient, FieldElement gen);
};

// Coordinates of x in the ℚ-basis {1, g, …, g^(k−1)}, or nullopt.
std::optional<VecQ> in_subfield(const FieldElement& x, const SubfieldEmbedding& K);
bool subfield_contains(const SubfieldEmbedding& K, const FieldElement& x);
FieldElement subfield_element(const SubfieldEmbedding& K, const VecQ& coords);
// K generated by θ + θ̄ inside an imaginary field.
SubfieldEmbedding real_subfield(const FieldPtr& imaginary_field);
bool same_embedding(const SubfieldEmbedding& a, const SubfieldEmbedding& b);

}  // namespace cokit

namespace Eigen {

template <>
struct NumTraits<cokit::FieldElement> : GenericNumTraits<cokit::FieldElement> {
  typedef cokit::FieldElement Real;
  typedef cokit::FieldElement NonInteger;
  typedef cokit::FieldElement Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 12,
    AddCost = 300,
    MulCost = 300
  };
};

}  // namespace Eigen
