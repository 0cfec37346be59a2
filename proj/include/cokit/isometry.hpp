#pragma once

// Classification of exact orthogonal matrices relative to a free S-module Γ:
// coincidence isometries (Γ ∩ RΓ of finite index), similarity isometries
// (αRΓ ⊆ Γ commensurably for some real scale α), the scaling coset αK•,
// η-orders, and the planar-order operations for rank-2 rings in the plane.

#include <optional>
#include <utility>
#include <vector>

#include "cokit/modules.hpp"

namespace cokit {

// An exact element of O(d): RᵀR = I entrywise over the entry field.
struct Isometry {
  ExactMat mat;
  int det_sign = 1;  // +1 rotation, −1 reflection-like

  int dim() const { return static_cast<int>(mat.rows()); }

  // Validates squareness and exact orthogonality (NotOrthogonal otherwise);
  // derives det_sign (orthogonality forces det = ±1 exactly).
  static Isometry make(ExactMat m);

  Isometry transposed() const;                    // = inverse
  friend Isometry operator*(const Isometry& a, const Isometry& b);
};

// The coset scal_Γ(R) = αK• of admissible scalings, carried by one
// sign-normalized representative.
struct ScalarCoset {
  FieldElement rep;  // nonzero, positive under the real embedding
};

// a·K• = b·K• iff a/b ∈ K.
bool coset_equal(const ScalarCoset& a, const ScalarCoset& b, const SubfieldEmbedding& k);

enum class Verdict { NotSimilarity, Similarity, Coincidence };

struct Classification {
  Verdict verdict = Verdict::NotSimilarity;
  // Similarity only: the scaling coset and the least n ≤ d with repⁿ ∈ K.
  std::optional<ScalarCoset> coset;
  int eta = 0;  // 1 for Coincidence, 0 for NotSimilarity
  // Coincidence only: sigma = [Γ : Γ ∩ RΓ].
  std::optional<Integer> sigma;
};

struct ClassifyOptions {
  // Restrict to the rotation subgroup: reflections report NotSimilarity.
  bool rotations_only = false;
};

// Decide membership of R in OC(Γ) / OS(Γ) via H = B⁻¹RB: entries of H all
// in K ⇒ Coincidence; otherwise if the entry ratios h/h₀ all lie in K the
// unique candidate coset is (1/h₀)K• ⇒ Similarity; otherwise NotSimilarity.
Classification classify(const FreeModule& gamma, const Isometry& r, ClassifyOptions opt = {});

// Least n (≤ d, divides d) with αⁿ ∈ K; 1 for coincidence isometries.
// Throws NotASimilarity when R ∉ OS(Γ).
int eta_order(const FreeModule& gamma, const Isometry& r);

// Homomorphism check: η(RS) = η(R)·η(S) as K•-cosets.  Requires R, S ∈ OS(Γ).
bool eta_product_check(const FreeModule& gamma, const Isometry& r, const Isometry& s);

// OS(Γ)² ⊂ OC(Γ) for K-modules: true iff R² classifies as Coincidence,
// and additionally (d odd) iff R itself does.  Requires is_K_module(Γ) and
// R ∈ OS(Γ).
bool verify_os_squared(const FreeModule& gamma, const Isometry& r);

// --- Planar orders: rank-2 rings O = Z[θ] in an imaginary quadratic field,
// --- acting on R² through the embedding θ ↦ (Re θ, Im θ).

struct PlanarOrder {
  FieldPtr field;         // imaginary quadratic field generated by θ
  FieldPtr real_ambient;  // real field holding rotation entries and lengths
  Rational re_theta;      // Re θ ∈ Q
  FieldElement im_theta;  // Im θ ∈ real_ambient, positive

  // Validates: quadratic imaginary field, θ an algebraic integer (this is
  // multiplicative closure for Z[θ]), im_theta² = N(θ) − (Re θ)² exactly.
  static PlanarOrder make(FieldPtr field, FieldPtr real_ambient, FieldElement im_theta);

  // N(a) = a·ā ∈ Q for a in the quadratic field.
  Rational norm(const FieldElement& a) const;
  // Coordinates in the Z-basis {1, θ} (the power basis of the field).
  std::pair<Rational, Rational> coords(const FieldElement& a) const;
  bool contains(const FieldElement& a) const;
  FieldElement element(const Rational& u, const Rational& v) const;  // u + vθ

  // O as a free Z-module in R² with basis {(1,0), (Re θ, Im θ)}.
  FreeModule as_module() const;
};

// The rotation a/|a| ∈ SOS(O) as the exact matrix [[x,−y],[y,x]] over the
// order's real ambient field.  Throws ZeroElement; NotRepresentable when
// |a| = √N(a) does not lie in the ambient; NotSubmodule when a ∉ O.
Isometry sos_direction(const PlanarOrder& o, const FieldElement& a);

// [O : κO], computed independently as |N(κ)| and as a lattice index of the
// multiplication-by-κ image; InternalMismatch if the two routes disagree.
Integer principal_ideal_index(const PlanarOrder& o, const FieldElement& kappa);

}  // namespace cokit
