#pragma once

// Free S-modules Γ ⊂ ℝᵈ, where S is a ring of algebraic numbers that is
// finitely generated as a Z-module and Γ is spanned by d linearly
// independent vectors with coordinates in an ambient real field L.
// Provides construction/validation, commensurability, indices,
// intersections, submodule tests, and the K-module predicate.

#include <optional>
#include <vector>

#include "cokit/exactlinalg.hpp"
#include "cokit/numberfield.hpp"

namespace cokit {

// The ring S: a Z-basis s₁..s_r of elements of a subfield K of the ambient
// field L, containing 1 and closed under multiplication.
struct CoefficientRing {
  SubfieldEmbedding field;            // K inside ambient L
  std::vector<FieldElement> zbasis;   // elements of L lying in K

  int rank() const { return static_cast<int>(zbasis.size()); }
  const FieldPtr& ambient() const { return field.ambient; }

  // Validates: zbasis in K and Q-independent, 1 ∈ S, S·S ⊆ S.
  static CoefficientRing make(SubfieldEmbedding k, std::vector<FieldElement> basis);
  // S = Z inside any ambient field (K = Q, zbasis {1}).
  static CoefficientRing integers(const FieldPtr& ambient);

  // Rational coordinates of x in the zbasis, or nullopt if x ∉ QS.
  std::optional<VecQ> coordinates(const FieldElement& x) const;
  // True iff x ∈ S (integer coordinates).
  bool contains(const FieldElement& x) const;
};

bool same_ring(const CoefficientRing& a, const CoefficientRing& b);

// Γ = S·γ₁ + … + S·γ_d with the γᵢ the columns of a nonsingular d×d basis
// matrix over L.  As a Z-module, Γ is free of rank r·d.
struct FreeModule {
  CoefficientRing ring;
  int dim = 0;      // d
  ExactMat basis;   // d×d over L; column i is γᵢ

  const FieldPtr& ambient() const { return ring.ambient(); }
  int zrank() const { return ring.rank() * dim; }

  // Validates squareness, entry fields (lifting into L), nonsingularity.
  static FreeModule make(CoefficientRing ring, ExactMat basis);

  FreeModule scaled(const FieldElement& s) const;       // s·Γ, s ∈ L, s ≠ 0
  FreeModule transformed(const ExactMat& m) const;      // M·Γ, M nonsingular
};

// --- The rank-rd integer lattice picture ---

// Flatten an L-vector in ℝᵈ into Q^(n·d): coordinate t of ℝᵈ contributes
// its n power-basis coefficients at ambient indices t·n .. t·n+n−1.
VecQ flatten_vector(const ExactVec& v, const FieldPtr& ambient);
ExactVec unflatten_vector(const VecQ& w, const FieldPtr& ambient, int dim);

// Z-basis {s₁γ₁, …, s_rγ₁, s₁γ₂, …, s_rγ_d} flattened row by row; the
// coordinate map above is invertible on the lattice's Q-span.
IntegerLattice as_integer_lattice(const FreeModule& gamma);

// --- Relations between modules ---

// Γ₁ ∼ Γ₂ (commensurable: Γ₁ ∩ Γ₂ of finite index in both) iff every entry
// of B₂⁻¹B₁ lies in K.  Requires a shared ambient field, ring, dimension.
bool commensurate(const FreeModule& a, const FreeModule& b);

// [Γ : Γ'] as Z-modules. Throws NotSubmodule / InfiniteIndex via the
// lattice computation.
Integer module_index(const FreeModule& gamma, const FreeModule& sub);
Integer module_index(const FreeModule& gamma, const IntegerLattice& sub);

// Z-basis of Γ₁ ∩ Γ₂ in the flattened coordinates; rank r·d exactly when
// the modules are commensurate.
IntegerLattice intersect(const FreeModule& a, const FreeModule& b);

// True iff every Z-basis vector of `sub` lies in `gamma`.
bool is_submodule(const FreeModule& sub, const FreeModule& gamma);

// True iff every inner product ⟨γ, γ'⟩ of module vectors lies in K;
// decided on the Gram matrix B_ΓᵀB_Γ (polarization reduces the general
// inner product to Gram entries with the rational factor ½ ∈ K).
bool is_K_module(const FreeModule& gamma);

}  // namespace cokit
