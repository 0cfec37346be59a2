#pragma once

// Named module constructors (hypercubic lattices, root-scaling lattices,
// quaternionic rings, icosahedral and planar cyclotomic modules, imaginary
// quadratic orders) plus deterministic samplers of genuine similarity and
// coincidence isometries for property tests.  Every constructor re-checks
// its recorded expected properties and fails loudly rather than returning a
// mistranscribed module.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cokit/isometry.hpp"

namespace cokit {

// Z^d with the identity basis, S = Z, K = Q.  The ambient field is Q(sqrt2)
// so that the 45-degree similarity rotations of even-dimensional lattices
// are expressible.
FreeModule hypercubic(int d);

// The lattice spanned by {xi^i e_i}, xi = n^(1/d) irrational, together with
// the cyclic coordinate shift e_i -> e_{i+1}, which scales the lattice by xi.
struct Example315 {
  FreeModule module;
  Isometry shift;
  int m = 0;  // least i with xi^i rational = expected eta-order of the shift
};
Example315 example_315(int d, long n);

// Rank-8 quaternionic ring over Z[tau] in R^4 (generators 1, i,
// (1+i+j+k)/2, ((1-tau) + tau i + k)/2), with K = Q(tau).
FreeModule icosian_ring();

// Rank-8 quaternionic ring over Z[sqrt2] in R^4 (generators 1,
// (1+i)/sqrt2, (1+j)/sqrt2, (1+i+j+k)/2), with K = Q(sqrt2).
FreeModule cubian_ring();

// Z[tau]-modules of rank 6 in R^3 invariant under the icosahedral rotation
// group, in the orientation with 2-fold axes along the coordinate axes and
// icosahedron vertices at the cyclic permutations of (0, +-1, +-tau).
enum class IcosahedralVariant { BodyCentred, FaceCentred };
FreeModule icosahedral_module(IcosahedralVariant variant);

// Z[zeta_m] as a planar module: basis {(1,0), (cos 2pi/m, sin 2pi/m)} over
// S = Z[2 cos 2pi/m], with K = Q(2 cos 2pi/m).  Supported m: 3, 4, 5, 6, 8,
// 10, 12 (UnsupportedM otherwise).
FreeModule cyclotomic_module(int m);

// The order Z + f*O_K of conductor f in the imaginary quadratic field of
// squarefree discriminant part D < 0, presented with Z-basis {1, f*omega}.
PlanarOrder quadratic_order(long squarefree_d, long conductor);

// Deterministic pseudo-random similarity/coincidence isometries for a
// catalog module (recognized by its shape; UnsupportedModule otherwise).
// Every emitted isometry is post-validated to classify as Similarity or
// Coincidence.
std::vector<Isometry> sample_similarity_isometries(const FreeModule& gamma, int count,
                                                   std::uint64_t seed);
// Rotations a/|a| for pseudo-random elements a of a planar order.
std::vector<Isometry> sample_similarity_isometries(const PlanarOrder& o, int count,
                                                   std::uint64_t seed);

// Resolution of CLI catalog names: "hypercubic:3", "example315:3:2",
// "icosian", "cubian", "icosahedral:B", "icosahedral:F", "cyclotomic:8",
// "order:-1:2".  Returns nullopt for names outside the catalog grammar;
// throws (PerfectPower, UnsupportedM, InvalidDiscriminant, ...) when a
// well-formed name denotes an invalid construction.
struct CatalogLookup {
  std::string name;
  FreeModule module;                     // order names resolve to O as a module
  std::optional<PlanarOrder> order;      // set for "order:D:f"
  std::optional<Example315> example;     // set for "example315:d:n"
};
std::optional<CatalogLookup> catalog_lookup(const std::string& name);

}  // namespace cokit
