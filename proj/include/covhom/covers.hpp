#pragma once
#include <optional>

#include "covhom/chain.hpp"

namespace covhom {

/// Outcome of running the double-cover comparison on one equivariant complex.
/// h_cover_formula is absent when the input never reached minimal form; the
/// oracle-side profiles are always present.
struct PipelineReport {
  HomologyProfile h_base;       // H_*(X, Z), from t = +1
  HomologyProfile h_local;      // H_*(X, L), from t = -1
  HomologyProfile h_half;       // H_*(E, alpha/2)
  std::optional<HomologyProfile> h_cover_formula;
  HomologyProfile h_cover_direct;  // doubled-complex homology
  bool non_minimal_residue = false;
  bool theorem_holds = false;
  bool corollary2_consistent = false;
  bool mod2_consistent = false;
};

// The complex computing H_*(X, L): evaluation at t = -1. Minimality is not
// required; when the input is minimal every entry comes out even.
IntComplex local_system_complex(const EquivariantComplex& c);

// Entrywise division by 2; throws OddEntry naming the first odd position.
IntComplex halved_complex(const IntComplex& e);

// H_i(cover) = Z^{ranks[i]} + H_i of the halved local complex. Requires a
// minimal input with nontrivial character.
HomologyProfile cover_homology_formula(const EquivariantComplex& c);

// Oracle side: homology of the doubled complex. No minimality needed.
HomologyProfile cover_homology_direct(const EquivariantComplex& c);

// Run both sides plus the consistency checks. Throws NotMinimal / ZeroOmega.
PipelineReport verify_theorem(const EquivariantComplex& c);

// Degree-one translation between the local-system group and the cover group,
// for a space with first Betti number b1. Forward: Z^r + Z/2d_1 + ... + Z/2d_k
// + (Z/2)^{b1-r-k-1}  |->  Z^{b1+r} + Z/d_1 + ... + Z/d_k.
AbelianGroup corollary1_forward(const AbelianGroup& h1_local, std::size_t b1);
AbelianGroup corollary1_backward(const AbelianGroup& h1_cover, std::size_t b1);

// Whether "all local torsion is 2-elementary in every degree" agrees with
// "the cover profile is torsion-free in every degree".
bool corollary2_check(const HomologyProfile& h_local, const HomologyProfile& h_cover);

// Mod-2 dimensions predicted by the Universal Coefficient Theorem:
// rank_i plus even torsion counts in degrees i and i-1.
std::vector<std::size_t> uct_mod2_dims(const HomologyProfile& h);

}  // namespace covhom
