#pragma once
#include <cstdint>
#include <vector>

#include "covhom/laurent.hpp"

namespace covhom {

/// Bounded chain complex of finitely generated free Z-modules.
/// ranks[i] is the rank of C_i; boundaries[i-1] is the map d_i: C_i -> C_{i-1}
/// of shape ranks[i-1] x ranks[i]. (Maps go down in degree.)
struct IntComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;

  std::size_t top_degree() const { return ranks.size() - 1; }
  const IntMatrix& d(std::size_t i) const { return boundaries[i - 1]; }

  // d_{i+1}, or the zero map from the zero module above the top degree
  IntMatrix incoming(std::size_t i) const;
  // d_i, or the zero map to the zero module at degree 0
  IntMatrix outgoing(std::size_t i) const;

  bool operator==(const IntComplex&) const = default;
};

/// Same shape discipline over the Laurent ring Z[t^pm].
struct EquivariantComplex {
  std::vector<std::size_t> ranks;
  std::vector<LaurentMatrix> boundaries;

  std::size_t top_degree() const { return ranks.size() - 1; }
  const LaurentMatrix& d(std::size_t i) const { return boundaries[i - 1]; }

  bool operator==(const EquivariantComplex&) const = default;
};

using HomologyProfile = std::vector<AbelianGroup>;

// Shape discipline plus d_i * d_{i+1} = 0; throws ShapeMismatch or
// CompositionNonzero with the failing degree and a witness entry.
void validate_int(const IntComplex& c);
void validate_equivariant(const EquivariantComplex& c);

// Homology in every degree, zero maps at both ends.
HomologyProfile homology(const IntComplex& c);

// Entrywise evaluation at t = u in {+1, -1}.
IntComplex specialize(const EquivariantComplex& c, int u);

// Tensor with Z[t^pm]/(t^2-1): ranks double, boundaries companion-embed.
IntComplex double_cover_complex(const EquivariantComplex& c);

// All boundaries vanish at t = 1, i.e. every entry is divisible by t-1.
bool is_minimal(const EquivariantComplex& c);

// Chain-homotopy-preserving elimination of boundary entries that are units
// +-t^k, run to a fixed point. Homology at t = +1, t = -1 and of the doubled
// complex is unchanged; ranks never increase. The result need not be minimal;
// callers must test, not assume.
EquivariantComplex unit_reduce(const EquivariantComplex& c);

// Seeded generator of minimal complexes: an integer complex with d*d = 0 is
// drawn first, then each boundary picks up a factor (t-1)*t^k. Degree 0 has
// rank one and the degree-1 boundary has coprime entries, so the complex
// models a connected space with a nontrivial character.
EquivariantComplex random_minimal(std::uint64_t seed, std::size_t max_degree,
                                  std::size_t max_rank, long coeff_bound);

// Seeded obfuscation: a burst of elementary Laurent basis changes with one
// acyclic two-term summand spliced in at a random point. Preserves homology
// at t = +-1 and of the doubled complex.
EquivariantComplex disguise(const EquivariantComplex& c, std::uint64_t seed);

IntComplex direct_sum(const IntComplex& a, const IntComplex& b);
EquivariantComplex direct_sum(const EquivariantComplex& a, const EquivariantComplex& b);

// Dimensions of the mod-2 homology, one per degree.
std::vector<std::size_t> betti_mod2(const IntComplex& c);

}  // namespace covhom
