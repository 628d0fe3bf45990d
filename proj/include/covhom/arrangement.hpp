#pragma once
#include <array>
#include <cstdint>
#include <optional>

#include "covhom/covers.hpp"

namespace covhom {

using Rational = mpq_class;

/// Affine rational lines a*x + b*y + c = 0 in the real plane, stored with
/// coprime integer coefficients and positive leading nonzero entry.
struct LineArrangement {
  std::vector<std::array<Int, 3>> lines;
};

// Normalizes and checks the invariants: (a, b) != (0, 0) per line, no two
// lines projectively equal. Throws ParseError / DuplicateLine.
LineArrangement make_arrangement(const std::vector<std::array<Rational, 3>>& raw);

/// Nonempty subset of line indices; encodes the character sending the
/// meridian of line i to 1 exactly when i is selected.
struct OmegaSubset {
  std::vector<std::size_t> indices;  // sorted, unique
};

/// Faces of the arrangement as sign vectors over {-1, 0, +1}, one entry per
/// line, with enough geometry attached to walk around vertices exactly.
struct FacePoset {
  struct Vertex {
    Rational x, y;
    std::vector<std::int8_t> sign;
    std::vector<std::size_t> lines_through;
  };
  struct Edge {
    std::size_t line;
    Rational rep_x, rep_y;  // interior point
    std::vector<std::int8_t> sign;
    std::size_t chamber_pos = 0;  // flip of the zero to +1
    std::size_t chamber_neg = 0;  // flip of the zero to -1
    static constexpr std::size_t kNoVertex = static_cast<std::size_t>(-1);
    std::size_t v_lo = kNoVertex;  // endpoint at the lower line parameter
    std::size_t v_hi = kNoVertex;
  };
  struct Chamber {
    std::vector<std::int8_t> sign;
  };
  // Counterclockwise walk around a vertex: chambers[j] is the sector between
  // edges[j] and edges[j+1 mod 2m].
  struct Star {
    std::vector<std::size_t> edges;
    std::vector<std::size_t> chambers;
  };

  std::size_t n_lines = 0;
  std::vector<Chamber> chambers;  // sorted by sign vector
  std::vector<Edge> edges;        // sorted by (line, position along it)
  std::vector<Vertex> vertices;   // sorted by (x, y)
  std::vector<Star> stars;        // parallel to vertices
};

FacePoset face_poset(const LineArrangement& arr);

// (1, n, sum over intersection points of multiplicity minus one).
std::array<std::size_t, 3> combinatorial_betti(const LineArrangement& arr);

// Integral cellular chain complex of the Salvetti model of the complexified
// complement: 0-cells are chambers, 1-cells are (edge, side) pairs, 2-cells
// are (vertex, adjacent chamber) pairs.
IntComplex salvetti_complex(const FacePoset& poset);

// Boundary over Z[t^pm] for the infinite cyclic cover attached to omega:
// coefficients pick up t^w with w the signed count of selected-line crossings
// along the connecting path, relative to lifts rooted at base_chamber.
// Specializing at t = +1 recovers salvetti_complex exactly.
EquivariantComplex equivariant_salvetti(const FacePoset& poset, const OmegaSubset& omega,
                                        std::optional<std::size_t> base_chamber = {});

struct ArrangementReport {
  std::size_t n_chambers = 0, n_edges = 0, n_vertices = 0;
  std::array<std::size_t, 3> betti{};
  bool betti_match = false;  // Salvetti homology against the combinatorial count
  std::vector<std::size_t> reduced_ranks;
  bool minimal_reached = false;
  PipelineReport report;
};

// Build, reduce, and run the double-cover comparison. When reduction stops
// short of minimal form the report keeps only the oracle-side profiles and
// sets non_minimal_residue; the formula side is never substituted.
ArrangementReport pipeline(const LineArrangement& arr, const OmegaSubset& omega);

}  // namespace covhom
