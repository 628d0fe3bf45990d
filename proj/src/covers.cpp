#include "covhom/covers.hpp"

#include <cassert>

namespace covhom {

IntComplex local_system_complex(const EquivariantComplex& c) { return specialize(c, -1); }

IntComplex halved_complex(const IntComplex& e) {
  validate_int(e);
  IntComplex out;
  out.ranks = e.ranks;
  out.boundaries.reserve(e.boundaries.size());
  for (std::size_t bi = 0; bi < e.boundaries.size(); ++bi) {
    const IntMatrix& m = e.boundaries[bi];
    IntMatrix h(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (mpz_odd_p(m.at(i, j).get_mpz_t()))
          fail(errc::odd_entry, "odd entry " + m.at(i, j).get_str() + " at degree " +
                                    std::to_string(bi + 1) + ", position (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
        h.at(i, j) = m.at(i, j) / 2;
      }
    out.boundaries.push_back(std::move(h));
  }
  return out;
}

namespace {

void require_minimal(const EquivariantComplex& c) {
  validate_equivariant(c);
  for (std::size_t i = 1; i < c.ranks.size(); ++i) {
    const LaurentMatrix& m = c.d(i);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Int v = m.at(r, j).eval_at_unit(1);
        if (v != 0)
          fail(errc::not_minimal, "boundary d_" + std::to_string(i) + " entry (" +
                                      std::to_string(r) + "," + std::to_string(j) + ") = " +
                                      m.at(r, j).str() + " has value " + v.get_str() +
                                      " at t=1");
      }
  }
}

// The character is trivial exactly when the boundary into degree 0 dies at
// t = -1 while C_0 is nonzero.
void require_nonzero_character(const EquivariantComplex& c) {
  if (c.ranks[0] == 0) return;
  if (c.ranks.size() == 1)
    fail(errc::zero_omega, "complex concentrated in degree 0 admits no nonzero character");
  if (specialize_matrix(c.d(1), -1).is_zero())
    fail(errc::zero_omega, "boundary into degree 0 vanishes at t=-1: trivial character");
}

}  // namespace

HomologyProfile cover_homology_formula(const EquivariantComplex& c) {
  require_minimal(c);
  require_nonzero_character(c);
  HomologyProfile half = homology(halved_complex(local_system_complex(c)));
  HomologyProfile out;
  out.reserve(c.ranks.size());
  for (std::size_t i = 0; i < c.ranks.size(); ++i)
    out.push_back(direct_sum(AbelianGroup::free_of_rank(c.ranks[i]), half[i]));
  return out;
}

HomologyProfile cover_homology_direct(const EquivariantComplex& c) {
  return homology(double_cover_complex(c));
}

PipelineReport verify_theorem(const EquivariantComplex& c) {
  require_minimal(c);
  require_nonzero_character(c);

  PipelineReport rep;
  rep.h_base = homology(specialize(c, 1));
  IntComplex local = local_system_complex(c);
  rep.h_local = homology(local);
  rep.h_half = homology(halved_complex(local));

  HomologyProfile formula;
  formula.reserve(c.ranks.size());
  for (std::size_t i = 0; i < c.ranks.size(); ++i)
    formula.push_back(direct_sum(AbelianGroup::free_of_rank(c.ranks[i]), rep.h_half[i]));
  rep.h_cover_formula = formula;

  IntComplex doubled = double_cover_complex(c);
  rep.h_cover_direct = homology(doubled);

  rep.theorem_holds = (formula == rep.h_cover_direct);
  rep.corollary2_consistent = corollary2_check(rep.h_local, rep.h_cover_direct);
  rep.mod2_consistent = (betti_mod2(doubled) == uct_mod2_dims(rep.h_cover_direct));
  return rep;
}

AbelianGroup corollary1_forward(const AbelianGroup& h1_local, std::size_t b1) {
  std::size_t twos = 0;
  AbelianGroup out;
  for (const Int& d : h1_local.torsion) {
    if (mpz_odd_p(d.get_mpz_t()))
      fail(errc::shape_violation,
           "torsion factor " + d.get_str() + " is odd; not a local-system group over a "
           "minimal complex with nonzero character");
    if (d == 2)
      ++twos;
    else
      out.torsion.push_back(d / 2);
  }
  const std::size_t r = h1_local.rank, k = out.torsion.size();
  if (r + k + 1 > b1 || twos != b1 - r - k - 1)
    fail(errc::shape_violation,
         "inconsistent counts: rank " + std::to_string(r) + ", " + std::to_string(k) +
             " factors above 2 and " + std::to_string(twos) + " copies of Z/2 against b1 = " +
             std::to_string(b1));
  out.rank = b1 + r;
  return out;
}

AbelianGroup corollary1_backward(const AbelianGroup& h1_cover, std::size_t b1) {
  if (h1_cover.rank < b1)
    fail(errc::shape_violation, "cover rank " + std::to_string(h1_cover.rank) +
                                    " below b1 = " + std::to_string(b1));
  const std::size_t r = h1_cover.rank - b1;
  const std::size_t k = h1_cover.torsion.size();
  if (r + k + 1 > b1)
    fail(errc::shape_violation,
         "rank " + std::to_string(r) + " and " + std::to_string(k) +
             " torsion factors leave no room for the Z/2 block with b1 = " + std::to_string(b1));
  AbelianGroup out;
  out.rank = r;
  out.torsion.assign(b1 - r - k - 1, Int(2));
  for (const Int& d : h1_cover.torsion) out.torsion.push_back(2 * d);
  return out;
}

bool corollary2_check(const HomologyProfile& h_local, const HomologyProfile& h_cover) {
  assert(h_local.size() == h_cover.size());
  bool local_two_elementary = true;
  for (const AbelianGroup& g : h_local)
    for (const Int& d : g.torsion)
      if (d != 2) local_two_elementary = false;
  bool cover_torsion_free = true;
  for (const AbelianGroup& g : h_cover)
    if (!g.torsion_free()) cover_torsion_free = false;
  return local_two_elementary == cover_torsion_free;
}

std::vector<std::size_t> uct_mod2_dims(const HomologyProfile& h) {
  auto even_count = [](const AbelianGroup& g) {
    std::size_t n = 0;
    for (const Int& d : g.torsion)
      if (mpz_even_p(d.get_mpz_t())) ++n;
    return n;
  };
  std::vector<std::size_t> dims(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    dims[i] = h[i].rank + even_count(h[i]);
    if (i > 0) dims[i] += even_count(h[i - 1]);
  }
  return dims;
}

}  // namespace covhom
