#include "covhom/battery.hpp"

#include <sstream>

#include "covhom/rng.hpp"

namespace covhom {

std::string BatteryResult::summary() const {
  std::ostringstream out;
  out << theorem_pass << "/" << trials << " theorem, ";
  out << corollary1_pass << "/" << trials << " corollary1, ";
  out << corollary2_pass << "/" << trials << " corollary2, ";
  out << h0_pass << "/" << trials << " h0, ";
  out << mod2_pass << "/" << trials << " mod2, ";
  out << reduction_pass << "/" << reduction_trials << " reduction";
  return out.str();
}

BatteryResult run_battery(const BatteryConfig& cfg) {
  SplitMix64 master(cfg.seed);
  BatteryResult res;
  res.trials = cfg.trials;
  res.reduction_trials = cfg.reduction_trials;

  for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
    const std::uint64_t seed = master.next();
    auto note = [&](const std::string& what) {
      res.failures.push_back("trial " + std::to_string(trial) + " (seed " +
                             std::to_string(seed) + "): " + what);
    };
    try {
      EquivariantComplex c = random_minimal(seed, cfg.max_degree, cfg.max_rank, cfg.coeff_bound);
      PipelineReport rep = verify_theorem(c);
      if (rep.theorem_holds)
        ++res.theorem_pass;
      else
        note("formula and direct profiles differ");
      if (rep.corollary2_consistent)
        ++res.corollary2_pass;
      else
        note("corollary 2 biconditional failed");
      if (rep.mod2_consistent)
        ++res.mod2_pass;
      else
        note("mod-2 dimensions disagree with the UCT count");

      const std::size_t b1 = c.ranks[1];
      bool cor1 = false;
      try {
        cor1 = corollary1_forward(rep.h_local[1], b1) == rep.h_cover_direct[1] &&
               corollary1_backward(rep.h_cover_direct[1], b1) == rep.h_local[1];
      } catch (const Error&) {
        cor1 = false;
      }
      if (cor1)
        ++res.corollary1_pass;
      else
        note("corollary 1 translation failed in degree one");

      AbelianGroup z2{0, {Int(2)}};
      if (rep.h_local[0] == z2 && rep.h_half[0].is_trivial())
        ++res.h0_pass;
      else
        note("degree-zero contract failed");
    } catch (const Error& e) {
      note(std::string("unexpected error: ") + e.what());
    }
  }

  for (std::size_t trial = 0; trial < cfg.reduction_trials; ++trial) {
    const std::uint64_t seed = master.next();
    const std::uint64_t disguise_seed = master.next();
    auto note = [&](const std::string& what) {
      res.failures.push_back("reduction trial " + std::to_string(trial) + " (seed " +
                             std::to_string(seed) + "/" + std::to_string(disguise_seed) +
                             "): " + what);
    };
    try {
      EquivariantComplex c = random_minimal(seed, cfg.max_degree, cfg.max_rank, cfg.coeff_bound);
      EquivariantComplex d = disguise(c, disguise_seed);
      EquivariantComplex r = unit_reduce(d);
      bool ok = is_minimal(r);
      if (!ok) note("reduction stopped short of minimal form");
      if (ok) {
        ok = homology(specialize(r, 1)) == homology(specialize(d, 1)) &&
             homology(specialize(r, -1)) == homology(specialize(d, -1)) &&
             homology(double_cover_complex(r)) == homology(double_cover_complex(d));
        if (!ok) note("reduction changed a homology profile");
      }
      if (ok) ++res.reduction_pass;
    } catch (const Error& e) {
      note(std::string("unexpected error: ") + e.what());
    }
  }
  return res;
}

}  // namespace covhom
