#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "covhom/covers.hpp"

namespace covhom {

/// Seeded verification battery: theorem and corollary checks over random
/// minimal complexes, plus reduction round trips over disguised ones.
struct BatteryConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 200;            // theorem-side instances
  std::size_t reduction_trials = 100;  // disguise-and-reduce instances
  std::size_t max_degree = 4;
  std::size_t max_rank = 6;
  long coeff_bound = 5;
};

struct BatteryResult {
  std::size_t trials = 0;
  std::size_t reduction_trials = 0;
  std::size_t theorem_pass = 0;
  std::size_t corollary1_pass = 0;
  std::size_t corollary2_pass = 0;
  std::size_t h0_pass = 0;
  std::size_t mod2_pass = 0;
  std::size_t reduction_pass = 0;
  std::vector<std::string> failures;

  bool all_passed() const {
    return failures.empty() && theorem_pass == trials && corollary1_pass == trials &&
           corollary2_pass == trials && h0_pass == trials && mod2_pass == trials &&
           reduction_pass == reduction_trials;
  }
  std::string summary() const;
};

BatteryResult run_battery(const BatteryConfig& cfg);

}  // namespace covhom
