#pragma once

// Trial orchestration: every (shape, trial) pair is an independent work unit
// with its own seed, so reports do not depend on the number of workers.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "yperiod/json_io.hpp"
#include "yperiod/lattice.hpp"
#include "yperiod/report.hpp"

namespace yperiod {

// relations, periodicity, z-relations, z-sigma, flatness, staircase,
// factorization-k2, delta, transport, diagonal-ratio, infinite-window
const std::vector<std::string>& all_check_names();
std::vector<SystemShape> default_shapes();

struct TrialConfig {
  std::vector<SystemShape> shapes = default_shapes();
  int trials = 10;
  std::uint64_t seed = 1;
  std::uint32_t bound = 10;
  int n_window = 0;  // 0: 2(r+k+2)+2 for the shape at hand
  std::set<std::string> checks{all_check_names().begin(), all_check_names().end()};
  int workers = 1;

  // Throws ConfigError.
  void validate() const;
  bool has(const std::string& check) const { return checks.contains(check); }
};

// Overlays the fields present in `j` onto `base`. Throws ConfigError.
TrialConfig config_from_json(const Json& j, TrialConfig base = {});
Json to_json(const TrialConfig& config);

// Seed of one trial, mixed from the run seed, the shape and the trial index.
std::uint64_t trial_seed(std::uint64_t seed, SystemShape shape, int trial);

// Runs the selected checks for one trial. SeedExhausted is caught and marked
// in the trial metadata.
Report run_trial(const TrialConfig& config, SystemShape shape, int trial);

// All trials of all shapes, merged in (shape, trial) order.
Report run_trials(const TrialConfig& config);

// 0 all passed, 1 any violation, 3 some trial ran out of reseeds.
int exit_code(const Report& report);

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitExhausted = 3;

}  // namespace yperiod
