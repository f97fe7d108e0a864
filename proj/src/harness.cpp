#include "yperiod/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "yperiod/errors.hpp"
#include "yperiod/gamma.hpp"
#include "yperiod/transport.hpp"
#include "yperiod/y_system.hpp"
#include "yperiod/z_system.hpp"

namespace yperiod {

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      "relations", "periodicity", "z-relations", "z-sigma",   "flatness",       "staircase",
      "factorization-k2", "delta", "transport",  "diagonal-ratio", "infinite-window"};
  return names;
}

std::vector<SystemShape> default_shapes() { return {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}}; }

void TrialConfig::validate() const {
  if (shapes.empty()) throw ConfigError("no shapes given");
  for (const SystemShape& s : shapes) {
    if (s.r < 1 || s.k < 1) throw ConfigError("bad shape " + s.label());
  }
  if (trials < 1) throw ConfigError("trials must be positive");
  if (bound < 1) throw ConfigError("bound must be positive");
  if (n_window < 0) throw ConfigError("n_window must be non-negative");
  if (workers < 1) throw ConfigError("workers must be positive");
  for (const std::string& c : checks) {
    if (std::find(all_check_names().begin(), all_check_names().end(), c) == all_check_names().end()) {
      throw ConfigError("unknown check \"" + c + "\"");
    }
  }
}

TrialConfig config_from_json(const Json& j, TrialConfig base) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  try {
    if (j.contains("shapes")) {
      base.shapes.clear();
      for (const Json& s : j.at("shapes")) {
        if (s.is_array() && s.size() == 2) {
          base.shapes.push_back({s[0].get<int>(), s[1].get<int>()});
        } else {
          base.shapes.push_back({s.at("r").get<int>(), s.at("k").get<int>()});
        }
      }
    }
    if (j.contains("r") || j.contains("k")) {
      base.shapes = {{j.value("r", 1), j.value("k", 1)}};
    }
    if (j.contains("trials")) base.trials = j.at("trials").get<int>();
    if (j.contains("seed")) base.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("bound")) base.bound = j.at("bound").get<std::uint32_t>();
    if (j.contains("n_window")) base.n_window = j.at("n_window").get<int>();
    if (j.contains("workers")) base.workers = j.at("workers").get<int>();
    if (j.contains("checks")) base.checks = j.at("checks").get<std::set<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  base.validate();
  return base;
}

Json to_json(const TrialConfig& config) {
  Json shapes = Json::array();
  for (const SystemShape& s : config.shapes) shapes.push_back({s.r, s.k});
  return {{"shapes", shapes},         {"trials", config.trials},   {"seed", config.seed},
          {"bound", config.bound},    {"n_window", config.n_window}, {"checks", config.checks},
          {"workers", config.workers}};
}

std::uint64_t trial_seed(std::uint64_t seed, SystemShape shape, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(shape.r), static_cast<std::uint32_t>(shape.k),
                    static_cast<std::uint32_t>(trial)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

namespace {

// Re-labels every counter and violation of `from` as "<prefix><check>",
// optionally under another shape label.
Report prefixed(const Report& from, const std::string& prefix, const std::string& shape = {}) {
  Report out;
  for (const auto& [key, c] : from.counters()) {
    out.mutable_counters()[{prefix + key.check, shape.empty() ? key.shape : shape}] += c;
  }
  for (Violation v : from.violations()) {
    v.check = prefix + v.check;
    if (!shape.empty()) v.shape = shape;
    out.mutable_violations().push_back(std::move(v));
  }
  return out;
}

bool any_of(const TrialConfig& config, std::initializer_list<const char*> names) {
  for (const char* n : names) {
    if (config.has(n)) return true;
  }
  return false;
}

void y_section(const TrialConfig& config, SystemShape shape, Rng& rng, Report& report, TrialMeta& meta) {
  if (!any_of(config, {"relations", "periodicity", "z-relations", "z-sigma"})) return;
  const int window = config.n_window > 0 ? config.n_window : default_y_window(shape);
  const SimulatedY sim = simulate_y(shape, rng, config.bound, window);
  meta.retries += sim.retries;
  if (config.has("relations")) {
    report.merge(check_relations(sim.state));
    report.merge(prefixed(check_relations(dual(sim.state)), "dual-"));
  }
  if (config.has("periodicity")) {
    report.merge(check_periodicity(sim.state));
    report.merge(check_translation(sim.state));
    report.merge(prefixed(check_periodicity(dual(sim.state)), "dual-"));
  }
  if (config.has("z-relations") || config.has("z-sigma")) {
    const ZState z = y_to_z(sim.state);
    if (config.has("z-relations")) report.merge(prefixed(z_relation_check(z), "y-"));
    if (config.has("z-sigma")) report.merge(prefixed(z_sigma_hat_check(z), "y-"));
  }
}

void gamma_section(const TrialConfig& config, SystemShape shape, Rng& rng, Report& report, TrialMeta& meta) {
  if (!any_of(config, {"z-relations", "z-sigma", "flatness", "staircase", "factorization-k2", "delta",
                       "transport", "diagonal-ratio"})) {
    return;
  }
  SystemShape gshape = shape;
  if (shape.r < shape.k) {
    gshape = shape.transposed();
    meta.transposed = true;
    report.add_note("shape " + shape.label() + " transposed to " + gshape.label() + " for Gamma checks");
  }
  const int cols = std::max(config.n_window, default_gamma_columns(gshape));
  const GeneratedGamma gen = generate(gshape, cols, rng, config.bound);
  meta.retries += gen.retries;
  const GammaState& st = gen.state;

  if (config.has("flatness")) {
    report.merge(check_flatness(st));
    report.merge(check_xpera(st));
    report.merge(check_path_independence(st, rng, 16));
  }
  if (config.has("z-relations") || config.has("z-sigma")) {
    const ZState z = z_from_gamma(st);
    if (config.has("z-relations")) {
      report.merge(prefixed(z_relation_check(z), "gamma-"));
      report.merge(check_z_ratio_relations(st));
    }
    if (config.has("z-sigma")) report.merge(prefixed(z_sigma_hat_check(z), "gamma-"));
  }
  if (config.has("staircase")) report.merge(check_staircases(st));
  if (config.has("factorization-k2") && gshape.k == 2) report.merge(sigma_factorization_check_k2(st));
  if (config.has("delta")) report.merge(check_deltas(st));
  if (config.has("transport") || config.has("diagonal-ratio")) {
    for (const PlanePoint& c : eligible_squares(st)) {
      if (config.has("transport")) report.merge(check_transport_commutation(st, c));
      if (config.has("diagonal-ratio")) report.merge(check_diagonal_identity(st, c));
    }
    if (config.has("diagonal-ratio")) report.merge(check_induced_z_invariance(st));
  }
}

void infinite_section(SystemShape shape, Rng& rng, std::uint32_t bound, Report& report) {
  const Diamond window{6, 0, 0, 2};
  const YState ones = extend_infinite_window([](const Site&) { return Rational(1); }, window);
  bool constant = true;
  for (const auto& [s, v] : ones.values()) constant = constant && v == Rational(1);
  report.record("infinite-constant", shape, constant, "constant seeds", "1", constant ? "1" : "non-constant");
  // the un-truncated window has no shape; its counters are filed under the trial's
  report.merge(prefixed(check_relations(ones), "infinite-", shape.label()));
  for (int attempt = 0;; ++attempt) {
    try {
      const YState generic =
          extend_infinite_window([&](const Site&) { return sample_positive(rng, bound); }, window);
      report.merge(prefixed(check_relations(generic), "infinite-", shape.label()));
      report.merge(prefixed(check_periodicity(generic), "infinite-", shape.label()));
      return;
    } catch (const DegenerateValue&) {
      if (attempt >= kMaxRetries) throw SeedExhausted("infinite window seeds exhausted");
    }
  }
}

}  // namespace

Report run_trial(const TrialConfig& config, SystemShape shape, int trial) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t seed = trial_seed(config.seed, shape, trial);
  Report report;
  TrialMeta meta{shape.label(), seed, 0, false, false, 0.0};
  // independent streams so that deselecting one section leaves the others alone
  std::seed_seq y_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 1u};
  std::seed_seq g_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 2u};
  std::seed_seq i_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 3u};
  Rng y_rng(y_seq), g_rng(g_seq), i_rng(i_seq);
  try {
    y_section(config, shape, y_rng, report, meta);
  } catch (const SeedExhausted& e) {
    meta.exhausted = true;
    report.add_note(shape.label() + " trial " + std::to_string(trial) + ": " + e.what());
  }
  try {
    gamma_section(config, shape, g_rng, report, meta);
  } catch (const SeedExhausted& e) {
    meta.exhausted = true;
    report.add_note(shape.label() + " trial " + std::to_string(trial) + ": " + e.what());
  }
  if (config.has("infinite-window")) {
    try {
      infinite_section(shape, i_rng, config.bound, report);
    } catch (const SeedExhausted& e) {
      meta.exhausted = true;
      report.add_note(shape.label() + " trial " + std::to_string(trial) + ": " + e.what());
    }
  }
  meta.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.add_trial(meta);
  return report;
}

Report run_trials(const TrialConfig& config) {
  config.validate();
  std::vector<std::pair<SystemShape, int>> jobs;
  for (const SystemShape& s : config.shapes) {
    for (int t = 0; t < config.trials; ++t) jobs.emplace_back(s, t);
  }
  std::vector<Report> results(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t idx = next++; idx < jobs.size(); idx = next++) {
      try {
        results[idx] = run_trial(config, jobs[idx].first, jobs[idx].second);
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  };
  const int n_threads = std::min<int>(config.workers, static_cast<int>(jobs.size()));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  Report merged;
  for (std::size_t idx = 0; idx < jobs.size(); ++idx) {
    if (errors[idx]) std::rethrow_exception(errors[idx]);
    merged.merge(results[idx]);
  }
  return merged;
}

int exit_code(const Report& report) {
  if (!report.all_passed()) return kExitViolation;
  if (report.any_exhausted()) return kExitExhausted;
  return kExitOk;
}

}  // namespace yperiod
