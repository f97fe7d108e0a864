// Command-line front end: simulate states, print matrices, run check suites.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "yperiod/errors.hpp"
#include "yperiod/gamma.hpp"
#include "yperiod/harness.hpp"
#include "yperiod/json_io.hpp"
#include "yperiod/transport.hpp"
#include "yperiod/y_system.hpp"

using namespace yperiod;

namespace {

struct Options {
  std::optional<int> r, k, trials, n_window, workers;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> bound;
  std::vector<std::string> checks;
  std::string format = "json";
  std::string out;
  std::string config;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--r", o.r, "rank r of the first factor");
  cmd->add_option("--k", o.k, "rank k of the second factor");
  cmd->add_option("--trials", o.trials, "trials per shape");
  cmd->add_option("--seed", o.seed, "64-bit run seed");
  cmd->add_option("--bound", o.bound, "seed values are p/q with 1 <= p, q <= bound");
  cmd->add_option("--n-window", o.n_window, "number of columns (0: shape default)");
  cmd->add_option("--checks", o.checks, "checks to run")->delimiter(',');
  cmd->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", o.out, "write output here instead of stdout");
  cmd->add_option("--workers", o.workers, "worker threads");
  cmd->add_option("--config", o.config, "JSON file with the same fields; flags win");
}

TrialConfig resolve(const Options& o, const std::set<std::string>& default_checks) {
  TrialConfig c;
  c.checks = default_checks;
  if (!o.config.empty()) {
    Json j;
    try {
      j = Json::parse(read_text(o.config));
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("cannot parse " + o.config + ": " + e.what());
    }
    c = config_from_json(j, c);
  }
  if (o.r || o.k) {
    const SystemShape first = c.shapes.front();
    c.shapes = {{o.r.value_or(first.r), o.k.value_or(first.k)}};
  }
  if (o.trials) c.trials = *o.trials;
  if (o.seed) c.seed = *o.seed;
  if (o.bound) c.bound = *o.bound;
  if (o.n_window) c.n_window = *o.n_window;
  if (o.workers) c.workers = *o.workers;
  if (!o.checks.empty()) c.checks = {o.checks.begin(), o.checks.end()};
  c.validate();
  return c;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text(o.out, text);
  }
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

int emit_report(const Options& o, const Report& report) {
  emit(o, o.format == "csv" ? report_to_csv(report) : to_json(report).dump(2) + "\n");
  return exit_code(report);
}

std::set<std::string> all_checks() { return {all_check_names().begin(), all_check_names().end()}; }

GammaState one_gamma(const TrialConfig& c) {
  const SystemShape shape = c.shapes.front();
  require_gamma_shape(shape);
  Rng rng(trial_seed(c.seed, shape, 0));
  return generate(shape, std::max(c.n_window, default_gamma_columns(shape)), rng, c.bound).state;
}

int cmd_simulate_y(const Options& o) {
  const TrialConfig c = resolve(o, all_checks());
  const SystemShape shape = c.shapes.front();
  Rng rng(trial_seed(c.seed, shape, 0));
  const int window = c.n_window > 0 ? c.n_window : default_y_window(shape);
  emit_json(o, to_json(simulate_y(shape, rng, c.bound, window).state));
  return kExitOk;
}

int cmd_simulate_gamma(const Options& o) {
  emit_json(o, to_json(one_gamma(resolve(o, all_checks()))));
  return kExitOk;
}

int cmd_staircase(const Options& o) {
  const GammaState st = one_gamma(resolve(o, all_checks()));
  Json rows = Json::array();
  for (StaircaseSide side : {StaircaseSide::North, StaircaseSide::South}) {
    for (int n0 : staircase_origins(st, side)) {
      const SquareMatrix m = staircase_product(st, n0, side);
      const bool north = side == StaircaseSide::North;
      rows.push_back({{"side", north ? "north" : "south"},
                      {"n0", n0},
                      {"anti_triangular", north ? m.is_anti_lower_triangular() : m.is_anti_upper_triangular()},
                      {"northwest_vanishing_bound", m.northwest_vanishing_bound()},
                      {"matrix", to_json(m)}});
    }
  }
  emit_json(o, {{"r", st.shape().r}, {"k", st.shape().k}, {"staircases", rows}});
  return kExitOk;
}

int cmd_delta(const Options& o) {
  const GammaState st = one_gamma(resolve(o, all_checks()));
  Json rows = Json::array();
  for (const PlanePoint& p : delta_points(st)) {
    const SquareMatrix d = delta(st, p);
    rows.push_back({{"n", p.n}, {"i", p.i}, {"anti_diagonal", d.is_anti_diagonal()}, {"matrix", to_json(d)}});
  }
  emit_json(o, {{"r", st.shape().r}, {"k", st.shape().k}, {"deltas", rows}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for the periodicity of the A_r x A_k Y-system"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto sub = [&](const char* name, const char* help, std::function<int()> fn) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common(cmd, o);
    cmd->callback([&action, fn] { action = fn; });
  };
  sub("simulate-y", "simulate one truncated Y-system and print it", [&] { return cmd_simulate_y(o); });
  sub("check-periodicity", "run the Y-system relation and periodicity checks", [&] {
    return emit_report(o, run_trials(resolve(o, {"relations", "periodicity"})));
  });
  sub("simulate-gamma", "generate one Gamma-system and print it", [&] { return cmd_simulate_gamma(o); });
  sub("check-gamma", "run the Gamma-system checks", [&] {
    return emit_report(o, run_trials(resolve(o, {"z-relations", "z-sigma", "flatness", "staircase",
                                                 "factorization-k2", "delta", "transport", "diagonal-ratio"})));
  });
  sub("staircase", "print the staircase products of one Gamma-system", [&] { return cmd_staircase(o); });
  sub("delta", "print delta(p) for every eligible vertex", [&] { return cmd_delta(o); });
  sub("run-suite", "run every selected check", [&] { return emit_report(o, run_trials(resolve(o, all_checks()))); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  try {
    return action();
  } catch (const SeedExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}
