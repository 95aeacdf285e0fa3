// Command-line front end: run, sweep and selftest.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "locate/cli/config.hpp"
#include "locate/cli/csv.hpp"
#include "locate/cli/plot.hpp"
#include "locate/cli/selftest.hpp"
#include "locate/experiments/runner.hpp"

namespace {

using namespace locate;

struct FlagSet {
  std::string config;
  std::string out = "locate";
  cli::KeyValues values;
};

void add_scenario_flags(CLI::App* cmd, FlagSet& flags, bool sweep) {
  cmd->add_option("--config", flags.config, "flat key = value config file");
  cmd->add_option("--out", flags.out, "output path prefix")->capture_default_str();
  struct Flag {
    const char* name;
    const char* key;
    const char* help;
  };
  static const Flag common[] = {
      {"--protocol", "protocol", "locate | locate-basic | flooding | probabilistic"},
      {"--n", "n", "number of mobile nodes"},
      {"--tau", "tau", "solver fraction in [0, 1]"},
      {"--runs", "runs", "Monte Carlo runs per point"},
      {"--seed", "seed", "base seed; run i uses seed ^ i"},
      {"--radio", "radio", "lora | wifi"},
      {"--p-start", "p_start", "initial DTN retransmit probability"},
      {"--horizon", "horizon_s", "run horizon in seconds"},
  };
  static const Flag sweep_only[] = {
      {"--axis", "axis", "tau | n | p_start"},
      {"--values", "values", "comma-separated axis values"},
      {"--protocols", "protocols", "comma-separated protocol list"},
  };
  auto add = [&](const Flag& f) {
    cmd->add_option_function<std::string>(
        f.name, [&flags, key = std::string(f.key)](const std::string& v) { flags.values[key] = v; },
        f.help);
  };
  for (const auto& f : common) add(f);
  if (sweep) {
    for (const auto& f : sweep_only) add(f);
  }
}

unsigned env_workers() {
  if (const char* env = std::getenv("LOCATE_SIM_THREADS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw cli::ConfigError("LOCATE_SIM_THREADS", std::string("not a number: ") + env);
    }
  }
  return 0;
}

std::optional<std::filesystem::path> config_path(const FlagSet& flags) {
  if (flags.config.empty()) return std::nullopt;
  return std::filesystem::path(flags.config);
}

void print_aggregate(const std::string& label, const experiments::Aggregate& a) {
  std::cout << label << " runs=" << a.runs_total << " solved=" << a.runs_solved
            << " err=" << cli::format_real(a.err_pct)
            << " ert_mean_s=" << cli::format_real(a.ert_mean_s)
            << " ert_ci95_s=" << cli::format_real(a.ert_ci95_s)
            << " eo_mean=" << cli::format_real(a.eo_mean)
            << " eo_ci95=" << cli::format_real(a.eo_ci95) << '\n';
}

int do_run(const FlagSet& flags) {
  const auto cfg = cli::parse_config(cli::Command::kRun, config_path(flags), flags.values);
  const auto& sc = cfg.scenario;
  auto [results, agg] = experiments::run_batch(sc, env_workers());
  const experiments::SweepRow row{sc.protocol, sc.n, sc.tau, sc.params.p_start, agg};
  cli::write_runs_csv(flags.out + "_runs.csv", sc, results);
  cli::write_aggregate_csv(flags.out + "_aggregate.csv", std::span(&row, 1));
  print_aggregate(protocol::to_string(sc.protocol), agg);
  return cli::kExitOk;
}

int do_sweep(const FlagSet& flags) {
  const auto cfg = cli::parse_config(cli::Command::kSweep, config_path(flags), flags.values);
  const auto rows =
      experiments::sweep(cfg.scenario, cfg.axis, cfg.values, cfg.protocols, env_workers());
  const std::string csv = flags.out + "_aggregate.csv";
  cli::write_aggregate_csv(csv, rows);
  cli::emit_plot_script(rows, cfg.axis, csv, flags.out + ".gp");
  for (const auto& r : rows) {
    char label[128];
    std::snprintf(label, sizeof label, "%s n=%zu tau=%g p_start=%g",
                  protocol::to_string(r.protocol), r.n, r.tau, r.p_start);
    print_aggregate(label, r.aggregate);
  }
  return cli::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-event simulator for LoRa emergency-message dissemination"};
  app.require_subcommand(1);

  FlagSet run_flags;
  FlagSet sweep_flags;
  auto* run = app.add_subcommand("run", "Monte Carlo batch at one configuration");
  add_scenario_flags(run, run_flags, false);
  auto* sweep = app.add_subcommand("sweep", "batch per value along one axis");
  add_scenario_flags(sweep, sweep_flags, true);
  auto* selftest = app.add_subcommand("selftest", "check the contention and DTN formulas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitConfig;
  }

  try {
    if (*selftest) {
      const auto report = cli::selftest();
      cli::print_report(std::cout, report);
      return report.passed() ? cli::kExitOk : cli::kExitFailure;
    }
    if (*run) return do_run(run_flags);
    return do_sweep(sweep_flags);
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return cli::kExitConfig;
  } catch (const cli::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return cli::kExitIo;
  }
}
