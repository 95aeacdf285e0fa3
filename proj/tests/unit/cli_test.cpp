#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "locate/cli/config.hpp"
#include "locate/cli/csv.hpp"
#include "locate/cli/plot.hpp"
#include "locate/cli/selftest.hpp"

namespace locate::cli {
namespace {

namespace fs = std::filesystem;
using experiments::RunResult;
using experiments::SweepRow;
using protocol::Variant;

TEST(KeyValues, ParsesCommentsAndWhitespace) {
  const auto kv = parse_key_values("# header\n n = 40 \n\ntau=0.3 # trailing\n");
  ASSERT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv.at("n"), "40");
  EXPECT_EQ(kv.at("tau"), "0.3");
}

TEST(KeyValues, RejectsRepeatsAndGarbage) {
  EXPECT_THROW(parse_key_values("n = 4\nn = 5\n"), ConfigError);
  EXPECT_THROW(parse_key_values("just words\n"), ConfigError);
}

TEST(BuildConfig, MissingNIsNamed) {
  try {
    build_config(Command::kRun, {}, {});
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.key(), "n");
  }
}

TEST(BuildConfig, FlagsAloneAreEnough) {
  const auto c = build_config(Command::kRun, {},
                              {{"protocol", "flooding"}, {"n", "40"}, {"tau", "0.15"}});
  EXPECT_EQ(c.scenario.protocol, Variant::kFlooding);
  EXPECT_EQ(c.scenario.n, 40u);
  EXPECT_DOUBLE_EQ(c.scenario.tau, 0.15);
  EXPECT_DOUBLE_EQ(c.scenario.params.q_flood, 0.4);
  EXPECT_EQ(c.scenario.radio.range_m, 500.0);
}

TEST(BuildConfig, RadioProfileThenFieldOverrides) {
  auto c = build_config(Command::kRun, {{"radio", "wifi"}, {"n", "10"}}, {});
  EXPECT_EQ(c.scenario.radio.range_m, 100.0);
  c = build_config(Command::kRun, {{"radio", "wifi"}, {"range_m", "150"}, {"n", "10"}}, {});
  EXPECT_EQ(c.scenario.radio.range_m, 150.0);
}

TEST(BuildConfig, FlagsWinOverFile) {
  const auto c = build_config(Command::kRun, {{"n", "10"}, {"runs", "5"}}, {{"n", "20"}});
  EXPECT_EQ(c.scenario.n, 20u);
  EXPECT_EQ(c.scenario.runs, 5u);
}

TEST(BuildConfig, RejectsUnknownAndOutOfRange) {
  EXPECT_THROW(build_config(Command::kRun, {{"n", "10"}, {"colour", "red"}}, {}), ConfigError);
  EXPECT_THROW(build_config(Command::kRun, {{"n", "10"}, {"tau", "1.5"}}, {}), ConfigError);
  EXPECT_THROW(build_config(Command::kRun, {{"n", "-3"}}, {}), ConfigError);
  EXPECT_THROW(build_config(Command::kRun, {{"n", "ten"}}, {}), ConfigError);
  EXPECT_THROW(build_config(Command::kRun, {{"n", "10"}, {"protocol", "gossip"}}, {}),
               ConfigError);
}

TEST(BuildConfig, SweepOverNNeedsNoN) {
  const auto c = build_config(Command::kSweep, {},
                              {{"axis", "n"}, {"values", "5,10,20"},
                               {"protocols", "locate,flooding"}});
  EXPECT_EQ(c.axis, experiments::SweepAxis::kN);
  EXPECT_EQ(c.values, (std::vector<double>{5, 10, 20}));
  EXPECT_EQ(c.protocols, (std::vector<Variant>{Variant::kLocate, Variant::kFlooding}));
}

TEST(ConfigFile, MissingFileIsIoError) {
  EXPECT_THROW(read_config_file("/nonexistent/dir/locate.conf"), IoError);
}

RunResult solved_run() {
  RunResult r;
  r.run_index = 0;
  r.seed = 1;
  r.solved = true;
  r.ert_s = 12.5;
  r.ereq_count = 3;
  r.erep_count = 1;
  r.end_time_s = 12.5;
  return r;
}

TEST(Csv, RunsGolden) {
  experiments::ScenarioConfig c;
  c.n = 40;
  RunResult unsolved;
  unsolved.run_index = 1;
  unsolved.seed = 0;
  unsolved.ereq_count = 6912;
  unsolved.end_time_s = 86400.0;
  const std::vector<RunResult> rs{solved_run(), unsolved};
  std::ostringstream os;
  write_runs_csv(os, c, rs);
  EXPECT_EQ(os.str(),
            "protocol,n,tau,run,seed,solved,ert_s,ereq_count,erep_count,end_time_s\n"
            "locate,40,0.150000,0,1,1,12.5000,3,1,12.5000\n"
            "locate,40,0.150000,1,0,0,,6912,0,86400.0\n");
}

TEST(Csv, AggregateGolden) {
  SweepRow row{Variant::kProbabilistic, 5, 0.15, 0.4, {}};
  row.aggregate.err_pct = 0.5;
  row.aggregate.eo_mean = 10.0;
  row.aggregate.runs_total = 2;
  std::ostringstream os;
  write_aggregate_csv(os, std::span<const SweepRow>(&row, 1));
  EXPECT_EQ(os.str(),
            "protocol,n,tau,p_start,runs,err_pct,ert_mean_s,ert_ci95_s,eo_mean,eo_ci95\n"
            "probabilistic,5,0.150000,0.400000,2,0.500000,,,10.0000,\n");
}

TEST(Csv, FileWritesAreRepeatableAndChecked) {
  const fs::path dir = fs::temp_directory_path() / "locate_csv_test";
  fs::create_directories(dir);
  experiments::ScenarioConfig c;
  const std::vector<RunResult> rs{solved_run()};
  write_runs_csv(dir / "a.csv", c, rs);
  write_runs_csv(dir / "b.csv", c, rs);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_EQ(slurp(dir / "a.csv"), slurp(dir / "b.csv"));
  EXPECT_THROW(write_runs_csv(fs::path("/nonexistent/dir/x.csv"), c, rs), IoError);
  EXPECT_THROW(write_runs_csv(dir / "c.csv", c, std::span<const RunResult>{}),
               std::invalid_argument);
  fs::remove_all(dir);
}

TEST(Plot, ThreeStanzasOneSeriesPerProtocol) {
  const std::vector<SweepRow> rows{{Variant::kLocate, 40, 0.05, 0.4, {}},
                                   {Variant::kFlooding, 40, 0.05, 0.4, {}},
                                   {Variant::kLocate, 40, 0.10, 0.4, {}},
                                   {Variant::kFlooding, 40, 0.10, 0.4, {}}};
  const std::string two = plot_script(rows, experiments::SweepAxis::kTau, "x.csv", "x");
  auto count = [](const std::string& s, const std::string& what) {
    std::size_t n = 0;
    for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count(two, "set output"), 3u);
  EXPECT_EQ(count(two, "title 'locate'"), 3u);
  EXPECT_EQ(count(two, "title 'flooding'"), 3u);

  const std::vector<SweepRow> one{{Variant::kLocate, 40, 0.05, 0.4, {}}};
  const std::string single = plot_script(one, experiments::SweepAxis::kTau, "x.csv", "x");
  EXPECT_EQ(count(single, "with linespoints"), 3u);
  EXPECT_THROW(plot_script({}, experiments::SweepAxis::kTau, "x.csv", "x"),
               std::invalid_argument);
}

TEST(Selftest, AllChecksPass) {
  const auto report = selftest();
  EXPECT_TRUE(report.passed());
  ASSERT_FALSE(report.checks.empty());
  EXPECT_NE(report.checks.back().name.find("over 1000 d"), std::string::npos);
}

// End-to-end exit statuses of the command-line tool.
int run_tool(const std::string& args) {
  const std::string cmd = std::string(LOCATE_SIM_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Tool, ExitStatuses) {
  const fs::path dir = fs::temp_directory_path() / "locate_tool_test";
  fs::create_directories(dir);
  const std::string out = (dir / "t").string();
  EXPECT_EQ(run_tool("selftest"), kExitOk);
  EXPECT_EQ(run_tool("run --n 5 --runs 3 --out " + out), kExitOk);
  EXPECT_TRUE(fs::exists(out + "_runs.csv"));
  EXPECT_TRUE(fs::exists(out + "_aggregate.csv"));
  EXPECT_EQ(run_tool("run --runs 3 --out " + out), kExitConfig);
  EXPECT_EQ(run_tool("run --n 5 --tau 7 --out " + out), kExitConfig);
  EXPECT_EQ(run_tool("run --bogus"), kExitConfig);
  EXPECT_EQ(run_tool("run --n 5 --runs 2 --out /nonexistent/dir/t"), kExitIo);
  EXPECT_EQ(run_tool("run --config /nonexistent/dir/c.conf"), kExitIo);
  EXPECT_EQ(run_tool("sweep --n 5 --runs 2 --axis tau --values 0.1,0.2 --protocols locate --out " +
                     out),
            kExitOk);
  EXPECT_TRUE(fs::exists(out + ".gp"));
  fs::remove_all(dir);
}

}  // namespace
}  // namespace locate::cli
