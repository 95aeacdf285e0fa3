#include "locate/cli/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "locate/cli/config.hpp"

namespace locate::cli {

std::string format_real(std::optional<double> v) {
  if (!v) return {};
  char buf[64];
  // %g honors the C locale's '.', which is never changed by this program.
  std::snprintf(buf, sizeof buf, "%#.6g", *v);
  return buf;
}

void write_runs_csv(std::ostream& out, const experiments::ScenarioConfig& config,
                    std::span<const experiments::RunResult> results) {
  out << kRunsHeader << '\n';
  for (const auto& r : results) {
    out << protocol::to_string(config.protocol) << ',' << config.n << ','
        << format_real(config.tau) << ',' << r.run_index << ',' << r.seed << ','
        << (r.solved ? 1 : 0) << ',' << format_real(r.ert_s) << ',' << r.ereq_count << ','
        << r.erep_count << ',' << format_real(r.end_time_s) << '\n';
  }
}

void write_aggregate_csv(std::ostream& out, std::span<const experiments::SweepRow> rows) {
  out << kAggregateHeader << '\n';
  for (const auto& row : rows) {
    const auto& a = row.aggregate;
    out << protocol::to_string(row.protocol) << ',' << row.n << ',' << format_real(row.tau)
        << ',' << format_real(row.p_start) << ',' << a.runs_total << ','
        << format_real(a.err_pct) << ',' << format_real(a.ert_mean_s) << ','
        << format_real(a.ert_ci95_s) << ',' << format_real(a.eo_mean) << ','
        << format_real(a.eo_ci95) << '\n';
  }
}

namespace {

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  // Binary mode keeps LF terminators on every platform.
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  writer(out);
  out.flush();
  if (!out) {
    throw IoError("write failed for " + path.string());
  }
}

}  // namespace

void write_runs_csv(const std::filesystem::path& path, const experiments::ScenarioConfig& config,
                    std::span<const experiments::RunResult> results) {
  if (results.empty()) throw std::invalid_argument("write_runs_csv: no results");
  write_file(path, [&](std::ostream& out) { write_runs_csv(out, config, results); });
}

void write_aggregate_csv(const std::filesystem::path& path,
                         std::span<const experiments::SweepRow> rows) {
  if (rows.empty()) throw std::invalid_argument("write_aggregate_csv: no rows");
  write_file(path, [&](std::ostream& out) { write_aggregate_csv(out, rows); });
}

}  // namespace locate::cli
