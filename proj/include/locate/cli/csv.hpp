#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "locate/experiments/runner.hpp"
#include "locate/experiments/scenario.hpp"

namespace locate::cli {

inline constexpr const char* kRunsHeader =
    "protocol,n,tau,run,seed,solved,ert_s,ereq_count,erep_count,end_time_s";
inline constexpr const char* kAggregateHeader =
    "protocol,n,tau,p_start,runs,err_pct,ert_mean_s,ert_ci95_s,eo_mean,eo_ci95";

/// Six significant digits, trailing zeros kept ("12.5000"); empty when absent.
std::string format_real(std::optional<double> v);

void write_runs_csv(std::ostream& out, const experiments::ScenarioConfig& config,
                    std::span<const experiments::RunResult> results);
void write_aggregate_csv(std::ostream& out, std::span<const experiments::SweepRow> rows);

/// File variants. Throw IoError when the path cannot be written; reject empty input.
void write_runs_csv(const std::filesystem::path& path, const experiments::ScenarioConfig& config,
                    std::span<const experiments::RunResult> results);
void write_aggregate_csv(const std::filesystem::path& path,
                         std::span<const experiments::SweepRow> rows);

}  // namespace locate::cli
