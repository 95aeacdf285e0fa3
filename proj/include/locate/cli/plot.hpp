#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "locate/experiments/runner.hpp"

namespace locate::cli {

/**
 * gnuplot script with three stanzas (ERT, ERR, EO versus the sweep axis),
 * one series per protocol present in `rows`, reading the aggregate CSV at
 * `csv_path`. Each stanza renders to <stem>_<metric>.png.
 */
std::string plot_script(std::span<const experiments::SweepRow> rows, experiments::SweepAxis axis,
                        const std::string& csv_path, const std::string& stem);

/// Writes plot_script to `out_path`; throws IoError on failure, rejects empty rows.
void emit_plot_script(std::span<const experiments::SweepRow> rows, experiments::SweepAxis axis,
                      const std::filesystem::path& csv_path,
                      const std::filesystem::path& out_path);

}  // namespace locate::cli
