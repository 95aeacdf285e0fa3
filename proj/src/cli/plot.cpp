#include "locate/cli/plot.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "locate/cli/config.hpp"

namespace locate::cli {

namespace {

struct Metric {
  const char* tag;
  const char* label;
  int column;  // 1-based column in the aggregate CSV
};

constexpr Metric kMetrics[] = {
    {"ert", "ERT [s]", 7},
    {"err", "ERR (fraction solved within E_thr)", 6},
    {"eo", "EO [E-REQ transmissions]", 9},
};

int axis_column(experiments::SweepAxis axis) {
  switch (axis) {
    case experiments::SweepAxis::kTau:
      return 3;
    case experiments::SweepAxis::kN:
      return 2;
    case experiments::SweepAxis::kPStart:
      return 4;
  }
  return 3;
}

}  // namespace

std::string plot_script(std::span<const experiments::SweepRow> rows, experiments::SweepAxis axis,
                        const std::string& csv_path, const std::string& stem) {
  if (rows.empty()) throw std::invalid_argument("plot_script: no rows");
  std::vector<std::string> protocols;
  for (const auto& row : rows) {
    const std::string name = protocol::to_string(row.protocol);
    bool seen = false;
    for (const auto& p : protocols) seen = seen || p == name;
    if (!seen) protocols.push_back(name);
  }

  const int x = axis_column(axis);
  std::ostringstream os;
  os << "# gnuplot script\n"
     << "set datafile separator ','\n"
     << "set terminal pngcairo size 800,600\n"
     << "set grid\n"
     << "set key top right\n"
     << "set xlabel '" << experiments::to_string(axis) << "'\n";
  for (const auto& m : kMetrics) {
    os << "\n# " << m.tag << "\n"
       << "set output '" << stem << '_' << m.tag << ".png'\n"
       << "set ylabel '" << m.label << "'\n"
       << "plot ";
    for (std::size_t i = 0; i < protocols.size(); ++i) {
      if (i > 0) os << ", \\\n     ";
      os << "'" << csv_path << "' using (strcol(1) eq '" << protocols[i] << "' ? $" << x
         << " : NaN):" << m.column << " with linespoints title '" << protocols[i] << "'";
    }
    os << '\n';
  }
  return os.str();
}

void emit_plot_script(std::span<const experiments::SweepRow> rows, experiments::SweepAxis axis,
                      const std::filesystem::path& csv_path,
                      const std::filesystem::path& out_path) {
  auto stem = out_path;
  stem.replace_extension();
  const std::string script = plot_script(rows, axis, csv_path.string(), stem.string());
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + out_path.string());
  out << script;
  out.flush();
  if (!out) throw IoError("write failed for " + out_path.string());
}

}  // namespace locate::cli
