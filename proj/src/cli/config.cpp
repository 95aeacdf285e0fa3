#include "locate/cli/config.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace locate::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double to_real(const std::string& key, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (text.empty() || end != begin + text.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ConfigError(key, "expected a number, got '" + text + "'");
  }
  return v;
}

std::uint64_t to_uint(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigError(key, "expected a non-negative integer, got '" + text + "'");
  }
  return v;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = trim(text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start));
    if (!piece.empty()) out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void require_range(const std::string& key, double v, double lo, double hi, bool lo_open) {
  const bool ok = (lo_open ? v > lo : v >= lo) && v <= hi;
  if (!ok) {
    std::ostringstream os;
    os << "value " << v << " outside " << (lo_open ? "(" : "[") << lo << ", " << hi << "]";
    throw ConfigError(key, os.str());
  }
}

void require_positive(const std::string& key, double v) {
  if (!(v > 0.0)) throw ConfigError(key, "must be > 0");
}

}  // namespace

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "side_m",   "n",         "tau",          "protocol", "radio",   "range_m",
      "airtime_s", "pdr_model", "pdr_beta",    "interference", "cw_min", "cw_max",
      "gamma",    "r",         "dtn_dist",     "p_start",  "q_flood", "ttl_init",
      "e_thr",    "runs",      "seed",         "horizon_s", "axis",   "values",
      "protocols"};
  return keys;
}

KeyValues parse_key_values(std::string_view text) {
  KeyValues out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no), "missing key");
    }
    if (!out.emplace(key, value).second) {
      throw ConfigError(key, "repeated key");
    }
  }
  return out;
}

KeyValues read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read config file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_key_values(buf.str());
}

ExperimentConfig build_config(Command command, const KeyValues& file, const KeyValues& flags) {
  KeyValues kv = file;
  for (const auto& [k, v] : flags) kv[k] = v;

  const auto& keys = known_keys();
  for (const auto& [k, v] : kv) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      throw ConfigError(k, "unknown key");
    }
  }
  auto get = [&](const char* key) -> const std::string* {
    auto it = kv.find(key);
    return it == kv.end() ? nullptr : &it->second;
  };

  ExperimentConfig cfg;
  auto& sc = cfg.scenario;
  auto& pp = sc.params;

  if (command == Command::kSweep) {
    if (const auto* v = get("axis")) {
      if (*v == "tau") {
        cfg.axis = experiments::SweepAxis::kTau;
      } else if (*v == "n") {
        cfg.axis = experiments::SweepAxis::kN;
      } else if (*v == "p_start") {
        cfg.axis = experiments::SweepAxis::kPStart;
      } else {
        throw ConfigError("axis", "expected tau, n or p_start, got '" + *v + "'");
      }
    }
    const auto* values = get("values");
    if (!values) throw ConfigError("values", "required for sweep");
    for (const auto& item : split_list(*values)) cfg.values.push_back(to_real("values", item));
    if (cfg.values.empty()) throw ConfigError("values", "empty list");
  }

  if (const auto* v = get("radio")) {
    if (*v == "lora") {
      sc.radio = radio::RadioProfile::lora();
    } else if (*v == "wifi") {
      sc.radio = radio::RadioProfile::wifi();
    } else {
      throw ConfigError("radio", "expected lora or wifi, got '" + *v + "'");
    }
  }
  if (const auto* v = get("range_m")) {
    sc.radio.range_m = to_real("range_m", *v);
    require_positive("range_m", sc.radio.range_m);
  }
  if (const auto* v = get("airtime_s")) {
    sc.radio.airtime_s = to_real("airtime_s", *v);
    if (sc.radio.airtime_s < 0.0) throw ConfigError("airtime_s", "must be >= 0");
  }
  if (const auto* v = get("pdr_model")) {
    if (*v == "unit_disk") {
      sc.radio.pdr_model = radio::PdrModel::kUnitDisk;
    } else if (*v == "smooth") {
      sc.radio.pdr_model = radio::PdrModel::kSmooth;
    } else {
      throw ConfigError("pdr_model", "expected unit_disk or smooth, got '" + *v + "'");
    }
  }
  if (const auto* v = get("pdr_beta")) {
    sc.radio.beta = to_real("pdr_beta", *v);
    require_positive("pdr_beta", sc.radio.beta);
  }
  if (const auto* v = get("interference")) {
    if (*v == "none") {
      sc.radio.interference = radio::Interference::kNone;
    } else if (*v == "collision") {
      sc.radio.interference = radio::Interference::kCollision;
    } else {
      throw ConfigError("interference", "expected none or collision, got '" + *v + "'");
    }
  }

  if (const auto* v = get("protocol")) {
    const auto p = protocol::parse_variant(*v);
    if (!p) throw ConfigError("protocol", "unknown protocol '" + *v + "'");
    sc.protocol = *p;
  }
  if (command == Command::kSweep) {
    if (const auto* v = get("protocols")) {
      for (const auto& item : split_list(*v)) {
        const auto p = protocol::parse_variant(item);
        if (!p) throw ConfigError("protocols", "unknown protocol '" + item + "'");
        cfg.protocols.push_back(*p);
      }
    }
    if (cfg.protocols.empty()) cfg.protocols.push_back(sc.protocol);
  }

  if (const auto* v = get("side_m")) {
    sc.side_m = to_real("side_m", *v);
    require_positive("side_m", sc.side_m);
  }
  const bool n_from_axis =
      command == Command::kSweep && cfg.axis == experiments::SweepAxis::kN;
  if (const auto* v = get("n")) {
    sc.n = to_uint("n", *v);
  } else if (!n_from_axis) {
    throw ConfigError("n", "required");
  }
  if (const auto* v = get("tau")) {
    sc.tau = to_real("tau", *v);
    require_range("tau", sc.tau, 0.0, 1.0, false);
  }
  if (const auto* v = get("cw_min")) pp.cw_min = to_real("cw_min", *v);
  if (const auto* v = get("cw_max")) pp.cw_max = to_real("cw_max", *v);
  if (pp.cw_min < 0.0) throw ConfigError("cw_min", "must be >= 0");
  if (!(pp.cw_max > pp.cw_min)) throw ConfigError("cw_max", "must exceed cw_min");
  if (const auto* v = get("gamma")) {
    pp.gamma = to_real("gamma", *v);
    require_positive("gamma", pp.gamma);
  }
  if (const auto* v = get("r")) {
    pp.r = to_real("r", *v);
    require_positive("r", pp.r);
  }
  if (const auto* v = get("dtn_dist")) {
    pp.dtn_dist = to_real("dtn_dist", *v);
    if (pp.dtn_dist < 0.0) throw ConfigError("dtn_dist", "must be >= 0");
  }
  if (const auto* v = get("p_start")) {
    pp.p_start = to_real("p_start", *v);
    require_range("p_start", pp.p_start, 0.0, 1.0, true);
  }
  if (const auto* v = get("q_flood")) {
    pp.q_flood = to_real("q_flood", *v);
    require_range("q_flood", pp.q_flood, 0.0, 1.0, true);
  }
  if (const auto* v = get("ttl_init")) {
    const auto ttl = to_uint("ttl_init", *v);
    if (ttl > 1'000'000) throw ConfigError("ttl_init", "unreasonably large");
    pp.ttl_init = static_cast<int>(ttl);
  }
  if (const auto* v = get("e_thr")) {
    pp.e_thr = to_real("e_thr", *v);
    require_positive("e_thr", pp.e_thr);
  }
  if (const auto* v = get("runs")) {
    sc.runs = to_uint("runs", *v);
    if (sc.runs < 1) throw ConfigError("runs", "must be >= 1");
  }
  if (const auto* v = get("seed")) sc.base_seed = to_uint("seed", *v);
  if (const auto* v = get("horizon_s")) {
    sc.horizon_s = to_real("horizon_s", *v);
    require_positive("horizon_s", sc.horizon_s);
  }

  if (command == Command::kSweep) {
    for (double v : cfg.values) {
      switch (cfg.axis) {
        case experiments::SweepAxis::kTau:
          require_range("values", v, 0.0, 1.0, false);
          break;
        case experiments::SweepAxis::kN:
          if (v < 0.0 || v != std::floor(v)) {
            throw ConfigError("values", "n values must be non-negative integers");
          }
          break;
        case experiments::SweepAxis::kPStart:
          require_range("values", v, 0.0, 1.0, true);
          break;
      }
    }
  }
  return cfg;
}

ExperimentConfig parse_config(Command command, const std::optional<std::filesystem::path>& path,
                              const KeyValues& flags) {
  const KeyValues file = path ? read_config_file(*path) : KeyValues{};
  return build_config(command, file, flags);
}

}  // namespace locate::cli
