#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "locate/experiments/runner.hpp"
#include "locate/experiments/scenario.hpp"

namespace locate::cli {

/// Bad or missing configuration value. Maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

/// Unreadable or unwritable file. Maps to exit status 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

enum class Command { kRun, kSweep };

struct ExperimentConfig {
  experiments::ScenarioConfig scenario;
  // Sweep-only settings.
  experiments::SweepAxis axis = experiments::SweepAxis::kTau;
  std::vector<double> values;
  std::vector<protocol::Variant> protocols;
};

using KeyValues = std::map<std::string, std::string, std::less<>>;

/**
 * Flat `key = value` grammar: one assignment per line, `#` starts a comment,
 * blank lines are ignored, surrounding whitespace is trimmed. A repeated key
 * is an error. Unknown keys are rejected when the config is built.
 */
KeyValues parse_key_values(std::string_view text);

KeyValues read_config_file(const std::filesystem::path& path);

/// Every key accepted in a config file or as a flag override.
const std::vector<std::string>& known_keys();

/**
 * Builds a config from file values with flag values layered on top.
 *
 * The `radio` key picks a profile first; range_m, airtime_s, pdr_model,
 * pdr_beta and interference then override its fields. `n` is required
 * except for a sweep over n. Throws ConfigError naming the key.
 */
ExperimentConfig build_config(Command command, const KeyValues& file, const KeyValues& flags);

/// Convenience: reads `path` when given, then build_config.
ExperimentConfig parse_config(Command command, const std::optional<std::filesystem::path>& path,
                              const KeyValues& flags);

}  // namespace locate::cli
