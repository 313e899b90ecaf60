#pragma once

// Named experiment pipelines with machine-readable reports.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chaoslab/rational.hpp"

namespace chaoslab::experiments {

// Bad experiment name, malformed or unknown config entries.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct ExperimentConfig {
  std::string experiment;
  std::map<std::string, std::string> params;
  // cap on map iterates across the run; nullopt means unlimited
  std::optional<std::uint64_t> budget;
};

// Flat "key = value" lines; '#' starts a comment. Throws ConfigError.
std::map<std::string, std::string> parse_config(const std::string& text);

const std::vector<std::string>& experiment_names();

struct Check {
  std::string name;
  Verdict status = Verdict::inconclusive;
  std::string value;  // headline witness
  std::map<std::string, std::string> witnesses;
};

struct Report {
  std::string experiment;
  std::map<std::string, std::string> config;
  std::vector<Check> checks;
};

// Throws ConfigError for an unknown experiment or config key.
Report run(const ExperimentConfig& config);

enum class Format { structured_text, table };
std::optional<Format> parse_format(const std::string& name);
std::string file_name(Format f);
// Deterministic: sorted keys, LF newlines, rationals as "num/den".
std::string emit(const Report& report, Format f);

// 0 all pass, 1 some fail, 3 no fail but some inconclusive
int exit_code(const Report& report);

}  // namespace chaoslab::experiments
