#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chaoslab/experiments.hpp"

namespace fs = std::filesystem;
namespace ex = chaoslab::experiments;

namespace {

constexpr int kUsage = 2;

std::optional<std::uint64_t> budget_from_env() {
  const char* raw = std::getenv("CHAOSLAB_BUDGET");
  if (!raw || !*raw) return std::nullopt;
  std::string s(raw);
  if (s.find_first_not_of("0123456789") != std::string::npos) {
    throw ex::ConfigError("CHAOSLAB_BUDGET must be a non-negative integer, got '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ex::ConfigError("CHAOSLAB_BUDGET out of range");
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw ex::ConfigError("cannot read config " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chaoslab: exact experiments on spacing shifts and dendrite maps"};
  app.require_subcommand(1);

  std::string experiment, config_path, out_dir, format = "structured-text";
  auto* run = app.add_subcommand("run", "run one experiment (or all) and write a report");
  std::string names;
  for (const auto& n : ex::experiment_names()) names += (names.empty() ? "" : ", ") + n;
  run->add_option("--experiment", experiment, "one of: " + names)->required();
  run->add_option("--config", config_path, "flat key=value file")->required();
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_option("--format", format, "structured-text or comma-separated-table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    auto fmt = ex::parse_format(format);
    if (!fmt) throw ex::ConfigError("unknown format '" + format + "'");
    ex::ExperimentConfig cfg;
    cfg.experiment = experiment;
    cfg.params = ex::parse_config(slurp(config_path));
    if (cfg.params.empty()) throw ex::ConfigError("config " + config_path + " has no entries");
    cfg.budget = budget_from_env();

    auto report = ex::run(cfg);
    fs::create_directories(out_dir);
    const fs::path target = fs::path(out_dir) / ex::file_name(*fmt);
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    if (!out) throw ex::ConfigError("cannot write " + target.string());
    out << ex::emit(report, *fmt);
    out.close();
    const int code = ex::exit_code(report);
    std::cerr << experiment << ": " << report.checks.size() << " checks, exit " << code << " -> " << target.string()
              << "\n";
    return code;
  } catch (const ex::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const chaoslab::InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "filesystem error: " << e.what() << "\n";
    return kUsage;
  }
}
