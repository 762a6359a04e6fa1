// Command-line front end: describe, dataset, classify, pipeline.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bmfd/commands.hpp"
#include "bmfd/config.hpp"
#include "bmfd/error.hpp"

namespace {

constexpr int kExitFailure = 2;

int fail(std::string_view code, const std::string& message) {
  std::cerr << "error " << code << ": " << message << std::endl;
  return kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiscale Bouligand-Minkowski fractal descriptors for texture classification"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  std::string out_dir = ".";
  std::optional<std::string> mode;
  std::vector<std::string> overrides;
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--seed", seed, "random seed for the hold-out split");
  app.add_option("--jobs", jobs, "worker threads for descriptor extraction")->check(CLI::PositiveNumber);
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--mode", mode, "descriptor mode: multiscale or raw-minkowski");
  app.add_option("--set", overrides, "override a config key (key=value), repeatable");

  std::string input;
  auto* describe = app.add_subcommand("describe", "descriptors for one image");
  describe->add_option("image", input, "PGM image")->required();
  auto* dataset = app.add_subcommand("dataset", "feature CSV for a dataset tree");
  dataset->add_option("root", input, "dataset root directory")->required();
  auto* classify = app.add_subcommand("classify", "LDA hold-out report for a feature CSV");
  classify->add_option("features", input, "feature CSV")->required();
  auto* pipeline = app.add_subcommand("pipeline", "dataset + classify in one run");
  pipeline->add_option("root", input, "dataset root directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    bmfd::PipelineConfig config;
    if (!config_path.empty()) bmfd::apply_config_file(config, config_path);
    for (const auto& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw bmfd::Error(bmfd::ErrorCode::InvalidConfig, "--set expects key=value, got '" + kv + "'");
      }
      config.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (mode) config.set("descriptor_mode", *mode);
    if (seed) config.seed = *seed;
    config.validate();

    if (describe->parsed()) {
      bmfd::cmd_describe(input, config, out_dir, std::cout);
    } else if (dataset->parsed()) {
      bmfd::cmd_dataset(input, config, jobs, out_dir, std::cout, std::cerr);
    } else if (classify->parsed()) {
      bmfd::cmd_classify(input, config, out_dir, std::cout);
    } else {
      bmfd::cmd_pipeline(input, config, jobs, out_dir, std::cout, std::cerr);
    }
  } catch (const bmfd::Error& e) {
    return fail(bmfd::code_name(e.code()), e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail("IoError", e.what());
  } catch (const std::exception& e) {
    return fail("InternalError", e.what());
  }
  return 0;
}
