// affine-image construct|image|verify|orbit <file> [options]

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "affimg/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace affimg::cli;
  CLI::App app{"Polynomial surjections onto affine space minus a subvariety"};
  app.require_subcommand(1, 1);

  std::string file;
  std::string variant;
  std::string jsonPath;
  bool genericChange = false;
  bool timings = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<unsigned> jobs;

  const char* names[] = {"construct", "image", "verify", "orbit"};
  const char* help[] = {"build F for the [target] of the file",
                        "constructible image of the [map]",
                        "certify that the [map] covers exactly the complement of [target]",
                        "compose the [actions] from the base point"};
  for (int i = 0; i < 4; ++i) {
    CLI::App* sub = app.add_subcommand(names[i], help[i]);
    sub->add_option("file", file, "problem file")->required();
    sub->add_option("--variant", variant, "theorem-main or pure-powers")
        ->check(CLI::IsMember({"theorem-main", "pure-powers"}));
    sub->add_flag("--generic-change", genericChange,
                  "shear the target into pure-power form first");
    sub->add_option("--seed", seed, "seed for every random choice (default 1)");
    sub->add_option("--samples", samples, "fiber samples on and off the target (default 20)");
    sub->add_option("--jobs", jobs, "worker threads (default 1)")->check(CLI::PositiveNumber);
    sub->add_option("--json", jsonPath, "write the JSON report here");
    sub->add_flag("--timings", timings, "print wall time to stderr");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  CommandOptions options;
  if (!variant.empty()) options.variant = affimg::parseVariant(variant);
  options.genericChange = genericChange;
  options.seed = seed;
  options.samples = samples;
  options.jobs = jobs;

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  const Report report = runCommand(command, file, options);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  (report.json.contains("error") ? std::cerr : std::cout) << report.summary;
  if (timings) std::cerr << "time: " << elapsed.count() << " s\n";
  if (!jsonPath.empty()) {
    std::ofstream out(jsonPath, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << jsonPath << "\n";
      return kExitInputError;
    }
    out << report.json.dump(2) << "\n";
  }
  return report.exitCode;
}
