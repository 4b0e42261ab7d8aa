#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "affimg/cli/problem_file.hpp"
#include "affimg/cli/report.hpp"

namespace affimg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitEngineError = 3;

/// Command-line overrides; unset fields fall back to the file's [options],
/// then to seed 1, 20 samples, 1 job.
struct CommandOptions {
  std::optional<Variant> variant;
  bool genericChange = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<unsigned> jobs;
};

Report runConstruct(const ProblemFile& file, const CommandOptions& options = {});
Report runImage(const ProblemFile& file, const CommandOptions& options = {});
Report runVerify(const ProblemFile& file, const CommandOptions& options = {});
Report runOrbit(const ProblemFile& file, const CommandOptions& options = {});

/// The map an orbit file describes, after restrictions. Throws DomainError
/// when an explicit action fails the identity or group law.
PolynomialMap orbitMap(const ProblemFile& file);

/// Loads `path`, runs `command` and converts errors to exit codes 2 (bad
/// input) and 3 (engine failure). An error report carries the message in
/// json["error"] and in `summary`.
Report runCommand(std::string_view command, const std::string& path,
                  const CommandOptions& options = {});

}  // namespace affimg::cli
