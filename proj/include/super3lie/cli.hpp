#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "super3lie/io.hpp"

namespace super3lie {

struct RunOptions {
  std::optional<std::size_t> dim_cap;
  std::optional<int> level_cap;
};

/// exit_code: 0 success, 1 mathematical negative, 2 input error.
struct CommandResult {
  int exit_code = 0;
  Json report;
  std::vector<std::string> summary;
};

const std::vector<std::string>& command_names();

/// Runs one command on a parsed job. Relative file references inside the job
/// are resolved against base_dir. Never throws for input or mathematical
/// failures; they end up in the report.
CommandResult run_command(const std::string& command, const Json& job, const std::filesystem::path& base_dir,
                          const RunOptions& options = {});
/// Reads the job file, then runs the command (or the job's own "command" when
/// `command` is empty).
CommandResult run_job_file(const std::string& command, const std::filesystem::path& job_path,
                           const RunOptions& options = {});

/// Canonical text of a report: sorted keys, two-space indent, trailing newline.
std::string render_report(const Json& report);

}  // namespace super3lie
