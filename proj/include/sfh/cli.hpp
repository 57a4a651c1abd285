#pragma once

// Command-line front end. Exit codes: 0 ok, 1 invalid or unbalanced input,
// 2 not admissible, 3 not nice, 10 I/O error, 11 usage error.

#include <optional>
#include <string>
#include <vector>

#include "sfh/diagram.hpp"

namespace sfh {

enum ExitCode : int {
  exit_ok = 0,
  exit_invalid = 1,
  exit_inadmissible = 2,
  exit_not_nice = 3,
  exit_io = 10,
  exit_usage = 11,
};

struct RunReport {
  std::string command;
  std::string digest;  // SHA-256 of the canonical serialization, when a diagram was read
  std::string out;
  std::string err;
  int exit_status = exit_ok;
};

enum class OutputFormat { table, tsv };

struct ComputeOptions {
  bool spinc = false;
  bool gradings = false;
  OutputFormat format = OutputFormat::table;
};

std::string sha256_hex(const std::string& bytes);

RunReport cmd_validate(const std::string& path);
RunReport cmd_compute(const std::string& path, const ComputeOptions& options);
RunReport compute_report(const Diagram& diagram, const ComputeOptions& options);

struct ExampleRequest {
  bool list = false;
  std::string name;
  std::vector<int> params;
  bool compute = false;  // otherwise emit
  std::string output = "-";
  ComputeOptions options;
};

RunReport cmd_example(const ExampleRequest& request);

/// Parses argv, runs the command and writes its output; returns the exit code.
int cli_main(int argc, char** argv);

}  // namespace sfh
