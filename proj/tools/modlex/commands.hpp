#pragma once

#include <string>
#include <vector>

#include "inputs.hpp"

namespace modlex::cli {

/// Union of every subcommand's flags; each command reads what it needs.
struct Options {
  GraphSource source;
  SearchBudget budget;
  std::string method = "auto";
  std::string partition;
  std::vector<std::string> components;
  std::string factor;
  std::string subset;
  std::string certificate_path;
  std::string output_path;
  std::string dataset_name;
  std::size_t max_factor_order = 4;
  bool certify = false;
  bool quotient = false;
  bool maximal_partition = false;
  bool conjecture_cartesian_dp = false;
  bool list = false;
  bool raw = false;
};

/// Body of the JSON reply (without timing) plus the exit code. When `text` is
/// set and raw output was requested it is printed instead of the JSON.
struct Outcome {
  Json body;
  int exit_code = 0;
  std::string text;
  std::vector<std::string> warnings;
};

Outcome run_check_dp(const Options& o);
Outcome run_check_sdp(const Options& o);
Outcome run_ndp(const Options& o);
Outcome run_modules(const Options& o);
Outcome run_quotient(const Options& o);
Outcome run_minquotient(const Options& o);
Outcome run_lexprod(const Options& o);
Outcome run_cartprod(const Options& o);
Outcome run_transfer_check(const Options& o);
Outcome run_verify(const Options& o);
Outcome run_export_dot(const Options& o);
Outcome run_dataset(const Options& o);

}  // namespace modlex::cli
