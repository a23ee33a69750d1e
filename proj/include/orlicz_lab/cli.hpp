#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "orlicz_lab/oracle.hpp"
#include "orlicz_lab/search_config.hpp"

namespace orlicz_lab::cli {

struct RunConfig {
  std::string command;
  std::string func;
  std::string registry;
  std::size_t dim = 1;
  std::string norm = "euclidean";
  std::uint64_t seed = 1;
  std::string grid;
  int trials = 20;
  std::string eps_grid;
  std::string in;
  std::string out;
  std::string format;
  std::string suite = "all";
  std::string point;
  bool timing = false;
  nlohmann::json search = nlohmann::json::object();
};

/// "start:stop:step", endpoints inclusive within half a step.
std::vector<double> parse_grid(const std::string& spec);
/// Comma-separated reals.
std::vector<double> parse_list(const std::string& spec);

/// Registry name, or profile text lifted with the configured norm and dimension.
ConvexFunctionOracle build_function(const RunConfig& rc);

/// Exit codes: 0 all asserted checks passed, 2 some check failed, 1 usage or IO error.
int run(int argc, const char* const* argv);

}  // namespace orlicz_lab::cli
