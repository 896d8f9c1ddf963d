#pragma once

// The pendant-lab command line. Exit status: 0 on success or a passing
// test, 1 on a failed test or check, 2 on a usage or input error.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pendant_lab/random.hpp"

namespace pendant_lab::cli {

enum class Format { Json, Csv, Table };

struct RunConfig {
  std::string subcommand;
  std::string class_spec;
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  // 0 selects the available hardware parallelism.
  int threads = 0;
  int cutoff = 0;
  Format format = Format::Table;
  // Empty writes to the output stream.
  std::string out_path;
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pendant_lab::cli
