#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "psrecon_cli/io.hpp"

namespace psrecon::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kOverBudget = 2,
  kNotUnique = 3,
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

struct Options {
  std::optional<Format> format;  // per-command default when unset
  Expectations expect;
  bool count_only = false;
  unsigned jobs = 1;
};

int cmd_compose(const std::string& path, const Options& opt, Streams io);
int cmd_reconstruct(const std::string& path, const Options& opt, Streams io);
int cmd_enumerate(const std::string& path, const Options& opt, Streams io);
int cmd_check_unique(const std::string& path, const Options& opt, Streams io);
int cmd_oracle(const std::string& path, const Options& opt, Streams io);

struct SelftestReport {
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double seconds = 0.0;
};

SelftestReport selftest(int n_max, int h_max, unsigned jobs = 1);
int cmd_selftest(int n_max, int h_max, const Options& opt, Streams io);

struct BenchOptions {
  std::uint64_t seed = 1;
  int repeats = 15;
};

int cmd_bench(const BenchOptions& bench, const Options& opt, Streams io);

}  // namespace psrecon::cli
