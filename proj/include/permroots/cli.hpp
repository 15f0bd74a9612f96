#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace permroots::cli {

enum class ExitCode : int {
  ok = 0,  // including a "no roots" verdict
  usage = 2,
  input_format = 3,
  size_cap = 4,
  internal = 5,
};

enum class Subcommand { exists, count, roots, table, prob, verify, selftest };
enum class Format { text, json, csv };

struct NRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

/// "a..b" or a single "n". Throws FormatError.
NRange parse_range(const std::string& text);

struct Request {
  Subcommand subcommand = Subcommand::count;
  std::uint64_t m = 0;
  std::optional<std::string> permutation;
  std::optional<std::string> cycle_type;
  NRange range;
  std::size_t oracle_cap = 8;
  std::uint64_t limit = 10000;
  bool unlimited = false;
  std::uint64_t max_order = 40;
  std::uint64_t structure_order = 24;
  std::uint64_t q = 2;
  std::uint64_t r = 1;
  std::uint64_t max_j = 5;
  std::uint64_t selftest_n = 6;
  Format format = Format::text;
  int verbosity = 0;
};

/// Executes a parsed request. Library exceptions are mapped to exit codes and reported on `err`.
int run(const Request& request, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permroots::cli
