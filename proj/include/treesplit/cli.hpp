#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace treesplit::cli {

// Exit code contract: 0 = split found / predicate true, 3 = certified
// not-splittable / predicate false, 2 = usage, parse, or I/O error,
// 1 = internal self-check failure.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNotSplittable = 3;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 1;

struct SplitOptions {
  std::string input;
  std::string epsilon;
  std::string start = "improved";  // improved | random | <vertex id>
  std::string method = "descent";  // descent | literal | oracle
  std::uint64_t seed = 0;
  bool trace = false;
  std::string format = "human";  // human | structured
};
int run_split(const SplitOptions& options, std::ostream& out, std::ostream& err);

struct CheckOptions {
  std::string input;
  std::string epsilon;
  std::uint32_t edge_u = 0;
  std::uint32_t edge_v = 0;
  std::string format = "human";
};
int run_check(const CheckOptions& options, std::ostream& out, std::ostream& err);

struct GenOptions {
  std::string kind;  // prufer | grid
  std::uint32_t n = 0;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::string weights = "const:1";  // const:<c> | uniform:<lo>:<hi>
  std::uint64_t seed = 0;
  std::string output;  // empty -> stream
};
int run_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

struct BenchOptions {
  std::string input;  // file source; exclusive with kind
  std::string kind;   // grid | prufer
  std::uint32_t n = 0;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::string weights = "uniform:1:100";
  std::string epsilon;        // fixed decimal tolerance, or
  std::string epsilon_ratio;  // "<num>/<den>" of each instance's total
  std::uint32_t trials = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> methods = {"descent", "literal", "baseline"};
  std::vector<std::string> starts = {"improved"};
  std::uint64_t max_attempts = 1000;
  std::string format = "human";
};
int run_bench(const BenchOptions& options, std::ostream& out, std::ostream& err);

}  // namespace treesplit::cli
