#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dgq::cli {

enum class Exit : int { ok = 0, check_failed = 1, invalid_input = 2, resource_limit = 3 };

struct JobSpec {
  std::string command;  // model-poly | model-mckay | ginzburg | cohomology | compare-h0 | cy-check | verify
  std::string format = "json";
  std::string out;      // empty: stdout
  std::string report;   // verification report destination; empty: stderr summary only
  unsigned threads = 1;
  bool strict = false;

  int n = 0;
  int m = 0;
  std::vector<int> weights;
  bool delete_zero = false;
  bool presentation = false;
  std::vector<std::string> verify;

  std::string quiver;
  std::string potential;
  std::optional<int> delete_vertex;
  std::optional<int> weight;
  bool jacobian = false;

  std::string model;
  std::string target;  // compare-h0 presentation
  std::string map;
  int hmin = -6;
  std::optional<int> adams_max;
};

/// Parses argv-style arguments (without the program name). Throws
/// InvalidInput on bad usage. Returns nullopt when help was printed.
std::optional<JobSpec> parse_args(const std::vector<std::string>& args, std::ostream& out);

int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// parse_args + run, mapping exceptions to exit codes.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dgq::cli
