#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "odimcf/model.hpp"

namespace odimcf {

// Parse failure with the 1-based line it was detected on (0 when the location
// is not line-specific, e.g. the file cannot be read).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct LoadedInstance {
  Instance instance;
  // Routes proving the instance solvable, when the file carries them.
  std::optional<std::vector<Route>> certificate;
};

// Text form:
//   odimcf 1
//   nodes <N>
//   arcs <A>
//   <tail> <head> <cost> <capacity>          (A lines)
//   commodities <K>
//   <origin> <destination> <demand>          (K lines)
//   certificate                              (optional section)
//   <arc ids, space separated>               (K lines)
// Numbers are written in shortest round-trip form, so read(write(x)) == x.
std::string format_instance(const Instance& instance,
                            const std::vector<Route>* certificate = nullptr);
LoadedInstance parse_instance(const std::string& text);

void write_instance_file(const std::filesystem::path& path, const Instance& instance,
                         const std::vector<Route>* certificate = nullptr);
LoadedInstance read_instance_file(const std::filesystem::path& path);

struct Solution {
  std::vector<Route> routes;
  double total_cost = 0.0;
};

// Text form:
//   odimcf-solution 1
//   commodities <K>
//   <arc ids, space separated; "-" for an unrouted commodity>   (K lines)
//   cost <value>
std::string format_solution(const Solution& solution);
Solution parse_solution(const std::string& text);

void write_solution_file(const std::filesystem::path& path, const Solution& solution);
Solution read_solution_file(const std::filesystem::path& path);

}  // namespace odimcf
