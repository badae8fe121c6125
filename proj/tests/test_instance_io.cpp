#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include "odimcf/generator.hpp"
#include "odimcf/instance_io.hpp"
#include "test_util.hpp"

using namespace odimcf;

namespace {

Instance awkward_numbers() {
  // values chosen to stress the shortest round-trip formatting: thirds,
  // tenths, huge and tiny magnitudes
  Network net(3, {{0, 1, 1.0 / 3.0, 0.1}, {1, 2, 1234.5678e9, 3e-12}, {2, 0, 0.0, 7.25}});
  return Instance(std::move(net), {{0, 2, 0.30000000000000004}, {2, 1, 1e17}});
}

std::string sample_text() {
  return "odimcf 1\n"
         "nodes 3\n"
         "arcs 2\n"
         "0 1 10 5\n"
         "1 2 20 5\n"
         "commodities 1\n"
         "0 2 2.5\n";
}

int error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("instance text round-trips exactly") {
  SUBCASE("hand-built values, including non-representable decimals") {
    const Instance inst = awkward_numbers();
    const LoadedInstance loaded = parse_instance(format_instance(inst));
    CHECK(loaded.instance == inst);
    CHECK_FALSE(loaded.certificate.has_value());
  }
  SUBCASE("generated instance with certificate") {
    GenSpec spec;
    spec.num_nodes = 10;
    spec.num_arcs = 30;
    spec.num_commodities = 15;
    spec.seed = 8;
    const GenResult result = generate(spec);
    const std::string text = format_instance(result.instance, &result.certificate);
    const LoadedInstance loaded = parse_instance(text);
    CHECK(loaded.instance == result.instance);
    REQUIRE(loaded.certificate.has_value());
    CHECK(*loaded.certificate == result.certificate);
    // formatting the parse output reproduces the bytes
    CHECK(format_instance(loaded.instance, &*loaded.certificate) == text);
  }
}

TEST_CASE("instance files round-trip through disk") {
  const auto path = std::filesystem::temp_directory_path() / "odimcf_io_test.odimcf";
  const Instance inst = awkward_numbers();
  write_instance_file(path, inst);
  const LoadedInstance loaded = read_instance_file(path);
  CHECK(loaded.instance == inst);
  std::filesystem::remove(path);

  CHECK_THROWS_AS(read_instance_file(path), ParseError);
}

TEST_CASE("well-formed text parses to the expected pieces") {
  const LoadedInstance loaded = parse_instance(sample_text());
  CHECK(loaded.instance.network.num_nodes() == 3);
  CHECK(loaded.instance.network.num_arcs() == 2);
  CHECK(loaded.instance.network.arc(1).cost == 20.0);
  CHECK(loaded.instance.commodities[0].demand == 2.5);

  SUBCASE("carriage returns and trailing blank lines are tolerated") {
    std::string crlf = sample_text();
    std::string converted;
    for (const char c : crlf) {
      if (c == '\n') converted += "\r\n";
      else converted += c;
    }
    converted += "\r\n";
    const LoadedInstance again = parse_instance(converted);
    CHECK(again.instance == loaded.instance);
  }
}

TEST_CASE("parse failures carry the offending line number") {
  CHECK(error_line("") == 0);
  CHECK(error_line("odimcf 2\n") == 1);
  CHECK(error_line("hello\n") == 1);
  CHECK(error_line("odimcf 1\nnodes x\n") == 2);
  CHECK(error_line("odimcf 1\nnodes 3\narcs -1\n") == 3);

  // truncated mid-section: the arc table promises two rows
  CHECK(error_line("odimcf 1\nnodes 3\narcs 2\n0 1 10 5\n") == 4);

  // blank line inside a section
  CHECK(error_line("odimcf 1\nnodes 3\narcs 2\n0 1 10 5\n\n1 2 20 5\n") == 5);

  // arc field problems, each on line 4
  CHECK(error_line("odimcf 1\nnodes 3\narcs 1\n0 1 10\n") == 4);
  CHECK(error_line("odimcf 1\nnodes 3\narcs 1\n0 9 10 5\n") == 4);
  CHECK(error_line("odimcf 1\nnodes 3\narcs 1\n1 1 10 5\n") == 4);
  CHECK(error_line("odimcf 1\nnodes 3\narcs 1\n0 1 -10 5\n") == 4);
  CHECK(error_line("odimcf 1\nnodes 3\narcs 1\n0 1 10 0\n") == 4);

  // the second copy of a (tail, head) pair is the duplicate
  CHECK(error_line("odimcf 1\nnodes 3\narcs 2\n0 1 10 5\n0 1 20 5\n") == 5);

  // commodity problems
  CHECK(error_line(sample_text() + "extra\n") == 8);
  CHECK(error_line("odimcf 1\nnodes 3\narcs 1\n0 1 10 5\ncommodities 1\n0 0 2\n") == 6);
  CHECK(error_line("odimcf 1\nnodes 3\narcs 1\n0 1 10 5\ncommodities 1\n0 1 0\n") == 6);
  // early end of file reports the last line that was read
  CHECK(error_line("odimcf 1\nnodes 3\narcs 1\n0 1 10 5\ncommodities 1\n") == 5);

  // certificate section must cover every commodity with in-range arc ids
  CHECK(error_line(sample_text() + "certificate\n") == 8);
  CHECK(error_line(sample_text() + "certificate\n0 7\n") == 9);
  CHECK(error_line(sample_text() + "garbage\n") == 8);
}

TEST_CASE("parse errors mention what was expected") {
  try {
    parse_instance("odimcf 1\nnodes 3\narcs 2\n0 1 10 5\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    const std::string what = e.what();
    CHECK(what.find("line 4") != std::string::npos);
    CHECK(what.find("arc") != std::string::npos);
  }
  try {
    parse_instance("odimcf 1\nnodes 3\narcs 2\n0 1 10 5\n0 1 20 5\ncommodities 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
}

TEST_CASE("solution text round-trips exactly") {
  Solution sol;
  sol.routes = {{0, 1, 2}, {}, {5}};
  sol.total_cost = 12345.6789e-3;

  const std::string text = format_solution(sol);
  const Solution back = parse_solution(text);
  CHECK(back.routes == sol.routes);
  CHECK(back.total_cost == sol.total_cost);
  CHECK(format_solution(back) == text);

  // the empty route renders as a dash on its own line
  CHECK(text.find("\n-\n") != std::string::npos);
}

TEST_CASE("solution files round-trip through disk") {
  const auto path = std::filesystem::temp_directory_path() / "odimcf_io_test.sol";
  Solution sol;
  sol.routes = {{3, 1}, {}};
  sol.total_cost = 0.1 + 0.2;  // deliberately not 0.3
  write_solution_file(path, sol);
  const Solution back = read_solution_file(path);
  CHECK(back.total_cost == sol.total_cost);
  CHECK(back.routes == sol.routes);
  std::filesystem::remove(path);
}

TEST_CASE("malformed solutions are rejected with line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_solution(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("") == 0);
  CHECK(line_of("odimcf 1\n") == 1);
  CHECK(line_of("odimcf-solution 1\ncommodities 1\n") == 2);
  CHECK(line_of("odimcf-solution 1\ncommodities 1\n0 1\n") == 3);
  CHECK(line_of("odimcf-solution 1\ncommodities 1\n0 1\ncost x\n") == 4);
  CHECK(line_of("odimcf-solution 1\ncommodities 1\n0 1\ncost 5\nmore\n") == 5);
  CHECK(line_of("odimcf-solution 1\ncommodities 1\n-1\ncost 5\n") == 3);
}
