#include "odimcf/instance_io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <string_view>
#include <utility>

namespace odimcf {

namespace {

std::string fmt(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

// Line-oriented token reader; every failure carries the current line number.
class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  int line() const { return line_; }

  // True when nothing but whitespace remains, i.e. only a trailing newline or
  // blank lines are left.
  bool only_whitespace_left() const {
    for (size_t i = pos_; i < text_.size(); ++i) {
      const char c = text_[i];
      if (c != '\n' && c != '\r' && c != ' ' && c != '\t') return false;
    }
    return true;
  }

  // Next line split into whitespace-separated tokens; empty lines rejected.
  std::vector<std::string_view> next_line(const std::string& wanted) {
    if (at_end()) throw ParseError(line_, "unexpected end of file: expected " + wanted);
    ++line_;
    size_t eol = text_.find('\n', pos_);
    if (eol == std::string::npos) eol = text_.size();
    std::string_view raw(text_.data() + pos_, eol - pos_);
    pos_ = eol + 1;
    if (raw.ends_with('\r')) raw.remove_suffix(1);

    std::vector<std::string_view> tokens;
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      if (j > i) tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (tokens.empty()) throw ParseError(line_, "blank line: expected " + wanted);
    return tokens;
  }

  // Allows a trailing newline / trailing blank line at the end of the file.
  void expect_done() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') ++line_;
      if (c != '\n' && c != '\r' && c != ' ' && c != '\t')
        throw ParseError(line_ + 1, "trailing content after the final section");
      ++pos_;
    }
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 0;
};

std::int64_t to_int(std::string_view token, int line, const std::string& what) {
  std::int64_t value = 0;
  const auto [p, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc{} || p != token.end())
    throw ParseError(line, "bad " + what + " '" + std::string(token) + "'");
  return value;
}

double to_real(std::string_view token, int line, const std::string& what) {
  double value = 0.0;
  const auto [p, ec] = std::from_chars(token.begin(), token.end(), value);
  if (ec != std::errc{} || p != token.end())
    throw ParseError(line, "bad " + what + " '" + std::string(token) + "'");
  return value;
}

// `header <count>` line, e.g. "nodes 30".
std::int64_t header_count(Reader& reader, const std::string& keyword,
                          std::int64_t max_value) {
  const auto tokens = reader.next_line("'" + keyword + " <count>'");
  if (tokens.size() != 2 || tokens[0] != keyword)
    throw ParseError(reader.line(), "expected '" + keyword + " <count>'");
  const auto count = to_int(tokens[1], reader.line(), keyword + " count");
  if (count < 0 || count > max_value)
    throw ParseError(reader.line(), keyword + " count out of range");
  return count;
}

// One route line: space-separated arc ids, or "-" for an empty route.
Route parse_route_line(Reader& reader, ArcId num_arcs, const std::string& wanted) {
  const auto tokens = reader.next_line(wanted);
  Route route;
  if (tokens.size() == 1 && tokens[0] == "-") return route;
  route.reserve(tokens.size());
  for (const auto& token : tokens) {
    const auto id = to_int(token, reader.line(), "arc id");
    if (id < 0 || id >= num_arcs)
      throw ParseError(reader.line(), "arc id " + std::to_string(id) + " out of range");
    route.push_back(static_cast<ArcId>(id));
  }
  return route;
}

void append_route_line(std::string& out, const Route& route) {
  if (route.empty()) {
    out += "-\n";
    return;
  }
  for (size_t i = 0; i < route.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(route[i]);
  }
  out += '\n';
}

}  // namespace

std::string format_instance(const Instance& instance,
                            const std::vector<Route>* certificate) {
  const Network& net = instance.network;
  std::string out = "odimcf 1\n";
  out += "nodes " + std::to_string(net.num_nodes()) + "\n";
  out += "arcs " + std::to_string(net.num_arcs()) + "\n";
  for (const Arc& a : net.arcs()) {
    out += std::to_string(a.tail) + " " + std::to_string(a.head) + " " + fmt(a.cost) +
           " " + fmt(a.capacity) + "\n";
  }
  out += "commodities " + std::to_string(instance.num_commodities()) + "\n";
  for (const Commodity& c : instance.commodities) {
    out += std::to_string(c.origin) + " " + std::to_string(c.destination) + " " +
           fmt(c.demand) + "\n";
  }
  if (certificate) {
    out += "certificate\n";
    for (const Route& route : *certificate) append_route_line(out, route);
  }
  return out;
}

LoadedInstance parse_instance(const std::string& text) {
  Reader reader(text);

  auto magic = reader.next_line("'odimcf 1'");
  if (magic.size() != 2 || magic[0] != "odimcf" || magic[1] != "1")
    throw ParseError(reader.line(), "expected header 'odimcf 1'");

  const auto num_nodes = static_cast<NodeId>(
      header_count(reader, "nodes", std::numeric_limits<NodeId>::max()));
  const auto num_arcs = static_cast<ArcId>(
      header_count(reader, "arcs", std::numeric_limits<ArcId>::max()));

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(num_arcs));
  std::set<std::pair<NodeId, NodeId>> seen;
  for (ArcId i = 0; i < num_arcs; ++i) {
    const auto tokens = reader.next_line("arc line '<tail> <head> <cost> <capacity>'");
    if (tokens.size() != 4)
      throw ParseError(reader.line(), "expected '<tail> <head> <cost> <capacity>'");
    Arc arc;
    const auto tail = to_int(tokens[0], reader.line(), "tail");
    const auto head = to_int(tokens[1], reader.line(), "head");
    if (tail < 0 || tail >= num_nodes || head < 0 || head >= num_nodes)
      throw ParseError(reader.line(), "arc endpoint out of range");
    arc.tail = static_cast<NodeId>(tail);
    arc.head = static_cast<NodeId>(head);
    if (arc.tail == arc.head) throw ParseError(reader.line(), "self-loop arc");
    if (!seen.insert({arc.tail, arc.head}).second)
      throw ParseError(reader.line(), "duplicate arc " + std::string(tokens[0]) + "->" +
                                          std::string(tokens[1]));
    arc.cost = to_real(tokens[2], reader.line(), "cost");
    arc.capacity = to_real(tokens[3], reader.line(), "capacity");
    if (!(arc.cost >= 0.0)) throw ParseError(reader.line(), "cost must be >= 0");
    if (!(arc.capacity > 0.0)) throw ParseError(reader.line(), "capacity must be > 0");
    arcs.push_back(arc);
  }

  const auto num_commodities = static_cast<CommodityId>(
      header_count(reader, "commodities", std::numeric_limits<CommodityId>::max()));
  std::vector<Commodity> commodities;
  commodities.reserve(static_cast<size_t>(num_commodities));
  for (CommodityId k = 0; k < num_commodities; ++k) {
    const auto tokens =
        reader.next_line("commodity line '<origin> <destination> <demand>'");
    if (tokens.size() != 3)
      throw ParseError(reader.line(), "expected '<origin> <destination> <demand>'");
    Commodity c;
    const auto origin = to_int(tokens[0], reader.line(), "origin");
    const auto destination = to_int(tokens[1], reader.line(), "destination");
    if (origin < 0 || origin >= num_nodes || destination < 0 || destination >= num_nodes)
      throw ParseError(reader.line(), "commodity endpoint out of range");
    if (origin == destination)
      throw ParseError(reader.line(), "origin equals destination");
    c.origin = static_cast<NodeId>(origin);
    c.destination = static_cast<NodeId>(destination);
    c.demand = to_real(tokens[2], reader.line(), "demand");
    if (!(c.demand > 0.0)) throw ParseError(reader.line(), "demand must be > 0");
    commodities.push_back(c);
  }

  std::optional<std::vector<Route>> certificate;
  if (!reader.only_whitespace_left()) {
    const auto tokens = reader.next_line("'certificate' or end of file");
    if (tokens.size() != 1 || tokens[0] != "certificate")
      throw ParseError(reader.line(), "expected 'certificate' or end of file");
    std::vector<Route> routes;
    routes.reserve(static_cast<size_t>(num_commodities));
    for (CommodityId k = 0; k < num_commodities; ++k)
      routes.push_back(parse_route_line(reader, num_arcs, "certificate route line"));
    certificate = std::move(routes);
  }
  reader.expect_done();

  return {Instance(Network(num_nodes, std::move(arcs)), std::move(commodities)),
          std::move(certificate)};
}

std::string format_solution(const Solution& solution) {
  std::string out = "odimcf-solution 1\n";
  out += "commodities " + std::to_string(solution.routes.size()) + "\n";
  for (const Route& route : solution.routes) append_route_line(out, route);
  out += "cost " + fmt(solution.total_cost) + "\n";
  return out;
}

Solution parse_solution(const std::string& text) {
  Reader reader(text);

  auto magic = reader.next_line("'odimcf-solution 1'");
  if (magic.size() != 2 || magic[0] != "odimcf-solution" || magic[1] != "1")
    throw ParseError(reader.line(), "expected header 'odimcf-solution 1'");

  const auto num_commodities =
      header_count(reader, "commodities", std::numeric_limits<CommodityId>::max());
  Solution solution;
  solution.routes.reserve(static_cast<size_t>(num_commodities));
  for (std::int64_t k = 0; k < num_commodities; ++k) {
    solution.routes.push_back(parse_route_line(
        reader, std::numeric_limits<ArcId>::max(), "solution route line"));
  }
  const auto tokens = reader.next_line("'cost <value>'");
  if (tokens.size() != 2 || tokens[0] != "cost")
    throw ParseError(reader.line(), "expected 'cost <value>'");
  solution.total_cost = to_real(tokens[1], reader.line(), "cost");
  reader.expect_done();
  return solution;
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

void spill(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(0, "cannot write " + path.string());
  out << text;
  if (!out) throw ParseError(0, "write failed for " + path.string());
}

}  // namespace

void write_instance_file(const std::filesystem::path& path, const Instance& instance,
                         const std::vector<Route>* certificate) {
  spill(path, format_instance(instance, certificate));
}

LoadedInstance read_instance_file(const std::filesystem::path& path) {
  return parse_instance(slurp(path));
}

void write_solution_file(const std::filesystem::path& path, const Solution& solution) {
  spill(path, format_solution(solution));
}

Solution read_solution_file(const std::filesystem::path& path) {
  return parse_solution(slurp(path));
}

}  // namespace odimcf
