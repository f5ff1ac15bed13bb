#include <charconv>
#include <set>
#include <sstream>

#include "modlex/errors.hpp"
#include "modlex/io.hpp"

namespace modlex {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::size_t parse_count(std::string_view field, std::size_t line, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, std::string("expected a nonnegative integer ") + what + ", got '" +
                               std::string(field) + "'");
  }
  return value;
}

}  // namespace

ParsedEdgeList parse_edge_list(std::string_view text) {
  std::optional<std::size_t> declared;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::string> warnings;
  std::size_t max_id_plus_one = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (fields[0] == "n") {
      if (fields.size() != 2) throw ParseError(line_no, "header must be 'n <count>'");
      if (declared) throw ParseError(line_no, "duplicate header");
      if (!edges.empty()) throw ParseError(line_no, "header must precede the edges");
      declared = parse_count(fields[1], line_no, "vertex count");
    } else {
      if (fields.size() != 2) {
        throw ParseError(line_no, "edge line must have exactly two vertex ids");
      }
      const auto u = parse_count(fields[0], line_no, "vertex id");
      const auto v = parse_count(fields[1], line_no, "vertex id");
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      if (declared && (u >= *declared || v >= *declared)) {
        throw ParseError(line_no, "vertex id out of range for n " + std::to_string(*declared));
      }
      if (u > kUnreachable - 1 || v > kUnreachable - 1) {
        throw ParseError(line_no, "vertex id too large");
      }
      const Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
      if (!seen.insert(e).second) {
        warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " +
                           std::to_string(e.first) + " " + std::to_string(e.second) +
                           " collapsed");
        continue;
      }
      edges.push_back(e);
      max_id_plus_one = std::max<std::size_t>(max_id_plus_one, std::max(u, v) + 1);
    }
    if (end == text.size()) break;
  }
  return ParsedEdgeList{Graph::from_edges(declared.value_or(max_id_plus_one), edges),
                        std::move(warnings)};
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::uint64_t edge_list_checksum(const Graph& g) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : emit_edge_list(g)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace modlex
