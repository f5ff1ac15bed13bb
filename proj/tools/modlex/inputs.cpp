#include "inputs.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>

#include "modlex/datasets.hpp"
#include "modlex/errors.hpp"
#include "modlex/io.hpp"

namespace modlex::cli {
namespace {

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Vertex parse_id(const std::string& token, std::size_t universe) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) {
    throw ParseError(0, "bad vertex id '" + token + "'");
  }
  if (value >= universe) {
    throw PreconditionError("vertex " + token + " is outside the graph (order " +
                            std::to_string(universe) + ")");
  }
  return static_cast<Vertex>(value);
}

}  // namespace

LoadedGraph load_graph(const GraphSource& source) {
  if (!source.dataset.empty() && !source.input.empty()) {
    throw ParseError(0, "--dataset and --input are mutually exclusive");
  }
  if (!source.dataset.empty()) return {load_dataset(source.dataset).graph, {}};
  if (source.input.empty()) throw ParseError(0, "one of --dataset or --input is required");
  auto parsed = parse_edge_list(read_text(source.input));
  return {std::move(parsed.graph), std::move(parsed.warnings)};
}

LoadedGraph resolve_graph_spec(const std::string& spec) {
  static const std::regex named(R"(([KPCE])([0-9]+))");
  std::smatch m;
  if (std::regex_match(spec, m, named)) {
    const auto n = std::stoul(m[2]);
    if (n > 4096) throw PreconditionError("graph spec '" + spec + "' is too large");
    switch (m[1].str()[0]) {
      case 'K': return {complete_graph(n), {}};
      case 'P': return {path_graph(n), {}};
      case 'C': return {cycle_graph(n), {}};
      default: return {empty_graph(n), {}};
    }
  }
  for (const auto& name : dataset_names()) {
    if (spec == name) return {load_dataset(name).graph, {}};
  }
  return load_graph({"", spec});
}

VertexSet parse_vertex_list(const std::string& text, std::size_t universe) {
  VertexSet s(universe);
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    s.insert(parse_id(token, universe));
  }
  return s;
}

std::vector<VertexSet> parse_partition(const std::string& text, std::size_t universe) {
  std::vector<VertexSet> parts;
  std::stringstream in(text);
  std::string block;
  while (std::getline(in, block, '|')) parts.push_back(parse_vertex_list(block, universe));
  return parts;
}

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"order", g.order()}, {"size", g.size()}, {"edges", std::move(edges)}};
}

Json to_json(const DpCertificate& c) {
  Json witnesses = Json::array();
  for (const auto& w : c.witnesses) witnesses.push_back(to_json(w));
  return Json{{"kind", "dp"}, {"host_order", c.host_order}, {"witnesses", std::move(witnesses)}};
}

Json to_json(const SdpOrder& o) { return Json{{"kind", "sdp"}, {"order", o.order}}; }

Json to_json(const std::vector<VertexSet>& parts) {
  Json out = Json::array();
  for (const auto& p : parts) out.push_back(to_json(p));
  return out;
}

DpCertificate dp_certificate_from_json(const Json& j) {
  DpCertificate c;
  c.host_order = j.at("host_order").get<std::size_t>();
  for (const auto& w : j.at("witnesses")) {
    VertexSet s(c.host_order);
    for (const auto& v : w) s.insert(v.get<Vertex>());
    c.witnesses.push_back(std::move(s));
  }
  return c;
}

SdpOrder sdp_order_from_json(const Json& j) {
  return SdpOrder{j.at("order").get<std::vector<Vertex>>()};
}

}  // namespace modlex::cli
