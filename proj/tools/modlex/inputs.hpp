#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "modlex/budget.hpp"
#include "modlex/graph.hpp"
#include "modlex/metric.hpp"
#include "modlex/modular.hpp"

namespace modlex::cli {

using Json = nlohmann::ordered_json;

struct GraphSource {
  std::string dataset;
  std::string input;
};

struct LoadedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

/// Reads the graph named by --dataset or --input (path, or "-" for stdin).
LoadedGraph load_graph(const GraphSource& source);

/// Small graph by name: Kn, Pn, Cn, En (edgeless), a bundled dataset, or an
/// edge-list file path.
LoadedGraph resolve_graph_spec(const std::string& spec);

/// "1,2,5" -> vertex set; ids must be below `universe`.
VertexSet parse_vertex_list(const std::string& text, std::size_t universe);

/// "0,1|2|3,4" -> parts.
std::vector<VertexSet> parse_partition(const std::string& text, std::size_t universe);

Json to_json(const VertexSet& s);
Json to_json(const Graph& g);
Json to_json(const DpCertificate& c);
Json to_json(const SdpOrder& o);
Json to_json(const std::vector<VertexSet>& parts);

DpCertificate dp_certificate_from_json(const Json& j);
SdpOrder sdp_order_from_json(const Json& j);

}  // namespace modlex::cli
