#include <array>
#include <sstream>

#include "modlex/io.hpp"

namespace modlex {
namespace {

constexpr std::array<const char*, 12> kPalette = {
    "palegreen", "pink",      "tomato",    "orange",    "burlywood", "lightblue",
    "khaki",     "plum",      "aquamarine", "lightgray", "salmon",    "thistle"};

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string render(const Graph& g, const std::vector<std::string>& labels,
                   const DotOptions& options) {
  std::ostringstream out;
  out << "graph " << quoted(options.name) << " {\n";
  out << "  node [shape=circle];\n";
  VertexSet clustered(g.order());
  if (options.clusters) {
    for (std::size_t i = 0; i < options.clusters->size(); ++i) {
      const VertexSet& part = (*options.clusters)[i];
      out << "  subgraph cluster_" << i << " {\n";
      out << "    style=filled; color=" << kPalette[i % kPalette.size()] << ";\n";
      part.for_each([&](Vertex v) {
        out << "    " << v << " [label=" << quoted(labels[v]) << "];\n";
        clustered.insert(v);
      });
      out << "  }\n";
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!clustered.contains(v)) out << "  " << v << " [label=" << quoted(labels[v]) << "];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<std::string> default_labels(const Graph& g) {
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
  return labels;
}

}  // namespace

std::string emit_dot(const Graph& g, const DotOptions& options) {
  return render(g, default_labels(g), options);
}

std::string emit_dot(const QuotientGraph& q, const DotOptions& options) {
  std::vector<std::string> labels;
  for (const auto& part : q.parts) {
    std::string label = "{";
    bool first = true;
    part.for_each([&](Vertex v) {
      if (!first) label += ",";
      label += std::to_string(v);
      first = false;
    });
    labels.push_back(label + "}");
  }
  return render(q.graph, labels, options);
}

std::string emit_dot(const ProductGraph& p, const DotOptions& options) {
  std::vector<std::string> labels;
  for (auto [u, x] : p.vertex_map) {
    labels.push_back("(" + std::to_string(u) + "," + std::to_string(x) + ")");
  }
  if (options.clusters || p.kind != ProductKind::kLexicographic) {
    return render(p.graph, labels, options);
  }
  DotOptions with_blocks = options;
  std::vector<VertexSet> blocks;
  for (Vertex u = 0; u + 1 < p.offsets.size(); ++u) blocks.push_back(p.block(u));
  with_blocks.clusters = std::move(blocks);
  return render(p.graph, labels, with_blocks);
}

}  // namespace modlex
