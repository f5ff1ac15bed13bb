#include "modlex/datasets.hpp"

#include "modlex/errors.hpp"
#include "modlex/io.hpp"
#include "modlex/products.hpp"

namespace modlex {
namespace {

// Verbatim copies of data/fig3.edges and data/fig3-quotient.edges.
constexpr std::string_view kFig3 = R"edges(# Social network graph M (44 vertices, 68 edges).
# Vertex id = figure label - 1. Figure node names v0..v29 and v31..v43 map to
# ids 0..29 and 31..43; node v44 carries label 31 and maps to id 30.
# Body line i is the i-th edge of the figure source, in source order.
n 44
0 1
1 2
1 3
1 4
1 5
1 6
1 7
1 8
1 26
1 27
1 29
1 30
2 3
2 4
3 6
4 5
4 6
5 6
7 27
8 30
9 30
10 30
11 30
12 30
13 30
14 30
15 30
16 19
16 23
17 23
18 20
18 23
19 23
20 21
22 23
22 34
23 24
23 25
23 31
23 32
23 33
23 34
23 35
23 36
23 38
24 38
25 26
25 27
25 31
25 38
25 30
26 27
27 28
27 29
27 31
27 30
31 38
32 38
33 38
34 38
35 38
36 38
37 38
38 39
38 40
38 41
38 42
38 43
)edges";

constexpr std::string_view kFig3Quotient = R"edges(# Minimal quotient graph of M (21 vertices, 33 edges).
# Ids follow the order vertices are declared in the figure source:
# v0->0 v1->1 v7->2 v8->3 v9->4 v16->5 v18->6 v20->7 v21->8 v22->9 v23->10 v24->11 v25->12 v26->13 v27->14 v28->15 v31->16 v34->17 v37->18 v38->19 v44->20
# Body line i is the i-th edge of the figure source, in source order.
n 21
0 1
1 2
1 3
1 13
1 14
1 20
2 14
3 20
4 20
5 10
6 7
6 10
7 8
9 10
9 17
10 11
10 12
10 16
10 17
10 19
11 19
12 13
12 14
12 16
12 19
12 20
13 14
14 15
14 16
14 20
16 19
17 19
18 19
)edges";

struct Entry {
  const char* name;
  const char* description;
  std::uint64_t checksum;
};

constexpr Entry kEntries[] = {
    {"fig1", "P3[{C5, K3, K2}], 10 vertices, 30 edges", 0xea1fde24d652f914ULL},
    {"fig2", "C5 with one vertex replaced by K2, 6 vertices", 0x3cb1912abc47673dULL},
    {"fig3", "social network graph M, 44 vertices, 68 edges", 0x4b23ad677cc01071ULL},
    {"fig3-quotient", "minimal quotient of M, 21 vertices, 33 edges", 0x652105e9f610574bULL},
};

Graph build(std::string_view name) {
  if (name == "fig1") {
    return generalized_lex_product(
               GraphFamily(path_graph(3), {cycle_graph(5), complete_graph(3), complete_graph(2)}))
        .graph;
  }
  if (name == "fig2") {
    std::vector<Graph> components(5, complete_graph(1));
    components[0] = complete_graph(2);
    return generalized_lex_product(GraphFamily(cycle_graph(5), std::move(components))).graph;
  }
  return parse_edge_list(dataset_source(name)).graph;
}

}  // namespace

std::vector<std::string> dataset_names() {
  std::vector<std::string> names;
  for (const auto& e : kEntries) names.emplace_back(e.name);
  return names;
}

std::string_view dataset_source(std::string_view name) {
  if (name == "fig3") return kFig3;
  if (name == "fig3-quotient") return kFig3Quotient;
  return {};
}

Dataset load_dataset(std::string_view name) {
  for (const auto& e : kEntries) {
    if (name != e.name) continue;
    Dataset d{e.name, e.description, build(name), e.checksum};
    if (edge_list_checksum(d.graph) != d.checksum) {
      throw CertificateError("dataset " + d.name + " does not match its recorded checksum");
    }
    return d;
  }
  throw PreconditionError("unknown dataset '" + std::string(name) + "'");
}

}  // namespace modlex
