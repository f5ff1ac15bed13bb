#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "modlex/graph.hpp"

namespace modlex {

struct Dataset {
  std::string name;
  std::string description;
  Graph graph;
  /// Recorded edge_list_checksum of the graph; checked on every load.
  std::uint64_t checksum = 0;
};

/// Names in a fixed order: fig1, fig2, fig3, fig3-quotient.
std::vector<std::string> dataset_names();

/// Throws PreconditionError for an unknown name and CertificateError if the
/// loaded graph does not match its recorded checksum.
Dataset load_dataset(std::string_view name);

/// Raw edge-list text bundled for a transcribed dataset (fig3, fig3-quotient);
/// empty for datasets built from products.
std::string_view dataset_source(std::string_view name);

}  // namespace modlex
