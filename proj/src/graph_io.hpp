#pragma once

#include <iosfwd>
#include <optional>

#include "pendant_lab/graph.hpp"

namespace pendant_lab::detail {

struct ParsedGraph {
  Graph graph;
  std::optional<Vertex> root;
};

ParsedGraph parse_graph_text(std::istream& in);

}  // namespace pendant_lab::detail
