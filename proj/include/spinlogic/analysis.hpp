#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spinlogic/compiler.hpp"

namespace spinlogic {

/// Undirected spin-interaction network: one node per wire carrying its
/// local-field coefficient, one edge per spin pair with nonzero net
/// two-spin coupling. Metrics are computed on the unweighted topology;
/// weights only affect rendering.
struct InteractionGraph {
  struct Node {
    std::string wire;
    WireRole role = WireRole::Ancilla;
    double local_field = 0.0;
  };
  struct Edge {
    int a = 0;
    int b = 0;  // a < b
    double weight = 0.0;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;  // sorted by (a, b)

  int node_count() const { return static_cast<int>(nodes.size()); }
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;

  bool operator==(const InteractionGraph& other) const;
};

/// Extracts the interaction network of a compiled circuit. Throws
/// DomainError when the Hamiltonian carries terms of weight three or
/// more (no pairwise network exists for those).
InteractionGraph to_graph(const CompiledCircuit& c);

/// Degree centrality d_k / (N - 1) per node. Throws DomainError for
/// graphs with fewer than two nodes.
std::vector<double> degree_centrality(const InteractionGraph& g);

/// Shortest-path (betweenness) centrality per node: over unordered node
/// pairs {i, j} with i != k != j, the fraction of i-j geodesics passing
/// through k. Disconnected pairs contribute nothing.
std::vector<double> shortest_path_centrality(const InteractionGraph& g);

/// Population mean and variance. Throws DomainError on empty input.
std::pair<double, double> mean_and_variance(const std::vector<double>& v);

/// Graphviz rendering: edge weight as a numeric attribute, dashed style
/// for negative couplings, filled nodes for negative local fields.
std::string to_dot(const InteractionGraph& g);

/// Lossless JSON rendering (see from_json_graph).
std::string to_json_graph(const InteractionGraph& g);
InteractionGraph from_json_graph(const std::string& text);

/// Tab-separated metrics table: node, role, degree, degree centrality,
/// shortest-path centrality.
std::string metrics_table(const InteractionGraph& g);

}  // namespace spinlogic
