#include "spinlogic/analysis.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <sstream>

#include "json.hpp"

#include "spinlogic/errors.hpp"

namespace spinlogic {

using nlohmann::json;

std::vector<int> InteractionGraph::degrees() const {
  std::vector<int> d(nodes.size(), 0);
  for (const Edge& e : edges) {
    ++d[static_cast<std::size_t>(e.a)];
    ++d[static_cast<std::size_t>(e.b)];
  }
  return d;
}

std::vector<std::vector<int>> InteractionGraph::adjacency() const {
  std::vector<std::vector<int>> adj(nodes.size());
  for (const Edge& e : edges) {
    adj[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

bool InteractionGraph::operator==(const InteractionGraph& other) const {
  if (nodes.size() != other.nodes.size() ||
      edges.size() != other.edges.size()) {
    return false;
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].wire != other.nodes[i].wire ||
        nodes[i].role != other.nodes[i].role ||
        nodes[i].local_field != other.nodes[i].local_field) {
      return false;
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].a != other.edges[i].a || edges[i].b != other.edges[i].b ||
        edges[i].weight != other.edges[i].weight) {
      return false;
    }
  }
  return true;
}

InteractionGraph to_graph(const CompiledCircuit& c) {
  if (c.hamiltonian.max_weight() > 2) {
    throw DomainError(
        "Hamiltonian has terms coupling three or more spins; only "
        "two-local Hamiltonians map to an interaction network");
  }
  InteractionGraph g;
  g.nodes.reserve(c.wires.size());
  for (std::size_t i = 0; i < c.wires.size(); ++i) {
    g.nodes.push_back({c.wires[i], c.roles[i], 0.0});
  }
  for (const auto& [subset, coeff] : c.hamiltonian.terms()) {
    if (subset.size() == 1) {
      g.nodes[static_cast<std::size_t>(subset[0])].local_field = coeff;
    } else if (subset.size() == 2) {
      g.edges.push_back({subset[0], subset[1], coeff});
    }
  }
  // Term maps iterate lexicographically, so edges arrive sorted already.
  return g;
}

std::vector<double> degree_centrality(const InteractionGraph& g) {
  const int n = g.node_count();
  if (n < 2) {
    throw DomainError("degree centrality needs at least two nodes");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int d : g.degrees()) {
    out.push_back(static_cast<double>(d) / static_cast<double>(n - 1));
  }
  return out;
}

std::vector<double> shortest_path_centrality(const InteractionGraph& g) {
  // Brandes' accumulation over BFS shortest-path DAGs. The unordered-pair
  // convention with endpoints excluded is the accumulated total halved.
  const int n = g.node_count();
  const auto adj = g.adjacency();
  std::vector<double> centrality(static_cast<std::size_t>(n), 0.0);
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<double> paths(static_cast<std::size_t>(n));
  std::vector<double> delta(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));

  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(paths.begin(), paths.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    order.clear();

    dist[static_cast<std::size_t>(s)] = 0;
    paths[static_cast<std::size_t>(s)] = 1.0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] =
              dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
        if (dist[static_cast<std::size_t>(w)] ==
            dist[static_cast<std::size_t>(v)] + 1) {
          paths[static_cast<std::size_t>(w)] +=
              paths[static_cast<std::size_t>(v)];
          preds[static_cast<std::size_t>(w)].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int w = *it;
      for (int v : preds[static_cast<std::size_t>(w)]) {
        delta[static_cast<std::size_t>(v)] +=
            paths[static_cast<std::size_t>(v)] /
            paths[static_cast<std::size_t>(w)] *
            (1.0 + delta[static_cast<std::size_t>(w)]);
      }
      if (w != s) {
        centrality[static_cast<std::size_t>(w)] +=
            delta[static_cast<std::size_t>(w)];
      }
    }
  }
  for (double& v : centrality) v /= 2.0;
  return centrality;
}

std::pair<double, double> mean_and_variance(const std::vector<double>& v) {
  if (v.empty()) throw DomainError("mean of an empty vector");
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double var = 0.0;
  for (double x : v) var += (x - mean) * (x - mean);
  var /= static_cast<double>(v.size());
  return {mean, var};
}

namespace {

std::string dot_double(double v) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace

std::string to_dot(const InteractionGraph& g) {
  std::ostringstream out;
  out << "graph interaction {\n";
  for (const auto& node : g.nodes) {
    out << "  \"" << node.wire << "\" [role=" << wire_role_name(node.role)
        << ", field=" << dot_double(node.local_field);
    if (node.local_field < 0) out << ", style=filled";
    out << "];\n";
  }
  for (const auto& e : g.edges) {
    out << "  \"" << g.nodes[static_cast<std::size_t>(e.a)].wire
        << "\" -- \"" << g.nodes[static_cast<std::size_t>(e.b)].wire
        << "\" [weight=" << dot_double(e.weight);
    if (e.weight < 0) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json_graph(const InteractionGraph& g) {
  json nodes = json::array();
  for (const auto& node : g.nodes) {
    nodes.push_back({{"wire", node.wire},
                     {"role", std::string(wire_role_name(node.role))},
                     {"field", node.local_field}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"a", e.a}, {"b", e.b}, {"weight", e.weight}});
  }
  return json{{"nodes", nodes}, {"edges", edges}}.dump(2) + "\n";
}

InteractionGraph from_json_graph(const std::string& text) {
  const json j = json::parse(text);
  InteractionGraph g;
  for (const auto& node : j.at("nodes")) {
    InteractionGraph::Node n;
    n.wire = node.at("wire").get<std::string>();
    const std::string role = node.at("role").get<std::string>();
    n.role = role == "input" ? WireRole::Input
             : role == "output" ? WireRole::Output : WireRole::Ancilla;
    n.local_field = node.at("field").get<double>();
    g.nodes.push_back(std::move(n));
  }
  for (const auto& e : j.at("edges")) {
    g.edges.push_back({e.at("a").get<int>(), e.at("b").get<int>(),
                       e.at("weight").get<double>()});
  }
  return g;
}

std::string metrics_table(const InteractionGraph& g) {
  const auto degrees = g.degrees();
  const auto dc = degree_centrality(g);
  const auto spc = shortest_path_centrality(g);
  std::ostringstream out;
  out << "node\trole\tdegree\tdegree_centrality\tshortest_path_centrality\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    char line[256];
    std::snprintf(line, sizeof line, "%s\t%s\t%d\t%.6f\t%.6f\n",
                  g.nodes[i].wire.c_str(),
                  std::string(wire_role_name(g.nodes[i].role)).c_str(),
                  degrees[i], dc[i], spc[i]);
    out << line;
  }
  return out.str();
}

}  // namespace spinlogic
