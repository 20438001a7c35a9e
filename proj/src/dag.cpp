#include "ksds/dag.hpp"

#include <algorithm>
#include <string>

#include "ksds/errors.hpp"

namespace ksds {

  Dag::Dag(std::size_t n, std::vector<Edge> edges)
      : n_(n),
        edges_(std::move(edges)),
        out_(n),
        matrix_(n, std::vector<bool>(n, false)) {
    std::sort(edges_.begin(), edges_.end());
    for (auto [i, j] : edges_) {
      check_vertex(i);
      check_vertex(j);
      if (i == j) {
        throw InvalidArgument("self-loop at vertex " + std::to_string(i));
      }
      if (matrix_[i - 1][j - 1]) {
        throw InvalidArgument("duplicate edge " + std::to_string(i) + " -> "
                              + std::to_string(j));
      }
      matrix_[i - 1][j - 1] = true;
      out_[i - 1].push_back(j);
    }
    if (topological_order().size() != n_) {
      throw InvalidArgument("the graph has a directed cycle");
    }
  }

  Dag Dag::complete(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= n; ++i) {
      for (Vertex j = i + 1; j <= n; ++j) {
        edges.emplace_back(i, j);
      }
    }
    return Dag(n, std::move(edges));
  }

  Dag Dag::edgeless(std::size_t n) {
    return Dag(n, {});
  }

  void Dag::check_vertex(Vertex v) const {
    if (v == 0 || v > n_) {
      throw InvalidArgument("vertex " + std::to_string(v) + " outside 1.."
                            + std::to_string(n_));
    }
  }

  bool Dag::has_edge(Vertex i, Vertex j) const {
    check_vertex(i);
    check_vertex(j);
    return matrix_[i - 1][j - 1];
  }

  bool Dag::adjacent(Vertex i, Vertex j) const {
    return has_edge(i, j) || has_edge(j, i);
  }

  std::vector<Vertex> const& Dag::out_neighbors(Vertex i) const {
    check_vertex(i);
    return out_[i - 1];
  }

  // Kahn's algorithm; returns fewer than n vertices if there is a cycle.
  std::vector<Vertex> Dag::topological_order() const {
    std::vector<std::size_t> in_degree(n_, 0);
    for (auto [i, j] : edges_) {
      ++in_degree[j - 1];
    }
    std::vector<Vertex> order;
    std::vector<bool>   done(n_, false);
    while (order.size() < n_) {
      Vertex next = 0;
      for (Vertex v = 1; v <= n_; ++v) {
        if (!done[v - 1] && in_degree[v - 1] == 0) {
          next = v;
          break;
        }
      }
      if (next == 0) {
        break;
      }
      done[next - 1] = true;
      order.push_back(next);
      for (Vertex j : out_[next - 1]) {
        --in_degree[j - 1];
      }
    }
    return order;
  }

}  // namespace ksds
