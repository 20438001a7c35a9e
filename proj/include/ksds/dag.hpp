// Finite directed acyclic graphs with vertices 1..n.

#ifndef KSDS_DAG_HPP_
#define KSDS_DAG_HPP_

#include <cstddef>
#include <utility>
#include <vector>

namespace ksds {

  using Vertex = std::size_t;
  using Edge   = std::pair<Vertex, Vertex>;

  class Dag {
   public:
    Dag() = default;

    //! Throws InvalidArgument on a vertex outside 1..n, a self-loop, a
    //! duplicate edge or a directed cycle. Edges are stored sorted.
    Dag(std::size_t n, std::vector<Edge> edges);

    //! Gamma_n: i -> j iff i < j.
    static Dag complete(std::size_t n);
    static Dag edgeless(std::size_t n);

    [[nodiscard]] std::size_t n() const noexcept {
      return n_;
    }
    std::vector<Edge> const& edges() const noexcept {
      return edges_;
    }
    [[nodiscard]] bool has_edge(Vertex i, Vertex j) const;
    //! i -> j or j -> i.
    [[nodiscard]] bool adjacent(Vertex i, Vertex j) const;
    //! x[i] = {j : i -> j}, ascending.
    std::vector<Vertex> const& out_neighbors(Vertex i) const;
    //! Vertices ordered so that every edge points forward; ties are broken
    //! by the smallest label.
    std::vector<Vertex> topological_order() const;

    friend bool operator==(Dag const& x, Dag const& y) {
      return x.n_ == y.n_ && x.edges_ == y.edges_;
    }

   private:
    void check_vertex(Vertex v) const;

    std::size_t                      n_ = 0;
    std::vector<Edge>                edges_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<bool>>   matrix_;
  };

}  // namespace ksds

#endif  // KSDS_DAG_HPP_
