// Small-graph sweep comparing the dynamics of a join-based update system
// with the Hecke-Kiselman monoid of the graph.

#ifndef KSDS_CONJECTURE_HPP_
#define KSDS_CONJECTURE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksds/dag.hpp"
#include "ksds/hecke_kiselman.hpp"
#include "ksds/sds.hpp"

namespace ksds {

  //! Isomorphism-invariant key of a DAG: vertex count and the smallest
  //! bitmask (over the pairs (1,2), (1,3), ..., (n-1,n)) of a topologically
  //! ordered relabelling.
  using DagKey = std::pair<std::size_t, std::uint64_t>;

  //! The relabelling attaining the key, edges i -> j with i < j.
  Dag canonical_dag(Dag const& g);
  DagKey dag_key(Dag const& g);

  //! Isomorphism classes of DAGs on 1..max_vertices vertices, one canonical
  //! representative each, sorted by key.
  struct DagCatalog {
    std::vector<Dag> items;
  };

  constexpr std::size_t max_catalog_vertices = 5;

  //! Generates forward-edge subsets (every DAG has a topological
  //! labelling). Throws GuardExceeded if max_vertices > 5.
  DagCatalog enumerate_dags(std::size_t max_vertices);

  //! Generates every orientation-or-absence of every vertex pair and keeps
  //! the acyclic ones; used to cross-check enumerate_dags.
  DagCatalog enumerate_dags_by_orientation(std::size_t max_vertices);

  //! Word-valued update system generalising S_n^*: f_i maps the
  //! out-neighbour states, in ascending vertex order, to
  //! a_i [s_{j_r}, [..., [s_{j_2}, s_{j_1}]...]]. S_i is the closure of {empty
  //! word} under f_i, computed sinks first. On Gamma_n this is S_n^*.
  UpdateSystem build_universal_dag(Dag const& dag,
                                   std::size_t max_states_per_vertex = 100'000);

  //! Componentwise product of two systems on the same graph; state names
  //! are "x|y".
  UpdateSystem product_system(UpdateSystem const& a, UpdateSystem const& b);

  struct SweepOptions {
    std::size_t   max_vertices       = 4;
    bool          search_on_mismatch = false;
    std::size_t   search_tries       = 50;
    std::size_t   search_max_states  = 3;
    std::uint64_t seed               = 0;
    Limits        limits             = {};
    HkOptions     hk                 = {};
  };

  struct SweepRow {
    Dag         graph;
    std::size_t hk_size       = 0;
    std::size_t dynamics_size = 0;
    bool        quotient_ok   = false;
    bool        match         = false;
    bool        skipped       = false;
    std::string skip_reason;
    double      runtime_ms = 0;
    //! Largest |D| found by the product search, when it ran.
    std::optional<std::size_t> search_best;
  };

  struct SweepReport {
    std::vector<SweepRow> rows;

    [[nodiscard]] std::size_t matches() const noexcept;
    [[nodiscard]] std::size_t mismatches() const noexcept;
    [[nodiscard]] std::size_t skips() const noexcept;
    //! Every non-skipped row has quotient_ok and dynamics_size <= hk_size.
    [[nodiscard]] bool consistent() const noexcept;
  };

  SweepRow sweep_graph(Dag const& graph, SweepOptions const& options);

  //! One row per catalog graph, in catalog order. Guard failures become
  //! skipped rows.
  SweepReport conjecture_sweep(SweepOptions const& options);

}  // namespace ksds

#endif  // KSDS_CONJECTURE_HPP_
