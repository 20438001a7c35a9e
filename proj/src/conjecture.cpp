#include "ksds/conjecture.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <unordered_map>

#include "ksds/errors.hpp"
#include "ksds/universal.hpp"

namespace ksds {

  namespace {

    // Bit position of the pair (i, j), i < j, 1-based.
    std::size_t pair_bit(std::size_t n, Vertex i, Vertex j) {
      // pairs (1,2) .. (1,n), (2,3) .. (2,n), ...
      std::size_t before = (i - 1) * n - (i - 1) * i / 2;
      return before + (j - i - 1);
    }

    bool is_acyclic(std::size_t n, std::vector<Edge> const& edges) {
      std::vector<std::size_t> in_degree(n + 1, 0);
      for (auto [i, j] : edges) {
        ++in_degree[j];
      }
      std::vector<bool> done(n + 1, false);
      for (std::size_t removed = 0; removed < n; ++removed) {
        Vertex next = 0;
        for (Vertex v = 1; v <= n && next == 0; ++v) {
          if (!done[v] && in_degree[v] == 0) {
            next = v;
          }
        }
        if (next == 0) {
          return false;
        }
        done[next] = true;
        for (auto [i, j] : edges) {
          if (i == next) {
            --in_degree[j];
          }
        }
      }
      return true;
    }

    // Minimal mask over topological relabellings, with the permutation
    // attaining it (perm[v - 1] is the new label of v).
    std::pair<std::uint64_t, std::vector<Vertex>> minimal_labelling(Dag const& g) {
      std::size_t const   n = g.n();
      std::vector<Vertex> perm(n);
      std::iota(perm.begin(), perm.end(), 1);
      std::uint64_t       best = ~std::uint64_t{0};
      std::vector<Vertex> best_perm;
      do {
        std::uint64_t mask = 0;
        bool          ok   = true;
        for (auto [i, j] : g.edges()) {
          Vertex a = perm[i - 1], b = perm[j - 1];
          if (a > b) {
            ok = false;
            break;
          }
          mask |= std::uint64_t{1} << pair_bit(n, a, b);
        }
        if (ok && mask < best) {
          best      = mask;
          best_perm = perm;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return {best, best_perm};
    }

    void check_catalog_bound(std::size_t max_vertices) {
      if (max_vertices > max_catalog_vertices) {
        throw GuardExceeded("DAG catalogs are limited to "
                            + std::to_string(max_catalog_vertices) + " vertices");
      }
    }

    DagCatalog catalog_from(std::set<DagKey> const& keys) {
      DagCatalog catalog;
      for (auto [n, mask] : keys) {
        std::vector<Edge> edges;
        for (Vertex i = 1; i <= n; ++i) {
          for (Vertex j = i + 1; j <= n; ++j) {
            if (mask >> pair_bit(n, i, j) & 1U) {
              edges.emplace_back(i, j);
            }
          }
        }
        catalog.items.emplace_back(n, std::move(edges));
      }
      return catalog;
    }

    std::size_t dynamics_size_or_zero(UpdateSystem const& sys, Limits const& limits) {
      try {
        return DynamicsMonoid(sys, limits).size();
      } catch (GuardExceeded const&) {
        return 0;
      }
    }

  }  // namespace

  DagKey dag_key(Dag const& g) {
    return {g.n(), minimal_labelling(g).first};
  }

  Dag canonical_dag(Dag const& g) {
    auto const        perm = minimal_labelling(g).second;
    std::vector<Edge> edges;
    for (auto [i, j] : g.edges()) {
      edges.emplace_back(perm[i - 1], perm[j - 1]);
    }
    return Dag(g.n(), std::move(edges));
  }

  DagCatalog enumerate_dags(std::size_t max_vertices) {
    check_catalog_bound(max_vertices);
    std::set<DagKey> keys;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
      std::size_t const pairs = n * (n - 1) / 2;
      for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << pairs); ++subset) {
        std::vector<Edge> edges;
        for (Vertex i = 1; i <= n; ++i) {
          for (Vertex j = i + 1; j <= n; ++j) {
            if (subset >> pair_bit(n, i, j) & 1U) {
              edges.emplace_back(i, j);
            }
          }
        }
        keys.insert(dag_key(Dag(n, std::move(edges))));
      }
    }
    return catalog_from(keys);
  }

  DagCatalog enumerate_dags_by_orientation(std::size_t max_vertices) {
    check_catalog_bound(max_vertices);
    std::set<DagKey> keys;
    for (std::size_t n = 1; n <= max_vertices; ++n) {
      std::vector<Edge> pairs;
      for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = i + 1; j <= n; ++j) {
          pairs.emplace_back(i, j);
        }
      }
      std::size_t total = 1;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        total *= 3;
      }
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<Edge> edges;
        std::size_t       c = code;
        for (auto [i, j] : pairs) {
          switch (c % 3) {
            case 1:
              edges.emplace_back(i, j);
              break;
            case 2:
              edges.emplace_back(j, i);
              break;
            default:
              break;
          }
          c /= 3;
        }
        if (is_acyclic(n, edges)) {
          keys.insert(dag_key(Dag(n, std::move(edges))));
        }
      }
    }
    return catalog_from(keys);
  }

  UpdateSystem build_universal_dag(Dag const& dag, std::size_t max_states_per_vertex) {
    std::size_t const n = dag.n();
    std::vector<std::vector<Word>>                                 words(n);
    std::vector<std::vector<std::size_t>>                          tables(n);
    std::vector<std::unordered_map<Word, std::size_t, WordHash>>   index(n);
    auto order = dag.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex const v    = *it;
      auto const&  nbrs = dag.out_neighbors(v);
      words[v - 1].push_back(Word());
      index[v - 1].emplace(Word(), 0);
      std::size_t tuples = 1;
      for (Vertex j : nbrs) {
        tuples *= words[j - 1].size();
        if (tuples > 100 * max_states_per_vertex) {
          throw GuardExceeded("vertex " + std::to_string(v)
                              + " has too many argument tuples");
        }
      }
      std::vector<std::size_t> digits(nbrs.size(), 0);
      std::vector<Word>        args(nbrs.size());
      for (std::size_t t = 0; t < tuples; ++t) {
        for (std::size_t p = 0; p < nbrs.size(); ++p) {
          args[p] = words[nbrs[p] - 1][digits[p]];
        }
        Word out             = static_cast<Letter>(v) + fold_join(args);
        auto [pos, inserted] = index[v - 1].emplace(out, words[v - 1].size());
        if (inserted) {
          words[v - 1].push_back(std::move(out));
          if (words[v - 1].size() > max_states_per_vertex) {
            throw GuardExceeded("vertex " + std::to_string(v) + " has more than "
                                + std::to_string(max_states_per_vertex)
                                + " states");
          }
        }
        tables[v - 1].push_back(pos->second);
        for (std::size_t p = nbrs.size(); p-- > 0;) {
          if (++digits[p] < words[nbrs[p] - 1].size()) {
            break;
          }
          digits[p] = 0;
        }
      }
    }
    std::vector<std::vector<std::string>> names(n);
    for (Vertex v = 1; v <= n; ++v) {
      for (auto const& w : words[v - 1]) {
        names[v - 1].push_back(to_string(w));
      }
    }
    return UpdateSystem(dag, std::move(names), std::move(tables));
  }

  UpdateSystem product_system(UpdateSystem const& a, UpdateSystem const& b) {
    if (!(a.graph() == b.graph())) {
      throw InvalidArgument("product of systems on different graphs");
    }
    Dag const&                            g = a.graph();
    std::vector<std::vector<std::string>> names(g.n());
    std::vector<std::vector<std::size_t>> tables(g.n());
    for (Vertex v = 1; v <= g.n(); ++v) {
      for (auto const& x : a.state_names(v)) {
        for (auto const& y : b.state_names(v)) {
          names[v - 1].push_back(x + "|" + y);
        }
      }
    }
    for (Vertex v = 1; v <= g.n(); ++v) {
      auto const& nbrs = g.out_neighbors(v);
      std::size_t count = 1;
      for (Vertex j : nbrs) {
        count *= a.num_states(j) * b.num_states(j);
      }
      SystemState sa{std::vector<std::size_t>(g.n(), 0)};
      SystemState sb{std::vector<std::size_t>(g.n(), 0)};
      for (std::size_t k = 0; k < count; ++k) {
        std::size_t rest = k;
        for (std::size_t p = nbrs.size(); p-- > 0;) {
          Vertex      j     = nbrs[p];
          std::size_t radix = a.num_states(j) * b.num_states(j);
          std::size_t pair  = rest % radix;
          rest /= radix;
          sa.values[j - 1] = pair / b.num_states(j);
          sb.values[j - 1] = pair % b.num_states(j);
        }
        tables[v - 1].push_back(a.evaluate(v, sa) * b.num_states(v) + b.evaluate(v, sb));
      }
    }
    return UpdateSystem(g, std::move(names), std::move(tables));
  }

  std::size_t SweepReport::matches() const noexcept {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](auto const& r) {
      return !r.skipped && r.match;
    }));
  }

  std::size_t SweepReport::mismatches() const noexcept {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](auto const& r) {
      return !r.skipped && !r.match;
    }));
  }

  std::size_t SweepReport::skips() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        rows.begin(), rows.end(), [](auto const& r) { return r.skipped; }));
  }

  bool SweepReport::consistent() const noexcept {
    return std::all_of(rows.begin(), rows.end(), [](auto const& r) {
      return r.skipped || (r.quotient_ok && r.dynamics_size <= r.hk_size);
    });
  }

  SweepRow sweep_graph(Dag const& graph, SweepOptions const& options) {
    auto const start = std::chrono::steady_clock::now();
    SweepRow   row;
    row.graph = graph;
    try {
      row.hk_size         = enumerate_hk(HkPresentation(graph), options.hk).size();
      UpdateSystem sys    = build_universal_dag(graph);
      row.dynamics_size   = DynamicsMonoid(sys, options.limits).size();
      row.quotient_ok     = check_hk_relations(sys, options.limits).all_passed();
      row.match           = row.dynamics_size == row.hk_size;
      if (!row.match && options.search_on_mismatch) {
        std::size_t best = row.dynamics_size;
        for (std::size_t t = 0; t < options.search_tries && best < row.hk_size; ++t) {
          auto candidate = product_system(
              sys, random_update_system(graph, options.search_max_states, options.seed + t));
          std::size_t size = dynamics_size_or_zero(candidate, options.limits);
          if (size > best) {
            best = size;
            sys  = std::move(candidate);
          }
        }
        row.search_best = best;
      }
    } catch (GuardExceeded const& e) {
      row.skipped     = true;
      row.skip_reason = e.what();
    }
    row.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return row;
  }

  SweepReport conjecture_sweep(SweepOptions const& options) {
    SweepReport report;
    for (auto const& g : enumerate_dags(options.max_vertices).items) {
      report.rows.push_back(sweep_graph(g, options));
    }
    return report;
  }

}  // namespace ksds
