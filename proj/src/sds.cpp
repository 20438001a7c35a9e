#include "ksds/sds.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "ksds/errors.hpp"

namespace ksds {

  UpdateSystem::UpdateSystem(Dag                                   graph,
                             std::vector<std::vector<std::string>> state_names,
                             std::vector<std::vector<std::size_t>> tables)
      : graph_(std::move(graph)),
        names_(std::move(state_names)),
        tables_(std::move(tables)) {
    if (names_.size() != n() || tables_.size() != n()) {
      throw InvalidArgument("expected state sets and tables for "
                            + std::to_string(n()) + " vertices");
    }
    for (Vertex v = 1; v <= n(); ++v) {
      auto const& names = names_[v - 1];
      if (names.empty()) {
        throw InvalidArgument("vertex " + std::to_string(v)
                              + " has an empty state set");
      }
      auto sorted = names;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidArgument("vertex " + std::to_string(v)
                              + " has repeated state names");
      }
    }
    for (Vertex v = 1; v <= n(); ++v) {
      auto const& tab = tables_[v - 1];
      if (tab.size() != argument_count(v)) {
        throw InvalidArgument("the table of vertex " + std::to_string(v)
                              + " has " + std::to_string(tab.size())
                              + " entries, expected "
                              + std::to_string(argument_count(v)));
      }
      for (auto out : tab) {
        if (out >= num_states(v)) {
          throw InvalidArgument("the table of vertex " + std::to_string(v)
                                + " has an output outside its state set");
        }
      }
    }
  }

  std::size_t UpdateSystem::state_index(Vertex v, std::string const& name) const {
    auto const& names = names_.at(v - 1);
    auto        it    = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw InvalidArgument("\"" + name + "\" is not a state of vertex "
                            + std::to_string(v));
    }
    return static_cast<std::size_t>(it - names.begin());
  }

  std::size_t UpdateSystem::argument_count(Vertex v) const {
    std::size_t count = 1;
    for (Vertex j : graph_.out_neighbors(v)) {
      count *= num_states(j);
    }
    return count;
  }

  std::vector<std::size_t> UpdateSystem::argument_tuple(Vertex v,
                                                        std::size_t k) const {
    auto const&              nbrs = graph_.out_neighbors(v);
    std::vector<std::size_t> tuple(nbrs.size());
    for (std::size_t p = nbrs.size(); p-- > 0;) {
      std::size_t radix = num_states(nbrs[p]);
      tuple[p]          = k % radix;
      k /= radix;
    }
    return tuple;
  }

  std::size_t UpdateSystem::argument_index(Vertex v, SystemState const& s) const {
    std::size_t k = 0;
    for (Vertex j : graph_.out_neighbors(v)) {
      k = k * num_states(j) + s[j];
    }
    return k;
  }

  std::size_t UpdateSystem::evaluate(Vertex v, SystemState const& s) const {
    return tables_[v - 1][argument_index(v, s)];
  }

  std::size_t UpdateSystem::state_space_size(std::size_t limit) const {
    std::size_t size = 1;
    for (Vertex v = 1; v <= n(); ++v) {
      size *= num_states(v);
      if (size > limit) {
        throw GuardExceeded("the state space has more than "
                            + std::to_string(limit) + " elements");
      }
    }
    return size;
  }

  std::size_t UpdateSystem::encode(SystemState const& s) const {
    std::size_t index = 0;
    for (Vertex v = 1; v <= n(); ++v) {
      index = index * num_states(v) + s[v];
    }
    return index;
  }

  SystemState UpdateSystem::decode(std::size_t index) const {
    SystemState s{std::vector<std::size_t>(n())};
    for (Vertex v = n(); v >= 1; --v) {
      s.values[v - 1] = index % num_states(v);
      index /= num_states(v);
    }
    return s;
  }

  void UpdateSystem::validate(SystemState const& s) const {
    if (s.values.size() != n()) {
      throw InvalidArgument("system state has " + std::to_string(s.values.size())
                            + " entries, expected " + std::to_string(n()));
    }
    for (Vertex v = 1; v <= n(); ++v) {
      if (s[v] >= num_states(v)) {
        throw InvalidArgument("state index out of range at vertex "
                              + std::to_string(v));
      }
    }
  }

  std::string UpdateSystem::render(SystemState const& s) const {
    std::string out = "(";
    for (Vertex v = 1; v <= n(); ++v) {
      if (v != 1) {
        out += ", ";
      }
      out += state_name(v, s[v]);
    }
    return out + ")";
  }

  SystemState local_apply(UpdateSystem const& sys,
                          Vertex              v,
                          SystemState const&  s) {
    if (v == 0 || v > sys.n()) {
      throw InvalidArgument("vertex " + std::to_string(v) + " outside 1.."
                            + std::to_string(sys.n()));
    }
    sys.validate(s);
    SystemState t     = s;
    t.values[v - 1] = sys.evaluate(v, s);
    return t;
  }

  SystemState evolve(UpdateSystem const& sys,
                     Word const&         w,
                     SystemState const&  s) {
    if (w.max_letter() > sys.n()) {
      throw InvalidArgument("letter " + std::to_string(w.max_letter())
                            + " is not a vertex");
    }
    sys.validate(s);
    SystemState t = s;
    for (std::size_t k = w.size(); k-- > 0;) {
      t.values[w[k] - 1] = sys.evaluate(w[k], t);
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Maps and the dynamics monoid
  ////////////////////////////////////////////////////////////////////////

  std::size_t DynamicsMapHash::operator()(DynamicsMap const& f) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : f.table) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return h;
  }

  DynamicsMap identity_map(std::size_t size) {
    DynamicsMap id{std::vector<std::uint32_t>(size)};
    for (std::size_t x = 0; x < size; ++x) {
      id.table[x] = static_cast<std::uint32_t>(x);
    }
    return id;
  }

  DynamicsMap local_map(UpdateSystem const& sys, Vertex v, Limits const& limits) {
    std::size_t size = sys.state_space_size(limits.max_states);
    DynamicsMap f{std::vector<std::uint32_t>(size)};
    for (std::size_t x = 0; x < size; ++x) {
      SystemState s   = sys.decode(x);
      s.values[v - 1] = sys.evaluate(v, s);
      f.table[x]      = static_cast<std::uint32_t>(sys.encode(s));
    }
    return f;
  }

  DynamicsMap compose(DynamicsMap const& f, DynamicsMap const& g) {
    DynamicsMap h{std::vector<std::uint32_t>(g.table.size())};
    for (std::size_t x = 0; x < g.table.size(); ++x) {
      h.table[x] = f.table[g.table[x]];
    }
    return h;
  }

  DynamicsMonoid::DynamicsMonoid(UpdateSystem const& sys, Limits const& limits)
      : n_(sys.n()), state_space_size_(sys.state_space_size(limits.max_states)) {
    std::vector<DynamicsMap> generators;
    for (Vertex v = 1; v <= n_; ++v) {
      generators.push_back(local_map(sys, v, limits));
    }

    // The set stores ids; hashing and equality look the maps up in maps_.
    auto hash = [this](std::size_t id) { return DynamicsMapHash()(maps_[id]); };
    auto eq   = [this](std::size_t x, std::size_t y) { return maps_[x] == maps_[y]; };
    std::unordered_set<std::size_t, decltype(hash), decltype(eq)> seen(64, hash, eq);

    maps_.push_back(identity_map(state_space_size_));
    witnesses_.emplace_back();
    seen.insert(0);
    for (std::size_t x = 0; x < maps_.size(); ++x) {
      std::vector<std::size_t> row(n_);
      for (Vertex v = 1; v <= n_; ++v) {
        maps_.push_back(compose(generators[v - 1], maps_[x]));
        auto [it, inserted] = seen.insert(maps_.size() - 1);
        if (inserted) {
          if (maps_.size() > limits.max_elements) {
            throw GuardExceeded("the dynamics monoid has more than "
                                + std::to_string(limits.max_elements)
                                + " elements");
          }
          witnesses_.push_back(static_cast<Letter>(v) + witnesses_[x]);
        } else {
          maps_.pop_back();
        }
        row[v - 1] = *it;
      }
      left_.push_back(std::move(row));
    }
  }

  std::size_t DynamicsMonoid::id_of(Word const& w) const {
    if (w.max_letter() > n_) {
      throw InvalidArgument("letter " + std::to_string(w.max_letter())
                            + " is not a vertex");
    }
    std::size_t id = 0;
    for (std::size_t k = w.size(); k-- > 0;) {
      id = left(w[k], id);
    }
    return id;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relations
  ////////////////////////////////////////////////////////////////////////

  bool RelationReport::all_passed() const noexcept {
    return failures() == 0;
  }

  std::size_t RelationReport::failures() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        checks.begin(), checks.end(), [](auto const& c) { return !c.passed; }));
  }

  std::string to_string(RelationKind kind) {
    switch (kind) {
      case RelationKind::idempotent:
        return "idempotent";
      case RelationKind::edge:
        return "edge";
      case RelationKind::commute:
        return "commute";
    }
    return "unknown";
  }

  RelationReport check_hk_relations(UpdateSystem const& sys, Limits const& limits) {
    std::vector<DynamicsMap> F;
    for (Vertex v = 1; v <= sys.n(); ++v) {
      F.push_back(local_map(sys, v, limits));
    }
    auto const&    g = sys.graph();
    RelationReport report;
    for (Vertex i = 1; i <= sys.n(); ++i) {
      auto const& Fi = F[i - 1];
      report.checks.push_back(
          {RelationKind::idempotent, i, i, compose(Fi, Fi) == Fi});
    }
    for (Vertex i = 1; i <= sys.n(); ++i) {
      for (Vertex j = 1; j <= sys.n(); ++j) {
        auto const& Fi = F[i - 1];
        auto const& Fj = F[j - 1];
        if (g.has_edge(i, j)) {
          auto ij  = compose(Fi, Fj);
          bool ok  = compose(ij, Fi) == ij && compose(Fj, compose(Fi, Fj)) == ij;
          report.checks.push_back({RelationKind::edge, i, j, ok});
        } else if (i < j && !g.adjacent(i, j)) {
          report.checks.push_back(
              {RelationKind::commute, i, j, compose(Fi, Fj) == compose(Fj, Fi)});
        }
      }
    }
    return report;
  }

  UpdateSystem random_update_system(Dag const&    dag,
                                    std::size_t   max_states,
                                    std::uint64_t seed) {
    if (max_states == 0) {
      throw InvalidArgument("max_states must be >= 1");
    }
    std::mt19937_64                       rng(seed);
    std::vector<std::vector<std::string>> names(dag.n());
    for (auto& set : names) {
      std::uniform_int_distribution<std::size_t> size(1, max_states);
      std::size_t                                m = size(rng);
      for (std::size_t k = 0; k < m; ++k) {
        set.push_back(std::to_string(k));
      }
    }
    std::vector<std::vector<std::size_t>> tables(dag.n());
    for (Vertex v = 1; v <= dag.n(); ++v) {
      std::size_t count = 1;
      for (Vertex j : dag.out_neighbors(v)) {
        count *= names[j - 1].size();
      }
      std::uniform_int_distribution<std::size_t> out(0, names[v - 1].size() - 1);
      for (std::size_t k = 0; k < count; ++k) {
        tables[v - 1].push_back(out(rng));
      }
    }
    return UpdateSystem(dag, std::move(names), std::move(tables));
  }

}  // namespace ksds
