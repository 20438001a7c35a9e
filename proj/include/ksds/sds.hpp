// Update systems and sequential dynamical systems on directed acyclic
// graphs.
//
// An update system attaches to each vertex i a finite state set S_i and a
// vertex function f_i : S[i] -> S_i, where S[i] is the product of the state
// sets of the out-neighbours of i (in ascending vertex order). The local
// function F_i rewrites coordinate i of a system state with f_i applied to
// its out-neighbours. A word w = i_1 ... i_k acts as F_w = F_{i_1} ... F_{i_k},
// so its last letter acts first.

#ifndef KSDS_SDS_HPP_
#define KSDS_SDS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "ksds/dag.hpp"
#include "ksds/word.hpp"

namespace ksds {

  struct Limits {
    std::size_t max_states   = 1'000'000;  // |S|
    std::size_t max_elements = 1'000'000;  // |D(S)|
  };

  //! One state index per vertex; entry v - 1 indexes into S_v.
  struct SystemState {
    std::vector<std::size_t> values;

    std::size_t operator[](Vertex v) const {
      return values[v - 1];
    }
    friend bool operator==(SystemState const&, SystemState const&) = default;
  };

  class UpdateSystem {
   public:
    UpdateSystem() = default;

    //! `tables[v - 1][k]` is the index in S_v of f_v applied to the k-th
    //! tuple of S[v], tuples being enumerated lexicographically with the
    //! smallest out-neighbour most significant. Throws InvalidArgument if a
    //! state set is empty or has repeated names, or a table has the wrong
    //! length or an output outside S_v.
    UpdateSystem(Dag                                   graph,
                 std::vector<std::vector<std::string>> state_names,
                 std::vector<std::vector<std::size_t>> tables);

    Dag const& graph() const noexcept {
      return graph_;
    }
    [[nodiscard]] std::size_t n() const noexcept {
      return graph_.n();
    }
    [[nodiscard]] std::size_t num_states(Vertex v) const {
      return names_.at(v - 1).size();
    }
    std::vector<std::string> const& state_names(Vertex v) const {
      return names_.at(v - 1);
    }
    std::string const& state_name(Vertex v, std::size_t k) const {
      return names_.at(v - 1).at(k);
    }
    //! Throws InvalidArgument if `name` is not a state of S_v.
    std::size_t state_index(Vertex v, std::string const& name) const;
    std::vector<std::size_t> const& table(Vertex v) const {
      return tables_.at(v - 1);
    }

    //! |S[v]|.
    [[nodiscard]] std::size_t argument_count(Vertex v) const;
    //! The k-th tuple of S[v], one state index per out-neighbour.
    std::vector<std::size_t> argument_tuple(Vertex v, std::size_t k) const;
    //! Position of s[v] among the tuples of S[v].
    std::size_t argument_index(Vertex v, SystemState const& s) const;
    //! f_v(s[v]).
    std::size_t evaluate(Vertex v, SystemState const& s) const;

    //! |S|; throws GuardExceeded if it exceeds `limit`.
    std::size_t state_space_size(std::size_t limit) const;
    //! Mixed-radix index of s with vertex 1 most significant.
    std::size_t encode(SystemState const& s) const;
    SystemState decode(std::size_t index) const;

    //! Throws InvalidArgument if s has the wrong length or a value outside
    //! its state set.
    void validate(SystemState const& s) const;

    //! Every vertex in its first listed state.
    SystemState first_state() const {
      return SystemState{std::vector<std::size_t>(n(), 0)};
    }

    std::string render(SystemState const& s) const;

   private:
    Dag                                   graph_;
    std::vector<std::vector<std::string>> names_;
    std::vector<std::vector<std::size_t>> tables_;
  };

  //! F_v(s): only coordinate v changes.
  SystemState local_apply(UpdateSystem const& sys,
                          Vertex              v,
                          SystemState const&  s);

  //! F_w(s) = F_{w_1}(F_{w_2}(... F_{w_k}(s))).
  SystemState evolve(UpdateSystem const& sys,
                     Word const&         w,
                     SystemState const&  s);

  //! A map S -> S given by the images of the encoded system states.
  struct DynamicsMap {
    std::vector<std::uint32_t> table;

    friend bool operator==(DynamicsMap const&, DynamicsMap const&) = default;
  };

  struct DynamicsMapHash {
    std::size_t operator()(DynamicsMap const& f) const noexcept;
  };

  DynamicsMap identity_map(std::size_t size);
  //! F_v as a table over the whole state space.
  DynamicsMap local_map(UpdateSystem const& sys,
                        Vertex              v,
                        Limits const&       limits = {});
  //! f after g, i.e. x -> f(g(x)).
  DynamicsMap compose(DynamicsMap const& f, DynamicsMap const& g);

  //! D(S): every evolution F_w, interned, with one witness word each and the
  //! left action of the local functions. Element 0 is the identity.
  class DynamicsMonoid {
   public:
    DynamicsMonoid(UpdateSystem const& sys, Limits const& limits = {});

    [[nodiscard]] std::size_t size() const noexcept {
      return maps_.size();
    }
    DynamicsMap const& map(std::size_t id) const {
      return maps_.at(id);
    }
    //! A shortest word w with F_w equal to element `id`.
    Word const& witness(std::size_t id) const {
      return witnesses_.at(id);
    }
    //! Id of F_v composed after element `id`.
    std::size_t left(Vertex v, std::size_t id) const {
      return left_[id][v - 1];
    }
    //! Id of F_w.
    std::size_t id_of(Word const& w) const;
    [[nodiscard]] std::size_t state_space_size() const noexcept {
      return state_space_size_;
    }

   private:
    std::size_t                           n_                = 0;
    std::size_t                           state_space_size_ = 0;
    std::vector<DynamicsMap>              maps_;
    std::vector<Word>                     witnesses_;
    std::vector<std::vector<std::size_t>> left_;
  };

  inline DynamicsMonoid dynamics_monoid(UpdateSystem const& sys,
                                        Limits const&       limits = {}) {
    return DynamicsMonoid(sys, limits);
  }

  enum class RelationKind {
    idempotent,  // F_i F_i = F_i
    edge,        // F_i F_j F_i = F_j F_i F_j = F_i F_j for i -> j
    commute      // F_i F_j = F_j F_i for i, j not adjacent
  };

  struct RelationCheck {
    RelationKind kind;
    Vertex       i;
    Vertex       j;  // equal to i for idempotent
    bool         passed;
  };

  struct RelationReport {
    std::vector<RelationCheck> checks;

    [[nodiscard]] bool all_passed() const noexcept;
    [[nodiscard]] std::size_t failures() const noexcept;
  };

  std::string to_string(RelationKind kind);

  //! Checks, as equalities of maps, every defining relation of the
  //! Hecke-Kiselman monoid of the underlying graph.
  RelationReport check_hk_relations(UpdateSystem const& sys,
                                    Limits const&       limits = {});

  //! State-set sizes uniform in 1..max_states, tables uniform, both drawn
  //! from a std::mt19937_64 seeded with `seed`. State names are "0", "1", ...
  UpdateSystem random_update_system(Dag const&    dag,
                                    std::size_t   max_states,
                                    std::uint64_t seed);

}  // namespace ksds

#endif  // KSDS_SDS_HPP_
