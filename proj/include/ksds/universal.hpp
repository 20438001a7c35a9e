// The universal update system S_n^* on the complete acyclic graph Gamma_n.
//
// States are words. Vertex n only ever holds the empty word or a_n, and
// vertex i < n holds the empty word or a_i [s_n, [..., [s_{i+2}, s_{i+1}]...]],
// where [u, v] is the join. Starting from the all-empty state, the
// evolution along w leaves Can_{i..n}(T_i w) on vertex i, and folding these
// states with the join recovers Can w, so D(S_n^*) is isomorphic to K_n.

#ifndef KSDS_UNIVERSAL_HPP_
#define KSDS_UNIVERSAL_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ksds/sds.hpp"
#include "ksds/word.hpp"

namespace ksds {

  //! [s_m, [..., [s_2, s_1]...]] for states = (s_1, ..., s_m); the empty
  //! word for an empty sequence.
  Word fold_join(std::span<Word const> states);

  class UniversalSystem {
   public:
    static constexpr std::size_t default_max_n = 6;

    [[nodiscard]] std::size_t n() const noexcept {
      return system_.n();
    }
    UpdateSystem const& system() const noexcept {
      return system_;
    }
    //! S_v as words, in the order used by the underlying system.
    std::vector<Word> const& states(Vertex v) const {
      return words_.at(v - 1);
    }
    std::size_t state_index(Vertex v, Word const& w) const;
    Word const& state_word(Vertex v, std::size_t k) const {
      return words_.at(v - 1).at(k);
    }

    //! The all-empty state.
    SystemState star() const;
    //! The words held by each vertex in s.
    std::vector<Word> words_of(SystemState const& s) const;

    //! Number of states of each S_v that occur in some F_w(star).
    std::vector<std::size_t> reachable_counts() const;

    friend UniversalSystem build_universal(std::size_t n,
                                           std::size_t max_n,
                                           std::size_t max_states_per_vertex);

   private:
    UpdateSystem                                                  system_;
    std::vector<std::vector<Word>>                                words_;
    std::vector<std::unordered_map<Word, std::size_t, WordHash>> index_;
  };

  //! Builds S_n^* with state sets materialised exactly as the inductive
  //! definition dictates. Throws InvalidArgument if n == 0 and
  //! GuardExceeded if n > max_n or some state set grows past
  //! max_states_per_vertex.
  UniversalSystem build_universal(std::size_t n,
                                  std::size_t max_n = UniversalSystem::default_max_n,
                                  std::size_t max_states_per_vertex = 100'000);

  //! p_i = Can_{i..n}(T_i w) for i = 1..n.
  struct PredictedState {
    std::vector<Word> p;

    friend bool operator==(PredictedState const&, PredictedState const&) = default;
  };

  PredictedState predicted_state(Word const& w, std::size_t n);

  //! [p_k, [..., [p_2, p_1]...]].
  Word partial_fold(PredictedState const& p, std::size_t k);

  //! [p_n, [..., [p_2, p_1]...]]; equals Can w when p is the state reached
  //! from star along w.
  Word reconstruct_canonical(PredictedState const& p);

  enum class TheoremCheck {
    evolved_state,     // F_w(star) differs from the predicted state
    reconstruction,    // the full fold differs from Can w
    partial_fold       // some partial fold differs from T_{1..k}(Can w)
  };

  std::string to_string(TheoremCheck check);

  struct Counterexample {
    Word         word;
    TheoremCheck check;
    std::size_t  k = 0;  // for partial_fold
  };

  struct TheoremReport {
    std::size_t                 n       = 0;
    std::size_t                 checked = 0;
    std::vector<Counterexample> counterexamples;

    [[nodiscard]] bool ok() const noexcept {
      return counterexamples.empty();
    }
  };

  //! Checks one word; returns the first failing check, if any.
  std::optional<Counterexample> check_theorem(UniversalSystem const& sys,
                                              Word const&            w);

  //! Checks every word produced by `next` until it returns false.
  //! At most `max_reported` counterexamples are kept.
  TheoremReport verify_theorem(UniversalSystem const&            sys,
                               std::function<bool(Word&)> const& next,
                               std::size_t                       max_reported = 20);

  //! Every word over 1..n of length at most max_length.
  TheoremReport verify_theorem_exhaustive(UniversalSystem const& sys,
                                          std::size_t            max_length);

  //! `count` words with uniformly random length in 0..max_length and
  //! uniformly random letters, from std::mt19937_64(seed).
  TheoremReport verify_theorem_random(UniversalSystem const& sys,
                                      std::size_t            count,
                                      std::size_t            max_length,
                                      std::uint64_t          seed);

  struct IsomorphismReport {
    std::size_t n              = 0;
    std::size_t kn_size        = 0;
    std::size_t dynamics_size  = 0;
    std::size_t sampled        = 0;
    std::size_t inconsistent   = 0;  // sampled words violating F_u = F_v <=> Can u = Can v

    [[nodiscard]] bool ok() const noexcept {
      return kn_size == dynamics_size && inconsistent == 0;
    }
  };

  //! Compares |D(S_n^*)| with |K_n| and checks, over `samples` random words
  //! plus the witnesses of every element of D(S_n^*), that two words have
  //! the same evolution exactly when they have the same canonical form.
  IsomorphismReport verify_isomorphism(std::size_t   n,
                                       std::size_t   samples = 2000,
                                       std::uint64_t seed    = 0,
                                       Limits const& limits  = {});

}  // namespace ksds

#endif  // KSDS_UNIVERSAL_HPP_
