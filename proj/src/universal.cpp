#include "ksds/universal.hpp"

#include <random>
#include <unordered_set>

#include "ksds/errors.hpp"
#include "ksds/kiselman.hpp"

namespace ksds {

  Word fold_join(std::span<Word const> states) {
    if (states.empty()) {
      return Word();
    }
    Word acc = states[0];
    for (std::size_t k = 1; k < states.size(); ++k) {
      acc = join(states[k], acc);
    }
    return acc;
  }

  std::size_t UniversalSystem::state_index(Vertex v, Word const& w) const {
    auto const& idx = index_.at(v - 1);
    auto        it  = idx.find(w);
    if (it == idx.end()) {
      throw InvalidArgument(to_string(w) + " is not a state of vertex "
                            + std::to_string(v));
    }
    return it->second;
  }

  SystemState UniversalSystem::star() const {
    // The empty word is always listed first.
    return system_.first_state();
  }

  std::vector<Word> UniversalSystem::words_of(SystemState const& s) const {
    std::vector<Word> result;
    for (Vertex v = 1; v <= n(); ++v) {
      result.push_back(state_word(v, s[v]));
    }
    return result;
  }

  std::vector<std::size_t> UniversalSystem::reachable_counts() const {
    std::vector<std::unordered_set<std::size_t>> per_vertex(n());
    std::unordered_set<std::size_t>              seen;
    std::vector<SystemState>                     queue{star()};
    seen.insert(system_.encode(star()));
    for (std::size_t x = 0; x < queue.size(); ++x) {
      SystemState const s = queue[x];
      for (Vertex v = 1; v <= n(); ++v) {
        per_vertex[v - 1].insert(s[v]);
      }
      for (Vertex v = 1; v <= n(); ++v) {
        SystemState t   = s;
        t.values[v - 1] = system_.evaluate(v, s);
        if (seen.insert(system_.encode(t)).second) {
          queue.push_back(std::move(t));
        }
      }
    }
    std::vector<std::size_t> counts;
    for (auto const& set : per_vertex) {
      counts.push_back(set.size());
    }
    return counts;
  }

  UniversalSystem build_universal(std::size_t n,
                                  std::size_t max_n,
                                  std::size_t max_states_per_vertex) {
    if (n == 0) {
      throw InvalidArgument("S_n^* needs n >= 1");
    }
    if (n > max_n) {
      throw GuardExceeded("building S_" + std::to_string(n)
                          + "^* exceeds the configured maximum n = "
                          + std::to_string(max_n));
    }
    UniversalSystem result;
    result.words_.resize(n);
    result.index_.resize(n);
    std::vector<std::vector<std::size_t>> tables(n);
    std::size_t const max_tuples = 100 * max_states_per_vertex;

    for (Vertex v = n; v >= 1; --v) {
      auto& words = result.words_[v - 1];
      auto& index = result.index_[v - 1];
      words.push_back(Word());
      index.emplace(Word(), 0);

      std::size_t tuples = 1;
      for (Vertex j = v + 1; j <= n; ++j) {
        tuples *= result.words_[j - 1].size();
        if (tuples > max_tuples) {
          throw GuardExceeded("vertex " + std::to_string(v) + " of S_"
                              + std::to_string(n) + "^* has more than "
                              + std::to_string(max_tuples) + " argument tuples");
        }
      }
      // Argument tuples in lexicographic order, vertex v + 1 most significant.
      std::vector<std::size_t> digits(n - v, 0);
      std::vector<Word>        args(n - v);
      for (std::size_t t = 0; t < tuples; ++t) {
        for (std::size_t p = 0; p < digits.size(); ++p) {
          args[p] = result.words_[v + p][digits[p]];
        }
        Word out            = static_cast<Letter>(v) + fold_join(args);
        auto [it, inserted] = index.emplace(out, words.size());
        if (inserted) {
          words.push_back(std::move(out));
          if (words.size() > max_states_per_vertex) {
            throw GuardExceeded("vertex " + std::to_string(v) + " of S_"
                                + std::to_string(n) + "^* has more than "
                                + std::to_string(max_states_per_vertex)
                                + " states");
          }
        }
        tables[v - 1].push_back(it->second);
        for (std::size_t p = digits.size(); p-- > 0;) {
          if (++digits[p] < result.words_[v + p].size()) {
            break;
          }
          digits[p] = 0;
        }
      }
    }

    std::vector<std::vector<std::string>> names(n);
    for (Vertex v = 1; v <= n; ++v) {
      for (auto const& w : result.words_[v - 1]) {
        names[v - 1].push_back(to_string(w));
      }
    }
    result.system_ = UpdateSystem(Dag::complete(n), std::move(names), std::move(tables));
    return result;
  }

  PredictedState predicted_state(Word const& w, std::size_t n) {
    PredictedState result;
    for (Letter i = 1; i <= n; ++i) {
      result.p.push_back(canonical_form_restricted(truncate(w, i), i));
    }
    return result;
  }

  Word partial_fold(PredictedState const& p, std::size_t k) {
    return fold_join(std::span<Word const>(p.p).first(k));
  }

  Word reconstruct_canonical(PredictedState const& p) {
    return fold_join(p.p);
  }

  std::string to_string(TheoremCheck check) {
    switch (check) {
      case TheoremCheck::evolved_state:
        return "evolved_state";
      case TheoremCheck::reconstruction:
        return "reconstruction";
      case TheoremCheck::partial_fold:
        return "partial_fold";
    }
    return "unknown";
  }

  std::optional<Counterexample> check_theorem(UniversalSystem const& sys,
                                              Word const&            w) {
    std::size_t const n = sys.n();
    PredictedState    evolved{sys.words_of(evolve(sys.system(), w, sys.star()))};
    if (evolved != predicted_state(w, n)) {
      return Counterexample{w, TheoremCheck::evolved_state};
    }
    Word const can = canonical_form(w);
    if (reconstruct_canonical(evolved) != can) {
      return Counterexample{w, TheoremCheck::reconstruction};
    }
    for (std::size_t k = 1; k <= n; ++k) {
      if (partial_fold(evolved, k)
          != truncate_set(can, LetterSet::range(1, static_cast<Letter>(k)))) {
        return Counterexample{w, TheoremCheck::partial_fold, k};
      }
    }
    return std::nullopt;
  }

  TheoremReport verify_theorem(UniversalSystem const&            sys,
                               std::function<bool(Word&)> const& next,
                               std::size_t                       max_reported) {
    TheoremReport report;
    report.n = sys.n();
    Word w;
    while (next(w)) {
      ++report.checked;
      if (auto bad = check_theorem(sys, w)) {
        if (report.counterexamples.size() < max_reported) {
          report.counterexamples.push_back(std::move(*bad));
        }
      }
    }
    return report;
  }

  TheoremReport verify_theorem_exhaustive(UniversalSystem const& sys,
                                          std::size_t            max_length) {
    std::size_t const   n = sys.n();
    std::size_t         length = 0;
    std::vector<Letter> current;
    bool                started = false;
    // Odometer over words of each length in turn.
    auto next = [&](Word& out) {
      if (!started) {
        started = true;
      } else {
        std::size_t p = current.size();
        while (p > 0 && current[p - 1] == n) {
          current[--p] = 1;
        }
        if (p == 0) {
          if (++length > max_length) {
            return false;
          }
          current.assign(length, 1);
        } else {
          ++current[p - 1];
        }
      }
      out = Word(current);
      return true;
    };
    return verify_theorem(sys, next);
  }

  TheoremReport verify_theorem_random(UniversalSystem const& sys,
                                      std::size_t            count,
                                      std::size_t            max_length,
                                      std::uint64_t          seed) {
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> length(0, max_length);
    std::uniform_int_distribution<Letter> letter(1, static_cast<Letter>(sys.n()));
    std::size_t                           produced = 0;
    auto next = [&](Word& out) {
      if (produced++ == count) {
        return false;
      }
      std::vector<Letter> letters(length(rng));
      for (auto& a : letters) {
        a = letter(rng);
      }
      out = Word(std::move(letters));
      return true;
    };
    return verify_theorem(sys, next);
  }

  IsomorphismReport verify_isomorphism(std::size_t   n,
                                       std::size_t   samples,
                                       std::uint64_t seed,
                                       Limits const& limits) {
    IsomorphismReport report;
    report.n = n;
    KnMonoid       kn(n);
    auto const     sys = build_universal(n);
    DynamicsMonoid dynamics(sys.system(), limits);
    report.kn_size       = kn.size();
    report.dynamics_size = dynamics.size();

    std::unordered_map<std::size_t, Word>             can_of_map;
    std::unordered_map<Word, std::size_t, WordHash>   map_of_can;
    auto record = [&](Word const& w) {
      ++report.sampled;
      std::size_t id  = dynamics.id_of(w);
      Word        can = canonical_form(w);
      auto [a, new_map] = can_of_map.emplace(id, can);
      auto [b, new_can] = map_of_can.emplace(can, id);
      if (a->second != can || b->second != id) {
        ++report.inconsistent;
      }
    };
    for (std::size_t id = 0; id < dynamics.size(); ++id) {
      record(dynamics.witness(id));
    }
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> length(0, 3 * n + 2);
    std::uniform_int_distribution<Letter>      letter(1, static_cast<Letter>(n));
    for (std::size_t s = 0; s < samples; ++s) {
      std::vector<Letter> letters(length(rng));
      for (auto& a : letters) {
        a = letter(rng);
      }
      record(Word(std::move(letters)));
    }
    return report;
  }

}  // namespace ksds
