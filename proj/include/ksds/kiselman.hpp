// Canonical words for Kiselman's semigroup K_n.
//
// K_n is the monoid generated by idempotents a_1, ..., a_n subject to
// a_i a_j a_i = a_j a_i a_j = a_i a_j whenever i < j. Every element has a
// unique canonical representative: the word in which every factor a_i u a_i
// is special, i.e. u contains a letter smaller and a letter larger than i.
// The canonical form is reached from any representative by repeatedly
// removing one letter of a pair a_i u a_i that is not special.

#ifndef KSDS_KISELMAN_HPP_
#define KSDS_KISELMAN_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ksds/word.hpp"

namespace ksds {

  //! How a pair a_i u a_i is simplified:
  //! - type1: u is empty, one copy removed (we always remove the right one);
  //! - type2: u only has letters > i, the right copy is removed;
  //! - type3: u only has letters < i, the left copy is removed.
  enum class StepKind { type1, type2, type3 };

  //! A simplifiable pair of equal letters, with 0-based positions.
  struct StepSite {
    std::size_t left;
    std::size_t right;
    StepKind    kind;

    friend bool operator==(StepSite const&, StepSite const&) = default;
  };

  //! Whether the factor w[left..right] (inclusive, 0-based) is special.
  //! Throws InvalidArgument if the endpoints are out of range, not ordered
  //! or carry different letters.
  bool is_special(Word const& w, std::size_t left, std::size_t right);

  //! Whether every factor a_i u a_i of w is special. Only consecutive
  //! occurrences of each letter need checking: a longer factor contains the
  //! segment of a consecutive pair.
  bool is_canonical(Word const& w);

  //! Removes one letter according to `site`. Throws InvalidArgument if the
  //! site does not describe a valid step of its kind in w.
  Word apply_step(Word const& w, StepSite const& site);

  //! Every eligible step of w (consecutive pairs of equal letters whose
  //! segment is empty, all larger or all smaller), ordered by left position.
  std::vector<StepSite> eligible_steps(Word const& w);

  //! The eligible step with the leftmost left endpoint, if any. For a fixed
  //! left endpoint only the next occurrence of the same letter can form a
  //! non-special pair, so this is also the shortest one.
  std::optional<StepSite> find_step(Word const& w);

  //! Can(w): the unique canonical word representing the same element of
  //! K_n as w.
  Word canonical_form(Word const& w);

  //! Can_{k..n}(w) = Can(w with every letter < k deleted).
  Word canonical_form_restricted(Word const& w, Letter k);

  bool same_kn_element(Word const& u, Word const& v);

  //! Can(uv).
  Word kn_multiply(Word const& u, Word const& v);

  //! An element of an enumerated K_n.
  struct KnElement {
    Word        canon;
    std::size_t id;

    friend bool operator==(KnElement const& x, KnElement const& y) {
      return x.canon == y.canon;
    }
  };

  //! The elements of K_n, indexed in order of discovery by a breadth-first
  //! right Cayley closure from the identity, with left and right Cayley
  //! tables. Element 0 is the identity.
  class KnMonoid {
   public:
    static constexpr std::size_t default_max_n = 7;

    //! Throws InvalidArgument if n == 0 and GuardExceeded if n > max_n.
    explicit KnMonoid(std::size_t n, std::size_t max_n = default_max_n);

    [[nodiscard]] std::size_t n() const noexcept {
      return n_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return words_.size();
    }
    KnElement element(std::size_t id) const {
      return KnElement{words_.at(id), id};
    }
    std::vector<Word> const& words() const noexcept {
      return words_;
    }

    //! Id of the element represented by any word over 1..n.
    std::size_t id_of(Word const& w) const;

    //! Id of x * a_letter.
    std::size_t right(std::size_t x, Letter a) const {
      return right_[x][a - 1];
    }
    //! Id of a_letter * x.
    std::size_t left(Letter a, std::size_t x) const {
      return left_[x][a - 1];
    }

    KnElement multiply(KnElement const& x, KnElement const& y) const;

    //! Length of the longest canonical word.
    std::size_t max_length() const noexcept;

   private:
    std::size_t                                       n_;
    std::vector<Word>                                 words_;
    std::unordered_map<Word, std::size_t, WordHash>   index_;
    std::vector<std::vector<std::size_t>>             right_;
    std::vector<std::vector<std::size_t>>             left_;
  };

  inline KnMonoid enumerate_kn(std::size_t n,
                               std::size_t max_n = KnMonoid::default_max_n) {
    return KnMonoid(n, max_n);
  }

  KnElement kn_multiply(KnMonoid const& monoid,
                        KnElement const& x,
                        KnElement const& y);

  //! All canonical words over 1..n of length at most max_length, generated
  //! letter by letter (prefixes of canonical words are canonical), in
  //! shortlex order.
  std::vector<Word> canonical_words(std::size_t n, std::size_t max_length);

}  // namespace ksds

#endif  // KSDS_KISELMAN_HPP_
