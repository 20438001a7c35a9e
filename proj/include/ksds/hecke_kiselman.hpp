// Hecke-Kiselman monoids of finite directed acyclic graphs.
//
// HK_G is generated by idempotents a_v, v a vertex of G, with
//   a_i a_j a_i = a_j a_i a_j = a_i a_j   for every edge i -> j,
//   a_i a_j = a_j a_i                     for non-adjacent i, j.
// Its elements are computed twice, by two unrelated methods which must agree:
//
// - closure: union-find over all words of length <= L merging words that
//   differ by one relation, with L grown until the classes reachable from
//   the identity and their right action are the same at L and L + 2;
// - quotient: after relabelling G topologically, HK_G is the quotient of
//   K_n by the commutations of non-adjacent letters; the congruence they
//   generate is closed over the Cayley tables of K_n.

#ifndef KSDS_HECKE_KISELMAN_HPP_
#define KSDS_HECKE_KISELMAN_HPP_

#include <cstddef>
#include <vector>

#include "ksds/dag.hpp"
#include "ksds/word.hpp"

namespace ksds {

  //! A DAG together with a topological relabelling: internally vertex
  //! labels satisfy i -> j => i < j. Reports use the original labels.
  class HkPresentation {
   public:
    explicit HkPresentation(Dag graph);

    Dag const& graph() const noexcept {
      return graph_;
    }
    Dag const& relabeled() const noexcept {
      return relabeled_;
    }
    [[nodiscard]] std::size_t n() const noexcept {
      return graph_.n();
    }
    Vertex to_internal(Vertex v) const {
      return internal_.at(v - 1);
    }
    Vertex to_external(Vertex v) const {
      return external_.at(v - 1);
    }
    Word to_internal(Word const& w) const;
    Word to_external(Word const& w) const;

   private:
    Dag                 graph_;
    Dag                 relabeled_;
    std::vector<Vertex> internal_;
    std::vector<Vertex> external_;
  };

  //! Elements of HK_G with their right action. Class 0 is the identity.
  struct HkClasses {
    std::size_t n = 0;
    //! Shortlex-least representative of each class, in internal labels.
    std::vector<Word> representatives;
    //! action[c][a - 1] is the class of (representative of c) * a_a, with a
    //! an internal label.
    std::vector<std::vector<std::size_t>> action;
    //! Word-length bound at which the closure stabilised (0 for the
    //! quotient method).
    std::size_t bound = 0;

    [[nodiscard]] std::size_t size() const noexcept {
      return representatives.size();
    }
  };

  struct HkOptions {
    std::size_t max_vertices = 6;
    std::size_t max_words    = 40'000'000;  // closure universe
    std::size_t first_bound  = 4;
  };

  //! Closure method. Throws GuardExceeded when the word universe would grow
  //! past options.max_words before stabilising.
  HkClasses enumerate_hk_closure(HkPresentation const& pres,
                                 HkOptions const&      options = {});

  //! Quotient method: the class count and, for each element of K_n (in
  //! KnMonoid order), its class.
  struct HkQuotient {
    std::size_t              size = 0;
    std::vector<std::size_t> class_of;
  };

  HkQuotient enumerate_hk_quotient(HkPresentation const& pres,
                                   HkOptions const&      options = {});

  //! Runs both methods and checks that they describe the same monoid (equal
  //! sizes, representatives pairwise distinct in the quotient, compatible
  //! right actions); throws Error if they disagree.
  HkClasses enumerate_hk(HkPresentation const& pres, HkOptions const& options = {});

  //! Class of w (original labels), by folding w through the right action.
  std::size_t hk_element_of(Word const&           w,
                            HkClasses const&      classes,
                            HkPresentation const& pres);

}  // namespace ksds

#endif  // KSDS_HECKE_KISELMAN_HPP_
