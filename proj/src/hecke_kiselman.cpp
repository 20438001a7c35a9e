#include "ksds/hecke_kiselman.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>

#include "ksds/errors.hpp"
#include "ksds/kiselman.hpp"

namespace ksds {

  namespace {

    void check_size(Dag const& g, HkOptions const& options) {
      if (g.n() == 0) {
        throw InvalidArgument("HK_G needs at least one vertex");
      }
      if (g.n() > options.max_vertices) {
        throw GuardExceeded("graphs with more than "
                            + std::to_string(options.max_vertices)
                            + " vertices are not supported");
      }
    }

    // Union-find whose roots are always the smallest index of their class.
    class MinUnionFind {
     public:
      explicit MinUnionFind(std::size_t size) : parent_(size) {
        for (std::size_t x = 0; x < size; ++x) {
          parent_[x] = static_cast<std::uint32_t>(x);
        }
      }

      std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
          parent_[x] = parent_[parent_[x]];
          x          = parent_[x];
        }
        return x;
      }

      bool unite(std::uint32_t x, std::uint32_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (x < y) {
          parent_[y] = x;
        } else {
          parent_[x] = y;
        }
        return true;
      }

     private:
      std::vector<std::uint32_t> parent_;
    };

    // All words of length <= L over 1..n, indexed in shortlex order.
    class WordUniverse {
     public:
      WordUniverse(std::size_t n, std::size_t bound) : n_(n), offset_(bound + 2, 0) {
        std::size_t count = 1;
        for (std::size_t len = 0; len <= bound; ++len) {
          offset_[len + 1] = offset_[len] + count;
          count *= n;
        }
      }

      [[nodiscard]] std::size_t size() const noexcept {
        return offset_.back();
      }

      std::uint32_t index(Letter const* letters, std::size_t len) const {
        std::size_t value = 0;
        for (std::size_t p = 0; p < len; ++p) {
          value = value * n_ + (letters[p] - 1);
        }
        return static_cast<std::uint32_t>(offset_[len] + value);
      }

      Word decode(std::size_t index) const {
        std::size_t len = 0;
        while (offset_[len + 1] <= index) {
          ++len;
        }
        std::size_t         value = index - offset_[len];
        std::vector<Letter> letters(len);
        for (std::size_t p = len; p-- > 0;) {
          letters[p] = static_cast<Letter>(value % n_ + 1);
          value /= n_;
        }
        return Word(std::move(letters));
      }

      static std::size_t count(std::size_t n, std::size_t bound) {
        std::size_t total = 0, power = 1;
        for (std::size_t len = 0; len <= bound; ++len) {
          total += power;
          power *= n;
        }
        return total;
      }

     private:
      std::size_t              n_;
      std::vector<std::size_t> offset_;
    };

    // Merges every pair of words of length <= bound that differ by one
    // application of a defining relation, then explores the classes
    // reachable from the identity by right multiplication. Returns nullopt
    // if some representative is too long to be extended within the bound.
    std::optional<HkClasses> close_at_bound(Dag const& g, std::size_t bound) {
      std::size_t const n = g.n();
      WordUniverse      universe(n, bound);
      MinUnionFind      uf(universe.size());

      std::vector<std::vector<bool>> adjacent(n + 1, std::vector<bool>(n + 1));
      std::vector<std::vector<bool>> edge(n + 1, std::vector<bool>(n + 1));
      for (Vertex i = 1; i <= n; ++i) {
        for (Vertex j = 1; j <= n; ++j) {
          if (i != j) {
            edge[i][j]     = g.has_edge(i, j);
            adjacent[i][j] = g.adjacent(i, j);
          }
        }
      }

      std::vector<Letter> w, tmp;
      std::uint32_t       idx = 0;
      for (std::size_t len = 0; len <= bound; ++len) {
        w.assign(len, 1);
        while (true) {
          // Only moves from the longer (or equal-length) side are needed:
          // every relation pair is visited from its longer word.
          for (std::size_t p = 0; p + 1 < len; ++p) {
            Letter a = w[p], b = w[p + 1];
            if (a == b) {
              tmp = w;
              tmp.erase(tmp.begin() + p + 1);
              uf.unite(idx, universe.index(tmp.data(), tmp.size()));
            } else if (!adjacent[a][b]) {
              tmp = w;
              std::swap(tmp[p], tmp[p + 1]);
              uf.unite(idx, universe.index(tmp.data(), tmp.size()));
            }
          }
          for (std::size_t p = 0; p + 2 < len; ++p) {
            Letter a = w[p], b = w[p + 1];
            if (w[p + 2] != a || a == b) {
              continue;
            }
            if (edge[a][b]) {
              // a b a = a b
              tmp = w;
              tmp.erase(tmp.begin() + p + 2);
              uf.unite(idx, universe.index(tmp.data(), tmp.size()));
            } else if (edge[b][a]) {
              // a b a = b a
              tmp = w;
              tmp.erase(tmp.begin() + p);
              uf.unite(idx, universe.index(tmp.data(), tmp.size()));
            }
          }
          ++idx;
          std::size_t p = len;
          while (p > 0 && w[p - 1] == n) {
            w[--p] = 1;
          }
          if (p == 0) {
            break;
          }
          ++w[p - 1];
        }
      }

      HkClasses                                    classes;
      classes.n     = n;
      classes.bound = bound;
      std::unordered_map<std::uint32_t, std::size_t> class_of_root;
      class_of_root.emplace(uf.find(0), 0);
      classes.representatives.push_back(Word());
      for (std::size_t c = 0; c < classes.representatives.size(); ++c) {
        Word const rep = classes.representatives[c];
        if (rep.size() >= bound) {
          return std::nullopt;
        }
        std::vector<std::size_t> row(n);
        for (Letter a = 1; a <= n; ++a) {
          Word          next = rep + Word{a};
          std::uint32_t root = uf.find(universe.index(next.letters().data(), next.size()));
          auto [it, inserted] = class_of_root.emplace(root, classes.representatives.size());
          if (inserted) {
            classes.representatives.push_back(universe.decode(root));
          }
          row[a - 1] = it->second;
        }
        classes.action.push_back(std::move(row));
      }
      return classes;
    }

  }  // namespace

  HkPresentation::HkPresentation(Dag graph) : graph_(std::move(graph)) {
    auto order = graph_.topological_order();
    internal_.resize(n());
    external_.resize(n());
    for (std::size_t k = 0; k < order.size(); ++k) {
      internal_[order[k] - 1] = k + 1;
      external_[k]            = order[k];
    }
    std::vector<Edge> edges;
    for (auto [i, j] : graph_.edges()) {
      edges.emplace_back(to_internal(i), to_internal(j));
    }
    relabeled_ = Dag(n(), std::move(edges));
  }

  Word HkPresentation::to_internal(Word const& w) const {
    std::vector<Letter> letters;
    for (Letter a : w) {
      letters.push_back(static_cast<Letter>(to_internal(static_cast<Vertex>(a))));
    }
    return Word(std::move(letters));
  }

  Word HkPresentation::to_external(Word const& w) const {
    std::vector<Letter> letters;
    for (Letter a : w) {
      letters.push_back(static_cast<Letter>(to_external(static_cast<Vertex>(a))));
    }
    return Word(std::move(letters));
  }

  HkClasses enumerate_hk_closure(HkPresentation const& pres, HkOptions const& options) {
    Dag const& g = pres.relabeled();
    check_size(g, options);
    std::optional<HkClasses> previous;
    for (std::size_t bound = options.first_bound;; bound += 2) {
      if (WordUniverse::count(g.n(), bound) > options.max_words) {
        throw GuardExceeded("the closure did not stabilise before the word "
                            "universe exceeded "
                            + std::to_string(options.max_words) + " words");
      }
      auto current = close_at_bound(g, bound);
      if (previous && current
          && previous->representatives == current->representatives
          && previous->action == current->action) {
        current->bound = previous->bound;
        return *current;
      }
      previous = std::move(current);
    }
  }

  HkQuotient enumerate_hk_quotient(HkPresentation const& pres, HkOptions const& options) {
    Dag const& g = pres.relabeled();
    check_size(g, options);
    std::size_t const n = g.n();
    KnMonoid          kn(n, options.max_vertices);

    std::vector<std::size_t> parent(kn.size());
    for (std::size_t x = 0; x < parent.size(); ++x) {
      parent[x] = x;
    }
    auto find = [&parent](std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    std::vector<std::pair<std::size_t, std::size_t>> pending;
    auto unite = [&](std::size_t x, std::size_t y) {
      std::size_t rx = find(x), ry = find(y);
      if (rx != ry) {
        parent[std::max(rx, ry)] = std::min(rx, ry);
        pending.emplace_back(x, y);
      }
    };

    // Seeds: swap each adjacent pair of commuting letters inside every
    // canonical representative and re-canonicalise.
    for (std::size_t x = 0; x < kn.size(); ++x) {
      Word const& w = kn.words()[x];
      for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        if (w[p] != w[p + 1] && !g.adjacent(w[p], w[p + 1])) {
          std::vector<Letter> swapped(w.begin(), w.end());
          std::swap(swapped[p], swapped[p + 1]);
          unite(x, kn.id_of(Word(std::move(swapped))));
        }
      }
    }
    // Saturate under left and right multiplication by generators.
    while (!pending.empty()) {
      auto [x, y] = pending.back();
      pending.pop_back();
      for (Letter a = 1; a <= n; ++a) {
        unite(kn.right(x, a), kn.right(y, a));
        unite(kn.left(a, x), kn.left(a, y));
      }
    }

    HkQuotient                                   result;
    std::unordered_map<std::size_t, std::size_t> class_of_root;
    for (std::size_t x = 0; x < kn.size(); ++x) {
      auto [it, inserted] = class_of_root.emplace(find(x), class_of_root.size());
      result.class_of.push_back(it->second);
    }
    result.size = class_of_root.size();
    return result;
  }

  HkClasses enumerate_hk(HkPresentation const& pres, HkOptions const& options) {
    HkClasses  closure  = enumerate_hk_closure(pres, options);
    HkQuotient quotient = enumerate_hk_quotient(pres, options);
    auto fail = [&](std::string const& what) {
      throw Error("HK enumeration methods disagree (" + what + "): closure found "
                  + std::to_string(closure.size()) + " elements, quotient "
                  + std::to_string(quotient.size));
    };
    if (closure.size() != quotient.size) {
      fail("sizes");
    }
    KnMonoid                 kn(pres.n(), options.max_vertices);
    std::vector<std::size_t> image(closure.size());
    std::vector<bool>        hit(quotient.size, false);
    for (std::size_t c = 0; c < closure.size(); ++c) {
      image[c] = quotient.class_of[kn.id_of(closure.representatives[c])];
      if (hit[image[c]]) {
        fail("two closure classes are equal in the quotient");
      }
      hit[image[c]] = true;
    }
    for (std::size_t c = 0; c < closure.size(); ++c) {
      for (Letter a = 1; a <= closure.n; ++a) {
        Word product = closure.representatives[c] + Word{a};
        if (quotient.class_of[kn.id_of(product)] != image[closure.action[c][a - 1]]) {
          fail("right actions");
        }
      }
    }
    return closure;
  }

  std::size_t hk_element_of(Word const&           w,
                            HkClasses const&      classes,
                            HkPresentation const& pres) {
    if (w.max_letter() > classes.n) {
      throw InvalidArgument("letter " + std::to_string(w.max_letter())
                            + " is not a vertex");
    }
    std::size_t c = 0;
    for (Letter a : pres.to_internal(w)) {
      c = classes.action[c][a - 1];
    }
    return c;
  }

}  // namespace ksds
