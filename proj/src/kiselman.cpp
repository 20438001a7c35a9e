#include "ksds/kiselman.hpp"

#include <algorithm>
#include <string>

#include "ksds/errors.hpp"

namespace ksds {

  namespace {
    struct SegmentShape {
      bool has_smaller = false;
      bool has_larger  = false;
      bool has_equal   = false;
    };

    // Letters strictly between positions left and right, compared to w[left].
    SegmentShape segment_shape(Word const& w,
                               std::size_t left,
                               std::size_t right) {
      SegmentShape shape;
      Letter const a = w[left];
      for (std::size_t k = left + 1; k < right; ++k) {
        shape.has_smaller |= w[k] < a;
        shape.has_larger |= w[k] > a;
        shape.has_equal |= w[k] == a;
      }
      return shape;
    }

    void check_span(Word const& w, std::size_t left, std::size_t right) {
      if (left >= right || right >= w.size()) {
        throw InvalidArgument("invalid span [" + std::to_string(left) + ", "
                              + std::to_string(right) + "] in a word of length "
                              + std::to_string(w.size()));
      }
      if (w[left] != w[right]) {
        throw InvalidArgument("span endpoints carry different letters");
      }
    }

    // Position of the next occurrence of w[pos] after pos, or w.size().
    std::size_t next_occurrence(Word const& w, std::size_t pos) {
      std::size_t k = pos + 1;
      while (k < w.size() && w[k] != w[pos]) {
        ++k;
      }
      return k;
    }

    std::optional<StepKind> step_kind(Word const& w,
                                      std::size_t left,
                                      std::size_t right) {
      if (right == left + 1) {
        return StepKind::type1;
      }
      auto shape = segment_shape(w, left, right);
      if (shape.has_smaller && shape.has_larger) {
        return std::nullopt;
      }
      return shape.has_larger ? StepKind::type2 : StepKind::type3;
    }
  }  // namespace

  bool is_special(Word const& w, std::size_t left, std::size_t right) {
    check_span(w, left, right);
    auto shape = segment_shape(w, left, right);
    return shape.has_smaller && shape.has_larger;
  }

  bool is_canonical(Word const& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t j = next_occurrence(w, i);
      if (j < w.size() && !is_special(w, i, j)) {
        return false;
      }
    }
    return true;
  }

  Word apply_step(Word const& w, StepSite const& site) {
    check_span(w, site.left, site.right);
    auto shape = segment_shape(w, site.left, site.right);
    bool ok    = false;
    switch (site.kind) {
      case StepKind::type1:
        ok = site.right == site.left + 1;
        break;
      case StepKind::type2:
        ok = !shape.has_smaller && !shape.has_equal;
        break;
      case StepKind::type3:
        ok = !shape.has_larger && !shape.has_equal;
        break;
    }
    if (!ok) {
      throw InvalidArgument("the pair at positions " + std::to_string(site.left)
                            + ", " + std::to_string(site.right)
                            + " cannot be simplified by a step of that type");
    }
    return site.kind == StepKind::type3 ? w.erase(site.left)
                                        : w.erase(site.right);
  }

  std::vector<StepSite> eligible_steps(Word const& w) {
    std::vector<StepSite> result;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t j = next_occurrence(w, i);
      if (j == w.size()) {
        continue;
      }
      if (auto kind = step_kind(w, i, j)) {
        result.push_back({i, j, *kind});
      }
    }
    return result;
  }

  std::optional<StepSite> find_step(Word const& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t j = next_occurrence(w, i);
      if (j == w.size()) {
        continue;
      }
      if (auto kind = step_kind(w, i, j)) {
        return StepSite{i, j, *kind};
      }
    }
    return std::nullopt;
  }

  Word canonical_form(Word const& w) {
    Word current = w;
    while (auto site = find_step(current)) {
      current = site->kind == StepKind::type3 ? current.erase(site->left)
                                              : current.erase(site->right);
    }
    return current;
  }

  Word canonical_form_restricted(Word const& w, Letter k) {
    if (k == 0) {
      throw InvalidArgument("restriction bound must be >= 1");
    }
    return canonical_form(delete_letters(w, LetterSet::range(1, k - 1)));
  }

  bool same_kn_element(Word const& u, Word const& v) {
    return canonical_form(u) == canonical_form(v);
  }

  Word kn_multiply(Word const& u, Word const& v) {
    return canonical_form(u + v);
  }

  ////////////////////////////////////////////////////////////////////////
  // KnMonoid
  ////////////////////////////////////////////////////////////////////////

  KnMonoid::KnMonoid(std::size_t n, std::size_t max_n) : n_(n) {
    if (n == 0) {
      throw InvalidArgument("K_n needs n >= 1");
    }
    if (n > max_n) {
      throw GuardExceeded("enumerating K_" + std::to_string(n)
                          + " exceeds the configured maximum n = "
                          + std::to_string(max_n));
    }
    words_.push_back(Word());
    index_.emplace(Word(), 0);
    for (std::size_t x = 0; x < words_.size(); ++x) {
      std::vector<std::size_t> row(n);
      for (Letter a = 1; a <= n; ++a) {
        Word product = canonical_form(words_[x] + Word{a});
        auto [it, inserted] = index_.emplace(product, words_.size());
        if (inserted) {
          words_.push_back(std::move(product));
        }
        row[a - 1] = it->second;
      }
      right_.push_back(std::move(row));
    }
    left_.resize(words_.size(), std::vector<std::size_t>(n));
    for (std::size_t x = 0; x < words_.size(); ++x) {
      for (Letter a = 1; a <= n; ++a) {
        left_[x][a - 1] = index_.at(canonical_form(a + words_[x]));
      }
    }
  }

  std::size_t KnMonoid::id_of(Word const& w) const {
    if (w.max_letter() > n_) {
      throw InvalidArgument("letter " + std::to_string(w.max_letter())
                            + " outside the alphabet of K_"
                            + std::to_string(n_));
    }
    std::size_t x = 0;
    for (Letter a : w) {
      x = right(x, a);
    }
    return x;
  }

  KnElement KnMonoid::multiply(KnElement const& x, KnElement const& y) const {
    std::size_t z = x.id;
    for (Letter a : y.canon) {
      z = right(z, a);
    }
    return element(z);
  }

  std::size_t KnMonoid::max_length() const noexcept {
    std::size_t result = 0;
    for (auto const& w : words_) {
      result = std::max(result, w.size());
    }
    return result;
  }

  KnElement kn_multiply(KnMonoid const& monoid,
                        KnElement const& x,
                        KnElement const& y) {
    return monoid.multiply(x, y);
  }

  std::vector<Word> canonical_words(std::size_t n, std::size_t max_length) {
    std::vector<Word> result{Word()};
    std::size_t       level_begin = 0;
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::size_t level_end = result.size();
      for (std::size_t x = level_begin; x < level_end; ++x) {
        for (Letter a = 1; a <= n; ++a) {
          Word candidate = result[x] + Word{a};
          if (is_canonical(candidate)) {
            result.push_back(std::move(candidate));
          }
        }
      }
      if (result.size() == level_end) {
        break;
      }
      level_begin = level_end;
    }
    return result;
  }

}  // namespace ksds
