#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "ksds/errors.hpp"
#include "ksds/kiselman.hpp"
#include "lemmas.hpp"
#include "oracles.hpp"

using namespace ksds;

namespace {
  Word w(char const* text) {
    return parse_word(text);
  }
}  // namespace

TEST_CASE("canonical form examples") {
  CHECK(canonical_form(w("aba")) == w("ab"));
  CHECK(canonical_form(w("bab")) == w("ab"));
  CHECK(canonical_form(w("bdbcdabcdc")) == w("abcd"));
  CHECK(canonical_form(Word()) == Word());
  CHECK(canonical_form(w("bacb")) == w("bacb"));
  CHECK(canonical_form_restricted(w("abab"), 2) == w("b"));
  CHECK(canonical_form_restricted(w("abab"), 1) == canonical_form(w("abab")));
  CHECK(canonical_form_restricted(w("abab"), 3) == Word());
  CHECK_THROWS_AS(canonical_form_restricted(w("a"), 0), InvalidArgument);
}

TEST_CASE("random-order simplification reaches the canonical form") {
  std::mt19937_64 rng(1);
  Word            x = w("bdbcdabcdc");
  for (int t = 0; t < 50; ++t) {
    CHECK(oracle::simplify_randomly(x, rng) == w("abcd"));
  }
  for (int t = 0; t < 2000; ++t) {
    Word y = oracle::random_word(rng, 1, 1 + rng() % 6, 14);
    CHECK(oracle::simplify_randomly(y, rng) == canonical_form(y));
  }
}

TEST_CASE("simplifying steps") {
  Word x = w("abca");
  CHECK(is_special(x, 0, 3) == false);
  CHECK(is_special(w("bacb"), 0, 3));
  CHECK_THROWS_AS(is_special(x, 0, 2), InvalidArgument);
  CHECK_THROWS_AS(is_special(x, 2, 9), InvalidArgument);

  CHECK(apply_step(w("aa"), {0, 1, StepKind::type1}) == w("a"));
  CHECK(apply_step(w("abca"), {0, 3, StepKind::type2}) == w("abc"));
  CHECK(apply_step(w("cabc"), {0, 3, StepKind::type3}) == w("abc"));
  CHECK_THROWS_AS(apply_step(w("abca"), {0, 3, StepKind::type3}), InvalidArgument);
  CHECK_THROWS_AS(apply_step(w("bacb"), {0, 3, StepKind::type2}), InvalidArgument);
  CHECK_THROWS_AS(apply_step(w("aba"), {0, 2, StepKind::type1}), InvalidArgument);

  CHECK(eligible_steps(w("bacb")).empty());
  CHECK_FALSE(find_step(w("abc")).has_value());
  auto site = find_step(w("abab"));
  REQUIRE(site.has_value());
  CHECK(w("abab")[site->left] == w("abab")[site->right]);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 2000; ++t) {
    Word y = oracle::random_word(rng, 1, 1 + rng() % 5, 10);
    std::set<Word> via_steps, via_oracle;
    for (auto const& s : eligible_steps(y)) {
      CHECK(y[s.left] == y[s.right]);
      via_steps.insert(apply_step(y, s));
    }
    for (auto p : oracle::removable_positions(oracle::vec(y))) {
      via_oracle.insert(y.erase(p));
    }
    CHECK(via_steps == via_oracle);
  }
}

TEST_CASE("consecutive-pair canonicity matches the all-pairs definition") {
  for (auto const& x : oracle::all_words(4, 7)) {
    REQUIRE(is_canonical(x) == oracle::canonical(x));
  }
}

TEST_CASE("properties of canonical forms") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 3000; ++t) {
    Letter n = 1 + rng() % 6;
    Word   x = oracle::random_word(rng, 1, n, 14);
    Word   c = canonical_form(x);
    CHECK(is_canonical(c));
    CHECK(canonical_form(c) == c);
    CHECK(is_quasi_subword(c, x));
    for (Letter a = 1; a <= n; ++a) {
      CHECK(c.contains(a) == x.contains(a));
    }
    CHECK(lemmas::positions_of(c, 1).size() <= 1);
    CHECK(lemmas::positions_of(c, n).size() <= 1);
    CHECK(same_kn_element(x, c));
    for (Letter k = 1; k <= n; ++k) {
      CHECK(canonical_form_restricted(x, k)
            == canonical_form(oracle::remove_below(x, k)));
    }
  }
}

TEST_CASE("a prefix letter outside the range of u commutes with Can") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 2000; ++t) {
    Letter n = 3 + rng() % 4;
    Letter h = 2 + rng() % (n - 1);
    Letter k = h + rng() % (n - h + 1);
    Word   u = oracle::random_word(rng, h, k, 10);
    Letter j = rng() % 2 == 0 || k == n ? 1 + rng() % (h - 1) : k + 1 + rng() % (n - k);
    CHECK(canonical_form(Word{j} + u) == Word{j} + canonical_form(u));
  }
}

TEST_CASE("the canonical form is the unique shortest word of its fibre") {
  std::map<Word, std::pair<std::size_t, std::size_t>> shortest;  // length, count
  for (auto const& x : oracle::all_words(4, 8)) {
    auto& [len, count] = shortest.try_emplace(canonical_form(x), x.size() + 1, 0).first->second;
    if (x.size() < len) {
      len   = x.size();
      count = 1;
    } else if (x.size() == len) {
      ++count;
    }
  }
  for (auto const& [c, lc] : shortest) {
    CHECK(lc.first == c.size());
    CHECK(lc.second == 1);
  }
}

TEST_CASE("multiplication in K_n") {
  CHECK(kn_multiply(w("a"), w("a")) == w("a"));
  CHECK(kn_multiply(w("ab"), w("a")) == w("ab"));
  CHECK(kn_multiply(w("ba"), w("b")) == w("ab"));
  CHECK(same_kn_element(w("aba"), w("bab")));
  CHECK_FALSE(same_kn_element(w("ab"), w("ba")));

  KnMonoid k3(3);
  auto     x = k3.element(k3.id_of(w("ba")));
  auto     y = k3.element(k3.id_of(w("b")));
  CHECK(kn_multiply(k3, x, y).canon == w("ab"));
  CHECK(k3.multiply(x, y).id == k3.id_of(w("ab")));
  CHECK_THROWS_AS(k3.id_of(w("d")), InvalidArgument);
}

TEST_CASE("enumeration of K_n") {
  CHECK(enumerate_kn(1).size() == 2);
  KnMonoid k2(2);
  CHECK(std::set<Word>(k2.words().begin(), k2.words().end())
        == std::set<Word>{Word(), w("a"), w("b"), w("ab"), w("ba")});
  CHECK(k2.element(0).canon == Word());

  // Independent count: canonical words under the all-pairs definition.
  for (Letter n = 1; n <= 4; ++n) {
    KnMonoid    kn(n);
    std::size_t direct = 0;
    for (auto const& x : oracle::all_words(n, kn.max_length() + 2)) {
      direct += oracle::canonical(x) ? 1 : 0;
    }
    CHECK(kn.size() == direct);
    CHECK(canonical_words(n, kn.max_length() + 2).size() == kn.size());
  }
  CHECK(KnMonoid(5).size() == canonical_words(5, 12).size());

  KnMonoid k3(3);
  for (std::size_t x = 0; x < k3.size(); ++x) {
    CHECK(is_canonical(k3.words()[x]));
    for (Letter a = 1; a <= 3; ++a) {
      CHECK(k3.words()[k3.right(x, a)] == canonical_form(k3.words()[x] + Word{a}));
      CHECK(k3.words()[k3.left(a, x)] == canonical_form(Word{a} + k3.words()[x]));
    }
    for (std::size_t y = 0; y < k3.size(); ++y) {
      CHECK(k3.multiply(k3.element(x), k3.element(y)).canon
            == canonical_form(k3.words()[x] + k3.words()[y]));
    }
  }
  CHECK_THROWS_AS(KnMonoid(8), GuardExceeded);
  CHECK_THROWS_AS(KnMonoid(0), InvalidArgument);
}

TEST_CASE("lemmas on canonical words") {
  auto const k5 = canonical_words(5, 12);
  auto check = [](lemmas::Tally t, std::size_t at_least) {
    CHECK(t.failures == 0);
    CHECK(t.instances >= at_least);
  };
  check(lemmas::can_of_product(500, 1), 500);
  check(lemmas::can_trunc(500, 2), 500);
  check(lemmas::restricted_below_full(500, 3), 500);
  check(lemmas::starts_by_u(k5), 100);
  check(lemmas::canonical_after_restriction(k5, 5), 100);
  auto f = lemmas::febbre(k5);
  check(f.i, 50);
  check(f.ii, 50);
  check(f.iii, 10);
  check(lemmas::technical(300, 4), 300);
  check(lemmas::prefix_cancellation(300, 5), 300);
  check(lemmas::deletion_composes(300, 6), 300);
}
