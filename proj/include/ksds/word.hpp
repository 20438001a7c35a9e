// Words over a totally ordered alphabet {1, ..., n}: subword and
// quasi-subword tests, truncation, deletion and the join operation.

#ifndef KSDS_WORD_HPP_
#define KSDS_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ksds {

  //! A generator a_i, identified with its 1-based index i.
  using Letter = std::uint32_t;

  //! Element of the free monoid over {1, 2, ...}. The empty word is the
  //! identity and is written "-" in text form.
  class Word {
   public:
    using value_type     = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    Word(std::initializer_list<Letter> letters);
    explicit Word(std::vector<Letter> letters);

    //! The empty word.
    static Word star() {
      return Word();
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return letters_.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return letters_.empty();
    }
    Letter operator[](std::size_t pos) const {
      return letters_[pos];
    }
    const_iterator begin() const noexcept {
      return letters_.begin();
    }
    const_iterator end() const noexcept {
      return letters_.end();
    }
    std::span<const Letter> letters() const noexcept {
      return letters_;
    }

    //! Largest letter occurring in the word, 0 for the empty word.
    [[nodiscard]] Letter max_letter() const noexcept;
    [[nodiscard]] bool contains(Letter a) const noexcept;

    //! Letters [pos, size()).
    [[nodiscard]] Word suffix(std::size_t pos) const;
    //! Letters [0, len).
    [[nodiscard]] Word prefix(std::size_t len) const;
    //! The word with the letter at `pos` removed.
    [[nodiscard]] Word erase(std::size_t pos) const;

    void push_back(Letter a);
    Word& operator+=(Word const& other);
    friend Word operator+(Word lhs, Word const& rhs) {
      lhs += rhs;
      return lhs;
    }
    friend Word operator+(Letter a, Word const& w);

    friend bool operator==(Word const&, Word const&) = default;
    // Lexicographic; see `shortlex_less` for the length-first order.
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<Letter> letters_;
  };

  //! Length first, then lexicographic.
  bool shortlex_less(Word const& u, Word const& v) noexcept;

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

  //! A set of letters, as used by truncation and deletion.
  class LetterSet {
   public:
    LetterSet() = default;
    LetterSet(std::initializer_list<Letter> letters) : members_(letters) {}
    explicit LetterSet(std::set<Letter> letters)
        : members_(std::move(letters)) {}

    //! {lo, lo + 1, ..., hi}; empty if lo > hi.
    static LetterSet range(Letter lo, Letter hi);

    [[nodiscard]] bool contains(Letter a) const {
      return members_.count(a) != 0;
    }
    [[nodiscard]] bool empty() const noexcept {
      return members_.empty();
    }
    std::set<Letter> const& members() const noexcept {
      return members_;
    }
    [[nodiscard]] LetterSet united(LetterSet const& other) const;

   private:
    std::set<Letter> members_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  enum class WordFormat {
    automatic,  // letters when every letter is <= 26, indices otherwise
    letters,    // "cbadc", a = 1
    indices     // "3 2 1 4 3"
  };

  //! Parses either a lowercase-letter string ("cbadc", whitespace allowed
  //! between letters) or whitespace/comma separated positive integers. The
  //! empty word is "-". Throws ParseError.
  Word parse_word(std::string_view text);

  //! Throws InvalidArgument if `fmt` is letters and some letter exceeds 26.
  std::string to_string(Word const& w, WordFormat fmt = WordFormat::automatic);

  WordFormat parse_word_format(std::string_view name);

  ////////////////////////////////////////////////////////////////////////
  // Combinatorics
  ////////////////////////////////////////////////////////////////////////

  //! Leftmost letter; throws InvalidArgument on the empty word.
  Letter head(Word const& w);

  //! v occurs as a factor (consecutive letters) of w.
  bool is_subword(Word const& v, Word const& w);

  //! v is a subsequence of w, i.e. v <= w.
  bool is_quasi_subword(Word const& v, Word const& w);

  //! Longest suffix of w whose head is `a`; empty if `a` does not occur.
  Word truncate(Word const& w, Letter a);

  //! Longest suffix of w whose head lies in I; empty if no letter of I
  //! occurs.
  Word truncate_set(Word const& w, LetterSet const& I);

  //! Erases every occurrence of the letters in I.
  Word delete_letters(Word const& w, LetterSet const& I);

  //! Returns (u+, u-) with u = u+ u- and u- the longest suffix of u that
  //! is a quasi-subword of v.
  std::pair<Word, Word> suffix_split(Word const& u, Word const& v);

  //! The shortest word admitting u as a quasi-subword and v as a suffix,
  //! namely u+ v.
  Word join(Word const& u, Word const& v);

}  // namespace ksds

template <>
struct std::hash<ksds::Word> {
  std::size_t operator()(ksds::Word const& w) const noexcept {
    return ksds::WordHash()(w);
  }
};

#endif  // KSDS_WORD_HPP_
