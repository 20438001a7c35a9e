#include "ksds/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "ksds/errors.hpp"

namespace ksds {

  namespace {
    constexpr Letter kMaxTextLetter = 26;

    void check_letter(Letter a) {
      if (a == 0) {
        throw InvalidArgument("letters are 1-based, found 0");
      }
    }
  }  // namespace

  Word::Word(std::initializer_list<Letter> letters) : letters_(letters) {
    std::for_each(letters_.begin(), letters_.end(), check_letter);
  }

  Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    std::for_each(letters_.begin(), letters_.end(), check_letter);
  }

  Letter Word::max_letter() const noexcept {
    return letters_.empty()
               ? 0
               : *std::max_element(letters_.begin(), letters_.end());
  }

  bool Word::contains(Letter a) const noexcept {
    return std::find(letters_.begin(), letters_.end(), a) != letters_.end();
  }

  Word Word::suffix(std::size_t pos) const {
    pos = std::min(pos, letters_.size());
    Word result;
    result.letters_.assign(letters_.begin() + pos, letters_.end());
    return result;
  }

  Word Word::prefix(std::size_t len) const {
    len = std::min(len, letters_.size());
    Word result;
    result.letters_.assign(letters_.begin(), letters_.begin() + len);
    return result;
  }

  Word Word::erase(std::size_t pos) const {
    Word result = *this;
    result.letters_.erase(result.letters_.begin() + pos);
    return result;
  }

  void Word::push_back(Letter a) {
    check_letter(a);
    letters_.push_back(a);
  }

  Word& Word::operator+=(Word const& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
  }

  Word operator+(Letter a, Word const& w) {
    check_letter(a);
    Word result;
    result.letters_.reserve(w.size() + 1);
    result.letters_.push_back(a);
    result.letters_.insert(result.letters_.end(), w.begin(), w.end());
    return result;
  }

  bool shortlex_less(Word const& u, Word const& v) noexcept {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    // FNV-1a over the letters
    std::size_t h = 1469598103934665603ULL;
    for (Letter a : w) {
      h ^= a;
      h *= 1099511628211ULL;
    }
    return h;
  }

  LetterSet LetterSet::range(Letter lo, Letter hi) {
    std::set<Letter> members;
    for (Letter a = lo; a <= hi && a != 0; ++a) {
      members.insert(a);
    }
    return LetterSet(std::move(members));
  }

  LetterSet LetterSet::united(LetterSet const& other) const {
    std::set<Letter> members = members_;
    members.insert(other.members_.begin(), other.members_.end());
    return LetterSet(std::move(members));
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t                   i = 0;
    auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; };
    while (i < text.size()) {
      while (i < text.size() && is_sep(text[i])) {
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && !is_sep(text[j])) {
        ++j;
      }
      if (j > i) {
        tokens.push_back(text.substr(i, j - i));
      }
      i = j;
    }
    if (tokens.empty()) {
      throw ParseError("empty word text; write \"-\" for the empty word");
    }
    if (tokens.size() == 1 && tokens[0] == "-") {
      return Word();
    }
    auto all_of = [](std::string_view tok, auto pred) {
      return std::all_of(tok.begin(), tok.end(), [&](char c) {
        return pred(static_cast<unsigned char>(c));
      });
    };
    bool alpha = std::all_of(tokens.begin(), tokens.end(), [&](auto tok) {
      return all_of(tok, [](unsigned char c) { return c >= 'a' && c <= 'z'; });
    });
    bool digits = std::all_of(tokens.begin(), tokens.end(), [&](auto tok) {
      return all_of(tok, [](unsigned char c) { return std::isdigit(c) != 0; });
    });
    std::vector<Letter> letters;
    if (alpha) {
      for (auto tok : tokens) {
        for (char c : tok) {
          letters.push_back(static_cast<Letter>(c - 'a' + 1));
        }
      }
    } else if (digits) {
      for (auto tok : tokens) {
        Letter value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
          throw ParseError("letter index out of range: " + std::string(tok));
        }
        if (value == 0) {
          throw ParseError("letter indices are 1-based, found 0");
        }
        letters.push_back(value);
      }
    } else {
      throw ParseError("cannot parse word \"" + std::string(text)
                       + "\": expected lowercase letters or positive integers");
    }
    return Word(std::move(letters));
  }

  std::string to_string(Word const& w, WordFormat fmt) {
    if (w.empty()) {
      return "-";
    }
    if (fmt == WordFormat::automatic) {
      fmt = w.max_letter() <= kMaxTextLetter ? WordFormat::letters
                                             : WordFormat::indices;
    }
    std::string out;
    if (fmt == WordFormat::letters) {
      if (w.max_letter() > kMaxTextLetter) {
        throw InvalidArgument("letter " + std::to_string(w.max_letter())
                              + " has no lowercase rendering");
      }
      for (Letter a : w) {
        out.push_back(static_cast<char>('a' + a - 1));
      }
      return out;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out.push_back(' ');
      }
      out += std::to_string(w[i]);
    }
    return out;
  }

  WordFormat parse_word_format(std::string_view name) {
    if (name == "letters") {
      return WordFormat::letters;
    } else if (name == "indices") {
      return WordFormat::indices;
    } else if (name == "auto") {
      return WordFormat::automatic;
    }
    throw ParseError("unknown word format: " + std::string(name));
  }

  ////////////////////////////////////////////////////////////////////////
  // Combinatorics
  ////////////////////////////////////////////////////////////////////////

  Letter head(Word const& w) {
    if (w.empty()) {
      throw InvalidArgument("head of the empty word");
    }
    return w[0];
  }

  bool is_subword(Word const& v, Word const& w) {
    // std::search reports an empty needle at w.begin(), which is w.end()
    // when w is empty as well.
    return v.empty() || std::search(w.begin(), w.end(), v.begin(), v.end()) != w.end();
  }

  bool is_quasi_subword(Word const& v, Word const& w) {
    auto it = w.begin();
    for (Letter a : v) {
      it = std::find(it, w.end(), a);
      if (it == w.end()) {
        return false;
      }
      ++it;
    }
    return true;
  }

  Word truncate(Word const& w, Letter a) {
    auto it = std::find(w.begin(), w.end(), a);
    return w.suffix(static_cast<std::size_t>(it - w.begin()));
  }

  Word truncate_set(Word const& w, LetterSet const& I) {
    auto it = std::find_if(
        w.begin(), w.end(), [&I](Letter a) { return I.contains(a); });
    return w.suffix(static_cast<std::size_t>(it - w.begin()));
  }

  Word delete_letters(Word const& w, LetterSet const& I) {
    std::vector<Letter> kept;
    kept.reserve(w.size());
    std::copy_if(w.begin(), w.end(), std::back_inserter(kept), [&I](Letter a) {
      return !I.contains(a);
    });
    return Word(std::move(kept));
  }

  std::pair<Word, Word> suffix_split(Word const& u, Word const& v) {
    // Match u against v from the right, always taking the rightmost
    // available position in v. The matched suffixes of u are nested, and
    // rightmost matching leaves the most room for the next letter.
    std::size_t vpos = v.size();
    std::size_t upos = u.size();
    while (upos > 0) {
      Letter      a     = u[upos - 1];
      std::size_t found = vpos;
      while (found > 0 && v[found - 1] != a) {
        --found;
      }
      if (found == 0) {
        break;
      }
      vpos = found - 1;
      --upos;
    }
    return {u.prefix(upos), u.suffix(upos)};
  }

  Word join(Word const& u, Word const& v) {
    return suffix_split(u, v).first + v;
  }

}  // namespace ksds
