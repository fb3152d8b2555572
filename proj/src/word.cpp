#include "minquot/word.hpp"

#include <cctype>

#include "minquot/errors.hpp"

namespace minquot {

  namespace {
    void check_rank(std::size_t rank) {
      if (rank == 0) {
        throw RankError("free group rank must be positive");
      }
    }

    void check_letter(Letter l, std::size_t rank) {
      if (l.index() == 0 || l.index() > rank) {
        throw RankError("generator x" + std::to_string(l.index())
                        + " out of range for rank " + std::to_string(rank));
      }
    }
  }  // namespace

  Word::Word(std::size_t rank) : rank_(rank) {
    check_rank(rank);
  }

  Word::Word(std::span<Letter const> letters, std::size_t rank)
      : rank_(rank) {
    check_rank(rank);
    letters_.reserve(letters.size());
    // Stack-based free reduction: each incoming letter either cancels the
    // current top or is pushed.
    for (Letter l : letters) {
      check_letter(l, rank);
      if (!letters_.empty() && letters_.back().cancels(l)) {
        letters_.pop_back();
      } else {
        letters_.push_back(l);
      }
    }
  }

  Word::Word(std::initializer_list<Letter> letters, std::size_t rank)
      : Word(std::span<Letter const>(letters.begin(), letters.size()), rank) {
  }

  Word Word::generator(std::uint32_t k, std::size_t rank, int sign) {
    Letter l(k, sign);
    return Word(std::span<Letter const>(&l, 1), rank);
  }

  Word reduce(std::span<Letter const> letters, std::size_t rank) {
    return Word(letters, rank);
  }

  Word concat(Word const& u, Word const& v) {
    if (u.rank() != v.rank()) {
      throw RankError("cannot multiply words of rank "
                      + std::to_string(u.rank()) + " and "
                      + std::to_string(v.rank()));
    }
    auto lu = u.letters();
    auto lv = v.letters();
    std::size_t cut = 0;
    while (cut < lu.size() && cut < lv.size()
           && lu[lu.size() - 1 - cut].cancels(lv[cut])) {
      ++cut;
    }
    std::vector<Letter> out(lu.begin(), lu.end() - cut);
    out.insert(out.end(), lv.begin() + cut, lv.end());
    return Word(out, u.rank());
  }

  Word invert(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.length());
    auto letters = w.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word(out, w.rank());
  }

  Word parse_word(std::string_view text, std::size_t rank) {
    check_rank(rank);
    std::vector<Letter> letters;
    std::size_t         pos = 0;

    auto skip_ws = [&] {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };

    skip_ws();
    if (pos == text.size()) {
      return Word(rank);
    }
    while (true) {
      skip_ws();
      if (pos >= text.size() || text[pos] != 'x') {
        throw ParseError("expected generator 'x<k>'", pos);
      }
      ++pos;
      std::size_t const digits_at = pos;
      std::uint64_t     k         = 0;
      while (pos < text.size()
             && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        k = k * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (k > 0xFFFFFFFFu) {
          throw ParseError("generator index too large", digits_at);
        }
        ++pos;
      }
      if (pos == digits_at) {
        throw ParseError("expected generator index after 'x'", pos);
      }
      if (k == 0) {
        throw ParseError("generator indices start at 1", digits_at);
      }
      if (k > rank) {
        throw RankError("generator x" + std::to_string(k)
                        + " out of range for rank " + std::to_string(rank));
      }
      int sign = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        if (text.substr(pos, 3) != "^-1") {
          throw ParseError("the only exponent allowed is '^-1'", pos);
        }
        sign = -1;
        pos += 3;
      }
      letters.emplace_back(static_cast<std::uint32_t>(k), sign);
      skip_ws();
      if (pos == text.size()) {
        break;
      }
      if (text[pos] != '*') {
        throw ParseError("expected '*' between terms", pos);
      }
      ++pos;
    }
    return Word(letters, rank);
  }

  std::string render_word(Word const& w) {
    std::string out;
    bool        first = true;
    for (Letter l : w.letters()) {
      if (!first) {
        out += '*';
      }
      first = false;
      out += 'x';
      out += std::to_string(l.index());
      if (l.sign() < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  std::vector<std::int64_t> abelianize_word(Word const& w) {
    std::vector<std::int64_t> v(w.rank(), 0);
    for (Letter l : w.letters()) {
      v[l.index() - 1] += l.sign();
    }
    return v;
  }

}  // namespace minquot
