#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace minquot {

  // A signed generator x_k^{+1} or x_k^{-1}. Indices are 1-based.
  class Letter {
   public:
    constexpr Letter(std::uint32_t index, int sign)
        : code_(sign < 0 ? -static_cast<std::int32_t>(index)
                         : static_cast<std::int32_t>(index)) {}

    [[nodiscard]] constexpr std::uint32_t index() const noexcept {
      return static_cast<std::uint32_t>(code_ < 0 ? -code_ : code_);
    }
    [[nodiscard]] constexpr int sign() const noexcept {
      return code_ < 0 ? -1 : 1;
    }
    [[nodiscard]] constexpr Letter inverse() const noexcept {
      return Letter(index(), -sign());
    }
    [[nodiscard]] constexpr bool cancels(Letter other) const noexcept {
      return code_ == -other.code_;
    }

    constexpr bool operator==(Letter const&) const noexcept = default;
    constexpr auto operator<=>(Letter const&) const noexcept = default;

   private:
    std::int32_t code_;
  };

  // An element of the free group F_n, always stored freely reduced, so two
  // words are equal exactly when their letter sequences are.
  class Word {
   public:
    explicit Word(std::size_t rank = 1);

    // Builds the free reduction of `letters`. Throws RankError if an index
    // is 0 or exceeds `rank`.
    Word(std::span<Letter const> letters, std::size_t rank);
    Word(std::initializer_list<Letter> letters, std::size_t rank);

    // The one-letter word x_k (or x_k^{-1}).
    static Word generator(std::uint32_t k, std::size_t rank, int sign = 1);

    [[nodiscard]] std::size_t rank() const noexcept {
      return rank_;
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return letters_.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return letters_.empty();
    }
    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return letters_;
    }

    bool operator==(Word const&) const = default;
    auto operator<=>(Word const&) const = default;

   private:
    std::size_t         rank_;
    std::vector<Letter> letters_;
  };

  Word reduce(std::span<Letter const> letters, std::size_t rank);

  // Reduced product u*v. Throws RankError on rank mismatch.
  Word concat(Word const& u, Word const& v);
  Word invert(Word const& w);

  inline Word operator*(Word const& u, Word const& v) {
    return concat(u, v);
  }

  // Grammar: terms `x<k>` or `x<k>^-1` joined by `*`; the empty string is
  // the identity. Whitespace between tokens is ignored.
  Word        parse_word(std::string_view text, std::size_t rank);
  std::string render_word(Word const& w);

  // Signed exponent sum of each generator; entry k-1 belongs to x_k.
  std::vector<std::int64_t> abelianize_word(Word const& w);

}  // namespace minquot
