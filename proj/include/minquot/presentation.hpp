#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "minquot/int_matrix.hpp"

namespace minquot {

  // g^k for the generator with 0-based position `generator`.
  struct Syllable {
    std::uint32_t generator;
    std::int64_t  exponent;

    bool operator==(Syllable const&) const = default;
  };

  using Relator = std::vector<Syllable>;

  // A finite presentation <generators ; relators>. Relators are kept freely
  // reduced with adjacent powers of one generator merged; relators that
  // reduce to the empty word are dropped.
  class Presentation {
   public:
    Presentation(std::vector<std::string> generators,
                 std::vector<Relator>     relators);

    [[nodiscard]] std::vector<std::string> const& generators() const noexcept {
      return generators_;
    }
    [[nodiscard]] std::vector<Relator> const& relators() const noexcept {
      return relators_;
    }
    [[nodiscard]] std::size_t generator_count() const noexcept {
      return generators_.size();
    }

    bool operator==(Presentation const&) const = default;

   private:
    std::vector<std::string> generators_;
    std::vector<Relator>     relators_;
  };

  // Grammar: `<` names `;` relators `>`, names separated by `,`, relators
  // separated by `,`, each relator a `*`-product of `name` or `name^k` with
  // k a (possibly negative) integer. "<a,b ; a^4, a^2*b^-3>".
  Presentation parse_presentation(std::string_view text);
  std::string  render_presentation(Presentation const& p);

  // <a,b ; a^4, a^2*b^-3>, a presentation of SL(2,Z).
  Presentation sl2z_presentation();

  // Rows are relators, columns generators, entries exponent sums.
  IntMatrix relator_matrix(Presentation const& p);

  // Invariant factors of the abelianization: entries d > 1 with
  // d_1 | d_2 | ..., then one 0 per free Z summand. Empty for the trivial
  // group.
  std::vector<std::int64_t> abelianization_invariants(Presentation const& p);

}  // namespace minquot
