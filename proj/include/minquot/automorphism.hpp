#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "minquot/int_matrix.hpp"
#include "minquot/word.hpp"

namespace minquot {

  // One Nielsen-type move. Indices are 1-based generator indices.
  //
  //   right_transvection(i, j)   x_i -> x_i x_j          (E_{x_i, x_j})
  //   left_transvection(i, j)    x_i -> x_j^{-1} x_i     (E_{x_i^{-1}, x_j})
  //   inversion(i)               x_i -> x_i^{-1}
  //   swap(i, j)                 x_i <-> x_j
  struct ElementaryMove {
    enum class Kind : std::uint8_t {
      right_transvection,
      left_transvection,
      inversion,
      swap
    };

    Kind          kind;
    std::uint32_t i;
    std::uint32_t j;  // unused (0) for inversion

    static ElementaryMove right(std::uint32_t i, std::uint32_t j) {
      return {Kind::right_transvection, i, j};
    }
    static ElementaryMove left(std::uint32_t i, std::uint32_t j) {
      return {Kind::left_transvection, i, j};
    }
    static ElementaryMove invert(std::uint32_t i) {
      return {Kind::inversion, i, 0};
    }
    static ElementaryMove swap(std::uint32_t i, std::uint32_t j) {
      return {Kind::swap, i, j};
    }

    bool operator==(ElementaryMove const&) const = default;
  };

  // Throws RankError / DomainError when the move is malformed for `rank`.
  void validate(ElementaryMove const& m, std::size_t rank);

  // The move sequence (left to right) undoing `m`.
  std::vector<ElementaryMove> inverse_moves(ElementaryMove const& m);

  std::string to_string(ElementaryMove const& m);

  using Certificate = std::vector<ElementaryMove>;

  // An endomorphism of F_n given by the images of x_1..x_n. When a
  // certificate is attached it is replayed at construction and must
  // reproduce the images exactly; only certified values may be inverted.
  //
  // Products are read left to right: compose(f, g) applies f first.
  class Automorphism {
   public:
    static Automorphism identity(std::size_t rank);

    // Uncertified endomorphism. All images must share `rank`.
    static Automorphism from_images(std::vector<Word> images);

    // Composition of the moves, left to right, starting from the identity.
    static Automorphism from_certificate(std::size_t rank, Certificate moves);

    static Automorphism elementary(ElementaryMove m, std::size_t rank);

    [[nodiscard]] std::size_t rank() const noexcept {
      return rank_;
    }
    [[nodiscard]] std::span<Word const> images() const noexcept {
      return images_;
    }
    // Image of x_k, 1-based.
    [[nodiscard]] Word const& image(std::uint32_t k) const;

    [[nodiscard]] bool is_certified() const noexcept {
      return certificate_.has_value();
    }
    [[nodiscard]] std::optional<Certificate> const& certificate()
        const noexcept {
      return certificate_;
    }

    // Equal images; certificates are not compared.
    bool operator==(Automorphism const& other) const {
      return images_ == other.images_;
    }

   private:
    Automorphism(std::size_t                rank,
                 std::vector<Word>          images,
                 std::optional<Certificate> cert);

    std::size_t                rank_;
    std::vector<Word>          images_;
    std::optional<Certificate> certificate_;
  };

  enum class Side { left, right };

  // E_{x_i, x_j} (right) or E_{x_i^{-1}, x_j} (left).
  Automorphism transvection(Side side,
                            std::uint32_t i,
                            std::uint32_t j,
                            std::size_t   rank);

  Word         apply(Automorphism const& f, Word const& w);
  Automorphism compose(Automorphism const& f, Automorphism const& g);

  inline Automorphism operator*(Automorphism const& f, Automorphism const& g) {
    return compose(f, g);
  }

  // Throws UnsupportedError if `f` carries no certificate.
  Automorphism inverse(Automorphism const& f);

  enum class CommutatorConvention {
    // a b a^{-1} b^{-1}
    standard,
    // a^{-1} b^{-1} a b; only used to demonstrate that the relation checks
    // detect a convention mix-up.
    reversed
  };

  Automorphism commutator(
      Automorphism const&  a,
      Automorphism const&  b,
      CommutatorConvention conv = CommutatorConvention::standard);

  // E_{x_1, x_2} E_{x_1^{-1}, x_2}: x_1 -> x_2^{-1} x_1 x_2.
  Automorphism magnus_generator(std::size_t rank);

  // Row k-1 is the exponent-sum vector of the image of x_k, so the matrix of
  // compose(f, g) is matrix(f) * matrix(g).
  IntMatrix abelianization_matrix(Automorphism const& f);

  bool is_special(Automorphism const& f);

  // For the last generator x_{n+1} of rank n+1: the automorphism
  // x_{n+1} -> v x_{n+1} w^{-1} fixing x_1..x_n, built from moves. `v` and
  // `w` must not involve x_{n+1}.
  Automorphism b_element(Word const& v, Word const& w);

  // Finds a certificate for the automorphism x_k -> basis[k-1] by greedy
  // Nielsen length reduction. Throws UnsupportedError if the reduction stalls
  // before reaching a signed permutation of the generators; this is not a
  // decision procedure for being a basis.
  Automorphism certify_basis(std::vector<Word> const& basis);

  nlohmann::json to_json(Automorphism const& f);
  Automorphism   automorphism_from_json(nlohmann::json const& j);

}  // namespace minquot
