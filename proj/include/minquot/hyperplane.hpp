#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minquot/automorphism.hpp"
#include "minquot/gf2.hpp"
#include "minquot/word.hpp"

namespace minquot {

  // Binary vector (i_1, ..., i_n) other than all-ones. i_j = 1 means e_j
  // lies in the hyperplane.
  class Indicator {
   public:
    // Throws DomainError for the all-ones vector or n outside 1..8.
    Indicator(std::size_t n, Gf2Vector bits);

    // Bitstring form, leftmost character is i_1: "11000".
    static Indicator parse(std::string_view bits);

    // All 2^n - 1 indicators of length n, ordered by bit mask.
    static std::vector<Indicator> all(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept {
      return n_;
    }
    [[nodiscard]] Gf2Vector bits() const noexcept {
      return bits_;
    }
    // 1-based.
    [[nodiscard]] bool bit(std::size_t j) const noexcept {
      return (bits_ >> (j - 1)) & 1u;
    }
    [[nodiscard]] std::vector<std::uint32_t> zero_positions() const;
    [[nodiscard]] std::vector<std::uint32_t> one_positions() const;
    [[nodiscard]] std::string                to_string() const;

    bool operator==(Indicator const&) const = default;
    auto operator<=>(Indicator const&) const = default;

   private:
    std::size_t n_;
    Gf2Vector   bits_;
  };

  // A codimension-one subspace of GF(2)^n held by a basis.
  class Hyperplane {
   public:
    // Throws DomainError unless `basis` has exactly n-1 independent vectors.
    Hyperplane(std::size_t n, std::vector<Gf2Vector> basis);

    [[nodiscard]] std::size_t dimension() const noexcept {
      return n_;
    }
    [[nodiscard]] std::vector<Gf2Vector> const& basis() const noexcept {
      return basis_;
    }
    // The nonzero functional vanishing on the hyperplane.
    [[nodiscard]] Gf2Vector normal() const noexcept {
      return normal_;
    }
    [[nodiscard]] bool contains(Gf2Vector v) const noexcept;

    // Same subspace, regardless of basis.
    bool operator==(Hyperplane const& other) const noexcept {
      return n_ == other.n_ && normal_ == other.normal_;
    }

   private:
    std::size_t            n_;
    std::vector<Gf2Vector> basis_;
    Gf2Vector              normal_;
  };

  // Zero positions z_1 < ... < z_l and one positions o_1 < ...: basis
  // e_{z1}+e_{z2}, ..., e_{z(l-1)}+e_{zl}, e_{o1}, ..., in that order.
  Hyperplane hyperplane_basis(Indicator const& ind);

  Indicator indicator_of(Hyperplane const& p);

  // The same formula one level up: x_{z1} x_{z2}^{-1}, ..., x_{o1}, ...
  std::vector<Word> s_basis(Indicator const& ind);

  struct CompletedBasis {
    std::vector<Word> basis;
    // x_k -> basis[k-1].
    Automorphism change;
  };

  // s_basis(ind) followed by x_j. By default j is the smallest index with
  // i_j = 0; any zero position may be requested instead.
  CompletedBasis complete_basis(Indicator const&             ind,
                                std::optional<std::uint32_t> appended = {});

  // A certified basis change after which ind and other become the
  // indicators (1,0,1,...,1) and (0,1,1,...,1). See hyperplane.cpp for the
  // construction.
  Automorphism lemma_a_change(Indicator const& ind, Indicator const& other);

  // Rewrites both hyperplanes in the coordinates of the basis f(x_1), ...,
  // f(x_n) (mod 2) and compares their indicators with the targets.
  bool verify_lemma_a(Indicator const&    ind,
                      Indicator const&    other,
                      Automorphism const& f);

}  // namespace minquot
