#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "minquot/sl_group.hpp"

namespace minquot {

  // A finite group given by its full multiplication table. The group laws
  // are checked in full on construction.
  class FiniteGroup {
   public:
    // table[a * order + b] = a * b. Throws DomainError if the table is not a
    // group.
    FiniteGroup(std::string name, std::size_t order,
                std::vector<std::uint32_t> table);

    [[nodiscard]] std::string const& name() const noexcept {
      return name_;
    }
    [[nodiscard]] std::size_t order() const noexcept {
      return order_;
    }
    [[nodiscard]] std::uint32_t multiply(std::uint32_t a,
                                         std::uint32_t b) const noexcept {
      return table_[a * order_ + b];
    }
    [[nodiscard]] std::uint32_t identity() const noexcept {
      return identity_;
    }
    [[nodiscard]] std::uint32_t inverse(std::uint32_t a) const noexcept {
      return inverses_[a];
    }
    // x^e for any integer e.
    [[nodiscard]] std::uint32_t power(std::uint32_t x, std::int64_t e) const;
    [[nodiscard]] std::size_t   element_order(std::uint32_t x) const;

    [[nodiscard]] bool is_abelian() const;
    [[nodiscard]] bool is_cyclic() const;

    // Sorted closure of `gens`.
    [[nodiscard]] std::vector<std::uint32_t> generated(
        std::span<std::uint32_t const> gens) const;

   private:
    std::string                name_;
    std::size_t                order_;
    std::vector<std::uint32_t> table_;
    std::uint32_t              identity_ = 0;
    std::vector<std::uint32_t> inverses_;
  };

  FiniteGroup cyclic_group(std::size_t n);
  FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b,
                             std::string name);
  // The permutation group generated by `gens` (images of 0..k-1), elements
  // in breadth-first order from the identity.
  FiniteGroup permutation_group(std::string                                name,
                                std::vector<std::vector<std::uint32_t>> const& gens);
  FiniteGroup quaternion_group();

  // Every group of order <= max_order up to isomorphism, by order and then
  // a fixed listing: Z1, Z2, Z3, Z4, V4, Z5, Z6, S3, Z7, Z8, Z2xZ4, Z2^3,
  // D4, Q8. Throws DomainError unless 1 <= max_order <= 8.
  std::vector<FiniteGroup> small_groups_catalog(std::size_t max_order);

  // Looks up a catalog name, or "SL2" / "SL3" for SL(n,2).
  FiniteGroup group_by_name(std::string const& name);

  // The full multiplication table of an enumerated SL(n,2), same indices.
  FiniteGroup finite_group_from_table(GroupTable const& table);

  // g -> (g^T)^{-1} as a permutation of table indices.
  std::vector<std::uint32_t> transpose_inverse_map(GroupTable const& table);

}  // namespace minquot
