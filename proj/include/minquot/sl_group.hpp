#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "minquot/automorphism.hpp"
#include "minquot/gf2.hpp"
#include "minquot/hyperplane.hpp"

namespace minquot {

  // prod_{k=0}^{n-1} (2^n - 2^k).
  std::uint64_t sl_order_formula(std::size_t n);

  // Every element of SL(n,2), indexed in breadth-first discovery order from
  // the identity, multiplying on the right by the generators I + e_{ij} taken
  // in (i,j)-lexicographic order. Index 0 is the identity.
  class GroupTable {
   public:
    // 2 <= n <= 4; n == 5 (about 10^7 elements) needs allow_large.
    static GroupTable enumerate(std::size_t n, bool allow_large = false);

    [[nodiscard]] std::size_t dimension() const noexcept {
      return n_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return keys_.size();
    }
    [[nodiscard]] GF2Matrix element(std::uint32_t idx) const {
      return GF2Matrix::from_packed(n_, keys_[idx]);
    }
    [[nodiscard]] std::optional<std::uint32_t> index_of(
        GF2Matrix const& m) const;
    // Throws DomainError if m is not in the table.
    [[nodiscard]] std::uint32_t require_index(GF2Matrix const& m) const;

    [[nodiscard]] std::uint32_t multiply(std::uint32_t a,
                                         std::uint32_t b) const;
    [[nodiscard]] std::uint32_t inverse(std::uint32_t a) const noexcept {
      return inverses_[a];
    }
    [[nodiscard]] static constexpr std::uint32_t identity() noexcept {
      return 0;
    }
    [[nodiscard]] std::span<std::uint32_t const> generators() const noexcept {
      return generators_;
    }

   private:
    explicit GroupTable(std::size_t n) : n_(n) {}

    static constexpr std::uint32_t kAbsent = 0xFFFFFFFFu;

    std::size_t                n_;
    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> lookup_;  // packed matrix -> index
    std::vector<std::uint32_t> inverses_;
    std::vector<std::uint32_t> generators_;
  };

  // A subgroup of an enumerated table, stored as the sorted set of member
  // indices plus an irredundant generating list. The table must outlive it.
  class Subgroup {
   public:
    [[nodiscard]] GroupTable const& parent() const noexcept {
      return *parent_;
    }
    [[nodiscard]] std::span<std::uint32_t const> members() const noexcept {
      return members_;
    }
    [[nodiscard]] std::span<std::uint32_t const> generators() const noexcept {
      return generators_;
    }
    [[nodiscard]] std::size_t order() const noexcept {
      return members_.size();
    }
    [[nodiscard]] bool contains(std::uint32_t idx) const;
    // FNV-1a over the member indices.
    [[nodiscard]] std::uint64_t content_hash() const noexcept;

    bool operator==(Subgroup const& other) const noexcept {
      return parent_ == other.parent_ && members_ == other.members_;
    }

   private:
    friend Subgroup subgroup_closure(GroupTable const&,
                                     std::span<std::uint32_t const>);
    friend Subgroup subgroup_from_members(GroupTable const&,
                                          std::vector<std::uint32_t>);

    GroupTable const*          parent_ = nullptr;
    std::vector<std::uint32_t> members_;
    std::vector<std::uint32_t> generators_;
  };

  Subgroup subgroup_closure(GroupTable const&              table,
                            std::span<std::uint32_t const> gens);

  // Wraps a set already known to be a subgroup, choosing generators. Throws
  // std::logic_error if the set is not closed.
  Subgroup subgroup_from_members(GroupTable const&          table,
                                 std::vector<std::uint32_t> members);

  // g H g^{-1}.
  Subgroup conjugate_subgroup(std::uint32_t g, Subgroup const& h);

  // Conjugacy class of h, discovered breadth-first by conjugating with the
  // table generators; h itself comes first.
  std::vector<Subgroup> orbit_of_subgroup(Subgroup const& h);

  // {g : g H g^{-1} = H}.
  Subgroup normalizer(Subgroup const& h);

  struct OrbitStabilizer {
    std::vector<Subgroup> orbit;
    Subgroup              stabilizer;
  };

  // Both of the above, with |orbit| * |normalizer| == |G| checked.
  OrbitStabilizer orbit_stabilizer(Subgroup const& h);

  // Elements g with P g = P (row action), i.e. the setwise stabilizer.
  Subgroup hyperplane_stabilizer(Hyperplane const& p, GroupTable const& table);

  // Mod-2 reduction of the abelianization; defined for any automorphism.
  GF2Matrix reduce_mod2(Automorphism const& f);

  // The natural map SAut(F_n) -> SL(n,2). Throws DomainError for
  // automorphisms whose integer matrix has determinant -1.
  GF2Matrix pi(Automorphism const& f);

  // Image in SL(n+1,2) of the subgroup generated, in the basis y chosen by
  // complete_basis(ind, appended), by the transvections among y_1..y_n and
  // the maps y_{n+1} -> y_j y_{n+1}, y_{n+1} -> y_{n+1} y_j^{-1}. Computed
  // once through automorphisms and once by conjugating the standard image by
  // the basis-change matrix; a disagreement throws std::logic_error.
  Subgroup c_subgroup_image(Indicator const&             ind,
                            GroupTable const&            table,
                            std::optional<std::uint32_t> appended = {});

  // The generators of the standard copy of that subgroup (ind = 1...10).
  std::vector<Automorphism> c_standard_generators(std::size_t rank);

  // pi(R_1^{p_1} ... R_n^{p_n}) with R_j = E_{x_{n+1}, x_j}, for every
  // p in {0,1}^n; entry p has p_j = bit j-1 of p. The table has dimension
  // n+1.
  std::vector<GF2Matrix> b_images(std::size_t n, GroupTable const& table);

}  // namespace minquot
