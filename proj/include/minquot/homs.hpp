#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "minquot/finite_group.hpp"
#include "minquot/presentation.hpp"

namespace minquot {

  // A homomorphism from a presented group into a finite group, given by the
  // image (target element index) of each generator in declaration order.
  struct Hom {
    std::vector<std::uint32_t> images;

    bool operator==(Hom const&) const = default;
    auto operator<=>(Hom const&) const = default;
  };

  inline constexpr std::uint64_t kDefaultHomWorkCeiling = 100'000'000;

  // Value of a relator under the generator assignment `images`.
  std::uint32_t evaluate(Relator const&                 r,
                         FiniteGroup const&             g,
                         std::span<std::uint32_t const> images);

  bool is_homomorphism(Presentation const& p, FiniteGroup const& g,
                       Hom const& h);
  bool is_surjective(Hom const& h, FiniteGroup const& g);

  // Every homomorphism p -> g, in lexicographic order of images. Generators
  // are assigned in declaration order and each relator is tested as soon as
  // its last generator is assigned. Throws RefusedError when
  // #gens * |g|^#gens exceeds work_ceiling.
  std::vector<Hom> enumerate_homs(
      Presentation const& p,
      FiniteGroup const&  g,
      std::uint64_t       work_ceiling = kDefaultHomWorkCeiling);

  // Groups the surjective members of `homs` into orbits of the group of
  // automorphisms of g generated by the inner automorphisms and
  // `outer_reps` (each a permutation of element indices), acting by
  // post-composition. Classes are sorted, and so is each class. Throws
  // DomainError if an outer representative is not an automorphism of g.
  std::vector<std::vector<Hom>> classify_surjections(
      std::span<Hom const>                           homs,
      FiniteGroup const&                             g,
      std::span<std::vector<std::uint32_t> const>    outer_reps = {});

}  // namespace minquot
