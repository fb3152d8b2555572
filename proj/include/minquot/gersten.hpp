#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "minquot/automorphism.hpp"

namespace minquot {

  struct RelationViolation {
    // "A": [E_ij, E_kl] = 1 for distinct i,j,k,l.
    // "B": [E_ij, E_jk] = E_ik for distinct i,j,k.
    std::string                family;
    std::string                level;  // "automorphism" or "matrix"
    std::vector<std::uint32_t> indices;
  };

  struct GerstenReport {
    std::size_t                    n = 0;
    std::size_t                    family_a_tuples = 0;
    std::size_t                    family_b_tuples = 0;
    std::vector<RelationViolation> violations;

    [[nodiscard]] bool passed() const noexcept {
      return violations.empty();
    }
  };

  // Checks both transvection commutator families over every index tuple, on
  // the automorphisms themselves and on their images in SL(n,2). Throws
  // DomainError unless 3 <= n <= 4.
  GerstenReport gersten_relation_report(
      std::size_t          n,
      CommutatorConvention conv = CommutatorConvention::standard);

}  // namespace minquot
