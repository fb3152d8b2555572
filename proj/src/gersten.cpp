#include "minquot/gersten.hpp"

#include "minquot/errors.hpp"
#include "minquot/sl_group.hpp"

namespace minquot {

  namespace {
    GF2Matrix matrix_commutator(GF2Matrix const&     a,
                                GF2Matrix const&     b,
                                CommutatorConvention conv) {
      if (conv == CommutatorConvention::standard) {
        return a * b * mat_inv(a) * mat_inv(b);
      }
      return mat_inv(a) * mat_inv(b) * a * b;
    }
  }  // namespace

  GerstenReport gersten_relation_report(std::size_t          n,
                                        CommutatorConvention conv) {
    if (n < 3 || n > 4) {
      throw DomainError("relation report supports 3 <= n <= 4");
    }
    auto const   rank = n;
    auto         e    = [rank](std::uint32_t i, std::uint32_t j) {
      return transvection(Side::right, i, j, rank);
    };
    auto const   id     = Automorphism::identity(rank);
    auto const   id_mat = GF2Matrix::identity(rank);
    GerstenReport report;
    report.n = n;
    auto const top = static_cast<std::uint32_t>(n);

    for (std::uint32_t i = 1; i <= top; ++i) {
      for (std::uint32_t j = 1; j <= top; ++j) {
        if (j == i) {
          continue;
        }
        for (std::uint32_t k = 1; k <= top; ++k) {
          if (k == i || k == j) {
            continue;
          }
          ++report.family_b_tuples;
          auto const lhs = commutator(e(i, j), e(j, k), conv);
          if (lhs != e(i, k)) {
            report.violations.push_back({"B", "automorphism", {i, j, k}});
          }
          if (matrix_commutator(pi(e(i, j)), pi(e(j, k)), conv)
              != pi(e(i, k))) {
            report.violations.push_back({"B", "matrix", {i, j, k}});
          }
          for (std::uint32_t l = 1; l <= top; ++l) {
            if (l == i || l == j || l == k) {
              continue;
            }
            ++report.family_a_tuples;
            if (commutator(e(i, j), e(k, l), conv) != id) {
              report.violations.push_back({"A", "automorphism", {i, j, k, l}});
            }
            if (matrix_commutator(pi(e(i, j)), pi(e(k, l)), conv) != id_mat) {
              report.violations.push_back({"A", "matrix", {i, j, k, l}});
            }
          }
        }
      }
    }
    return report;
  }

}  // namespace minquot
