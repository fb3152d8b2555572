#pragma once

#include <cstdint>
#include <vector>

#include "minquot/int_matrix.hpp"

namespace minquot {

  struct SmithForm {
    // D = U * M * V, U and V unimodular, D diagonal with d_1 | d_2 | ...
    // and nonnegative entries.
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    // Diagonal entries other than 1, followed by a 0 for every column
    // beyond the row count. This lists the cyclic factors of Z^cols / rows.
    std::vector<std::int64_t> invariant_factors;
  };

  SmithForm smith_normal_form(IntMatrix const& m);

}  // namespace minquot
