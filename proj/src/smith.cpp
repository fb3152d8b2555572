#include "minquot/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "minquot/errors.hpp"

namespace minquot {

  namespace {
    std::int64_t checked_sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
      std::int64_t prod = 0;
      std::int64_t out  = 0;
      if (__builtin_mul_overflow(q, b, &prod)
          || __builtin_sub_overflow(a, prod, &out)) {
        throw Error("integer overflow in Smith normal form");
      }
      return out;
    }

    // The working state: a = u * m * v throughout.
    struct Reduction {
      IntMatrix a, u, v;

      void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) {
          return;
        }
        for (std::size_t c = 0; c < a.cols(); ++c) {
          std::swap(a(i, c), a(j, c));
        }
        for (std::size_t c = 0; c < u.cols(); ++c) {
          std::swap(u(i, c), u(j, c));
        }
      }

      void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) {
          return;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
          std::swap(a(r, i), a(r, j));
        }
        for (std::size_t r = 0; r < v.rows(); ++r) {
          std::swap(v(r, i), v(r, j));
        }
      }

      // row_i -= q * row_j
      void sub_row(std::size_t i, std::size_t j, std::int64_t q) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
          a(i, c) = checked_sub_mul(a(i, c), q, a(j, c));
        }
        for (std::size_t c = 0; c < u.cols(); ++c) {
          u(i, c) = checked_sub_mul(u(i, c), q, u(j, c));
        }
      }

      // col_i -= q * col_j
      void sub_col(std::size_t i, std::size_t j, std::int64_t q) {
        for (std::size_t r = 0; r < a.rows(); ++r) {
          a(r, i) = checked_sub_mul(a(r, i), q, a(r, j));
        }
        for (std::size_t r = 0; r < v.rows(); ++r) {
          v(r, i) = checked_sub_mul(v(r, i), q, v(r, j));
        }
      }

      void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
          a(i, c) = -a(i, c);
        }
        for (std::size_t c = 0; c < u.cols(); ++c) {
          u(i, c) = -u(i, c);
        }
      }

      // Moves the smallest nonzero entry of the lower-right block at t to
      // (t, t). Returns false if the block is zero.
      bool pivot(std::size_t t) {
        std::size_t  bi = 0, bj = 0;
        std::int64_t best = 0;
        for (std::size_t i = t; i < a.rows(); ++i) {
          for (std::size_t j = t; j < a.cols(); ++j) {
            std::int64_t const x = a(i, j);
            if (x != 0 && (best == 0 || std::llabs(x) < best)) {
              best = std::llabs(x);
              bi   = i;
              bj   = j;
            }
          }
        }
        if (best == 0) {
          return false;
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
      }
    };
  }  // namespace

  SmithForm smith_normal_form(IntMatrix const& m) {
    std::size_t const rows = m.rows();
    std::size_t const cols = m.cols();
    Reduction         s{m, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    std::size_t const diag = std::min(rows, cols);

    for (std::size_t t = 0; t < diag; ++t) {
      if (!s.pivot(t)) {
        break;
      }
      while (true) {
        std::int64_t const p     = s.a(t, t);
        bool               clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
          s.sub_row(i, t, s.a(i, t) / p);
          clean = clean && s.a(i, t) == 0;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          s.sub_col(j, t, s.a(t, j) / p);
          clean = clean && s.a(t, j) == 0;
        }
        if (!clean) {
          // A nonzero remainder is smaller than p in absolute value.
          s.pivot(t);
          continue;
        }
        std::size_t bad = rows;
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (s.a(i, j) % p != 0) {
              bad = i;
              break;
            }
          }
        }
        if (bad == rows) {
          break;
        }
        // row_t += row_bad brings a non-multiple of p into row t.
        s.sub_row(t, bad, -1);
      }
      if (s.a(t, t) < 0) {
        s.negate_row(t);
      }
    }

    SmithForm out{s.a, s.u, s.v, {}};
    if (s.u * m * s.v != out.d) {
      throw std::logic_error("Smith normal form failed verification");
    }
    for (std::size_t t = 0; t < diag; ++t) {
      if (out.d(t, t) != 1) {
        out.invariant_factors.push_back(out.d(t, t));
      }
    }
    for (std::size_t c = rows; c < cols; ++c) {
      out.invariant_factors.push_back(0);
    }
    return out;
  }

}  // namespace minquot
