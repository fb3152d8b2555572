#include "minquot/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "minquot/errors.hpp"

namespace minquot {

  IntMatrix::IntMatrix(
      std::initializer_list<std::initializer_list<std::int64_t>> rows)
      : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (auto const& row : rows) {
      if (row.size() != cols_) {
        throw DomainError("ragged matrix literal");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw DomainError("matrix shapes do not compose");
    }
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        std::int64_t const x = a(i, k);
        if (x == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          std::int64_t prod = 0;
          if (__builtin_mul_overflow(x, b(k, j), &prod)
              || __builtin_add_overflow(out(i, j), prod, &out(i, j))) {
            throw Error("integer overflow in matrix product");
          }
        }
      }
    }
    return out;
  }

  std::int64_t determinant(IntMatrix const& m) {
    if (m.rows() != m.cols()) {
      throw DomainError("determinant of a non-square matrix");
    }
    std::size_t const n = m.rows();
    if (n == 0) {
      return 1;
    }
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = m(i, j);
      }
    }
    int      sign = 1;
    __int128 prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (a[k][k] == 0) {
        std::size_t p = k + 1;
        while (p < n && a[p][k] == 0) {
          ++p;
        }
        if (p == n) {
          return 0;
        }
        std::swap(a[k], a[p]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        }
      }
      prev = a[k][k];
    }
    __int128 const det = sign * a[n - 1][n - 1];
    if (det > INT64_MAX || det < INT64_MIN) {
      throw Error("determinant overflows int64");
    }
    return static_cast<std::int64_t>(det);
  }

  IntMatrix mod_reduction(IntMatrix const& m, std::int64_t modulus) {
    if (modulus < 2) {
      throw DomainError("modulus must be at least 2");
    }
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::int64_t r = m(i, j) % modulus;
        out(i, j)      = r < 0 ? r + modulus : r;
      }
    }
    return out;
  }

  std::string to_string(IntMatrix const& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols(); ++j) {
        os << (j ? ", " : "") << m(i, j);
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

}  // namespace minquot
