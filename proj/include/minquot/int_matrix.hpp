#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace minquot {

  // Dense row-major integer matrix. Used for abelianized automorphisms and
  // relator exponent matrices.
  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept {
      return rows_;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return cols_;
    }

    std::int64_t& operator()(std::size_t r, std::size_t c) {
      return data_[r * cols_ + c];
    }
    std::int64_t operator()(std::size_t r, std::size_t c) const {
      return data_[r * cols_ + c];
    }

    bool operator==(IntMatrix const&) const = default;

   private:
    std::size_t               rows_ = 0;
    std::size_t               cols_ = 0;
    std::vector<std::int64_t> data_;
  };

  // Throws DomainError on shape mismatch and Error on int64 overflow.
  IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);

  // Exact determinant (fraction-free Bareiss elimination).
  std::int64_t determinant(IntMatrix const& m);

  // Entrywise reduction into [0, m). Throws DomainError if m < 2.
  IntMatrix mod_reduction(IntMatrix const& m, std::int64_t modulus);

  std::string to_string(IntMatrix const& m);

}  // namespace minquot
