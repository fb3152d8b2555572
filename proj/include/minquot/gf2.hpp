#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "minquot/int_matrix.hpp"

namespace minquot {

  // A vector of GF(2)^n as a bit mask: bit j-1 is the coefficient of e_j.
  using Gf2Vector = std::uint32_t;

  inline constexpr std::size_t kMaxGf2Dimension = 8;

  // Square matrix over GF(2). Row r is a Gf2Vector; vectors act on the
  // right (v -> v * M), matching the row convention of abelianization
  // matrices.
  class GF2Matrix {
   public:
    explicit GF2Matrix(std::size_t n);
    GF2Matrix(std::size_t n, std::span<Gf2Vector const> rows);

    static GF2Matrix identity(std::size_t n);
    // I + e_{ij}, 1-based.
    static GF2Matrix elementary(std::size_t n, std::size_t i, std::size_t j);
    static GF2Matrix from_packed(std::size_t n, std::uint64_t key);
    // Entrywise reduction mod 2 of a square integer matrix.
    static GF2Matrix from_int(IntMatrix const& m);

    [[nodiscard]] std::size_t dimension() const noexcept {
      return n_;
    }
    [[nodiscard]] Gf2Vector row(std::size_t r) const noexcept {
      return rows_[r];
    }
    [[nodiscard]] bool at(std::size_t r, std::size_t c) const noexcept {
      return (rows_[r] >> c) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool value);
    void set_row(std::size_t r, Gf2Vector v) noexcept {
      rows_[r] = v;
    }

    // Row-major bit packing, n*n bits.
    [[nodiscard]] std::uint64_t packed() const noexcept;

    [[nodiscard]] GF2Matrix transpose() const;

    bool operator==(GF2Matrix const&) const = default;

   private:
    std::size_t                             n_;
    std::array<Gf2Vector, kMaxGf2Dimension> rows_{};
  };

  GF2Matrix mat_mul(GF2Matrix const& a, GF2Matrix const& b);
  // Throws DomainError if `m` is singular.
  GF2Matrix mat_inv(GF2Matrix const& m);
  bool      det_gf2(GF2Matrix const& m);

  inline GF2Matrix operator*(GF2Matrix const& a, GF2Matrix const& b) {
    return mat_mul(a, b);
  }

  Gf2Vector vec_mul(Gf2Vector v, GF2Matrix const& m);

  std::size_t gf2_rank(std::span<Gf2Vector const> vectors);
  bool        in_span(std::span<Gf2Vector const> basis, Gf2Vector v);

  inline Gf2Vector unit_vector(std::size_t j) {
    return Gf2Vector{1} << (j - 1);
  }

  // "101" means e_1 + e_3.
  std::string render_vector(Gf2Vector v, std::size_t n);
  // One bitstring per row.
  std::vector<std::string> render_rows(GF2Matrix const& m);

}  // namespace minquot
