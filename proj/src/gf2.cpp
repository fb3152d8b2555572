#include "minquot/gf2.hpp"

#include <bit>
#include <utility>

#include "minquot/errors.hpp"

namespace minquot {

  namespace {
    void check_dimension(std::size_t n) {
      if (n == 0 || n > kMaxGf2Dimension) {
        throw DomainError("GF(2) dimension must be in 1.."
                          + std::to_string(kMaxGf2Dimension));
      }
    }

    void check_same(GF2Matrix const& a, GF2Matrix const& b) {
      if (a.dimension() != b.dimension()) {
        throw DomainError("GF(2) matrices of different dimension");
      }
    }
  }  // namespace

  GF2Matrix::GF2Matrix(std::size_t n) : n_(n) {
    check_dimension(n);
  }

  GF2Matrix::GF2Matrix(std::size_t n, std::span<Gf2Vector const> rows)
      : GF2Matrix(n) {
    if (rows.size() != n) {
      throw DomainError("expected " + std::to_string(n) + " rows");
    }
    Gf2Vector const mask = (Gf2Vector{1} << n) - 1;
    for (std::size_t r = 0; r < n; ++r) {
      if (rows[r] & ~mask) {
        throw DomainError("row has bits beyond the dimension");
      }
      rows_[r] = rows[r];
    }
  }

  GF2Matrix GF2Matrix::identity(std::size_t n) {
    GF2Matrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
      m.rows_[r] = Gf2Vector{1} << r;
    }
    return m;
  }

  GF2Matrix GF2Matrix::elementary(std::size_t n, std::size_t i, std::size_t j) {
    if (i == j || i == 0 || j == 0 || i > n || j > n) {
      throw DomainError("elementary matrix needs distinct indices in 1..n");
    }
    GF2Matrix m = identity(n);
    m.set(i - 1, j - 1, true);
    return m;
  }

  GF2Matrix GF2Matrix::from_packed(std::size_t n, std::uint64_t key) {
    GF2Matrix       m(n);
    Gf2Vector const mask = (Gf2Vector{1} << n) - 1;
    for (std::size_t r = 0; r < n; ++r) {
      m.rows_[r] = static_cast<Gf2Vector>(key >> (r * n)) & mask;
    }
    return m;
  }

  GF2Matrix GF2Matrix::from_int(IntMatrix const& m) {
    if (m.rows() != m.cols()) {
      throw DomainError("expected a square integer matrix");
    }
    GF2Matrix out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        out.set(r, c, (m(r, c) & 1) != 0);
      }
    }
    return out;
  }

  void GF2Matrix::set(std::size_t r, std::size_t c, bool value) {
    if (value) {
      rows_[r] |= Gf2Vector{1} << c;
    } else {
      rows_[r] &= ~(Gf2Vector{1} << c);
    }
  }

  std::uint64_t GF2Matrix::packed() const noexcept {
    std::uint64_t key = 0;
    for (std::size_t r = 0; r < n_; ++r) {
      key |= static_cast<std::uint64_t>(rows_[r]) << (r * n_);
    }
    return key;
  }

  GF2Matrix GF2Matrix::transpose() const {
    GF2Matrix t(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = 0; c < n_; ++c) {
        t.set(c, r, at(r, c));
      }
    }
    return t;
  }

  GF2Matrix mat_mul(GF2Matrix const& a, GF2Matrix const& b) {
    check_same(a, b);
    GF2Matrix out(a.dimension());
    for (std::size_t r = 0; r < a.dimension(); ++r) {
      Gf2Vector acc = 0;
      for (Gf2Vector bits = a.row(r); bits != 0; bits &= bits - 1) {
        acc ^= b.row(static_cast<std::size_t>(std::countr_zero(bits)));
      }
      out.set_row(r, acc);
    }
    return out;
  }

  Gf2Vector vec_mul(Gf2Vector v, GF2Matrix const& m) {
    Gf2Vector acc = 0;
    for (; v != 0; v &= v - 1) {
      acc ^= m.row(static_cast<std::size_t>(std::countr_zero(v)));
    }
    return acc;
  }

  GF2Matrix mat_inv(GF2Matrix const& m) {
    std::size_t const      n = m.dimension();
    std::vector<Gf2Vector> a(n), inv(n);
    for (std::size_t r = 0; r < n; ++r) {
      a[r]   = m.row(r);
      inv[r] = Gf2Vector{1} << r;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && !((a[p] >> c) & 1u)) {
        ++p;
      }
      if (p == n) {
        throw DomainError("singular GF(2) matrix");
      }
      std::swap(a[p], a[c]);
      std::swap(inv[p], inv[c]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r != c && ((a[r] >> c) & 1u)) {
          a[r] ^= a[c];
          inv[r] ^= inv[c];
        }
      }
    }
    GF2Matrix out(n, inv);
    if (mat_mul(m, out) != GF2Matrix::identity(n)) {
      throw std::logic_error("GF(2) inverse failed verification");
    }
    return out;
  }

  bool det_gf2(GF2Matrix const& m) {
    std::vector<Gf2Vector> rows;
    for (std::size_t r = 0; r < m.dimension(); ++r) {
      rows.push_back(m.row(r));
    }
    return gf2_rank(rows) == m.dimension();
  }

  std::size_t gf2_rank(std::span<Gf2Vector const> vectors) {
    // Reduced echelon basis keyed by leading bit.
    std::array<Gf2Vector, 32> pivot{};
    std::size_t               rank = 0;
    for (Gf2Vector v : vectors) {
      while (v != 0) {
        int const top = 31 - std::countl_zero(v);
        if (pivot[top] == 0) {
          pivot[top] = v;
          ++rank;
          break;
        }
        v ^= pivot[top];
      }
    }
    return rank;
  }

  bool in_span(std::span<Gf2Vector const> basis, Gf2Vector v) {
    std::vector<Gf2Vector> extended(basis.begin(), basis.end());
    std::size_t const      before = gf2_rank(extended);
    extended.push_back(v);
    return gf2_rank(extended) == before;
  }

  std::string render_vector(Gf2Vector v, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t j = 0; j < n; ++j) {
      if ((v >> j) & 1u) {
        s[j] = '1';
      }
    }
    return s;
  }

  std::vector<std::string> render_rows(GF2Matrix const& m) {
    std::vector<std::string> out;
    for (std::size_t r = 0; r < m.dimension(); ++r) {
      out.push_back(render_vector(m.row(r), m.dimension()));
    }
    return out;
  }

}  // namespace minquot
