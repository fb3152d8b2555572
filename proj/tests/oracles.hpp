#pragma once

// Deliberately naive reference implementations, independent of the library
// code paths they are compared against.

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <vector>

#include "minquot/automorphism.hpp"
#include "minquot/finite_group.hpp"
#include "minquot/homs.hpp"
#include "minquot/int_matrix.hpp"
#include "minquot/presentation.hpp"
#include "minquot/word.hpp"

namespace oracle {

  // Signed generator indices, +k for x_k and -k for its inverse.
  using Raw = std::vector<int>;

  // Repeated passes deleting the first adjacent inverse pair found.
  inline Raw naive_reduce(Raw w) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == -w[i + 1]) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                  w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  inline Raw raw(minquot::Word const& w) {
    Raw out;
    for (auto l : w.letters()) {
      out.push_back(static_cast<int>(l.index()) * l.sign());
    }
    return out;
  }

  // Substitute images[k-1] for x_k, literally.
  inline Raw substitute(std::vector<Raw> const& images, Raw const& w) {
    Raw out;
    for (int l : w) {
      Raw const& img = images[static_cast<std::size_t>(std::abs(l)) - 1];
      if (l > 0) {
        out.insert(out.end(), img.begin(), img.end());
      } else {
        for (auto it = img.rbegin(); it != img.rend(); ++it) {
          out.push_back(-*it);
        }
      }
    }
    return naive_reduce(out);
  }

  inline std::vector<Raw> images_of(minquot::Automorphism const& f) {
    std::vector<Raw> out;
    for (auto const& w : f.images()) {
      out.push_back(raw(w));
    }
    return out;
  }

  // Images of an elementary move, written out from its definition.
  inline std::vector<Raw> elementary_images(minquot::ElementaryMove m,
                                            std::size_t             rank) {
    std::vector<Raw> out;
    for (int k = 1; k <= static_cast<int>(rank); ++k) {
      out.push_back({k});
    }
    int const i = static_cast<int>(m.i);
    int const j = static_cast<int>(m.j);
    switch (m.kind) {
      case minquot::ElementaryMove::Kind::right_transvection:
        out[i - 1] = {i, j};
        break;
      case minquot::ElementaryMove::Kind::left_transvection:
        out[i - 1] = {-j, i};
        break;
      case minquot::ElementaryMove::Kind::inversion:
        out[i - 1] = {-i};
        break;
      case minquot::ElementaryMove::Kind::swap:
        out[i - 1] = {j};
        out[j - 1] = {i};
        break;
    }
    return out;
  }

  // Left-to-right: first f, then g.
  inline std::vector<Raw> compose(std::vector<Raw> const& f,
                                  std::vector<Raw> const& g) {
    std::vector<Raw> out;
    for (auto const& img : f) {
      out.push_back(substitute(g, img));
    }
    return out;
  }

  inline std::vector<Raw> replay(minquot::Certificate const& moves,
                                 std::size_t                 rank) {
    std::vector<Raw> cur;
    for (int k = 1; k <= static_cast<int>(rank); ++k) {
      cur.push_back({k});
    }
    for (auto const& m : moves) {
      cur = compose(cur, elementary_images(m, rank));
    }
    return cur;
  }

  // ---- random inputs ---------------------------------------------------

  inline minquot::Word random_word(std::mt19937_64& rng,
                                   std::size_t      rank,
                                   std::size_t      max_len) {
    std::uniform_int_distribution<std::size_t>   len(0, max_len);
    std::uniform_int_distribution<std::uint32_t>  gen(1, static_cast<std::uint32_t>(rank));
    std::uniform_int_distribution<int>            coin(0, 1);
    std::vector<minquot::Letter>                  letters;
    for (std::size_t t = len(rng); t > 0; --t) {
      letters.emplace_back(gen(rng), coin(rng) ? 1 : -1);
    }
    return minquot::Word(letters, rank);
  }

  inline minquot::Certificate random_certificate(std::mt19937_64& rng,
                                                 std::size_t      rank,
                                                 std::size_t      max_len,
                                                 bool special_only = false) {
    std::uniform_int_distribution<std::size_t>   len(0, max_len);
    std::uniform_int_distribution<std::uint32_t> gen(1, static_cast<std::uint32_t>(rank));
    std::uniform_int_distribution<int>           kind(0, special_only ? 1 : 3);
    minquot::Certificate                         out;
    for (std::size_t t = len(rng); t > 0; --t) {
      std::uint32_t const i = gen(rng);
      std::uint32_t       j = gen(rng);
      while (j == i) {
        j = gen(rng);
      }
      switch (kind(rng)) {
        case 0:
          out.push_back(minquot::ElementaryMove::right(i, j));
          break;
        case 1:
          out.push_back(minquot::ElementaryMove::left(i, j));
          break;
        case 2:
          out.push_back(minquot::ElementaryMove::invert(i));
          break;
        default:
          out.push_back(minquot::ElementaryMove::swap(i, j));
          break;
      }
    }
    return out;
  }

  // ---- homomorphisms -----------------------------------------------------

  // Every assignment of generator images, each relator evaluated in full.
  inline std::vector<minquot::Hom> brute_force_homs(
      minquot::Presentation const& p,
      minquot::FiniteGroup const&  g) {
    std::size_t const          k = p.generator_count();
    std::size_t                total = 1;
    for (std::size_t i = 0; i < k; ++i) {
      total *= g.order();
    }
    std::vector<minquot::Hom> out;
    for (std::size_t code = 0; code < total; ++code) {
      minquot::Hom h;
      std::size_t  c = code;
      h.images.assign(k, 0);
      for (std::size_t i = k; i-- > 0;) {
        h.images[i] = static_cast<std::uint32_t>(c % g.order());
        c /= g.order();
      }
      bool ok = true;
      for (auto const& rel : p.relators()) {
        std::uint32_t acc = g.identity();
        for (auto const& s : rel) {
          std::uint32_t const x    = h.images[s.generator];
          std::uint32_t const step = s.exponent > 0 ? x : g.inverse(x);
          for (std::int64_t t = 0; t < std::abs(s.exponent); ++t) {
            acc = g.multiply(acc, step);
          }
        }
        ok = ok && acc == g.identity();
      }
      if (ok) {
        out.push_back(h);
      }
    }
    return out;
  }

  // ---- Smith normal form ----------------------------------------------

  inline std::int64_t minor_det(minquot::IntMatrix const&       m,
                                std::vector<std::size_t> const& rows,
                                std::vector<std::size_t> const& cols) {
    // Laplace expansion; k <= 4.
    std::size_t const k = rows.size();
    if (k == 1) {
      return m(rows[0], cols[0]);
    }
    std::int64_t det = 0;
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
      std::vector<std::size_t> sub_cols;
      for (std::size_t t = 0; t < k; ++t) {
        if (t != c) {
          sub_cols.push_back(cols[t]);
        }
      }
      std::int64_t const term = m(rows[0], cols[c]) * minor_det(m, sub_rows, sub_cols);
      det += c % 2 == 0 ? term : -term;
    }
    return det;
  }

  inline void subsets(std::size_t                            n,
                      std::size_t                            k,
                      std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      out.push_back(pick);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) {
        --i;
      }
      if (i == 0) {
        return;
      }
      ++pick[i - 1];
      for (std::size_t t = i; t < k; ++t) {
        pick[t] = pick[t - 1] + 1;
      }
    }
  }

  // Diagonal of the Smith form from determinantal divisors: d_k = D_k /
  // D_{k-1}, where D_k is the gcd of all k x k minors. Then the same
  // convention as SmithForm::invariant_factors: drop 1s, zeros for rank
  // deficiency and one zero per column beyond the row count.
  inline std::vector<std::int64_t> minor_gcd_invariants(minquot::IntMatrix const& m) {
    std::size_t const         r = m.rows();
    std::size_t const         c = m.cols();
    std::size_t const         kmax = std::min(r, c);
    std::vector<std::int64_t> diag;
    std::int64_t              prev = 1;
    for (std::size_t k = 1; k <= kmax; ++k) {
      std::vector<std::vector<std::size_t>> rs, cs;
      subsets(r, k, rs);
      subsets(c, k, cs);
      std::int64_t g = 0;
      for (auto const& a : rs) {
        for (auto const& b : cs) {
          g = std::gcd(g, minor_det(m, a, b));
        }
      }
      if (g == 0) {
        for (; k <= kmax; ++k) {
          diag.push_back(0);
        }
        break;
      }
      diag.push_back(g / prev);
      prev = g;
    }
    std::vector<std::int64_t> out;
    for (auto d : diag) {
      if (d != 1) {
        out.push_back(d);
      }
    }
    for (std::size_t k = r; k < c; ++k) {
      out.push_back(0);
    }
    return out;
  }

}  // namespace oracle
