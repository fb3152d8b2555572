#include "minquot/hyperplane.hpp"

#include <array>
#include <bit>
#include <utility>

#include "minquot/errors.hpp"

namespace minquot {

  namespace {
    Gf2Vector full_mask(std::size_t n) {
      return (Gf2Vector{1} << n) - 1;
    }

    bool even_pairing(Gf2Vector a, Gf2Vector b) {
      return (std::popcount(a & b) & 1) == 0;
    }

    void check_same_size(Indicator const& a, Indicator const& b) {
      if (a.size() != b.size()) {
        throw RankError("indicators of different length");
      }
    }

    // A word written in relabelled generators: (label, sign) pairs.
    using LabelledWord = std::vector<std::pair<std::uint32_t, int>>;
  }  // namespace

  Indicator::Indicator(std::size_t n, Gf2Vector bits) : n_(n), bits_(bits) {
    if (n == 0 || n > kMaxGf2Dimension) {
      throw DomainError("indicator length must be in 1.."
                        + std::to_string(kMaxGf2Dimension));
    }
    if (bits & ~full_mask(n)) {
      throw DomainError("indicator has bits beyond its length");
    }
    if (bits == full_mask(n)) {
      throw DomainError("the all-ones vector is not a hyperplane indicator");
    }
  }

  Indicator Indicator::parse(std::string_view bits) {
    Gf2Vector v = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
      if (bits[j] == '1') {
        v |= Gf2Vector{1} << j;
      } else if (bits[j] != '0') {
        throw ParseError("indicator must be a 0/1 string", j);
      }
    }
    return Indicator(bits.size(), v);
  }

  std::vector<Indicator> Indicator::all(std::size_t n) {
    std::vector<Indicator> out;
    for (Gf2Vector v = 0; v < full_mask(n); ++v) {
      out.emplace_back(n, v);
    }
    return out;
  }

  std::vector<std::uint32_t> Indicator::zero_positions() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t j = 1; j <= n_; ++j) {
      if (!bit(j)) {
        out.push_back(j);
      }
    }
    return out;
  }

  std::vector<std::uint32_t> Indicator::one_positions() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t j = 1; j <= n_; ++j) {
      if (bit(j)) {
        out.push_back(j);
      }
    }
    return out;
  }

  std::string Indicator::to_string() const {
    return render_vector(bits_, n_);
  }

  Hyperplane::Hyperplane(std::size_t n, std::vector<Gf2Vector> basis)
      : n_(n), basis_(std::move(basis)), normal_(0) {
    if (n == 0 || n > kMaxGf2Dimension) {
      throw DomainError("hyperplane dimension must be in 1.."
                        + std::to_string(kMaxGf2Dimension));
    }
    for (Gf2Vector b : basis_) {
      if (b & ~full_mask(n)) {
        throw DomainError("basis vector has bits beyond the dimension");
      }
    }
    if (basis_.size() != n - 1 || gf2_rank(basis_) != n - 1) {
      throw DomainError("a hyperplane basis needs n-1 independent vectors");
    }
    for (Gf2Vector f = 1; f <= full_mask(n); ++f) {
      bool ok = true;
      for (Gf2Vector b : basis_) {
        ok = ok && even_pairing(f, b);
      }
      if (ok) {
        normal_ = f;
        break;
      }
    }
  }

  bool Hyperplane::contains(Gf2Vector v) const noexcept {
    return even_pairing(v, normal_);
  }

  Hyperplane hyperplane_basis(Indicator const& ind) {
    auto const             zeros = ind.zero_positions();
    std::vector<Gf2Vector> basis;
    for (std::size_t t = 0; t + 1 < zeros.size(); ++t) {
      basis.push_back(unit_vector(zeros[t]) | unit_vector(zeros[t + 1]));
    }
    for (std::uint32_t o : ind.one_positions()) {
      basis.push_back(unit_vector(o));
    }
    return Hyperplane(ind.size(), std::move(basis));
  }

  Indicator indicator_of(Hyperplane const& p) {
    Gf2Vector bits = 0;
    for (std::size_t j = 1; j <= p.dimension(); ++j) {
      if (in_span(p.basis(), unit_vector(j))) {
        bits |= unit_vector(j);
      }
    }
    return Indicator(p.dimension(), bits);
  }

  std::vector<Word> s_basis(Indicator const& ind) {
    std::size_t const n     = ind.size();
    auto const        zeros = ind.zero_positions();
    std::vector<Word> out;
    for (std::size_t t = 0; t + 1 < zeros.size(); ++t) {
      out.push_back(Word({Letter(zeros[t], 1), Letter(zeros[t + 1], -1)}, n));
    }
    for (std::uint32_t o : ind.one_positions()) {
      out.push_back(Word::generator(o, n));
    }
    return out;
  }

  CompletedBasis complete_basis(Indicator const&             ind,
                                std::optional<std::uint32_t> appended) {
    std::uint32_t const j = appended.value_or(ind.zero_positions().front());
    if (j == 0 || j > ind.size() || ind.bit(j)) {
      throw DomainError("the appended generator must be a zero position of "
                        + ind.to_string());
    }
    auto basis = s_basis(ind);
    basis.push_back(Word::generator(j, ind.size()));
    auto change = certify_basis(basis);
    return {std::move(basis), std::move(change)};
  }

  // The construction sorts positions into four blocks by the pair
  // (ind, other): A = (1,0), B = (0,1), C = (1,1), D = (0,0), relabels so
  // the blocks are consecutive in that order, writes the new basis in the
  // relabelled generators and finally undoes the relabelling.
  //
  // With both A and B nonempty (a = |A|, n0 = |A| + |B|):
  //   y_1 = x_1, y_2 = x_{a+1},
  //   y_{2+j} = x_j x_{j+1}^{-1}  for 1 <= j <= a-1   (A chain)
  //   y_{1+j} = x_j x_{j+1}^{-1}  for a+1 <= j <= n0-1 (B chain)
  //   then x_t for each t in C,
  //   then x_t x_{t+1}^{-1} along D, closing with x_1 x_{d1}^{-1} x_{a+1}
  //   where d1 is the first D label.
  //
  // If A is empty, D cannot be (other is not all-ones) and we take
  // y_1 = x_{b1} x_{d1}^{-1}, y_2 = x_{b1}; symmetrically if B is empty,
  // y_1 = x_{a1}, y_2 = x_{a1} x_{d1}^{-1}. The remaining chains are as
  // above without the closing element.
  Automorphism lemma_a_change(Indicator const& ind, Indicator const& other) {
    check_same_size(ind, other);
    if (ind == other) {
      throw DomainError("lemma_a_change needs two distinct indicators");
    }
    std::size_t const                         n = ind.size();
    std::array<std::vector<std::uint32_t>, 4> blocks;  // A, B, C, D
    for (std::uint32_t j = 1; j <= n; ++j) {
      int const cls = ind.bit(j) ? (other.bit(j) ? 2 : 0)
                                 : (other.bit(j) ? 1 : 3);
      blocks[cls].push_back(j);
    }
    std::vector<std::uint32_t> order;  // order[label - 1] = original index
    for (auto const& b : blocks) {
      order.insert(order.end(), b.begin(), b.end());
    }
    auto const a  = static_cast<std::uint32_t>(blocks[0].size());
    auto const b  = static_cast<std::uint32_t>(blocks[1].size());
    auto const c  = static_cast<std::uint32_t>(blocks[2].size());
    auto const d  = static_cast<std::uint32_t>(blocks[3].size());
    auto const d1 = a + b + c + 1;  // first D label

    std::vector<LabelledWord> y;
    auto chain = [&y](std::uint32_t first, std::uint32_t count) {
      for (std::uint32_t t = first; t + 1 < first + count; ++t) {
        y.push_back({{t, 1}, {t + 1, -1}});
      }
    };
    auto ones = [&y](std::uint32_t first, std::uint32_t count) {
      for (std::uint32_t t = first; t < first + count; ++t) {
        y.push_back({{t, 1}});
      }
    };

    if (a > 0 && b > 0) {
      y.push_back({{1, 1}});
      y.push_back({{a + 1, 1}});
      chain(1, a);
      chain(a + 1, b);
      ones(a + b + 1, c);
      if (d > 0) {
        chain(d1, d);
        y.push_back({{1, 1}, {d1, -1}, {a + 1, 1}});
      }
    } else if (a == 0) {
      y.push_back({{1, 1}, {d1, -1}});
      y.push_back({{1, 1}});
      chain(1, b);
      ones(b + 1, c);
      chain(d1, d);
    } else {
      y.push_back({{1, 1}});
      y.push_back({{1, 1}, {d1, -1}});
      chain(1, a);
      ones(a + 1, c);
      chain(d1, d);
    }

    std::vector<Word> basis;
    basis.reserve(n);
    for (auto const& lw : y) {
      std::vector<Letter> letters;
      for (auto [label, sign] : lw) {
        letters.emplace_back(order[label - 1], sign);
      }
      basis.emplace_back(letters, n);
    }
    if (basis.size() != n) {
      throw std::logic_error("lemma_a_change built the wrong number of words");
    }
    return certify_basis(basis);
  }

  bool verify_lemma_a(Indicator const&    ind,
                      Indicator const&    other,
                      Automorphism const& f) {
    check_same_size(ind, other);
    if (f.rank() != ind.size()) {
      throw RankError("automorphism rank does not match indicator length");
    }
    if (!f.is_certified()) {
      throw UnsupportedError("verify_lemma_a expects a certified basis change");
    }
    std::size_t const n = ind.size();
    if (n < 2) {
      return false;
    }
    GF2Matrix const m = GF2Matrix::from_int(abelianization_matrix(f));
    if (!det_gf2(m)) {
      return false;
    }
    GF2Matrix const to_new = mat_inv(m);

    auto in_new_coordinates = [&](Indicator const& i) {
      auto                   p = hyperplane_basis(i);
      std::vector<Gf2Vector> rows;
      for (Gf2Vector v : p.basis()) {
        rows.push_back(vec_mul(v, to_new));
      }
      return indicator_of(Hyperplane(n, std::move(rows)));
    };

    Gf2Vector const rest = full_mask(n) & ~Gf2Vector{3};
    Indicator const target_first(n, rest | 1u);
    Indicator const target_second(n, rest | 2u);
    return in_new_coordinates(ind) == target_first
           && in_new_coordinates(other) == target_second;
  }

}  // namespace minquot
