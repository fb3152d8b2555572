#include "minquot/finite_group.hpp"

#include <algorithm>
#include <map>

#include "minquot/errors.hpp"

namespace minquot {

  FiniteGroup::FiniteGroup(std::string                name,
                           std::size_t                order,
                           std::vector<std::uint32_t> table)
      : name_(std::move(name)), order_(order), table_(std::move(table)) {
    if (order_ == 0 || table_.size() != order_ * order_) {
      throw DomainError(name_ + ": table size does not match order");
    }
    for (std::uint32_t x : table_) {
      if (x >= order_) {
        throw DomainError(name_ + ": table entry out of range");
      }
    }
    bool found = false;
    for (std::uint32_t e = 0; e < order_ && !found; ++e) {
      bool ok = true;
      for (std::uint32_t x = 0; x < order_ && ok; ++x) {
        ok = multiply(e, x) == x && multiply(x, e) == x;
      }
      if (ok) {
        identity_ = e;
        found     = true;
      }
    }
    if (!found) {
      throw DomainError(name_ + ": no identity element");
    }
    inverses_.assign(order_, order_);
    for (std::uint32_t x = 0; x < order_; ++x) {
      for (std::uint32_t y = 0; y < order_; ++y) {
        if (multiply(x, y) == identity_ && multiply(y, x) == identity_) {
          inverses_[x] = y;
          break;
        }
      }
      if (inverses_[x] == order_) {
        throw DomainError(name_ + ": element without inverse");
      }
    }
    for (std::uint32_t a = 0; a < order_; ++a) {
      for (std::uint32_t b = 0; b < order_; ++b) {
        std::uint32_t const ab = multiply(a, b);
        for (std::uint32_t c = 0; c < order_; ++c) {
          if (multiply(ab, c) != multiply(a, multiply(b, c))) {
            throw DomainError(name_ + ": multiplication is not associative");
          }
        }
      }
    }
  }

  std::uint32_t FiniteGroup::power(std::uint32_t x, std::int64_t e) const {
    if (e < 0) {
      x = inverse(x);
      e = -e;
    }
    e %= static_cast<std::int64_t>(element_order(x));
    std::uint32_t acc = identity_;
    for (std::int64_t k = 0; k < e; ++k) {
      acc = multiply(acc, x);
    }
    return acc;
  }

  std::size_t FiniteGroup::element_order(std::uint32_t x) const {
    std::size_t   k   = 1;
    std::uint32_t acc = x;
    while (acc != identity_) {
      acc = multiply(acc, x);
      ++k;
    }
    return k;
  }

  bool FiniteGroup::is_abelian() const {
    for (std::uint32_t a = 0; a < order_; ++a) {
      for (std::uint32_t b = a + 1; b < order_; ++b) {
        if (multiply(a, b) != multiply(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool FiniteGroup::is_cyclic() const {
    for (std::uint32_t x = 0; x < order_; ++x) {
      if (element_order(x) == order_) {
        return true;
      }
    }
    return false;
  }

  std::vector<std::uint32_t> FiniteGroup::generated(
      std::span<std::uint32_t const> gens) const {
    std::vector<char>          seen(order_, 0);
    std::vector<std::uint32_t> out{identity_};
    seen[identity_] = 1;
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (std::uint32_t g : gens) {
        std::uint32_t const y = multiply(out[head], g);
        if (!seen[y]) {
          seen[y] = 1;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  FiniteGroup cyclic_group(std::size_t n) {
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<std::uint32_t>((a + b) % n);
      }
    }
    return FiniteGroup("Z" + std::to_string(n), n, std::move(table));
  }

  FiniteGroup direct_product(FiniteGroup const& a,
                             FiniteGroup const& b,
                             std::string        name) {
    std::size_t const          n = a.order() * b.order();
    std::vector<std::uint32_t> table(n * n);
    auto                       split = [&](std::size_t x) {
      return std::pair{static_cast<std::uint32_t>(x / b.order()),
                       static_cast<std::uint32_t>(x % b.order())};
    };
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto [xa, xb] = split(x);
        auto [ya, yb] = split(y);
        table[x * n + y]
            = static_cast<std::uint32_t>(a.multiply(xa, ya) * b.order()
                                         + b.multiply(xb, yb));
      }
    }
    return FiniteGroup(std::move(name), n, std::move(table));
  }

  FiniteGroup permutation_group(
      std::string                                    name,
      std::vector<std::vector<std::uint32_t>> const& gens) {
    using Perm          = std::vector<std::uint32_t>;
    std::size_t const k = gens.empty() ? 0 : gens.front().size();
    Perm              id(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      id[i] = i;
    }
    // p * q: apply p, then q.
    auto mul = [k](Perm const& p, Perm const& q) {
      Perm r(k);
      for (std::size_t i = 0; i < k; ++i) {
        r[i] = q[p[i]];
      }
      return r;
    };
    std::vector<Perm>                 elems{id};
    std::map<Perm, std::uint32_t>     index{{id, 0}};
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (auto const& g : gens) {
        auto p = mul(elems[head], g);
        if (index.emplace(p, static_cast<std::uint32_t>(elems.size())).second) {
          elems.push_back(std::move(p));
        }
      }
    }
    std::size_t const          n = elems.size();
    std::vector<std::uint32_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = index.at(mul(elems[a], elems[b]));
      }
    }
    return FiniteGroup(std::move(name), n, std::move(table));
  }

  FiniteGroup quaternion_group() {
    // Element 4*s + u is (-1)^s times the unit u in {1, i, j, k}.
    static constexpr int unit[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::uint32_t> table(64);
    for (int x = 0; x < 8; ++x) {
      for (int y = 0; y < 8; ++y) {
        int const ux = x % 4, uy = y % 4;
        int const s  = (x / 4 + y / 4 + sign[ux][uy]) % 2;
        table[x * 8 + y] = static_cast<std::uint32_t>(4 * s + unit[ux][uy]);
      }
    }
    return FiniteGroup("Q8", 8, std::move(table));
  }

  std::vector<FiniteGroup> small_groups_catalog(std::size_t max_order) {
    if (max_order < 1 || max_order > 8) {
      throw DomainError("the small group catalog covers orders 1..8");
    }
    std::vector<FiniteGroup> out;
    auto add = [&](FiniteGroup g) {
      if (g.order() <= max_order) {
        out.push_back(std::move(g));
      }
    };
    auto const z2 = cyclic_group(2);
    for (std::size_t n = 1; n <= max_order; ++n) {
      add(cyclic_group(n));
      switch (n) {
        case 4:
          add(direct_product(z2, z2, "V4"));
          break;
        case 6:
          add(permutation_group("S3", {{1, 0, 2}, {1, 2, 0}}));
          break;
        case 8:
          add(direct_product(z2, cyclic_group(4), "Z2xZ4"));
          add(direct_product(z2, direct_product(z2, z2, "V4"), "Z2^3"));
          add(permutation_group("D4", {{1, 2, 3, 0}, {0, 3, 2, 1}}));
          add(quaternion_group());
          break;
        default:
          break;
      }
    }
    return out;
  }

  FiniteGroup group_by_name(std::string const& name) {
    if (name == "SL2" || name == "SL3") {
      auto const table = GroupTable::enumerate(name == "SL2" ? 2 : 3);
      return finite_group_from_table(table);
    }
    for (auto& g : small_groups_catalog(8)) {
      if (g.name() == name) {
        return g;
      }
    }
    throw DomainError("unknown group '" + name + "'");
  }

  FiniteGroup finite_group_from_table(GroupTable const& table) {
    std::size_t const n = table.size();
    if (n > 4096) {
      throw DomainError("multiplication table too large");
    }
    std::vector<std::uint32_t> mult(n * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        mult[a * n + b] = table.multiply(a, b);
      }
    }
    return FiniteGroup("SL" + std::to_string(table.dimension()), n,
                       std::move(mult));
  }

  std::vector<std::uint32_t> transpose_inverse_map(GroupTable const& table) {
    std::vector<std::uint32_t> out(table.size());
    for (std::uint32_t g = 0; g < table.size(); ++g) {
      out[g] = table.require_index(mat_inv(table.element(g).transpose()));
    }
    return out;
  }

}  // namespace minquot
