#include "minquot/sl_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "minquot/errors.hpp"

namespace minquot {

  namespace {
    // Breadth-first closure of `gens`, returned sorted.
    std::vector<std::uint32_t> close(GroupTable const&              table,
                                     std::span<std::uint32_t const> gens) {
      std::vector<char>          seen(table.size(), 0);
      std::vector<std::uint32_t> members{GroupTable::identity()};
      seen[GroupTable::identity()] = 1;
      for (std::size_t head = 0; head < members.size(); ++head) {
        std::uint32_t const x = members[head];
        for (std::uint32_t g : gens) {
          std::uint32_t const y = table.multiply(x, g);
          if (!seen[y]) {
            seen[y] = 1;
            members.push_back(y);
          }
        }
      }
      std::sort(members.begin(), members.end());
      return members;
    }

    // Keeps the candidates that enlarge the closure so far.
    std::vector<std::uint32_t> irredundant(
        GroupTable const&              table,
        std::span<std::uint32_t const> candidates,
        std::vector<std::uint32_t>&    closure) {
      std::vector<std::uint32_t> gens;
      closure = {GroupTable::identity()};
      for (std::uint32_t c : candidates) {
        if (c >= table.size()) {
          throw DomainError("element index " + std::to_string(c)
                            + " is not in the table");
        }
        if (std::binary_search(closure.begin(), closure.end(), c)) {
          continue;
        }
        gens.push_back(c);
        closure = close(table, gens);
      }
      return gens;
    }

    std::uint32_t conjugate(GroupTable const& t,
                            std::uint32_t     g,
                            std::uint32_t     h) {
      return t.multiply(t.multiply(g, h), t.inverse(g));
    }

    std::vector<std::uint32_t> conjugate_members(GroupTable const& t,
                                                 std::uint32_t     g,
                                                 Subgroup const&   h) {
      std::vector<std::uint32_t> out;
      out.reserve(h.order());
      for (std::uint32_t x : h.members()) {
        out.push_back(conjugate(t, g, x));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    void check_dimension(GroupTable const& table, std::size_t n) {
      if (table.dimension() != n) {
        throw DomainError("expected a table of SL(" + std::to_string(n)
                          + ",2), got SL(" + std::to_string(table.dimension())
                          + ",2)");
      }
    }
  }  // namespace

  std::uint64_t sl_order_formula(std::size_t n) {
    std::uint64_t order = 1;
    for (std::size_t k = 0; k < n; ++k) {
      order *= (std::uint64_t{1} << n) - (std::uint64_t{1} << k);
    }
    return order;
  }

  GroupTable GroupTable::enumerate(std::size_t n, bool allow_large) {
    if (n < 2 || n > 5 || (n == 5 && !allow_large)) {
      throw DomainError(
          "SL(n,2) enumeration supports 2 <= n <= 4 (n = 5 needs an explicit "
          "opt-in)");
    }
    GroupTable t(n);
    t.lookup_.assign(std::size_t{1} << (n * n), kAbsent);

    std::vector<GF2Matrix> gens;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        if (i != j) {
          gens.push_back(GF2Matrix::elementary(n, i, j));
        }
      }
    }

    auto const expected = sl_order_formula(n);
    t.keys_.reserve(expected);
    auto const id = GF2Matrix::identity(n).packed();
    t.keys_.push_back(id);
    t.lookup_[id] = 0;
    for (std::size_t head = 0; head < t.keys_.size(); ++head) {
      GF2Matrix const x = GF2Matrix::from_packed(n, t.keys_[head]);
      for (auto const& g : gens) {
        auto const key = mat_mul(x, g).packed();
        if (t.lookup_[key] == kAbsent) {
          t.lookup_[key] = static_cast<std::uint32_t>(t.keys_.size());
          t.keys_.push_back(key);
        }
      }
    }
    if (t.keys_.size() != expected) {
      throw std::logic_error("SL(n,2) enumeration produced the wrong order");
    }

    for (auto const& g : gens) {
      t.generators_.push_back(t.lookup_[g.packed()]);
    }
    t.inverses_.resize(t.keys_.size());
    for (std::size_t idx = 0; idx < t.keys_.size(); ++idx) {
      auto const inv = mat_inv(GF2Matrix::from_packed(n, t.keys_[idx]));
      t.inverses_[idx] = t.lookup_[inv.packed()];
    }
    return t;
  }

  std::optional<std::uint32_t> GroupTable::index_of(GF2Matrix const& m) const {
    if (m.dimension() != n_) {
      return std::nullopt;
    }
    auto const idx = lookup_[m.packed()];
    if (idx == kAbsent) {
      return std::nullopt;
    }
    return idx;
  }

  std::uint32_t GroupTable::require_index(GF2Matrix const& m) const {
    auto idx = index_of(m);
    if (!idx) {
      throw DomainError("matrix is not an element of SL("
                        + std::to_string(n_) + ",2)");
    }
    return *idx;
  }

  std::uint32_t GroupTable::multiply(std::uint32_t a, std::uint32_t b) const {
    auto const prod = mat_mul(element(a), element(b));
    return lookup_[prod.packed()];
  }

  bool Subgroup::contains(std::uint32_t idx) const {
    return std::binary_search(members_.begin(), members_.end(), idx);
  }

  std::uint64_t Subgroup::content_hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint32_t m : members_) {
      for (int byte = 0; byte < 4; ++byte) {
        h ^= (m >> (8 * byte)) & 0xFFu;
        h *= 0x100000001b3ull;
      }
    }
    return h;
  }

  Subgroup subgroup_closure(GroupTable const&              table,
                            std::span<std::uint32_t const> gens) {
    Subgroup h;
    h.parent_     = &table;
    h.generators_ = irredundant(table, gens, h.members_);
    return h;
  }

  Subgroup subgroup_from_members(GroupTable const&          table,
                                 std::vector<std::uint32_t> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup h;
    h.parent_     = &table;
    h.generators_ = irredundant(table, members, h.members_);
    if (h.members_ != members) {
      throw std::logic_error("member set is not a subgroup");
    }
    return h;
  }

  Subgroup conjugate_subgroup(std::uint32_t g, Subgroup const& h) {
    auto const& t = h.parent();
    if (g >= t.size()) {
      throw DomainError("element index " + std::to_string(g)
                        + " is not in the table");
    }
    std::vector<std::uint32_t> gens;
    for (std::uint32_t x : h.generators()) {
      gens.push_back(conjugate(t, g, x));
    }
    auto out = subgroup_closure(t, gens);
    if (out.order() != h.order()) {
      throw std::logic_error("conjugation changed the subgroup order");
    }
    return out;
  }

  std::vector<Subgroup> orbit_of_subgroup(Subgroup const& h) {
    auto const&                          t = h.parent();
    std::vector<Subgroup>                orbit{h};
    std::set<std::vector<std::uint32_t>> seen;
    seen.emplace(h.members().begin(), h.members().end());
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (std::uint32_t g : t.generators()) {
        auto members = conjugate_members(t, g, orbit[head]);
        if (seen.insert(members).second) {
          orbit.push_back(conjugate_subgroup(g, orbit[head]));
        }
      }
    }
    return orbit;
  }

  Subgroup normalizer(Subgroup const& h) {
    auto const&                t = h.parent();
    std::vector<std::uint32_t> members;
    for (std::uint32_t g = 0; g < t.size(); ++g) {
      bool stable = true;
      for (std::uint32_t x : h.generators()) {
        if (!h.contains(conjugate(t, g, x))) {
          stable = false;
          break;
        }
      }
      if (stable) {
        members.push_back(g);
      }
    }
    return subgroup_from_members(t, std::move(members));
  }

  OrbitStabilizer orbit_stabilizer(Subgroup const& h) {
    OrbitStabilizer out{orbit_of_subgroup(h), normalizer(h)};
    if (out.orbit.size() * out.stabilizer.order() != h.parent().size()) {
      throw std::logic_error("orbit-stabilizer count mismatch");
    }
    return out;
  }

  Subgroup hyperplane_stabilizer(Hyperplane const& p, GroupTable const& table) {
    check_dimension(table, p.dimension());
    std::vector<std::uint32_t> members;
    for (std::uint32_t g = 0; g < table.size(); ++g) {
      GF2Matrix const m = table.element(g);
      bool            keeps = true;
      for (Gf2Vector v : p.basis()) {
        if (!p.contains(vec_mul(v, m))) {
          keeps = false;
          break;
        }
      }
      if (keeps) {
        members.push_back(g);
      }
    }
    return subgroup_from_members(table, std::move(members));
  }

  GF2Matrix reduce_mod2(Automorphism const& f) {
    return GF2Matrix::from_int(abelianization_matrix(f));
  }

  GF2Matrix pi(Automorphism const& f) {
    if (!is_special(f)) {
      throw DomainError("pi is defined on special automorphisms only");
    }
    return reduce_mod2(f);
  }

  std::vector<Automorphism> c_standard_generators(std::size_t rank) {
    if (rank < 2) {
      throw DomainError("the standard subgroup needs rank at least 2");
    }
    auto const                n = static_cast<std::uint32_t>(rank - 1);
    std::vector<Automorphism> gens;
    for (std::uint32_t i = 1; i <= n; ++i) {
      for (std::uint32_t j = 1; j <= n; ++j) {
        if (i != j) {
          gens.push_back(transvection(Side::right, i, j, rank));
          gens.push_back(transvection(Side::left, i, j, rank));
        }
      }
    }
    Word const one(rank);
    for (std::uint32_t j = 1; j <= n; ++j) {
      Word const xj = Word::generator(j, rank);
      gens.push_back(b_element(xj, one));
      gens.push_back(b_element(one, xj));
    }
    return gens;
  }

  Subgroup c_subgroup_image(Indicator const&             ind,
                            GroupTable const&            table,
                            std::optional<std::uint32_t> appended) {
    std::size_t const rank = ind.size();
    check_dimension(table, rank);
    auto const beta     = complete_basis(ind, appended).change;
    auto const beta_inv = inverse(beta);
    auto const standard = c_standard_generators(rank);

    std::vector<std::uint32_t> via_automorphisms;
    std::vector<std::uint32_t> standard_image;
    for (auto const& g : standard) {
      via_automorphisms.push_back(
          table.require_index(pi(beta_inv * g * beta)));
      standard_image.push_back(table.require_index(pi(g)));
    }
    auto image = subgroup_closure(table, via_automorphisms);

    GF2Matrix const            m     = reduce_mod2(beta);
    GF2Matrix const            m_inv = mat_inv(m);
    std::vector<std::uint32_t> via_matrices;
    auto const                 standard_closure =
        subgroup_closure(table, standard_image);
    for (std::uint32_t x : standard_closure.members()) {
      via_matrices.push_back(
          table.require_index(m_inv * table.element(x) * m));
    }
    std::sort(via_matrices.begin(), via_matrices.end());
    if (!std::ranges::equal(via_matrices, image.members())) {
      throw std::logic_error(
          "automorphism and matrix routes disagree on the image of C_I");
    }
    return image;
  }

  std::vector<GF2Matrix> b_images(std::size_t n, GroupTable const& table) {
    check_dimension(table, n + 1);
    std::size_t const      rank = n + 1;
    std::vector<GF2Matrix> out;
    for (std::uint32_t p = 0; p < (1u << n); ++p) {
      auto f = Automorphism::identity(rank);
      for (std::uint32_t j = 1; j <= n; ++j) {
        if ((p >> (j - 1)) & 1u) {
          f = f * transvection(Side::right, static_cast<std::uint32_t>(rank),
                               j, rank);
        }
      }
      out.push_back(pi(f));
    }
    return out;
  }

}  // namespace minquot
