#include "minquot/homs.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "minquot/errors.hpp"

namespace minquot {

  namespace {
    using Perm = std::vector<std::uint32_t>;

    bool is_automorphism(Perm const& a, FiniteGroup const& g) {
      if (a.size() != g.order()) {
        return false;
      }
      std::vector<char> hit(g.order(), 0);
      for (std::uint32_t x : a) {
        if (x >= g.order() || hit[x]) {
          return false;
        }
        hit[x] = 1;
      }
      for (std::uint32_t x = 0; x < g.order(); ++x) {
        for (std::uint32_t y = 0; y < g.order(); ++y) {
          if (a[g.multiply(x, y)] != g.multiply(a[x], a[y])) {
            return false;
          }
        }
      }
      return true;
    }

    // The group generated by inner automorphisms and `outer`, as a list of
    // permutations.
    std::vector<Perm> automorphism_closure(
        FiniteGroup const&                  g,
        std::span<Perm const>               outer) {
      std::vector<Perm> gens;
      for (std::uint32_t c = 0; c < g.order(); ++c) {
        Perm p(g.order());
        for (std::uint32_t x = 0; x < g.order(); ++x) {
          p[x] = g.multiply(g.multiply(c, x), g.inverse(c));
        }
        gens.push_back(std::move(p));
      }
      gens.insert(gens.end(), outer.begin(), outer.end());

      Perm id(g.order());
      for (std::uint32_t x = 0; x < g.order(); ++x) {
        id[x] = x;
      }
      std::vector<Perm> all{id};
      std::set<Perm>    seen{id};
      for (std::size_t head = 0; head < all.size(); ++head) {
        for (auto const& s : gens) {
          Perm p(g.order());
          for (std::uint32_t x = 0; x < g.order(); ++x) {
            p[x] = s[all[head][x]];
          }
          if (seen.insert(p).second) {
            all.push_back(std::move(p));
          }
        }
      }
      return all;
    }
  }  // namespace

  std::uint32_t evaluate(Relator const&                 r,
                         FiniteGroup const&             g,
                         std::span<std::uint32_t const> images) {
    std::uint32_t acc = g.identity();
    for (Syllable s : r) {
      acc = g.multiply(acc, g.power(images[s.generator], s.exponent));
    }
    return acc;
  }

  bool is_homomorphism(Presentation const& p,
                       FiniteGroup const&  g,
                       Hom const&          h) {
    if (h.images.size() != p.generator_count()) {
      return false;
    }
    for (auto const& r : p.relators()) {
      if (evaluate(r, g, h.images) != g.identity()) {
        return false;
      }
    }
    return true;
  }

  bool is_surjective(Hom const& h, FiniteGroup const& g) {
    return g.generated(h.images).size() == g.order();
  }

  std::vector<Hom> enumerate_homs(Presentation const& p,
                                  FiniteGroup const&  g,
                                  std::uint64_t       work_ceiling) {
    std::size_t const k = p.generator_count();
    // Saturating estimate of k * |G|^k.
    std::uint64_t work = k;
    for (std::size_t i = 0; i < k && work <= work_ceiling; ++i) {
      if (__builtin_mul_overflow(work, g.order(), &work)) {
        work = UINT64_MAX;
      }
    }
    if (work > work_ceiling) {
      throw RefusedError("homomorphism search into " + g.name()
                         + " exceeds the work ceiling of "
                         + std::to_string(work_ceiling));
    }

    // due[d] lists the relators whose highest generator is d.
    std::vector<std::vector<Relator const*>> due(k);
    for (auto const& r : p.relators()) {
      std::uint32_t last = 0;
      for (Syllable s : r) {
        last = std::max(last, s.generator);
      }
      due[last].push_back(&r);
    }

    std::vector<Hom>           out;
    std::vector<std::uint32_t> images(k, 0);
    auto search = [&](auto& self, std::size_t depth) -> void {
      if (depth == k) {
        out.push_back(Hom{images});
        return;
      }
      for (std::uint32_t x = 0; x < g.order(); ++x) {
        images[depth] = x;
        bool ok       = true;
        for (Relator const* r : due[depth]) {
          if (evaluate(*r, g, images) != g.identity()) {
            ok = false;
            break;
          }
        }
        if (ok) {
          self(self, depth + 1);
        }
      }
    };
    search(search, 0);
    return out;
  }

  std::vector<std::vector<Hom>> classify_surjections(
      std::span<Hom const>                        homs,
      FiniteGroup const&                          g,
      std::span<std::vector<std::uint32_t> const> outer_reps) {
    for (auto const& a : outer_reps) {
      if (!is_automorphism(a, g)) {
        throw DomainError("outer representative is not an automorphism of "
                          + g.name());
      }
    }
    std::set<Hom> surjections;
    for (auto const& h : homs) {
      if (is_surjective(h, g)) {
        surjections.insert(h);
      }
    }
    if (surjections.empty()) {
      return {};
    }
    auto const autos = automorphism_closure(g, outer_reps);

    std::vector<std::vector<Hom>> classes;
    std::set<Hom>                 placed;
    for (auto const& h : surjections) {
      if (placed.count(h)) {
        continue;
      }
      std::set<Hom> cls;
      for (auto const& a : autos) {
        Hom moved{h.images};
        for (auto& x : moved.images) {
          x = a[x];
        }
        if (surjections.count(moved)) {
          cls.insert(std::move(moved));
        }
      }
      placed.insert(cls.begin(), cls.end());
      classes.emplace_back(cls.begin(), cls.end());
    }
    std::sort(classes.begin(), classes.end());
    return classes;
  }

}  // namespace minquot
