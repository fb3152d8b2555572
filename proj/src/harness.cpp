#include "minquot/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "minquot/errors.hpp"
#include "minquot/finite_group.hpp"
#include "minquot/gersten.hpp"
#include "minquot/hyperplane.hpp"
#include "minquot/presentation.hpp"
#include "minquot/sl_group.hpp"

namespace minquot {

  namespace {
    using ojson = nlohmann::ordered_json;

    // Thrown by a check when its parameters are outside what it supports.
    struct Refusal {
      std::string reason;
    };

    // Records a failed assertion; the first one becomes the witness.
    class Verdict {
     public:
      explicit Verdict(CheckReport& r) : report_(r) {}

      void require(bool ok, nlohmann::json witness) {
        if (!ok && report_.status == CheckStatus::pass) {
          report_.status  = CheckStatus::fail;
          report_.witness = std::move(witness);
        }
      }

     private:
      CheckReport& report_;
    };

    std::size_t size_param(CheckParams const& p,
                           std::size_t        fallback,
                           std::size_t        lo,
                           std::size_t        hi,
                           std::string const& what) {
      std::size_t const n = p.n.value_or(fallback);
      if (n < lo || n > hi) {
        throw Refusal{what + " must be in " + std::to_string(lo) + ".."
                      + std::to_string(hi) + ", got " + std::to_string(n)};
      }
      return n;
    }

    std::vector<std::string> render_all(std::span<Word const> words) {
      std::vector<std::string> out;
      for (auto const& w : words) {
        out.push_back(render_word(w));
      }
      return out;
    }

    Gf2Vector mod2_vector(Word const& w) {
      Gf2Vector v   = 0;
      auto      ab  = abelianize_word(w);
      for (std::size_t k = 0; k < ab.size(); ++k) {
        if (ab[k] % 2 != 0) {
          v |= unit_vector(k + 1);
        }
      }
      return v;
    }

    // ---------------------------------------------------------------------

    void check_gersten(CheckParams const& p, CheckReport& r) {
      auto const n = size_param(p, 4, 3, 4, "n");
      r.params["n"] = n;
      if (p.convention == CommutatorConvention::reversed) {
        r.params["convention"] = "reversed";
      }
      auto const rep = gersten_relation_report(n, p.convention);
      r.counts["family_a_tuples"] = rep.family_a_tuples;
      r.counts["family_b_tuples"] = rep.family_b_tuples;
      r.counts["violations"]      = rep.violations.size();
      if (!rep.passed()) {
        auto list = nlohmann::json::array();
        for (auto const& v : rep.violations) {
          list.push_back(
              {{"family", v.family}, {"level", v.level}, {"indices", v.indices}});
        }
        r.status  = CheckStatus::fail;
        r.witness = nlohmann::json{{"violations", list}};
      }
    }

    void check_torelli(CheckParams const& p, CheckReport& r) {
      auto const n = size_param(p, 4, 2, 6, "n");
      r.params["n"] = n;
      Verdict    verdict(r);
      auto const f = magnus_generator(n);
      auto const x1 = Word::generator(1, n);
      auto const x2 = Word::generator(2, n);
      verdict.require(f.image(1) == invert(x2) * x1 * x2,
                      {{"image_x1", render_word(f.image(1))}});
      for (std::uint32_t k = 2; k <= n; ++k) {
        verdict.require(f.image(k) == Word::generator(k, n),
                        {{"moved_generator", k}});
      }
      auto const m = abelianization_matrix(f);
      verdict.require(m == IntMatrix::identity(n),
                      {{"integer_matrix", to_string(m)}});
      verdict.require(is_special(f), {{"special", false}});
      verdict.require(pi(f) == GF2Matrix::identity(n),
                      {{"mod2_matrix", render_rows(pi(f))}});
      r.counts["image_x1"]        = render_word(f.image(1));
      r.counts["integer_identity"] = m == IntMatrix::identity(n);
    }

    void check_hyperplane_bijection(CheckParams const& p, CheckReport& r) {
      auto const n = size_param(p, 6, 1, 6, "n");
      r.params["n"] = n;
      Verdict                verdict(r);
      std::set<Gf2Vector>    normals;
      std::size_t            count = 0;
      for (auto const& ind : Indicator::all(n)) {
        auto const plane = hyperplane_basis(ind);
        auto const back  = indicator_of(plane);
        verdict.require(back == ind, {{"indicator", ind.to_string()},
                                      {"roundtrip", back.to_string()}});
        for (Gf2Vector b : plane.basis()) {
          verdict.require(plane.contains(b),
                          {{"indicator", ind.to_string()},
                           {"vector", render_vector(b, n)}});
        }
        normals.insert(plane.normal());
        ++count;
      }
      // Every hyperplane is the kernel of exactly one nonzero functional, so
      // hitting all 2^n - 1 of them means the map is onto.
      std::size_t const expected = (std::size_t{1} << n) - 1;
      verdict.require(count == expected && normals.size() == expected,
                      {{"indicators", count}, {"hyperplanes", normals.size()}});
      r.counts["indicators"]  = count;
      r.counts["hyperplanes"] = normals.size();
    }

    void check_s_basis_projection(CheckParams const& p, CheckReport& r) {
      auto const n = size_param(p, 6, 1, 6, "n");
      r.params["n"] = n;
      Verdict     verdict(r);
      std::size_t count = 0;
      for (auto const& ind : Indicator::all(n)) {
        auto const             plane = hyperplane_basis(ind);
        auto const             words = s_basis(ind);
        std::vector<Gf2Vector> images;
        for (auto const& w : words) {
          images.push_back(mod2_vector(w));
          verdict.require(plane.contains(images.back()),
                          {{"indicator", ind.to_string()},
                           {"word", render_word(w)}});
        }
        verdict.require(gf2_rank(images) == n - 1,
                        {{"indicator", ind.to_string()},
                         {"rank", gf2_rank(images)}});
        auto const completed = complete_basis(ind);
        auto const det = determinant(abelianization_matrix(completed.change));
        verdict.require(det == 1 || det == -1,
                        {{"indicator", ind.to_string()}, {"determinant", det}});
        ++count;
      }
      r.counts["indicators"] = count;
    }

    std::vector<Word> example_basis() {
      std::vector<Word> basis;
      for (char const* s :
           {"x1", "x2*x3^-1", "x1*x2^-1", "x1*x3^-1*x4", "x4*x5^-1"}) {
        basis.push_back(parse_word(s, 5));
      }
      return basis;
    }

    void check_lemma_a(CheckParams const& p, CheckReport& r) {
      auto const n = size_param(p, 4, 2, 5, "n");
      r.params["n"] = n;
      Verdict     verdict(r);
      std::size_t pairs = 0;
      auto const  all   = Indicator::all(n);
      for (auto const& a : all) {
        for (auto const& b : all) {
          if (a == b) {
            continue;
          }
          auto const f = lemma_a_change(a, b);
          verdict.require(verify_lemma_a(a, b, f),
                          {{"indicator", a.to_string()},
                           {"other", b.to_string()},
                           {"basis", render_all(f.images())}});
          ++pairs;
        }
      }
      auto const ex = certify_basis(example_basis());
      bool const ok = verify_lemma_a(Indicator::parse("11000"),
                                     Indicator::parse("00011"), ex);
      verdict.require(ok, {{"example_basis", render_all(ex.images())}});
      r.counts["pairs"]            = pairs;
      r.counts["example_verified"] = ok;
    }

    void check_sl_order(CheckParams const& p, CheckReport& r) {
      auto const n = size_param(p, 4, 2, 5, "n");
      if (n == 5 && !p.allow_large) {
        throw Refusal{"n = 5 needs --allow-large"};
      }
      r.params["n"] = n;
      auto const table   = GroupTable::enumerate(n, p.allow_large);
      auto const formula = sl_order_formula(n);
      r.counts["enumerated"] = table.size();
      r.counts["formula"]    = formula;
      Verdict(r).require(table.size() == formula,
                         {{"enumerated", table.size()}, {"formula", formula}});
    }

    void check_counting_identity(CheckParams const& p, CheckReport& r) {
      auto const n = size_param(p, 3, 2, 4, "n");
      if (n == 4 && !p.allow_large) {
        throw Refusal{"n = 4 enumerates SL(5,2) and needs --allow-large"};
      }
      r.params["n"] = n;
      auto const small      = GroupTable::enumerate(n).size();
      auto const large      = GroupTable::enumerate(n + 1, p.allow_large).size();
      std::uint64_t const orbit = (std::uint64_t{1} << (n + 1)) - 1;
      std::uint64_t const b     = std::uint64_t{1} << n;
      std::uint64_t const prod  = orbit * b * small;
      r.counts["orbit"]          = orbit;
      r.counts["b_order"]        = b;
      r.counts["sl_n"]           = small;
      r.counts["product"]        = prod;
      r.counts["sl_n_plus_1"]    = large;
      Verdict(r).require(prod == large,
                         {{"product", prod}, {"sl_n_plus_1", large}});
    }

    void check_image_b_size(CheckParams const& p, CheckReport& r) {
      auto const n = size_param(p, 3, 1, 3, "n");
      r.params["n"] = n;
      Verdict                    verdict(r);
      auto const                 table = GroupTable::enumerate(n + 1);
      auto const                 mats  = b_images(n, table);
      std::vector<std::uint32_t> idx;
      for (auto const& m : mats) {
        idx.push_back(table.require_index(m));
      }
      std::set<std::uint32_t> distinct(idx.begin(), idx.end());
      auto const              closure = subgroup_closure(table, idx);
      bool                    elementary_abelian = true;
      for (std::uint32_t a : closure.members()) {
        elementary_abelian = elementary_abelian
                             && table.multiply(a, a) == GroupTable::identity();
        for (std::uint32_t b : closure.members()) {
          elementary_abelian = elementary_abelian
                               && table.multiply(a, b) == table.multiply(b, a);
        }
      }
      std::size_t const expected = std::size_t{1} << n;
      verdict.require(distinct.size() == expected,
                      {{"distinct", distinct.size()}, {"expected", expected}});
      verdict.require(closure.order() == expected,
                      {{"closure_order", closure.order()}});
      verdict.require(elementary_abelian, {{"elementary_abelian", false}});
      r.counts["distinct"]           = distinct.size();
      r.counts["closure_order"]      = closure.order();
      r.counts["elementary_abelian"] = elementary_abelian;
    }

    void check_c_subgroups(CheckParams const& p, CheckReport& r) {
      auto const big = size_param(p, 4, 2, 4, "n_plus_1");
      r.params["n_plus_1"] = big;
      Verdict    verdict(r);
      auto const table = GroupTable::enumerate(big);

      std::vector<Subgroup>                images;
      std::set<std::vector<std::uint32_t>> distinct;
      std::size_t                          completions = 0;
      for (auto const& ind : Indicator::all(big)) {
        auto c = c_subgroup_image(ind, table);
        verdict.require(c == hyperplane_stabilizer(hyperplane_basis(ind), table),
                        {{"indicator", ind.to_string()},
                         {"not_stabilizer", true}});
        for (std::uint32_t j : ind.zero_positions()) {
          verdict.require(c_subgroup_image(ind, table, j) == c,
                          {{"indicator", ind.to_string()},
                           {"completion", j}});
          ++completions;
        }
        distinct.emplace(c.members().begin(), c.members().end());
        images.push_back(std::move(c));
      }

      Gf2Vector const standard_bits = (Gf2Vector{1} << (big - 1)) - 1;
      auto const      standard = c_subgroup_image(Indicator(big, standard_bits),
                                                  table);
      auto const      os       = orbit_stabilizer(standard);
      std::set<std::vector<std::uint32_t>> orbit;
      for (auto const& h : os.orbit) {
        orbit.emplace(h.members().begin(), h.members().end());
      }
      bool all_conjugate   = true;
      bool self_normalizing = true;
      for (std::size_t i = 0; i < images.size(); ++i) {
        auto const& c = images[i];
        all_conjugate = all_conjugate
                        && orbit.count({c.members().begin(), c.members().end()});
        self_normalizing = self_normalizing && normalizer(c) == c;
      }
      std::size_t const expected = (std::size_t{1} << big) - 1;
      verdict.require(distinct.size() == expected,
                      {{"distinct", distinct.size()}, {"expected", expected}});
      verdict.require(all_conjugate, {{"pairwise_conjugate", false}});
      verdict.require(self_normalizing, {{"self_normalizing", false}});
      verdict.require(os.orbit.size() * os.stabilizer.order() == table.size(),
                      {{"orbit", os.orbit.size()},
                       {"normalizer_order", os.stabilizer.order()}});
      verdict.require(os.orbit.size() == expected,
                      {{"orbit", os.orbit.size()}});

      r.counts["subgroups"]         = images.size();
      r.counts["distinct"]          = distinct.size();
      r.counts["completions"]       = completions;
      r.counts["subgroup_order"]    = standard.order();
      r.counts["orbit"]             = os.orbit.size();
      r.counts["normalizer_order"]  = os.stabilizer.order();
      r.counts["group_order"]       = table.size();
      r.counts["pairwise_conjugate"] = all_conjugate;
      r.counts["self_normalizing"]  = self_normalizing;
      r.counts["standard_hash"]     = standard.content_hash();
    }

    void check_conjugation_stability(CheckParams const& p, CheckReport& r) {
      auto const n = size_param(p, 3, 2, 3, "n");
      r.params["n"]    = n;
      r.params["seed"] = p.seed;
      Verdict           verdict(r);
      std::size_t const rank  = n + 1;
      auto const        table = GroupTable::enumerate(rank);
      std::vector<std::uint32_t> idx;
      for (auto const& m : b_images(n, table)) {
        idx.push_back(table.require_index(m));
      }
      auto const b = subgroup_closure(table, idx);

      std::mt19937_64 rng(p.seed);
      auto            pick = [&rng](std::uint32_t lo, std::uint32_t hi) {
        return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
      };
      auto random_word = [&](std::size_t len) {
        std::vector<Letter> letters;
        for (std::size_t t = 0; t < len; ++t) {
          letters.emplace_back(pick(1, static_cast<std::uint32_t>(n)),
                               pick(0, 1) ? 1 : -1);
        }
        return Word(letters, rank);
      };

      std::size_t constexpr kSamples = 24;
      for (std::size_t s = 0; s < kSamples; ++s) {
        auto psi = Automorphism::identity(rank);
        for (std::uint32_t t = pick(1, 5); t > 0; --t) {
          std::uint32_t const i = pick(1, static_cast<std::uint32_t>(n));
          std::uint32_t       j = pick(1, static_cast<std::uint32_t>(n) - 1);
          j += j >= i ? 1 : 0;
          psi = psi * transvection(pick(0, 1) ? Side::right : Side::left, i, j,
                                   rank);
        }
        auto const v   = random_word(pick(0, 3));
        auto const w   = random_word(pick(0, 3));
        auto const lhs = inverse(psi) * b_element(v, w) * psi;
        auto const rhs = b_element(apply(psi, v), apply(psi, w));
        verdict.require(lhs == rhs, {{"sample", s},
                                     {"psi", to_json(psi)},
                                     {"v", render_word(v)},
                                     {"w", render_word(w)}});

        auto const g   = table.require_index(pi(psi));
        auto const gi  = table.inverse(g);
        auto const img = conjugate_subgroup(gi, b);
        verdict.require(img == b, {{"sample", s}, {"psi", to_json(psi)}});
      }
      r.counts["samples"] = kSamples;
      r.counts["b_order"] = b.order();
    }

    void check_base_case(CheckParams const& p, CheckReport& r) {
      Verdict    verdict(r);
      auto const pres = sl2z_presentation();
      r.params["presentation"] = render_presentation(pres);
      ojson       per_group = ojson::object();
      std::size_t s3_classes = 0;
      for (auto const& g : small_groups_catalog(6)) {
        auto const homs = enumerate_homs(pres, g, p.hom_ceiling);
        std::size_t noncyclic = 0;
        for (auto const& h : homs) {
          verdict.require(is_homomorphism(pres, g, h),
                          {{"group", g.name()}, {"images", h.images}});
          auto const image = g.generated(h.images);
          bool const cyclic = std::any_of(
              image.begin(), image.end(), [&](std::uint32_t x) {
                return g.element_order(x) == image.size();
              });
          if (!cyclic) {
            ++noncyclic;
            verdict.require(g.name() == "S3",
                            {{"group", g.name()}, {"images", h.images}});
          }
        }
        auto const classes = classify_surjections(homs, g);
        if (g.name() == "S3") {
          s3_classes = classes.size();
        }
        per_group[g.name()] = {{"homs", homs.size()},
                               {"non_cyclic_images", noncyclic},
                               {"surjection_classes", classes.size()}};
      }
      verdict.require(s3_classes == 1, {{"s3_surjection_classes", s3_classes}});

      // The same statement for SL(2,2) itself, with transpose-inverse
      // supplied as the outer automorphism.
      auto const table = GroupTable::enumerate(2);
      auto const sl22  = finite_group_from_table(table);
      auto const homs  = enumerate_homs(pres, sl22, p.hom_ceiling);
      std::vector<std::vector<std::uint32_t>> outer{transpose_inverse_map(table)};
      auto const classes = classify_surjections(homs, sl22, outer);
      verdict.require(classes.size() == 1,
                      {{"sl22_surjection_classes", classes.size()}});

      r.counts["groups"]                  = per_group;
      r.counts["s3_surjection_classes"]   = s3_classes;
      r.counts["sl22_surjection_classes"] = classes.size();
    }

    void check_abelianization(CheckParams const&, CheckReport& r) {
      auto const pres = sl2z_presentation();
      r.params["presentation"] = render_presentation(pres);
      auto const inv = abelianization_invariants(pres);
      r.counts["invariants"] = inv;
      Verdict(r).require(inv == std::vector<std::int64_t>{12},
                         {{"invariants", inv}});
    }

    struct Registration {
      std::string                                          name;
      std::string                                          anchor;
      std::function<void(CheckParams const&, CheckReport&)> run;
    };

    std::vector<Registration> const& registry() {
      static std::vector<Registration> const regs = {
          {"gersten-relations",
           "[E(xi,xj),E(xk,xl)] = 1 for distinct i,j,k,l; "
           "[E(xi,xj),E(xj,xk)] = E(xi,xk)",
           check_gersten},
          {"torelli",
           "Torelli group normally generated by E(x1,x2)E(x1^-1,x2)",
           check_torelli},
          {"hyperplane-bijection",
           "indicator vectors other than all-ones <-> hyperplanes of Z2^n",
           check_hyperplane_bijection},
          {"s-basis-projection", "S_I projects precisely onto P_I",
           check_s_basis_projection},
          {"lemma-a",
           "basis change taking two hyperplane indicators to (1,0,1,...,1) "
           "and (0,1,1,...,1)",
           check_lemma_a},
          {"sl-order", "|SL(n,Z2)| = prod_k (2^n - 2^k)", check_sl_order},
          {"counting-identity",
           "|H| = |Orb(C)| |Stab(C)| with "
           "(2^(n+1)-1) 2^n |SL(n,Z2)| = |SL(n+1,Z2)|",
           check_counting_identity},
          {"image-b-size", "the image of B has size at least 2^n",
           check_image_b_size},
          {"c-subgroups",
           "the 2^(n+1)-1 subgroups C_I are distinct and all conjugate",
           check_c_subgroups},
          {"conjugation-stability", "psi^-1 B psi = B for psi in A",
           check_conjugation_stability},
          {"base-case", "SL(2,Z2) = S3, the smallest non-abelian group",
           check_base_case},
          {"abelianization", "abelianization Z12", check_abelianization},
      };
      return regs;
    }

    Registration const* find(std::string_view name) {
      for (auto const& reg : registry()) {
        if (reg.name == name) {
          return &reg;
        }
      }
      return nullptr;
    }
  }  // namespace

  std::string_view to_string(CheckStatus s) {
    switch (s) {
      case CheckStatus::pass:
        return "pass";
      case CheckStatus::fail:
        return "fail";
      case CheckStatus::refused:
        return "refused";
    }
    return "unknown";
  }

  nlohmann::ordered_json to_json(CheckReport const& r, bool include_timing) {
    ojson j;
    j["check"]  = r.check;
    j["params"] = r.params;
    j["status"] = to_string(r.status);
    j["counts"] = r.counts;
    if (r.witness) {
      j["witness"] = ojson::parse(r.witness->dump());
    }
    if (include_timing) {
      j["elapsed_ms"] = r.elapsed_ms;
    }
    j["paper_ref"] = r.paper_ref;
    return j;
  }

  std::vector<std::string> const& registered_checks() {
    static std::vector<std::string> const names = [] {
      std::vector<std::string> out;
      for (auto const& reg : registry()) {
        out.push_back(reg.name);
      }
      return out;
    }();
    return names;
  }

  bool is_registered(std::string_view name) {
    return find(name) != nullptr;
  }

  CheckReport run_check(std::string_view name, CheckParams const& params) {
    auto const* reg = find(name);
    if (reg == nullptr) {
      throw DomainError("unknown check '" + std::string(name) + "'");
    }
    CheckReport report;
    report.check     = reg->name;
    report.paper_ref = reg->anchor;
    auto const start = std::chrono::steady_clock::now();
    try {
      reg->run(params, report);
    } catch (Refusal const& e) {
      report.status  = CheckStatus::refused;
      report.witness = nlohmann::json{{"reason", e.reason}};
    } catch (RefusedError const& e) {
      report.status  = CheckStatus::refused;
      report.witness = nlohmann::json{{"reason", e.what()}};
    } catch (std::exception const& e) {
      report.status  = CheckStatus::fail;
      report.witness = nlohmann::json{{"error", e.what()}};
    }
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
  }

  std::optional<Profile> parse_profile(std::string_view s) {
    if (s == "quick") {
      return Profile::quick;
    }
    if (s == "full") {
      return Profile::full;
    }
    return std::nullopt;
  }

  std::vector<std::pair<std::string, std::optional<std::size_t>>>
  profile_plan(Profile p) {
    if (p == Profile::quick) {
      return {{"gersten-relations", 3},
              {"torelli", 3},
              {"hyperplane-bijection", 4},
              {"s-basis-projection", 4},
              {"lemma-a", 3},
              {"sl-order", 2},
              {"sl-order", 3},
              {"counting-identity", 2},
              {"image-b-size", 2},
              {"c-subgroups", 3},
              {"conjugation-stability", 2},
              {"base-case", std::nullopt},
              {"abelianization", std::nullopt}};
    }
    return {{"gersten-relations", 3},
            {"gersten-relations", 4},
            {"torelli", 2},
            {"torelli", 3},
            {"torelli", 4},
            {"torelli", 5},
            {"torelli", 6},
            {"hyperplane-bijection", 6},
            {"s-basis-projection", 6},
            {"lemma-a", 3},
            {"lemma-a", 4},
            {"lemma-a", 5},
            {"sl-order", 2},
            {"sl-order", 3},
            {"sl-order", 4},
            {"counting-identity", 2},
            {"counting-identity", 3},
            {"image-b-size", 2},
            {"image-b-size", 3},
            {"c-subgroups", 3},
            {"c-subgroups", 4},
            {"conjugation-stability", 2},
            {"conjugation-stability", 3},
            {"base-case", std::nullopt},
            {"abelianization", std::nullopt}};
  }

  std::vector<CheckReport> run_all(Profile p, CheckParams const& base) {
    std::vector<CheckReport> out;
    for (auto const& [name, n] : profile_plan(p)) {
      CheckParams params = base;
      params.n           = n;
      out.push_back(run_check(name, params));
    }
    return out;
  }

  int exit_code(std::vector<CheckReport> const& reports) {
    bool refused = false;
    for (auto const& r : reports) {
      if (r.status == CheckStatus::fail) {
        return 1;
      }
      refused = refused || r.status == CheckStatus::refused;
    }
    return refused ? 2 : 0;
  }

  std::string to_ndjson(std::vector<CheckReport> const& reports,
                        bool                            include_timing) {
    std::string out;
    for (auto const& r : reports) {
      out += to_json(r, include_timing).dump();
      out += '\n';
    }
    return out;
  }

  std::uint64_t hom_ceiling_from_env() {
    char const* env = std::getenv("MINQUOT_HOM_CEILING");
    if (env == nullptr || *env == '\0') {
      return kDefaultHomWorkCeiling;
    }
    char*                    end   = nullptr;
    unsigned long long const value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw DomainError("MINQUOT_HOM_CEILING must be a non-negative integer");
    }
    return value;
  }

}  // namespace minquot
