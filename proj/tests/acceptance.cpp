// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "minquot/automorphism.hpp"
#include "minquot/finite_group.hpp"
#include "minquot/gersten.hpp"
#include "minquot/harness.hpp"
#include "minquot/homs.hpp"
#include "minquot/hyperplane.hpp"
#include "minquot/presentation.hpp"
#include "minquot/sl_group.hpp"
#include "minquot/smith.hpp"
#include "oracles.hpp"

using namespace minquot;

namespace {
  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
  }

  struct Outcome {
    bool        ok;
    std::string detail;
  };

  Outcome group_orders() {
    std::string detail;
    bool        ok = true;
    for (std::size_t n : {2u, 3u, 4u}) {
      auto const  start = Clock::now();
      auto const  size  = GroupTable::enumerate(n).size();
      double const secs = seconds_since(start);
      ok = ok && size == sl_order_formula(n) && (n != 4 || secs < 60.0);
      detail += "n=" + std::to_string(n) + ":" + std::to_string(size) + " ";
      if (n == 4) {
        detail += "(" + std::to_string(secs) + " s) ";
      }
    }
    std::vector<std::uint64_t> const expected{6, 168, 20160};
    ok = ok && sl_order_formula(2) == expected[0] && sl_order_formula(3) == expected[1]
         && sl_order_formula(4) == expected[2];
    return {ok, detail};
  }

  Outcome counting_identity() {
    bool        ok = true;
    std::string detail;
    for (std::size_t n : {2u, 3u}) {
      std::uint64_t const small = GroupTable::enumerate(n).size();
      std::uint64_t const large = GroupTable::enumerate(n + 1).size();
      std::uint64_t const lhs   = ((std::uint64_t{1} << (n + 1)) - 1)
                                * (std::uint64_t{1} << n) * small;
      ok = ok && lhs == large;
      detail += std::to_string(lhs) + "=" + std::to_string(large) + " ";
    }
    return {ok, detail};
  }

  Outcome check_passes(std::string const& name, std::vector<std::size_t> sizes) {
    bool        ok = true;
    std::string detail;
    for (auto n : sizes) {
      CheckParams p;
      p.n          = n;
      auto const r = run_check(name, p);
      ok           = ok && r.status == CheckStatus::pass;
      detail += std::to_string(n) + ":" + std::string(to_string(r.status)) + " ";
    }
    return {ok, detail};
  }

  Outcome c_subgroups() {
    bool        ok = true;
    std::string detail;
    for (std::size_t big : {3u, 4u}) {
      CheckParams p;
      p.n          = big;
      auto const r = run_check("c-subgroups", p);
      std::size_t const expected = (std::size_t{1} << big) - 1;
      ok = ok && r.status == CheckStatus::pass && r.counts["distinct"] == expected
           && r.counts["orbit"] == expected && r.counts["pairwise_conjugate"] == true
           && r.counts["self_normalizing"] == true
           && r.counts["orbit"].get<std::uint64_t>()
                      * r.counts["normalizer_order"].get<std::uint64_t>()
                  == r.counts["group_order"].get<std::uint64_t>();
      detail += std::to_string(big) + ":" + r.counts["distinct"].dump() + " subgroups ";
    }
    return {ok, detail};
  }

  Outcome lemma_a() {
    bool        ok = true;
    std::size_t pairs = 0;
    for (std::size_t n : {3u, 4u, 5u}) {
      auto const all = Indicator::all(n);
      for (auto const& a : all) {
        for (auto const& b : all) {
          if (a != b) {
            ok = ok && verify_lemma_a(a, b, lemma_a_change(a, b));
            ++pairs;
          }
        }
      }
    }
    std::vector<Word> basis;
    for (char const* s : {"x1", "x2*x3^-1", "x1*x2^-1", "x1*x3^-1*x4", "x4*x5^-1"}) {
      basis.push_back(parse_word(s, 5));
    }
    bool const example = verify_lemma_a(Indicator::parse("11000"),
                                        Indicator::parse("00011"),
                                        certify_basis(basis));
    return {ok && example && pairs == 42 + 210 + 930,
            std::to_string(pairs) + " pairs, example " + (example ? "ok" : "FAILED")};
  }

  Outcome dictionary() {
    auto a = check_passes("hyperplane-bijection", {1, 2, 3, 4, 5, 6});
    auto b = check_passes("s-basis-projection", {1, 2, 3, 4, 5, 6});
    return {a.ok && b.ok, "bijection " + a.detail + "| projection " + b.detail};
  }

  Outcome relations() {
    bool        ok = true;
    std::string detail;
    for (std::size_t n : {3u, 4u}) {
      auto const rep = gersten_relation_report(n);
      ok = ok && rep.passed();
      detail += "n=" + std::to_string(n) + ": " + std::to_string(rep.violations.size())
                + " violations ";
    }
    return {ok, detail};
  }

  Outcome torelli_shadow() {
    bool ok = true;
    for (std::size_t n = 2; n <= 6; ++n) {
      auto const f = transvection(Side::right, 1, 2, n) * transvection(Side::left, 1, 2, n);
      ok = ok && abelianization_matrix(f) == IntMatrix::identity(n);
    }
    return {ok, "n=2..6"};
  }

  Outcome base_case() {
    auto const  start = Clock::now();
    auto const  pres  = sl2z_presentation();
    bool        ok    = true;
    std::size_t s3_classes = 0;
    for (auto const& g : small_groups_catalog(6)) {
      auto const homs = enumerate_homs(pres, g);
      for (auto const& h : homs) {
        auto const image = g.generated(h.images);
        bool const cyclic = std::any_of(image.begin(), image.end(), [&](std::uint32_t x) {
          return g.element_order(x) == image.size();
        });
        ok = ok && (cyclic || g.name() == "S3");
      }
      if (g.name() == "S3") {
        s3_classes = classify_surjections(homs, g).size();
      }
    }
    bool const ab   = abelianization_invariants(pres) == std::vector<std::int64_t>{12};
    double const secs = seconds_since(start);
    ok = ok && s3_classes == 1 && ab && secs < 1.0;
    return {ok, "S3 classes " + std::to_string(s3_classes) + ", Z12 "
                    + (ab ? "yes" : "no") + ", " + std::to_string(secs) + " s"};
  }

  Outcome oracles() {
    std::size_t instances = 0;
    bool        ok        = true;
    std::vector<std::string> const presentations{
        "<a ; >", "<a ; a^2>", "<a ; a^4>", "<a,b ; >", "<a,b ; a^2, b^2>",
        "<a,b ; a^4, a^2*b^-3>", "<a,b ; a*b*a^-1*b^-1>", "<a,b ; a^2, b^3, a*b*a*b>",
        "<a,b ; a^4, b^2, b*a*b^-1*a>", "<a,b ; a*b*a*b^-1*a^-1*b^-1>"};
    for (auto const& text : presentations) {
      auto const p = parse_presentation(text);
      for (auto const& g : small_groups_catalog(8)) {
        ok = ok && enumerate_homs(p, g) == oracle::brute_force_homs(p, g);
        ++instances;
      }
    }
    constexpr std::uint64_t             kSeed = 424242;
    std::mt19937_64                     rng(kSeed);
    std::uniform_int_distribution<int>  dim(1, 4);
    std::uniform_int_distribution<long> entry(-5, 5);
    for (int trial = 0; trial < 1000; ++trial) {
      IntMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          m(r, c) = entry(rng);
        }
      }
      ok = ok && smith_normal_form(m).invariant_factors == oracle::minor_gcd_invariants(m);
    }
    return {ok, std::to_string(instances) + " hom instances, 1000 SNF samples (seed "
                    + std::to_string(kSeed) + ")"};
  }

  Outcome determinism() {
    auto const a = to_ndjson(run_all(Profile::full));
    auto const b = to_ndjson(run_all(Profile::full));
    bool const all_pass = a.find("\"status\":\"fail\"") == std::string::npos
                          && a.find("\"status\":\"refused\"") == std::string::npos;
    return {a == b && all_pass, std::to_string(a.size()) + " bytes, "
                                    + (a == b ? "identical" : "DIFFERENT")};
  }
}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
      {"group orders", group_orders},
      {"counting identity", counting_identity},
      {"C_I subgroups", c_subgroups},
      {"image of B", [] { return check_passes("image-b-size", {2, 3}); }},
      {"basis change lemma", lemma_a},
      {"indicator dictionary", dictionary},
      {"transvection relations", relations},
      {"Torelli generator", torelli_shadow},
      {"base case", base_case},
      {"oracle equivalences", oracles},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out{false, ""};
    try {
      out = criteria[i].second();
    } catch (std::exception const& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    failures += out.ok ? 0 : 1;
    std::printf("%s %2zu %s: %s\n", out.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), out.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
