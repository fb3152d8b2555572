#include <doctest.h>

#include <set>

#include "minquot/errors.hpp"
#include "minquot/hyperplane.hpp"

using namespace minquot;

namespace {
  Gf2Vector vec(char const* bits) {
    Gf2Vector v = 0;
    for (std::size_t j = 0; bits[j] != '\0'; ++j) {
      if (bits[j] == '1') {
        v |= unit_vector(j + 1);
      }
    }
    return v;
  }

  std::set<Gf2Vector> basis_set(Hyperplane const& p) {
    return {p.basis().begin(), p.basis().end()};
  }

  std::vector<std::string> rendered(std::span<Word const> words) {
    std::vector<std::string> out;
    for (auto const& w : words) {
      out.push_back(render_word(w));
    }
    return out;
  }

  Gf2Vector mod2(Word const& w) {
    auto      ab = abelianize_word(w);
    Gf2Vector v  = 0;
    for (std::size_t k = 0; k < ab.size(); ++k) {
      if (ab[k] % 2 != 0) {
        v |= unit_vector(k + 1);
      }
    }
    return v;
  }

  // Independent membership test: the hyperplane is spanned by the listed
  // vectors, so brute force over all 2^(n-1) combinations.
  std::set<Gf2Vector> span_of(Hyperplane const& p) {
    std::set<Gf2Vector> out;
    auto const&         b = p.basis();
    for (std::uint32_t mask = 0; mask < (1u << b.size()); ++mask) {
      Gf2Vector v = 0;
      for (std::size_t t = 0; t < b.size(); ++t) {
        if ((mask >> t) & 1u) {
          v ^= b[t];
        }
      }
      out.insert(v);
    }
    return out;
  }
}  // namespace

TEST_CASE("indicators") {
  auto const ind = Indicator::parse("11000");
  CHECK(ind.size() == 5);
  CHECK(ind.to_string() == "11000");
  CHECK(ind.one_positions() == std::vector<std::uint32_t>{1, 2});
  CHECK(ind.zero_positions() == std::vector<std::uint32_t>{3, 4, 5});
  CHECK_THROWS_AS(Indicator::parse("111"), DomainError);
  CHECK_THROWS_AS(Indicator::parse("1a0"), ParseError);
  CHECK_THROWS_AS(Indicator::parse(""), DomainError);
  CHECK(Indicator::all(3).size() == 7);
  CHECK(Indicator::all(1).size() == 1);
}

TEST_CASE("hyperplane bases") {
  CHECK(basis_set(hyperplane_basis(Indicator::parse("001")))
        == std::set<Gf2Vector>{vec("110"), vec("001")});
  CHECK(basis_set(hyperplane_basis(Indicator::parse("101")))
        == std::set<Gf2Vector>{vec("100"), vec("001")});
  CHECK(basis_set(hyperplane_basis(Indicator::parse("000")))
        == std::set<Gf2Vector>{vec("110"), vec("011")});
}

TEST_CASE("indicator of a hyperplane") {
  std::vector<Gf2Vector> a{vec("110"), vec("001")};
  CHECK(indicator_of(Hyperplane(3, a)).to_string() == "001");
  std::vector<Gf2Vector> b{vec("100"), vec("001")};
  CHECK(indicator_of(Hyperplane(3, b)).to_string() == "101");
  std::vector<Gf2Vector> bad{vec("110"), vec("110")};
  CHECK_THROWS_AS(Hyperplane(3, bad), DomainError);
}

TEST_CASE("bijection between indicators and hyperplanes") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::set<Gf2Vector>> planes;
    for (auto const& ind : Indicator::all(n)) {
      auto const p = hyperplane_basis(ind);
      CHECK(indicator_of(p) == ind);
      auto const members = span_of(p);
      CHECK(members.size() == (std::size_t{1} << (n - 1)));
      for (std::uint32_t j = 1; j <= n; ++j) {
        // e_j is in the plane exactly when the indicator says so.
        CHECK(members.count(unit_vector(j)) == (ind.bit(j) ? 1u : 0u));
      }
      for (Gf2Vector v = 0; v < (Gf2Vector{1} << n); ++v) {
        CHECK(p.contains(v) == (members.count(v) == 1));
      }
      planes.insert(members);
    }
    CHECK(planes.size() == (std::size_t{1} << n) - 1);
  }
}

TEST_CASE("free bases of S_I") {
  CHECK(rendered(s_basis(Indicator::parse("001")))
        == std::vector<std::string>{"x1*x2^-1", "x3"});
  CHECK(rendered(s_basis(Indicator::parse("11000")))
        == std::vector<std::string>{"x3*x4^-1", "x4*x5^-1", "x1", "x2"});
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& ind : Indicator::all(n)) {
      auto const             p = hyperplane_basis(ind);
      std::vector<Gf2Vector> images;
      for (auto const& w : s_basis(ind)) {
        CHECK(p.contains(mod2(w)));
        images.push_back(mod2(w));
      }
      CHECK(gf2_rank(images) == n - 1);
    }
  }
}

TEST_CASE("basis completion") {
  CHECK(rendered(complete_basis(Indicator::parse("001")).basis)
        == std::vector<std::string>{"x1*x2^-1", "x3", "x1"});
  CHECK(rendered(complete_basis(Indicator::parse("101")).basis)
        == std::vector<std::string>{"x1", "x3", "x2"});
  CHECK(rendered(complete_basis(Indicator::parse("001"), 2).basis)
        == std::vector<std::string>{"x1*x2^-1", "x3", "x2"});
  CHECK_THROWS_AS(complete_basis(Indicator::parse("001"), 3), DomainError);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& ind : Indicator::all(n)) {
      for (std::uint32_t j : ind.zero_positions()) {
        auto const c = complete_basis(ind, j);
        CHECK(c.change.is_certified());
        auto const d = determinant(abelianization_matrix(c.change));
        CHECK((d == 1 || d == -1));
        CHECK(std::vector<Word>(c.change.images().begin(), c.change.images().end())
              == c.basis);
      }
    }
  }
}

TEST_CASE("the worked example basis") {
  std::vector<Word> basis;
  for (char const* s : {"x1", "x2*x3^-1", "x1*x2^-1", "x1*x3^-1*x4", "x4*x5^-1"}) {
    basis.push_back(parse_word(s, 5));
  }
  auto const f = certify_basis(basis);
  auto const a = Indicator::parse("11000");
  auto const b = Indicator::parse("00011");
  CHECK(verify_lemma_a(a, b, f));
  CHECK_FALSE(verify_lemma_a(b, a, f));
  auto const built = lemma_a_change(a, b);
  CHECK(verify_lemma_a(a, b, built));
}

TEST_CASE("lemma_a_change edge cases") {
  auto const t1 = Indicator::parse("1011");
  auto const t2 = Indicator::parse("0111");
  CHECK(verify_lemma_a(t1, t2, Automorphism::identity(4)));
  CHECK_FALSE(verify_lemma_a(t2, t1, Automorphism::identity(4)));
  CHECK_THROWS_AS(lemma_a_change(t1, t1), DomainError);
  CHECK_THROWS_AS(Indicator::parse("1111"), DomainError);
  CHECK_THROWS_AS(verify_lemma_a(t1, t2, Automorphism::identity(3)), RankError);
  CHECK_THROWS_AS(
      verify_lemma_a(t1, t2, Automorphism::from_images(
                                 {parse_word("x1", 4), parse_word("x2", 4),
                                  parse_word("x3", 4), parse_word("x4", 4)})),
      UnsupportedError);
  // The four ways the two indicators can disagree: mixed, only (1,0),
  // only (0,1), and with and without shared positions.
  for (auto const& [a, b] : std::vector<std::pair<char const*, char const*>>{
           {"10", "01"}, {"10", "00"}, {"00", "01"}, {"1100", "1000"},
           {"0010", "0110"}, {"10110", "01100"}}) {
    auto const ia = Indicator::parse(a);
    auto const ib = Indicator::parse(b);
    CHECK_MESSAGE(verify_lemma_a(ia, ib, lemma_a_change(ia, ib)), a, " ", b);
  }
}

TEST_CASE("lemma_a_change on every ordered pair") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto const all = Indicator::all(n);
    for (auto const& a : all) {
      for (auto const& b : all) {
        if (a != b) {
          auto const f = lemma_a_change(a, b);
          CHECK(f.is_certified());
          CHECK(verify_lemma_a(a, b, f));
          // In the basis y_k = f(x_k), the indicator of P records which
          // y_k lie in P.
          auto const pa = hyperplane_basis(a);
          auto const pb = hyperplane_basis(b);
          for (std::uint32_t k = 1; k <= n; ++k) {
            auto const y = mod2(f.image(k));
            CHECK(pa.contains(y) == (k != 2));
            CHECK(pb.contains(y) == (k != 1));
          }
        }
      }
    }
  }
}
