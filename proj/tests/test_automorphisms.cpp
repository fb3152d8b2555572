#include <doctest.h>

#include <random>

#include "minquot/automorphism.hpp"
#include "minquot/errors.hpp"
#include "minquot/gersten.hpp"
#include "minquot/int_matrix.hpp"
#include "oracles.hpp"

using namespace minquot;

namespace {
  Word w(char const* s, std::size_t rank) {
    return parse_word(s, rank);
  }
  Automorphism E(std::uint32_t i, std::uint32_t j, std::size_t rank) {
    return transvection(Side::right, i, j, rank);
  }
  Automorphism Einv(std::uint32_t i, std::uint32_t j, std::size_t rank) {
    return transvection(Side::left, i, j, rank);
  }
}  // namespace

TEST_CASE("transvections") {
  auto const r = E(1, 2, 2);
  CHECK(r.image(1) == w("x1*x2", 2));
  CHECK(r.image(2) == w("x2", 2));
  CHECK(Einv(1, 2, 2).image(1) == w("x2^-1*x1", 2));
  CHECK_THROWS_AS(E(1, 1, 2), DomainError);
  CHECK_THROWS_AS(E(1, 3, 2), RankError);
  CHECK(to_string(ElementaryMove::right(1, 2)) == "E(x1,x2)");
}

TEST_CASE("apply") {
  CHECK(apply(E(1, 2, 2), w("x1", 2)) == w("x1*x2", 2));
  CHECK(apply(E(1, 2, 3), Word(3)).empty());
  CHECK(apply(E(1, 2, 2), w("x1^-1", 2)) == w("x2^-1*x1^-1", 2));
  CHECK_THROWS_AS(apply(E(1, 2, 2), w("x1", 3)), RankError);
}

TEST_CASE("composition is left to right") {
  auto const e = E(1, 2, 2);
  CHECK(e * Automorphism::identity(2) == e);
  CHECK((e * e).image(1) == w("x1*x2*x2", 2));
  CHECK((e * Einv(1, 2, 2)).image(1) == w("x2^-1*x1*x2", 2));
  CHECK_THROWS_AS(e * Automorphism::identity(3), RankError);
}

TEST_CASE("inverse") {
  CHECK(inverse(E(1, 2, 2)).image(1) == w("x1*x2^-1", 2));
  CHECK(inverse(Automorphism::identity(3)) == Automorphism::identity(3));
  auto const s = Automorphism::elementary(ElementaryMove::swap(1, 2), 2);
  CHECK(inverse(s) == s);
  auto const raw = Automorphism::from_images({w("x1*x2", 2), w("x2", 2)});
  CHECK_FALSE(raw.is_certified());
  CHECK_THROWS_AS(inverse(raw), UnsupportedError);
}

TEST_CASE("commutators") {
  CHECK(commutator(E(1, 2, 3), E(2, 3, 3)) == E(1, 3, 3));
  CHECK(commutator(E(1, 2, 4), E(3, 4, 4)) == Automorphism::identity(4));
  auto const f = E(1, 2, 3) * Einv(3, 1, 3);
  CHECK(commutator(f, f) == Automorphism::identity(3));
  // The other bracketing gives the inverse, not E(x1,x3).
  CHECK(commutator(E(1, 2, 3), E(2, 3, 3), CommutatorConvention::reversed)
        != E(1, 3, 3));
}

TEST_CASE("Magnus generator") {
  auto const m = magnus_generator(2);
  CHECK(m.image(1) == w("x2^-1*x1*x2", 2));
  CHECK(m.image(2) == w("x2", 2));
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(abelianization_matrix(magnus_generator(n)) == IntMatrix::identity(n));
  }
  CHECK_THROWS_AS(magnus_generator(1), DomainError);
}

TEST_CASE("abelianization matrices") {
  CHECK(abelianization_matrix(Automorphism::identity(3)) == IntMatrix::identity(3));
  CHECK(abelianization_matrix(E(1, 2, 2)) == IntMatrix{{1, 1}, {0, 1}});
  auto const inv = Automorphism::elementary(ElementaryMove::invert(1), 2);
  CHECK(abelianization_matrix(inv) == IntMatrix{{-1, 0}, {0, 1}});
  CHECK(determinant(abelianization_matrix(inv)) == -1);
  CHECK(is_special(E(1, 2, 2)));
  CHECK_FALSE(is_special(inv));
  CHECK(mod_reduction(IntMatrix{{1, 1}, {0, 1}}, 2) == IntMatrix{{1, 1}, {0, 1}});
  CHECK(mod_reduction(IntMatrix{{-1, 3}}, 2) == IntMatrix{{1, 1}});
  CHECK_THROWS_AS(mod_reduction(IntMatrix::identity(2), 1), DomainError);
}

TEST_CASE("every transvection is special") {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::uint32_t i = 1; i <= n; ++i) {
      for (std::uint32_t j = 1; j <= n; ++j) {
        if (i != j) {
          CHECK(is_special(E(i, j, n)));
          CHECK(is_special(Einv(i, j, n)));
        }
      }
    }
  }
}

TEST_CASE("relation families hold exhaustively") {
  for (std::size_t n : {3u, 4u}) {
    auto const rep = gersten_relation_report(n);
    CHECK(rep.passed());
    CHECK(rep.family_b_tuples == n * (n - 1) * (n - 2));
  }
  CHECK(gersten_relation_report(4).family_a_tuples == 24);
  CHECK_FALSE(gersten_relation_report(3, CommutatorConvention::reversed).passed());
  CHECK_THROWS_AS(gersten_relation_report(2), DomainError);
}

TEST_CASE("random automorphisms agree with the substitution oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t const rank = 2 + trial % 3;
    auto const        cf   = oracle::random_certificate(rng, rank, 6);
    auto const        cg   = oracle::random_certificate(rng, rank, 6);
    auto const        f    = Automorphism::from_certificate(rank, cf);
    auto const        g    = Automorphism::from_certificate(rank, cg);
    CHECK(oracle::images_of(f) == oracle::replay(cf, rank));

    auto const fg = f * g;
    CHECK(oracle::images_of(fg)
          == oracle::compose(oracle::images_of(f), oracle::images_of(g)));
    CHECK(abelianization_matrix(fg)
          == abelianization_matrix(f) * abelianization_matrix(g));
    CHECK(f * inverse(f) == Automorphism::identity(rank));
    CHECK(inverse(f) * f == Automorphism::identity(rank));

    auto const x = oracle::random_word(rng, rank, 8);
    CHECK(oracle::raw(apply(f, x))
          == oracle::substitute(oracle::images_of(f), oracle::raw(x)));
    CHECK(apply(fg, x) == apply(g, apply(f, x)));

    // The uncertified route to the same map gives the same images.
    auto const raw = Automorphism::from_images(
        std::vector<Word>(f.images().begin(), f.images().end()));
    CHECK(raw * g == fg);
  }
}

TEST_CASE("b_element") {
  auto const id = Word(3);
  CHECK(b_element(id, id) == Automorphism::identity(3));
  auto const f = b_element(w("x1", 3), w("x2^-1", 3));
  CHECK(f.image(3) == w("x1*x3*x2", 3));
  CHECK(f.image(1) == w("x1", 3));
  CHECK(f.is_certified());
  CHECK(b_element(w("x1*x2^-1*x1", 3), w("x2*x2*x1", 3)).image(3)
        == w("x1*x2^-1*x1*x3*x1^-1*x2^-1*x2^-1", 3));
  CHECK_THROWS_AS(b_element(w("x3", 3), id), DomainError);
  CHECK_THROWS_AS(b_element(w("x1", 3), Word(2)), RankError);
}

TEST_CASE("certify_basis") {
  std::vector<Word> basis{w("x1", 5), w("x2*x3^-1", 5), w("x1*x2^-1", 5),
                          w("x1*x3^-1*x4", 5), w("x4*x5^-1", 5)};
  auto const f = certify_basis(basis);
  CHECK(f.is_certified());
  CHECK(std::vector<Word>(f.images().begin(), f.images().end()) == basis);
  CHECK_THROWS_AS(certify_basis({w("x1*x1", 2), w("x2", 2)}), Error);
  CHECK_THROWS_AS(certify_basis({w("x1", 2)}), DomainError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t const rank = 2 + trial % 3;
    auto const        g =
        Automorphism::from_certificate(rank, oracle::random_certificate(rng, rank, 5));
    std::vector<Word> images(g.images().begin(), g.images().end());
    auto const        c = certify_basis(images);
    CHECK(c == g);
    CHECK(oracle::replay(*c.certificate(), rank) == oracle::images_of(g));
  }
}

TEST_CASE("json roundtrip") {
  auto const f = E(1, 2, 3) * Automorphism::elementary(ElementaryMove::invert(3), 3);
  auto const g = automorphism_from_json(to_json(f));
  CHECK(g == f);
  CHECK(g.is_certified());
  auto j = to_json(f);
  j["images"][0] = "x1";
  CHECK_THROWS_AS(automorphism_from_json(j), DomainError);
  CHECK_THROWS_AS(automorphism_from_json(nlohmann::json{{"rank", 2}}), DomainError);
}
