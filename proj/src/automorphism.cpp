#include "minquot/automorphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "minquot/errors.hpp"

namespace minquot {

  namespace {
    Word letter_word(std::uint32_t k, int sign, std::size_t rank) {
      return Word::generator(k, rank, sign);
    }

    // Image of the single letter l under the move m.
    void substitute_letter(ElementaryMove const& m,
                           Letter                l,
                           std::vector<Letter>&  out) {
      auto push_image = [&](std::initializer_list<Letter> img) {
        if (l.sign() > 0) {
          out.insert(out.end(), img.begin(), img.end());
        } else {
          for (auto it = std::rbegin(img); it != std::rend(img); ++it) {
            out.push_back(it->inverse());
          }
        }
      };
      switch (m.kind) {
        case ElementaryMove::Kind::right_transvection:
          if (l.index() == m.i) {
            push_image({Letter(m.i, 1), Letter(m.j, 1)});
            return;
          }
          break;
        case ElementaryMove::Kind::left_transvection:
          if (l.index() == m.i) {
            push_image({Letter(m.j, -1), Letter(m.i, 1)});
            return;
          }
          break;
        case ElementaryMove::Kind::inversion:
          if (l.index() == m.i) {
            out.push_back(l.inverse());
            return;
          }
          break;
        case ElementaryMove::Kind::swap:
          if (l.index() == m.i) {
            out.emplace_back(m.j, l.sign());
            return;
          }
          if (l.index() == m.j) {
            out.emplace_back(m.i, l.sign());
            return;
          }
          break;
      }
      out.push_back(l);
    }

    Word substitute(ElementaryMove const& m, Word const& w) {
      std::vector<Letter> out;
      out.reserve(w.length() + 2);
      for (Letter l : w.letters()) {
        substitute_letter(m, l, out);
      }
      return Word(out, w.rank());
    }

    std::vector<Word> identity_images(std::size_t rank) {
      std::vector<Word> images;
      images.reserve(rank);
      for (std::uint32_t k = 1; k <= rank; ++k) {
        images.push_back(letter_word(k, 1, rank));
      }
      return images;
    }

    std::vector<Word> replay(std::size_t rank, Certificate const& moves) {
      auto images = identity_images(rank);
      for (auto const& m : moves) {
        validate(m, rank);
        for (auto& img : images) {
          img = substitute(m, img);
        }
      }
      return images;
    }

    void check_same_rank(Automorphism const& f, Automorphism const& g) {
      if (f.rank() != g.rank()) {
        throw RankError("automorphisms of rank " + std::to_string(f.rank())
                        + " and " + std::to_string(g.rank()));
      }
    }

    Certificate inverse_certificate(Certificate const& moves) {
      Certificate out;
      out.reserve(moves.size());
      for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
        auto inv = inverse_moves(*it);
        out.insert(out.end(), inv.begin(), inv.end());
      }
      return out;
    }
  }  // namespace

  void validate(ElementaryMove const& m, std::size_t rank) {
    auto in_range = [rank](std::uint32_t k) { return k >= 1 && k <= rank; };
    if (!in_range(m.i)) {
      throw RankError("move index " + std::to_string(m.i)
                      + " out of range for rank " + std::to_string(rank));
    }
    if (m.kind == ElementaryMove::Kind::inversion) {
      return;
    }
    if (!in_range(m.j)) {
      throw RankError("move index " + std::to_string(m.j)
                      + " out of range for rank " + std::to_string(rank));
    }
    if (m.i == m.j) {
      throw DomainError("elementary move needs distinct indices, got "
                        + to_string(m));
    }
  }

  std::vector<ElementaryMove> inverse_moves(ElementaryMove const& m) {
    using K = ElementaryMove::Kind;
    switch (m.kind) {
      case K::right_transvection:
      case K::left_transvection:
        // Conjugating by the inversion of x_j flips the sign of x_j in the
        // image, which undoes the transvection.
        return {ElementaryMove::invert(m.j), m, ElementaryMove::invert(m.j)};
      case K::inversion:
      case K::swap:
        return {m};
    }
    throw std::logic_error("unreachable");
  }

  std::string to_string(ElementaryMove const& m) {
    using K = ElementaryMove::Kind;
    auto x  = [](std::uint32_t k) { return "x" + std::to_string(k); };
    switch (m.kind) {
      case K::right_transvection:
        return "E(" + x(m.i) + "," + x(m.j) + ")";
      case K::left_transvection:
        return "E(" + x(m.i) + "^-1," + x(m.j) + ")";
      case K::inversion:
        return "inv(" + x(m.i) + ")";
      case K::swap:
        return "swap(" + x(m.i) + "," + x(m.j) + ")";
    }
    throw std::logic_error("unreachable");
  }

  Automorphism::Automorphism(std::size_t                rank,
                             std::vector<Word>          images,
                             std::optional<Certificate> cert)
      : rank_(rank), images_(std::move(images)), certificate_(std::move(cert)) {
    if (rank_ == 0) {
      throw RankError("free group rank must be positive");
    }
    if (images_.size() != rank_) {
      throw RankError("expected " + std::to_string(rank_) + " images, got "
                      + std::to_string(images_.size()));
    }
    for (auto const& w : images_) {
      if (w.rank() != rank_) {
        throw RankError("image word has rank " + std::to_string(w.rank())
                        + ", expected " + std::to_string(rank_));
      }
    }
    if (certificate_ && replay(rank_, *certificate_) != images_) {
      throw std::logic_error(
          "automorphism certificate does not reproduce its images");
    }
  }

  Automorphism Automorphism::identity(std::size_t rank) {
    return Automorphism(rank, identity_images(rank), Certificate{});
  }

  Automorphism Automorphism::from_images(std::vector<Word> images) {
    std::size_t const rank = images.empty() ? 0 : images.front().rank();
    return Automorphism(rank, std::move(images), std::nullopt);
  }

  Automorphism Automorphism::from_certificate(std::size_t rank,
                                              Certificate moves) {
    auto images = replay(rank, moves);
    return Automorphism(rank, std::move(images), std::move(moves));
  }

  Automorphism Automorphism::elementary(ElementaryMove m, std::size_t rank) {
    return from_certificate(rank, {m});
  }

  Word const& Automorphism::image(std::uint32_t k) const {
    if (k == 0 || k > rank_) {
      throw RankError("no generator x" + std::to_string(k) + " in rank "
                      + std::to_string(rank_));
    }
    return images_[k - 1];
  }

  Automorphism transvection(Side          side,
                            std::uint32_t i,
                            std::uint32_t j,
                            std::size_t   rank) {
    auto m = side == Side::right ? ElementaryMove::right(i, j)
                                 : ElementaryMove::left(i, j);
    return Automorphism::elementary(m, rank);
  }

  Word apply(Automorphism const& f, Word const& w) {
    if (f.rank() != w.rank()) {
      throw RankError("cannot apply a rank " + std::to_string(f.rank())
                      + " automorphism to a rank " + std::to_string(w.rank())
                      + " word");
    }
    std::vector<Letter> out;
    for (Letter l : w.letters()) {
      auto img = f.image(l.index()).letters();
      if (l.sign() > 0) {
        out.insert(out.end(), img.begin(), img.end());
      } else {
        for (auto it = img.rbegin(); it != img.rend(); ++it) {
          out.push_back(it->inverse());
        }
      }
    }
    return Word(out, w.rank());
  }

  Automorphism compose(Automorphism const& f, Automorphism const& g) {
    check_same_rank(f, g);
    if (f.is_certified() && g.is_certified()) {
      Certificate cert = *f.certificate();
      cert.insert(cert.end(), g.certificate()->begin(), g.certificate()->end());
      return Automorphism::from_certificate(f.rank(), std::move(cert));
    }
    std::vector<Word> images;
    images.reserve(f.rank());
    for (auto const& w : f.images()) {
      images.push_back(apply(g, w));
    }
    return Automorphism::from_images(std::move(images));
  }

  Automorphism inverse(Automorphism const& f) {
    if (!f.is_certified()) {
      throw UnsupportedError(
          "refusing to invert an endomorphism without a certificate");
    }
    return Automorphism::from_certificate(f.rank(),
                                          inverse_certificate(*f.certificate()));
  }

  Automorphism commutator(Automorphism const&  a,
                          Automorphism const&  b,
                          CommutatorConvention conv) {
    check_same_rank(a, b);
    auto const ai = inverse(a);
    auto const bi = inverse(b);
    if (conv == CommutatorConvention::standard) {
      return a * b * ai * bi;
    }
    return ai * bi * a * b;
  }

  Automorphism magnus_generator(std::size_t rank) {
    if (rank < 2) {
      throw DomainError("the Magnus generator needs rank at least 2");
    }
    return transvection(Side::right, 1, 2, rank)
           * transvection(Side::left, 1, 2, rank);
  }

  IntMatrix abelianization_matrix(Automorphism const& f) {
    IntMatrix m(f.rank(), f.rank());
    for (std::size_t k = 0; k < f.rank(); ++k) {
      auto row = abelianize_word(f.images()[k]);
      for (std::size_t c = 0; c < f.rank(); ++c) {
        m(k, c) = row[c];
      }
    }
    return m;
  }

  bool is_special(Automorphism const& f) {
    return determinant(abelianization_matrix(f)) == 1;
  }

  Automorphism b_element(Word const& v, Word const& w) {
    if (v.rank() != w.rank()) {
      throw RankError("v and w must have the same rank");
    }
    auto const last = static_cast<std::uint32_t>(v.rank());
    if (last < 2) {
      throw DomainError("b_element needs rank at least 2");
    }
    Certificate cert;
    auto        add = [&cert](std::initializer_list<ElementaryMove> ms) {
      cert.insert(cert.end(), ms.begin(), ms.end());
    };
    for (Letter l : v.letters()) {
      if (l.index() == last) {
        throw DomainError("v must not involve the last generator");
      }
      if (l.sign() < 0) {
        add({ElementaryMove::left(last, l.index())});
      } else {
        add({ElementaryMove::invert(l.index()),
             ElementaryMove::left(last, l.index()),
             ElementaryMove::invert(l.index())});
      }
    }
    for (Letter l : w.letters()) {
      if (l.index() == last) {
        throw DomainError("w must not involve the last generator");
      }
      if (l.sign() < 0) {
        add({ElementaryMove::right(last, l.index())});
      } else {
        add({ElementaryMove::invert(l.index()),
             ElementaryMove::right(last, l.index()),
             ElementaryMove::invert(l.index())});
      }
    }
    auto f        = Automorphism::from_certificate(v.rank(), std::move(cert));
    auto expected = v * Word::generator(last, v.rank()) * invert(w);
    if (f.image(last) != expected) {
      throw std::logic_error("b_element construction mismatch");
    }
    return f;
  }

  Automorphism certify_basis(std::vector<Word> const& basis) {
    if (basis.empty()) {
      throw RankError("empty basis");
    }
    std::size_t const rank = basis.front().rank();
    if (basis.size() != rank) {
      throw DomainError("a basis of F_" + std::to_string(rank) + " needs "
                        + std::to_string(rank) + " words");
    }
    // Moves applied to the tuple, each a short left-to-right product mu. If
    // f has images T then compose(mu, f) has images T with one Nielsen move
    // applied. Once the tuple is x_1..x_n we have mu_k ... mu_1 f = 1.
    std::vector<Certificate> applied;
    auto                     tuple = Automorphism::from_images(basis);

    auto push = [&](Certificate mu) {
      tuple = compose(Automorphism::from_certificate(rank, mu), tuple);
      applied.push_back(std::move(mu));
    };

    auto total_length = [&] {
      std::size_t s = 0;
      for (auto const& w : tuple.images()) {
        s += w.length();
      }
      return s;
    };

    for (auto const& w : basis) {
      if (w.empty()) {
        throw DomainError("a basis cannot contain the identity");
      }
    }

    while (total_length() > rank) {
      bool progressed = false;
      for (std::uint32_t i = 1; i <= rank && !progressed; ++i) {
        Word const& ti = tuple.image(i);
        for (std::uint32_t j = 1; j <= rank && !progressed; ++j) {
          if (i == j) {
            continue;
          }
          Word const&                                 tj = tuple.image(j);
          std::vector<std::pair<Word, Certificate>> const options = {
              {ti * tj, {ElementaryMove::right(i, j)}},
              {invert(tj) * ti, {ElementaryMove::left(i, j)}},
              {ti * invert(tj), inverse_moves(ElementaryMove::right(i, j))},
              {tj * ti, inverse_moves(ElementaryMove::left(i, j))}};
          for (auto const& [candidate, mu] : options) {
            if (candidate.length() < ti.length()) {
              if (candidate.empty()) {
                throw DomainError("words are not a free basis");
              }
              push(mu);
              progressed = true;
              break;
            }
          }
        }
      }
      if (!progressed) {
        throw UnsupportedError("greedy Nielsen reduction stalled");
      }
    }

    for (std::uint32_t i = 1; i <= rank; ++i) {
      if (tuple.image(i).letters()[0].sign() < 0) {
        push({ElementaryMove::invert(i)});
      }
    }
    for (std::uint32_t i = 1; i <= rank; ++i) {
      std::uint32_t const at = tuple.image(i).letters()[0].index();
      if (at == i) {
        continue;
      }
      std::uint32_t j = i + 1;
      while (j <= rank && tuple.image(j).letters()[0].index() != i) {
        ++j;
      }
      if (j > rank) {
        throw DomainError("words are not a free basis");
      }
      push({ElementaryMove::swap(i, j)});
    }

    Certificate cert;
    for (auto const& mu : applied) {
      auto inv = inverse_certificate(mu);
      cert.insert(cert.end(), inv.begin(), inv.end());
    }
    auto f = Automorphism::from_certificate(rank, std::move(cert));
    if (std::vector<Word>(f.images().begin(), f.images().end()) != basis) {
      throw std::logic_error("certify_basis produced a wrong certificate");
    }
    return f;
  }

  namespace {
    char const* kind_name(ElementaryMove::Kind k) {
      using K = ElementaryMove::Kind;
      switch (k) {
        case K::right_transvection:
          return "right";
        case K::left_transvection:
          return "left";
        case K::inversion:
          return "invert";
        case K::swap:
          return "swap";
      }
      throw std::logic_error("unreachable");
    }
  }  // namespace

  nlohmann::json to_json(Automorphism const& f) {
    nlohmann::json j;
    j["rank"]   = f.rank();
    auto images = nlohmann::json::array();
    for (auto const& w : f.images()) {
      images.push_back(render_word(w));
    }
    j["images"] = std::move(images);
    if (f.is_certified()) {
      auto cert = nlohmann::json::array();
      for (auto const& m : *f.certificate()) {
        nlohmann::json mj{{"move", kind_name(m.kind)}, {"i", m.i}};
        if (m.kind != ElementaryMove::Kind::inversion) {
          mj["j"] = m.j;
        }
        cert.push_back(std::move(mj));
      }
      j["certificate"] = std::move(cert);
    } else {
      j["certificate"] = nullptr;
    }
    return j;
  }

  Automorphism automorphism_from_json(nlohmann::json const& j) {
    try {
      auto const        rank = j.at("rank").get<std::size_t>();
      std::vector<Word> images;
      for (auto const& s : j.at("images")) {
        images.push_back(parse_word(s.get<std::string>(), rank));
      }
      if (!j.contains("certificate") || j.at("certificate").is_null()) {
        if (images.size() != rank) {
          throw RankError("image count does not match rank");
        }
        return Automorphism::from_images(std::move(images));
      }
      Certificate cert;
      for (auto const& mj : j.at("certificate")) {
        auto const    kind = mj.at("move").get<std::string>();
        auto const    i    = mj.at("i").get<std::uint32_t>();
        std::uint32_t jj   = mj.contains("j") ? mj.at("j").get<std::uint32_t>()
                                              : 0;
        if (kind == "right") {
          cert.push_back(ElementaryMove::right(i, jj));
        } else if (kind == "left") {
          cert.push_back(ElementaryMove::left(i, jj));
        } else if (kind == "invert") {
          cert.push_back(ElementaryMove::invert(i));
        } else if (kind == "swap") {
          cert.push_back(ElementaryMove::swap(i, jj));
        } else {
          throw DomainError("unknown move kind '" + kind + "'");
        }
      }
      auto f = Automorphism::from_certificate(rank, std::move(cert));
      if (std::vector<Word>(f.images().begin(), f.images().end()) != images) {
        throw DomainError("certificate does not match the stated images");
      }
      return f;
    } catch (nlohmann::json::exception const& e) {
      throw DomainError(std::string("malformed automorphism JSON: ")
                        + e.what());
    }
  }

}  // namespace minquot
