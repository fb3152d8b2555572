#include "minquot/presentation.hpp"

#include <cctype>
#include <unordered_map>

#include "minquot/errors.hpp"
#include "minquot/smith.hpp"

namespace minquot {

  namespace {
    Relator normalize(Relator const& r) {
      Relator out;
      for (Syllable s : r) {
        if (s.exponent == 0) {
          continue;
        }
        if (!out.empty() && out.back().generator == s.generator) {
          out.back().exponent += s.exponent;
          if (out.back().exponent == 0) {
            out.pop_back();
          }
        } else {
          out.push_back(s);
        }
      }
      return out;
    }

    bool is_name_start(char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    bool is_name_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    class Parser {
     public:
      explicit Parser(std::string_view text) : text_(text) {}

      Presentation parse() {
        expect('<');
        std::vector<std::string> names;
        skip_ws();
        if (peek() != ';') {
          names.push_back(name());
          while (accept(',')) {
            names.push_back(name());
          }
        }
        std::unordered_map<std::string, std::uint32_t> index;
        for (std::uint32_t i = 0; i < names.size(); ++i) {
          if (!index.emplace(names[i], i).second) {
            throw ParseError("duplicate generator '" + names[i] + "'", pos_);
          }
        }
        expect(';');
        std::vector<Relator> relators;
        skip_ws();
        if (peek() != '>') {
          relators.push_back(relator(index));
          while (accept(',')) {
            relators.push_back(relator(index));
          }
        }
        expect('>');
        skip_ws();
        if (pos_ != text_.size()) {
          throw ParseError("trailing characters after '>'", pos_);
        }
        return Presentation(std::move(names), std::move(relators));
      }

     private:
      void skip_ws() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }

      char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
      }

      bool accept(char c) {
        if (peek() == c) {
          ++pos_;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          throw ParseError(std::string("expected '") + c + "'", pos_);
        }
      }

      std::string name() {
        skip_ws();
        if (pos_ >= text_.size() || !is_name_start(text_[pos_])) {
          throw ParseError("expected a generator name", pos_);
        }
        std::size_t const start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) {
          ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
      }

      std::int64_t integer() {
        skip_ws();
        std::size_t const start = pos_;
        bool              neg   = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
          neg = text_[pos_] == '-';
          ++pos_;
        }
        std::size_t const digits = pos_;
        std::int64_t      value  = 0;
        while (pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          if (value > (INT64_MAX - 9) / 10) {
            throw ParseError("exponent too large", start);
          }
          value = value * 10 + (text_[pos_] - '0');
          ++pos_;
        }
        if (pos_ == digits) {
          throw ParseError("expected an integer exponent", pos_);
        }
        return neg ? -value : value;
      }

      Relator relator(
          std::unordered_map<std::string, std::uint32_t> const& index) {
        Relator r;
        do {
          std::size_t const at = (skip_ws(), pos_);
          auto const        n  = name();
          auto              it = index.find(n);
          if (it == index.end()) {
            throw ParseError("unknown generator '" + n + "'", at);
          }
          std::int64_t e = 1;
          if (accept('^')) {
            e = integer();
          }
          r.push_back({it->second, e});
        } while (accept('*'));
        return r;
      }

      std::string_view text_;
      std::size_t      pos_ = 0;
    };
  }  // namespace

  Presentation::Presentation(std::vector<std::string> generators,
                             std::vector<Relator>     relators)
      : generators_(std::move(generators)) {
    for (auto const& r : relators) {
      for (Syllable s : r) {
        if (s.generator >= generators_.size()) {
          throw DomainError("relator refers to an undeclared generator");
        }
      }
      auto n = normalize(r);
      if (!n.empty()) {
        relators_.push_back(std::move(n));
      }
    }
  }

  Presentation parse_presentation(std::string_view text) {
    return Parser(text).parse();
  }

  std::string render_presentation(Presentation const& p) {
    std::string out = "<";
    for (std::size_t i = 0; i < p.generator_count(); ++i) {
      out += (i ? "," : "") + p.generators()[i];
    }
    out += " ; ";
    bool first_rel = true;
    for (auto const& r : p.relators()) {
      out += first_rel ? "" : ", ";
      first_rel  = false;
      bool first = true;
      for (Syllable s : r) {
        out += first ? "" : "*";
        first = false;
        out += p.generators()[s.generator];
        if (s.exponent != 1) {
          out += "^" + std::to_string(s.exponent);
        }
      }
    }
    out += ">";
    return out;
  }

  Presentation sl2z_presentation() {
    return parse_presentation("<a,b ; a^4, a^2*b^-3>");
  }

  IntMatrix relator_matrix(Presentation const& p) {
    IntMatrix m(p.relators().size(), p.generator_count());
    for (std::size_t r = 0; r < p.relators().size(); ++r) {
      for (Syllable s : p.relators()[r]) {
        m(r, s.generator) += s.exponent;
      }
    }
    return m;
  }

  std::vector<std::int64_t> abelianization_invariants(Presentation const& p) {
    return smith_normal_form(relator_matrix(p)).invariant_factors;
  }

}  // namespace minquot
