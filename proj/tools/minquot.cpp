// Command-line front end for the verification harness and a few of the
// underlying calculators.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "minquot/errors.hpp"
#include "minquot/finite_group.hpp"
#include "minquot/harness.hpp"
#include "minquot/homs.hpp"
#include "minquot/hyperplane.hpp"
#include "minquot/presentation.hpp"

namespace {
  using namespace minquot;

  constexpr int kUsage = 2;

  void print_report(CheckReport const& r, bool json, bool timing) {
    if (json) {
      std::cout << to_json(r, timing).dump() << '\n';
      return;
    }
    std::cout << r.check << ' ' << to_string(r.status);
    if (!r.params.empty()) {
      std::cout << ' ' << r.params.dump();
    }
    std::cout << '\n';
    if (!r.counts.empty()) {
      std::cout << "  counts: " << r.counts.dump() << '\n';
    }
    if (r.witness) {
      std::cout << "  witness: " << r.witness->dump() << '\n';
    }
    if (timing) {
      std::cout << "  elapsed_ms: " << r.elapsed_ms << '\n';
    }
  }

  std::size_t word_rank(std::string const& expr) {
    // Smallest rank that covers every generator mentioned.
    std::size_t rank = 1;
    for (std::size_t i = 0; i < expr.size(); ++i) {
      if (expr[i] != 'x') {
        continue;
      }
      std::size_t k = 0;
      std::size_t j = i + 1;
      while (j < expr.size() && std::isdigit(static_cast<unsigned char>(expr[j]))) {
        k = k * 10 + static_cast<std::size_t>(expr[j] - '0');
        if (k > 1000000) {
          break;
        }
        ++j;
      }
      rank = std::max(rank, k);
    }
    return rank;
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for minimal non-cyclic quotients of SAut(F_n)"};
  app.require_subcommand(1);

  CheckParams params;

  std::string check_name;
  std::size_t check_n = 0;
  bool        check_json = false;
  bool        timing     = false;
  std::string mutate;
  auto*       check = app.add_subcommand("check", "Run one named check");
  check->add_option("name", check_name, "Check name (see `list`)")->required();
  auto* n_opt = check->add_option("--n", check_n, "Size parameter");
  check->add_option("--seed", params.seed, "Seed for sampled checks");
  check->add_flag("--json", check_json, "Emit the JSON report");
  check->add_flag("--allow-large", params.allow_large,
                  "Permit the larger enumerations");
  check->add_flag("--timing", timing, "Include wall time");
  check->add_option("--mutate", mutate, "Inject a convention bug")
      ->check(CLI::IsMember({"reversed-commutator"}));

  std::string profile_name = "quick";
  std::string out_path;
  auto*       all = app.add_subcommand("all", "Run a profile of checks as NDJSON");
  all->add_option("--profile", profile_name, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  all->add_flag("--timing", timing, "Include wall time");
  all->add_option("--out", out_path, "Write the reports here");

  app.add_subcommand("list", "List registered checks");

  std::string word_expr;
  std::size_t rank = 0;
  auto*       word = app.add_subcommand("word", "Reduce and abelianize a word");
  word->add_option("expr", word_expr, "Word such as x1*x2^-1")->required();
  word->add_option("--rank", rank, "Rank of the free group");

  std::string bits;
  auto* hyper = app.add_subcommand("hyperplane", "Hyperplane of an indicator");
  hyper->add_option("bits", bits, "Indicator such as 11000")->required();

  std::string bits_a, bits_b;
  auto*       lemma = app.add_subcommand("lemma-a", "Basis change for two indicators");
  lemma->add_option("first", bits_a)->required();
  lemma->add_option("second", bits_b)->required();

  std::string pres_text, group_name;
  auto*       homs = app.add_subcommand("homs", "Enumerate homomorphisms");
  homs->add_option("presentation", pres_text, "Such as \"<a,b ; a^4, a^2*b^-3>\"")
      ->required();
  homs->add_option("group", group_name, "Catalog name, SL2 or SL3")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    params.hom_ceiling = hom_ceiling_from_env();

    if (*check) {
      if (!is_registered(check_name)) {
        std::cerr << "unknown check '" << check_name << "'\n";
        return kUsage;
      }
      if (*n_opt) {
        params.n = check_n;
      }
      if (mutate == "reversed-commutator") {
        params.convention = CommutatorConvention::reversed;
      }
      auto const report = run_check(check_name, params);
      print_report(report, check_json, timing);
      return exit_code({report});
    }

    if (*all) {
      auto const reports = run_all(*parse_profile(profile_name), params);
      auto const text    = to_ndjson(reports, timing);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
        if (!out) {
          std::cerr << "cannot write " << out_path << '\n';
          return kUsage;
        }
      }
      return exit_code(reports);
    }

    if (app.got_subcommand("list")) {
      for (auto const& name : registered_checks()) {
        std::cout << name << '\n';
      }
      return 0;
    }

    if (*word) {
      auto const w = parse_word(word_expr, rank == 0 ? word_rank(word_expr) : rank);
      nlohmann::ordered_json j;
      j["rank"]          = w.rank();
      j["reduced"]       = render_word(w);
      j["length"]        = w.length();
      j["abelianized"]   = abelianize_word(w);
      std::cout << j.dump() << '\n';
      return 0;
    }

    if (*hyper) {
      auto const ind   = Indicator::parse(bits);
      auto const plane = hyperplane_basis(ind);
      nlohmann::ordered_json j;
      j["indicator"] = ind.to_string();
      j["normal"]    = render_vector(plane.normal(), ind.size());
      auto basis     = nlohmann::json::array();
      for (auto v : plane.basis()) {
        basis.push_back(render_vector(v, ind.size()));
      }
      j["basis"] = basis;
      auto words = nlohmann::json::array();
      for (auto const& w : s_basis(ind)) {
        words.push_back(render_word(w));
      }
      j["s_basis"] = words;
      std::cout << j.dump() << '\n';
      return 0;
    }

    if (*lemma) {
      auto const a  = Indicator::parse(bits_a);
      auto const b  = Indicator::parse(bits_b);
      auto const f  = lemma_a_change(a, b);
      bool const ok = verify_lemma_a(a, b, f);
      nlohmann::ordered_json j;
      auto basis = nlohmann::json::array();
      for (auto const& w : f.images()) {
        basis.push_back(render_word(w));
      }
      j["basis"]    = basis;
      j["verified"] = ok;
      std::cout << j.dump() << '\n';
      return ok ? 0 : 1;
    }

    if (*homs) {
      auto const p      = parse_presentation(pres_text);
      auto const g      = group_by_name(group_name);
      auto const found  = enumerate_homs(p, g, params.hom_ceiling);
      auto const surj   = classify_surjections(found, g);
      nlohmann::ordered_json j;
      j["presentation"] = render_presentation(p);
      j["group"]        = g.name();
      j["order"]        = g.order();
      j["homs"]         = found.size();
      std::size_t surjective = 0;
      for (auto const& c : surj) {
        surjective += c.size();
      }
      j["surjections"]        = surjective;
      j["surjection_classes"] = surj.size();
      std::cout << j.dump() << '\n';
      return 0;
    }
  } catch (RefusedError const& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kUsage;
  } catch (ParseError const& e) {
    std::cerr << "parse error at " << e.position() << ": " << e.what() << '\n';
    return kUsage;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
