#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "minquot/automorphism.hpp"
#include "minquot/homs.hpp"

namespace minquot {

  enum class CheckStatus { pass, fail, refused };

  std::string_view to_string(CheckStatus s);

  struct CheckParams {
    // Size parameter; each check documents its meaning and range. Unset
    // means the check's default.
    std::optional<std::size_t> n;
    std::uint64_t              seed        = 0;
    bool                       allow_large = false;
    std::uint64_t              hom_ceiling = kDefaultHomWorkCeiling;
    // Mutation switch for demonstrating that a convention mix-up is caught.
    CommutatorConvention convention = CommutatorConvention::standard;
  };

  struct CheckReport {
    std::string                   check;
    nlohmann::ordered_json        params = nlohmann::ordered_json::object();
    CheckStatus                   status = CheckStatus::pass;
    nlohmann::ordered_json        counts = nlohmann::ordered_json::object();
    std::optional<nlohmann::json> witness;
    double                        elapsed_ms = 0;
    std::string                   paper_ref;
  };

  // {check, params, status, counts, witness?, elapsed_ms?, paper_ref}. The
  // wall time is left out unless asked for so that reports are
  // reproducible byte for byte.
  nlohmann::ordered_json to_json(CheckReport const& r,
                                 bool               include_timing = false);

  // Registration order.
  std::vector<std::string> const& registered_checks();
  bool                            is_registered(std::string_view name);

  // Throws DomainError for an unregistered name. Unsupported parameters
  // yield a refused report rather than an exception.
  CheckReport run_check(std::string_view name, CheckParams const& params = {});

  enum class Profile { quick, full };

  std::optional<Profile> parse_profile(std::string_view s);

  // The (name, n) pairs a profile runs.
  std::vector<std::pair<std::string, std::optional<std::size_t>>>
  profile_plan(Profile p);

  std::vector<CheckReport> run_all(Profile p, CheckParams const& base = {});

  // 0 if every report passed, 1 if any failed, otherwise 2 if any was
  // refused.
  int exit_code(std::vector<CheckReport> const& reports);

  // One JSON object per line.
  std::string to_ndjson(std::vector<CheckReport> const& reports,
                        bool                            include_timing = false);

  // Reads the hom-search ceiling from MINQUOT_HOM_CEILING, falling back to
  // kDefaultHomWorkCeiling.
  std::uint64_t hom_ceiling_from_env();

}  // namespace minquot
