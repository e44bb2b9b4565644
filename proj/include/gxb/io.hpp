#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gxb/crossed.hpp"
#include "gxb/obstruction.hpp"

namespace gxb {

using Json = nlohmann::json;

/// Accepts {"table": [[ids]]}, {"generators": [...], "degree": n} or
/// {"builtin": "S3"}; "name" and "order" are optional and checked if present.
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);

/// A builtin name, or a path to a group JSON file.
FiniteGroup load_group(const std::string& spec);

/// "0,2,5" -> {0,2,5}. Whitespace is allowed; anything else is MalformedInput.
std::vector<Elem> parse_ids(const std::string& text);

/// Cochain JSON: {"degree", "modulus" | "module", "entries": {"g,h,k": e}, "normalized"}.
/// "modulus" N means mu_N; "module" is a group schema with trivial action.
Cochain cochain_from_json(const Json& j, GroupPtr g);
Json cochain_to_json(const Cochain& c);
Cochain load_cochain(const std::filesystem::path& path, GroupPtr g);

Json subgroup_to_json(const Subgroup& s);
Json subcat_to_json(const SubcatData& s);
Json grading_to_json(const GradingSpec& g);
Json checks_to_json(const TheoremChecks& c);
/// `ambient` describes the twisted group the certificate lives over.
Json certificate_to_json(const CrossedBraidingCertificate& c, const Json& ambient);

/// Stored H^3(G, mu_|G|) representatives for builtin groups.
struct OmegaFixture {
    std::string group;
    long long modulus = 0;
    std::vector<long long> invariant_factors;
    std::vector<Cochain> representatives;
};

/// Directory holding <name>.json fixtures; GXB_DATA_DIR overrides the built-in path.
std::filesystem::path default_omega_dir();
Json omega_fixture_to_json(const OmegaFixture& f);
OmegaFixture omega_fixture_from_json(const Json& j, GroupPtr g);
/// Computes the representatives with the cohomology engine.
OmegaFixture compute_omega_fixture(GroupPtr g);
/// Reads <dir>/<name>.json if present.
std::optional<OmegaFixture> read_omega_fixture(const std::filesystem::path& dir, const std::string& name, GroupPtr g);
/// The stored fixture for g->name() when there is one, else a computed one.
OmegaFixture omega_fixture_for(const std::filesystem::path& dir, GroupPtr g, bool* stored = nullptr);

} // namespace gxb
