#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "liquid/core.hpp"
#include "liquid/scenarios.hpp"

namespace liquid {

// Input data that does not match the documented schema.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable or unwritable files.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct ScenarioFile {
    SocialGraph graph;
    CompetenceVector competences;
    std::optional<DelegationProfile> profile;
    std::optional<std::vector<Role>> roles;
};

// Scenario schema: {"agents":[{"id":0,"p":0.99},...], "edges":[[3,4],...]}
// with optional "profile", "roles" and "manifest" objects. Unknown keys are
// rejected.
nlohmann::json scenario_to_json(const SocialGraph& graph, const CompetenceVector& competences,
                                const DelegationProfile* profile = nullptr,
                                const std::vector<Role>* roles = nullptr);
ScenarioFile scenario_from_json(const nlohmann::json& doc);
ScenarioFile load_scenario(const std::filesystem::path& path);

// Profile object: agent id (as string) -> "direct" or the target id as a
// string. Agents not listed vote directly.
nlohmann::json profile_to_json(const DelegationProfile& profile);
DelegationProfile profile_from_json(const nlohmann::json& doc, int n);
DelegationProfile load_profile(const std::filesystem::path& path, int n);

const char* role_name(Role role);
Role role_from_name(const std::string& name);

// Generator config schema, e.g.
//   {"n":50, "competence":{"kind":"beta","a":4,"b":2},
//    "edges":{"kind":"out-degree","k":5},
//    "preset_delegation_fraction":0.9, "preset_share_of_delegations":0.95,
//    "alpha":0.1, "cap":10, "seed":0}
// Only "n" is required; unknown keys are rejected.
nlohmann::json config_to_json(const ScenarioConfig& config);
ScenarioConfig config_from_json(const nlohmann::json& doc);
ScenarioConfig load_config(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace liquid
