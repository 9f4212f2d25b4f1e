#include "liquid/json_io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace liquid {

namespace {

using nlohmann::json;

[[noreturn]] void schema_fail(const std::string& message) { throw SchemaError(message); }

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!known.count(it.key()))
            schema_fail("unknown key \"" + it.key() + "\" in " + where);
}

int parse_agent_ref(const std::string& text, int n, const std::string& where) {
    if (text.empty() || text.size() > 9) schema_fail("bad agent id \"" + text + "\" in " + where);
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            schema_fail("bad agent id \"" + text + "\" in " + where);
    const int id = std::stoi(text);
    if (id >= n) schema_fail("agent id " + text + " out of range in " + where);
    return id;
}

}  // namespace

nlohmann::json scenario_to_json(const SocialGraph& graph, const CompetenceVector& competences,
                                const DelegationProfile* profile, const std::vector<Role>* roles) {
    json agents = json::array();
    for (int i = 0; i < graph.size(); ++i) {
        const Agent agent{i, competences.at(static_cast<std::size_t>(i))};
        agents.push_back(json{{"id", agent.id}, {"p", agent.competence}});
    }
    json edges = json::array();
    for (const auto& [from, to] : graph.edges()) edges.push_back(json::array({from, to}));
    json doc{{"agents", std::move(agents)}, {"edges", std::move(edges)}};
    if (profile) doc["profile"] = profile_to_json(*profile);
    if (roles) {
        json map = json::object();
        for (int i = 0; i < graph.size(); ++i)
            map[std::to_string(i)] = role_name(roles->at(static_cast<std::size_t>(i)));
        doc["roles"] = std::move(map);
    }
    return doc;
}

ScenarioFile scenario_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) schema_fail("scenario document must be a JSON object");
    reject_unknown_keys(doc, {"agents", "edges", "profile", "roles", "manifest"}, "scenario");
    if (!doc.contains("agents") || !doc["agents"].is_array())
        schema_fail("scenario requires an \"agents\" array");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        schema_fail("scenario requires an \"edges\" array");

    const auto& agents = doc["agents"];
    const int n = static_cast<int>(agents.size());
    CompetenceVector competences(static_cast<std::size_t>(n), 0.0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& item : agents) {
        if (!item.is_object()) schema_fail("agent entries must be objects");
        reject_unknown_keys(item, {"id", "p"}, "agent entry");
        if (!item.contains("id") || !item["id"].is_number_integer())
            schema_fail("agent entries require an integer \"id\"");
        if (!item.contains("p") || !item["p"].is_number())
            schema_fail("agent entries require a numeric \"p\"");
        const int id = item["id"].get<int>();
        if (id < 0 || id >= n) schema_fail("agent ids must be dense in [0, n)");
        if (seen[static_cast<std::size_t>(id)])
            schema_fail("duplicate agent id " + std::to_string(id));
        seen[static_cast<std::size_t>(id)] = true;
        competences[static_cast<std::size_t>(id)] = item["p"].get<double>();
    }

    std::vector<std::pair<int, int>> edges;
    for (const auto& entry : doc["edges"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer())
            schema_fail("edges must be [from, to] integer pairs");
        edges.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }

    const ValidationReport report = validate_graph(n, edges, competences);
    if (!report.ok()) schema_fail("invalid scenario: " + report.issues.front().message);

    ScenarioFile file;
    file.graph = SocialGraph(n, edges);
    file.competences = std::move(competences);
    if (doc.contains("profile")) file.profile = profile_from_json(doc["profile"], n);
    if (doc.contains("roles")) {
        const auto& map = doc["roles"];
        if (!map.is_object()) schema_fail("\"roles\" must be an object");
        std::vector<Role> roles(static_cast<std::size_t>(n), Role::DirectOnly);
        for (auto it = map.begin(); it != map.end(); ++it) {
            const int id = parse_agent_ref(it.key(), n, "roles");
            if (!it.value().is_string()) schema_fail("role values must be strings");
            roles[static_cast<std::size_t>(id)] = role_from_name(it.value().get<std::string>());
        }
        file.roles = std::move(roles);
    }
    return file;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw SchemaError(path.string() + ": " + err.what());
    }
    return scenario_from_json(doc);
}

nlohmann::json profile_to_json(const DelegationProfile& profile) {
    json map = json::object();
    for (int i = 0; i < profile.size(); ++i)
        map[std::to_string(i)] =
            profile.is_direct(i) ? std::string("direct") : std::to_string(profile.target_of(i));
    return map;
}

DelegationProfile profile_from_json(const nlohmann::json& doc, int n) {
    if (!doc.is_object()) schema_fail("profile must be an object");
    DelegationProfile profile(n);
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const int id = parse_agent_ref(it.key(), n, "profile");
        if (!it.value().is_string()) schema_fail("profile values must be strings");
        const std::string action = it.value().get<std::string>();
        if (action == "direct") {
            profile.set_direct(id);
            continue;
        }
        // target validity against the graph is settled at resolution time
        profile.set_delegate(id, parse_agent_ref(action, n, "profile"));
    }
    return profile;
}

DelegationProfile load_profile(const std::filesystem::path& path, int n) {
    const std::string text = read_text_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw SchemaError(path.string() + ": " + err.what());
    }
    return profile_from_json(doc, n);
}

const char* role_name(Role role) {
    switch (role) {
        case Role::PresetDelegator: return "preset";
        case Role::Active: return "active";
        case Role::DirectOnly: return "direct";
    }
    return "direct";
}

Role role_from_name(const std::string& name) {
    if (name == "preset") return Role::PresetDelegator;
    if (name == "active") return Role::Active;
    if (name == "direct") return Role::DirectOnly;
    throw SchemaError("unknown role \"" + name + "\"");
}

nlohmann::json config_to_json(const ScenarioConfig& config) {
    json competence;
    if (const auto* fixed = std::get_if<FixedCompetences>(&config.competence))
        competence = json{{"kind", "fixed"}, {"values", fixed->values}};
    else if (const auto* beta = std::get_if<BetaCompetences>(&config.competence))
        competence = json{{"kind", "beta"}, {"a", beta->a}, {"b", beta->b}};
    else {
        const auto& uniform = std::get<UniformCompetences>(config.competence);
        competence = json{{"kind", "uniform"}, {"lo", uniform.lo}, {"hi", uniform.hi}};
    }
    json edges;
    if (const auto* outdeg = std::get_if<RandomOutDegree>(&config.edges))
        edges = json{{"kind", "out-degree"}, {"k", outdeg->k}};
    else
        edges = json{{"kind", "preferential"}, {"k", std::get<PreferentialAttachment>(config.edges).k}};
    json doc{{"n", config.n},
             {"competence", std::move(competence)},
             {"edges", std::move(edges)},
             {"preset_delegation_fraction", config.preset_delegation_fraction},
             {"preset_share_of_delegations", config.preset_share_of_delegations},
             {"alpha", config.alpha},
             {"cap", config.cap ? json(*config.cap) : json(nullptr)},
             {"seed", config.seed}};
    return doc;
}

ScenarioConfig config_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) schema_fail("config must be a JSON object");
    reject_unknown_keys(doc,
                        {"n", "competence", "edges", "preset_delegation_fraction",
                         "preset_share_of_delegations", "alpha", "cap", "seed"},
                        "config");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        schema_fail("config requires an integer \"n\"");
    ScenarioConfig config;
    config.n = doc["n"].get<int>();

    if (doc.contains("competence")) {
        const auto& spec = doc["competence"];
        if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
            schema_fail("\"competence\" must be an object with a \"kind\"");
        const std::string kind = spec["kind"].get<std::string>();
        if (kind == "beta") {
            reject_unknown_keys(spec, {"kind", "a", "b"}, "competence");
            BetaCompetences beta;
            if (spec.contains("a")) beta.a = spec["a"].get<double>();
            if (spec.contains("b")) beta.b = spec["b"].get<double>();
            config.competence = beta;
        } else if (kind == "uniform") {
            reject_unknown_keys(spec, {"kind", "lo", "hi"}, "competence");
            UniformCompetences uniform;
            if (spec.contains("lo")) uniform.lo = spec["lo"].get<double>();
            if (spec.contains("hi")) uniform.hi = spec["hi"].get<double>();
            config.competence = uniform;
        } else if (kind == "fixed") {
            reject_unknown_keys(spec, {"kind", "values"}, "competence");
            if (!spec.contains("values") || !spec["values"].is_array())
                schema_fail("fixed competences require a \"values\" array");
            FixedCompetences fixed;
            for (const auto& v : spec["values"]) {
                if (!v.is_number()) schema_fail("fixed competence values must be numbers");
                fixed.values.push_back(v.get<double>());
            }
            config.competence = std::move(fixed);
        } else {
            schema_fail("unknown competence kind \"" + kind + "\"");
        }
    }

    if (doc.contains("edges")) {
        const auto& spec = doc["edges"];
        if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
            schema_fail("\"edges\" must be an object with a \"kind\"");
        reject_unknown_keys(spec, {"kind", "k"}, "edges");
        const std::string kind = spec["kind"].get<std::string>();
        int k = 5;
        if (spec.contains("k")) {
            if (!spec["k"].is_number_integer()) schema_fail("edge degree \"k\" must be an integer");
            k = spec["k"].get<int>();
        }
        if (kind == "out-degree")
            config.edges = RandomOutDegree{k};
        else if (kind == "preferential")
            config.edges = PreferentialAttachment{k};
        else
            schema_fail("unknown edge kind \"" + kind + "\"");
    }

    const auto read_fraction = [&](const char* key, double& into) {
        if (!doc.contains(key)) return;
        if (!doc[key].is_number()) schema_fail(std::string("\"") + key + "\" must be a number");
        into = doc[key].get<double>();
    };
    read_fraction("preset_delegation_fraction", config.preset_delegation_fraction);
    read_fraction("preset_share_of_delegations", config.preset_share_of_delegations);
    read_fraction("alpha", config.alpha);

    if (doc.contains("cap") && !doc["cap"].is_null()) {
        if (!doc["cap"].is_number_integer()) schema_fail("\"cap\" must be an integer or null");
        config.cap = doc["cap"].get<int>();
    }
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
            schema_fail("\"seed\" must be an integer");
        config.seed = doc["seed"].get<std::uint64_t>();
    }
    return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw SchemaError(path.string() + ": " + err.what());
    }
    return config_from_json(doc);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("failed reading " + path.string());
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace liquid
