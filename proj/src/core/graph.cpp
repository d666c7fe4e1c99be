#include "core/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "core/error.hpp"

namespace xgrag {

using nlohmann::json;

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::global: return "global";
        case Provenance::retrieved: return "retrieved";
        case Provenance::deduplicated: return "deduplicated";
        case Provenance::perturbed: return "perturbed";
    }
    return "global";
}

Provenance provenance_from_name(const std::string& name) {
    if (name == "global") return Provenance::global;
    if (name == "retrieved") return Provenance::retrieved;
    if (name == "deduplicated") return Provenance::deduplicated;
    if (name == "perturbed") return Provenance::perturbed;
    throw_error(ErrorCode::parse, "unknown provenance tag: " + name);
}

Subgraph::Subgraph(std::vector<Entity> entities, std::vector<Relation> relations,
                   Provenance provenance)
    : entities_(std::move(entities)),
      relations_(std::move(relations)),
      provenance_(provenance) {
    std::sort(entities_.begin(), entities_.end(),
              [](const Entity& a, const Entity& b) { return a.id < b.id; });
    std::sort(relations_.begin(), relations_.end());
    validate();
}

void Subgraph::validate() const {
    std::unordered_set<std::string> ids;
    ids.reserve(entities_.size());
    for (const auto& e : entities_) {
        if (e.name.empty())
            throw_error(ErrorCode::invalid_argument, "entity '" + e.id + "' has an empty name");
        if (!ids.insert(e.id).second)
            throw_error(ErrorCode::invalid_argument, "duplicate entity id: " + e.id);
        if (e.name_embedding) {
            double sq = 0.0;
            for (double x : *e.name_embedding) sq += x * x;
            if (std::abs(std::sqrt(sq) - 1.0) > 1e-6)
                throw_error(ErrorCode::invalid_argument,
                            "entity '" + e.id + "' embedding is not unit length");
        }
    }
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        const auto& r = relations_[i];
        if (r.source == r.target)
            throw_error(ErrorCode::invalid_argument,
                        "self-loop relation on entity '" + r.source + "'");
        if (!ids.count(r.source))
            throw_error(ErrorCode::invalid_argument,
                        "relation source '" + r.source + "' is not an entity of the graph");
        if (!ids.count(r.target))
            throw_error(ErrorCode::invalid_argument,
                        "relation target '" + r.target + "' is not an entity of the graph");
        if (i > 0 && relations_[i - 1] == r)
            throw_error(ErrorCode::invalid_argument,
                        "duplicate relation (" + r.source + ", " + r.label + ", " + r.target + ")");
    }
}

bool Subgraph::has_entity(const EntityId& id) const {
    auto it = std::lower_bound(entities_.begin(), entities_.end(), id,
                               [](const Entity& e, const EntityId& v) { return e.id < v; });
    return it != entities_.end() && it->id == id;
}

const Entity& Subgraph::entity(const EntityId& id) const {
    auto it = std::lower_bound(entities_.begin(), entities_.end(), id,
                               [](const Entity& e, const EntityId& v) { return e.id < v; });
    if (it == entities_.end() || it->id != id)
        throw_error(ErrorCode::not_found, "unknown entity id: " + id);
    return *it;
}

bool Subgraph::has_relation(const Relation& r) const {
    return std::binary_search(relations_.begin(), relations_.end(), r);
}

std::vector<EntityId> Subgraph::entity_ids() const {
    std::vector<EntityId> ids;
    ids.reserve(entities_.size());
    for (const auto& e : entities_) ids.push_back(e.id);
    return ids;
}

bool Subgraph::same_content(const Subgraph& other) const {
    if (entities_.size() != other.entities_.size()) return false;
    if (relations_.size() != other.relations_.size()) return false;
    for (std::size_t i = 0; i < entities_.size(); ++i) {
        const auto& a = entities_[i];
        const auto& b = other.entities_[i];
        if (a.id != b.id || a.name != b.name || a.type_label != b.type_label ||
            a.description != b.description)
            return false;
    }
    for (std::size_t i = 0; i < relations_.size(); ++i) {
        const auto& a = relations_[i];
        const auto& b = other.relations_[i];
        if (!(a == b) || a.description != b.description) return false;
    }
    return true;
}

unsigned degree(const Subgraph& g, const EntityId& v) {
    if (!g.has_entity(v)) throw_error(ErrorCode::not_found, "unknown entity id: " + v);
    unsigned d = 0;
    for (const auto& r : g.relations())
        if (r.source == v || r.target == v) ++d;
    return d;
}

std::vector<std::vector<EntityId>> connected_components(
    const std::vector<EntityId>& vertices,
    const std::vector<std::pair<EntityId, EntityId>>& edges) {
    // Union-find over vertex indices.
    std::unordered_map<EntityId, std::size_t> index;
    index.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);

    std::vector<std::size_t> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            throw_error(ErrorCode::invalid_argument, "edge endpoint outside vertex set");
        std::size_t ra = find(ia->second), rb = find(ib->second);
        if (ra != rb) parent[ra] = rb;
    }

    std::map<std::size_t, std::vector<EntityId>> groups;
    for (std::size_t i = 0; i < vertices.size(); ++i) groups[find(i)].push_back(vertices[i]);

    std::vector<std::vector<EntityId>> clusters;
    clusters.reserve(groups.size());
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        clusters.push_back(std::move(members));
    }
    std::sort(clusters.begin(), clusters.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return clusters;
}

std::vector<std::vector<EntityId>> connected_components(const Subgraph& g) {
    std::vector<std::pair<EntityId, EntityId>> edges;
    edges.reserve(g.relation_count());
    for (const auto& r : g.relations()) edges.emplace_back(r.source, r.target);
    return connected_components(g.entity_ids(), edges);
}

CentralityScores pagerank(const Subgraph& g, const PageRankOptions& opts) {
    if (g.empty())
        throw_error(ErrorCode::invalid_argument, "pagerank requires at least one entity");
    if (!(opts.damping > 0.0 && opts.damping < 1.0))
        throw_error(ErrorCode::invalid_argument, "pagerank damping must lie in (0, 1)");

    const auto ids = g.entity_ids();
    const std::size_t n = ids.size();
    std::unordered_map<EntityId, std::size_t> index;
    index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) index.emplace(ids[i], i);

    // Directed multigraph: every relation is one link.
    std::vector<std::vector<std::size_t>> in_links(n);
    std::vector<double> out_degree(n, 0.0);
    for (const auto& r : g.relations()) {
        std::size_t u = index.at(r.source), v = index.at(r.target);
        in_links[v].push_back(u);
        out_degree[u] += 1.0;
    }

    const double d = opts.damping;
    std::vector<double> rank(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n, 0.0);

    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        double dangling_mass = 0.0;
        for (std::size_t u = 0; u < n; ++u)
            if (out_degree[u] == 0.0) dangling_mass += rank[u];

        const double base = (1.0 - d) / static_cast<double>(n) +
                            d * dangling_mass / static_cast<double>(n);
        for (std::size_t v = 0; v < n; ++v) {
            double in = 0.0;
            for (std::size_t u : in_links[v]) in += rank[u] / out_degree[u];
            next[v] = base + d * in;
        }

        double residual = 0.0;
        for (std::size_t v = 0; v < n; ++v) residual += std::abs(next[v] - rank[v]);
        rank.swap(next);
        if (residual <= opts.tolerance) {
            CentralityScores out{CentralityScores::Kind::pagerank, {}};
            for (std::size_t v = 0; v < n; ++v) out.scores.emplace(ids[v], rank[v]);
            return out;
        }
    }
    throw_error(ErrorCode::no_convergence,
                "pagerank did not converge within " + std::to_string(opts.max_iterations) +
                    " iterations");
}

CentralityScores degree_centrality(const Subgraph& g) {
    CentralityScores out{CentralityScores::Kind::degree, {}};
    for (const auto& e : g.entities()) out.scores.emplace(e.id, 0.0);
    for (const auto& r : g.relations()) {
        out.scores[r.source] += 1.0;
        out.scores[r.target] += 1.0;
    }
    return out;
}

namespace {

std::string require_string(const json& obj, const char* key, const char* what) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string())
        throw_error(ErrorCode::parse, std::string(what) + " is missing string field '" + key + "'");
    return it->get<std::string>();
}

std::string optional_string(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) return {};
    return it->get<std::string>();
}

} // namespace

Subgraph load_graph_json(const std::string& text, Provenance provenance) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw_error(ErrorCode::parse, "graph file is not a JSON object");

    std::vector<Entity> entities;
    std::vector<Relation> relations;
    if (doc.contains("entities")) {
        if (!doc["entities"].is_array())
            throw_error(ErrorCode::parse, "graph 'entities' must be an array");
        for (const auto& e : doc["entities"]) {
            entities.push_back(Entity{require_string(e, "id", "entity"),
                                      require_string(e, "name", "entity"),
                                      optional_string(e, "type"),
                                      optional_string(e, "description"),
                                      std::nullopt});
        }
    }
    if (doc.contains("relations")) {
        if (!doc["relations"].is_array())
            throw_error(ErrorCode::parse, "graph 'relations' must be an array");
        for (const auto& r : doc["relations"]) {
            relations.push_back(Relation{require_string(r, "source", "relation"),
                                         require_string(r, "label", "relation"),
                                         require_string(r, "target", "relation"),
                                         optional_string(r, "description")});
        }
    }
    return Subgraph(std::move(entities), std::move(relations), provenance);
}

Subgraph load_graph_file(const std::string& path, Provenance provenance) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_error(ErrorCode::io, "cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return load_graph_json(buf.str(), provenance);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::parse)
            throw Error(ErrorCode::parse, path + ": " + e.what());
        throw;
    }
}

std::string graph_to_json(const Subgraph& g) {
    json doc;
    doc["entities"] = json::array();
    for (const auto& e : g.entities()) {
        doc["entities"].push_back({{"id", e.id},
                                   {"name", e.name},
                                   {"type", e.type_label},
                                   {"description", e.description}});
    }
    doc["relations"] = json::array();
    for (const auto& r : g.relations()) {
        doc["relations"].push_back({{"source", r.source},
                                    {"label", r.label},
                                    {"target", r.target},
                                    {"description", r.description}});
    }
    return doc.dump(2) + "\n";
}

void save_graph_file(const Subgraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw_error(ErrorCode::io, "cannot write graph file: " + path);
    out << graph_to_json(g);
    if (!out) throw_error(ErrorCode::io, "failed writing graph file: " + path);
}

std::uint64_t fnv1a64(const std::string& data, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string graph_fingerprint(const Subgraph& g) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(graph_to_json(g))));
    return buf;
}

} // namespace xgrag
