#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace xgrag {

using EntityId = std::string;

struct Entity {
    EntityId id;
    std::string name;
    std::string type_label;
    std::string description;
    // Unit-norm when present; never persisted to graph files.
    std::optional<std::vector<double>> name_embedding;
};

struct Relation {
    EntityId source;
    std::string label;
    EntityId target;
    std::string description;

    // Canonical ordering key used everywhere a relation list is serialized.
    friend bool operator<(const Relation& a, const Relation& b) {
        if (a.source != b.source) return a.source < b.source;
        if (a.label != b.label) return a.label < b.label;
        return a.target < b.target;
    }
    friend bool operator==(const Relation& a, const Relation& b) {
        return a.source == b.source && a.label == b.label && a.target == b.target;
    }
};

enum class Provenance { global, retrieved, deduplicated, perturbed };

const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

// A consistent entity/relation set. Entities are kept sorted by id and
// relations by (source, label, target); validate() enforces the structural
// invariants (unique ids, resolvable endpoints, no self-loops, unique triples)
// and is called by every factory that produces a Subgraph.
class Subgraph {
public:
    Subgraph() = default;
    Subgraph(std::vector<Entity> entities, std::vector<Relation> relations,
             Provenance provenance);

    const std::vector<Entity>& entities() const { return entities_; }
    const std::vector<Relation>& relations() const { return relations_; }
    Provenance provenance() const { return provenance_; }

    std::size_t entity_count() const { return entities_.size(); }
    std::size_t relation_count() const { return relations_.size(); }
    bool empty() const { return entities_.empty(); }

    bool has_entity(const EntityId& id) const;
    const Entity& entity(const EntityId& id) const; // throws not_found
    bool has_relation(const Relation& r) const;

    std::vector<EntityId> entity_ids() const;

    // Structural equality ignoring the provenance tag.
    bool same_content(const Subgraph& other) const;

private:
    void validate() const;

    std::vector<Entity> entities_;
    std::vector<Relation> relations_;
    Provenance provenance_ = Provenance::global;
};

struct CentralityScores {
    enum class Kind { degree, pagerank };
    Kind kind;
    std::map<EntityId, double> scores;
};

// Count of relations incident to v, each incident relation counted once
// regardless of direction. Throws not_found for unknown entities.
unsigned degree(const Subgraph& g, const EntityId& v);

// Connected components of an undirected graph given as a vertex set plus
// edge list. Clusters are sorted by id internally and ordered by their
// smallest member, so the partition is a deterministic total ordering.
std::vector<std::vector<EntityId>> connected_components(
    const std::vector<EntityId>& vertices,
    const std::vector<std::pair<EntityId, EntityId>>& edges);

// Components of a subgraph with relations read as undirected edges.
std::vector<std::vector<EntityId>> connected_components(const Subgraph& g);

struct PageRankOptions {
    double damping = 0.85;
    double tolerance = 1e-10;
    int max_iterations = 200;
};

// Power iteration over directed relations; dangling nodes spread their mass
// uniformly. Scores sum to 1 within 1e-9. Throws no_convergence when the L1
// residual stays above tolerance after max_iterations.
CentralityScores pagerank(const Subgraph& g, const PageRankOptions& opts = {});

CentralityScores degree_centrality(const Subgraph& g);

// Graph file format: {"entities":[{id,name,type,description}...],
// "relations":[{source,label,target,description}...]}. Embeddings are never
// persisted.
Subgraph load_graph_json(const std::string& text, Provenance provenance);
Subgraph load_graph_file(const std::string& path, Provenance provenance = Provenance::global);
std::string graph_to_json(const Subgraph& g);
void save_graph_file(const Subgraph& g, const std::string& path);

// FNV-1a 64 over the canonical JSON rendering, as "fnv1a64:<hex>".
std::string graph_fingerprint(const Subgraph& g);

std::uint64_t fnv1a64(const std::string& data, std::uint64_t seed = 14695981039346656037ULL);

} // namespace xgrag
