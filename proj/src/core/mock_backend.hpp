#pragma once

#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "core/backend.hpp"

namespace xgrag {

// Deterministic offline backend. A pure function of its inputs and seed, so
// full pipeline runs replay byte-for-byte.
//
// Embedding: each whitespace token is hashed (seeded FNV-1a) onto one of 512
// coordinates; the token-count vector is normalized to unit length.
//
// Generation: answer prompts are answered by a fixed template listing the
// configured answer-set entity names that appear in the serialized context,
// sorted ascending. Removing an answer-set entity from the context therefore
// provably changes the answer, and removing any other entity provably does
// not. Extraction prompts are answered by echoing the chunk's "entity:" /
// "relation:" directive lines as JSON; synonym prompts by a derived
// single-word alias.
struct MockBackendConfig {
    std::uint64_t seed = 0;
    std::set<std::string> answer_names;
    std::size_t dimension = 512;
    std::size_t max_context_bytes = 1 << 20;
};

class MockBackend final : public Backend {
public:
    explicit MockBackend(MockBackendConfig cfg = {});

    std::string generate(const GenerationRequest& req) override;
    Embedding embed(const std::string& text) override;
    std::size_t embedding_dimension() const override { return cfg_.dimension; }

    // Entity names parsed from a serialized context's "Entities" section;
    // exposed so tests can reuse the exact membership rule.
    static std::vector<std::string> context_entity_names(const std::string& context);

private:
    std::string answer_for(const std::string& context) const;
    std::string extract_from(const std::string& chunk) const;

    MockBackendConfig cfg_;
    std::mutex cache_mutex_;
    std::unordered_map<std::string, std::vector<double>> embed_cache_;
};

} // namespace xgrag
