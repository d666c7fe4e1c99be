#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace xgrag {

struct GenerationRequest {
    std::string system_prompt;
    std::string context; // serialized subgraph
    std::string query;
    double temperature = 0.0;
};

struct Embedding {
    std::vector<double> vector;
    std::size_t dimension() const { return vector.size(); }
};

// Monotone invocation counters shared by every caller of a backend instance.
struct BackendUsage {
    std::uint64_t generator_calls = 0;
    std::uint64_t embedder_calls = 0;
    std::uint64_t prompt_tokens_estimate = 0;

    BackendUsage delta_since(const BackendUsage& earlier) const {
        return BackendUsage{generator_calls - earlier.generator_calls,
                            embedder_calls - earlier.embedder_calls,
                            prompt_tokens_estimate - earlier.prompt_tokens_estimate};
    }
};

std::size_t whitespace_token_count(const std::string& text);

// Dot product of unit vectors, clamped to [-1, 1]. Identical vectors short
// circuit to exactly 1 so that equality of embeddings means similarity 1.
double cosine_similarity(const Embedding& a, const Embedding& b);

// Answer generation plus text embedding. Implementations must be safe to
// share across concurrent perturbation workers.
class Backend {
public:
    virtual ~Backend() = default;

    // Returns a non-empty answer; counts one generator call.
    virtual std::string generate(const GenerationRequest& req) = 0;

    // Unit-norm vector of the backend's fixed dimension; counts one embedder
    // call. Identical input yields identical output within one instance.
    virtual Embedding embed(const std::string& text) = 0;

    virtual std::size_t embedding_dimension() const = 0;

    BackendUsage usage() const {
        return BackendUsage{generator_calls_.load(), embedder_calls_.load(),
                            prompt_tokens_.load()};
    }

protected:
    void count_generation(const GenerationRequest& req) {
        generator_calls_.fetch_add(1);
        prompt_tokens_.fetch_add(whitespace_token_count(req.system_prompt) +
                                 whitespace_token_count(req.context) +
                                 whitespace_token_count(req.query));
    }
    void count_embedding() { embedder_calls_.fetch_add(1); }

private:
    std::atomic<std::uint64_t> generator_calls_{0};
    std::atomic<std::uint64_t> embedder_calls_{0};
    std::atomic<std::uint64_t> prompt_tokens_{0};
};

using BackendPtr = std::shared_ptr<Backend>;

} // namespace xgrag
