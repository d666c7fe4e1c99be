#include "core/backend.hpp"

#include <algorithm>
#include <cctype>

#include "core/error.hpp"

namespace xgrag {

std::size_t whitespace_token_count(const std::string& text) {
    std::size_t count = 0;
    bool in_token = false;
    for (unsigned char c : text) {
        if (std::isspace(c)) {
            in_token = false;
        } else if (!in_token) {
            in_token = true;
            ++count;
        }
    }
    return count;
}

double cosine_similarity(const Embedding& a, const Embedding& b) {
    if (a.dimension() != b.dimension())
        throw_error(ErrorCode::invalid_argument,
                    "embedding dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                        std::to_string(b.dimension()));
    if (a.vector == b.vector) return 1.0;
    double dot = 0.0;
    for (std::size_t i = 0; i < a.vector.size(); ++i) dot += a.vector[i] * b.vector[i];
    return std::clamp(dot, -1.0, 1.0);
}

} // namespace xgrag
