#pragma once

namespace xgrag::prompts {

// Answer-generation rules. Deliberately strict and minimal: consistent
// phrasing, no fabrication, admit ignorance, same language as the question.
inline constexpr const char* kAnswerSystemPrompt =
    "You answer questions strictly from the knowledge graph context below.\n"
    "Rules:\n"
    "- Respond in the same language as the user's question.\n"
    "- Avoid varying the introductory sentence; answer directly and concisely.\n"
    "- If you don't know the answer, just say so.\n"
    "- Do not make anything up. Do not include information not provided by the context.\n";

// Entity/relation extraction: one JSON object per line so that individual
// malformed lines can be dropped without losing the chunk.
inline constexpr const char* kExtractionSystemPrompt =
    "Extract the entities and relations stated in the text below.\n"
    "Emit exactly one JSON object per line and nothing else:\n"
    "{\"kind\":\"entity\",\"name\":...,\"type\":...,\"description\":...}\n"
    "{\"kind\":\"relation\",\"source\":...,\"label\":...,\"target\":...,\"description\":...}\n"
    "Relation source/target must repeat entity names exactly.\n";

inline constexpr const char* kSynonymSystemPrompt =
    "Reply with exactly one single-word synonym for the given term and nothing else.\n";

} // namespace xgrag::prompts
