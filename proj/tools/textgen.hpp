#ifndef WORDMAP_TOOLS_TEXTGEN_HPP
#define WORDMAP_TOOLS_TEXTGEN_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace textgen {

/// Deterministic English-like corpus from a template grammar over a fixed
/// lexicon. Same (target_tokens, seed) -> same bytes.
struct GeneratedCorpus {
    std::string text;
    /// surface form -> part-of-speech tag (det, prep, noun_sg, verb_past, ...)
    std::vector<std::pair<std::string, std::string>> lexicon;
};

GeneratedCorpus generate_english(std::uint64_t target_tokens, std::uint64_t seed = 42);

} // namespace textgen

#endif
