#ifndef WORDMAP_MORPHOLOGY_HPP
#define WORDMAP_MORPHOLOGY_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordmap/corpus.hpp"

namespace wordmap {

/// Rendering of the empty suffix in signature names and pseudo-words.
inline constexpr std::string_view kNullSuffix = "NULL";

/// A set of suffixes shared by at least two stems. Suffixes are stored as
/// raw strings (the empty string for NULL), sorted, which puts NULL first;
/// the name joins them with '.' ("NULL.ed.ing").
struct Signature {
    std::vector<std::string> suffixes;
    std::string name;
    std::uint32_t stem_count = 0;

    static std::string make_name(std::span<const std::string> sorted_suffixes);
};

struct WordSplit {
    std::string stem;
    std::string suffix;          // empty = NULL
    std::uint32_t signature = 0; // index into MorphAnalysis::signatures
};

struct MorphAnalysis {
    std::vector<Signature> signatures;              // sorted by name
    std::map<std::string, std::uint32_t> stem_to_signature;
    std::map<std::string, WordSplit> word_to_split; // analyzed words only

    const Signature& signature_of(const WordSplit& split) const {
        return signatures[split.signature];
    }
    /// All distinct suffixes across signatures, sorted (NULL first).
    std::vector<std::string> suffixes() const;
    /// `<signature-name>_<suffix>` for every signature containing `suffix`.
    std::vector<std::string> pseudo_words_for(std::string_view suffix) const;
};

struct MorphParams {
    std::uint32_t min_word_len = 4;
    std::uint32_t min_stem_len = 3;
    std::uint32_t max_suffix_len = 5;
    std::uint32_t min_stems = 2; // robustness threshold per signature
};

/// Heuristic signature induction: every word of length >= min_word_len is
/// split every admissible way; a stem's candidate signature is the full set
/// of suffixes it was seen with (plus NULL when the stem is itself a word);
/// signatures with >= 2 suffixes shared identically by >= min_stems stems
/// are kept, and each word takes the split whose signature has the most
/// stems (ties: longer suffix, then lexicographic suffix).
MorphAnalysis induce_signatures(const Vocabulary& vocab, const MorphParams& params = {});

std::string pseudo_word(const Signature& sig, std::string_view suffix);

/// Rewrite a token stream for the second-pass graph: words ranked below
/// atomic_k with an analysis become `<signature>_<suffix>` pseudo-words;
/// atomic words, unanalyzed words, boundary markers and previously
/// transformed tokens (anything containing '_') pass through unchanged.
std::vector<std::string> transform_corpus(std::span<const std::string> tokens,
                                          const MorphAnalysis& analysis, const Vocabulary& vocab,
                                          std::uint32_t atomic_k);

/// TSV `stem<TAB>signature-name`, sorted by stem.
void write_signatures(const std::filesystem::path& path, const MorphAnalysis& analysis);

/// Rebuild an analysis from a signature file (e.g. one produced by an
/// external morphology learner). Throws ParseError on malformed lines and
/// ValidationError on signature-level inconsistencies.
MorphAnalysis load_signatures(const std::filesystem::path& path);

} // namespace wordmap

#endif
