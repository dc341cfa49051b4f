#ifndef WORDMAP_CORPUS_HPP
#define WORDMAP_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace wordmap {

/// Sentence-boundary pseudo-token. The tokenizer strips leading/trailing
/// punctuation from every word, so no corpus token can collide with it.
inline constexpr std::string_view kBoundary = "<s>";

inline bool is_boundary(std::string_view token) { return token == kBoundary; }

struct TokenizeConfig {
    bool lowercase = true;
    /// Emit a boundary token after sentence-final punctuation (. ! ?).
    bool sentence_boundaries = true;
    /// Keep punctuation-only chunks as tokens instead of dropping them.
    bool keep_punctuation = false;
};

/// Split UTF-8 text into normalized word tokens and boundary markers.
/// Words are split on whitespace, stripped of leading/trailing ASCII
/// punctuation (internal apostrophes, hyphens etc. are kept) and lowercased
/// (ASCII). A run of sentence-final punctuation yields one boundary token.
/// Throws ParseError naming the byte offset on malformed UTF-8.
std::vector<std::string> tokenize(std::string_view text, const TokenizeConfig& config = {});

/// Frequency-ranked word list. Rank 0 is the most frequent word; ties are
/// broken by first occurrence in the token stream. Boundary markers are
/// never entered.
class Vocabulary {
public:
    using Entry = std::pair<std::string, std::uint64_t>;

    Vocabulary() = default;
    explicit Vocabulary(std::vector<Entry> entries);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }
    const std::string& word(std::uint32_t rank) const { return entries_[rank].first; }
    std::uint64_t count(std::uint32_t rank) const { return entries_[rank].second; }
    std::optional<std::uint32_t> rank_of(std::string_view word) const;

private:
    std::vector<Entry> entries_;
    std::unordered_map<std::string, std::uint32_t> rank_;
};

Vocabulary build_vocabulary(std::span<const std::string> tokens);

/// Sparse counts of ordered adjacent word pairs, keyed by vocabulary rank.
class BigramTable {
public:
    using Key = std::uint64_t;
    static Key key(std::uint32_t left, std::uint32_t right) {
        return (static_cast<Key>(left) << 32) | right;
    }
    static std::uint32_t left_of(Key k) { return static_cast<std::uint32_t>(k >> 32); }
    static std::uint32_t right_of(Key k) { return static_cast<std::uint32_t>(k & 0xffffffffu); }

    void add(std::uint32_t left, std::uint32_t right, std::uint64_t n = 1) {
        counts_[key(left, right)] += n;
    }
    std::uint64_t count(std::uint32_t left, std::uint32_t right) const;
    std::uint64_t total() const;
    std::size_t size() const { return counts_.size(); }
    const std::unordered_map<Key, std::uint64_t>& counts() const { return counts_; }

private:
    std::unordered_map<Key, std::uint64_t> counts_;
};

/// Count adjacent ordered pairs of non-boundary tokens. Pairs separated by
/// a boundary marker are not counted; tokens missing from the vocabulary
/// (truncated externally) drop the pairs they take part in.
BigramTable count_bigrams(std::span<const std::string> tokens, const Vocabulary& vocab);

// --- file formats -----------------------------------------------------------

/// Read a whole file; throws IoError (missing file) or ParseError (bad UTF-8).
std::string read_text_file(const std::filesystem::path& path);

/// Whitespace-splits a pre-tokenized file (one token per field), as written
/// by the morphology transform. "<s>" fields are boundary markers.
std::vector<std::string> read_token_file(const std::filesystem::path& path);
void write_token_file(const std::filesystem::path& path, std::span<const std::string> tokens);

/// TSV `rank<TAB>word<TAB>count`, rank ascending.
void write_vocabulary(const std::filesystem::path& path, const Vocabulary& vocab);
Vocabulary read_vocabulary(const std::filesystem::path& path);

/// TSV `left_word<TAB>right_word<TAB>count`, sorted by (left rank, right rank).
void write_bigrams(const std::filesystem::path& path, const BigramTable& table, const Vocabulary& vocab);
BigramTable read_bigrams(const std::filesystem::path& path, const Vocabulary& vocab);

} // namespace wordmap

#endif
