#ifndef WORDMAP_CONTEXT_HPP
#define WORDMAP_CONTEXT_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wordmap/corpus.hpp"

namespace wordmap {

enum class Direction { Left, Right };

inline const char* direction_name(Direction d) { return d == Direction::Left ? "left" : "right"; }

/// Sparse nonnegative count vector with an explicit dimension.
struct SparseVec {
    std::uint32_t dim = 0;
    std::vector<std::pair<std::uint32_t, double>> items; // sorted by index

    double norm() const;
    bool zero() const { return items.empty(); }
};

/// Cosine similarity in [0,1] between two count vectors. Zero vectors
/// compare as 0 to everything. Throws ArgumentError on dimension mismatch.
double cosine(const SparseVec& u, const SparseVec& v);

/// One row per covered word: its left- or right-context counts over the
/// full vocabulary (columns span all V words, not just the covered K).
struct ContextMatrix {
    Direction direction = Direction::Left;
    std::uint32_t vocab_size = 0;          // V, the column count
    std::vector<std::uint32_t> word_ids;   // vocabulary ranks, one per row
    std::vector<std::string> words;        // same order as word_ids
    std::vector<SparseVec> rows;

    std::size_t row_count() const { return rows.size(); }
};

/// Context vectors for the K most frequent words. Throws ArgumentError if
/// K is 0 or exceeds the vocabulary size.
ContextMatrix build_context_matrix(const BigramTable& bigrams, const Vocabulary& vocab,
                                   std::uint32_t top_k, Direction direction);

/// Same, for an explicit set of row words (used for the second-pass graph
/// over atomic words plus signature pseudo-words).
ContextMatrix build_context_matrix(const BigramTable& bigrams, const Vocabulary& vocab,
                                   std::span<const std::uint32_t> word_ids, Direction direction);

/// Debug dump: TSV `word<TAB>direction<TAB>context_word<TAB>count`.
void write_context_matrix(const std::filesystem::path& path, const ContextMatrix& matrix,
                          const Vocabulary& vocab);

} // namespace wordmap

#endif
