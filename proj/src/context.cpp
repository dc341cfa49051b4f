#include "wordmap/context.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "wordmap/errors.hpp"

namespace wordmap {

double SparseVec::norm() const {
    double sq = 0.0;
    for (const auto& [idx, value] : items) sq += value * value;
    return std::sqrt(sq);
}

double cosine(const SparseVec& u, const SparseVec& v) {
    if (u.dim != v.dim) {
        throw ArgumentError("cosine: dimension mismatch (" + std::to_string(u.dim) + " vs " +
                            std::to_string(v.dim) + ")");
    }
    if (u.zero() || v.zero()) return 0.0;

    double dot = 0.0;
    auto a = u.items.begin();
    auto b = v.items.begin();
    while (a != u.items.end() && b != v.items.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            dot += a->second * b->second;
            ++a;
            ++b;
        }
    }
    if (dot == 0.0) return 0.0;
    return dot / (u.norm() * v.norm());
}

ContextMatrix build_context_matrix(const BigramTable& bigrams, const Vocabulary& vocab,
                                   std::uint32_t top_k, Direction direction) {
    if (top_k == 0) throw ArgumentError("context matrix needs K >= 1");
    if (top_k > vocab.size()) {
        throw ArgumentError("K = " + std::to_string(top_k) + " exceeds vocabulary size " +
                            std::to_string(vocab.size()));
    }
    std::vector<std::uint32_t> ids(top_k);
    for (std::uint32_t i = 0; i < top_k; ++i) ids[i] = i;
    return build_context_matrix(bigrams, vocab, ids, direction);
}

ContextMatrix build_context_matrix(const BigramTable& bigrams, const Vocabulary& vocab,
                                   std::span<const std::uint32_t> word_ids, Direction direction) {
    if (word_ids.empty()) throw ArgumentError("context matrix needs at least one row word");

    ContextMatrix matrix;
    matrix.direction = direction;
    matrix.vocab_size = static_cast<std::uint32_t>(vocab.size());
    matrix.word_ids.assign(word_ids.begin(), word_ids.end());
    matrix.rows.resize(word_ids.size());
    matrix.words.reserve(word_ids.size());

    std::vector<std::int64_t> row_of(vocab.size(), -1);
    for (std::size_t i = 0; i < word_ids.size(); ++i) {
        std::uint32_t id = word_ids[i];
        if (id >= vocab.size()) throw ArgumentError("row word id out of vocabulary range");
        if (row_of[id] >= 0) throw ArgumentError("duplicate row word id");
        row_of[id] = static_cast<std::int64_t>(i);
        matrix.words.push_back(vocab.word(id));
        matrix.rows[i].dim = matrix.vocab_size;
    }

    // A Left row for word w counts bigrams (ctx, w); a Right row counts (w, ctx).
    for (const auto& [key, count] : bigrams.counts()) {
        std::uint32_t left = BigramTable::left_of(key);
        std::uint32_t right = BigramTable::right_of(key);
        std::uint32_t word = direction == Direction::Left ? right : left;
        std::uint32_t ctx = direction == Direction::Left ? left : right;
        if (word >= vocab.size() || ctx >= vocab.size()) continue;
        std::int64_t row = row_of[word];
        if (row < 0) continue;
        matrix.rows[row].items.emplace_back(ctx, static_cast<double>(count));
    }
    for (SparseVec& row : matrix.rows) {
        std::sort(row.items.begin(), row.items.end());
    }
    return matrix;
}

void write_context_matrix(const std::filesystem::path& path, const ContextMatrix& matrix,
                          const Vocabulary& vocab) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
        for (const auto& [ctx, count] : matrix.rows[i].items) {
            out << matrix.words[i] << '\t' << direction_name(matrix.direction) << '\t'
                << vocab.word(ctx) << '\t' << static_cast<std::uint64_t>(count) << '\n';
        }
    }
    if (!out) throw IoError("error writing " + path.string());
}

} // namespace wordmap
