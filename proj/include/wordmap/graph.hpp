#ifndef WORDMAP_GRAPH_HPP
#define WORDMAP_GRAPH_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wordmap/context.hpp"
#include "wordmap/matrix.hpp"

namespace wordmap {

/// Symmetric unweighted nearest-neighbor graph over context rows.
/// Vertices whose degree ended up zero have been removed (and recorded),
/// so every remaining vertex has degree >= 1.
struct NeighborGraph {
    std::vector<std::uint32_t> vertex_ids;  // vocabulary ranks
    std::vector<std::string> vertex_words;
    std::vector<std::vector<std::uint32_t>> adjacency; // sorted local indices
    std::vector<std::uint32_t> removed_ids;
    std::vector<std::string> removed_words;

    std::size_t vertex_count() const { return vertex_ids.size(); }
    std::uint32_t degree(std::uint32_t v) const {
        return static_cast<std::uint32_t>(adjacency[v].size());
    }
    bool has_edge(std::uint32_t u, std::uint32_t v) const;
    std::size_t edge_count() const;

    /// Vertex sets of connected components, largest first.
    std::vector<std::vector<std::uint32_t>> components() const;
};

/// Union-of-neighborhoods graph: edge (u,v) iff u is among the N rows with
/// the largest cosine to v, or vice versa. Ties at the cut are broken toward
/// the lower vocabulary rank. Rows that are all zero select no neighbors.
/// Throws ArgumentError unless 1 <= n_neighbors < row count.
NeighborGraph knn_graph(const ContextMatrix& contexts, std::uint32_t n_neighbors);

struct AdjacencySystem {
    SymmetricMatrix adjacency;       // 0/1, zero diagonal
    std::vector<double> degrees;     // row sums
};

/// Canonical matrix representation M plus the degree diagonal D.
AdjacencySystem adjacency_and_degrees(const NeighborGraph& graph);

/// TSV `word_i<TAB>word_j`, rank of word_i smaller, sorted by rank pair.
void write_edge_list(const std::filesystem::path& path, const NeighborGraph& graph);
/// Removed isolated vertices, one word per line.
void write_removal_list(const std::filesystem::path& path, const NeighborGraph& graph);

} // namespace wordmap

#endif
