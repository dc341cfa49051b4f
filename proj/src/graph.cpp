#include "wordmap/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>

#include "wordmap/errors.hpp"

namespace wordmap {

bool NeighborGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
    const auto& nbrs = adjacency[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t NeighborGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adjacency) twice += nbrs.size();
    return twice / 2;
}

std::vector<std::vector<std::uint32_t>> NeighborGraph::components() const {
    std::vector<std::vector<std::uint32_t>> result;
    std::vector<bool> seen(vertex_count(), false);
    for (std::uint32_t start = 0; start < vertex_count(); ++start) {
        if (seen[start]) continue;
        std::vector<std::uint32_t> comp;
        std::queue<std::uint32_t> frontier;
        frontier.push(start);
        seen[start] = true;
        while (!frontier.empty()) {
            std::uint32_t v = frontier.front();
            frontier.pop();
            comp.push_back(v);
            for (std::uint32_t w : adjacency[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    frontier.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        result.push_back(std::move(comp));
    }
    std::stable_sort(result.begin(), result.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return result;
}

NeighborGraph knn_graph(const ContextMatrix& contexts, std::uint32_t n_neighbors) {
    const std::size_t k = contexts.row_count();
    if (n_neighbors == 0) throw ArgumentError("neighbor count must be positive");
    if (n_neighbors >= k) {
        throw ArgumentError("neighbor count N = " + std::to_string(n_neighbors) +
                            " must be smaller than the row count K = " + std::to_string(k));
    }

    // Pairwise cosines, computed once per unordered pair.
    std::vector<double> sims(k * k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        if (contexts.rows[i].zero()) continue;
        for (std::size_t j = i + 1; j < k; ++j) {
            double s = cosine(contexts.rows[i], contexts.rows[j]);
            sims[i * k + j] = s;
            sims[j * k + i] = s;
        }
    }

    std::vector<std::vector<std::uint32_t>> adjacency(k);
    std::vector<std::uint32_t> candidates(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (contexts.rows[i].zero()) continue; // zero rows select nothing
        candidates.clear();
        for (std::uint32_t j = 0; j < k; ++j) {
            if (j != i) candidates.push_back(j);
        }
        auto closer = [&](std::uint32_t a, std::uint32_t b) {
            double sa = sims[i * k + a];
            double sb = sims[i * k + b];
            if (sa != sb) return sa > sb;
            return contexts.word_ids[a] < contexts.word_ids[b];
        };
        std::partial_sort(candidates.begin(), candidates.begin() + n_neighbors, candidates.end(),
                          closer);
        for (std::uint32_t t = 0; t < n_neighbors; ++t) {
            std::uint32_t j = candidates[t];
            adjacency[i].push_back(j);
            adjacency[static_cast<std::size_t>(j)].push_back(static_cast<std::uint32_t>(i));
        }
    }
    for (auto& nbrs : adjacency) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }

    NeighborGraph graph;
    std::vector<std::int64_t> remap(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
        if (adjacency[i].empty()) {
            graph.removed_ids.push_back(contexts.word_ids[i]);
            graph.removed_words.push_back(contexts.words[i]);
        } else {
            remap[i] = static_cast<std::int64_t>(graph.vertex_ids.size());
            graph.vertex_ids.push_back(contexts.word_ids[i]);
            graph.vertex_words.push_back(contexts.words[i]);
        }
    }
    graph.adjacency.resize(graph.vertex_ids.size());
    for (std::size_t i = 0; i < k; ++i) {
        if (remap[i] < 0) continue;
        auto& out = graph.adjacency[remap[i]];
        out.reserve(adjacency[i].size());
        for (std::uint32_t j : adjacency[i]) {
            out.push_back(static_cast<std::uint32_t>(remap[j]));
        }
        std::sort(out.begin(), out.end());
    }
    return graph;
}

AdjacencySystem adjacency_and_degrees(const NeighborGraph& graph) {
    const std::size_t n = graph.vertex_count();
    if (n == 0) throw ArgumentError("adjacency of an empty graph");
    AdjacencySystem sys{SymmetricMatrix(n), std::vector<double>(n, 0.0)};
    for (std::uint32_t v = 0; v < n; ++v) {
        for (std::uint32_t w : graph.adjacency[v]) {
            if (w > v) sys.adjacency.set(v, w, 1.0);
        }
        sys.degrees[v] = static_cast<double>(graph.degree(v));
    }
    return sys;
}

void write_edge_list(const std::filesystem::path& path, const NeighborGraph& graph) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t v = 0; v < graph.vertex_count(); ++v) {
        for (std::uint32_t w : graph.adjacency[v]) {
            if (w > v) edges.emplace_back(v, w);
        }
    }
    // Order lines by the vocabulary ranks of the endpoints.
    std::sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
        auto ra = std::minmax(graph.vertex_ids[a.first], graph.vertex_ids[a.second]);
        auto rb = std::minmax(graph.vertex_ids[b.first], graph.vertex_ids[b.second]);
        return ra < rb;
    });

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    for (const auto& [v, w] : edges) {
        std::uint32_t lo = v, hi = w;
        if (graph.vertex_ids[hi] < graph.vertex_ids[lo]) std::swap(lo, hi);
        out << graph.vertex_words[lo] << '\t' << graph.vertex_words[hi] << '\n';
    }
    if (!out) throw IoError("error writing " + path.string());
}

void write_removal_list(const std::filesystem::path& path, const NeighborGraph& graph) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    for (const std::string& word : graph.removed_words) out << word << '\n';
    if (!out) throw IoError("error writing " + path.string());
}

} // namespace wordmap
