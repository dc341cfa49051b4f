#ifndef WORDMAP_SPECTRAL_HPP
#define WORDMAP_SPECTRAL_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "wordmap/graph.hpp"
#include "wordmap/matrix.hpp"

namespace wordmap {

/// D^{-1/2} (D - M) D^{-1/2}: unit diagonal, off-diagonal -M(i,j)/sqrt(d_i d_j).
/// Throws ArgumentError naming the vertex if any degree is not positive.
SymmetricMatrix normalized_laplacian(const SymmetricMatrix& adjacency,
                                     std::span<const double> degrees);

/// Eigenvalues ascending with orthonormal eigenvector columns. The sign of
/// each column is fixed so its largest-magnitude entry (lowest index on
/// ties) is positive; within runs of equal eigenvalues columns are ordered
/// lexicographically, so the decomposition is reproducible.
struct EigenSystem {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors; // eigenvectors[k] pairs with eigenvalues[k]
};

/// The m algebraically smallest eigenpairs of a dense symmetric matrix,
/// by Householder tridiagonalization followed by implicitly shifted QL.
/// Every returned pair satisfies |A v - lambda v|_inf <= 1e-8 * max(1, |A|_inf);
/// violations and non-convergence raise NumericError with the residual.
EigenSystem smallest_eigenpairs(const SymmetricMatrix& matrix, std::uint32_t m);

/// Per-vertex coordinates from the premultiplied eigenvectors: column c of
/// vertex i is sqrt(d_i) times entry i of eigenvector c. Column 0 is the
/// trivial one (proportional to vertex degree); 2-D plots use columns 1, 2.
struct SpectralEmbedding {
    std::vector<std::uint32_t> vertex_ids;
    std::vector<std::string> words;
    std::uint32_t n_cols = 0;
    std::vector<double> coords; // row-major, words.size() x n_cols

    std::size_t size() const { return words.size(); }
    double at(std::size_t vertex, std::uint32_t col) const {
        return coords[vertex * n_cols + col];
    }
};

/// Embed a neighbor graph with its m smallest laplacian eigenvectors.
/// Logs a warning on stderr when the graph is disconnected (the zero
/// eigenvalue then has multiplicity > 1).
SpectralEmbedding embed(const NeighborGraph& graph, std::uint32_t m);

/// TSV `word<TAB>c0<TAB>...`, coordinates with 12 significant digits.
void write_embedding(const std::filesystem::path& path, const SpectralEmbedding& embedding);
SpectralEmbedding read_embedding(const std::filesystem::path& path);

} // namespace wordmap

#endif
