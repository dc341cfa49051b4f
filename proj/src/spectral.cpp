#include "wordmap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "wordmap/errors.hpp"

namespace wordmap {
namespace {

// Dense symmetric eigensolver after EISPACK tred2/tql2 (the Algol procedures
// of Bowdler, Martin, Reinsch and Wilkinson), 0-based. V holds the matrix on
// entry and the accumulated transformations on exit; d gets the diagonal and
// e the subdiagonal of the tridiagonal form.
void householder_tridiagonalize(std::vector<double>& V, int n, std::vector<double>& d,
                                std::vector<double>& e) {
    auto v = [&](int r, int c) -> double& { return V[static_cast<std::size_t>(r) * n + c]; };

    for (int j = 0; j < n; ++j) d[j] = v(n - 1, j);

    for (int i = n - 1; i > 0; --i) {
        int l = i - 1;
        double scale = 0.0;
        double h = 0.0;
        for (int k = 0; k <= l; ++k) scale += std::abs(d[k]);
        if (scale == 0.0) {
            e[i] = d[l];
            for (int j = 0; j <= l; ++j) {
                d[j] = v(l, j);
                v(i, j) = 0.0;
                v(j, i) = 0.0;
            }
        } else {
            for (int k = 0; k <= l; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[l];
            double g = std::sqrt(h);
            if (f > 0.0) g = -g;
            e[i] = scale * g;
            h -= f * g;
            d[l] = f - g;
            for (int j = 0; j <= l; ++j) e[j] = 0.0;

            for (int j = 0; j <= l; ++j) {
                f = d[j];
                v(j, i) = f;
                g = e[j] + v(j, j) * f;
                for (int k = j + 1; k <= l; ++k) {
                    g += v(k, j) * d[k];
                    e[k] += v(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for (int j = 0; j <= l; ++j) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            double hh = f / (h + h);
            for (int j = 0; j <= l; ++j) e[j] -= hh * d[j];
            for (int j = 0; j <= l; ++j) {
                f = d[j];
                g = e[j];
                for (int k = j; k <= l; ++k) v(k, j) -= (f * e[k] + g * d[k]);
                d[j] = v(l, j);
                v(i, j) = 0.0;
            }
        }
        d[i] = h;
    }

    // Accumulate the Householder transformations.
    for (int i = 0; i < n - 1; ++i) {
        v(n - 1, i) = v(i, i);
        v(i, i) = 1.0;
        double h = d[i + 1];
        if (h != 0.0) {
            for (int k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
            for (int j = 0; j <= i; ++j) {
                double g = 0.0;
                for (int k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
                for (int k = 0; k <= i; ++k) v(k, j) -= g * d[k];
            }
        }
        for (int k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
    }
    for (int j = 0; j < n; ++j) {
        d[j] = v(n - 1, j);
        v(n - 1, j) = 0.0;
    }
    v(n - 1, n - 1) = 1.0;
    e[0] = 0.0;
}

// Implicitly shifted QL iteration on the tridiagonal (d, e), rotations
// accumulated into V. Off-diagonal entries are considered converged once
// below eps relative to the local diagonal scale.
void ql_implicit_shift(std::vector<double>& V, int n, std::vector<double>& d,
                       std::vector<double>& e, long iteration_budget) {
    auto v = [&](int r, int c) -> double& { return V[static_cast<std::size_t>(r) * n + c]; };

    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    const double eps = 1e-12;
    double f = 0.0;
    double tst1 = 0.0;
    long iterations = 0;
    for (int l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        int m = l;
        while (m < n) {
            if (std::abs(e[m]) <= eps * tst1) break;
            ++m;
        }
        if (m > l) {
            do {
                if (++iterations > iteration_budget) {
                    throw NumericError("QL iteration failed to converge within " +
                                       std::to_string(iteration_budget) +
                                       " iterations; residual off-diagonal " +
                                       std::to_string(std::abs(e[l])) + " at index " +
                                       std::to_string(l));
                }
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0.0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                double dl1 = d[l + 1];
                double h = g - d[l];
                for (int i = l + 2; i < n; ++i) d[i] -= h;
                f += h;

                p = d[m];
                double c = 1.0;
                double c2 = c;
                double c3 = c;
                double el1 = e[l + 1];
                double s = 0.0;
                double s2 = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = std::hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for (int k = 0; k < n; ++k) {
                        h = v(k, i + 1);
                        v(k, i + 1) = s * v(k, i) + c * h;
                        v(k, i) = c * v(k, i) - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

/// Make the largest-magnitude entry positive (lowest index decides ties).
void fix_sign(std::vector<double>& column) {
    std::size_t pivot = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < column.size(); ++i) {
        double mag = std::abs(column[i]);
        if (mag > best) {
            best = mag;
            pivot = i;
        }
    }
    if (column[pivot] < 0.0) {
        for (double& x : column) x = -x;
    }
}

} // namespace

SymmetricMatrix normalized_laplacian(const SymmetricMatrix& adjacency,
                                     std::span<const double> degrees) {
    const std::size_t n = adjacency.order();
    if (degrees.size() != n) throw ArgumentError("degree vector size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (!(degrees[i] > 0.0)) {
            throw ArgumentError("normalized laplacian needs positive degrees; vertex " +
                                std::to_string(i) + " has degree " + std::to_string(degrees[i]));
        }
    }
    SymmetricMatrix lap(n);
    for (std::size_t i = 0; i < n; ++i) {
        lap.set(i, i, 1.0);
        for (std::size_t j = 0; j < i; ++j) {
            double a = adjacency.at(i, j);
            if (a != 0.0) lap.set(i, j, -a / std::sqrt(degrees[i] * degrees[j]));
        }
    }
    return lap;
}

EigenSystem smallest_eigenpairs(const SymmetricMatrix& matrix, std::uint32_t m) {
    const std::size_t n = matrix.order();
    if (n == 0) throw ArgumentError("cannot decompose an empty matrix");
    if (m == 0 || m > n) {
        throw ArgumentError("requested " + std::to_string(m) + " eigenpairs of an order-" +
                            std::to_string(n) + " matrix");
    }

    std::vector<double> V = matrix.dense();
    std::vector<double> d(n), e(n);
    householder_tridiagonalize(V, static_cast<int>(n), d, e);
    ql_implicit_shift(V, static_cast<int>(n), d, e, 200 * static_cast<long>(n));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

    std::vector<std::vector<double>> columns(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = V[i * n + order[k]];
        fix_sign(col);
        columns[k] = std::move(col);
    }
    std::vector<double> values(n);
    for (std::size_t k = 0; k < n; ++k) values[k] = d[order[k]];

    // Order columns of (numerically) equal eigenvalues lexicographically so
    // degenerate subspaces come out in a reproducible basis order.
    const double tie_tol = 1e-9;
    std::size_t run_start = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k == n || values[k] - values[k - 1] > tie_tol * std::max(1.0, std::abs(values[k]))) {
            if (k - run_start > 1) {
                std::sort(columns.begin() + run_start, columns.begin() + k);
            }
            run_start = k;
        }
    }

    EigenSystem system;
    system.eigenvalues.assign(values.begin(), values.begin() + m);
    system.eigenvectors.assign(std::make_move_iterator(columns.begin()),
                               std::make_move_iterator(columns.begin() + m));

    const double bound = 1e-8 * std::max(1.0, matrix.inf_norm());
    for (std::uint32_t k = 0; k < m; ++k) {
        const auto& vec = system.eigenvectors[k];
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double av = 0.0;
            for (std::size_t j = 0; j < n; ++j) av += matrix.at(i, j) * vec[j];
            residual = std::max(residual, std::abs(av - system.eigenvalues[k] * vec[i]));
        }
        if (residual > bound) {
            throw NumericError("eigenpair " + std::to_string(k) + " residual " +
                               std::to_string(residual) + " exceeds bound " +
                               std::to_string(bound));
        }
    }
    return system;
}

SpectralEmbedding embed(const NeighborGraph& graph, std::uint32_t m) {
    auto parts = graph.components();
    if (parts.size() > 1) {
        std::cerr << "warning: graph has " << parts.size() << " connected components (sizes";
        for (const auto& part : parts) std::cerr << ' ' << part.size();
        std::cerr << "); zero eigenvalue is degenerate\n";
    }

    AdjacencySystem sys = adjacency_and_degrees(graph);
    SymmetricMatrix lap = normalized_laplacian(sys.adjacency, sys.degrees);
    EigenSystem eig = smallest_eigenpairs(lap, m);

    const std::size_t n = graph.vertex_count();
    SpectralEmbedding embedding;
    embedding.vertex_ids = graph.vertex_ids;
    embedding.words = graph.vertex_words;
    embedding.n_cols = m;
    embedding.coords.resize(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        double scale = std::sqrt(sys.degrees[i]);
        for (std::uint32_t c = 0; c < m; ++c) {
            embedding.coords[i * m + c] = scale * eig.eigenvectors[c][i];
        }
    }
    return embedding;
}

namespace {

std::string format_coord(double value) {
    if (value == 0.0) value = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

} // namespace

void write_embedding(const std::filesystem::path& path, const SpectralEmbedding& embedding) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    for (std::size_t i = 0; i < embedding.size(); ++i) {
        out << embedding.words[i];
        for (std::uint32_t c = 0; c < embedding.n_cols; ++c) {
            out << '\t' << format_coord(embedding.at(i, c));
        }
        out << '\n';
    }
    if (!out) throw IoError("error writing " + path.string());
}

SpectralEmbedding read_embedding(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());

    SpectralEmbedding embedding;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string word;
        if (!std::getline(fields, word, '\t') || word.empty()) {
            throw ParseError("missing word field", line_no);
        }
        std::vector<double> row;
        std::string field;
        while (std::getline(fields, field, '\t')) {
            try {
                std::size_t used = 0;
                row.push_back(std::stod(field, &used));
                if (used != field.size()) throw std::invalid_argument(field);
            } catch (const std::exception&) {
                throw ParseError("bad coordinate '" + field + "'", line_no);
            }
        }
        if (row.empty()) throw ParseError("no coordinates", line_no);
        if (embedding.n_cols == 0) {
            embedding.n_cols = static_cast<std::uint32_t>(row.size());
        } else if (row.size() != embedding.n_cols) {
            throw ParseError("inconsistent column count", line_no);
        }
        embedding.vertex_ids.push_back(static_cast<std::uint32_t>(embedding.words.size()));
        embedding.words.push_back(word);
        embedding.coords.insert(embedding.coords.end(), row.begin(), row.end());
    }
    return embedding;
}

} // namespace wordmap
