#ifndef WORDMAP_MATRIX_HPP
#define WORDMAP_MATRIX_HPP

#include <cstddef>
#include <vector>

namespace wordmap {

/// Dense symmetric matrix, lower triangle stored once.
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t order)
        : order_(order), data_(order * (order + 1) / 2, 0.0) {}

    std::size_t order() const { return order_; }

    double at(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }
    void set(std::size_t i, std::size_t j, double value) { data_[index(i, j)] = value; }

    /// max_i sum_j |a_ij|
    double inf_norm() const;

    /// Unpacked row-major order*order copy.
    std::vector<double> dense() const;

private:
    static std::size_t index_ordered(std::size_t row, std::size_t col) {
        return row * (row + 1) / 2 + col;
    }
    static std::size_t index(std::size_t i, std::size_t j) {
        return i >= j ? index_ordered(i, j) : index_ordered(j, i);
    }

    std::size_t order_ = 0;
    std::vector<double> data_;
};

} // namespace wordmap

#endif
