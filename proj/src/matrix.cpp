#include "wordmap/matrix.hpp"

#include <cmath>

namespace wordmap {

double SymmetricMatrix::inf_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < order_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < order_; ++j) row += std::abs(at(i, j));
        if (row > best) best = row;
    }
    return best;
}

std::vector<double> SymmetricMatrix::dense() const {
    std::vector<double> full(order_ * order_);
    for (std::size_t i = 0; i < order_; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double value = at(i, j);
            full[i * order_ + j] = value;
            full[j * order_ + i] = value;
        }
    }
    return full;
}

} // namespace wordmap
