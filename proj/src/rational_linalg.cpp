#include "wsnash/rational_linalg.hpp"

#include <stdexcept>

namespace wsnash {

std::optional<std::vector<Rational>> solve_square(RationalMatrix a, std::vector<Rational> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n)
        throw std::invalid_argument("solve_square expects a square system");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(col, j), a.at(pivot, j));
            std::swap(b[col], b[pivot]);
        }
        Rational inv = Rational(1) / a.at(col, col);
        for (std::size_t j = col; j < n; ++j) a.at(col, j) *= inv;
        b[col] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rational factor = a.at(i, col);
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= factor * a.at(col, j);
            b[i] -= factor * b[col];
        }
    }
    return b;
}

} // namespace wsnash
