#ifndef WSNASH_MATRIX_HPP
#define WSNASH_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "wsnash/rational.hpp"

namespace wsnash {

/// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}

    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), cells_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) {
        check(i, j);
        return cells_[i * cols_ + j];
    }

    const Rational& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return cells_[i * cols_ + j];
    }

    const std::vector<Rational>& cells() const { return cells_; }

    RationalMatrix transposed() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> cells_;
};

} // namespace wsnash

#endif
