#pragma once

#include <cstddef>
#include <vector>

namespace amiwav {

// Dense row-major matrix of 64-bit reals.
struct Matrix2D {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values; // row-major, rows*cols entries

    Matrix2D() = default;
    Matrix2D(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), values(r * c, fill) {}

    double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }

    bool same_shape(const Matrix2D& other) const {
        return rows == other.rows && cols == other.cols;
    }

    bool operator==(const Matrix2D& other) const = default;
};

} // namespace amiwav
