#pragma once

#include "amiwav/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace amiwav::wavelet2d {

// One level of a separable 2D Haar decomposition. Band naming is fixed by
// the filter orientation: rows index weeks, columns index hours;
// "vertical" is high-pass along the week axis and low-pass along the hour
// axis, so it captures week-to-week variation at hourly positions.
struct Level2D {
    Matrix2D approximation; // low hours, low weeks
    Matrix2D horizontal;    // high hours, low weeks
    Matrix2D vertical;      // low hours, high weeks
    Matrix2D diagonal;      // high hours, high weeks
};

struct AxisPadding {
    std::uint8_t rows = 0; // replicated tail rows (week axis)
    std::uint8_t cols = 0; // replicated tail columns (hour axis)
};

struct Decomposition2D {
    std::size_t original_rows = 0;
    std::size_t original_cols = 0;
    std::vector<Level2D> levels;
    std::vector<AxisPadding> padding_log;

    std::size_t depth() const { return levels.size(); }
};

// Per-level (rows, cols) working shapes, index 0 = original shape.
std::vector<std::pair<std::size_t, std::size_t>> level_shapes(std::size_t rows,
                                                              std::size_t cols,
                                                              std::size_t levels);

// Separable multi-resolution analysis: each level filters along the hour
// axis (within each row) first, then along the week axis, and passes the
// low/low product to the next level. Odd axis lengths are padded by
// replicating the final row or column.
Decomposition2D decompose(const Matrix2D& m, std::size_t levels);

// Inverse transform; padding dropped. Max abs error 1e-9 on round trips.
Matrix2D reconstruct(const Decomposition2D& d);

// W_psi^v(level) by value; level in 1..depth.
Matrix2D vertical_coefficients(const Decomposition2D& d, std::size_t level);

} // namespace amiwav::wavelet2d
