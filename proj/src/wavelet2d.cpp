#include "amiwav/wavelet2d.hpp"

#include "amiwav/errors.hpp"
#include "amiwav/wavelet1d.hpp"

#include <cmath>
#include <span>
#include <string>

namespace amiwav::wavelet2d {

namespace {

void require_finite(const Matrix2D& m) {
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (!std::isfinite(m.at(r, c))) {
                throw DataError("non-finite entry at (" + std::to_string(r) + ", " +
                                std::to_string(c) + ")");
            }
        }
    }
}

std::vector<double> column_of(const Matrix2D& m, std::size_t c) {
    std::vector<double> col(m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) {
        col[r] = m.at(r, c);
    }
    return col;
}

// Filters every row of m with the level-1 Haar pair.
void filter_rows(const Matrix2D& m, Matrix2D& low, Matrix2D& high) {
    const std::size_t half = (m.cols + 1) / 2;
    low = Matrix2D(m.rows, half);
    high = Matrix2D(m.rows, half);
    for (std::size_t r = 0; r < m.rows; ++r) {
        const auto step = wavelet1d::analysis_step(
            std::span<const double>(m.values.data() + r * m.cols, m.cols));
        for (std::size_t k = 0; k < half; ++k) {
            low.at(r, k) = step.low[k];
            high.at(r, k) = step.high[k];
        }
    }
}

// Filters every column of m with the level-1 Haar pair.
void filter_cols(const Matrix2D& m, Matrix2D& low, Matrix2D& high) {
    const std::size_t half = (m.rows + 1) / 2;
    low = Matrix2D(half, m.cols);
    high = Matrix2D(half, m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) {
        const auto step = wavelet1d::analysis_step(column_of(m, c));
        for (std::size_t k = 0; k < half; ++k) {
            low.at(k, c) = step.low[k];
            high.at(k, c) = step.high[k];
        }
    }
}

// Inverse of filter_cols: merges a low/high band pair back to output_rows rows.
Matrix2D merge_cols(const Matrix2D& low, const Matrix2D& high, std::size_t output_rows) {
    if (!low.same_shape(high)) {
        throw StructureError("column band shape mismatch");
    }
    Matrix2D out(output_rows, low.cols);
    for (std::size_t c = 0; c < low.cols; ++c) {
        const auto col =
            wavelet1d::synthesis_step(column_of(low, c), column_of(high, c), output_rows);
        for (std::size_t r = 0; r < output_rows; ++r) {
            out.at(r, c) = col[r];
        }
    }
    return out;
}

// Inverse of filter_rows.
Matrix2D merge_rows(const Matrix2D& low, const Matrix2D& high, std::size_t output_cols) {
    if (!low.same_shape(high)) {
        throw StructureError("row band shape mismatch");
    }
    Matrix2D out(low.rows, output_cols);
    for (std::size_t r = 0; r < low.rows; ++r) {
        const auto row = wavelet1d::synthesis_step(
            std::span<const double>(low.values.data() + r * low.cols, low.cols),
            std::span<const double>(high.values.data() + r * high.cols, high.cols),
            output_cols);
        for (std::size_t c = 0; c < output_cols; ++c) {
            out.at(r, c) = row[c];
        }
    }
    return out;
}

} // namespace

std::vector<std::pair<std::size_t, std::size_t>> level_shapes(std::size_t rows,
                                                              std::size_t cols,
                                                              std::size_t levels) {
    std::vector<std::pair<std::size_t, std::size_t>> shapes(levels + 1);
    shapes[0] = {rows, cols};
    for (std::size_t j = 1; j <= levels; ++j) {
        shapes[j] = {(shapes[j - 1].first + 1) / 2, (shapes[j - 1].second + 1) / 2};
    }
    return shapes;
}

Decomposition2D decompose(const Matrix2D& m, std::size_t levels) {
    if (levels < 1) {
        throw InvalidArgument("levels must be >= 1");
    }
    if (m.rows < 2 || m.cols < 2) {
        throw InvalidArgument("matrix must be at least 2x2");
    }
    if (m.values.size() != m.rows * m.cols) {
        throw StructureError("matrix value count does not match its shape");
    }
    require_finite(m);

    Decomposition2D d;
    d.original_rows = m.rows;
    d.original_cols = m.cols;
    d.levels.reserve(levels);
    d.padding_log.reserve(levels);

    Matrix2D working = m;
    for (std::size_t j = 1; j <= levels; ++j) {
        AxisPadding pad;
        pad.cols = (working.cols % 2 != 0) ? 1 : 0;
        pad.rows = (working.rows % 2 != 0) ? 1 : 0;

        Matrix2D hour_low, hour_high;
        filter_rows(working, hour_low, hour_high);

        Level2D level;
        Matrix2D vertical, horizontal, diagonal, approximation;
        filter_cols(hour_low, approximation, vertical);
        filter_cols(hour_high, horizontal, diagonal);
        level.approximation = approximation;
        level.vertical = std::move(vertical);
        level.horizontal = std::move(horizontal);
        level.diagonal = std::move(diagonal);

        d.levels.push_back(std::move(level));
        d.padding_log.push_back(pad);
        working = std::move(approximation);
    }
    return d;
}

Matrix2D reconstruct(const Decomposition2D& d) {
    if (d.levels.empty()) {
        throw StructureError("decomposition has no levels");
    }
    if (d.padding_log.size() != d.levels.size()) {
        throw StructureError("padding log does not cover every level");
    }
    const auto shapes = level_shapes(d.original_rows, d.original_cols, d.levels.size());
    for (std::size_t j = 1; j <= d.levels.size(); ++j) {
        const Level2D& level = d.levels[j - 1];
        const auto [r, c] = shapes[j];
        for (const Matrix2D* band :
             {&level.approximation, &level.horizontal, &level.vertical, &level.diagonal}) {
            if (band->rows != r || band->cols != c) {
                throw StructureError("band shape mismatch at level " + std::to_string(j));
            }
        }
    }

    Matrix2D working = d.levels.back().approximation;
    for (std::size_t j = d.levels.size(); j >= 1; --j) {
        const Level2D& level = d.levels[j - 1];
        const auto [out_rows, out_cols] = shapes[j - 1];

        // Reverse order of the forward pass: week axis first, hour axis second.
        Matrix2D hour_low = merge_cols(working, level.vertical, out_rows);
        Matrix2D hour_high = merge_cols(level.horizontal, level.diagonal, out_rows);
        working = merge_rows(hour_low, hour_high, out_cols);
    }
    return working;
}

Matrix2D vertical_coefficients(const Decomposition2D& d, std::size_t level) {
    if (level < 1 || level > d.levels.size()) {
        throw InvalidArgument("level " + std::to_string(level) + " out of range 1.." +
                              std::to_string(d.levels.size()));
    }
    return d.levels[level - 1].vertical;
}

} // namespace amiwav::wavelet2d
