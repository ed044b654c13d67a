#include "amiwav/wavelet1d.hpp"

#include "amiwav/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace amiwav::wavelet1d {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_finite(std::span<const double> signal) {
    for (std::size_t i = 0; i < signal.size(); ++i) {
        if (!std::isfinite(signal[i])) {
            throw DataError("non-finite sample at index " + std::to_string(i));
        }
    }
}

} // namespace

const double HaarFilters::analysis_low[2] = {kInvSqrt2, kInvSqrt2};
const double HaarFilters::analysis_high[2] = {kInvSqrt2, -kInvSqrt2};
const double HaarFilters::synthesis_low[2] = {kInvSqrt2, kInvSqrt2};
const double HaarFilters::synthesis_high[2] = {-kInvSqrt2, kInvSqrt2};

std::vector<std::size_t> level_lengths(std::size_t original_length, std::size_t levels) {
    std::vector<std::size_t> lengths(levels + 1);
    lengths[0] = original_length;
    for (std::size_t j = 1; j <= levels; ++j) {
        lengths[j] = (lengths[j - 1] + 1) / 2;
    }
    return lengths;
}

double coefficient_scale(std::size_t level) {
    const double even_part = std::ldexp(1.0, static_cast<int>(level / 2));
    return (level % 2 == 0) ? even_part : even_part * std::numbers::sqrt2;
}

void validate(const PyramidDecomposition& pyramid) {
    const std::size_t levels = pyramid.details.size();
    if (levels == 0 || pyramid.original_length == 0) {
        throw StructureError("pyramid has no levels or zero original length");
    }
    if (pyramid.padding_log.size() != levels) {
        throw StructureError("padding log does not cover every level");
    }
    const auto lengths = level_lengths(pyramid.original_length, levels);
    for (std::size_t j = 1; j <= levels; ++j) {
        if (pyramid.details[j - 1].size() != lengths[j]) {
            throw StructureError("detail length mismatch at level " + std::to_string(j) +
                                 ": have " + std::to_string(pyramid.details[j - 1].size()) +
                                 ", expected " + std::to_string(lengths[j]));
        }
        const std::uint8_t expected_pad = (lengths[j - 1] % 2 != 0) ? 1 : 0;
        if (pyramid.padding_log[j - 1] != expected_pad) {
            throw StructureError("padding log mismatch at level " + std::to_string(j));
        }
    }
    if (pyramid.approximation.size() != lengths[levels]) {
        throw StructureError("approximation length mismatch: have " +
                             std::to_string(pyramid.approximation.size()) + ", expected " +
                             std::to_string(lengths[levels]));
    }
}

// The pyramid runs on unscaled block means and half-differences (the
// lifting form of the Haar butterfly) and applies the orthonormal scale
// 2^{j/2} once when a band is materialized. This keeps the constant
// signal exact through the cascade and costs a single rounding per
// stored coefficient.
PyramidDecomposition decompose(std::span<const double> signal, std::size_t levels) {
    if (levels < 1) {
        throw InvalidArgument("levels must be >= 1");
    }
    if (signal.size() < 2) {
        throw InvalidArgument("signal must have at least 2 samples");
    }
    require_finite(signal);

    PyramidDecomposition pyramid;
    pyramid.original_length = signal.size();
    pyramid.details.reserve(levels);
    pyramid.padding_log.reserve(levels);

    std::vector<double> means(signal.begin(), signal.end());
    for (std::size_t j = 1; j <= levels; ++j) {
        std::uint8_t pad = 0;
        if (means.size() % 2 != 0) {
            means.push_back(means.back());
            pad = 1;
        }
        const std::size_t half = means.size() / 2;
        const double scale = coefficient_scale(j);
        std::vector<double> next(half);
        std::vector<double> detail(half);
        for (std::size_t k = 0; k < half; ++k) {
            const double a = means[2 * k];
            const double b = means[2 * k + 1];
            next[k] = (a + b) / 2.0;
            detail[k] = ((a - b) / 2.0) * scale;
        }
        pyramid.details.push_back(std::move(detail));
        pyramid.padding_log.push_back(pad);
        means = std::move(next);
    }

    const double scale = coefficient_scale(levels);
    pyramid.approximation.resize(means.size());
    for (std::size_t k = 0; k < means.size(); ++k) {
        pyramid.approximation[k] = means[k] * scale;
    }
    return pyramid;
}

namespace {

// Shared inverse cascade over unscaled means. zero_details runs the
// approximation-only synthesis; detail_only selects a single band.
std::vector<double> inverse_cascade(const PyramidDecomposition& pyramid,
                                    bool zero_approximation,
                                    bool zero_details,
                                    std::size_t only_detail_level) {
    const std::size_t levels = pyramid.details.size();
    const auto lengths = level_lengths(pyramid.original_length, levels);

    std::vector<double> means(lengths[levels], 0.0);
    if (!zero_approximation) {
        const double scale = coefficient_scale(levels);
        for (std::size_t k = 0; k < means.size(); ++k) {
            means[k] = pyramid.approximation[k] / scale;
        }
    }

    for (std::size_t j = levels; j >= 1; --j) {
        const std::vector<double>& detail = pyramid.details[j - 1];
        const bool use_detail = !zero_details || j == only_detail_level;
        const double scale = coefficient_scale(j);
        std::vector<double> out(2 * detail.size());
        for (std::size_t k = 0; k < detail.size(); ++k) {
            const double m = means[k];
            const double h = use_detail ? detail[k] / scale : 0.0;
            out[2 * k] = m + h;
            out[2 * k + 1] = m - h;
        }
        out.resize(lengths[j - 1]); // drop the replicated tail sample, if any
        means = std::move(out);
    }
    return means;
}

} // namespace

std::vector<double> reconstruct(const PyramidDecomposition& pyramid) {
    validate(pyramid);
    return inverse_cascade(pyramid, false, false, 0);
}

std::vector<double> synthesize_approximation(const PyramidDecomposition& pyramid) {
    validate(pyramid);
    return inverse_cascade(pyramid, false, true, 0);
}

std::vector<double> synthesize_approximation(std::span<const double> deepest_approximation,
                                             std::size_t original_length,
                                             std::size_t levels) {
    if (levels < 1) {
        throw InvalidArgument("levels must be >= 1");
    }
    const auto lengths = level_lengths(original_length, levels);
    if (deepest_approximation.size() != lengths[levels]) {
        throw StructureError("approximation length mismatch: have " +
                             std::to_string(deepest_approximation.size()) + ", expected " +
                             std::to_string(lengths[levels]));
    }

    const double deep_scale = coefficient_scale(levels);
    std::vector<double> means(deepest_approximation.size());
    for (std::size_t k = 0; k < means.size(); ++k) {
        means[k] = deepest_approximation[k] / deep_scale;
    }
    for (std::size_t j = levels; j >= 1; --j) {
        std::vector<double> out(2 * lengths[j]);
        for (std::size_t k = 0; k < lengths[j]; ++k) {
            out[2 * k] = means[k];
            out[2 * k + 1] = means[k];
        }
        out.resize(lengths[j - 1]);
        means = std::move(out);
    }
    return means;
}

std::vector<double> synthesize_detail(const PyramidDecomposition& pyramid, std::size_t level) {
    validate(pyramid);
    if (level < 1 || level > pyramid.details.size()) {
        throw InvalidArgument("detail level " + std::to_string(level) +
                              " out of range 1.." + std::to_string(pyramid.details.size()));
    }
    return inverse_cascade(pyramid, true, true, level);
}

AnalysisStep analysis_step(std::span<const double> x) {
    if (x.size() < 1) {
        throw InvalidArgument("analysis step needs at least one sample");
    }
    AnalysisStep step;
    step.padded = (x.size() % 2 != 0);
    const std::size_t half = (x.size() + 1) / 2;
    step.low.resize(half);
    step.high.resize(half);
    for (std::size_t k = 0; k < half; ++k) {
        const double a = x[2 * k];
        const double b = (2 * k + 1 < x.size()) ? x[2 * k + 1] : x.back();
        step.low[k] = (a + b) * kInvSqrt2;
        step.high[k] = (a - b) * kInvSqrt2;
    }
    return step;
}

std::vector<double> synthesis_step(std::span<const double> low,
                                   std::span<const double> high,
                                   std::size_t output_length) {
    if (low.size() != high.size()) {
        throw StructureError("low/high band length mismatch in synthesis step");
    }
    if (output_length > 2 * low.size() || output_length + 1 < 2 * low.size()) {
        throw StructureError("synthesis output length inconsistent with band length");
    }
    std::vector<double> out(2 * low.size());
    for (std::size_t k = 0; k < low.size(); ++k) {
        out[2 * k] = (low[k] + high[k]) * kInvSqrt2;
        out[2 * k + 1] = (low[k] - high[k]) * kInvSqrt2;
    }
    out.resize(output_length);
    return out;
}

} // namespace amiwav::wavelet1d
