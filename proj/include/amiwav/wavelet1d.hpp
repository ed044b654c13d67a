#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace amiwav::wavelet1d {

// DB1 (Haar) quadrature mirror filter pair. Analysis high-pass is
// [1/sqrt2, -1/sqrt2], so D[k] = (s[2k] - s[2k+1])/sqrt2; synthesis uses
// the mirrors. Both filters have unit norm and are mutually orthogonal.
struct HaarFilters {
    static const double analysis_low[2];
    static const double analysis_high[2];
    static const double synthesis_low[2];
    static const double synthesis_high[2];
};

// Coefficient pyramid from a multi-resolution Haar analysis.
//
// details[j-1] holds D_j for level j = 1..J; approximation holds A_J for
// the deepest level only. padding_log[j-1] records how many replicated
// tail samples were appended at level j before pairwise filtering (0 or 1).
struct PyramidDecomposition {
    std::size_t original_length = 0;
    std::vector<std::vector<double>> details;
    std::vector<double> approximation;
    std::vector<std::uint8_t> padding_log;

    std::size_t levels() const { return details.size(); }
};

// Working lengths of the pyramid: result[0] = original_length and
// result[j] = ceil(result[j-1] / 2) for j = 1..levels.
std::vector<std::size_t> level_lengths(std::size_t original_length, std::size_t levels);

// Orthonormal Haar coefficient scale 2^{level/2}. Exact power of two for
// even levels; for odd levels a single rounding on sqrt2.
double coefficient_scale(std::size_t level);

// Throws StructureError if the pyramid's coefficient lengths or padding
// log are inconsistent with original_length.
void validate(const PyramidDecomposition& pyramid);

// Multi-resolution analysis. Levels >= 1, signal length >= 2, all samples
// finite. A level with odd working length replicates its tail sample once
// before pairwise filtering and records it in padding_log.
PyramidDecomposition decompose(std::span<const double> signal, std::size_t levels);

// Inverse transform; returns the original signal to within 1e-9 max
// absolute error. Padded tail samples are dropped per padding_log.
std::vector<double> reconstruct(const PyramidDecomposition& pyramid);

// Approximation-only synthesis: the inverse cascade with every detail
// band treated as zero. For Haar this is the blockwise-mean signal; each
// A_J[k] spreads to 2^J consecutive samples of value A_J[k] / 2^{J/2}.
std::vector<double> synthesize_approximation(const PyramidDecomposition& pyramid);

// Same synthesis directly from a deepest-level coefficient array.
std::vector<double> synthesize_approximation(std::span<const double> deepest_approximation,
                                             std::size_t original_length,
                                             std::size_t levels);

// Single-band synthesis: the inverse cascade with every coefficient set
// zeroed except D_level.
std::vector<double> synthesize_detail(const PyramidDecomposition& pyramid, std::size_t level);

// One orthonormal analysis/synthesis step, shared with the 2D transform.
// analysis_step pads an odd input by replicating the tail sample.
struct AnalysisStep {
    std::vector<double> low;
    std::vector<double> high;
    bool padded = false;
};

AnalysisStep analysis_step(std::span<const double> x);
std::vector<double> synthesis_step(std::span<const double> low,
                                   std::span<const double> high,
                                   std::size_t output_length);

} // namespace amiwav::wavelet1d
