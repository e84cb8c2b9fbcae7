#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "boostnet/account.hpp"

namespace boostnet {

enum class Axis { Temporal, Network, Friend };

inline constexpr std::array<Axis, 3> kAllAxes = {Axis::Temporal, Axis::Network, Axis::Friend};

// Pairwise plot order: Network-Friend, Network-Temporal, Temporal-Friend.
inline constexpr std::array<std::pair<Axis, Axis>, 3> kAxisPairs = {{
    {Axis::Network, Axis::Friend},
    {Axis::Network, Axis::Temporal},
    {Axis::Temporal, Axis::Friend},
}};

std::string_view axis_name(Axis axis);
Axis axis_from_string(std::string_view name);
double score_component(const ScoreTriple& scores, Axis axis);

struct BandwidthResult {
    double value = 0.0;
    // set when the sample deviation collapsed and the floor was applied
    bool degenerate = false;
};

/// Scott's rule: sigma_hat * n^(-1/(d+4)) with the n-1 deviation,
/// floored at 1e-3. Throws InsufficientDataError for fewer than two
/// samples; a zero deviation yields the floor with the degenerate flag.
BandwidthResult bandwidth_scott(std::span<const double> samples, int dimensionality);

inline constexpr double kBandwidthFloor = 1e-3;

/// Gaussian kernel density evaluated on an evenly spaced grid that
/// includes both range endpoints. One axis for marginals, two for the
/// pairwise product-kernel surfaces; the 2D matrix is row-major with the
/// first axis as the row index.
struct KdeGrid {
    std::vector<Axis> axes;  // size 1 or 2
    std::array<std::pair<double, double>, 2> ranges{};
    std::size_t resolution = 0;  // points per axis
    std::array<double, 2> bandwidths{};
    std::vector<double> density;

    std::size_t axis_count() const { return axes.size(); }
    double step(std::size_t axis_index) const;
    double coordinate(std::size_t axis_index, std::size_t point_index) const;
    double& at(std::size_t row, std::size_t col) { return density[row * resolution + col]; }
    double at(std::size_t row, std::size_t col) const { return density[row * resolution + col]; }
};

KdeGrid kde1d(std::span<const double> samples, double bandwidth,
              std::pair<double, double> range, std::size_t resolution,
              Axis axis = Axis::Temporal);

KdeGrid kde2d(std::span<const std::pair<double, double>> samples,
              std::pair<double, double> bandwidths,
              std::array<std::pair<double, double>, 2> ranges, std::size_t resolution,
              std::pair<Axis, Axis> axes = {Axis::Temporal, Axis::Network});

/// Trapezoidal integral of the density surface over its grid.
double grid_integral(const KdeGrid& grid);

}  // namespace boostnet
