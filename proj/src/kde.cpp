#include "boostnet/kde.hpp"

#include <cmath>

#include "boostnet/errors.hpp"

namespace boostnet {

namespace {

constexpr double kInvSqrtTwoPi = 0.3989422804014326779;  // 1/sqrt(2*pi)

double gaussian(double z) {
    return kInvSqrtTwoPi * std::exp(-0.5 * z * z);
}

void check_grid_args(double bandwidth, std::pair<double, double> range, std::size_t resolution,
                     std::size_t n_samples) {
    if (n_samples == 0) {
        throw InsufficientDataError("kde: empty sample set");
    }
    if (!(bandwidth > 0.0)) {
        throw InvariantError("kde: bandwidth must be positive");
    }
    if (resolution < 16) {
        throw InvariantError("kde: resolution must be at least 16");
    }
    if (!(range.second > range.first)) {
        throw InvariantError("kde: range must be non-degenerate");
    }
}

}  // namespace

std::string_view axis_name(Axis axis) {
    switch (axis) {
        case Axis::Temporal: return "temporal";
        case Axis::Network: return "network";
        case Axis::Friend: return "friend";
    }
    return "temporal";
}

Axis axis_from_string(std::string_view name) {
    if (name == "temporal") return Axis::Temporal;
    if (name == "network") return Axis::Network;
    if (name == "friend") return Axis::Friend;
    throw ParseError("unknown axis '" + std::string(name) + "'");
}

double score_component(const ScoreTriple& scores, Axis axis) {
    switch (axis) {
        case Axis::Temporal: return scores.temporal;
        case Axis::Network: return scores.network;
        case Axis::Friend: return scores.friend_;
    }
    return scores.temporal;
}

BandwidthResult bandwidth_scott(std::span<const double> samples, int dimensionality) {
    if (samples.size() < 2) {
        throw InsufficientDataError("bandwidth_scott: need at least two samples");
    }
    if (dimensionality != 1 && dimensionality != 2) {
        throw InvariantError("bandwidth_scott: dimensionality must be 1 or 2");
    }

    const double n = static_cast<double>(samples.size());
    bool all_equal = true;
    double mean = 0.0;
    for (double x : samples) {
        mean += x;
        all_equal = all_equal && (x == samples.front());
    }
    mean /= n;
    double ss = 0.0;
    for (double x : samples) {
        ss += (x - mean) * (x - mean);
    }
    const double sigma = all_equal ? 0.0 : std::sqrt(ss / (n - 1.0));

    const double exponent = -1.0 / (dimensionality + 4.0);
    const double h = sigma * std::pow(n, exponent);

    BandwidthResult result;
    if (!(h > kBandwidthFloor)) {
        result.value = kBandwidthFloor;
        result.degenerate = all_equal;
        return result;
    }
    result.value = h;
    return result;
}

double KdeGrid::step(std::size_t axis_index) const {
    const auto& [lo, hi] = ranges[axis_index];
    return (hi - lo) / static_cast<double>(resolution - 1);
}

double KdeGrid::coordinate(std::size_t axis_index, std::size_t point_index) const {
    return ranges[axis_index].first + static_cast<double>(point_index) * step(axis_index);
}

KdeGrid kde1d(std::span<const double> samples, double bandwidth,
              std::pair<double, double> range, std::size_t resolution, Axis axis) {
    check_grid_args(bandwidth, range, resolution, samples.size());

    KdeGrid grid;
    grid.axes = {axis};
    grid.ranges[0] = range;
    grid.resolution = resolution;
    grid.bandwidths[0] = bandwidth;
    grid.density.assign(resolution, 0.0);

    const double norm = 1.0 / (static_cast<double>(samples.size()) * bandwidth);
    for (std::size_t i = 0; i < resolution; ++i) {
        const double x = grid.coordinate(0, i);
        double sum = 0.0;
        for (double s : samples) {
            sum += gaussian((x - s) / bandwidth);
        }
        grid.density[i] = norm * sum;
    }
    return grid;
}

KdeGrid kde2d(std::span<const std::pair<double, double>> samples,
              std::pair<double, double> bandwidths,
              std::array<std::pair<double, double>, 2> ranges, std::size_t resolution,
              std::pair<Axis, Axis> axes) {
    check_grid_args(bandwidths.first, ranges[0], resolution, samples.size());
    check_grid_args(bandwidths.second, ranges[1], resolution, samples.size());

    KdeGrid grid;
    grid.axes = {axes.first, axes.second};
    grid.ranges = ranges;
    grid.resolution = resolution;
    grid.bandwidths = {bandwidths.first, bandwidths.second};
    grid.density.assign(resolution * resolution, 0.0);

    // Product kernel accumulated sample-by-sample as a rank-1 update;
    // avoids re-evaluating exp() per grid cell.
    std::vector<double> kx(resolution), ky(resolution);
    for (const auto& [sx, sy] : samples) {
        for (std::size_t i = 0; i < resolution; ++i) {
            kx[i] = gaussian((grid.coordinate(0, i) - sx) / bandwidths.first);
        }
        for (std::size_t j = 0; j < resolution; ++j) {
            ky[j] = gaussian((grid.coordinate(1, j) - sy) / bandwidths.second);
        }
        for (std::size_t i = 0; i < resolution; ++i) {
            const double row = kx[i];
            double* out = &grid.density[i * resolution];
            for (std::size_t j = 0; j < resolution; ++j) {
                out[j] += row * ky[j];
            }
        }
    }

    const double norm =
        1.0 / (static_cast<double>(samples.size()) * bandwidths.first * bandwidths.second);
    for (double& d : grid.density) {
        d *= norm;
    }
    return grid;
}

double grid_integral(const KdeGrid& grid) {
    if (grid.axis_count() == 1) {
        const double h = grid.step(0);
        double sum = 0.0;
        for (std::size_t i = 0; i + 1 < grid.resolution; ++i) {
            sum += 0.5 * (grid.density[i] + grid.density[i + 1]) * h;
        }
        return sum;
    }

    const double hx = grid.step(0);
    const double hy = grid.step(1);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < grid.resolution; ++i) {
        for (std::size_t j = 0; j + 1 < grid.resolution; ++j) {
            const double cell = grid.at(i, j) + grid.at(i + 1, j) + grid.at(i, j + 1) +
                                grid.at(i + 1, j + 1);
            sum += 0.25 * cell * hx * hy;
        }
    }
    return sum;
}

}  // namespace boostnet
