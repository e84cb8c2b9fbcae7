#include "boostnet/modes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boostnet/errors.hpp"

namespace boostnet {

namespace {

// Valley minimum between index m and the nearest strictly higher grid
// point in the given direction; minimum to the boundary when the grid
// never rises above density[m] on that side. -inf for an empty side, so
// an endpoint mode is based on its one real side only.
double side_valley(const std::vector<double>& d, std::size_t m, int direction) {
    const double peak = d[m];
    double lowest = std::numeric_limits<double>::infinity();
    bool any = false;
    std::ptrdiff_t k = static_cast<std::ptrdiff_t>(m) + direction;
    while (k >= 0 && k < static_cast<std::ptrdiff_t>(d.size())) {
        const double v = d[static_cast<std::size_t>(k)];
        if (v > peak) {
            break;
        }
        lowest = std::min(lowest, v);
        any = true;
        k += direction;
    }
    return any ? lowest : -std::numeric_limits<double>::infinity();
}

}  // namespace

std::string_view to_string(ThresholdConfidence confidence) {
    switch (confidence) {
        case ThresholdConfidence::Bimodal: return "bimodal";
        case ThresholdConfidence::FallbackUnimodal: return "fallback_unimodal";
    }
    return "fallback_unimodal";
}

ThresholdConfidence confidence_from_string(std::string_view s) {
    if (s == "bimodal") return ThresholdConfidence::Bimodal;
    if (s == "fallback_unimodal") return ThresholdConfidence::FallbackUnimodal;
    throw ParseError("unknown confidence '" + std::string(s) + "'");
}

ModeList find_modes(const KdeGrid& grid, double min_prominence_fraction) {
    if (grid.axis_count() != 1) {
        throw InvariantError("find_modes: expected a 1D grid");
    }
    if (!(min_prominence_fraction > 0.0) || !(min_prominence_fraction < 1.0)) {
        throw InvariantError("find_modes: prominence fraction must lie in (0,1)");
    }

    const std::vector<double>& d = grid.density;
    const std::size_t n = d.size();
    double global_max = 0.0;
    for (double v : d) {
        global_max = std::max(global_max, v);
    }

    ModeList result;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && d[j + 1] == d[i]) {
            ++j;
        }
        const bool rises_left = (i == 0) || d[i - 1] < d[i];
        const bool falls_right = (j == n - 1) || d[j + 1] < d[j];
        if (rises_left && falls_right) {
            const double base = std::max(side_valley(d, i, -1), side_valley(d, j, +1));
            const double prominence =
                std::isfinite(base) ? d[i] - base : d[i];
            if (prominence >= min_prominence_fraction * global_max && prominence > 0.0) {
                result.modes.push_back({grid.coordinate(0, i), d[i], prominence});
            }
        }
        i = j + 1;
    }

    std::sort(result.modes.begin(), result.modes.end(), [](const Mode& a, const Mode& b) {
        if (a.density != b.density) return a.density > b.density;
        return a.location < b.location;
    });
    return result;
}

ValleyResult valley_threshold(const KdeGrid& grid, const ModeList& modes, double fallback) {
    if (grid.axis_count() != 1) {
        throw InvariantError("valley_threshold: expected a 1D grid");
    }
    if (modes.modes.size() < 2) {
        return {fallback, ThresholdConfidence::FallbackUnimodal};
    }

    const double step = grid.step(0);
    auto index_of = [&](double location) {
        return static_cast<std::size_t>(
            std::llround((location - grid.ranges[0].first) / step));
    };
    std::size_t a = index_of(modes.modes[0].location);
    std::size_t b = index_of(modes.modes[1].location);
    if (a > b) {
        std::swap(a, b);
    }
    if (b - a < 2) {
        // adjacent grid points leave no room for a valley
        return {fallback, ThresholdConfidence::FallbackUnimodal};
    }

    std::size_t argmin = a + 1;
    for (std::size_t k = a + 1; k < b; ++k) {
        if (grid.density[k] < grid.density[argmin]) {
            argmin = k;
        }
    }
    return {grid.coordinate(0, argmin), ThresholdConfidence::Bimodal};
}

}  // namespace boostnet
