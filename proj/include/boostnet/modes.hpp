#pragma once

#include <vector>

#include "boostnet/kde.hpp"

namespace boostnet {

struct Mode {
    double location = 0.0;
    double density = 0.0;
    double prominence = 0.0;
};

/// Modes sorted by density descending (location ascending on ties).
struct ModeList {
    std::vector<Mode> modes;
};

/// Local maxima of a 1D density grid. Grid endpoints are eligible;
/// a plateau is represented by its leftmost point. Prominence is the
/// drop from the mode down to the higher of the two valley minima that
/// separate it from taller terrain (grid boundary when none). Modes with
/// prominence below min_prominence_fraction * max(density) are dropped.
ModeList find_modes(const KdeGrid& grid, double min_prominence_fraction);

enum class ThresholdConfidence { Bimodal, FallbackUnimodal };

std::string_view to_string(ThresholdConfidence confidence);
ThresholdConfidence confidence_from_string(std::string_view s);

struct ValleyResult {
    double threshold = 0.0;
    ThresholdConfidence confidence = ThresholdConfidence::FallbackUnimodal;
};

/// Threshold between the two dominant modes: the grid location of the
/// density minimum strictly between them. With fewer than two usable
/// modes the configured fallback is returned, flagged low-confidence.
ValleyResult valley_threshold(const KdeGrid& grid, const ModeList& modes,
                              double fallback = 0.5);

}  // namespace boostnet
