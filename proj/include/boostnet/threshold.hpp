#pragma once

#include <array>
#include <span>
#include <string>

#include "boostnet/kde.hpp"
#include "boostnet/modes.hpp"
#include "boostnet/snapshot.hpp"

namespace boostnet {

/// Detection knobs; the fingerprint ties a ThresholdModel back to the
/// exact parameters that produced it.
struct DetectionConfig {
    std::size_t resolution_1d = 512;
    std::size_t resolution_2d = 256;
    double prominence_fraction = 0.05;
    double fallback_threshold = 0.5;

    std::string fingerprint() const;
};

/// Per-axis inferred thresholds with mode locations and confidence.
/// Arrays are indexed by Axis order: temporal, network, friend.
struct ThresholdModel {
    std::array<double, 3> thresholds{};
    std::array<std::vector<double>, 3> mode_locations{};
    std::array<ThresholdConfidence, 3> confidence{};
    std::string config_fingerprint;

    double threshold_for(Axis axis) const {
        return thresholds[static_cast<std::size_t>(axis)];
    }
};

/// Per axis: Scott bandwidth (d=1), kde1d on [0,1], mode finding, valley
/// threshold. Requires at least two scored accounts.
ThresholdModel derive_threshold_model(std::span<const ScoreTriple> scored,
                                      const DetectionConfig& config = {});

enum class BotRule { AllAxes, TwoOfThree };

std::string_view to_string(BotRule rule);
BotRule bot_rule_from_string(std::string_view s);

/// Labels every scored account: socialbot when the rule's required number
/// of axes sit at or above their thresholds (ties count as detection),
/// human otherwise. Unscored accounts stay unknown. Pure; returns a new
/// snapshot.
NetworkSnapshot classify_accounts(const NetworkSnapshot& snapshot, const ThresholdModel& model,
                                  BotRule rule = BotRule::AllAxes);

/// 2D density surfaces for the three axis pairs, per-axis Scott
/// bandwidths (d=2), range [0,1] squared.
std::array<KdeGrid, 3> pairwise_density_grids(std::span<const ScoreTriple> scored,
                                              const DetectionConfig& config = {});

/// Convenience: the score triples of all scored accounts, id order.
std::vector<ScoreTriple> scored_triples(const NetworkSnapshot& snapshot);

}  // namespace boostnet
