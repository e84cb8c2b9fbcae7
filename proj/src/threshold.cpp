#include "boostnet/threshold.hpp"

#include <cinttypes>
#include <cstdio>

#include "boostnet/errors.hpp"

namespace boostnet {

namespace {

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<double> axis_samples(std::span<const ScoreTriple> scored, Axis axis) {
    std::vector<double> samples;
    samples.reserve(scored.size());
    for (const ScoreTriple& s : scored) {
        samples.push_back(score_component(s, axis));
    }
    return samples;
}

}  // namespace

std::string DetectionConfig::fingerprint() const {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "kernel=gaussian;bw=scott;bw_floor=%.6g;res1d=%zu;res2d=%zu;prom=%.6g;fallback=%.6g",
                  kBandwidthFloor, resolution_1d, resolution_2d, prominence_fraction,
                  fallback_threshold);
    char out[32];
    std::snprintf(out, sizeof out, "%016" PRIx64, fnv1a(buf));
    return out;
}

ThresholdModel derive_threshold_model(std::span<const ScoreTriple> scored,
                                      const DetectionConfig& config) {
    if (scored.size() < 2) {
        throw InsufficientDataError("derive_threshold_model: need at least two scored accounts");
    }

    ThresholdModel model;
    model.config_fingerprint = config.fingerprint();
    for (Axis axis : kAllAxes) {
        const auto samples = axis_samples(scored, axis);
        const BandwidthResult bw = bandwidth_scott(samples, 1);
        const KdeGrid grid = kde1d(samples, bw.value, {0.0, 1.0}, config.resolution_1d, axis);
        const ModeList modes = find_modes(grid, config.prominence_fraction);
        const ValleyResult valley = valley_threshold(grid, modes, config.fallback_threshold);

        const auto i = static_cast<std::size_t>(axis);
        model.thresholds[i] = valley.threshold;
        model.confidence[i] = valley.confidence;
        for (const Mode& m : modes.modes) {
            model.mode_locations[i].push_back(m.location);
        }
    }
    return model;
}

std::string_view to_string(BotRule rule) {
    return rule == BotRule::AllAxes ? "all" : "two-of-three";
}

BotRule bot_rule_from_string(std::string_view s) {
    if (s == "all") return BotRule::AllAxes;
    if (s == "two-of-three") return BotRule::TwoOfThree;
    throw ParseError("unknown rule '" + std::string(s) + "'");
}

NetworkSnapshot classify_accounts(const NetworkSnapshot& snapshot, const ThresholdModel& model,
                                  BotRule rule) {
    NetworkSnapshot labeled = snapshot;
    const int required = rule == BotRule::AllAxes ? 3 : 2;
    for (auto& [id, record] : labeled.accounts) {
        if (!record.scores.has_value()) {
            record.label = Label::Unknown;
            continue;
        }
        int above = 0;
        for (Axis axis : kAllAxes) {
            if (score_component(*record.scores, axis) >= model.threshold_for(axis)) {
                ++above;
            }
        }
        record.label = above >= required ? Label::Socialbot : Label::Human;
    }
    return labeled;
}

std::array<KdeGrid, 3> pairwise_density_grids(std::span<const ScoreTriple> scored,
                                              const DetectionConfig& config) {
    if (scored.size() < 2) {
        throw InsufficientDataError("pairwise_density_grids: need at least two scored accounts");
    }

    std::array<KdeGrid, 3> grids;
    for (std::size_t p = 0; p < kAxisPairs.size(); ++p) {
        const auto [ax, ay] = kAxisPairs[p];
        const auto xs = axis_samples(scored, ax);
        const auto ys = axis_samples(scored, ay);
        const double hx = bandwidth_scott(xs, 2).value;
        const double hy = bandwidth_scott(ys, 2).value;

        std::vector<std::pair<double, double>> points;
        points.reserve(scored.size());
        for (std::size_t i = 0; i < scored.size(); ++i) {
            points.emplace_back(xs[i], ys[i]);
        }
        grids[p] = kde2d(points, {hx, hy}, {{{0.0, 1.0}, {0.0, 1.0}}}, config.resolution_2d,
                         {ax, ay});
    }
    return grids;
}

std::vector<ScoreTriple> scored_triples(const NetworkSnapshot& snapshot) {
    std::vector<ScoreTriple> triples;
    for (const auto& [id, record] : snapshot.accounts) {
        if (record.scores.has_value()) {
            triples.push_back(*record.scores);
        }
    }
    return triples;
}

}  // namespace boostnet
