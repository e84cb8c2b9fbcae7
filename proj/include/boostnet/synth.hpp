#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <vector>

#include "boostnet/snapshot.hpp"

namespace boostnet {

/// Block-model generator configuration. Follow probabilities are applied
/// per ordered account pair; bots follow seeds (and each other) far more
/// readily than humans follow bots.
struct SyntheticConfig {
    std::size_t n_humans = 5000;
    std::size_t n_bots = 1000;
    std::size_t n_seeds = 10;

    double p_human_follows_human = 0.002;
    double p_bot_follows_bot = 0.1;
    double p_bot_follows_seed = 0.9;
    double p_cross = 0.01;

    // per axis: temporal, network, friend
    std::array<double, 3> human_score_mean = {0.2, 0.2, 0.2};
    std::array<double, 3> human_score_sd = {0.1, 0.1, 0.1};
    std::array<double, 3> bot_score_mean = {0.85, 0.85, 0.85};
    std::array<double, 3> bot_score_sd = {0.07, 0.07, 0.07};

    std::uint64_t rng_seed = 42;

    void validate() const;
};

/// Planted labels for every generated account; seeds are bots.
struct GroundTruth {
    std::map<AccountId, Label> truth;
    std::vector<AccountId> seed_ids;

    void save_csv(const std::filesystem::path& path) const;
    static GroundTruth load_csv(const std::filesystem::path& path);
};

struct SyntheticOutput {
    std::filesystem::path graph_fixture;
    std::filesystem::path score_fixture;
    std::filesystem::path truth_csv;
    std::filesystem::path seeds_file;
    GroundTruth truth;
};

/// Writes graph fixture, score fixture, ground-truth CSV, and seeds file
/// into out_dir. Byte-identical for equal configs. Scores are truncated
/// Normals (resample up to 100 times, then clamp).
SyntheticOutput generate_synthetic(const SyntheticConfig& config,
                                   const std::filesystem::path& out_dir);

struct EvaluationReport {
    std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
    std::optional<double> precision;
    std::optional<double> recall;
    std::optional<double> f1;
};

/// Confusion counts over the snapshot's labeled (non-unknown) accounts
/// against planted truth. A labeled account missing from truth is an
/// error naming the account.
EvaluationReport evaluate_detection(const NetworkSnapshot& labeled, const GroundTruth& truth);

/// round(internet_users * platform_fraction) to the nearest integer.
std::int64_t estimate_user_base(std::int64_t internet_users, double platform_fraction);

}  // namespace boostnet
