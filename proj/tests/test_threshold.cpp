#include "doctest.h"

#include "boostnet/threshold.hpp"

#include <cmath>

#include "boostnet/exporters.hpp"
#include "support.hpp"

using namespace boostnet;
using namespace testsupport;

namespace {

double truncated_normal(std::mt19937_64& rng, double mean, double sd) {
    for (;;) {
        const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = canonical(rng);
        const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
        const double x = mean + sd * z;
        if (x >= 0.0 && x <= 1.0) {
            return x;
        }
    }
}

// humans ~ N(0.2, 0.1)^3, bots ~ N(0.85, 0.07)^3, truncated to [0,1]
std::vector<ScoreTriple> planted_triples(std::size_t n_humans, std::size_t n_bots,
                                         std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ScoreTriple> triples;
    for (std::size_t i = 0; i < n_humans; ++i) {
        triples.emplace_back(truncated_normal(rng, 0.2, 0.1), truncated_normal(rng, 0.2, 0.1),
                             truncated_normal(rng, 0.2, 0.1));
    }
    for (std::size_t i = 0; i < n_bots; ++i) {
        triples.emplace_back(truncated_normal(rng, 0.85, 0.07),
                             truncated_normal(rng, 0.85, 0.07),
                             truncated_normal(rng, 0.85, 0.07));
    }
    return triples;
}

ThresholdModel uniform_model(double threshold) {
    ThresholdModel model;
    model.thresholds = {threshold, threshold, threshold};
    model.confidence = {ThresholdConfidence::Bimodal, ThresholdConfidence::Bimodal,
                        ThresholdConfidence::Bimodal};
    model.config_fingerprint = DetectionConfig{}.fingerprint();
    return model;
}

}  // namespace

TEST_CASE("planted clusters give bimodal thresholds inside the valley band") {
    const auto triples = planted_triples(5000, 1000, 42);
    const auto model = derive_threshold_model(triples);

    for (Axis axis : kAllAxes) {
        const auto i = static_cast<std::size_t>(axis);
        INFO("axis ", axis_name(axis));
        CHECK(model.confidence[i] == ThresholdConfidence::Bimodal);
        CHECK(model.thresholds[i] >= 0.40);
        CHECK(model.thresholds[i] <= 0.65);
        // threshold lies strictly between the two dominant modes
        REQUIRE(model.mode_locations[i].size() >= 2);
        const double lo = std::min(model.mode_locations[i][0], model.mode_locations[i][1]);
        const double hi = std::max(model.mode_locations[i][0], model.mode_locations[i][1]);
        CHECK(model.thresholds[i] > lo);
        CHECK(model.thresholds[i] < hi);
    }
}

TEST_CASE("identical scores fall back to 0.5 on every axis") {
    const std::vector<ScoreTriple> triples(20, ScoreTriple(0.4, 0.4, 0.4));
    const auto model = derive_threshold_model(triples);
    for (Axis axis : kAllAxes) {
        const auto i = static_cast<std::size_t>(axis);
        CHECK(model.confidence[i] == ThresholdConfidence::FallbackUnimodal);
        CHECK(model.thresholds[i] == doctest::Approx(0.5));
    }
}

TEST_CASE("axis-permuted input permutes the thresholds") {
    // distinct per-axis structure so permutation is observable
    std::mt19937_64 rng(77);
    std::vector<ScoreTriple> triples;
    for (int i = 0; i < 3000; ++i) {
        const bool high = i % 3 == 0;
        triples.emplace_back(truncated_normal(rng, high ? 0.8 : 0.15, 0.05),
                             truncated_normal(rng, high ? 0.9 : 0.25, 0.05),
                             truncated_normal(rng, high ? 0.7 : 0.1, 0.05));
    }
    std::vector<ScoreTriple> permuted;  // rotate axes: t<-n, n<-f, f<-t
    for (const auto& s : triples) {
        permuted.emplace_back(s.network, s.friend_, s.temporal);
    }

    const auto model = derive_threshold_model(triples);
    const auto rotated = derive_threshold_model(permuted);
    CHECK(rotated.thresholds[0] == doctest::Approx(model.thresholds[1]).epsilon(1e-12));
    CHECK(rotated.thresholds[1] == doctest::Approx(model.thresholds[2]).epsilon(1e-12));
    CHECK(rotated.thresholds[2] == doctest::Approx(model.thresholds[0]).epsilon(1e-12));
}

TEST_CASE("derive_threshold_model needs at least two samples") {
    CHECK_THROWS_AS(derive_threshold_model(std::vector<ScoreTriple>{ScoreTriple(1, 1, 1)}),
                    InsufficientDataError);
}

TEST_CASE("classification corners") {
    const auto model = uniform_model(0.5);
    std::vector<AccountRecord> records{
        scored_record(id_of(1), 1.0, 1.0, 1.0),
        scored_record(id_of(2), 0.0, 0.0, 0.0),
        record_of(id_of(3)),  // unscored stays unknown
    };
    const auto snapshot = build_network(records, {}, {id_of(1)}, 1);
    const auto labeled = classify_accounts(snapshot, model);

    CHECK(labeled.accounts.at(id_of(1)).label == Label::Socialbot);
    CHECK(labeled.accounts.at(id_of(2)).label == Label::Human);
    CHECK(labeled.accounts.at(id_of(3)).label == Label::Unknown);
    // input untouched
    CHECK(snapshot.accounts.at(id_of(1)).label == Label::Unknown);
}

TEST_CASE("scores exactly on the threshold classify as socialbot") {
    const auto model = uniform_model(0.5);
    const auto snapshot =
        build_network({scored_record(id_of(1), 0.5, 0.5, 0.5)}, {}, {id_of(1)}, 1);
    const auto labeled = classify_accounts(snapshot, model);
    CHECK(labeled.accounts.at(id_of(1)).label == Label::Socialbot);
}

TEST_CASE("two-of-three rule relaxes the conjunction") {
    const auto model = uniform_model(0.5);
    const auto snapshot =
        build_network({scored_record(id_of(1), 0.9, 0.9, 0.1)}, {}, {id_of(1)}, 1);

    CHECK(classify_accounts(snapshot, model, BotRule::AllAxes).accounts.at(id_of(1)).label ==
          Label::Human);
    CHECK(classify_accounts(snapshot, model, BotRule::TwoOfThree).accounts.at(id_of(1)).label ==
          Label::Socialbot);
}

TEST_CASE("planted triples classify to planted truth on at least 95% of accounts") {
    const std::size_t n_humans = 5000, n_bots = 1000;
    const auto triples = planted_triples(n_humans, n_bots, 42);
    const auto model = derive_threshold_model(triples);

    std::vector<AccountRecord> records;
    for (std::size_t i = 0; i < triples.size(); ++i) {
        records.push_back(record_of(id_of(static_cast<int>(i + 1))));
        records.back().scores = triples[i];
    }
    const auto snapshot = build_network(records, {}, {id_of(1)}, 1);
    const auto labeled = classify_accounts(snapshot, model);

    std::size_t correct = 0;
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const Label expected = i < n_humans ? Label::Human : Label::Socialbot;
        if (labeled.accounts.at(id_of(static_cast<int>(i + 1))).label == expected) {
            ++correct;
        }
    }
    CHECK(static_cast<double>(correct) / static_cast<double>(triples.size()) >= 0.95);
}

TEST_CASE("pairwise grids have the documented shape and orientation") {
    const auto triples = planted_triples(200, 50, 9);
    DetectionConfig config;
    config.resolution_2d = 64;  // keep the unit test fast
    const auto grids = pairwise_density_grids(triples, config);

    CHECK(grids[0].axes == std::vector<Axis>{Axis::Network, Axis::Friend});
    CHECK(grids[1].axes == std::vector<Axis>{Axis::Network, Axis::Temporal});
    CHECK(grids[2].axes == std::vector<Axis>{Axis::Temporal, Axis::Friend});
    for (const auto& grid : grids) {
        CHECK(grid.density.size() == 64 * 64);
        for (double d : grid.density) {
            CHECK(std::isfinite(d));
            CHECK(d >= 0.0);
        }
    }
}

TEST_CASE("swapping a pair's axes transposes the density matrix") {
    const auto triples = planted_triples(150, 40, 10);
    std::vector<double> xs, ys;
    for (const auto& s : triples) {
        xs.push_back(s.network);
        ys.push_back(s.friend_);
    }
    const double hx = bandwidth_scott(xs, 2).value;
    const double hy = bandwidth_scott(ys, 2).value;

    std::vector<std::pair<double, double>> xy, yx;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        xy.emplace_back(xs[i], ys[i]);
        yx.emplace_back(ys[i], xs[i]);
    }
    const auto forward = kde2d(xy, {hx, hy}, {{{0.0, 1.0}, {0.0, 1.0}}}, 48);
    const auto swapped = kde2d(yx, {hy, hx}, {{{0.0, 1.0}, {0.0, 1.0}}}, 48);

    for (std::size_t i = 0; i < 48; ++i) {
        for (std::size_t j = 0; j < 48; ++j) {
            CHECK(forward.at(i, j) == doctest::Approx(swapped.at(j, i)).epsilon(1e-12));
        }
    }
}

TEST_CASE("planted pairwise grids separate the two dominant 2D modes") {
    const auto triples = planted_triples(2000, 500, 42);
    DetectionConfig config;
    config.resolution_2d = 128;
    const auto grids = pairwise_density_grids(triples, config);
    for (const auto& grid : grids) {
        const auto modes = grid_modes_2d(grid);
        REQUIRE(modes.size() >= 2);
        const double step = grid.step(0);
        const double dx = (static_cast<double>(modes[0].first) -
                           static_cast<double>(modes[1].first)) * step;
        const double dy = (static_cast<double>(modes[0].second) -
                           static_cast<double>(modes[1].second)) * grid.step(1);
        CHECK(std::sqrt(dx * dx + dy * dy) >= 0.5);
    }
}

TEST_CASE("threshold model json round-trips with fixed field order") {
    const auto triples = planted_triples(500, 100, 13);
    const auto model = derive_threshold_model(triples);

    const std::string json = threshold_model_json(model);
    CHECK(json.find("\"thresholds\"") < json.find("\"modes\""));
    CHECK(json.find("\"modes\"") < json.find("\"confidence\""));
    CHECK(json.find("\"confidence\"") < json.find("\"config_fingerprint\""));
    CHECK(json.find("\"temporal\"") < json.find("\"network\""));

    TempDir dir("model");
    save_threshold_model(model, dir.file("model.json"));
    const auto loaded = load_threshold_model(dir.file("model.json"));
    CHECK(loaded.thresholds == model.thresholds);
    CHECK(loaded.confidence == model.confidence);
    CHECK(loaded.mode_locations == model.mode_locations);
    CHECK(loaded.config_fingerprint == model.config_fingerprint);
    // serialization is byte-stable
    CHECK(threshold_model_json(loaded) == json);
}
