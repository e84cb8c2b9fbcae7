#include "boostnet/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "boostnet/errors.hpp"

namespace boostnet {

namespace {

double canonical_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller on explicit 53-bit uniforms, so the byte stream does not
// depend on the standard library's distribution implementations.
double standard_normal(std::mt19937_64& rng) {
    const double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
    const double u2 = canonical_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

double truncated_normal(std::mt19937_64& rng, double mean, double sd) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        const double x = mean + sd * standard_normal(rng);
        if (x >= 0.0 && x <= 1.0) {
            return x;
        }
    }
    return std::clamp(mean + sd * standard_normal(rng), 0.0, 1.0);
}

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvariantError(std::string(name) + " must lie in [0,1]");
    }
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    return out;
}

}  // namespace

void SyntheticConfig::validate() const {
    if (n_humans == 0 || n_bots == 0) {
        throw InvariantError("need at least one human and one bot");
    }
    if (n_seeds == 0 || n_seeds > n_bots) {
        throw InvariantError("seed count must be in [1, n_bots]");
    }
    check_probability(p_human_follows_human, "p_human_follows_human");
    check_probability(p_bot_follows_bot, "p_bot_follows_bot");
    check_probability(p_bot_follows_seed, "p_bot_follows_seed");
    check_probability(p_cross, "p_cross");
    for (std::size_t a = 0; a < 3; ++a) {
        check_probability(human_score_mean[a], "human_score_mean");
        check_probability(bot_score_mean[a], "bot_score_mean");
        if (!(human_score_sd[a] > 0.0) || !(bot_score_sd[a] > 0.0)) {
            throw InvariantError("score standard deviations must be positive");
        }
    }
}

void GroundTruth::save_csv(const std::filesystem::path& path) const {
    auto out = open_out(path);
    out << "id,label\n";
    for (const auto& [id, label] : truth) {
        out << id.value << ',' << to_string(label) << '\n';
    }
}

GroundTruth GroundTruth::load_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open truth file " + path.string());
    }
    GroundTruth truth;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || (line_no == 1 && line == "id,label")) {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw ParseError("expected 'id,label'", line_no);
        }
        const Label label = label_from_string(line.substr(comma + 1));
        if (label == Label::Unknown) {
            throw ParseError("truth labels must be human or socialbot", line_no);
        }
        truth.truth.emplace(AccountId(line.substr(0, comma)), label);
    }
    return truth;
}

SyntheticOutput generate_synthetic(const SyntheticConfig& config,
                                   const std::filesystem::path& out_dir) {
    config.validate();
    std::filesystem::create_directories(out_dir);

    // humans 1xxxxxx, bots 2xxxxxx; seeds are the first n_seeds bots
    std::vector<AccountId> ids;
    std::vector<bool> is_bot;
    ids.reserve(config.n_humans + config.n_bots);
    for (std::size_t i = 0; i < config.n_humans; ++i) {
        ids.emplace_back(std::to_string(1000001 + i));
        is_bot.push_back(false);
    }
    for (std::size_t i = 0; i < config.n_bots; ++i) {
        ids.emplace_back(std::to_string(2000001 + i));
        is_bot.push_back(true);
    }
    const std::size_t n = ids.size();
    auto is_seed = [&](std::size_t v) {
        return v >= config.n_humans && v < config.n_humans + config.n_seeds;
    };

    std::mt19937_64 rng(config.rng_seed);

    // follower adjacency: edge u -> v means u follows v
    std::vector<std::vector<std::size_t>> followers_of(n);
    std::vector<std::vector<std::size_t>> followees_of(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) {
                continue;
            }
            double p;
            if (is_bot[u] && is_seed(v)) {
                p = config.p_bot_follows_seed;
            } else if (is_bot[u] && is_bot[v]) {
                p = config.p_bot_follows_bot;
            } else if (!is_bot[u] && !is_bot[v]) {
                p = config.p_human_follows_human;
            } else {
                p = config.p_cross;
            }
            if (canonical_unit(rng) < p) {
                followers_of[v].push_back(u);
                followees_of[u].push_back(v);
            }
        }
    }

    SyntheticOutput output;
    output.graph_fixture = out_dir / "network.fixture";
    output.score_fixture = out_dir / "scores.fixture";
    output.truth_csv = out_dir / "truth.csv";
    output.seeds_file = out_dir / "seeds.txt";

    {
        auto out = open_out(output.graph_fixture);
        out << "# synthetic follower network\n";
        for (std::size_t v = 0; v < n; ++v) {
            out << "followers " << ids[v].value;
            for (std::size_t u : followers_of[v]) {
                out << ' ' << ids[u].value;
            }
            out << '\n';
        }
        for (std::size_t u = 0; u < n; ++u) {
            out << "followees " << ids[u].value;
            for (std::size_t v : followees_of[u]) {
                out << ' ' << ids[v].value;
            }
            out << '\n';
        }
    }

    {
        auto out = open_out(output.score_fixture);
        out << "# synthetic automation scores\n";
        char buf[96];
        for (std::size_t v = 0; v < n; ++v) {
            const auto& mean = is_bot[v] ? config.bot_score_mean : config.human_score_mean;
            const auto& sd = is_bot[v] ? config.bot_score_sd : config.human_score_sd;
            const double t = truncated_normal(rng, mean[0], sd[0]);
            const double ns = truncated_normal(rng, mean[1], sd[1]);
            const double f = truncated_normal(rng, mean[2], sd[2]);
            std::snprintf(buf, sizeof buf, "%s %.6f %.6f %.6f\n", ids[v].value.c_str(), t, ns, f);
            out << buf;
        }
    }

    for (std::size_t v = 0; v < n; ++v) {
        output.truth.truth.emplace(ids[v], is_bot[v] ? Label::Socialbot : Label::Human);
        if (is_seed(v)) {
            output.truth.seed_ids.push_back(ids[v]);
        }
    }
    output.truth.save_csv(output.truth_csv);

    {
        auto out = open_out(output.seeds_file);
        for (const AccountId& seed : output.truth.seed_ids) {
            out << seed.value << '\n';
        }
    }
    return output;
}

EvaluationReport evaluate_detection(const NetworkSnapshot& labeled, const GroundTruth& truth) {
    EvaluationReport report;
    for (const auto& [id, record] : labeled.accounts) {
        if (record.label == Label::Unknown) {
            continue;
        }
        auto it = truth.truth.find(id);
        if (it == truth.truth.end()) {
            throw InvariantError("labeled account " + id.value + " missing from ground truth");
        }
        const bool predicted_bot = record.label == Label::Socialbot;
        const bool actual_bot = it->second == Label::Socialbot;
        if (predicted_bot && actual_bot) ++report.tp;
        else if (predicted_bot && !actual_bot) ++report.fp;
        else if (!predicted_bot && actual_bot) ++report.fn;
        else ++report.tn;
    }

    if (report.tp + report.fp > 0) {
        report.precision = static_cast<double>(report.tp) / static_cast<double>(report.tp + report.fp);
    }
    if (report.tp + report.fn > 0) {
        report.recall = static_cast<double>(report.tp) / static_cast<double>(report.tp + report.fn);
    }
    if (report.precision && report.recall && (*report.precision + *report.recall) > 0.0) {
        report.f1 = 2.0 * *report.precision * *report.recall /
                    (*report.precision + *report.recall);
    }
    return report;
}

std::int64_t estimate_user_base(std::int64_t internet_users, double platform_fraction) {
    if (internet_users <= 0) {
        throw InvariantError("internet user count must be positive");
    }
    if (!(platform_fraction > 0.0) || platform_fraction > 1.0) {
        throw InvariantError("platform fraction must lie in (0,1]");
    }
    return std::llround(static_cast<double>(internet_users) * platform_fraction);
}

}  // namespace boostnet
