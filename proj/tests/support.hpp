#pragma once

// Shared helpers for the test suites.

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "boostnet/account.hpp"
#include "boostnet/kde.hpp"
#include "boostnet/snapshot.hpp"

namespace testsupport {

using namespace boostnet;

inline double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("boostnet_test_" + tag + "_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << text;
}

inline AccountId id_of(int n) {
    return AccountId(std::to_string(n));
}

inline AccountRecord record_of(const AccountId& id) {
    AccountRecord record;
    record.id = id;
    return record;
}

inline AccountRecord scored_record(const AccountId& id, double t, double n, double f,
                                   Label label = Label::Unknown) {
    AccountRecord record;
    record.id = id;
    record.scores = ScoreTriple(t, n, f);
    record.label = label;
    return record;
}

// Random digraph over ids "1".."n" with edge probability p; never self-loops.
struct RandomGraph {
    std::vector<AccountRecord> accounts;
    std::vector<DirectedEdge> edges;
};

inline RandomGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    RandomGraph g;
    for (std::size_t i = 1; i <= n; ++i) {
        g.accounts.push_back(record_of(id_of(static_cast<int>(i))));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (i != j && canonical(rng) < p) {
                g.edges.emplace_back(id_of(static_cast<int>(i)), id_of(static_cast<int>(j)));
            }
        }
    }
    return g;
}

inline NetworkSnapshot random_snapshot(std::size_t n, double p, std::mt19937_64& rng,
                                       bool with_scores = false) {
    RandomGraph g = random_graph(n, p, rng);
    if (with_scores) {
        for (AccountRecord& record : g.accounts) {
            record.scores = ScoreTriple(canonical(rng), canonical(rng), canonical(rng));
            record.label = canonical(rng) < 0.3 ? Label::Socialbot : Label::Human;
        }
    }
    return build_network(g.accounts, g.edges, {g.accounts.front().id}, 1);
}

// --- fixture-text adjacency helpers (independent of FixtureGraphProvider) ---

struct Adjacency {
    std::map<std::string, std::vector<std::string>> followers;  // id -> accounts following it
    std::map<std::string, std::vector<std::string>> followees;  // id -> accounts it follows
    std::set<std::string> ids;
};

inline Adjacency random_adjacency(std::size_t n, double p, std::mt19937_64& rng) {
    Adjacency adj;
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("u" + std::to_string(i));
        adj.ids.insert(names.back());
    }
    for (const auto& u : names) {
        for (const auto& v : names) {
            if (u != v && canonical(rng) < p) {
                adj.followers[v].push_back(u);  // u follows v
                adj.followees[u].push_back(v);
            }
        }
    }
    return adj;
}

inline std::string adjacency_to_fixture(const Adjacency& adj) {
    std::string text = "# generated fixture\n";
    for (const auto& id : adj.ids) {
        text += "followers " + id;
        if (auto it = adj.followers.find(id); it != adj.followers.end()) {
            for (const auto& u : it->second) {
                text += " " + u;
            }
        }
        text += "\n";
        text += "followees " + id;
        if (auto it = adj.followees.find(id); it != adj.followees.end()) {
            for (const auto& v : it->second) {
                text += " " + v;
            }
        }
        text += "\n";
    }
    return text;
}

// Brute-force expansion oracle over the raw adjacency: the node set the
// crawl must produce for the given policy.
inline std::set<std::string> expansion_node_oracle(const Adjacency& adj,
                                                   const std::vector<std::string>& seeds,
                                                   int depth, bool followees_of_seeds) {
    auto followers_of = [&](const std::string& id) {
        auto it = adj.followers.find(id);
        return it == adj.followers.end() ? std::vector<std::string>{} : it->second;
    };
    std::set<std::string> nodes(seeds.begin(), seeds.end());
    std::set<std::string> hop1;
    for (const auto& seed : seeds) {
        for (const auto& f : followers_of(seed)) {
            nodes.insert(f);
            hop1.insert(f);
        }
        if (followees_of_seeds) {
            auto it = adj.followees.find(seed);
            if (it != adj.followees.end()) {
                nodes.insert(it->second.begin(), it->second.end());
            }
        }
    }
    if (depth >= 2) {
        for (const auto& f : hop1) {
            for (const auto& g : followers_of(f)) {
                nodes.insert(g);
            }
        }
    }
    return nodes;
}

// Brute-force edge oracle: f->seed for fetched followers, seed->g for
// fetched followees, f2->f for depth-2 follower fetches.
inline std::set<std::pair<std::string, std::string>> expansion_edge_oracle(
    const Adjacency& adj, const std::vector<std::string>& seeds, int depth,
    bool followees_of_seeds) {
    std::set<std::pair<std::string, std::string>> edges;
    std::set<std::string> hop1;
    for (const auto& seed : seeds) {
        if (auto it = adj.followers.find(seed); it != adj.followers.end()) {
            for (const auto& f : it->second) {
                edges.emplace(f, seed);
                hop1.insert(f);
            }
        }
        if (followees_of_seeds) {
            if (auto it = adj.followees.find(seed); it != adj.followees.end()) {
                for (const auto& g : it->second) {
                    edges.emplace(seed, g);
                }
            }
        }
    }
    if (depth >= 2) {
        for (const auto& f : hop1) {
            if (auto it = adj.followers.find(f); it != adj.followers.end()) {
                for (const auto& g : it->second) {
                    edges.emplace(g, f);
                }
            }
        }
    }
    return edges;
}

// 2D grid modes: cells strictly greater than all 8 neighbours.
inline std::vector<std::pair<std::size_t, std::size_t>> grid_modes_2d(const KdeGrid& grid) {
    std::vector<std::pair<std::size_t, std::size_t>> modes;
    const std::size_t n = grid.resolution;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double center = grid.at(i, j);
            bool is_mode = center > 0.0;
            for (int di = -1; di <= 1 && is_mode; ++di) {
                for (int dj = -1; dj <= 1 && is_mode; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    const auto ni = static_cast<std::ptrdiff_t>(i) + di;
                    const auto nj = static_cast<std::ptrdiff_t>(j) + dj;
                    if (ni < 0 || nj < 0 || ni >= static_cast<std::ptrdiff_t>(n) ||
                        nj >= static_cast<std::ptrdiff_t>(n)) {
                        continue;
                    }
                    if (grid.at(static_cast<std::size_t>(ni), static_cast<std::size_t>(nj)) >=
                        center) {
                        is_mode = false;
                    }
                }
            }
            if (is_mode) {
                modes.emplace_back(i, j);
            }
        }
    }
    // strongest first
    std::sort(modes.begin(), modes.end(),
              [&](const auto& a, const auto& b) {
                  return grid.at(a.first, a.second) > grid.at(b.first, b.second);
              });
    return modes;
}

// Minimal GraphML reader: node ids and source/target pairs.
struct GraphMlDoc {
    std::set<std::string> nodes;
    std::set<std::pair<std::string, std::string>> edges;
};

inline std::string extract_attr(const std::string& tag, const std::string& name) {
    const std::string needle = name + "=\"";
    const auto pos = tag.find(needle);
    REQUIRE(pos != std::string::npos);
    const auto end = tag.find('"', pos + needle.size());
    REQUIRE(end != std::string::npos);
    return tag.substr(pos + needle.size(), end - pos - needle.size());
}

inline GraphMlDoc parse_graphml(const std::string& text) {
    GraphMlDoc doc;
    std::size_t pos = 0;
    while ((pos = text.find('<', pos)) != std::string::npos) {
        const auto end = text.find('>', pos);
        REQUIRE(end != std::string::npos);
        const std::string tag = text.substr(pos + 1, end - pos - 1);
        if (tag.starts_with("node ")) {
            doc.nodes.insert(extract_attr(tag, "id"));
        } else if (tag.starts_with("edge ")) {
            doc.edges.emplace(extract_attr(tag, "source"), extract_attr(tag, "target"));
        }
        pos = end + 1;
    }
    return doc;
}

}  // namespace testsupport
