#include "boostnet/exporters.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "boostnet/time_io.hpp"
#include "json.hpp"

namespace boostnet {

using ordered_json = nlohmann::ordered_json;

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    return out;
}

std::string read_all(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ordered_json record_to_json(const AccountRecord& record) {
    ordered_json j;
    j["id"] = record.id.value;
    j["is_seed"] = record.is_seed;
    if (record.scores.has_value()) {
        ordered_json s;
        s["temporal"] = record.scores->temporal;
        s["network"] = record.scores->network;
        s["friend"] = record.scores->friend_;
        j["scores"] = std::move(s);
    } else {
        j["scores"] = nullptr;
    }
    j["label"] = to_string(record.label);
    j["fetch_status"] = to_string(record.fetch_status);
    return j;
}

AccountRecord record_from_json(const ordered_json& j) {
    AccountRecord record;
    record.id = AccountId(j.at("id").get<std::string>());
    record.is_seed = j.at("is_seed").get<bool>();
    if (!j.at("scores").is_null()) {
        const auto& s = j.at("scores");
        record.scores = ScoreTriple(s.at("temporal").get<double>(),
                                    s.at("network").get<double>(),
                                    s.at("friend").get<double>());
    }
    record.label = label_from_string(j.at("label").get<std::string>());
    record.fetch_status = fetch_status_from_string(j.at("fetch_status").get<std::string>());
    validate(record);
    return record;
}

std::string xml_escape(const std::string& text) {
    std::string escaped;
    escaped.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': escaped += "&amp;"; break;
            case '<': escaped += "&lt;"; break;
            case '>': escaped += "&gt;"; break;
            case '"': escaped += "&quot;"; break;
            case '\'': escaped += "&apos;"; break;
            default: escaped += c;
        }
    }
    return escaped;
}

}  // namespace

void export_accounts_jsonl(const NetworkSnapshot& snapshot, const std::filesystem::path& path) {
    auto out = open_out(path);
    // std::map iteration is already id-sorted
    for (const auto& [id, record] : snapshot.accounts) {
        out << record_to_json(record).dump() << '\n';
    }
}

std::map<AccountId, AccountRecord> import_accounts_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::map<AccountId, AccountRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        try {
            AccountRecord record = record_from_json(ordered_json::parse(line));
            records.insert_or_assign(record.id, std::move(record));
        } catch (const Error&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(std::string("malformed account record: ") + e.what(), line_no);
        }
    }
    return records;
}

std::string edges_csv_string(const NetworkSnapshot& snapshot) {
    std::string csv = "follower_id,followee_id\n";
    // std::set ordering is the sorted (follower, followee) order
    for (const DirectedEdge& edge : snapshot.edges) {
        csv += edge.follower.value;
        csv += ',';
        csv += edge.followee.value;
        csv += '\n';
    }
    return csv;
}

void export_edges_csv(const NetworkSnapshot& snapshot, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << edges_csv_string(snapshot);
}

std::set<DirectedEdge> import_edges_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::set<DirectedEdge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        if (line_no == 1) {
            if (line != "follower_id,followee_id") {
                throw ParseError("expected header 'follower_id,followee_id'", line_no);
            }
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw ParseError("expected 'follower,followee'", line_no);
        }
        edges.insert(
            DirectedEdge(AccountId(line.substr(0, comma)), AccountId(line.substr(comma + 1))));
    }
    return edges;
}

void export_graphml(const NetworkSnapshot& snapshot, const std::filesystem::path& path,
                    const CommunityAssignment* communities) {
    auto out = open_out(path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"d_label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n"
        << "  <key id=\"d_seed\" for=\"node\" attr.name=\"is_seed\" attr.type=\"boolean\"/>\n"
        << "  <key id=\"d_temporal\" for=\"node\" attr.name=\"temporal\" attr.type=\"double\"/>\n"
        << "  <key id=\"d_network\" for=\"node\" attr.name=\"network\" attr.type=\"double\"/>\n"
        << "  <key id=\"d_friend\" for=\"node\" attr.name=\"friend\" attr.type=\"double\"/>\n"
        << "  <key id=\"d_community\" for=\"node\" attr.name=\"community\" attr.type=\"long\"/>\n"
        << "  <graph id=\"N\" edgedefault=\"directed\">\n";

    char buf[64];
    for (const auto& [id, record] : snapshot.accounts) {
        out << "    <node id=\"" << xml_escape(id.value) << "\">\n";
        out << "      <data key=\"d_label\">" << to_string(record.label) << "</data>\n";
        out << "      <data key=\"d_seed\">" << (record.is_seed ? "true" : "false")
            << "</data>\n";
        if (record.scores.has_value()) {
            std::snprintf(buf, sizeof buf, "%.6f", record.scores->temporal);
            out << "      <data key=\"d_temporal\">" << buf << "</data>\n";
            std::snprintf(buf, sizeof buf, "%.6f", record.scores->network);
            out << "      <data key=\"d_network\">" << buf << "</data>\n";
            std::snprintf(buf, sizeof buf, "%.6f", record.scores->friend_);
            out << "      <data key=\"d_friend\">" << buf << "</data>\n";
        }
        if (communities != nullptr) {
            auto it = communities->community_of.find(id);
            if (it != communities->community_of.end()) {
                out << "      <data key=\"d_community\">" << it->second << "</data>\n";
            }
        }
        out << "    </node>\n";
    }

    std::size_t edge_index = 0;
    for (const DirectedEdge& edge : snapshot.edges) {
        out << "    <edge id=\"e" << edge_index++ << "\" source=\""
            << xml_escape(edge.follower.value) << "\" target=\"" << xml_escape(edge.followee.value)
            << "\"/>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

namespace {

std::string density_file_stem(const KdeGrid& grid) {
    return "density_" + std::string(axis_name(grid.axes[0])) + "_" +
           std::string(axis_name(grid.axes[1]));
}

void write_density_csv(const KdeGrid& grid, const std::filesystem::path& path) {
    auto out = open_out(path);
    char buf[64];
    out << "# axis_x: " << axis_name(grid.axes[0]) << '\n';
    out << "# axis_y: " << axis_name(grid.axes[1]) << '\n';
    std::snprintf(buf, sizeof buf, "# range_x: %.6f %.6f\n", grid.ranges[0].first,
                  grid.ranges[0].second);
    out << buf;
    std::snprintf(buf, sizeof buf, "# range_y: %.6f %.6f\n", grid.ranges[1].first,
                  grid.ranges[1].second);
    out << buf;
    out << "# resolution: " << grid.resolution << '\n';
    std::snprintf(buf, sizeof buf, "# bandwidth_x: %.9g\n", grid.bandwidths[0]);
    out << buf;
    std::snprintf(buf, sizeof buf, "# bandwidth_y: %.9g\n", grid.bandwidths[1]);
    out << buf;
    for (std::size_t i = 0; i < grid.resolution; ++i) {
        for (std::size_t j = 0; j < grid.resolution; ++j) {
            std::snprintf(buf, sizeof buf, "%.9g", grid.at(i, j));
            out << (j == 0 ? "" : ",") << buf;
        }
        out << '\n';
    }
}

void write_density_svg(const KdeGrid& grid, const std::filesystem::path& path,
                       const ThresholdModel* model) {
    constexpr int kMargin = 48;
    constexpr int kPlot = 512;
    const int size = kPlot + 2 * kMargin;
    const double cell = static_cast<double>(kPlot) / static_cast<double>(grid.resolution);

    double max_density = 0.0;
    for (double d : grid.density) {
        max_density = std::max(max_density, d);
    }

    auto out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
    out << "  <title>" << axis_name(grid.axes[0]) << " vs " << axis_name(grid.axes[1])
        << " score density</title>\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size
        << "\" fill=\"white\"/>\n";
    out << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kPlot
        << "\" height=\"" << kPlot << "\" fill=\"none\" stroke=\"black\"/>\n";

    char buf[160];
    // x axis along the grid's first axis, y grows upward
    for (std::size_t i = 0; i < grid.resolution; ++i) {
        for (std::size_t j = 0; j < grid.resolution; ++j) {
            const double d = grid.at(i, j);
            if (!(d > 0.0) || max_density <= 0.0) {
                continue;
            }
            const int shade = static_cast<int>(std::lround(255.0 - (d / max_density) * 225.0));
            if (shade >= 255) {
                continue;  // indistinguishable from the white background
            }
            const double x = kMargin + static_cast<double>(i) * cell;
            const double y = kMargin + kPlot - static_cast<double>(j + 1) * cell;
            std::snprintf(buf, sizeof buf,
                          "  <rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" "
                          "fill=\"rgb(%d,%d,%d)\"/>\n",
                          x, y, cell, cell, shade, shade, 255);
            out << buf;
        }
    }

    if (model != nullptr) {
        auto pixel = [&](std::size_t axis_index, double value) {
            const auto& [lo, hi] = grid.ranges[axis_index];
            return (value - lo) / (hi - lo) * kPlot;
        };
        const double tx = kMargin + pixel(0, model->threshold_for(grid.axes[0]));
        const double ty = kMargin + kPlot - pixel(1, model->threshold_for(grid.axes[1]));
        std::snprintf(buf, sizeof buf,
                      "  <line x1=\"%.2f\" y1=\"%d\" x2=\"%.2f\" y2=\"%d\" stroke=\"red\" "
                      "stroke-dasharray=\"4 3\"/>\n",
                      tx, kMargin, tx, kMargin + kPlot);
        out << buf;
        std::snprintf(buf, sizeof buf,
                      "  <line x1=\"%d\" y1=\"%.2f\" x2=\"%d\" y2=\"%.2f\" stroke=\"red\" "
                      "stroke-dasharray=\"4 3\"/>\n",
                      kMargin, ty, kMargin + kPlot, ty);
        out << buf;
    }

    out << "  <text x=\"" << (kMargin + kPlot / 2) << "\" y=\"" << (size - 12)
        << "\" text-anchor=\"middle\" font-size=\"16\">" << axis_name(grid.axes[0])
        << "</text>\n";
    out << "  <text x=\"16\" y=\"" << (kMargin + kPlot / 2)
        << "\" text-anchor=\"middle\" font-size=\"16\" transform=\"rotate(-90 16 "
        << (kMargin + kPlot / 2) << ")\">" << axis_name(grid.axes[1]) << "</text>\n";
    out << "</svg>\n";
}

}  // namespace

void emit_density_artifacts(const std::array<KdeGrid, 3>& grids,
                            const std::filesystem::path& out_dir, const ThresholdModel* model) {
    std::filesystem::create_directories(out_dir);
    for (const KdeGrid& grid : grids) {
        if (grid.axis_count() != 2) {
            throw InvariantError("density artifacts need 2D grids");
        }
        const std::string stem = density_file_stem(grid);
        write_density_csv(grid, out_dir / (stem + ".csv"));
        write_density_svg(grid, out_dir / (stem + ".svg"), model);
    }
}

void save_snapshot_json(const NetworkSnapshot& snapshot, const std::filesystem::path& path,
                        const std::string& provenance_json) {
    ordered_json j;
    j["version"] = 1;
    j["created_at"] = format_utc(snapshot.created_at);
    j["expansion_depth"] = snapshot.expansion_depth;
    j["seeds"] = ordered_json::array();
    for (const AccountId& seed : snapshot.seeds) {
        j["seeds"].push_back(seed.value);
    }
    j["accounts"] = ordered_json::array();
    for (const auto& [id, record] : snapshot.accounts) {
        j["accounts"].push_back(record_to_json(record));
    }
    j["edges"] = ordered_json::array();
    for (const DirectedEdge& edge : snapshot.edges) {
        j["edges"].push_back({edge.follower.value, edge.followee.value});
    }
    try {
        j["provenance"] = ordered_json::parse(provenance_json);
    } catch (const std::exception&) {
        throw InvariantError("provenance must be a JSON document");
    }

    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

NetworkSnapshot load_snapshot_json(const std::filesystem::path& path) {
    ordered_json j;
    try {
        j = ordered_json::parse(read_all(path));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError("snapshot " + path.string() + " is not valid JSON: " + e.what());
    }

    try {
        if (j.at("version").get<int>() != 1) {
            throw ParseError("unsupported snapshot version");
        }
        std::vector<AccountRecord> records;
        for (const auto& a : j.at("accounts")) {
            records.push_back(record_from_json(a));
        }
        std::vector<DirectedEdge> edges;
        for (const auto& e : j.at("edges")) {
            edges.emplace_back(AccountId(e.at(0).get<std::string>()),
                               AccountId(e.at(1).get<std::string>()));
        }
        std::vector<AccountId> seeds;
        for (const auto& s : j.at("seeds")) {
            seeds.emplace_back(s.get<std::string>());
        }
        return build_network(records, edges, seeds, j.at("expansion_depth").get<int>(),
                             parse_utc(j.at("created_at").get<std::string>()));
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError("malformed snapshot document: " + std::string(e.what()));
    }
}

std::string threshold_model_json(const ThresholdModel& model) {
    ordered_json j;
    ordered_json thresholds, modes, confidence;
    for (Axis axis : kAllAxes) {
        const auto i = static_cast<std::size_t>(axis);
        const std::string name{axis_name(axis)};
        thresholds[name] = model.thresholds[i];
        modes[name] = model.mode_locations[i];
        confidence[name] = to_string(model.confidence[i]);
    }
    j["thresholds"] = std::move(thresholds);
    j["modes"] = std::move(modes);
    j["confidence"] = std::move(confidence);
    j["config_fingerprint"] = model.config_fingerprint;
    return j.dump(2) + "\n";
}

void save_threshold_model(const ThresholdModel& model, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << threshold_model_json(model);
}

ThresholdModel load_threshold_model(const std::filesystem::path& path) {
    ThresholdModel model;
    try {
        const auto j = ordered_json::parse(read_all(path));
        for (Axis axis : kAllAxes) {
            const auto i = static_cast<std::size_t>(axis);
            const std::string name{axis_name(axis)};
            model.thresholds[i] = j.at("thresholds").at(name).get<double>();
            model.mode_locations[i] = j.at("modes").at(name).get<std::vector<double>>();
            model.confidence[i] =
                confidence_from_string(j.at("confidence").at(name).get<std::string>());
        }
        model.config_fingerprint = j.at("config_fingerprint").get<std::string>();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError("malformed threshold model: " + std::string(e.what()));
    }
    return model;
}

}  // namespace boostnet
