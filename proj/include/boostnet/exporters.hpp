#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>

#include "boostnet/community.hpp"
#include "boostnet/kde.hpp"
#include "boostnet/snapshot.hpp"
#include "boostnet/threshold.hpp"

namespace boostnet {

/// One JSON object per account, sorted by id:
///   {"id","is_seed","scores":{"temporal","network","friend"}|null,"label","fetch_status"}
void export_accounts_jsonl(const NetworkSnapshot& snapshot, const std::filesystem::path& path);
std::map<AccountId, AccountRecord> import_accounts_jsonl(const std::filesystem::path& path);

/// Header `follower_id,followee_id`, rows sorted lexicographically.
void export_edges_csv(const NetworkSnapshot& snapshot, const std::filesystem::path& path);
std::set<DirectedEdge> import_edges_csv(const std::filesystem::path& path);
std::string edges_csv_string(const NetworkSnapshot& snapshot);

/// Directed GraphML with label/score/seed attributes, plus community
/// indices when an assignment is supplied.
void export_graphml(const NetworkSnapshot& snapshot, const std::filesystem::path& path,
                    const CommunityAssignment* communities = nullptr);

/// Per pair: density matrix CSV with metadata header lines, and a
/// self-contained SVG heatmap (threshold cross-hairs when a model is
/// given). Returns nothing; files land in out_dir as
/// density_<x>_<y>.{csv,svg}.
void emit_density_artifacts(const std::array<KdeGrid, 3>& grids,
                            const std::filesystem::path& out_dir,
                            const ThresholdModel* model = nullptr);

// --- pipeline state document ---

/// Versioned snapshot JSON used between CLI stages; provenance is an
/// arbitrary JSON object echoed into the document (pass "{}" for none).
void save_snapshot_json(const NetworkSnapshot& snapshot, const std::filesystem::path& path,
                        const std::string& provenance_json = "{}");
NetworkSnapshot load_snapshot_json(const std::filesystem::path& path);

void save_threshold_model(const ThresholdModel& model, const std::filesystem::path& path);
ThresholdModel load_threshold_model(const std::filesystem::path& path);
std::string threshold_model_json(const ThresholdModel& model);

}  // namespace boostnet
