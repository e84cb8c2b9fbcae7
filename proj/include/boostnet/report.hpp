#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boostnet/snapshot.hpp"

namespace boostnet {

struct SummaryRow {
    std::string dataset_name;
    std::size_t total_accounts = 0;
    std::size_t bot_count = 0;
};

struct SummaryReport {
    std::vector<SummaryRow> rows;
    // (shared accounts, shared socialbots) when two datasets were compared
    std::optional<std::pair<std::size_t, std::size_t>> intersection;

    void validate() const;
};

struct DatasetRef {
    std::string name;
    const NetworkSnapshot* snapshot = nullptr;
};

/// Counts bots per dataset from labels; with two datasets the shared
/// account/bot counts are included. Accepts one or two datasets.
SummaryReport summary_report(const std::vector<DatasetRef>& datasets);

/// Fixed-width text table (columns Total and Bots), byte-stable.
std::string render_summary(const SummaryReport& report);

}  // namespace boostnet
