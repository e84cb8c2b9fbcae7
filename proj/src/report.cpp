#include "boostnet/report.hpp"

#include <algorithm>
#include <cstdio>

#include "boostnet/errors.hpp"

namespace boostnet {

void SummaryReport::validate() const {
    for (const SummaryRow& row : rows) {
        if (row.bot_count > row.total_accounts) {
            throw InvariantError("bot count exceeds account total for dataset '" +
                                 row.dataset_name + "'");
        }
    }
    if (intersection.has_value() && intersection->second > intersection->first) {
        throw InvariantError("shared bot count exceeds shared account count");
    }
}

SummaryReport summary_report(const std::vector<DatasetRef>& datasets) {
    if (datasets.empty() || datasets.size() > 2) {
        throw InvariantError("summary_report expects one or two datasets");
    }

    SummaryReport report;
    for (const DatasetRef& dataset : datasets) {
        SummaryRow row;
        row.dataset_name = dataset.name;
        row.total_accounts = dataset.snapshot->accounts.size();
        row.bot_count = static_cast<std::size_t>(
            std::count_if(dataset.snapshot->accounts.begin(), dataset.snapshot->accounts.end(),
                          [](const auto& entry) {
                              return entry.second.label == Label::Socialbot;
                          }));
        report.rows.push_back(std::move(row));
    }
    if (datasets.size() == 2) {
        const SnapshotIntersection shared =
            intersect_snapshots(*datasets[0].snapshot, *datasets[1].snapshot);
        report.intersection = {shared.shared_ids.size(), shared.shared_bot_ids.size()};
    }
    report.validate();
    return report;
}

std::string render_summary(const SummaryReport& report) {
    report.validate();
    std::string text;
    text += "Accounts in Network\n";
    text += "===================\n";
    text += "\n";

    char buf[160];
    std::snprintf(buf, sizeof buf, "%-16s%10s%10s\n", "Dataset", "Total", "Bots");
    text += buf;
    for (const SummaryRow& row : report.rows) {
        std::snprintf(buf, sizeof buf, "%-16s%10zu%10zu\n", row.dataset_name.c_str(),
                      row.total_accounts, row.bot_count);
        text += buf;
    }

    if (report.intersection.has_value()) {
        text += "\n";
        std::snprintf(buf, sizeof buf, "Shared accounts: %zu\n", report.intersection->first);
        text += buf;
        std::snprintf(buf, sizeof buf, "Shared socialbots: %zu\n", report.intersection->second);
        text += buf;
    }
    return text;
}

}  // namespace boostnet
