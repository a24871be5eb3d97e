#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "thetalab/relations.hpp"

namespace thetalab::conjectures {

struct ConjectureRecord {
    std::string id;  // "2.1" .. "2.23"
    RelationSpec spec;
    std::string quote;               // the conjectured statement, for human audit
    std::vector<std::string> flags;  // e.g. "atypical-shape"
};

/// All 23 conjectured relations in numbering order.
const std::vector<ConjectureRecord>& conjecture_registry();

/// Throws std::invalid_argument for an unknown id.
const ConjectureRecord& find(const std::string& id);

struct ScanOptions {
    std::int64_t n_max = 500;
    std::string backend = "series";
    int spot_checks = 10;   // enumeration cross-checks per conjecture (series backend only)
    unsigned workers = 0;   // 0 = available parallelism
};

struct ScanResult {
    std::string id;
    std::string quote;
    std::string predicate;
    std::vector<std::string> flags;
    std::string backend;
    CheckReport report;
    int spot_checks_run = 0;
    int spot_checks_agreed = 0;
    double wall_time_ms = 0;

    bool passed() const noexcept { return report.passed(); }
    bool backends_consistent() const noexcept { return spot_checks_run == spot_checks_agreed; }
};

/// Scans the listed conjectures over n in [0, n_max] on their residue classes.
/// Counterexamples are recorded in the result, never thrown. Each conjecture
/// uses its own backend instance. Output order follows `ids`.
std::vector<ScanResult> scan(const std::vector<std::string>& ids, const ScanOptions& options);

/// Report object; wall_time_ms is included only when `timing` is set so that
/// identical scans serialize identically.
nlohmann::json to_json(const ScanResult& result, bool timing);

}  // namespace thetalab::conjectures
