#include "thetalab/conjectures.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "thetalab/parallel.hpp"

namespace thetalab::conjectures {

namespace {

struct Entry {
    const char* id;
    const char* relation;
    const char* quote;
};

// clang-format off
constexpr Entry kEntries[] = {
    {"2.1", "t(1,1,4,6;n) == 2/3*N(1,1,4,6;8n+12) - N(1,1,4,6;2n+3) for n % 4 in {0,3}",
     "t(1,1,4,6;n) = 2/3 N(1,1,4,6;8n+12) - N(1,1,4,6;2n+3), n = 0,3 (mod 4)"},
    {"2.2", "t(1,1,8,12;n) == 1/2*N(1,1,8,12;8n+22) for n % 3 in {0}",
     "t(1,1,8,12;n) = 1/2 N(1,1,8,12;8n+22), 3 | n"},
    {"2.3", "t(1,3,8,8;3n) == 1/3*N(1,3,8,8;24n+20) - 2*N(1,3,8,8;6n+5)",
     "t(1,3,8,8;3m) = 1/3 N(1,3,8,8;24m+20) - 2 N(1,3,8,8;6m+5)"},
    {"2.4", "t(1,2,3,8;n) == 2/3*N(1,2,3,8;8n+14) - 2*N(1,2,3,8;4n+7) for n % 6 in {0}",
     "t(1,2,3,8;n) = 2/3 N(1,2,3,8;8n+14) - 2 N(1,2,3,8;4n+7), n = 0 (mod 6)"},
    {"2.5", "t(1,2,4,17;n) == 4*N(1,2,4,17;n+3) for n % 8 in {0,2}",
     "t(1,2,4,17;n) = 4 N(1,2,4,17;n+3), n = 0,2 (mod 8)"},
    {"2.6", "t(1,1,5,8;n) == 1/2*N(1,1,5,8;8n+15) for n % 5 in {2,3}",
     "t(1,1,5,8;n) = 1/2 N(1,1,5,8;8n+15), n = 2,3 (mod 5)"},
    {"2.7", "t(1,1,8,9;n) == 1/2*N(1,1,8,9;8n+19) for n % 9 in {0,3,4,6,7}",
     "t(1,1,8,9;n) = 1/2 N(1,1,8,9;8n+19), n = 0,3,4,6,7 (mod 9)"},
    {"2.8", "t(1,1,8,13;n) == 1/2*N(1,1,8,13;8n+23) for n % 13 in {0,4,7,8,9,10}",
     "t(1,1,8,13;n) = 1/2 N(1,1,8,13;8n+23), n = 0,4,7,8,9,10 (mod 13)"},
    {"2.9", "t(1,1,4,11;n) == 1/3*N(1,1,4,11;8n+17) for n % 11 in {0,3,5,6,7}",
     "t(1,1,4,11;n) = 1/3 N(1,1,4,11;8n+17), n = 0,3,5,6,7 (mod 11)"},
    {"2.10", "t(1,1,2,22;n) == 1/3*N(1,1,2,22;8n+26) for n % 11 in {0,1,2,4,7}",
     "t(1,1,2,22;n) = 1/3 N(1,1,2,22;8n+26), n = 0,1,2,4,7 (mod 11)"},
    {"2.11", "t(1,3,12,36;n) == 1/2*N(1,3,12,36;8n+52) - 2*N(1,3,12,36;2n+13) for n % 3 in {1}",
     "t(1,3,12,36;n) = 1/2 N(1,3,12,36;8n+52) - 2 N(1,3,12,36;2n+13), n = 1 (mod 3)"},
    {"2.12", "t(3,5,20,32;n) == 1/2*N(3,5,20,32;8n+60) - 2*N(3,5,20,32;2n+15) for n % 4 in {1}",
     "t(3,5,20,32;n) = 1/2 N(3,5,20,32;8n+60) - 2 N(3,5,20,32;2n+15), n = 1 (mod 4)"},
    {"2.13", "t(1,6,15,18;n) == 2/3*N(1,6,15,18;8n+40) - 2*N(1,6,15,18;2n+10) for n % 4 in {1}",
     "t(1,6,15,18;n) = 2/3 N(1,6,15,18;8n+40) - 2 N(1,6,15,18;2n+10), n = 1 (mod 4)"},
    {"2.14", "t(1,6,18,27;n) == 2/3*N(1,6,18,27;8n+52) - 2*N(1,6,18,27;2n+13) for n % 3 in {1}",
     "t(1,6,18,27;n) = 2/3 N(1,6,18,27;8n+52) - 2 N(1,6,18,27;2n+13), n = 1 (mod 3)"},
    {"2.15", "t(1,8,9,18;n) == 2/3*N(1,8,9,18;8n+36) - 2*N(1,8,9,18;2n+9) for n % 3 in {1}",
     "t(1,8,9,18;n) = 2/3 N(1,8,9,18;8n+36) - 2 N(1,8,9,18;2n+9), n = 1 (mod 3)"},
    {"2.16", "t(1,7,10,30;n) == 2/3*N(1,7,10,30;8n+48) - 2*N(1,7,10,30;2n+12) for n % 4 in {0}",
     "t(1,7,10,30;n) = 2/3 N(1,7,10,30;8n+48) - 2 N(1,7,10,30;2n+12), 4 | n"},
    {"2.17", "t(1,10,15,30;n) == 2/3*N(1,10,15,30;8n+56) - 2*N(1,10,15,30;2n+14) for n % 4 in {3}",
     "t(1,10,15,30;n) = 2/3 N(1,10,15,30;8n+56) - 2 N(1,10,15,30;2n+14), n = 3 (mod 4)"},
    {"2.18", "t(1,7,28,28;n) == 2/3*N(1,7,28,28;8n+64) - 2*N(1,7,28,28;2n+16) for n % 8 in {2}",
     "t(1,7,28,28;n) = 2/3 N(1,7,28,28;8n+64) - 2 N(1,7,28,28;2n+16), n = 2 (mod 8)"},
    {"2.19", "t(1,9,16,18;n) == 2/3*N(1,9,16,18;8n+44) - 2*N(1,9,16,18;2n+11) for n % 9 in {8}",
     "t(1,9,16,18;n) = 2/3 N(1,9,16,18;8n+44) - 2 N(1,9,16,18;2n+11), n = 8 (mod 9)"},
    {"2.20", "t(1,9,18,24;n) == 2/3*N(1,9,18,24;8n+52) - 2*N(1,9,18,24;2n+13) for n % 9 in {1,7}",
     "t(1,9,18,24;n) = 2/3 N(1,9,18,24;8n+52) - 2 N(1,9,18,24;2n+13), n = 1,7 (mod 9)"},
    {"2.21", "t(1,9,18,32;n) == 2/3*N(1,9,18,32;8n+60) - 2*N(1,9,18,32;2n+15) for n % 9 in {1,4}",
     "t(1,9,18,32;n) = 2/3 N(1,9,18,32;8n+60) - 2 N(1,9,18,32;2n+15), n = 1,4 (mod 9)"},
    {"2.22", "t(1,9,18,40;n) == 2/3*N(1,9,18,40;8n+68) - 2*N(1,9,18,40;2n+17) for n % 9 in {5}",
     "t(1,9,18,40;n) = 2/3 N(1,9,18,40;8n+68) - 2 N(1,9,18,40;2n+17), n = 5 (mod 9)"},
    {"2.23", "t(1,10,27,30;n) == 2/3*N(1,10,27,30;8n+68) - 2*N(1,10,27,30;2n+17) for n % 9 in {2,5}",
     "t(1,10,27,30;n) = 2/3 N(1,10,27,30;8n+68) - 2 N(1,10,27,30;2n+17), n = 2,5 (mod 9)"},
};
// clang-format on

std::vector<ConjectureRecord> build() {
    std::vector<ConjectureRecord> out;
    for (const auto& e : kEntries) {
        ConjectureRecord rec{e.id, parse_relation(e.relation, std::string("conj") + e.id), e.quote, {}};
        rec.spec.citation = e.quote;
        rec.spec.status = Status::conjectured;
        // Every other relation here compares against N at 8n+s; this one uses n+3.
        if (rec.id == "2.5") rec.flags.push_back("atypical-shape");
        out.push_back(std::move(rec));
    }
    return out;
}

ScanResult scan_one(const ConjectureRecord& rec, std::size_t index, const ScanOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    auto backend = make_backend(options.backend);

    ScanResult result;
    result.id = rec.id;
    result.quote = rec.quote;
    result.predicate = rec.spec.predicate.is_all() ? "all n" : print(rec.spec.predicate);
    result.flags = rec.flags;
    result.backend = backend->name();
    result.report = check(rec.spec, options.n_max, *backend);

    if (backend->name() == "series" && options.spot_checks > 0 && !result.report.evaluations.empty()) {
        std::mt19937_64 rng(0x5eed0000ULL + index);
        std::vector<Evaluation> picks;
        std::ranges::sample(result.report.evaluations, std::back_inserter(picks),
                            options.spot_checks, rng);
        EnumerationBackend oracle;
        for (const auto& e : picks) {
            ++result.spot_checks_run;
            if (evaluate(rec.spec.lhs, e.n, oracle) == e.lhs &&
                evaluate(rec.spec.rhs, e.n, oracle) == e.rhs) {
                ++result.spot_checks_agreed;
            }
        }
    }
    result.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace

const std::vector<ConjectureRecord>& conjecture_registry() {
    static const std::vector<ConjectureRecord> registry = build();
    return registry;
}

const ConjectureRecord& find(const std::string& id) {
    const auto& reg = conjecture_registry();
    const auto it = std::ranges::find(reg, id, &ConjectureRecord::id);
    if (it == reg.end()) throw std::invalid_argument("unknown conjecture id '" + id + "'");
    return *it;
}

std::vector<ScanResult> scan(const std::vector<std::string>& ids, const ScanOptions& options) {
    std::vector<const ConjectureRecord*> selected;
    std::vector<std::size_t> positions;
    const auto& reg = conjecture_registry();
    for (const auto& id : ids) {
        const auto& rec = find(id);
        selected.push_back(&rec);
        positions.push_back(static_cast<std::size_t>(&rec - reg.data()));
    }
    return parallel_map(selected.size(), options.workers, [&](std::size_t i) {
        return scan_one(*selected[i], positions[i], options);
    });
}

nlohmann::json to_json(const ScanResult& r, bool timing) {
    nlohmann::json j;
    j["id"] = r.id;
    j["quote"] = r.quote;
    j["predicate"] = r.predicate;
    j["n_max"] = r.report.n_max;
    j["backend"] = r.backend;
    j["tested_count"] = r.report.tested_count();
    j["status"] = r.passed() ? "pass" : "counterexample";
    if (const auto w = r.report.first_failure()) {
        j["witness"] = {{"n", w->n},
                        {"lhs", to_string(w->lhs)},
                        {"rhs", to_string(w->rhs)},
                        {"kind", to_string(w->verdict)}};
    }
    if (!r.flags.empty()) j["flags"] = r.flags;
    if (r.spot_checks_run > 0) {
        j["spot_checks"] = {{"run", r.spot_checks_run}, {"agreed", r.spot_checks_agreed}};
    }
    if (timing) j["wall_time_ms"] = r.wall_time_ms;
    return j;
}

}  // namespace thetalab::conjectures
