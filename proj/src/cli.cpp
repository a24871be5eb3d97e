#include "thetalab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "thetalab/closedform.hpp"
#include "thetalab/conjectures.hpp"
#include "thetalab/oracle.hpp"
#include "thetalab/relations.hpp"
#include "thetalab/theta.hpp"

namespace thetalab::cli {

namespace {

using nlohmann::json;

constexpr std::size_t kDefaultPrecision = 1024;

struct RunConfig {
    std::string backend = "series";
    std::optional<std::size_t> precision;
    std::optional<std::int64_t> n_max;
    std::string out_path;
    std::string format = "plain";
    unsigned workers = 0;
    bool both = false;
    bool timing = false;
};

// Raised for failures that map to exit code 1 with a message.
struct OperationalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::size_t default_precision() {
    if (const char* env = std::getenv("THETA_LAB_PRECISION")) {
        try {
            const auto v = std::stoll(env);
            if (v >= 1) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw OperationalError("THETA_LAB_PRECISION must be a positive integer, got '" +
                               std::string(env) + "'");
    }
    return kDefaultPrecision;
}

CountKind parse_kind(const std::string& s) {
    if (s == "N") return CountKind::N;
    if (s == "t") return CountKind::t;
    if (s == "t'" || s == "tp" || s == "tprime") return CountKind::tprime;
    throw OperationalError("unknown count kind '" + s + "' (expected N, t or t')");
}

// Writes to --out when given, else to the command's stdout.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw OperationalError("cannot open output file '" + path + "'");
            out_ = &file_;
        }
    }
    std::ostream& stream() { return *out_; }

private:
    std::ofstream file_;
    std::ostream* out_;
};

json report_json(const CheckReport& r, std::size_t max_failures = 20) {
    json j;
    j["id"] = r.id;
    j["n_max"] = r.n_max;
    j["backend"] = r.backend;
    j["tested_count"] = r.tested_count();
    j["status"] = r.passed() ? "pass" : "fail";
    if (const auto z = r.zero_passed()) j["n0_status"] = *z ? "pass" : "fail";
    json failures = json::array();
    for (const auto& f : r.failures()) {
        if (failures.size() >= max_failures) break;
        failures.push_back({{"n", f.n},
                            {"lhs", to_string(f.lhs)},
                            {"rhs", to_string(f.rhs)},
                            {"kind", to_string(f.verdict)}});
    }
    j["failures"] = failures;
    return j;
}

void write_csv_rows(std::ostream& os, const CheckReport& r) {
    for (const auto& e : r.evaluations) {
        os << r.id << ',' << e.n << ',' << to_string(e.lhs) << ',' << to_string(e.rhs) << ','
           << to_string(e.verdict) << '\n';
    }
}

constexpr const char* kCsvHeader = "id,n,lhs,rhs,status\n";

int emit_reports(const std::vector<CheckReport>& reports, const RunConfig& cfg, std::ostream& out) {
    Sink sink(cfg.out_path, out);
    auto& os = sink.stream();
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        os << arr.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        os << kCsvHeader;
        for (const auto& r : reports) write_csv_rows(os, r);
    } else {
        for (const auto& r : reports) {
            if (r.passed()) {
                os << "PASS " << r.id << " tested=" << r.tested_count() << '\n';
            } else {
                const auto f = *r.first_failure();
                os << "FAIL " << r.id << " failures=" << r.failures().size() << " first: n=" << f.n
                   << " lhs=" << to_string(f.lhs) << " rhs=" << to_string(f.rhs) << " ("
                   << to_string(f.verdict) << ")\n";
            }
        }
    }
    const bool ok = std::ranges::all_of(reports, &CheckReport::passed);
    return ok ? kExitPass : kExitCounterexample;
}

// ---- count ---------------------------------------------------------------

std::int64_t count_with(const std::string& backend, CountKind kind, const FormTuple& form,
                        std::int64_t n) {
    return make_backend(backend)->count(kind, form, n);
}

int cmd_count(const std::string& kind_s, const std::vector<std::int64_t>& nums, const RunConfig& cfg,
              std::ostream& out) {
    if (nums.size() != 5) throw OperationalError("count expects a b c d n");
    const auto kind = parse_kind(kind_s);
    const FormTuple form(nums[0], nums[1], nums[2], nums[3]);
    const auto n = nums[4];
    if (n < 0) throw OperationalError("n must be >= 0");

    Sink sink(cfg.out_path, out);
    auto& os = sink.stream();
    if (!cfg.both) {
        const auto v = count_with(cfg.backend, kind, form, n);
        if (cfg.format == "json") {
            os << json{{"kind", to_string(kind)}, {"form", form.entries()}, {"n", n},
                       {"backend", make_backend(cfg.backend)->name()}, {"value", v}}
                      .dump()
               << '\n';
        } else {
            os << v << '\n';
        }
        return kExitPass;
    }
    const auto s = count_with("series", kind, form, n);
    const auto e = count_with("enumerate", kind, form, n);
    if (cfg.format == "json") {
        os << json{{"kind", to_string(kind)}, {"form", form.entries()}, {"n", n},
                   {"series", s}, {"enumerate", e}, {"agree", s == e}}
                  .dump()
           << '\n';
    } else {
        os << "series=" << s << " enumerate=" << e << ' ' << (s == e ? "agree" : "DISAGREE") << '\n';
    }
    return s == e ? kExitPass : kExitError;
}

// ---- series --------------------------------------------------------------

int cmd_series(const std::string& kind, const std::vector<std::int64_t>& args, const RunConfig& cfg,
               std::ostream& out) {
    const auto p = cfg.precision.value_or(default_precision());
    PowerSeries s;
    if (kind == "phi" || kind == "psi") {
        if (args.size() != 1 || args[0] < 1) throw OperationalError(kind + " expects one k >= 1");
        const auto k = static_cast<std::size_t>(args[0]);
        s = kind == "phi" ? theta::phi_series(k, p) : theta::psi_series(k, p);
    } else {
        if (args.size() != 4) throw OperationalError(kind + " expects a b c d");
        const FormTuple form(args[0], args[1], args[2], args[3]);
        switch (parse_kind(kind)) {
            case CountKind::N: s = theta::n_genfun(form, p); break;
            case CountKind::t: s = theta::t_genfun(form, p); break;
            case CountKind::tprime: s = theta::tprime_genfun(form, p); break;
        }
    }
    Sink sink(cfg.out_path, out);
    auto& os = sink.stream();
    const auto c = s.coeffs();
    if (cfg.format == "json") {
        os << json{{"kind", kind}, {"args", args}, {"precision", p},
                   {"coeffs", std::vector<std::int64_t>(c.begin(), c.end())}}
                  .dump()
           << '\n';
    } else if (cfg.format == "csv") {
        os << "n,coeff\n";
        for (std::size_t j = 0; j < c.size(); ++j) os << j << ',' << c[j] << '\n';
    } else {
        for (std::size_t j = 0; j < c.size(); ++j) os << (j ? " " : "") << c[j];
        os << '\n';
    }
    return kExitPass;
}

// ---- verify --------------------------------------------------------------

// "fam[a=1,k=0]" -> ("fam", {a:1, k:0})
std::optional<std::pair<std::string, Params>> split_instance(const std::string& target) {
    const auto open = target.find('[');
    if (open == std::string::npos || target.back() != ']') return std::nullopt;
    Params params;
    std::stringstream ss(target.substr(open + 1, target.size() - open - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw OperationalError("malformed parameter '" + item + "'");
        try {
            params[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw OperationalError("malformed parameter '" + item + "'");
        }
    }
    return std::make_pair(target.substr(0, open), params);
}

void require_precision_covers(const std::vector<RelationSpec>& specs, std::int64_t n_max,
                              const RunConfig& cfg) {
    if (!cfg.precision) return;
    for (const auto& s : specs) {
        const auto need = max_index(s, n_max) + 1;
        if (static_cast<std::int64_t>(*cfg.precision) < need) {
            throw OperationalError("--precision " + std::to_string(*cfg.precision) + " is below the " +
                                   std::to_string(need) + " coefficients " + s.id + " needs");
        }
    }
}

int cmd_verify(const std::string& target, const RunConfig& cfg, std::ostream& out) {
    const auto& ids = theta::identity_registry();
    if (std::ranges::find(ids, target, &theta::ThetaIdentity::id) != ids.end()) {
        const auto p = cfg.precision.value_or(default_precision());
        return emit_reports({theta::verify_theta_identity(target, p)}, cfg, out);
    }

    std::vector<RelationSpec> specs;
    std::int64_t default_n_max = 300;
    if (target.find("==") != std::string::npos) {
        try {
            specs.push_back(parse_relation(target));
        } catch (const ParseError& e) {
            throw OperationalError(std::string("parse error: ") + e.what());
        }
        default_n_max = 100;
    } else if (target == "identities") {
        const auto p = cfg.precision.value_or(default_precision());
        std::vector<CheckReport> reports;
        for (const auto& id : ids) reports.push_back(theta::verify(id, p));
        return emit_reports(reports, cfg, out);
    } else if (target == "registry") {
        for (const auto& f : builtin_registry().families) {
            std::ranges::move(instances(f), std::back_inserter(specs));
        }
        specs.insert(specs.end(), builtin_registry().specs.begin(), builtin_registry().specs.end());
        default_n_max = 150;
    } else if (const auto* spec = find_spec(target)) {
        specs.push_back(*spec);
    } else if (const auto* fam = find_family(target)) {
        specs = instances(*fam);
        default_n_max = 150;
    } else if (const auto inst = split_instance(target)) {
        const auto* fam2 = find_family(inst->first);
        if (!fam2) throw OperationalError("unknown relation family '" + inst->first + "'");
        try {
            specs.push_back(instantiate(*fam2, inst->second));
        } catch (const SideConditionError& e) {
            throw OperationalError(e.what());
        }
        default_n_max = 150;
    } else {
        throw OperationalError("unknown identity or relation id '" + target + "'");
    }
    const auto n_max = cfg.n_max.value_or(default_n_max);
    if (n_max < 0) throw OperationalError("--max-n must be >= 0");
    require_precision_covers(specs, n_max, cfg);
    auto backend = make_backend(cfg.backend);
    return emit_reports(check_all(specs, n_max, *backend, cfg.workers), cfg, out);
}

// ---- scan-conjectures ----------------------------------------------------

int cmd_scan(const std::string& ids_arg, const RunConfig& cfg, std::ostream& out) {
    std::vector<std::string> ids;
    if (ids_arg.empty() || ids_arg == "all") {
        for (const auto& rec : conjectures::conjecture_registry()) ids.push_back(rec.id);
    } else {
        std::stringstream ss(ids_arg);
        std::string id;
        while (std::getline(ss, id, ',')) {
            if (!id.empty()) ids.push_back(id);
        }
    }
    for (const auto& id : ids) {
        try {
            conjectures::find(id);
        } catch (const std::invalid_argument& e) {
            throw OperationalError(e.what());
        }
    }
    conjectures::ScanOptions opts;
    opts.n_max = cfg.n_max.value_or(opts.n_max);
    if (opts.n_max < 0) throw OperationalError("--max-n must be >= 0");
    opts.backend = cfg.backend;
    opts.workers = cfg.workers;
    const auto results = conjectures::scan(ids, opts);

    Sink sink(cfg.out_path, out);
    auto& os = sink.stream();
    if (cfg.format == "csv") {
        os << kCsvHeader;
        for (const auto& r : results) write_csv_rows(os, r.report);
    } else {
        // JSON is the only structured report shape for scans; "plain" maps to it.
        json arr = json::array();
        for (const auto& r : results) arr.push_back(conjectures::to_json(r, cfg.timing));
        os << arr.dump(2) << '\n';
    }
    for (const auto& r : results) {
        if (!r.backends_consistent()) return kExitError;
    }
    const bool ok = std::ranges::all_of(results, &conjectures::ScanResult::passed);
    return ok ? kExitPass : kExitCounterexample;
}

// ---- formula / list ------------------------------------------------------

int cmd_formula(const std::string& name, std::int64_t n, const RunConfig& cfg, std::ostream& out) {
    std::int64_t v;
    try {
        v = closedform::evaluate(name, n);
    } catch (const std::invalid_argument& e) {
        throw OperationalError(e.what());
    } catch (const std::domain_error& e) {
        throw OperationalError(e.what());
    }
    Sink sink(cfg.out_path, out);
    if (cfg.format == "json") {
        sink.stream() << json{{"formula", name}, {"n", n}, {"value", v}}.dump() << '\n';
    } else {
        sink.stream() << v << '\n';
    }
    return kExitPass;
}

int cmd_list(const std::string& what, const RunConfig& cfg, std::ostream& out) {
    const bool all = what.empty() || what == "all";
    json j;
    if (all || what == "identities") {
        for (const auto& id : theta::identity_registry()) {
            j["identities"].push_back({{"id", id.id}, {"statement", id.statement}});
        }
    }
    if (all || what == "relations") {
        for (const auto& f : builtin_registry().families) {
            j["families"].push_back({{"id", f.id},
                                     {"statement", f.citation},
                                     {"parameters", f.parameters},
                                     {"grid_size", f.grid().size()}});
        }
        for (const auto& s : builtin_registry().specs) {
            j["relations"].push_back({{"id", s.id}, {"relation", print(s)}});
        }
    }
    if (all || what == "conjectures") {
        for (const auto& c : conjectures::conjecture_registry()) {
            j["conjectures"].push_back({{"id", c.id}, {"relation", print(c.spec)}, {"quote", c.quote}});
        }
    }
    if (all || what == "formulas") j["formulas"] = closedform::formula_names();
    if (j.is_null()) throw OperationalError("unknown registry '" + what + "'");

    Sink sink(cfg.out_path, out);
    auto& os = sink.stream();
    if (cfg.format == "json") {
        os << j.dump(2) << '\n';
        return kExitPass;
    }
    for (const auto& [section, items] : j.items()) {
        os << section << ":\n";
        for (const auto& item : items) {
            if (item.is_string()) {
                os << "  " << item.get<std::string>() << '\n';
            } else {
                const auto text = item.contains("relation") ? item["relation"] : item["statement"];
                os << "  " << item["id"].get<std::string>() << "  " << text.get<std::string>() << '\n';
            }
        }
    }
    return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Representation counts of quaternary forms by squares and triangular numbers"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--backend", cfg.backend, "series | enumerate")
            ->check(CLI::IsMember({"series", "enumerate", "oracle"}));
        sub->add_option("--out", cfg.out_path, "write the report to this file");
        sub->add_option("--format", cfg.format, "plain | json | csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
        sub->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
    };

    std::string kind;
    std::vector<std::int64_t> nums;
    auto* count = app.add_subcommand("count", "count representations: count <N|t|t'> a b c d n");
    count->add_option("kind", kind)->required();
    count->add_option("values", nums)->required()->expected(5);
    count->add_flag("--both", cfg.both, "compute with both backends and compare");
    add_common(count);

    std::string series_kind;
    std::vector<std::int64_t> series_args;
    auto* series = app.add_subcommand("series", "dump coefficients: series <phi|psi> k | <N|t|t'> a b c d");
    series->add_option("kind", series_kind)->required();
    series->add_option("args", series_args)->required();
    series->add_option("--precision", cfg.precision, "number of coefficients");
    add_common(series);

    std::string target;
    auto* verify = app.add_subcommand("verify", "verify an identity, relation id, or relation expression");
    verify->add_option("target", target)->required();
    verify->add_option("--max-n", cfg.n_max);
    verify->add_option("--precision", cfg.precision);
    add_common(verify);

    std::string ids;
    auto* scan = app.add_subcommand("scan-conjectures", "scan the conjectured relations");
    scan->add_option("--ids", ids, "comma-separated ids (default: all)");
    scan->add_option("--max-n", cfg.n_max);
    scan->add_flag("--timing", cfg.timing, "include wall_time_ms in the report");
    add_common(scan);

    std::string formula_name;
    std::int64_t formula_n = 0;
    auto* formula = app.add_subcommand("formula", "evaluate a closed form: formula <name> <n>");
    formula->add_option("name", formula_name)->required();
    formula->add_option("n", formula_n)->required();
    add_common(formula);

    std::string list_what;
    auto* list = app.add_subcommand("list", "dump registries: identities | relations | conjectures | formulas");
    list->add_option("registry", list_what);
    add_common(list);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    try {
        if (count->parsed()) return cmd_count(kind, nums, cfg, out);
        if (series->parsed()) return cmd_series(series_kind, series_args, cfg, out);
        if (verify->parsed()) return cmd_verify(target, cfg, out);
        if (scan->parsed()) return cmd_scan(ids, cfg, out);
        if (formula->parsed()) return cmd_formula(formula_name, formula_n, cfg, out);
        if (list->parsed()) return cmd_list(list_what, cfg, out);
    } catch (const OperationalError& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}

}  // namespace thetalab::cli
