#include "commands.hpp"

#include "report_io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

namespace borel::cli {

namespace {

struct RunConfig {
    std::string kind;
    int n = 0;
    int m = 0;
    std::string case_filter = "all";
    int max_n = 0;
    int max_m = 0;
    std::string format = "json";
    std::string out_path;
    unsigned jobs = 0;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::vector<std::string> kKindNames{"real", "complex", "real-single", "complex-single"};

SpaceSpec space_from(const RunConfig& cfg, bool m_given)
{
    const auto kind = parse_space_kind(cfg.kind);
    if (!kind)
        throw UsageError("unknown --kind " + cfg.kind);
    if (is_product(*kind) && !m_given)
        throw UsageError("--kind " + cfg.kind + " requires --m");
    if (!is_product(*kind) && m_given)
        throw UsageError("--kind " + cfg.kind + " takes no --m");
    try {
        return SpaceSpec::make(*kind, cfg.n, m_given ? std::optional<int>(cfg.m) : std::nullopt);
    } catch (const BadParams& e) {
        throw UsageError(e.what());
    }
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out)
{
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file)
        throw UsageError("cannot open --out " + cfg.out_path);
    file << text;
}

int cmd_analyze(const RunConfig& cfg, bool m_given, std::ostream& out)
{
    const SpaceSpec space = space_from(cfg, m_given);
    std::optional<CaseLabel> only;
    if (cfg.case_filter != "all")
        only = parse_case_label(cfg.case_filter);
    if (only && !is_product(space.kind) && *only != CaseLabel::I)
        throw UsageError("single-space kinds have only case i");

    const VerificationReport report = verify_space(space, only);
    emit(cfg, cfg.format == "json" ? to_json(report).dump(2) + "\n" : to_markdown(report), out);
    return (report.pass || !report.admissible) ? kExitOk : kExitMismatch;
}

std::string case_status(const CaseReport& c)
{
    if (!c.admissible)
        return "inadmissible";
    return c.passed() ? "pass" : "fail";
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    std::vector<SpaceKind> kinds;
    if (cfg.kind.empty()) {
        kinds = {SpaceKind::RealProduct, SpaceKind::ComplexProduct, SpaceKind::RealSingle, SpaceKind::ComplexSingle};
    } else {
        const auto k = parse_space_kind(cfg.kind);
        if (!k)
            throw UsageError("unknown --kind " + cfg.kind);
        kinds = {*k};
    }
    const int max_m = cfg.max_m > 0 ? cfg.max_m : cfg.max_n;
    const auto spaces = sweep_spaces(kinds, cfg.max_n, max_m);
    const unsigned jobs = cfg.jobs > 0 ? cfg.jobs : std::max(1U, std::thread::hardware_concurrency());
    const auto reports = verify_all(spaces, jobs);

    struct Tally {
        int spaces = 0, no_free_action = 0, admissible_cases = 0, passed_cases = 0, failed_cases = 0;
    };
    std::map<SpaceKind, Tally> tally;
    Tally total;
    std::vector<std::string> failures;
    Json rows = Json::array();
    for (const auto& r : reports) {
        Tally& t = tally[r.space.kind];
        ++t.spaces;
        if (!r.admissible)
            ++t.no_free_action;
        Json cases = Json::object();
        bool recorded = false;
        for (const auto& c : r.cases) {
            cases[std::string(to_string(c.label))] = case_status(c);
            if (!c.admissible)
                continue;
            ++t.admissible_cases;
            if (c.passed()) {
                ++t.passed_cases;
            } else {
                ++t.failed_cases;
                failures.push_back(r.space.to_string() + " case " + std::string(to_string(c.label)));
                recorded = true;
            }
        }
        if (!r.pass && !recorded)
            failures.push_back(r.space.to_string());
        rows.push_back({{"kind", std::string(to_string(r.space.kind))},
                        {"n", r.space.n},
                        {"m", r.space.m ? Json(*r.space.m) : Json(nullptr)},
                        {"admissible", r.admissible},
                        {"cases", std::move(cases)},
                        {"coindex", r.coindex ? Json(*r.coindex) : Json(nullptr)},
                        {"trivial_action_forced", r.induced_action.trivial_forced},
                        {"pass", r.pass}});
    }
    for (const auto& [kind, t] : tally) {
        total.spaces += t.spaces;
        total.no_free_action += t.no_free_action;
        total.admissible_cases += t.admissible_cases;
        total.passed_cases += t.passed_cases;
        total.failed_cases += t.failed_cases;
    }
    const bool pass = failures.empty();

    std::string text;
    if (cfg.format == "json") {
        Json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "verify";
        doc["bounds"] = {{"max_n", cfg.max_n}, {"max_m", max_m}};
        Json summary = Json::array();
        for (const auto& [kind, t] : tally)
            summary.push_back({{"kind", std::string(to_string(kind))},
                               {"spaces", t.spaces},
                               {"no_free_action", t.no_free_action},
                               {"admissible_cases", t.admissible_cases},
                               {"passed_cases", t.passed_cases},
                               {"failed_cases", t.failed_cases}});
        doc["summary"] = std::move(summary);
        doc["spaces"] = std::move(rows);
        doc["failures"] = failures;
        doc["pass"] = pass;
        text = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "# Sweep 1 <= n <= m, n <= " << cfg.max_n << ", m <= " << max_m << "\n\n";
        os << "| kind | spaces | no free action | admissible cases | passed | failed |\n";
        os << "|---|---|---|---|---|---|\n";
        for (const auto& [kind, t] : tally)
            os << "| " << to_string(kind) << " | " << t.spaces << " | " << t.no_free_action << " | "
               << t.admissible_cases << " | " << t.passed_cases << " | " << t.failed_cases << " |\n";
        os << "| total | " << total.spaces << " | " << total.no_free_action << " | " << total.admissible_cases << " | "
           << total.passed_cases << " | " << total.failed_cases << " |\n\n";
        if (pass) {
            os << "all admissible cases pass\n";
        } else {
            os << failures.size() << " failure(s):\n";
            for (const auto& f : failures)
                os << "- " << f << "\n";
        }
        text = os.str();
    }
    emit(cfg, text, out);
    return pass ? kExitOk : kExitMismatch;
}

int cmd_coindex(const RunConfig& cfg, bool m_given, std::ostream& out)
{
    const SpaceSpec space = space_from(cfg, m_given);
    std::ostringstream os;
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["space"] = {{"kind", std::string(to_string(space.kind))},
                    {"n", space.n},
                    {"m", space.m ? Json(*space.m) : Json(nullptr)}};
    try {
        const MapBound bound = map_nonexistence_bound(space);
        os << space.to_string() << ": ind(X) <= co-ind(X) = " << bound.coindex << "\n";
        os << "co-index " << bound.coindex << "; no equivariant map S^k -> X for k >= " << bound.forbidden_from
           << "\n";
        os << "certificate: " << bound.certificate << "\n";
        doc["free_action"] = true;
        doc["coindex"] = bound.coindex;
        doc["forbidden_from"] = bound.forbidden_from;
        doc["certificate"] = bound.certificate;
    } catch (const NoFreeAction& e) {
        os << space.to_string() << ": no free involution exists\n" << e.what() << "\n";
        doc["free_action"] = false;
        doc["coindex"] = nullptr;
        doc["forbidden_from"] = nullptr;
        doc["certificate"] = e.what();
    }
    emit(cfg, cfg.format == "json" ? doc.dump(2) + "\n" : os.str(), out);
    return kExitOk;
}

}  // namespace

std::vector<SpaceSpec> sweep_spaces(const std::vector<SpaceKind>& kinds, int max_n, int max_m)
{
    std::vector<SpaceSpec> out;
    for (SpaceKind kind : kinds) {
        if (is_product(kind)) {
            for (int n = 1; n <= max_n; ++n)
                for (int m = n; m <= max_m; ++m)
                    out.push_back(SpaceSpec::make(kind, n, m));
        } else {
            for (int n = 1; n <= max_n; ++n)
                out.push_back(SpaceSpec::make(kind, n));
        }
    }
    return out;
}

std::vector<VerificationReport> verify_all(const std::vector<SpaceSpec>& spaces, unsigned jobs)
{
    std::vector<VerificationReport> reports(spaces.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < spaces.size(); i = next++)
            reports[i] = verify_space(spaces[i]);
    };
    const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(spaces.size())));
    if (threads == 1) {
        worker();
        return reports;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    pool.clear();  // joins
    return reports;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Leray spectral sequence engine for free involutions on products of projective spaces", "borel"};
    app.require_subcommand(1);

    RunConfig cfg;
    const CLI::Range positive(1, std::numeric_limits<int>::max());
    auto add_space_options = [&](CLI::App* sub) {
        sub->add_option("--kind", cfg.kind, "Space kind")->required()->check(CLI::IsMember(kKindNames));
        sub->add_option("--n", cfg.n, "First dimension")->required()->check(positive);
        return sub->add_option("--m", cfg.m, "Second dimension (product kinds)")->check(positive);
    };
    auto add_output_options = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "md"}));
        sub->add_option("--out", cfg.out_path, "Write the report to PATH instead of stdout");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Analyze one space and report every differential case");
    CLI::Option* analyze_m = add_space_options(analyze);
    analyze->add_option("--case", cfg.case_filter, "Restrict to one case")
        ->check(CLI::IsMember({"i", "ii", "iii", "all"}));
    add_output_options(analyze);

    CLI::App* verify = app.add_subcommand("verify", "Sweep all kinds over 1 <= n <= m and verify every case");
    verify->add_option("--max-n", cfg.max_n, "Largest n")->required()->check(positive);
    verify->add_option("--max-m", cfg.max_m, "Largest m (default: max-n)")->check(positive);
    verify->add_option("--kind", cfg.kind, "Restrict to one kind")->check(CLI::IsMember(kKindNames));
    verify->add_option("--jobs", cfg.jobs, "Worker threads (default: hardware concurrency)")->check(positive);
    add_output_options(verify);

    CLI::App* coindex_cmd = app.add_subcommand("coindex", "Print the co-index and the equivariant-map bound");
    CLI::Option* coindex_m = add_space_options(coindex_cmd);
    coindex_cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "md"}));
    coindex_cmd->add_option("--out", cfg.out_path, "Write to PATH instead of stdout");
    cfg.format = "json";

    std::vector<std::string> argv_storage{"borel"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "borel: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(cfg, analyze_m->count() > 0, out);
        if (verify->parsed())
            return cmd_verify(cfg, out);
        // coindex prints text unless json is requested explicitly
        if (coindex_cmd->get_option("--format")->count() == 0)
            cfg.format = "md";
        return cmd_coindex(cfg, coindex_m->count() > 0, out);
    } catch (const UsageError& e) {
        err << "borel: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace borel::cli
