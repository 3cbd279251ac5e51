#include "report_io.hpp"

#include <sstream>
#include <stdexcept>

namespace borel::cli {

namespace {

template <class T>
Json optional_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j)
{
    if (j.is_null())
        return std::nullopt;
    return j.get<T>();
}

Json case_to_json(const CaseReport& c)
{
    Json j;
    j["label"] = std::string(to_string(c.label));
    j["admissible"] = c.admissible;
    j["reason"] = c.reason;
    j["presentation"] = c.presentation;
    j["e_infinity_totals"] = c.e_infinity_totals;
    j["presentation_series"] = c.presentation_series;
    j["match"] = c.match;
    j["mismatch_degrees"] = c.mismatch_degrees;
    j["chi_quotient"] = optional_json(c.chi_quotient);
    j["coindex"] = optional_json(c.coindex);
    j["checks"] = {
        {"collapse", c.collapse_ok}, {"vanishing", c.vanishing_ok}, {"euler", c.euler_ok},
        {"coindex", c.coindex_ok},   {"params", c.params_agree},    {"cocycles", c.cocycles_ok},
    };
    return j;
}

CaseReport case_from_json(const Json& j)
{
    CaseReport c;
    const auto label = parse_case_label(j.at("label").get<std::string>());
    if (!label)
        throw std::runtime_error("report: unknown case label " + j.at("label").dump());
    c.label = *label;
    c.admissible = j.at("admissible").get<bool>();
    c.reason = j.at("reason").get<std::string>();
    c.presentation = j.at("presentation").get<std::string>();
    c.e_infinity_totals = j.at("e_infinity_totals").get<std::vector<std::int64_t>>();
    c.presentation_series = j.at("presentation_series").get<std::vector<std::int64_t>>();
    c.match = j.at("match").get<bool>();
    c.mismatch_degrees = j.at("mismatch_degrees").get<std::vector<int>>();
    c.chi_quotient = optional_from<std::int64_t>(j.at("chi_quotient"));
    c.coindex = optional_from<int>(j.at("coindex"));
    const Json& checks = j.at("checks");
    c.collapse_ok = checks.at("collapse").get<bool>();
    c.vanishing_ok = checks.at("vanishing").get<bool>();
    c.euler_ok = checks.at("euler").get<bool>();
    c.coindex_ok = checks.at("coindex").get<bool>();
    c.params_agree = checks.at("params").get<bool>();
    c.cocycles_ok = checks.at("cocycles").get<bool>();
    return c;
}

std::string series_text(const std::vector<std::int64_t>& v)
{
    return HilbertSeries{v}.to_string();
}

}  // namespace

Json to_json(const VerificationReport& r)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["space"] = {{"kind", std::string(to_string(r.space.kind))}, {"n", r.space.n}, {"m", optional_json(r.space.m)}};
    j["admissible"] = r.admissible;
    j["reason"] = r.reason;
    Json cases = Json::array();
    for (const auto& c : r.cases)
        cases.push_back(case_to_json(c));
    j["cases"] = std::move(cases);
    j["euler"] = {{"chi_X", r.chi_x}, {"chi_quotient", optional_json(r.chi_quotient)}};
    j["coindex"] = optional_json(r.coindex);
    j["induced_action"] = {
        {"candidates", r.induced_action.candidates},
        {"trivial_forced", r.induced_action.trivial_forced},
        {"orders", r.induced_action.orders},
        {"note", r.induced_action.note},
    };
    j["nondegeneracy_witness"] = r.nondegeneracy_witness;
    j["pass"] = r.pass;
    return j;
}

VerificationReport report_from_json(const Json& doc)
{
    try {
        if (doc.at("schema_version").get<int>() != kSchemaVersion)
            throw std::runtime_error("report: unsupported schema_version " + doc.at("schema_version").dump());
        VerificationReport r;
        const Json& space = doc.at("space");
        const auto kind = parse_space_kind(space.at("kind").get<std::string>());
        if (!kind)
            throw std::runtime_error("report: unknown space kind " + space.at("kind").dump());
        r.space = SpaceSpec{*kind, space.at("n").get<int>(), optional_from<int>(space.at("m"))};
        r.admissible = doc.at("admissible").get<bool>();
        r.reason = doc.at("reason").get<std::string>();
        for (const auto& c : doc.at("cases"))
            r.cases.push_back(case_from_json(c));
        r.chi_x = doc.at("euler").at("chi_X").get<std::int64_t>();
        r.chi_quotient = optional_from<std::int64_t>(doc.at("euler").at("chi_quotient"));
        r.coindex = optional_from<int>(doc.at("coindex"));
        const Json& ia = doc.at("induced_action");
        r.induced_action.candidates = ia.at("candidates").get<int>();
        r.induced_action.trivial_forced = ia.at("trivial_forced").get<bool>();
        r.induced_action.orders = ia.at("orders").get<std::vector<int>>();
        r.induced_action.note = ia.at("note").get<std::string>();
        r.nondegeneracy_witness = doc.at("nondegeneracy_witness").get<int>();
        r.pass = doc.at("pass").get<bool>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("report: malformed document: ") + e.what());
    }
}

std::string to_markdown(const VerificationReport& r)
{
    std::ostringstream os;
    os << "# Free involutions on " << r.space.to_string() << "\n\n";
    os << "- free involution possible: " << (r.admissible ? "yes" : "no") << " (" << r.reason << ")\n";
    os << "- chi(X) = " << r.chi_x;
    if (r.chi_quotient)
        os << ", chi(X/G) = " << *r.chi_quotient;
    os << "\n";
    if (r.coindex)
        os << "- co-index: " << *r.coindex << " (no equivariant map S^k -> X for k >= " << *r.coindex + 1 << ")\n";
    if (r.admissible) {
        os << "- induced action on H*(X): " << r.induced_action.candidates << " involutive candidate(s), trivial "
           << (r.induced_action.trivial_forced ? "forced" : "not forced") << "; " << r.induced_action.note << "\n";
    }
    os << "- without differentials, E_2 would be nonzero in total degree " << r.nondegeneracy_witness << "\n";
    os << "- overall: " << (r.pass ? "PASS" : "FAIL") << "\n";

    for (const auto& c : r.cases) {
        os << "\n## Case (" << to_string(c.label) << ")\n\n";
        if (!c.admissible) {
            os << "Not admissible: " << c.reason << "\n";
            continue;
        }
        os << "H*(X/G) = " << c.presentation << "\n\n";
        os << "- E_inf totals:        " << series_text(c.e_infinity_totals) << "\n";
        os << "- presentation series: " << series_text(c.presentation_series) << "\n";
        os << "- match: " << (c.match ? "yes" : "no");
        if (!c.mismatch_degrees.empty()) {
            os << " (degrees";
            for (int d : c.mismatch_degrees)
                os << " " << d;
            os << ")";
        }
        os << "\n";
        if (c.chi_quotient)
            os << "- chi(X/G) = " << *c.chi_quotient << (c.euler_ok ? " = chi(X)/2" : " != chi(X)/2") << "\n";
        if (c.coindex)
            os << "- co-index " << *c.coindex << (c.coindex_ok ? "" : " (inconsistent)") << "\n";
        if (!c.passed())
            os << "- FAILED: " << c.reason << "\n";
    }
    return os.str();
}

}  // namespace borel::cli
