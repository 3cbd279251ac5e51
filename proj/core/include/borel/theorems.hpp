#pragma once

// Orbit-space presentations for free involutions on mod-2 cohomology
// products of projective spaces, and the pipeline that checks them against
// the spectral sequence degree by degree.

#include "borel/algebra.hpp"
#include "borel/spectral.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace borel {

struct CaseInadmissible : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NoFreeAction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpaceSpec {
    SpaceKind kind = SpaceKind::RealProduct;
    int n = 1;
    std::optional<int> m;

    /// Validates and normalizes (swaps so that n <= m). Throws BadParams.
    static SpaceSpec make(SpaceKind kind, int n, std::optional<int> m = std::nullopt);

    std::string to_string() const;

    friend auto operator<=>(const SpaceSpec&, const SpaceSpec&) = default;
    friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

BorelSetup borel_setup_for(const SpaceSpec& space);

struct Verdict {
    bool ok = true;
    std::string reason;
};

/// Floyd: chi(X) + chi(X^G) = 2 chi(X/G), so a free involution needs chi(X) even.
Verdict free_action_admissible(const SpaceSpec& space);

struct RuleParams {
    bool alpha = false;
    bool beta = false;
    bool gamma = false;

    friend bool operator==(const RuleParams&, const RuleParams&) = default;
};

std::array<RuleParams, 8> all_rule_params();

/// Presentation for the given case as a function of (n, m), without
/// normalizing n <= m. Throws CaseInadmissible when the parity constraint
/// for the case fails.
TruncatedAlgebra presentation_template(SpaceKind kind, CaseLabel label, int n, std::optional<int> m,
                                       RuleParams params = {});

TruncatedAlgebra candidate_presentation(const SpaceSpec& space, const DifferentialCase& dc, RuleParams params = {});

/// Presentation text with alpha/beta/gamma left symbolic.
std::string presentation_text(SpaceKind kind, CaseLabel label, int n, std::optional<int> m);

struct CaseReport {
    CaseLabel label = CaseLabel::I;
    bool admissible = false;
    std::string reason;
    std::string presentation;
    std::vector<std::int64_t> e_infinity_totals;
    std::vector<std::int64_t> presentation_series;
    std::vector<int> mismatch_degrees;
    bool match = false;
    std::optional<std::int64_t> chi_quotient;
    std::optional<int> coindex;
    bool collapse_ok = false;
    bool vanishing_ok = false;
    bool euler_ok = false;
    bool coindex_ok = false;
    bool params_agree = false;
    bool cocycles_ok = false;

    /// Series match plus every supporting check.
    bool passed() const
    {
        return admissible && match && collapse_ok && vanishing_ok && euler_ok && coindex_ok && params_agree &&
               cocycles_ok;
    }

    friend bool operator==(const CaseReport&, const CaseReport&) = default;
};

/// Runs pages -> collapse -> totals and compares with every (alpha, beta,
/// gamma) instance of the case's presentation over degrees 0..2D. Throws
/// CaseInadmissible if the case fails relation_consistency; spectral errors
/// are recorded in the report.
CaseReport verify_case(const SpaceSpec& space, const DifferentialCase& dc);

struct InducedActionSummary {
    int candidates = 1;
    bool trivial_forced = true;
    /// Nilpotency orders of a, b, a+b (products) or a (single spaces).
    std::vector<int> orders;
    std::string note;

    friend bool operator==(const InducedActionSummary&, const InducedActionSummary&) = default;
};

/// Involutive automorphism candidates of H*(X) and whether the c*T(c)
/// obstruction eliminates every nontrivial one.
InducedActionSummary analyze_induced_action(const SpaceSpec& space);

/// Some c in half the top degree with c*T(c) != 0, if one exists among
/// basis monomials (or all elements when that degree is small).
std::optional<Element> find_obstruction_witness(const TruncatedAlgebra& alg, const Substitution& t);

struct VerificationReport {
    SpaceSpec space;
    bool admissible = false;
    std::string reason;
    std::vector<CaseReport> cases;
    std::int64_t chi_x = 0;
    std::optional<std::int64_t> chi_quotient;
    std::optional<int> coindex;
    InducedActionSummary induced_action;
    int nondegeneracy_witness = 0;
    bool pass = false;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Full analysis of one space. Failures are recorded, never thrown.
/// `only` restricts the reported cases to one label.
VerificationReport verify_space(const SpaceSpec& space, std::optional<CaseLabel> only = std::nullopt);

struct KnownAnswer {
    std::string name;
    HilbertSeries expected;
    HilbertSeries presentation;
    HilbertSeries e_infinity;

    bool ok() const { return expected == presentation && expected == e_infinity; }
};

/// Orbit spaces known independently: L^n(4,1) x RP^m (n odd), RP^2 x CP^m,
/// and the n = m = 1 real and complex products.
std::vector<KnownAnswer> known_answer_examples(int max_n = 25, int max_m = 25);

struct MapBound {
    int coindex = 0;
    /// No equivariant map S^k -> X exists for k >= forbidden_from.
    int forbidden_from = 0;
    std::string certificate;
};

/// Throws NoFreeAction when the space admits no free involution.
MapBound map_nonexistence_bound(const SpaceSpec& space);

}  // namespace borel
