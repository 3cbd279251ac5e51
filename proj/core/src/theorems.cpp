#include "borel/theorems.hpp"

#include <algorithm>

namespace borel {

SpaceSpec SpaceSpec::make(SpaceKind kind, int n, std::optional<int> m)
{
    if (n < 1)
        throw BadParams("n must be >= 1, got " + std::to_string(n));
    if (is_product(kind) != m.has_value())
        throw BadParams(is_product(kind) ? "product kinds require m" : "single-space kinds take no m");
    if (m && *m < 1)
        throw BadParams("m must be >= 1, got " + std::to_string(*m));
    SpaceSpec s{kind, n, m};
    if (m && *m < n) {
        s.n = *m;
        s.m = n;
    }
    return s;
}

std::string SpaceSpec::to_string() const
{
    std::string out(borel::to_string(kind));
    out += " (" + std::to_string(n);
    if (m)
        out += "," + std::to_string(*m);
    return out + ")";
}

BorelSetup borel_setup_for(const SpaceSpec& space)
{
    return make_borel_setup(build_space_algebra(space.kind, space.n, space.m));
}

Verdict free_action_admissible(const SpaceSpec& space)
{
    const std::int64_t chi = euler_characteristic(build_space_algebra(space.kind, space.n, space.m));
    if (chi % 2 != 0)
        return {false, "no free action: chi(X) = " + std::to_string(chi) +
                           " is odd, and chi(X) = 2 chi(X/G) when the fixed set is empty"};
    return {true, "chi(X) = " + std::to_string(chi) + " is even"};
}

std::array<RuleParams, 8> all_rule_params()
{
    std::array<RuleParams, 8> out{};
    for (unsigned i = 0; i < 8; ++i)
        out[i] = RuleParams{(i & 4U) != 0, (i & 2U) != 0, (i & 1U) != 0};
    return out;
}

TruncatedAlgebra presentation_template(SpaceKind kind, CaseLabel label, int n, std::optional<int> m,
                                       RuleParams params)
{
    if (n < 1 || (m && *m < 1))
        throw BadParams("presentation_template: n, m must be >= 1");
    if (is_product(kind) != m.has_value())
        throw BadParams("presentation_template: m given iff product kind");

    // Complex kinds double every fiber degree; x = rho*(t) stays in degree 1
    // but survives one page longer.
    const int s = is_complex(kind) ? 2 : 1;
    const int x_trunc = is_complex(kind) ? 3 : 2;
    const bool n_odd = n % 2 == 1;

    if (!is_product(kind)) {
        if (label != CaseLabel::I)
            throw CaseInadmissible("single-space kinds have only case i");
        if (!n_odd)
            throw CaseInadmissible("n must be odd");
        return TruncatedAlgebra({{"x", 1, x_trunc}, {"y", 2 * s, (n + 1) / 2}});
    }

    const bool m_odd = *m % 2 == 1;
    switch (label) {
    case CaseLabel::I:
        if (!n_odd)
            throw CaseInadmissible("case i requires n odd");
        return TruncatedAlgebra({{"x", 1, x_trunc}, {"y", 2 * s, (n + 1) / 2}, {"z", s, *m + 1}});
    case CaseLabel::II:
        if (!m_odd)
            throw CaseInadmissible("case ii requires m odd");
        return TruncatedAlgebra({{"x", 1, x_trunc}, {"y", s, n + 1}, {"z", 2 * s, (*m + 1) / 2}});
    case CaseLabel::III: {
        if (!n_odd || !m_odd)
            throw CaseInadmissible("case iii requires n and m odd");
        RewriteRule rule;
        rule.shape = is_complex(kind) ? RewriteShape::Complex : RewriteShape::Real;
        rule.alpha = params.alpha;
        rule.beta = params.beta;
        rule.gamma = params.gamma;
        return TruncatedAlgebra(
            {{"x", 1, x_trunc}, {"y", 2 * s, (n + 1) / 2}, {"z", 2 * s, (*m + 1) / 2}, {"w", s, 2}}, rule);
    }
    }
    throw CaseInadmissible("unknown case");
}

TruncatedAlgebra candidate_presentation(const SpaceSpec& space, const DifferentialCase& dc, RuleParams params)
{
    return presentation_template(space.kind, dc.label, space.n, space.m, params);
}

std::string presentation_text(SpaceKind kind, CaseLabel label, int n, std::optional<int> m)
{
    std::string text = presentation_template(kind, label, n, m).presentation();
    if (label == CaseLabel::III && is_product(kind)) {
        const std::string symbolic = is_complex(kind) ? "w^2 + alpha x^2w + beta y + gamma z>"
                                                      : "w^2 + alpha xw + beta y + gamma z>";
        const auto pos = text.find("w^2>");
        if (pos != std::string::npos)
            text.replace(pos, 4, symbolic);
    }
    return text;
}

namespace {

std::int64_t alternating_sum(const std::vector<std::int64_t>& v)
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i % 2 == 0 ? 1 : -1) * v[i];
    return s;
}

std::vector<RuleParams> params_for(CaseLabel label, SpaceKind kind)
{
    if (label == CaseLabel::III && is_product(kind)) {
        const auto all = all_rule_params();
        return {all.begin(), all.end()};
    }
    return {RuleParams{}};
}

}  // namespace

CaseReport verify_case(const SpaceSpec& space, const DifferentialCase& dc)
{
    const BorelSetup setup = borel_setup_for(space);
    const Admissibility adm = relation_consistency(dc, setup);
    if (!adm.admissible)
        throw CaseInadmissible(adm.reason);

    CaseReport rep;
    rep.label = dc.label;
    rep.admissible = true;
    rep.reason = adm.reason;
    rep.presentation = presentation_text(space.kind, dc.label, space.n, space.m);

    const int top = setup.window;
    const int window = 2 * top;

    // Presentation side: every parameter instance, compared with each other.
    std::vector<TruncatedAlgebra> instances;
    for (const RuleParams& p : params_for(dc.label, space.kind))
        instances.push_back(candidate_presentation(space, dc, p));
    rep.presentation_series = hilbert_series(instances.front(), window).coeffs;
    rep.params_agree = std::all_of(instances.begin(), instances.end(), [&](const TruncatedAlgebra& a) {
        return hilbert_series(a, window).coeffs == rep.presentation_series;
    });

    // Spectral side.
    const Page page = compute_pages(setup, dc);
    rep.collapse_ok = verify_collapse(page, setup);
    if (!rep.collapse_ok) {
        rep.reason = "E_" + std::to_string(page.index) + " does not vanish in columns k >= " +
                     std::to_string(page.differential_page);
        return rep;
    }
    try {
        rep.e_infinity_totals = totalize(page, setup).totals();
        rep.vanishing_ok = true;
    } catch (const VanishingViolated& e) {
        rep.reason = e.what();
        return rep;
    }

    for (int p = 0; p <= window; ++p)
        if (rep.e_infinity_totals[p] != rep.presentation_series[p])
            rep.mismatch_degrees.push_back(p);
    rep.match = rep.mismatch_degrees.empty() && rep.params_agree;

    rep.chi_quotient = alternating_sum(rep.e_infinity_totals);
    rep.euler_ok = 2 * *rep.chi_quotient == euler_characteristic(setup.fiber);

    rep.coindex = coindex(page);
    rep.coindex_ok = *rep.coindex == dc.page - 1;
    for (const auto& alg : instances) {
        const int order = nilpotency_order(alg, alg.generator("x"));
        rep.coindex_ok = rep.coindex_ok && order - 1 == *rep.coindex;
    }

    try {
        permanent_cocycles(setup, dc);
        rep.cocycles_ok = true;
    } catch (const NotACocycle& e) {
        rep.reason = e.what();
    }
    return rep;
}

std::optional<Element> find_obstruction_witness(const TruncatedAlgebra& alg, const Substitution& t)
{
    const int top = alg.top_degree();
    if (top % 2 != 0 || basis_of_degree(alg, top).size() != 1)
        return std::nullopt;
    const auto basis = basis_of_degree(alg, top / 2);
    for (const auto& m : basis) {
        Element c(m);
        if (fixed_point_obstruction(alg, t, c))
            return c;
    }
    constexpr std::size_t kExhaustiveLimit = 10;
    if (basis.size() > kExhaustiveLimit)
        return std::nullopt;
    for (std::size_t mask = 1; mask < (std::size_t{1} << basis.size()); ++mask) {
        if ((mask & (mask - 1)) == 0)
            continue;  // single monomials already tried
        std::vector<Monomial> terms;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (mask & (std::size_t{1} << i))
                terms.push_back(basis[i]);
        Element c = Element::from_terms(std::move(terms));
        if (fixed_point_obstruction(alg, t, c))
            return c;
    }
    return std::nullopt;
}

InducedActionSummary analyze_induced_action(const SpaceSpec& space)
{
    const TruncatedAlgebra alg = build_space_algebra(space.kind, space.n, space.m);
    InducedActionSummary out;
    if (!is_product(space.kind)) {
        out.orders = {nilpotency_order(alg, alg.generator("a"))};
        out.note = "one generator: the identity is the only degree-preserving automorphism";
        return out;
    }

    const Element a = alg.generator("a");
    const Element b = alg.generator("b");
    out.orders = {nilpotency_order(alg, a), nilpotency_order(alg, b), nilpotency_order(alg, a + b)};

    const auto candidates = involutive_automorphism_candidates(alg);
    out.candidates = static_cast<int>(candidates.size());
    std::vector<std::string> survivors;
    for (const auto& t : candidates) {
        if (is_identity(alg, t))
            continue;
        if (!find_obstruction_witness(alg, t))
            survivors.push_back(format(alg, t));
    }
    out.trivial_forced = survivors.empty();

    const int claimed = space.n + *space.m + 1;
    if (out.trivial_forced) {
        out.note = "every nontrivial involutive candidate is excluded by c*T(c) != 0";
        if (out.candidates == 1)
            out.note = "nilpotency orders leave only the identity";
    } else {
        out.note = "assumption: trivial action on cohomology; not excluded by the order test or c*T(c):";
        for (const auto& s : survivors)
            out.note += " {" + s + "}";
    }
    if (out.orders[2] != claimed)
        out.note += "; order(a+b) = " + std::to_string(out.orders[2]) + ", not n+m+1 = " + std::to_string(claimed);
    return out;
}

VerificationReport verify_space(const SpaceSpec& space, std::optional<CaseLabel> only)
{
    VerificationReport rep;
    rep.space = space;
    const BorelSetup setup = borel_setup_for(space);
    rep.chi_x = euler_characteristic(setup.fiber);
    rep.nondegeneracy_witness = degenerate_case_contradiction(setup);

    const Verdict verdict = free_action_admissible(space);
    rep.admissible = verdict.ok;
    rep.reason = verdict.reason;
    if (!verdict.ok) {
        // Consistent rejection: chi(X) odd cannot be twice an integer.
        rep.pass = rep.chi_x % 2 != 0;
        rep.induced_action.candidates = 0;
        rep.induced_action.trivial_forced = false;
        rep.induced_action.note = "not analyzed: no free action";
        return rep;
    }

    rep.induced_action = analyze_induced_action(space);

    bool all_pass = true;
    int verified = 0;
    for (const auto& dc : enumerate_cases(setup)) {
        if (only && dc.label != *only)
            continue;
        const Admissibility adm = relation_consistency(dc, setup);
        CaseReport cr;
        if (!adm.admissible) {
            cr.label = dc.label;
            cr.admissible = false;
            cr.reason = adm.reason;
        } else {
            try {
                cr = verify_case(space, dc);
            } catch (const std::exception& e) {
                cr.label = dc.label;
                cr.admissible = true;
                cr.reason = std::string("error: ") + e.what();
            }
            ++verified;
            all_pass = all_pass && cr.passed();
            if (cr.chi_quotient && !rep.chi_quotient)
                rep.chi_quotient = cr.chi_quotient;
            if (cr.coindex) {
                if (rep.coindex && *rep.coindex != *cr.coindex)
                    all_pass = false;
                rep.coindex = cr.coindex;
            }
        }
        rep.cases.push_back(std::move(cr));
    }
    // A filter that leaves no admissible case is not a failure of the space.
    rep.pass = all_pass && (verified > 0 || only.has_value());
    return rep;
}

std::vector<KnownAnswer> known_answer_examples(int max_n, int max_m)
{
    std::vector<KnownAnswer> out;
    auto e_infinity_series = [](TruncatedAlgebra fiber, CaseLabel label, int maxdeg) {
        const BorelSetup setup = make_borel_setup(std::move(fiber));
        for (const auto& dc : enumerate_cases(setup))
            if (dc.label == label) {
                auto totals = totalize(compute_pages(setup, dc), setup).totals();
                totals.resize(static_cast<std::size_t>(maxdeg + 1), 0);
                return HilbertSeries{totals};
            }
        throw SpectralError("known_answer_examples: case not found");
    };

    // L^n(4,1) x RP^m for odd n and any m (no n <= m normalization).
    for (int n = 1; n <= max_n; n += 2) {
        for (int m = 1; m <= max_m; ++m) {
            const TruncatedAlgebra lens({{"x", 1, 2}, {"y", 2, (n + 1) / 2}});
            const TruncatedAlgebra rp({{"z", 1, m + 1}});
            const int maxdeg = 2 * (n + m);
            KnownAnswer k;
            k.name = "L^" + std::to_string(n) + "(4,1) x RP^" + std::to_string(m);
            k.expected = hilbert_series(kunneth_product(lens, rp), maxdeg);
            k.presentation =
                hilbert_series(presentation_template(SpaceKind::RealProduct, CaseLabel::I, n, m), maxdeg);
            k.e_infinity = e_infinity_series(TruncatedAlgebra({{"a", 1, n + 1}, {"b", 1, m + 1}}), CaseLabel::I,
                                             maxdeg);
            out.push_back(std::move(k));
        }
    }

    // RP^2 x CP^m: the free involution is antipodal on CP^1 = S^2.
    for (int m = 1; m <= max_m; ++m) {
        const TruncatedAlgebra rp2({{"x", 1, 3}});
        const TruncatedAlgebra cp({{"z", 2, m + 1}});
        const int maxdeg = 4 * (1 + m);
        KnownAnswer k;
        k.name = "RP^2 x CP^" + std::to_string(m);
        k.expected = hilbert_series(kunneth_product(rp2, cp), maxdeg);
        k.presentation = hilbert_series(presentation_template(SpaceKind::ComplexProduct, CaseLabel::I, 1, m), maxdeg);
        k.e_infinity = e_infinity_series(TruncatedAlgebra({{"a", 2, 2}, {"b", 2, m + 1}}), CaseLabel::I, maxdeg);
        out.push_back(std::move(k));
    }

    // Products of two spheres: every admissible case gives the same answer.
    struct SphereFixture {
        SpaceKind kind;
        const char* name;
        std::vector<std::int64_t> series;
    };
    const SphereFixture spheres[] = {
        {SpaceKind::RealProduct, "S^1 x S^1", {1, 2, 1}},
        {SpaceKind::ComplexProduct, "S^2 x S^2", {1, 1, 2, 1, 1}},
    };
    for (const auto& f : spheres) {
        const SpaceSpec space = SpaceSpec::make(f.kind, 1, 1);
        const BorelSetup setup = borel_setup_for(space);
        const int maxdeg = 2 * setup.window;
        for (const auto& dc : enumerate_cases(setup)) {
            KnownAnswer k;
            k.name = std::string(f.name) + " case " + std::string(to_string(dc.label));
            k.expected.coeffs = f.series;
            k.expected.coeffs.resize(static_cast<std::size_t>(maxdeg + 1), 0);
            k.presentation = hilbert_series(candidate_presentation(space, dc), maxdeg);
            k.e_infinity = e_infinity_series(setup.fiber, dc.label, maxdeg);
            out.push_back(std::move(k));
        }
    }
    return out;
}

MapBound map_nonexistence_bound(const SpaceSpec& space)
{
    const Verdict verdict = free_action_admissible(space);
    if (!verdict.ok)
        throw NoFreeAction(space.to_string() + ": " + verdict.reason);

    const BorelSetup setup = borel_setup_for(space);
    std::optional<int> value;
    for (const auto& dc : enumerate_cases(setup)) {
        if (!relation_consistency(dc, setup).admissible)
            continue;
        const int c = coindex(compute_pages(setup, dc));
        if (value && *value != c)
            throw SpectralError("map_nonexistence_bound: co-index differs between cases");
        value = c;
        for (const RuleParams& p : params_for(dc.label, space.kind)) {
            const TruncatedAlgebra alg = candidate_presentation(space, dc, p);
            const Element x = alg.generator("x");
            if (power(alg, x, c).is_zero() || !power(alg, x, c + 1).is_zero())
                throw SpectralError("map_nonexistence_bound: x^" + std::to_string(c) +
                                    " certificate fails in case " + std::string(to_string(dc.label)));
        }
    }
    if (!value)
        throw SpectralError("map_nonexistence_bound: no admissible case");

    MapBound bound;
    bound.coindex = *value;
    bound.forbidden_from = *value + 1;
    bound.certificate = "x^" + std::to_string(*value) + " != 0 and x^" + std::to_string(*value + 1) +
                        " = 0 in every admissible orbit-space presentation";
    return bound;
}

}  // namespace borel
