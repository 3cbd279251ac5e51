#include "borel/spectral.hpp"

#include <algorithm>
#include <map>

namespace borel {

BorelSetup make_borel_setup(TruncatedAlgebra fiber)
{
    BorelSetup s;
    s.window = fiber.top_degree();
    s.fiber = std::move(fiber);
    return s;
}

std::string_view to_string(CaseLabel label)
{
    switch (label) {
    case CaseLabel::I:
        return "i";
    case CaseLabel::II:
        return "ii";
    case CaseLabel::III:
        return "iii";
    }
    return "?";
}

std::optional<CaseLabel> parse_case_label(std::string_view text)
{
    for (CaseLabel l : {CaseLabel::I, CaseLabel::II, CaseLabel::III})
        if (to_string(l) == text)
            return l;
    return std::nullopt;
}

std::vector<DifferentialCase> enumerate_cases(const BorelSetup& setup)
{
    const auto& gens = setup.fiber.generators();
    if (gens.empty() || gens.size() > 2)
        throw SpectralError("enumerate_cases: fiber must have one or two generators");
    const int page = gens[0].degree + 1;
    for (const auto& g : gens)
        if (g.degree + 1 != page)
            throw SpectralError("enumerate_cases: fiber generators must share a degree");

    if (gens.size() == 1)
        return {DifferentialCase{page, {true}, CaseLabel::I}};
    return {
        DifferentialCase{page, {true, false}, CaseLabel::I},
        DifferentialCase{page, {false, true}, CaseLabel::II},
        DifferentialCase{page, {true, true}, CaseLabel::III},
    };
}

Transgressed leibniz_differential(const BorelSetup& setup, const DifferentialCase& dc, const Monomial& mono)
{
    // d(prod g_i^{e_i}) = sum_i e_i d(g_i) g_i^{e_i - 1} prod_{j != i} g_j^{e_j}
    const auto& alg = setup.fiber;
    std::vector<Monomial> terms;
    for (std::size_t i = 0; i < alg.generator_count(); ++i) {
        if (!dc.transgressive[i] || mono.exponents[i] % 2 == 0)
            continue;
        Monomial m = mono;
        m.exponents[i] -= 1;
        terms.push_back(std::move(m));
    }
    return Transgressed{dc.page, Element::from_terms(std::move(terms))};
}

Element fiber_differential(const BorelSetup& setup, const DifferentialCase& dc, const Element& e)
{
    Element out;
    for (const auto& m : e.terms())
        out += leibniz_differential(setup, dc, m).fiber;
    return out;
}

namespace {

std::string parameter_name(const TruncatedAlgebra& alg, std::size_t i)
{
    const auto& name = alg.generators()[i].name;
    if (name == "a")
        return "n";
    if (name == "b")
        return "m";
    return "trunc(" + name + ")-1";
}

}  // namespace

Admissibility relation_consistency(const DifferentialCase& dc, const BorelSetup& setup)
{
    const auto& alg = setup.fiber;
    if (dc.transgressive.size() != alg.generator_count())
        throw SpectralError("relation_consistency: case does not match fiber");

    for (std::size_t i = 0; i < alg.generator_count(); ++i) {
        if (!dc.transgressive[i])
            continue;
        // Apply the Leibniz rule to g^trunc formally (outside the truncation)
        // and reduce the result inside the algebra.
        const int trunc = alg.generators()[i].trunc;
        std::vector<int> exps(alg.generator_count(), 0);
        exps[i] = trunc - 1;
        const Element image = (trunc % 2 == 1) ? alg.monomial(exps) : Element{};
        if (!image.is_zero()) {
            const auto& g = alg.generators()[i].name;
            return {false, parameter_name(alg, i) + " even: d(" + g + "^" + std::to_string(trunc) + ") = t^" +
                               std::to_string(dc.page) + " " + alg.format(image) + " != 0"};
        }
    }
    return {true, "consistent with all truncation relations"};
}

Page compute_pages(const BorelSetup& setup, const DifferentialCase& dc)
{
    const auto& alg = setup.fiber;
    const int r0 = dc.page;
    const int top = setup.window;
    if (r0 < 2)
        throw SpectralError("compute_pages: differential page must be >= 2");
    if (dc.transgressive.size() != alg.generator_count())
        throw SpectralError("compute_pages: case does not match fiber");
    for (std::size_t i = 0; i < alg.generator_count(); ++i)
        if (dc.transgressive[i] && alg.generators()[i].degree != r0 - 1)
            throw SpectralError("compute_pages: transgression degree mismatch for " + alg.generators()[i].name);

    // Earlier differentials d_j (2 <= j < r0) shift fiber degree by j - 1,
    // which is never a multiple of r0 - 1; they vanish when the fiber lives
    // in degrees divisible by r0 - 1.
    const HilbertSeries fiber_series = hilbert_series(alg, top);
    if (r0 > 2)
        for (int l = 0; l <= top; ++l)
            if (l % (r0 - 1) != 0 && fiber_series.at(l) != 0)
                throw SpectralError("compute_pages: earlier differentials are not forced to vanish (fiber degree " +
                                    std::to_string(l) + ")");

    std::vector<std::vector<Monomial>> bases(static_cast<std::size_t>(top + 1));
    std::vector<std::map<Monomial, std::size_t>> position(static_cast<std::size_t>(top + 1));
    for (int l = 0; l <= top; ++l) {
        bases[l] = basis_of_degree(alg, l);
        for (std::size_t i = 0; i < bases[l].size(); ++i)
            position[l].emplace(bases[l][i], i);
    }

    // matrices[l]: d_r0 from H^l to H^{l - r0 + 1}, columns indexed by the source basis.
    std::vector<gf2::Matrix> matrices(static_cast<std::size_t>(top + 1));
    for (int l = 0; l <= top; ++l) {
        const int target = l - r0 + 1;
        const std::size_t rows = target >= 0 ? bases[target].size() : 0;
        gf2::Matrix m(rows, bases[l].size());
        for (std::size_t c = 0; c < bases[l].size(); ++c) {
            const Transgressed d = leibniz_differential(setup, dc, bases[l][c]);
            for (const auto& term : d.fiber.terms()) {
                if (target < 0)
                    throw SpectralError("compute_pages: differential leaves the first quadrant");
                m.flip(position[target].at(term), c);
            }
        }
        matrices[l] = std::move(m);
    }

    Page page;
    page.index = r0 + 1;
    page.differential_page = r0;
    page.columns.reserve(static_cast<std::size_t>(top + 1));
    for (int l = 0; l <= top; ++l) {
        PageColumn col;
        col.fiber_degree = l;
        col.source_dim = bases[l].size();
        col.kernel = gf2::kernel_basis(matrices[l]);
        col.rank_out = col.source_dim - col.kernel.size();
        const int source = l + r0 - 1;
        if (source <= top)
            col.image = gf2::image_basis(matrices[source]);
        try {
            col.dim_high = gf2::subquotient_dim(col.kernel, col.image);
        } catch (const gf2::ImageNotInKernel&) {
            throw InternalDSquared("compute_pages: d o d != 0 at fiber degree " + std::to_string(l));
        }
        col.dim_low.assign(static_cast<std::size_t>(r0), col.kernel.size());
        page.columns.push_back(std::move(col));
    }
    return page;
}

bool verify_collapse(const Page& page, const BorelSetup& setup)
{
    if (page.columns.size() != static_cast<std::size_t>(setup.window + 1))
        return false;
    return std::all_of(page.columns.begin(), page.columns.end(),
                       [](const PageColumn& c) { return c.dim_high == 0; });
}

std::vector<std::int64_t> EInfinityTable::totals() const
{
    std::vector<std::int64_t> out;
    out.reserve(by_degree.size());
    for (const auto& entries : by_degree) {
        std::int64_t sum = 0;
        for (const auto& e : entries)
            sum += static_cast<std::int64_t>(e.dim);
        out.push_back(sum);
    }
    return out;
}

EInfinityTable totalize(const Page& page, const BorelSetup& setup)
{
    if (!verify_collapse(page, setup))
        throw CollapseFailed("totalize: E_" + std::to_string(page.index) + " has nonzero columns k >= " +
                             std::to_string(page.differential_page));
    const int top = setup.window;
    const int r0 = page.differential_page;

    EInfinityTable table;
    table.by_degree.resize(static_cast<std::size_t>(2 * top + 1));
    for (int p = 0; p <= 2 * top; ++p) {
        for (int k = 0; k < r0 && k <= p; ++k) {
            const int l = p - k;
            if (l > top)
                continue;
            const std::size_t dim = page.columns[l].dim_low[k];
            if (dim > 0)
                table.by_degree[p].push_back({k, l, dim});
        }
    }
    for (int p = top + 1; p <= 2 * top; ++p)
        if (!table.by_degree[p].empty())
            throw VanishingViolated("totalize: H^" + std::to_string(p) + "(X_G) != 0 above the fiber dimension " +
                                    std::to_string(top));
    return table;
}

std::vector<PermanentCocycle> permanent_cocycles(const BorelSetup& setup, const DifferentialCase& dc)
{
    const auto& alg = setup.fiber;
    std::vector<PermanentCocycle> out;
    auto gen_power = [&](std::size_t i, int e) {
        std::vector<int> exps(alg.generator_count(), 0);
        exps[i] = e;
        return alg.monomial(exps);
    };
    const int d = alg.generators()[0].degree;

    if (alg.generator_count() == 1) {
        out.push_back({"y", gen_power(0, 2), 2 * d});
    } else {
        switch (dc.label) {
        case CaseLabel::I:
            out.push_back({"y", gen_power(0, 2), 2 * d});
            out.push_back({"z", gen_power(1, 1), d});
            break;
        case CaseLabel::II:
            out.push_back({"y", gen_power(0, 1), d});
            out.push_back({"z", gen_power(1, 2), 2 * d});
            break;
        case CaseLabel::III:
            out.push_back({"y", gen_power(0, 2), 2 * d});
            out.push_back({"z", gen_power(1, 2), 2 * d});
            out.push_back({"w", gen_power(0, 1) + gen_power(1, 1), d});
            break;
        }
    }
    for (const auto& c : out)
        if (!fiber_differential(setup, dc, c.fiber_class).is_zero())
            throw NotACocycle("permanent_cocycles: d_" + std::to_string(dc.page) + "(" + alg.format(c.fiber_class) +
                              ") != 0 in case " + std::string(to_string(dc.label)));
    return out;
}

int coindex(const Page& page)
{
    if (page.columns.empty())
        throw SpectralError("coindex: empty page");
    const PageColumn& base = page.columns.front();
    if (base.dim_high != 0)
        throw CollapseFailed("coindex: E^{k,0} survives for every k >= " + std::to_string(page.differential_page) +
                             "; no differential hits the base");
    int k = -1;
    for (std::size_t i = 0; i < base.dim_low.size(); ++i)
        if (base.dim_low[i] != 0)
            k = static_cast<int>(i);
    return k;
}

int degenerate_case_contradiction(const BorelSetup& setup)
{
    // With every d_r = 0, E_inf = E_2 and H^p = sum_{k+l=p} H^k(B_G) H^l(X),
    // where H^k(B_G) is one-dimensional for every k.
    const int top = setup.window;
    const HilbertSeries fiber = hilbert_series(setup.fiber, top);
    for (int p = top + 1; p <= 2 * top + 1; ++p) {
        std::int64_t total = 0;
        for (int l = 0; l <= std::min(p, top); ++l)
            total += fiber.at(l);
        if (total != 0)
            return p;
    }
    throw SpectralError("degenerate_case_contradiction: no witness found");
}

}  // namespace borel
