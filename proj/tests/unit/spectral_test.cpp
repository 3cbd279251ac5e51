#include "borel/spectral.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace borel;

namespace {

BorelSetup setup_of(SpaceKind kind, int n, std::optional<int> m = std::nullopt)
{
    return make_borel_setup(build_space_algebra(kind, n, m));
}

BorelSetup real(int n, int m) { return setup_of(SpaceKind::RealProduct, n, m); }
BorelSetup cplx(int n, int m) { return setup_of(SpaceKind::ComplexProduct, n, m); }

DifferentialCase case_of(const BorelSetup& s, CaseLabel label)
{
    for (const auto& dc : enumerate_cases(s))
        if (dc.label == label)
            return dc;
    throw std::logic_error("no such case");
}

Monomial mono(int p, int q) { return Monomial{{p, q}}; }

std::vector<std::int64_t> totals_of(const BorelSetup& s, CaseLabel label)
{
    const auto dc = case_of(s, label);
    return totalize(compute_pages(s, dc), s).totals();
}

std::vector<std::int64_t> padded(std::vector<std::int64_t> v, std::size_t len)
{
    v.resize(len, 0);
    return v;
}

}  // namespace

TEST(Setup, WindowIsTopDegree)
{
    EXPECT_EQ(real(3, 5).window, 8);
    EXPECT_EQ(cplx(1, 1).window, 4);
    EXPECT_EQ(setup_of(SpaceKind::RealSingle, 7).window, 7);
}

TEST(Cases, Enumeration)
{
    const auto rc = enumerate_cases(real(2, 3));
    ASSERT_EQ(rc.size(), 3U);
    EXPECT_EQ(rc[0], (DifferentialCase{2, {true, false}, CaseLabel::I}));
    EXPECT_EQ(rc[1], (DifferentialCase{2, {false, true}, CaseLabel::II}));
    EXPECT_EQ(rc[2], (DifferentialCase{2, {true, true}, CaseLabel::III}));

    const auto cs = enumerate_cases(setup_of(SpaceKind::ComplexSingle, 3));
    ASSERT_EQ(cs.size(), 1U);
    EXPECT_EQ(cs[0].page, 3);

    for (const auto& dc : enumerate_cases(cplx(1, 2)))
        EXPECT_EQ(dc.page, 3);

    EXPECT_THROW(enumerate_cases(make_borel_setup(TruncatedAlgebra())), SpectralError);
    EXPECT_THROW(enumerate_cases(make_borel_setup(TruncatedAlgebra({{"a", 1, 2}, {"b", 2, 2}}))), SpectralError);
}

TEST(CaseLabel, RoundTrip)
{
    for (auto l : {CaseLabel::I, CaseLabel::II, CaseLabel::III})
        EXPECT_EQ(parse_case_label(to_string(l)), l);
    EXPECT_EQ(to_string(CaseLabel::III), "iii");
    EXPECT_FALSE(parse_case_label("iv"));
}

TEST(Leibniz, Examples)
{
    const auto s = real(3, 5);
    const auto d1 = leibniz_differential(s, case_of(s, CaseLabel::I), mono(3, 2));
    EXPECT_EQ(d1.t_power, 2);
    EXPECT_EQ(d1.fiber, s.fiber.monomial({2, 2}));

    EXPECT_TRUE(leibniz_differential(s, case_of(s, CaseLabel::I), mono(2, 5)).fiber.is_zero());

    const auto d3 = leibniz_differential(s, case_of(s, CaseLabel::III), mono(1, 1));
    EXPECT_EQ(d3.fiber, s.fiber.generator("a") + s.fiber.generator("b"));

    const auto c = cplx(1, 1);
    EXPECT_EQ(leibniz_differential(c, case_of(c, CaseLabel::II), mono(0, 1)).t_power, 3);
}

// Every monomial of every case against the displayed tables.
TEST(Property, LeibnizMatchesTables)
{
    for (auto kind : {SpaceKind::RealProduct, SpaceKind::ComplexProduct})
        for (int n = 1; n <= 9; ++n)
            for (int m = n; m <= 11; ++m) {
                const auto s = setup_of(kind, n, m);
                for (const auto& dc : enumerate_cases(s)) {
                    const int label = static_cast<int>(dc.label);
                    for (int p = 0; p <= n; ++p)
                        for (int q = 0; q <= m; ++q) {
                            const auto d = leibniz_differential(s, dc, mono(p, q));
                            std::set<std::pair<int, int>> got;
                            for (const auto& t : d.fiber.terms())
                                got.insert({t.exponents[0], t.exponents[1]});
                            ASSERT_EQ(got, oracle::table_differential(label, p, q));
                            ASSERT_EQ(d.t_power, is_complex(kind) ? 3 : 2);
                        }
                }
            }
    for (auto kind : {SpaceKind::RealSingle, SpaceKind::ComplexSingle})
        for (int n = 1; n <= 12; ++n) {
            const auto s = setup_of(kind, n);
            const auto dc = enumerate_cases(s).front();
            for (int p = 0; p <= n; ++p) {
                std::set<std::pair<int, int>> got;
                const auto d = leibniz_differential(s, dc, Monomial{{p}});
                for (const auto& t : d.fiber.terms())
                    got.insert({t.exponents[0], 0});
                ASSERT_EQ(got, oracle::table_differential(0, p, 0));
            }
        }
}

TEST(Property, DifferentialSquaresToZero)
{
    for (auto kind : {SpaceKind::RealProduct, SpaceKind::ComplexProduct})
        for (int n = 1; n <= 8; ++n)
            for (int m = n; m <= 8; ++m) {
                const auto s = setup_of(kind, n, m);
                for (const auto& dc : enumerate_cases(s))
                    for (int p = 0; p <= n; ++p)
                        for (int q = 0; q <= m; ++q) {
                            const auto once = fiber_differential(s, dc, Element(mono(p, q)));
                            ASSERT_TRUE(fiber_differential(s, dc, once).is_zero());
                        }
            }
}

TEST(Property, DifferentialIsADerivation)
{
    const auto s = real(3, 5);
    for (const auto& dc : enumerate_cases(s))
        for (int l1 = 0; l1 <= 4; ++l1)
            for (int l2 = 0; l2 <= 4; ++l2)
                for (const auto& u : basis_of_degree(s.fiber, l1))
                    for (const auto& v : basis_of_degree(s.fiber, l2)) {
                        const Element eu(u), ev(v);
                        const auto lhs = fiber_differential(s, dc, multiply(s.fiber, eu, ev));
                        const auto rhs = multiply(s.fiber, fiber_differential(s, dc, eu), ev) +
                                         multiply(s.fiber, eu, fiber_differential(s, dc, ev));
                        ASSERT_EQ(lhs, rhs);
                    }
}

TEST(RelationConsistency, Examples)
{
    const auto s23 = real(2, 3);
    const auto bad = relation_consistency(case_of(s23, CaseLabel::I), s23);
    EXPECT_FALSE(bad.admissible);
    EXPECT_EQ(bad.reason.rfind("n even", 0), 0U) << bad.reason;

    const auto s34 = real(3, 4);
    EXPECT_TRUE(relation_consistency(case_of(s34, CaseLabel::I), s34).admissible);
    const auto iii = relation_consistency(case_of(s34, CaseLabel::III), s34);
    EXPECT_FALSE(iii.admissible);
    EXPECT_EQ(iii.reason.rfind("m even", 0), 0U) << iii.reason;

    EXPECT_THROW(relation_consistency(DifferentialCase{2, {true}, CaseLabel::I}, s34), SpectralError);
}

TEST(Property, RelationConsistencyFollowsParity)
{
    for (auto kind : {SpaceKind::RealProduct, SpaceKind::ComplexProduct})
        for (int n = 1; n <= 20; ++n)
            for (int m = n; m <= 20; ++m) {
                const auto s = setup_of(kind, n, m);
                for (const auto& dc : enumerate_cases(s)) {
                    const int label = static_cast<int>(dc.label);
                    const bool expected = oracle::theorem_generators(kind, label, n, m).has_value();
                    ASSERT_EQ(relation_consistency(dc, s).admissible, expected) << n << "," << m << " " << label;
                }
            }
}

TEST(Pages, RealOneOne)
{
    const auto s = real(1, 1);
    const auto page = compute_pages(s, case_of(s, CaseLabel::I));
    EXPECT_EQ(page.index, 3);
    EXPECT_EQ(page.differential_page, 2);
    ASSERT_EQ(page.columns.size(), 3U);
    ASSERT_EQ(page.columns[1].kernel.size(), 1U);
    EXPECT_EQ(page.columns[1].kernel[0], (gf2::Vector{0, 1}));  // basis (a, b): span b
    EXPECT_EQ(page.columns[2].kernel.size(), 0U);
    for (const auto& col : page.columns) {
        EXPECT_EQ(col.dim_high, 0U);
        EXPECT_EQ(col.dim_low, (std::vector<std::size_t>(2, col.kernel.size())));
    }
    EXPECT_TRUE(verify_collapse(page, s));
}

TEST(Pages, RealThreeFiveEvenBand)
{
    const auto s = real(3, 5);
    const auto page = compute_pages(s, case_of(s, CaseLabel::I));
    const auto& c2 = page.columns[2];
    EXPECT_EQ(c2.source_dim, 3U);
    EXPECT_EQ(c2.kernel.size(), 2U);
    EXPECT_EQ(c2.rank_out, 1U);
    // Incoming image equals the kernel, so nothing survives for k >= 2.
    EXPECT_EQ(c2.image.size(), 2U);
    EXPECT_EQ(c2.dim_high, 0U);
}

TEST(Property, CaseOneRanksFollowBands)
{
    for (int n = 1; n <= 15; n += 2)
        for (int m = n; m <= 17; m += 2) {
            const auto s = real(n, m);
            const auto page = compute_pages(s, case_of(s, CaseLabel::I));
            for (int l = 0; l <= n + m; ++l) {
                const auto want = oracle::case_i_ranks(n, m, l);
                ASSERT_EQ(page.columns[l].kernel.size(), static_cast<std::size_t>(want.kernel)) << n << m << l;
                ASSERT_EQ(page.columns[l].rank_out, static_cast<std::size_t>(want.rank)) << n << m << l;
            }
        }
}

TEST(Pages, ComplexE3EqualsE2)
{
    // d_2 vanishes: the fiber is zero in odd degrees, and d_3 is the first
    // differential, so the kernel in columns below 3 is the whole fiber at
    // fiber degree 0 and every odd degree is empty.
    const auto s = cplx(1, 1);
    for (const auto& dc : enumerate_cases(s)) {
        const auto page = compute_pages(s, dc);
        EXPECT_EQ(page.index, 4);
        for (int l = 1; l <= s.window; l += 2)
            EXPECT_EQ(page.columns[l].source_dim, 0U);
        EXPECT_TRUE(verify_collapse(page, s));
    }
}

TEST(Pages, Errors)
{
    const auto s = real(1, 1);
    EXPECT_THROW(compute_pages(s, DifferentialCase{1, {true, false}, CaseLabel::I}), SpectralError);
    EXPECT_THROW(compute_pages(s, DifferentialCase{3, {true, false}, CaseLabel::I}), SpectralError);
    EXPECT_THROW(compute_pages(s, DifferentialCase{2, {true}, CaseLabel::I}), SpectralError);
    // A degree-3 fiber generator transgressing on E_3 would need d_2 = 0,
    // which is not forced when the fiber has classes in odd degree.
    const auto mixed = make_borel_setup(TruncatedAlgebra({{"a", 2, 3}, {"c", 1, 2}}));
    EXPECT_THROW(compute_pages(mixed, DifferentialCase{3, {true, false}, CaseLabel::I}), SpectralError);
}

TEST(Collapse, Examples)
{
    const auto r = real(3, 5);
    EXPECT_TRUE(verify_collapse(compute_pages(r, case_of(r, CaseLabel::III)), r));
    const auto c = cplx(3, 3);
    EXPECT_TRUE(verify_collapse(compute_pages(c, case_of(c, CaseLabel::III)), c));
    // An inadmissible case leaves classes in the high columns.
    const auto e = real(2, 2);
    EXPECT_FALSE(verify_collapse(compute_pages(e, case_of(e, CaseLabel::I)), e));
}

TEST(Totalize, Examples)
{
    EXPECT_EQ(totals_of(real(1, 1), CaseLabel::I), padded({1, 2, 1}, 5));
    EXPECT_EQ(totals_of(real(1, 2), CaseLabel::I), padded({1, 2, 2, 1}, 7));
    EXPECT_EQ(totals_of(cplx(1, 1), CaseLabel::III), padded({1, 1, 2, 1, 1}, 9));
}

TEST(Totalize, EntriesDecomposeEachDegree)
{
    const auto s = real(3, 5);
    const auto table = totalize(compute_pages(s, case_of(s, CaseLabel::II)), s);
    ASSERT_EQ(table.by_degree.size(), 17U);
    for (std::size_t p = 0; p < table.by_degree.size(); ++p) {
        std::size_t sum = 0;
        for (const auto& e : table.by_degree[p]) {
            EXPECT_EQ(static_cast<std::size_t>(e.k + e.l), p);
            EXPECT_LT(e.k, 2);
            EXPECT_GT(e.dim, 0U);
            sum += e.dim;
        }
        EXPECT_EQ(static_cast<std::int64_t>(sum), table.totals()[p]);
    }
    EXPECT_EQ(table.series().coeffs, table.totals());
}

TEST(Totalize, RejectsUncollapsedPage)
{
    const auto e = real(2, 2);
    EXPECT_THROW(totalize(compute_pages(e, case_of(e, CaseLabel::I)), e), CollapseFailed);
}

TEST(Totalize, RejectsLeakAboveTopDegree)
{
    // Hand-built page with a surviving class in fiber degree D on the
    // column k = 1, giving total degree D + 1.
    const auto s = real(1, 1);
    Page page = compute_pages(s, case_of(s, CaseLabel::I));
    page.columns[2].dim_low = {0, 1};
    EXPECT_THROW(totalize(page, s), VanishingViolated);
}

TEST(Cocycles, Examples)
{
    const auto s = real(3, 5);
    const auto ci = permanent_cocycles(s, case_of(s, CaseLabel::I));
    ASSERT_EQ(ci.size(), 2U);
    EXPECT_EQ(ci[0].role, "y");
    EXPECT_EQ(ci[0].fiber_class, s.fiber.monomial({2, 0}));

    const auto ciii = permanent_cocycles(s, case_of(s, CaseLabel::III));
    ASSERT_EQ(ciii.size(), 3U);
    EXPECT_EQ(ciii[2].role, "w");
    EXPECT_EQ(ciii[2].fiber_class, s.fiber.generator("a") + s.fiber.generator("b"));

    const auto c = cplx(3, 3);
    const auto cc = permanent_cocycles(c, case_of(c, CaseLabel::III));
    EXPECT_EQ(cc[2].fiber_degree, 2);
}

TEST(Cocycles, MismatchedCaseThrows)
{
    const auto s = real(3, 5);
    // Labelled (i) but transgressing b: b is then not a cocycle.
    EXPECT_THROW(permanent_cocycles(s, DifferentialCase{2, {false, true}, CaseLabel::I}), NotACocycle);
}

TEST(Coindex, Examples)
{
    for (int n = 1; n <= 7; n += 2)
        for (int m = n; m <= 9; m += 2) {
            for (auto kind : {SpaceKind::RealProduct, SpaceKind::ComplexProduct}) {
                const auto s = setup_of(kind, n, m);
                for (const auto& dc : enumerate_cases(s))
                    EXPECT_EQ(coindex(compute_pages(s, dc)), is_complex(kind) ? 2 : 1);
            }
        }
}

TEST(Coindex, NoDifferentialIsRejected)
{
    // The all-zero assignment: nothing transgresses, t^k survives for every k.
    const auto s = real(1, 1);
    const auto page = compute_pages(s, DifferentialCase{2, {false, false}, CaseLabel::I});
    EXPECT_FALSE(verify_collapse(page, s));
    EXPECT_THROW(coindex(page), CollapseFailed);
    EXPECT_THROW(coindex(Page{}), SpectralError);
}

TEST(Degenerate, Witness)
{
    EXPECT_EQ(degenerate_case_contradiction(real(1, 1)), 3);
    EXPECT_EQ(degenerate_case_contradiction(real(3, 5)), 9);
    EXPECT_EQ(degenerate_case_contradiction(cplx(1, 1)), 5);
    for (int n = 1; n <= 10; ++n)
        EXPECT_EQ(degenerate_case_contradiction(setup_of(SpaceKind::RealSingle, n)), n + 1);
}

TEST(Property, SwapSymmetry)
{
    // Case (i) on (n, m) and case (ii) on (m, n) describe the same space.
    for (int n = 1; n <= 9; ++n)
        for (int m = n; m <= 11; ++m) {
            const auto s = real(n, m);
            const BorelSetup swapped = make_borel_setup(TruncatedAlgebra({{"a", 1, m + 1}, {"b", 1, n + 1}}));
            const auto p1 = compute_pages(s, case_of(s, CaseLabel::I));
            const auto p2 = compute_pages(swapped, case_of(swapped, CaseLabel::II));
            for (int l = 0; l <= s.window; ++l) {
                ASSERT_EQ(p1.columns[l].kernel.size(), p2.columns[l].kernel.size());
                ASSERT_EQ(p1.columns[l].dim_high, p2.columns[l].dim_high);
            }
        }
}

TEST(Property, FloydAndVanishingOnAdmissibleCases)
{
    for (auto kind : {SpaceKind::RealProduct, SpaceKind::ComplexProduct})
        for (int n = 1; n <= 12; ++n)
            for (int m = n; m <= 12; ++m) {
                const auto s = setup_of(kind, n, m);
                for (const auto& dc : enumerate_cases(s)) {
                    if (!relation_consistency(dc, s).admissible)
                        continue;
                    const auto page = compute_pages(s, dc);
                    ASSERT_TRUE(verify_collapse(page, s));
                    const auto totals = totalize(page, s).totals();
                    std::int64_t alt = 0;
                    for (std::size_t p = 0; p < totals.size(); ++p) {
                        alt += (p % 2 ? -1 : 1) * totals[p];
                        if (static_cast<int>(p) > s.window)
                            ASSERT_EQ(totals[p], 0);
                    }
                    ASSERT_EQ(2 * alt, oracle::chi_of_space(kind, n, m));
                }
            }
}
