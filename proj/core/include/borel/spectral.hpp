#pragma once

// Leray spectral sequence of the Borel fibration X -> X_G -> B_G for G of
// order 2, with trivial action on H*(X) and H*(B_G) = Z2[t], deg t = 1.
//
// E_2^{k,l} = H^k(B_G) (x) H^l(X). A differential case fixes the single
// page r0 on which fiber generators transgress, d_r0(1 (x) g) = t^r0 (x) 1,
// and extends to all of E_r0 by the Leibniz rule. Because d_r0 is
// H*(B_G)-linear, its matrix does not depend on the column k, so the page
// E_{r0+1} is stored per fiber degree l with two column classes:
//
//   k <  r0 : ker(d_r0 leaving H^l)
//   k >= r0 : ker(d_r0 leaving H^l) / im(d_r0 arriving in H^l)

#include "borel/algebra.hpp"
#include "borel/gf2.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace borel {

struct SpectralError : std::logic_error {
    using std::logic_error::logic_error;
};
struct InternalDSquared : SpectralError {
    using SpectralError::SpectralError;
};
struct VanishingViolated : SpectralError {
    using SpectralError::SpectralError;
};
struct NotACocycle : SpectralError {
    using SpectralError::SpectralError;
};
struct CollapseFailed : SpectralError {
    using SpectralError::SpectralError;
};

struct BorelSetup {
    TruncatedAlgebra fiber;
    /// Top nonvanishing fiber degree D.
    int window = 0;
};

BorelSetup make_borel_setup(TruncatedAlgebra fiber);

enum class CaseLabel { I, II, III };

std::string_view to_string(CaseLabel label);
std::optional<CaseLabel> parse_case_label(std::string_view text);

struct DifferentialCase {
    int page = 2;
    /// transgressive[i]: d_page(1 (x) g_i) = t^page (x) 1, otherwise 0.
    std::vector<bool> transgressive;
    CaseLabel label = CaseLabel::I;

    friend bool operator==(const DifferentialCase&, const DifferentialCase&) = default;
};

/// Nonzero transgression patterns: one for a single generator, cases
/// i (a only), ii (b only), iii (both) for two. Page is deg(g) + 1.
std::vector<DifferentialCase> enumerate_cases(const BorelSetup& setup);

/// t^{t_power} (x) fiber.
struct Transgressed {
    int t_power = 0;
    Element fiber;
};

Transgressed leibniz_differential(const BorelSetup& setup, const DifferentialCase& dc, const Monomial& mono);
/// Fiber part of d on an arbitrary element (linear extension).
Element fiber_differential(const BorelSetup& setup, const DifferentialCase& dc, const Element& e);

struct Admissibility {
    bool admissible = true;
    std::string reason;
};

/// d must kill every truncation relation g^trunc = 0 it touches; with
/// d(g) = t^r, d(g^trunc) = trunc * t^r g^(trunc-1), so trunc must be even.
Admissibility relation_consistency(const DifferentialCase& dc, const BorelSetup& setup);

struct PageColumn {
    int fiber_degree = 0;
    std::vector<std::size_t> dim_low;  // columns k = 0 .. r0-1
    std::size_t dim_high = 0;          // every column k >= r0
    std::size_t source_dim = 0;        // dim H^l(X)
    std::size_t rank_out = 0;          // rank of d_r0 leaving H^l
    std::vector<gf2::Vector> kernel;   // coordinates in basis_of_degree(fiber, l)
    std::vector<gf2::Vector> image;    // image of d_r0 arriving in H^l, same coordinates
};

/// The E_{r0+1} page, one column record per fiber degree 0..D.
struct Page {
    int index = 0;
    int differential_page = 0;
    std::vector<PageColumn> columns;
};

Page compute_pages(const BorelSetup& setup, const DifferentialCase& dc);

/// True iff every column k >= r0 vanishes, so all later differentials
/// have zero source or target and E_inf = E_{r0+1}.
bool verify_collapse(const Page& page, const BorelSetup& setup);

struct EInfinityEntry {
    int k = 0;
    int l = 0;
    std::size_t dim = 0;
};

struct EInfinityTable {
    /// by_degree[p]: nonzero E_inf^{k,l} with k + l = p, for p in 0..2D.
    std::vector<std::vector<EInfinityEntry>> by_degree;

    std::vector<std::int64_t> totals() const;
    HilbertSeries series() const { return HilbertSeries{totals()}; }
};

/// Dimensions of H^p(X_G) for p in 0..2D. Requires collapse; throws
/// VanishingViolated if anything survives above D.
EInfinityTable totalize(const Page& page, const BorelSetup& setup);

struct PermanentCocycle {
    std::string role;  // presentation generator it lifts to (y, z, w)
    Element fiber_class;
    int fiber_degree = 0;
};

/// Fiber classes that lift to the presentation generators; each is checked
/// to satisfy d_r0 = 0, otherwise NotACocycle.
std::vector<PermanentCocycle> permanent_cocycles(const BorelSetup& setup, const DifferentialCase& dc);

/// max{k : E_inf^{k,0} != 0}, the largest nonvanishing power of x = rho*(t).
int coindex(const Page& page);

/// Assuming every differential vanishes, the smallest total degree above D
/// with nonzero E_2 total.
int degenerate_case_contradiction(const BorelSetup& setup);

}  // namespace borel
