#pragma once

// Truncated graded-commutative algebras over GF(2).
//
// An algebra is a list of generators, each with a positive degree and a
// truncation exponent (the smallest power that vanishes), optionally with a
// single quadratic rewrite rule for one generator w of the form
//
//     w^2 = alpha x w + beta y + gamma z        (real shape)
//     w^2 = alpha x^2 w + beta y + gamma z      (complex shape)
//
// In characteristic 2 graded commutativity is plain commutativity, so a
// monomial is an exponent vector and an element is a set of monomials.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace borel {

struct AlgebraError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct BadParams : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NameClash : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct NotApplicable : AlgebraError {
    using AlgebraError::AlgebraError;
};
struct BadDegree : AlgebraError {
    using AlgebraError::AlgebraError;
};

enum class SpaceKind { RealProduct, ComplexProduct, RealSingle, ComplexSingle };

std::string_view to_string(SpaceKind kind);
std::optional<SpaceKind> parse_space_kind(std::string_view text);
constexpr bool is_product(SpaceKind k) { return k == SpaceKind::RealProduct || k == SpaceKind::ComplexProduct; }
constexpr bool is_complex(SpaceKind k) { return k == SpaceKind::ComplexProduct || k == SpaceKind::ComplexSingle; }

struct GeneratorSpec {
    std::string name;
    int degree = 1;
    int trunc = 1;

    friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

struct Monomial {
    std::vector<int> exponents;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Formal sum of monomials with coefficients in GF(2), kept sorted with
/// repeated terms cancelled, so == is structural equality.
class Element {
public:
    Element() = default;
    explicit Element(Monomial m) { terms_.push_back(std::move(m)); }
    static Element from_terms(std::vector<Monomial> terms);

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Element& operator+=(const Element& other);
    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend bool operator==(const Element&, const Element&) = default;

private:
    std::vector<Monomial> terms_;
};

enum class RewriteShape { Real, Complex };

struct RewriteRule {
    std::string w = "w";
    std::string x = "x";
    std::string y = "y";
    std::string z = "z";
    RewriteShape shape = RewriteShape::Real;
    bool alpha = false;
    bool beta = false;
    bool gamma = false;

    friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

class TruncatedAlgebra {
public:
    /// The ground field: no generators, one-dimensional in degree 0.
    TruncatedAlgebra() = default;
    explicit TruncatedAlgebra(std::vector<GeneratorSpec> generators, std::optional<RewriteRule> rule = std::nullopt);

    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    const std::optional<RewriteRule>& rule() const { return rule_; }
    std::size_t generator_count() const { return gens_.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// Exclusive bound on the exponent of generator i in a basis monomial.
    int cap(std::size_t i) const { return gens_[i].trunc; }
    int degree(const Monomial& m) const;
    /// Highest degree carrying a nonzero basis monomial.
    int top_degree() const;
    bool contains(const Monomial& m) const;

    Monomial unit() const { return Monomial{std::vector<int>(gens_.size(), 0)}; }
    Element one() const { return Element(unit()); }
    /// Generator as an element; zero when its truncation is 1.
    Element generator(std::string_view name) const;
    /// Basis monomial from exponents; zero when any exponent hits its cap.
    Element monomial(std::vector<int> exponents) const;

    std::string format(const Monomial& m) const;
    std::string format(const Element& e) const;
    /// Human-readable presentation, e.g. "Z2[x,y,z]/<x^2, y^2, z^6>; deg x=1, deg y=2, deg z=1".
    std::string presentation() const;

    friend bool operator==(const TruncatedAlgebra& a, const TruncatedAlgebra& b)
    {
        return a.gens_ == b.gens_ && a.rule_ == b.rule_;
    }

    // Resolved rule indices; meaningful only when rule() is set.
    struct RuleIndices {
        std::size_t w = 0, x = 0, y = 0, z = 0;
        int x_power = 1;
    };
    const RuleIndices& rule_indices() const { return rule_idx_; }

private:
    std::vector<GeneratorSpec> gens_;
    std::optional<RewriteRule> rule_;
    RuleIndices rule_idx_;
};

struct HilbertSeries {
    std::vector<std::int64_t> coeffs;

    std::int64_t at(int degree) const
    {
        return degree >= 0 && static_cast<std::size_t>(degree) < coeffs.size() ? coeffs[degree] : 0;
    }
    int max_degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string to_string() const;

    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/// Cauchy product of two series, truncated at maxdeg.
HilbertSeries convolve(const HilbertSeries& a, const HilbertSeries& b, int maxdeg);

/// Cohomology model of RP^n x RP^m, CP^n x CP^m, RP^n or CP^n with
/// generators a (and b). Products are normalized so that n <= m.
TruncatedAlgebra build_space_algebra(SpaceKind kind, int n, std::optional<int> m = std::nullopt);

/// Monomials of total degree l, in descending lexicographic exponent order
/// (a^l, a^{l-1}b, ..., b^l for two degree-1 generators).
std::vector<Monomial> basis_of_degree(const TruncatedAlgebra& alg, int l);

/// Dimensions in degrees 0..maxdeg as a product of truncated geometric
/// series, one factor per generator.
HilbertSeries hilbert_series(const TruncatedAlgebra& alg, int maxdeg);
HilbertSeries hilbert_series(const TruncatedAlgebra& alg);

/// Tensor product; generator names must be disjoint and at most one factor
/// may carry a rewrite rule.
TruncatedAlgebra kunneth_product(const TruncatedAlgebra& a1, const TruncatedAlgebra& a2);

std::int64_t euler_characteristic(const TruncatedAlgebra& alg);

/// Degree of a homogeneous element; nullopt for zero or mixed degrees.
std::optional<int> homogeneous_degree(const TruncatedAlgebra& alg, const Element& e);

Element multiply(const TruncatedAlgebra& alg, const Element& u, const Element& v);
Element power(const TruncatedAlgebra& alg, const Element& u, int k);

/// Smallest k >= 1 with u^k = 0. u must be homogeneous of positive degree
/// (or zero, which has order 1).
int nilpotency_order(const TruncatedAlgebra& alg, const Element& u);

/// An algebra endomorphism given by the image of each generator.
struct Substitution {
    std::vector<Element> images;

    friend bool operator==(const Substitution&, const Substitution&) = default;
};

Substitution identity_substitution(const TruncatedAlgebra& alg);
bool is_identity(const TruncatedAlgebra& alg, const Substitution& t);
Element substitute(const TruncatedAlgebra& alg, const Substitution& t, const Element& e);
Substitution compose(const TruncatedAlgebra& alg, const Substitution& outer, const Substitution& inner);
std::string format(const TruncatedAlgebra& alg, const Substitution& t);

/// Invertible substitutions linear on span{a, b} that square to the
/// identity and respect every truncation relation. Identity comes first.
/// Requires exactly two generators of equal degree and no rewrite rule.
std::vector<Substitution> involutive_automorphism_candidates(const TruncatedAlgebra& alg);

/// True iff c * T(c) != 0, for c in half the top degree of an algebra whose
/// top degree is one-dimensional. A true result means T cannot come from a
/// fixed-point-free involution.
bool fixed_point_obstruction(const TruncatedAlgebra& alg, const Substitution& t, const Element& c);

}  // namespace borel
