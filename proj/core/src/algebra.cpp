#include "borel/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace borel {

std::string_view to_string(SpaceKind kind)
{
    switch (kind) {
    case SpaceKind::RealProduct:
        return "real";
    case SpaceKind::ComplexProduct:
        return "complex";
    case SpaceKind::RealSingle:
        return "real-single";
    case SpaceKind::ComplexSingle:
        return "complex-single";
    }
    return "?";
}

std::optional<SpaceKind> parse_space_kind(std::string_view text)
{
    for (SpaceKind k : {SpaceKind::RealProduct, SpaceKind::ComplexProduct, SpaceKind::RealSingle,
                        SpaceKind::ComplexSingle})
        if (to_string(k) == text)
            return k;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Element

Element Element::from_terms(std::vector<Monomial> terms)
{
    std::sort(terms.begin(), terms.end());
    Element e;
    e.terms_.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2 == 1)
            e.terms_.push_back(std::move(terms[i]));
        i = j;
    }
    return e;
}

Element& Element::operator+=(const Element& other)
{
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

// ---------------------------------------------------------------------------
// TruncatedAlgebra

TruncatedAlgebra::TruncatedAlgebra(std::vector<GeneratorSpec> generators, std::optional<RewriteRule> rule)
    : gens_(std::move(generators)), rule_(std::move(rule))
{
    std::set<std::string> names;
    for (const auto& g : gens_) {
        if (g.degree < 1)
            throw BadParams("generator " + g.name + ": degree must be >= 1");
        if (g.trunc < 1)
            throw BadParams("generator " + g.name + ": truncation must be >= 1");
        if (!names.insert(g.name).second)
            throw NameClash("duplicate generator name " + g.name);
    }
    if (!rule_)
        return;

    auto resolve = [&](const std::string& name) {
        auto i = index_of(name);
        if (!i)
            throw BadParams("rewrite rule names unknown generator " + name);
        return *i;
    };
    rule_idx_.w = resolve(rule_->w);
    rule_idx_.x = resolve(rule_->x);
    rule_idx_.y = resolve(rule_->y);
    rule_idx_.z = resolve(rule_->z);
    rule_idx_.x_power = rule_->shape == RewriteShape::Real ? 1 : 2;

    const auto& w = gens_[rule_idx_.w];
    if (w.trunc != 2)
        throw BadParams("rewrite generator " + w.name + " must have basis cap 2");
    const int lhs = 2 * w.degree;
    if (rule_->alpha && rule_idx_.x_power * gens_[rule_idx_.x].degree + w.degree != lhs)
        throw BadParams("rewrite rule: x-term degree differs from deg w^2");
    if (rule_->beta && gens_[rule_idx_.y].degree != lhs)
        throw BadParams("rewrite rule: y-term degree differs from deg w^2");
    if (rule_->gamma && gens_[rule_idx_.z].degree != lhs)
        throw BadParams("rewrite rule: z-term degree differs from deg w^2");
}

std::optional<std::size_t> TruncatedAlgebra::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    return std::nullopt;
}

int TruncatedAlgebra::degree(const Monomial& m) const
{
    int d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        d += m.exponents[i] * gens_[i].degree;
    return d;
}

int TruncatedAlgebra::top_degree() const
{
    int d = 0;
    for (const auto& g : gens_)
        d += g.degree * (g.trunc - 1);
    return d;
}

bool TruncatedAlgebra::contains(const Monomial& m) const
{
    if (m.exponents.size() != gens_.size())
        return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (m.exponents[i] < 0 || m.exponents[i] >= cap(i))
            return false;
    return true;
}

Element TruncatedAlgebra::generator(std::string_view name) const
{
    auto i = index_of(name);
    if (!i)
        throw BadParams("unknown generator " + std::string(name));
    Monomial m = unit();
    m.exponents[*i] = 1;
    return contains(m) ? Element(std::move(m)) : Element{};
}

Element TruncatedAlgebra::monomial(std::vector<int> exponents) const
{
    if (exponents.size() != gens_.size())
        throw BadParams("monomial: wrong number of exponents");
    Monomial m{std::move(exponents)};
    return contains(m) ? Element(std::move(m)) : Element{};
}

std::string TruncatedAlgebra::format(const Monomial& m) const
{
    std::string out;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (m.exponents[i] == 0)
            continue;
        out += gens_[i].name;
        if (m.exponents[i] > 1)
            out += "^" + std::to_string(m.exponents[i]);
    }
    return out.empty() ? "1" : out;
}

std::string TruncatedAlgebra::format(const Element& e) const
{
    if (e.is_zero())
        return "0";
    // Highest monomial first, matching basis_of_degree.
    std::string out;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        if (!out.empty())
            out += " + ";
        out += format(*it);
    }
    return out;
}

std::string TruncatedAlgebra::presentation() const
{
    std::ostringstream os;
    os << "Z2[";
    for (std::size_t i = 0; i < gens_.size(); ++i)
        os << (i ? "," : "") << gens_[i].name;
    os << "]/<";
    bool first = true;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (rule_ && i == rule_idx_.w)
            continue;
        os << (first ? "" : ", ") << gens_[i].name << "^" << gens_[i].trunc;
        first = false;
    }
    if (rule_) {
        const auto& names = *rule_;
        os << (first ? "" : ", ") << names.w << "^2";
        if (rule_->alpha)
            os << " + " << names.x << (rule_idx_.x_power == 2 ? "^2" : "") << names.w;
        if (rule_->beta)
            os << " + " << names.y;
        if (rule_->gamma)
            os << " + " << names.z;
    }
    os << ">";
    if (!gens_.empty()) {
        os << "; ";
        for (std::size_t i = 0; i < gens_.size(); ++i)
            os << (i ? ", " : "") << "deg " << gens_[i].name << "=" << gens_[i].degree;
    }
    return os.str();
}

std::string HilbertSeries::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        out += (i ? "," : "") + std::to_string(coeffs[i]);
    return out + ")";
}

// ---------------------------------------------------------------------------
// Constructions and counting

HilbertSeries convolve(const HilbertSeries& a, const HilbertSeries& b, int maxdeg)
{
    HilbertSeries out;
    out.coeffs.assign(static_cast<std::size_t>(maxdeg + 1), 0);
    for (std::size_t i = 0; i < a.coeffs.size() && static_cast<int>(i) <= maxdeg; ++i) {
        if (a.coeffs[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs.size() && static_cast<int>(i + j) <= maxdeg; ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

TruncatedAlgebra build_space_algebra(SpaceKind kind, int n, std::optional<int> m)
{
    if (n < 1)
        throw BadParams("n must be >= 1, got " + std::to_string(n));
    const int deg = is_complex(kind) ? 2 : 1;
    if (!is_product(kind)) {
        if (m)
            throw BadParams("single-space kinds take no m");
        return TruncatedAlgebra({{"a", deg, n + 1}});
    }
    if (!m)
        throw BadParams("product kinds require m");
    if (*m < 1)
        throw BadParams("m must be >= 1, got " + std::to_string(*m));
    const int lo = std::min(n, *m);
    const int hi = std::max(n, *m);
    return TruncatedAlgebra({{"a", deg, lo + 1}, {"b", deg, hi + 1}});
}

namespace {

void enumerate_basis(const TruncatedAlgebra& alg, std::size_t index, int remaining, std::vector<int>& exps,
                     std::vector<Monomial>& out)
{
    if (index == alg.generator_count()) {
        if (remaining == 0)
            out.push_back(Monomial{exps});
        return;
    }
    const int d = alg.generators()[index].degree;
    const int hi = std::min(alg.cap(index) - 1, remaining / d);
    for (int e = hi; e >= 0; --e) {
        exps[index] = e;
        enumerate_basis(alg, index + 1, remaining - e * d, exps, out);
    }
    exps[index] = 0;
}

}  // namespace

std::vector<Monomial> basis_of_degree(const TruncatedAlgebra& alg, int l)
{
    std::vector<Monomial> out;
    if (l < 0)
        return out;
    std::vector<int> exps(alg.generator_count(), 0);
    enumerate_basis(alg, 0, l, exps, out);
    return out;
}

HilbertSeries hilbert_series(const TruncatedAlgebra& alg, int maxdeg)
{
    HilbertSeries series;
    series.coeffs.assign(static_cast<std::size_t>(std::max(maxdeg, 0) + 1), 0);
    series.coeffs[0] = 1;
    for (std::size_t i = 0; i < alg.generator_count(); ++i) {
        HilbertSeries factor;
        const int d = alg.generators()[i].degree;
        factor.coeffs.assign(static_cast<std::size_t>(d * (alg.cap(i) - 1) + 1), 0);
        for (int e = 0; e < alg.cap(i); ++e)
            factor.coeffs[static_cast<std::size_t>(e * d)] = 1;
        series = convolve(series, factor, maxdeg);
    }
    return series;
}

HilbertSeries hilbert_series(const TruncatedAlgebra& alg) { return hilbert_series(alg, alg.top_degree()); }

TruncatedAlgebra kunneth_product(const TruncatedAlgebra& a1, const TruncatedAlgebra& a2)
{
    if (a1.rule() && a2.rule())
        throw NotApplicable("kunneth_product: both factors carry a rewrite rule");
    std::vector<GeneratorSpec> gens = a1.generators();
    for (const auto& g : a2.generators()) {
        if (a1.index_of(g.name))
            throw NameClash("kunneth_product: generator " + g.name + " appears in both factors");
        gens.push_back(g);
    }
    return TruncatedAlgebra(std::move(gens), a1.rule() ? a1.rule() : a2.rule());
}

std::int64_t euler_characteristic(const TruncatedAlgebra& alg)
{
    const HilbertSeries s = hilbert_series(alg);
    std::int64_t chi = 0;
    for (std::size_t l = 0; l < s.coeffs.size(); ++l)
        chi += (l % 2 == 0 ? 1 : -1) * s.coeffs[l];
    return chi;
}

std::optional<int> homogeneous_degree(const TruncatedAlgebra& alg, const Element& e)
{
    if (e.is_zero())
        return std::nullopt;
    const int d = alg.degree(e.terms().front());
    for (const auto& m : e.terms())
        if (alg.degree(m) != d)
            return std::nullopt;
    return d;
}

// ---------------------------------------------------------------------------
// Multiplication

namespace {

// Appends the normal form of u*v (basis monomials, before mod-2 cancellation).
void product_terms(const TruncatedAlgebra& alg, const Monomial& u, const Monomial& v, std::vector<Monomial>& out)
{
    const std::size_t k = alg.generator_count();
    Monomial p{std::vector<int>(k)};
    for (std::size_t i = 0; i < k; ++i)
        p.exponents[i] = u.exponents[i] + v.exponents[i];

    const bool rewrite = alg.rule().has_value();
    const auto& idx = alg.rule_indices();
    for (std::size_t i = 0; i < k; ++i) {
        if (rewrite && i == idx.w)
            continue;
        if (p.exponents[i] >= alg.cap(i))
            return;
    }
    if (!rewrite || p.exponents[idx.w] < 2) {
        out.push_back(std::move(p));
        return;
    }

    // Factors are basis monomials, so the w-exponent is exactly 2 here.
    p.exponents[idx.w] -= 2;
    auto emit = [&](std::size_t gen, int e, bool with_w) {
        Monomial q = p;
        q.exponents[gen] += e;
        if (with_w)
            q.exponents[idx.w] += 1;
        if (alg.contains(q))
            out.push_back(std::move(q));
    };
    const auto& rule = *alg.rule();
    if (rule.alpha)
        emit(idx.x, idx.x_power, true);
    if (rule.beta)
        emit(idx.y, 1, false);
    if (rule.gamma)
        emit(idx.z, 1, false);
}

}  // namespace

Element multiply(const TruncatedAlgebra& alg, const Element& u, const Element& v)
{
    std::vector<Monomial> terms;
    terms.reserve(u.size() * v.size());
    for (const auto& a : u.terms())
        for (const auto& b : v.terms())
            product_terms(alg, a, b, terms);
    return Element::from_terms(std::move(terms));
}

Element power(const TruncatedAlgebra& alg, const Element& u, int k)
{
    if (k < 0)
        throw BadParams("power: negative exponent");
    Element result = alg.one();
    Element base = u;
    while (k > 0) {
        if (k & 1)
            result = multiply(alg, result, base);
        k >>= 1;
        if (k > 0)
            base = multiply(alg, base, base);
    }
    return result;
}

int nilpotency_order(const TruncatedAlgebra& alg, const Element& u)
{
    if (u.is_zero())
        return 1;
    const auto d = homogeneous_degree(alg, u);
    if (!d || *d <= 0)
        throw BadDegree("nilpotency_order: element must be homogeneous of positive degree");
    int k = 1;
    Element p = u;
    while (!p.is_zero()) {
        p = multiply(alg, p, u);
        ++k;
    }
    return k;
}

// ---------------------------------------------------------------------------
// Substitutions

Substitution identity_substitution(const TruncatedAlgebra& alg)
{
    Substitution t;
    for (const auto& g : alg.generators())
        t.images.push_back(alg.generator(g.name));
    return t;
}

bool is_identity(const TruncatedAlgebra& alg, const Substitution& t) { return t == identity_substitution(alg); }

Element substitute(const TruncatedAlgebra& alg, const Substitution& t, const Element& e)
{
    if (t.images.size() != alg.generator_count())
        throw BadParams("substitute: one image per generator required");
    Element out;
    for (const auto& m : e.terms()) {
        Element term = alg.one();
        for (std::size_t i = 0; i < alg.generator_count() && !term.is_zero(); ++i)
            if (m.exponents[i] > 0)
                term = multiply(alg, term, power(alg, t.images[i], m.exponents[i]));
        out += term;
    }
    return out;
}

Substitution compose(const TruncatedAlgebra& alg, const Substitution& outer, const Substitution& inner)
{
    Substitution t;
    for (const auto& img : inner.images)
        t.images.push_back(substitute(alg, outer, img));
    return t;
}

std::string format(const TruncatedAlgebra& alg, const Substitution& t)
{
    std::string out;
    for (std::size_t i = 0; i < alg.generator_count(); ++i) {
        if (i)
            out += ", ";
        out += alg.generators()[i].name + "->" + alg.format(t.images[i]);
    }
    return out;
}

std::vector<Substitution> involutive_automorphism_candidates(const TruncatedAlgebra& alg)
{
    if (alg.generator_count() != 2 || alg.rule())
        throw NotApplicable("automorphism enumeration needs exactly two generators and no rewrite rule");
    const auto& g = alg.generators();
    if (g[0].degree != g[1].degree)
        throw NotApplicable("automorphism enumeration needs generators of equal degree");

    const Element a = alg.generator(g[0].name);
    const Element b = alg.generator(g[1].name);
    // Nonzero vectors of span{a, b} as bit masks: 1 = a, 2 = b, 3 = a + b.
    auto element_of = [&](unsigned mask) {
        Element e;
        if (mask & 1U)
            e += a;
        if (mask & 2U)
            e += b;
        return e;
    };
    auto apply_linear = [](unsigned img_a, unsigned img_b, unsigned v) {
        return ((v & 1U) ? img_a : 0U) ^ ((v & 2U) ? img_b : 0U);
    };

    std::vector<Substitution> out;
    // Identity first, then the rest in mask order.
    std::vector<std::pair<unsigned, unsigned>> order{{1U, 2U}};
    for (unsigned ia = 1; ia <= 3; ++ia)
        for (unsigned ib = 1; ib <= 3; ++ib)
            if (ia != ib && !(ia == 1U && ib == 2U))
                order.emplace_back(ia, ib);

    for (auto [ia, ib] : order) {
        if (apply_linear(ia, ib, ia) != 1U || apply_linear(ia, ib, ib) != 2U)
            continue;
        const Element ta = element_of(ia);
        const Element tb = element_of(ib);
        if (!power(alg, ta, g[0].trunc).is_zero() || !power(alg, tb, g[1].trunc).is_zero())
            continue;
        out.push_back(Substitution{{ta, tb}});
    }
    return out;
}

bool fixed_point_obstruction(const TruncatedAlgebra& alg, const Substitution& t, const Element& c)
{
    const int top = alg.top_degree();
    if (top % 2 != 0)
        throw BadDegree("fixed_point_obstruction: top degree " + std::to_string(top) + " is odd");
    if (basis_of_degree(alg, top).size() != 1)
        throw BadDegree("fixed_point_obstruction: top-degree component is not one-dimensional");
    const auto d = homogeneous_degree(alg, c);
    if (!d || *d != top / 2)
        throw BadDegree("fixed_point_obstruction: c must be homogeneous of degree " + std::to_string(top / 2));
    return !multiply(alg, c, substitute(alg, t, c)).is_zero();
}

}  // namespace borel
