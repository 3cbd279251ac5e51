#pragma once
// Reference computations used by the tests. Nothing here calls into the
// elimination, Hilbert-series or differential code under test; every value
// is recomputed by enumeration or from closed forms.

#include "borel/algebra.hpp"
#include "borel/gf2.hpp"
#include "borel/spectral.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Series = std::vector<std::int64_t>;

inline Series poly_mul(const Series& a, const Series& b, int maxdeg)
{
    Series out(maxdeg + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            if (static_cast<int>(i + j) <= maxdeg)
                out[i + j] += a[i] * b[j];
    return out;
}

/// 1 + t^deg + ... + t^{deg (count - 1)}.
inline Series geometric(int deg, int count, int maxdeg)
{
    Series s(maxdeg + 1, 0);
    for (int i = 0; i < count && i * deg <= maxdeg; ++i)
        s[i * deg] = 1;
    return s;
}

struct Gen {
    int degree;
    int trunc;
};

inline Series series_of(const std::vector<Gen>& gens, int maxdeg)
{
    Series s(maxdeg + 1, 0);
    s[0] = 1;
    for (const auto& g : gens)
        s = poly_mul(s, geometric(g.degree, g.trunc, maxdeg), maxdeg);
    return s;
}

/// Orbit-space Poincare series written straight from the classification
/// statements. The w^2 rule leaves {1, w} as a module basis over the rest,
/// so case (iii) is a product as well. label 0/1/2 = i/ii/iii; singles
/// ignore the label.
inline std::optional<std::vector<Gen>> theorem_generators(borel::SpaceKind kind, int label, int n, int m)
{
    using borel::SpaceKind;
    const bool cx = borel::is_complex(kind);
    const int xt = cx ? 3 : 2;
    const int s = cx ? 2 : 1;  // degree scale of fiber generators
    if (!borel::is_product(kind)) {
        if (n % 2 == 0)
            return std::nullopt;
        return std::vector<Gen>{{1, xt}, {2 * s, (n + 1) / 2}};
    }
    switch (label) {
    case 0:
        if (n % 2 == 0)
            return std::nullopt;
        return std::vector<Gen>{{1, xt}, {2 * s, (n + 1) / 2}, {s, m + 1}};
    case 1:
        if (m % 2 == 0)
            return std::nullopt;
        return std::vector<Gen>{{1, xt}, {s, n + 1}, {2 * s, (m + 1) / 2}};
    default:
        if (n % 2 == 0 || m % 2 == 0)
            return std::nullopt;
        return std::vector<Gen>{{1, xt}, {2 * s, (n + 1) / 2}, {2 * s, (m + 1) / 2}, {s, 2}};
    }
}

/// Euler characteristic of the mod-2 cohomology of the space itself:
/// chi(RP^n) = 1 for n even, 0 for n odd; chi(CP^n) = n + 1.
inline std::int64_t chi_of_space(borel::SpaceKind kind, int n, std::optional<int> m)
{
    auto one = [&](int k) -> std::int64_t { return borel::is_complex(kind) ? k + 1 : (k % 2 == 0 ? 1 : 0); };
    return m ? one(n) * one(*m) : one(n);
}

/// Hilbert series by listing every exponent vector under the caps.
inline Series enumerate_hilbert(const std::vector<Gen>& gens, int maxdeg)
{
    Series s(maxdeg + 1, 0);
    std::vector<int> e(gens.size(), 0);
    while (true) {
        int d = 0;
        for (std::size_t i = 0; i < gens.size(); ++i)
            d += e[i] * gens[i].degree;
        if (d <= maxdeg)
            ++s[d];
        std::size_t i = 0;
        while (i < gens.size() && ++e[i] == gens[i].trunc)
            e[i++] = 0;
        if (i == gens.size())
            break;
    }
    return s;
}

inline std::vector<Gen> gens_of(const borel::TruncatedAlgebra& alg)
{
    std::vector<Gen> g;
    for (const auto& spec : alg.generators())
        g.push_back({spec.degree, spec.trunc});
    return g;
}

/// Displayed differential tables: d(a^p b^q) as a set of (p', q') exponent
/// pairs, for transgression of a only (label 0), b only (1) or both (2).
/// Single-generator spaces use q = 0 with label 0.
inline std::set<std::pair<int, int>> table_differential(int label, int p, int q)
{
    const bool po = p % 2 == 1;
    const bool qo = q % 2 == 1;
    std::set<std::pair<int, int>> out;
    auto toggle = [&](std::pair<int, int> t) {
        if (!out.erase(t))
            out.insert(t);
    };
    if (label == 0 || label == 2)
        if (po)
            toggle({p - 1, q});
    if (label == 1 || label == 2)
        if (qo)
            toggle({p, q - 1});
    return out;
}

/// Number of vectors v with m v = 0, by enumeration (cols <= 20).
inline std::size_t kernel_size(const borel::gf2::Matrix& m)
{
    std::size_t count = 0;
    const std::size_t c = m.cols();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c); ++mask) {
        bool zero = true;
        for (std::size_t r = 0; r < m.rows() && zero; ++r) {
            int bit = 0;
            for (std::size_t j = 0; j < c; ++j)
                if ((mask >> j) & 1U)
                    bit ^= m.get(r, j);
            zero = bit == 0;
        }
        count += zero;
    }
    return count;
}

inline int log2_exact(std::size_t v)
{
    int k = 0;
    while ((std::size_t{1} << k) < v)
        ++k;
    return k;
}

inline borel::gf2::Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density)
{
    std::bernoulli_distribution bit(density);
    borel::gf2::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, bit(rng));
    return m;
}

/// Ranks of the kernel of d_2 leaving H^l(RP^n x RP^m) and of d_2 itself,
/// for a transgressing alone with n and m odd, by degree band.
struct RankPair {
    int kernel;
    int rank;
};

inline RankPair case_i_ranks(int n, int m, int l)
{
    if (l <= n)
        return l % 2 ? RankPair{(l + 1) / 2, (l + 1) / 2} : RankPair{l / 2 + 1, l / 2};
    if (l <= m)
        return {(n + 1) / 2, (n + 1) / 2};
    return l % 2 ? RankPair{(n + m + 1 - l) / 2, (n + m + 1 - l) / 2} : RankPair{(n + m - l) / 2, (n + m + 2 - l) / 2};
}

}  // namespace oracle
