#pragma once

// Slow, obviously-correct re-implementations used as test oracles. None of
// these call into the library's search code; they only use the data types.

#include <ramsat/combinatorics.hpp>
#include <ramsat/constructions.hpp>
#include <ramsat/graph.hpp>
#include <ramsat/reduction.hpp>
#include <ramsat/rng.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

namespace oracle {

using ramsat::ColoredCompleteGraph;
using ramsat::SimpleGraph;

inline std::vector<std::vector<int>> subsets_of(const std::vector<int>& ground, int m)
{
    std::vector<std::vector<int>> out;
    if (m < 0 || m > static_cast<int>(ground.size()))
        return out;
    std::vector<bool> pick(ground.size(), false);
    std::fill(pick.begin(), pick.begin() + m, true);
    do {
        std::vector<int> s;
        for (std::size_t i = 0; i < ground.size(); ++i)
            if (pick[i])
                s.push_back(ground[i]);
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;  // lexicographic in the positions of `ground`
}

inline std::vector<int> iota(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = i;
    return v;
}

inline bool is_clique(const SimpleGraph& g, const std::vector<int>& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j]))
                return false;
    return true;
}

inline bool is_independent(const SimpleGraph& g, const std::vector<int>& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j]))
                return false;
    return true;
}

/// First m-clique among subsets of `ground` in lexicographic order.
inline std::optional<std::vector<int>> first_clique(const SimpleGraph& g, const std::vector<int>& ground, int m)
{
    for (auto& s : subsets_of(ground, m))
        if (is_clique(g, s))
            return s;
    return std::nullopt;
}

inline bool has_clique(const SimpleGraph& g, const std::vector<int>& ground, int m)
{
    if (m <= 0)
        return true;
    return first_clique(g, ground, m).has_value();
}

inline bool has_independent(const SimpleGraph& g, const std::vector<int>& ground, int m)
{
    if (m <= 0)
        return true;
    for (auto& s : subsets_of(ground, m))
        if (is_independent(g, s))
            return true;
    return false;
}

inline int max_independent(const SimpleGraph& g)
{
    int best = 0;
    for (int m = 1; m <= g.vertex_count(); ++m)
        if (has_independent(g, iota(g.vertex_count()), m))
            best = m;
    return best;
}

inline SimpleGraph random_graph(ramsat::Rng& rng, int n, double p)
{
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < p)
                g.add_edge(u, v);
    return g;
}

inline ColoredCompleteGraph random_pattern(ramsat::Rng& rng, int n, int r)
{
    ColoredCompleteGraph c(n, r);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            c.set_color(u, v, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(r))));
    return c;
}

/// Does the one-vertex extension given by `chi` (1-based colours) create a
/// monochromatic K_k through the new vertex? Checked by listing every
/// (k-1)-set of old vertices.
inline bool extension_creates_kk(const ColoredCompleteGraph& c, int k, const std::vector<int>& chi)
{
    const int n = c.vertex_count();
    for (auto& s : subsets_of(iota(n), k - 1)) {
        const int colour = chi[static_cast<std::size_t>(s.front())];
        bool ok = true;
        for (int v : s)
            ok = ok && chi[static_cast<std::size_t>(v)] == colour;
        for (std::size_t i = 0; ok && i < s.size(); ++i)
            for (std::size_t j = i + 1; ok && j < s.size(); ++j)
                ok = c.color(s[i], s[j]) == colour;
        if (ok)
            return true;
    }
    return false;
}

/// Semisaturated iff every one of the r^n extension colourings creates a K_k.
inline bool semisaturated(const ColoredCompleteGraph& c, int k)
{
    const int n = c.vertex_count();
    const int r = c.color_count();
    std::vector<int> chi(static_cast<std::size_t>(n), 1);
    for (;;) {
        if (!extension_creates_kk(c, k, chi))
            return false;
        int i = n - 1;
        while (i >= 0 && chi[static_cast<std::size_t>(i)] == r)
            chi[static_cast<std::size_t>(i--)] = 1;
        if (i < 0)
            return true;
        ++chi[static_cast<std::size_t>(i)];
    }
}

/// Definition-level unbalanced set: lacks K_s or lacks an independent t-set.
inline bool unbalanced(const SimpleGraph& g, const std::vector<int>& u, int s, int t)
{
    return !has_clique(g, u, s) || !has_independent(g, u, t);
}

inline bool any_unbalanced(const SimpleGraph& g, int n, int s, int t)
{
    for (auto& u : subsets_of(iota(g.vertex_count()), n))
        if (unbalanced(g, u, s, t))
            return true;
    return false;
}

/// g(n, s, t) by enumerating every labelled graph without symmetry reduction.
inline std::optional<int> g_value(int n, int s, int t, int n_max)
{
    for (int N = 1; N <= n_max; ++N) {
        const int pairs = N * (N - 1) / 2;
        bool all = true;
        for (std::uint64_t mask = 0; all && mask < (std::uint64_t{1} << pairs); ++mask) {
            SimpleGraph g(N);
            int bit = 0;
            for (int u = 0; u < N; ++u)
                for (int v = u + 1; v < N; ++v, ++bit)
                    if ((mask >> bit) & 1)
                        g.add_edge(u, v);
            all = any_unbalanced(g, n, s, t);
        }
        if (all)
            return N;
    }
    return std::nullopt;
}

/// Is some k-subset of [N] containing `part` of the given colour?
inline bool covered(const ramsat::KSubsetColoring& chi, const std::vector<int>& part, bool blue)
{
    for (auto& K : subsets_of(iota(chi.ground_size()), chi.k())) {
        if (!std::includes(K.begin(), K.end(), part.begin(), part.end()))
            continue;
        if (chi.is_blue(K) == blue)
            return true;
    }
    return false;
}

/// Good n-set: every s-subset inside a red k-set, or every t-subset inside a blue k-set.
inline bool good(const ramsat::KSubsetColoring& chi, const std::vector<int>& u, int s, int t)
{
    bool red_side = true;
    for (auto& x : subsets_of(u, s))
        red_side = red_side && covered(chi, x, false);
    if (red_side)
        return true;
    for (auto& y : subsets_of(u, t))
        if (!covered(chi, y, true))
            return false;
    return true;
}

inline std::optional<std::vector<int>> first_good(const ramsat::KSubsetColoring& chi, int n, int s, int t)
{
    for (auto& u : subsets_of(iota(chi.ground_size()), n))
        if (good(chi, u, s, t))
            return u;
    return std::nullopt;
}

/// f_k(n, s, t) over every colouring, rank bit i = subset of colex rank i.
inline std::optional<int> f_value(int n, int s, int t, int k, int n_max)
{
    for (int N = 1; N <= n_max; ++N) {
        const auto total = ramsat::binomial(N, k);
        bool all = true;
        for (std::uint64_t mask = 0; all && mask < (std::uint64_t{1} << total); ++mask) {
            ramsat::KSubsetColoring chi(N, k);
            for (std::uint64_t i = 0; i < total; ++i)
                chi.set_blue(i, (mask >> i) & 1);
            all = first_good(chi, n, s, t).has_value();
        }
        if (all)
            return N;
    }
    return std::nullopt;
}

/// Closed form (s / (2 e t)) log2(2 e t / s), written independently.
inline double lower_bound_p(int s, int t)
{
    const double x = 2.0 * std::exp(1.0) * t / s;
    return std::clamp(std::log(x) / std::log(2.0) / x, 0.0, 1.0);
}

}  // namespace oracle
