#include <ramsat/constructions.hpp>

#include <ramsat/combinatorics.hpp>
#include <ramsat/parallel.hpp>
#include <ramsat/rng.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace ramsat {

ColoredCompleteGraph::ColoredCompleteGraph(int n, int r) : n_(n)
{
    if (r < 1 || r > max_colors)
        throw std::invalid_argument("ColoredCompleteGraph: colour count must lie in [1, 64]");
    classes_.assign(static_cast<std::size_t>(r), SimpleGraph(n));
}

ColoredCompleteGraph::ColoredCompleteGraph(int n, std::vector<SimpleGraph> classes) : n_(n), classes_(std::move(classes))
{
    if (classes_.empty() || classes_.size() > static_cast<std::size_t>(max_colors))
        throw std::invalid_argument("ColoredCompleteGraph: colour count must lie in [1, 64]");
    for (const auto& c : classes_)
        if (c.vertex_count() != n)
            throw std::invalid_argument("ColoredCompleteGraph: class vertex count mismatch");
    const int words = n == 0 ? 0 : classes_.front().words();
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < words; ++w) {
            std::uint64_t seen = 0;
            for (const auto& c : classes_) {
                const auto bits = c.row(v)[static_cast<std::size_t>(w)];
                if (bits & seen)
                    throw std::invalid_argument("ColoredCompleteGraph: classes are not edge-disjoint");
                seen |= bits;
            }
        }
}

int ColoredCompleteGraph::color(int u, int v) const
{
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i].has_edge(u, v))
            return static_cast<int>(i) + 1;
    return 0;
}

void ColoredCompleteGraph::set_color(int u, int v, int c)
{
    if (c < 1 || c > color_count())
        throw std::invalid_argument("ColoredCompleteGraph: colour " + std::to_string(c) + " out of range");
    if (const int old = color(u, v); old != 0)
        throw std::invalid_argument("ColoredCompleteGraph: pair already has colour " + std::to_string(old));
    classes_[static_cast<std::size_t>(c - 1)].add_edge(u, v);
}

std::int64_t ColoredCompleteGraph::colored_pairs() const
{
    std::int64_t total = 0;
    for (const auto& c : classes_)
        total += c.edge_count();
    return total;
}

bool ColoredCompleteGraph::is_complete() const
{
    return colored_pairs() == static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
}

// ---------------------------------------------------------------------------

namespace {

void color_lines(SimpleGraph& cls, const IncidenceStructure& s, std::span<const int> family)
{
    for (int li : family) {
        const auto& l = s.line(static_cast<std::size_t>(li));
        for (std::size_t a = 0; a < l.size(); ++a)
            for (std::size_t b = a + 1; b < l.size(); ++b)
                cls.add_edge(l[a], l[b]);
    }
}

}  // namespace

std::vector<std::vector<int>> affine_families(int q, int r, AffineStrategy strategy, std::uint64_t seed)
{
    const auto plane = build_affine_plane(q);
    std::vector<std::vector<int>> families(static_cast<std::size_t>(std::max(r, 0)));
    if (strategy == AffineStrategy::parallel_balanced) {
        if (r < 1 || r > q + 1)
            throw std::invalid_argument("affine_coloring: parallel-balanced needs 1 <= r <= q + 1");
        const auto classes = parallel_classes(plane);
        for (std::size_t j = 0; j < classes.size(); ++j) {
            auto& fam = families[j % static_cast<std::size_t>(r)];
            fam.insert(fam.end(), classes[j].begin(), classes[j].end());
        }
        for (auto& fam : families)
            std::sort(fam.begin(), fam.end());
        return families;
    }
    if (r < 1 || r > q * q + q)
        throw std::invalid_argument("affine_coloring: round-robin needs 1 <= r <= q^2 + q");
    std::vector<int> order(plane.line_count());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = static_cast<int>(i);
    Rng rng(seed);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);
    for (std::size_t i = 0; i < order.size(); ++i)
        families[i % static_cast<std::size_t>(r)].push_back(order[i]);
    return families;
}

ColoredCompleteGraph affine_coloring(int q, int r, AffineStrategy strategy, std::uint64_t seed)
{
    if (r > ColoredCompleteGraph::max_colors)
        throw std::invalid_argument("affine_coloring: more than 64 colours");
    if (static_cast<std::int64_t>(q) * q > SimpleGraph::max_vertices)
        throw std::invalid_argument("affine_coloring: q^2 exceeds the graph size cap");
    const auto families = affine_families(q, r, strategy, seed);
    const auto plane = build_affine_plane(q);
    std::vector<SimpleGraph> classes(static_cast<std::size_t>(r), SimpleGraph(q * q));
    for (int i = 0; i < r; ++i)
        color_lines(classes[static_cast<std::size_t>(i)], plane, families[static_cast<std::size_t>(i)]);
    return ColoredCompleteGraph(q * q, std::move(classes));
}

Fq3Coloring fq3_coloring(int q, int r)
{
    PrimeField field(q);
    if (r < 1 || r > q)
        throw std::invalid_argument("fq3_coloring: need 1 <= r <= q");
    if (static_cast<std::int64_t>(q) * q * q > SimpleGraph::max_vertices)
        throw std::invalid_argument("fq3_coloring: q^3 exceeds the graph size cap");
    const int n = q * q * q;
    std::vector<SimpleGraph> classes(static_cast<std::size_t>(r), SimpleGraph(n));
    for (int lambda = 0; lambda < r; ++lambda) {
        const auto family = fq3_line_family(q, lambda);
        std::vector<int> all(family.line_count());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = static_cast<int>(i);
        color_lines(classes[static_cast<std::size_t>(lambda)], family, all);
    }
    const ColoredCompleteGraph pure(n, std::move(classes));

    Fq3Coloring out{pure, pure.classes(), SimpleGraph(n)};
    int next = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (pure.color(u, v) == 0) {
                out.leftover.add_edge(u, v);
                out.coloring.set_color(u, v, next + 1);
                next = (next + 1) % r;
            }
    return out;
}

double lower_bound_p(int s, int t)
{
    if (s < 2 || t < s)
        throw std::invalid_argument("lower_bound_p: need 2 <= s <= t");
    const double x = 2.0 * std::numbers::e * t / s;
    return std::clamp(std::log2(x) / x, 0.0, 1.0);
}

SimpleGraph sample_gnp(const GnpParams& params)
{
    if (!(params.p >= 0.0 && params.p <= 1.0))
        throw std::invalid_argument("sample_gnp: p must lie in [0, 1]");
    SimpleGraph g(params.n);
    Rng rng(params.seed);
    for (int u = 0; u < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v)
            if (rng.uniform01() < params.p)
                g.add_edge(u, v);
    return g;
}

// ---------------------------------------------------------------------------

namespace {

class BadSetTest {
public:
    BadSetTest(const SimpleGraph& g, int s, int t) : g_(g), s_(s), t_(t)
    {
        if (g.vertex_count() <= SimpleGraph::max_mask_vertices) {
            rows_ = g.rows64();
            co_rows_ = g.complement().rows64();
        } else {
            complement_ = g.complement();
        }
    }

    bool bad(std::uint64_t u) const
    {
        return !detail::has_clique_mask(rows_, u, s_) || !detail::has_clique_mask(co_rows_, u, t_);
    }

    bool bad(const VertexSet& u) const
    {
        if (!rows_.empty() || g_.vertex_count() == 0)
            return bad(u.mask());
        return !find_clique_within(g_, u, s_) || !find_clique_within(complement_, u, t_);
    }

    bool narrow() const { return g_.vertex_count() <= SimpleGraph::max_mask_vertices; }

private:
    const SimpleGraph& g_;
    int s_, t_;
    std::vector<std::uint64_t> rows_, co_rows_;
    SimpleGraph complement_;
};

}  // namespace

BadSetCount count_bad_sets(const SimpleGraph& g, int n, int s, int t, BadSetMode mode)
{
    const int N = g.vertex_count();
    if (n < 1 || n > N || s < 1 || t < 1)
        throw std::invalid_argument("count_bad_sets: need 1 <= n <= N and s, t >= 1");
    BadSetCount out;
    out.subsets = binomial(N, n);
    const BadSetTest test(g, s, t);

    if (mode.trials == 0) {
        if (out.subsets > exact_bad_set_budget)
            throw BudgetExceeded("count_bad_sets: C(" + std::to_string(N) + ", " + std::to_string(n) +
                                 ") exceeds the exact budget of 10^7");
        if (test.narrow()) {
            out.hits = parallel_sum(static_cast<std::size_t>(N), mode.threads, [&](std::size_t first) {
                std::uint64_t count = 0;
                const int a = static_cast<int>(first);
                for_each_combination(N, n - 1, [&](std::uint64_t u) {
                    count += test.bad(u) ? 1 : 0;
                    return true;
                }, a + 1, std::uint64_t{1} << a);
                return count;
            });
        } else {
            for_each_combination_indices(N, n, [&](std::span<const int> idx) {
                out.hits += test.bad(VertexSet(std::vector<int>(idx.begin(), idx.end()))) ? 1 : 0;
                return true;
            });
        }
        out.exact = true;
        out.trials = out.subsets;
        out.value = static_cast<double>(out.hits);
        return out;
    }

    out.exact = false;
    out.trials = mode.trials;
    Rng rng(mode.seed);
    for (std::uint64_t trial = 0; trial < mode.trials; ++trial) {
        // Floyd's sampling of an n-subset of [N]
        std::set<int> chosen;
        for (int j = N - n; j < N; ++j) {
            const int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
            chosen.insert(chosen.count(x) ? j : x);
        }
        out.hits += test.bad(VertexSet(std::vector<int>(chosen.begin(), chosen.end()))) ? 1 : 0;
    }
    const double fraction = static_cast<double>(out.hits) / static_cast<double>(out.trials);
    const double total = static_cast<double>(out.subsets);
    out.value = total * fraction;
    out.standard_error = total * std::sqrt(fraction * (1.0 - fraction) / static_cast<double>(out.trials));
    return out;
}

// ---------------------------------------------------------------------------

std::string format_colored_graph(const ColoredCompleteGraph& c)
{
    std::ostringstream out;
    out << "cg " << c.vertex_count() << ' ' << c.color_count() << '\n';
    for (int u = 0; u < c.vertex_count(); ++u)
        for (int v = u + 1; v < c.vertex_count(); ++v)
            if (const int col = c.color(u, v))
                out << u << ' ' << v << ' ' << col << '\n';
    return out.str();
}

ColoredCompleteGraph parse_colored_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::optional<ColoredCompleteGraph> c;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream fields(line);
        std::string extra;
        if (!c) {
            std::string tag;
            long long n = -1, r = -1;
            if (!(fields >> tag >> n >> r) || tag != "cg")
                throw ParseError(lineno, "expected header 'cg <n> <r>'");
            if (fields >> extra)
                throw ParseError(lineno, "trailing data after header");
            if (n < 0 || n > SimpleGraph::max_vertices)
                throw ParseError(lineno, "vertex count out of range");
            if (r < 1 || r > ColoredCompleteGraph::max_colors)
                throw ParseError(lineno, "colour count must lie in [1, 64]");
            c.emplace(static_cast<int>(n), static_cast<int>(r));
            continue;
        }
        long long u = -1, v = -1, col = -1;
        if (!(fields >> u >> v >> col))
            throw ParseError(lineno, "expected 'u v c'");
        if (fields >> extra)
            throw ParseError(lineno, "trailing data after pair");
        if (u < 0 || v < 0 || u >= c->vertex_count() || v >= c->vertex_count())
            throw ParseError(lineno, "vertex out of range");
        if (u >= v)
            throw ParseError(lineno, "pair must satisfy u < v");
        if (col < 1 || col > c->color_count())
            throw ParseError(lineno, "colour " + std::to_string(col) + " outside [1, " +
                                         std::to_string(c->color_count()) + "]");
        if (c->color(static_cast<int>(u), static_cast<int>(v)) != 0)
            throw ParseError(lineno, "duplicate pair " + std::to_string(u) + " " + std::to_string(v));
        c->set_color(static_cast<int>(u), static_cast<int>(v), static_cast<int>(col));
    }
    if (!c)
        throw ParseError(0, "missing 'cg <n> <r>' header");
    return std::move(*c);
}

}  // namespace ramsat
