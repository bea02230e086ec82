#include <ramsat/saturation.hpp>

#include <ramsat/combinatorics.hpp>
#include <ramsat/parallel.hpp>
#include <ramsat/rng.hpp>

#include <algorithm>
#include <atomic>

namespace ramsat {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::holds:
        return "holds";
    case Status::fails:
        return "fails";
    case Status::unknown:
        return "unknown";
    }
    return "unknown";
}

std::string_view to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::exhausted:
        return "exhausted";
    case SearchStatus::budget:
        return "budget";
    }
    return "budget";
}

namespace {

using Rows = std::vector<std::uint64_t>;

/// r^n, saturating.
std::uint64_t power(std::uint64_t r, int n)
{
    std::uint64_t out = 1;
    for (int i = 0; i < n; ++i) {
        if (out > saturated / r)
            return saturated;
        out *= r;
    }
    return out;
}

void require_pattern(const ColoredCompleteGraph& c, int k, const char* who, bool need_complete = true)
{
    if (need_complete && !c.is_complete())
        throw std::invalid_argument(std::string(who) + ": pattern is not a complete colouring");
    if (c.color_count() < 2)
        throw std::invalid_argument(std::string(who) + ": need at least two colours");
    if (k < 2)
        throw std::invalid_argument(std::string(who) + ": need k >= 2");
    if (c.vertex_count() > SimpleGraph::max_mask_vertices)
        throw BudgetExceeded(std::string(who) + ": pattern has more than 64 vertices");
}

std::vector<Rows> class_rows(const ColoredCompleteGraph& c)
{
    std::vector<Rows> rows;
    for (const auto& g : c.classes())
        rows.push_back(g.rows64());
    return rows;
}

/// Depth-first search for a vertex colouring that avoids a K_{k-1} in every
/// colour class restricted to its colour. Colours are 0-based internally.
class SurvivorSearch {
public:
    SurvivorSearch(std::vector<Rows> rows, int n, int k)
        : rows_(std::move(rows)), n_(n), r_(static_cast<int>(rows_.size())), need_(k - 2)
    {
    }

    /// Lexicographically first survivor extending `prefix`.
    std::optional<std::vector<int>> first(std::span<const int> prefix = {})
    {
        masks_.assign(static_cast<std::size_t>(r_), 0);
        chi_.assign(static_cast<std::size_t>(n_), 0);
        for (std::size_t v = 0; v < prefix.size(); ++v)
            if (!place(static_cast<int>(v), prefix[v]))
                return std::nullopt;
        if (dfs(static_cast<int>(prefix.size())))
            return chi_;
        return std::nullopt;
    }

    bool survives(std::span<const int> chi)
    {
        masks_.assign(static_cast<std::size_t>(r_), 0);
        for (int v = 0; v < n_; ++v)
            if (!place(v, chi[static_cast<std::size_t>(v)]))
                return false;
        return true;
    }

private:
    /// Puts v in class c unless that closes a K_{k-1} of colour c.
    bool place(int v, int c)
    {
        const auto& rows = rows_[static_cast<std::size_t>(c)];
        auto& mask = masks_[static_cast<std::size_t>(c)];
        if (detail::has_clique_mask(rows, rows[static_cast<std::size_t>(v)] & mask, need_))
            return false;
        mask |= std::uint64_t{1} << v;
        if (!chi_.empty())
            chi_[static_cast<std::size_t>(v)] = c;
        return true;
    }

    bool dfs(int v)
    {
        if (v == n_)
            return true;
        for (int c = 0; c < r_; ++c) {
            if (!place(v, c))
                continue;
            if (dfs(v + 1))
                return true;
            masks_[static_cast<std::size_t>(c)] &= ~(std::uint64_t{1} << v);
        }
        return false;
    }

    std::vector<Rows> rows_;
    int n_;
    int r_;
    int need_;
    std::vector<std::uint64_t> masks_;
    std::vector<int> chi_;
};

/// Number of colourings strictly before chi in lexicographic order, plus one.
std::uint64_t lex_position(std::span<const int> chi, int r)
{
    std::uint64_t pos = 0;
    for (int c : chi)
        pos = pos * static_cast<std::uint64_t>(r) + static_cast<std::uint64_t>(c);
    return pos + 1;
}

VertexColoringWitness one_based(std::vector<int> chi)
{
    for (auto& c : chi)
        ++c;
    return {std::move(chi)};
}

/// Lexicographically first surviving colouring, sharding on a prefix of
/// vertices when several threads are requested.
std::optional<std::vector<int>> first_survivor(const std::vector<Rows>& rows, int n, int k, unsigned threads)
{
    const int r = static_cast<int>(rows.size());
    if (threads <= 1 || n < 2) {
        SurvivorSearch search(rows, n, k);
        return search.first();
    }
    int depth = 0;
    std::uint64_t shards = 1;
    while (depth < n && shards < 16ull * threads) {
        shards *= static_cast<std::uint64_t>(r);
        ++depth;
    }
    return first_hit<std::vector<int>>(shards, threads, [&](std::size_t i) {
        std::vector<int> prefix(static_cast<std::size_t>(depth));
        for (int d = depth - 1; d >= 0; --d) {
            prefix[static_cast<std::size_t>(d)] = static_cast<int>(i % static_cast<std::size_t>(r));
            i /= static_cast<std::size_t>(r);
        }
        SurvivorSearch search(rows, n, k);
        return search.first(prefix);
    });
}

}  // namespace

bool coloring_survives(const ColoredCompleteGraph& c, int k, const VertexColoringWitness& chi)
{
    require_pattern(c, k, "coloring_survives", false);
    if (chi.colors.size() != static_cast<std::size_t>(c.vertex_count()))
        throw std::invalid_argument("coloring_survives: colouring has the wrong length");
    std::vector<int> zero_based;
    for (int col : chi.colors) {
        if (col < 1 || col > c.color_count())
            throw std::invalid_argument("coloring_survives: colour out of range");
        zero_based.push_back(col - 1);
    }
    SurvivorSearch search(class_rows(c), c.vertex_count(), k);
    return search.survives(zero_based);
}

Verdict is_semisaturated(const ColoredCompleteGraph& c, int k, CheckOptions options)
{
    require_pattern(c, k, "is_semisaturated");
    const int n = c.vertex_count();
    const int r = c.color_count();
    const std::uint64_t total = power(static_cast<std::uint64_t>(r), n);
    Verdict v;

    if (total > options.cap) {
        if (options.sample_trials == 0)
            throw BudgetExceeded("is_semisaturated: r^n = " + std::to_string(r) + "^" + std::to_string(n) +
                                 " exceeds the cap; enable sampling for evidence-only results");
        v.sampled = true;
        Rng rng(options.seed);
        SurvivorSearch search(class_rows(c), n, k);
        std::vector<int> chi(static_cast<std::size_t>(n));
        for (std::uint64_t trial = 0; trial < options.sample_trials; ++trial) {
            for (auto& col : chi)
                col = static_cast<int>(rng.below(static_cast<std::uint64_t>(r)));
            if (search.survives(chi)) {
                v.status = Status::fails;
                v.witness = one_based(chi);
                v.checked = trial + 1;
                return v;
            }
        }
        v.status = Status::unknown;
        v.checked = options.sample_trials;
        return v;
    }

    if (auto chi = first_survivor(class_rows(c), n, k, options.threads)) {
        v.status = Status::fails;
        v.checked = lex_position(*chi, r);
        v.witness = one_based(std::move(*chi));
        return v;
    }
    v.status = Status::holds;
    v.checked = total;
    return v;
}

Verdict is_semisaturated_direct(const ColoredCompleteGraph& c, int k, CheckOptions options)
{
    require_pattern(c, k, "is_semisaturated_direct");
    const int n = c.vertex_count();
    const int r = c.color_count();
    const std::uint64_t total = power(static_cast<std::uint64_t>(r), n);
    if (total > options.cap)
        throw BudgetExceeded("is_semisaturated_direct: r^n exceeds the cap");

    std::vector<int> edge_colors(static_cast<std::size_t>(n), 1);
    Verdict v;
    for (std::uint64_t index = 0; index < total; ++index) {
        // extension: vertex n joined to u with colour edge_colors[u]
        ColoredCompleteGraph ext(n + 1, r);
        for (int u = 0; u < n; ++u)
            for (int w = u + 1; w < n; ++w)
                ext.set_color(u, w, c.color(u, w));
        for (int u = 0; u < n; ++u)
            ext.set_color(u, n, edge_colors[static_cast<std::size_t>(u)]);

        bool created = false;
        for_each_combination_indices(n, k - 1, [&](std::span<const int> rest) {
            const int col = ext.color(rest.front(), n);
            for (std::size_t a = 0; a < rest.size(); ++a) {
                if (ext.color(rest[a], n) != col)
                    return true;
                for (std::size_t b = a + 1; b < rest.size(); ++b)
                    if (ext.color(rest[a], rest[b]) != col)
                        return true;
            }
            created = true;
            return false;
        });
        if (!created) {
            v.status = Status::fails;
            v.witness = VertexColoringWitness{edge_colors};
            v.checked = index + 1;
            return v;
        }
        // next assignment in lexicographic order
        for (int u = n - 1; u >= 0; --u) {
            auto& col = edge_colors[static_cast<std::size_t>(u)];
            if (col < r) {
                ++col;
                break;
            }
            col = 1;
        }
    }
    v.status = Status::holds;
    v.checked = total;
    return v;
}

Verdict check_observation(const ColoredCompleteGraph& c, int k, int r, CheckOptions options)
{
    if (r < 2)
        throw std::invalid_argument("check_observation: need r >= 2");
    if (c.color_count() < r)
        throw std::invalid_argument("check_observation: pattern has fewer than r classes");
    if (k < 2)
        throw std::invalid_argument("check_observation: need k >= 2");
    if (c.vertex_count() > SimpleGraph::max_mask_vertices)
        throw BudgetExceeded("check_observation: pattern has more than 64 vertices");

    const int n = c.vertex_count();
    const int size = (n + r - 1) / r;
    const std::uint64_t per_class = binomial(n, size);
    const std::uint64_t total = per_class > saturated / static_cast<std::uint64_t>(r)
                                    ? saturated
                                    : per_class * static_cast<std::uint64_t>(r);
    const auto rows = class_rows(c);
    Verdict v;

    if (total > std::min(options.cap, observation_cap)) {
        if (options.sample_trials == 0)
            throw BudgetExceeded("check_observation: " + std::to_string(r) + " * C(" + std::to_string(n) + ", " +
                                 std::to_string(size) + ") exceeds the cap; enable sampling for evidence-only results");
        v.sampled = true;
        Rng rng(options.seed);
        for (std::uint64_t trial = 0; trial < options.sample_trials; ++trial) {
            const int cls = static_cast<int>(rng.below(static_cast<std::uint64_t>(r)));
            std::uint64_t u = 0;
            for (int j = n - size; j < n; ++j) {
                const int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(j) + 1));
                u |= (u >> x) & 1 ? std::uint64_t{1} << j : std::uint64_t{1} << x;
            }
            if (!detail::has_clique_mask(rows[static_cast<std::size_t>(cls)], u, k - 1)) {
                v.status = Status::fails;
                v.witness = ObservationWitness{cls + 1, VertexSet::from_mask(u)};
                v.checked = trial + 1;
                return v;
            }
        }
        v.status = Status::unknown;
        v.checked = options.sample_trials;
        return v;
    }

    // shard i = (class, smallest element of U); shards are in witness order
    const std::size_t shards = static_cast<std::size_t>(r) * static_cast<std::size_t>(n);
    struct Hit {
        int cls;
        std::uint64_t subset;
    };
    auto hit = first_hit<Hit>(shards, options.threads, [&](std::size_t i) -> std::optional<Hit> {
        const int cls = static_cast<int>(i) / n;
        const int first = static_cast<int>(i) % n;
        const auto& cr = rows[static_cast<std::size_t>(cls)];
        std::optional<Hit> found;
        if (size == 0) {
            if (first == 0 && !detail::has_clique_mask(cr, 0, k - 1))
                found = Hit{cls, 0};
            return found;
        }
        for_each_combination(n, size - 1, [&](std::uint64_t u) {
            if (!detail::has_clique_mask(cr, u, k - 1)) {
                found = Hit{cls, u};
                return false;
            }
            return true;
        }, first + 1, std::uint64_t{1} << first);
        return found;
    });

    if (hit) {
        v.status = Status::fails;
        v.witness = ObservationWitness{hit->cls + 1, VertexSet::from_mask(hit->subset)};
        // position of the witness in (class, lexicographic subset) order
        std::uint64_t before = static_cast<std::uint64_t>(hit->cls) * per_class;
        for_each_combination(n, size, [&](std::uint64_t u) {
            ++before;
            return u != hit->subset;
        });
        v.checked = before;
        return v;
    }
    v.status = Status::holds;
    v.checked = total;
    return v;
}

std::optional<CliqueWitness> find_monochromatic_clique(const ColoredCompleteGraph& c, int k)
{
    if (k < 1)
        throw std::invalid_argument("find_monochromatic_clique: need k >= 1");
    if (k > c.vertex_count())
        return std::nullopt;
    for (int i = 1; i <= c.color_count(); ++i)
        if (auto clique = find_clique(c.color_class(i), k))
            return CliqueWitness{i, std::move(*clique)};
    return std::nullopt;
}

bool is_kkfree_pattern(const ColoredCompleteGraph& c, int k)
{
    return !find_monochromatic_clique(c, k).has_value();
}

Verdict is_saturated(const ColoredCompleteGraph& c, int k, CheckOptions options)
{
    require_pattern(c, k, "is_saturated");
    if (auto clique = find_monochromatic_clique(c, k)) {
        Verdict v;
        v.status = Status::fails;
        v.witness = std::move(*clique);
        v.checked = 1;
        return v;
    }
    return is_semisaturated(c, k, options);
}

std::int64_t ssat_lower_bound_formula(int r, int k)
{
    if (r < 2 || k < 2)
        throw std::invalid_argument("ssat_lower_bound_formula: need r, k >= 2");
    const std::int64_t R = r, K = k;
    return (R - 1) * K * K - (3 * R - 4) * K + (2 * R - 3);
}

std::int64_t ssat_recursion_floor(int r, int k)
{
    if (r < 2 || k < 2)
        throw std::invalid_argument("ssat_recursion_floor: need r, k >= 2");
    const std::int64_t R = r;
    const std::int64_t sum = R * (R + 1) / 2 - 1;  // 2 + 3 + ... + r
    return std::max((sum + 1) / 2, (R * R + 3) / 4);
}

// ---------------------------------------------------------------------------

namespace {

class PatternSearch {
public:
    PatternSearch(int r, int k, int n, std::uint64_t budget, std::atomic<std::uint64_t>& nodes,
                  std::atomic<bool>& out_of_budget)
        : r_(r), k_(k), n_(n), budget_(budget), nodes_(nodes), out_of_budget_(out_of_budget)
    {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                pairs_.emplace_back(u, v);
        colors_.assign(pairs_.size(), 0);
        class_rows_.assign(static_cast<std::size_t>(r), Rows(static_cast<std::size_t>(n), 0));
        open_rows_.assign(static_cast<std::size_t>(n), 0);
        for (auto [u, v] : pairs_)
            toggle(open_rows_, u, v);
    }

    std::size_t pair_count() const { return pairs_.size(); }

    /// Fixes the first colours; false if the prefix is not in canonical form
    /// or is cut off.
    bool apply_prefix(std::span<const int> prefix, int& used)
    {
        used = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            const int c = prefix[i];
            if (c > used + 1 || c > r_)
                return false;
            assign(i, c);
            used = std::max(used, c);
        }
        return true;
    }

    std::optional<ColoredCompleteGraph> run(std::size_t depth, int used)
    {
        if (dfs(depth, used))
            return pattern();
        return std::nullopt;
    }

private:
    static void toggle(Rows& rows, int u, int v)
    {
        rows[static_cast<std::size_t>(u)] ^= std::uint64_t{1} << v;
        rows[static_cast<std::size_t>(v)] ^= std::uint64_t{1} << u;
    }

    void assign(std::size_t i, int c)
    {
        auto [u, v] = pairs_[i];
        colors_[i] = c;
        toggle(open_rows_, u, v);
        toggle(class_rows_[static_cast<std::size_t>(c - 1)], u, v);
    }

    void unassign(std::size_t i)
    {
        auto [u, v] = pairs_[i];
        toggle(class_rows_[static_cast<std::size_t>(colors_[i] - 1)], u, v);
        toggle(open_rows_, u, v);
        colors_[i] = 0;
    }

    /// Some vertex colouring survives even with every open pair in every class.
    bool cut_off()
    {
        std::vector<Rows> optimistic = class_rows_;
        for (auto& rows : optimistic)
            for (int v = 0; v < n_; ++v)
                rows[static_cast<std::size_t>(v)] |= open_rows_[static_cast<std::size_t>(v)];
        SurvivorSearch search(std::move(optimistic), n_, k_);
        return search.first().has_value();
    }

    bool dfs(std::size_t i, int used)
    {
        if (out_of_budget_.load(std::memory_order_relaxed))
            return false;
        if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_) {
            out_of_budget_.store(true);
            return false;
        }
        if (cut_off())
            return false;
        if (i == pairs_.size())
            return true;
        for (int c = 1; c <= std::min(r_, used + 1); ++c) {
            assign(i, c);
            if (dfs(i + 1, std::max(used, c)))
                return true;
            unassign(i);
        }
        return false;
    }

    ColoredCompleteGraph pattern() const
    {
        ColoredCompleteGraph out(n_, r_);
        for (std::size_t i = 0; i < pairs_.size(); ++i)
            out.set_color(pairs_[i].first, pairs_[i].second, colors_[i]);
        return out;
    }

    int r_, k_, n_;
    std::uint64_t budget_;
    std::atomic<std::uint64_t>& nodes_;
    std::atomic<bool>& out_of_budget_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> colors_;
    std::vector<Rows> class_rows_;
    Rows open_rows_;
};

}  // namespace

SearchResult ssat_search(int r, int k, int n, PatternSearchOptions options)
{
    if (r < 2 || r > ColoredCompleteGraph::max_colors)
        throw std::invalid_argument("ssat_search: need 2 <= r <= 64");
    if (k < 2)
        throw std::invalid_argument("ssat_search: need k >= 2");
    if (n < 1 || n > SimpleGraph::max_mask_vertices)
        throw std::invalid_argument("ssat_search: need 1 <= n <= 64");

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    SearchResult result;

    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::optional<ColoredCompleteGraph> found;
    if (options.threads <= 1 || pairs < 2) {
        PatternSearch search(r, k, n, options.node_budget, nodes, out_of_budget);
        found = search.run(0, 0);
    } else {
        // canonical colour prefixes of the first few pairs, in search order
        std::size_t depth = 0;
        std::vector<std::vector<int>> prefixes{{}};
        while (depth < pairs && prefixes.size() < 16ull * options.threads) {
            std::vector<std::vector<int>> next;
            for (const auto& p : prefixes) {
                const int used = p.empty() ? 0 : *std::max_element(p.begin(), p.end());
                for (int c = 1; c <= std::min(r, used + 1); ++c) {
                    auto q = p;
                    q.push_back(c);
                    next.push_back(std::move(q));
                }
            }
            prefixes = std::move(next);
            ++depth;
        }
        found = first_hit<ColoredCompleteGraph>(prefixes.size(), options.threads, [&](std::size_t i) {
            PatternSearch search(r, k, n, options.node_budget, nodes, out_of_budget);
            int used = 0;
            search.apply_prefix(prefixes[i], used);
            return search.run(prefixes[i].size(), used);
        });
    }

    result.nodes = std::min(nodes.load(), options.node_budget);
    if (found) {
        result.status = SearchStatus::found;
        result.witness = std::move(found);
    } else {
        result.status = out_of_budget.load() ? SearchStatus::budget : SearchStatus::exhausted;
    }
    return result;
}

}  // namespace ramsat
