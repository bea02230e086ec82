#include <ramsat/graph.hpp>

#include <ramsat/combinatorics.hpp>
#include <ramsat/parallel.hpp>

#include <algorithm>
#include <sstream>

namespace ramsat {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("VertexSet: duplicate vertex");
    if (!members_.empty() && members_.front() < 0)
        throw std::invalid_argument("VertexSet: negative vertex");
}

VertexSet VertexSet::from_mask(std::uint64_t mask)
{
    VertexSet s;
    s.members_ = mask_members(mask);
    return s;
}

VertexSet VertexSet::range(int n)
{
    VertexSet s;
    s.members_.resize(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i)
        s.members_[static_cast<std::size_t>(i)] = i;
    return s;
}

bool VertexSet::contains(int v) const
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t VertexSet::mask() const
{
    std::uint64_t m = 0;
    for (int v : members_) {
        if (v >= 64)
            throw std::out_of_range("VertexSet::mask: vertex >= 64");
        m |= std::uint64_t{1} << v;
    }
    return m;
}

std::string to_string(const VertexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------

SimpleGraph::SimpleGraph(int n) : n_(n), words_((n + 63) / 64)
{
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("SimpleGraph: vertex count " + std::to_string(n) + " outside [0, " +
                                    std::to_string(max_vertices) + "]");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

SimpleGraph SimpleGraph::complete(int n)
{
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::cycle(int n)
{
    SimpleGraph g(n);
    if (n >= 3)
        for (int v = 0; v < n; ++v)
            g.add_edge(v, (v + 1) % n);
    return g;
}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const std::pair<int, int>> edges)
{
    SimpleGraph g(n);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

SimpleGraph SimpleGraph::from_pair_mask(int n, std::uint64_t mask)
{
    SimpleGraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (bit < 64 && ((mask >> bit) & 1))
                g.add_edge(u, v);
    return g;
}

void SimpleGraph::check_vertex(int v) const
{
    if (v < 0 || v >= n_)
        throw std::out_of_range("SimpleGraph: vertex " + std::to_string(v) + " out of range");
}

void SimpleGraph::check_mask_path() const
{
    if (n_ > max_mask_vertices)
        throw BudgetExceeded("graph has " + std::to_string(n_) + " vertices; this operation is capped at " +
                             std::to_string(max_mask_vertices));
}

void SimpleGraph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("SimpleGraph: self-loop at " + std::to_string(u));
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void SimpleGraph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    bits_[static_cast<std::size_t>(u) * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

bool SimpleGraph::has_edge(int u, int v) const
{
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int SimpleGraph::degree(int v) const
{
    check_vertex(v);
    int d = 0;
    for (auto w : row(v))
        d += popcount(w);
    return d;
}

std::int64_t SimpleGraph::edge_count() const
{
    std::int64_t twice = 0;
    for (auto w : bits_)
        twice += popcount(w);
    return twice / 2;
}

std::uint64_t SimpleGraph::row64(int v) const
{
    check_mask_path();
    check_vertex(v);
    return bits_[static_cast<std::size_t>(v)];
}

std::vector<std::uint64_t> SimpleGraph::rows64() const
{
    check_mask_path();
    return bits_;
}

SimpleGraph SimpleGraph::complement() const
{
    SimpleGraph c(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v))
                c.add_edge(u, v);
    return c;
}

SimpleGraph SimpleGraph::induced(const VertexSet& vertices) const
{
    if (!vertices.fits(n_))
        throw std::out_of_range("SimpleGraph::induced: vertex out of range");
    const int m = static_cast<int>(vertices.size());
    SimpleGraph h(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (has_edge(vertices[i], vertices[j]))
                h.add_edge(i, j);
    return h;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v))
                out.emplace_back(u, v);
    return out;
}

// ---------------------------------------------------------------------------

namespace detail {

namespace {

int greedy_colour_count(std::span<const std::uint64_t> rows, std::uint64_t set, int stop_at)
{
    int colours = 0;
    while (set) {
        ++colours;
        if (colours >= stop_at)
            return colours;
        std::uint64_t open = set;
        while (open) {
            const int v = lowest_bit(open);
            open &= ~(std::uint64_t{1} << v);
            set &= ~(std::uint64_t{1} << v);
            open &= ~rows[static_cast<std::size_t>(v)];
        }
    }
    return colours;
}

bool extend_mask(std::span<const std::uint64_t> rows, std::uint64_t chosen, std::uint64_t cand, int need,
                 std::uint64_t& out)
{
    if (need == 0) {
        out = chosen;
        return true;
    }
    if (popcount(cand) < need)
        return false;
    if (need >= 3 && greedy_colour_count(rows, cand, need) < need)
        return false;
    while (cand) {
        if (popcount(cand) < need)
            return false;
        const int v = lowest_bit(cand);
        cand &= cand - 1;
        if (extend_mask(rows, chosen | (std::uint64_t{1} << v), cand & rows[static_cast<std::size_t>(v)],
                        need - 1, out))
            return true;
    }
    return false;
}

}  // namespace

bool find_clique_mask(std::span<const std::uint64_t> rows, std::uint64_t candidates, int m, std::uint64_t& out)
{
    return extend_mask(rows, 0, candidates, m, out);
}

}  // namespace detail

namespace {

// Multi-word variant of the same search, used when n > 64.
class WideCliqueSearch {
public:
    WideCliqueSearch(const SimpleGraph& g, int m) : g_(g), words_(static_cast<std::size_t>(g.words())), m_(m)
    {
        scratch_.assign(words_ * static_cast<std::size_t>(m + 1), 0);
        chosen_.reserve(static_cast<std::size_t>(m));
    }

    bool run_from_root(std::span<const std::uint64_t> candidates, int root, std::vector<int>& out)
    {
        chosen_.assign(1, root);
        auto level = slot(1);
        auto r = g_.row(root);
        for (std::size_t w = 0; w < words_; ++w)
            level[w] = candidates[w] & r[w];
        clear_upto(level, root);
        if (!extend(1)) {
            return false;
        }
        out = chosen_;
        return true;
    }

    bool run(std::span<const std::uint64_t> candidates, std::vector<int>& out)
    {
        chosen_.clear();
        std::copy(candidates.begin(), candidates.end(), slot(0).begin());
        if (!extend(0))
            return false;
        out = chosen_;
        return true;
    }

private:
    std::span<std::uint64_t> slot(int depth) { return {scratch_.data() + depth * words_, words_}; }

    static void clear_upto(std::span<std::uint64_t> set, int v)
    {
        for (int w = 0; w <= v / 64; ++w) {
            if (w < v / 64)
                set[static_cast<std::size_t>(w)] = 0;
            else
                set[static_cast<std::size_t>(w)] &= ~low_bits((v % 64) + 1);
        }
    }

    static int count(std::span<const std::uint64_t> set)
    {
        int c = 0;
        for (auto w : set)
            c += popcount(w);
        return c;
    }

    int colour_bound(std::span<const std::uint64_t> set, int stop_at)
    {
        std::vector<std::uint64_t> rest(set.begin(), set.end());
        std::vector<std::uint64_t> open(words_);
        int colours = 0;
        while (count(rest) > 0) {
            if (++colours >= stop_at)
                return colours;
            open = rest;
            for (std::size_t w = 0; w < words_; ++w) {
                while (open[w]) {
                    const int v = static_cast<int>(w * 64) + lowest_bit(open[w]);
                    open[w] &= open[w] - 1;
                    rest[w] &= ~(std::uint64_t{1} << (v % 64));
                    auto r = g_.row(v);
                    for (std::size_t x = w; x < words_; ++x)
                        open[x] &= ~r[x];
                }
            }
        }
        return colours;
    }

    bool extend(int depth)
    {
        const int need = m_ - static_cast<int>(chosen_.size());
        if (need == 0)
            return true;
        auto cand = slot(depth);
        if (count(cand) < need)
            return false;
        if (need >= 3 && colour_bound(cand, need) < need)
            return false;
        for (std::size_t w = 0; w < words_; ++w) {
            while (cand[w]) {
                if (count(cand) < need)
                    return false;
                const int v = static_cast<int>(w * 64) + lowest_bit(cand[w]);
                cand[w] &= cand[w] - 1;
                auto next = slot(depth + 1);
                auto r = g_.row(v);
                for (std::size_t x = 0; x < words_; ++x)
                    next[x] = cand[x] & r[x];
                chosen_.push_back(v);
                if (extend(depth + 1))
                    return true;
                chosen_.pop_back();
            }
        }
        return false;
    }

    const SimpleGraph& g_;
    std::size_t words_;
    int m_;
    std::vector<std::uint64_t> scratch_;
    std::vector<int> chosen_;
};

std::vector<std::uint64_t> candidate_words(const SimpleGraph& g, const VertexSet& candidates)
{
    std::vector<std::uint64_t> words(static_cast<std::size_t>(g.words()), 0);
    for (int v : candidates)
        words[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
    return words;
}

}  // namespace

std::optional<VertexSet> find_clique_within(const SimpleGraph& g, const VertexSet& candidates, int m,
                                            SearchOptions options)
{
    if (!candidates.fits(g.vertex_count()))
        throw std::out_of_range("find_clique: candidate vertex out of range");
    if (m < 0)
        throw std::invalid_argument("find_clique: negative clique size");
    if (m == 0)
        return VertexSet{};
    if (static_cast<std::size_t>(m) > candidates.size())
        return std::nullopt;

    const unsigned threads = std::max(1u, options.threads);
    if (g.vertex_count() <= SimpleGraph::max_mask_vertices) {
        const auto rows = g.rows64();
        const std::uint64_t cand = candidates.mask();
        if (threads == 1) {
            std::uint64_t out = 0;
            if (!detail::find_clique_mask(rows, cand, m, out))
                return std::nullopt;
            return VertexSet::from_mask(out);
        }
        auto hit = first_hit<std::uint64_t>(candidates.size(), threads, [&](std::size_t i) -> std::optional<std::uint64_t> {
            const int root = candidates[i];
            const std::uint64_t rest = cand & rows[static_cast<std::size_t>(root)] & ~low_bits(root + 1);
            std::uint64_t out = 0;
            if (detail::find_clique_mask(rows, rest, m - 1, out))
                return out | (std::uint64_t{1} << root);
            return std::nullopt;
        });
        if (!hit)
            return std::nullopt;
        return VertexSet::from_mask(*hit);
    }

    const auto cand = candidate_words(g, candidates);
    auto hit = first_hit<std::vector<int>>(candidates.size(), threads, [&](std::size_t i) -> std::optional<std::vector<int>> {
        WideCliqueSearch search(g, m);
        std::vector<int> out;
        if (search.run_from_root(cand, candidates[i], out))
            return out;
        return std::nullopt;
    });
    if (!hit)
        return std::nullopt;
    return VertexSet(std::move(*hit));
}

std::optional<VertexSet> find_clique(const SimpleGraph& g, int m, SearchOptions options)
{
    if (m < 1 || m > g.vertex_count())
        throw std::invalid_argument("find_clique: size " + std::to_string(m) + " outside [1, " +
                                    std::to_string(g.vertex_count()) + "]");
    return find_clique_within(g, VertexSet::range(g.vertex_count()), m, options);
}

std::optional<VertexSet> find_independent_set_within(const SimpleGraph& g, const VertexSet& candidates, int m,
                                                     SearchOptions options)
{
    return find_clique_within(g.complement(), candidates, m, options);
}

std::optional<VertexSet> find_independent_set(const SimpleGraph& g, int m, SearchOptions options)
{
    return find_clique(g.complement(), m, options);
}

std::int64_t turan_bound(std::int64_t n, std::int64_t edges)
{
    if (n <= 0)
        return 0;
    const std::int64_t den = n + 2 * edges;
    return (n * n + den - 1) / den;
}

VertexSet turan_independent_set(const SimpleGraph& g)
{
    const int n = g.vertex_count();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        deg[static_cast<std::size_t>(v)] = g.degree(v);

    std::vector<int> chosen;
    for (;;) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (alive[static_cast<std::size_t>(v)] &&
                (best < 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(best)]))
                best = v;
        if (best < 0)
            break;
        chosen.push_back(best);
        std::vector<int> gone{best};
        for (int u = 0; u < n; ++u)
            if (alive[static_cast<std::size_t>(u)] && u != best && g.has_edge(u, best))
                gone.push_back(u);
        for (int v : gone)
            alive[static_cast<std::size_t>(v)] = 0;
        for (int v : gone)
            for (int u = 0; u < n; ++u)
                if (alive[static_cast<std::size_t>(u)] && g.has_edge(u, v))
                    --deg[static_cast<std::size_t>(u)];
    }
    return VertexSet(std::move(chosen));
}

std::optional<TaggedSet> ramsey_extract(const SimpleGraph& g, int a, int b, const std::optional<VertexSet>& within)
{
    if (a < 1 || b < 1)
        throw std::invalid_argument("ramsey_extract: sizes must be positive");
    if (g.vertex_count() < 1)
        throw std::invalid_argument("ramsey_extract: empty graph");
    const VertexSet pool = within ? *within : VertexSet::range(g.vertex_count());
    if (auto c = find_clique_within(g, pool, a))
        return TaggedSet{Homogeneous::clique, std::move(*c)};
    if (auto i = find_independent_set_within(g, pool, b))
        return TaggedSet{Homogeneous::independent, std::move(*i)};
    return std::nullopt;
}

HomogeneousCover extract_homogeneous_cover(const SimpleGraph& g, int a, int b, int rounds)
{
    if (rounds < 1)
        throw std::invalid_argument("extract_homogeneous_cover: rounds must be positive");
    HomogeneousCover cover;
    const VertexSet all = VertexSet::range(g.vertex_count());
    std::vector<int> remaining(all.begin(), all.end());
    for (int round = 0; round < rounds; ++round) {
        if (remaining.empty()) {
            cover.stopped_early = true;
            break;
        }
        auto hit = ramsey_extract(g, a, b, VertexSet(remaining));
        if (!hit) {
            cover.stopped_early = true;
            break;
        }
        std::vector<int> rest;
        std::set_difference(remaining.begin(), remaining.end(), hit->members.begin(), hit->members.end(),
                            std::back_inserter(rest));
        remaining = std::move(rest);
        if (hit->kind == Homogeneous::clique)
            cover.cliques.push_back(std::move(hit->members));
        else
            cover.independent_sets.push_back(std::move(hit->members));
        ++cover.rounds_completed;
    }
    return cover;
}

// ---------------------------------------------------------------------------

std::string format_graph(const SimpleGraph& g)
{
    std::ostringstream out;
    out << "g " << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

SimpleGraph parse_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::optional<SimpleGraph> g;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream fields(line);
        if (!g) {
            std::string tag;
            long long n = -1;
            if (!(fields >> tag >> n) || tag != "g")
                throw ParseError(lineno, "expected header 'g <n>'");
            std::string extra;
            if (fields >> extra)
                throw ParseError(lineno, "trailing data after header");
            if (n < 0 || n > SimpleGraph::max_vertices)
                throw ParseError(lineno, "vertex count out of range");
            g.emplace(static_cast<int>(n));
            continue;
        }
        long long u = -1, v = -1;
        if (!(fields >> u >> v))
            throw ParseError(lineno, "expected 'u v'");
        std::string extra;
        if (fields >> extra)
            throw ParseError(lineno, "trailing data after edge");
        if (u < 0 || v < 0 || u >= g->vertex_count() || v >= g->vertex_count())
            throw ParseError(lineno, "vertex out of range");
        if (u >= v)
            throw ParseError(lineno, "edge must satisfy u < v");
        if (g->has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(lineno, "duplicate edge");
        g->add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!g)
        throw ParseError(0, "missing 'g <n>' header");
    return std::move(*g);
}

}  // namespace ramsat
