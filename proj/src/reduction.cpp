#include <ramsat/reduction.hpp>

#include <ramsat/combinatorics.hpp>
#include <ramsat/parallel.hpp>

#include <algorithm>
#include <sstream>

namespace ramsat {

KSubsetColoring::KSubsetColoring(int N, int k) : N_(N), k_(k), size_(binomial(N, k))
{
    if (N < 0 || k < 1)
        throw std::invalid_argument("KSubsetColoring: need N >= 0 and k >= 1");
    if (size_ > max_subsets)
        throw BudgetExceeded("KSubsetColoring: C(" + std::to_string(N) + ", " + std::to_string(k) +
                             ") exceeds 2^24 subsets");
    bits_.assign(size_, false);
}

KSubsetColoring KSubsetColoring::from_mask(int N, int k, std::uint64_t mask)
{
    KSubsetColoring chi(N, k);
    if (chi.size_ > 64)
        throw std::invalid_argument("KSubsetColoring::from_mask: more than 64 subsets");
    for (std::uint64_t i = 0; i < chi.size_; ++i)
        chi.bits_[i] = (mask >> i) & 1;
    return chi;
}

std::uint64_t KSubsetColoring::colex_rank_of(std::span<const int> subset)
{
    return colex_rank(subset);
}

// ---------------------------------------------------------------------------

namespace {

void require_mask_path(int N, const char* who)
{
    if (N > SimpleGraph::max_mask_vertices)
        throw BudgetExceeded(std::string(who) + ": ground set larger than 64");
}

/// Exhaustive test "every n-set contains a K_s and an independent t-set".
class BalanceTest {
public:
    BalanceTest(int N, int n, int s, int t) : s_(s), t_(t)
    {
        for_each_combination(N, n, [&](std::uint64_t m) {
            nsets_.push_back(m);
            return true;
        });
    }

    /// First unbalanced n-set, or 0 when every n-set is balanced (n >= 1).
    std::uint64_t first_unbalanced(std::span<const std::uint64_t> rows, std::span<const std::uint64_t> co_rows) const
    {
        for (auto u : nsets_)
            if (!detail::has_clique_mask(rows, u, s_) || !detail::has_clique_mask(co_rows, u, t_))
                return u;
        return 0;
    }

private:
    int s_, t_;
    std::vector<std::uint64_t> nsets_;
};

}  // namespace

std::optional<VertexSet> has_unbalanced_set(const SimpleGraph& g, int n, int s, int t)
{
    const int N = g.vertex_count();
    if (n < 1 || n > N || s < 1 || t < 1)
        throw std::invalid_argument("has_unbalanced_set: need 1 <= n <= vertex count and s, t >= 1");
    require_mask_path(N, "has_unbalanced_set");
    const auto rows = g.rows64();
    const auto co_rows = g.complement().rows64();
    std::optional<VertexSet> hit;
    for_each_combination(N, n, [&](std::uint64_t u) {
        if (!detail::has_clique_mask(rows, u, s) || !detail::has_clique_mask(co_rows, u, t)) {
            hit = VertexSet::from_mask(u);
            return false;
        }
        return true;
    });
    return hit;
}

GOracleResult g_oracle(int n, int s, int t, int n_max, unsigned threads)
{
    if (n < 1 || s < 1 || t < 1)
        throw std::invalid_argument("g_oracle: need n, s, t >= 1");
    if (n_max > g_oracle_max_vertices)
        throw BudgetExceeded("g_oracle: n_max " + std::to_string(n_max) + " exceeds the cap of " +
                             std::to_string(g_oracle_max_vertices));
    GOracleResult result;
    // Below n there are no n-sets, so the empty graph on n - 1 vertices
    // vacuously has every n-set balanced.
    if (n - 1 <= n_max)
        result.witness = SimpleGraph(n - 1);

    for (int N = n; N <= n_max; ++N) {
        const int pairs = N * (N - 1) / 2;
        std::vector<std::pair<int, int>> pair_list;
        for (int u = 0; u < N; ++u)
            for (int v = u + 1; v < N; ++v)
                pair_list.emplace_back(u, v);
        const int free_bits = (s == t && pairs > 0) ? pairs - 1 : pairs;
        const std::uint64_t total = std::uint64_t{1} << free_bits;
        const BalanceTest test(N, n, s, t);

        constexpr std::uint64_t chunk = 1 << 12;
        const std::uint64_t shards = (total + chunk - 1) / chunk;
        std::atomic<std::uint64_t> checked{0};
        auto hit = first_hit<std::uint64_t>(shards, threads, [&](std::size_t shard) -> std::optional<std::uint64_t> {
            std::vector<std::uint64_t> rows(static_cast<std::size_t>(N)), co_rows(static_cast<std::size_t>(N));
            const std::uint64_t lo = shard * chunk, hi = std::min(total, lo + chunk);
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                std::fill(rows.begin(), rows.end(), 0);
                for (int b = 0; b < pairs; ++b)
                    if ((mask >> b) & 1) {
                        auto [u, v] = pair_list[static_cast<std::size_t>(b)];
                        rows[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
                        rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
                    }
                for (int v = 0; v < N; ++v)
                    co_rows[static_cast<std::size_t>(v)] =
                        ~rows[static_cast<std::size_t>(v)] & low_bits(N) & ~(std::uint64_t{1} << v);
                if (test.first_unbalanced(rows, co_rows) == 0) {
                    checked.fetch_add(mask - lo + 1);
                    return mask;
                }
            }
            checked.fetch_add(hi - lo);
            return std::nullopt;
        });
        result.graphs_checked += checked.load();
        if (!hit) {
            result.value = N;
            return result;
        }
        result.witness = SimpleGraph::from_pair_mask(N, *hit);
    }
    return result;
}

// ---------------------------------------------------------------------------

namespace {

/// Precomputed incidences between k-subsets, n-sets and their s- and
/// t-subsets, all identified by colex rank.
class GoodSetChecker {
public:
    GoodSetChecker(int N, const RamseyParams& p) : p_(p)
    {
        for (std::uint64_t kr = 0; kr < binomial(N, p.k); ++kr) {
            const auto ks = colex_unrank(kr, p.k);
            std::uint64_t mask = 0;
            for (int v : ks)
                mask |= std::uint64_t{1} << v;
            k_s_.push_back(sub_ranks(mask, p.s));
            k_t_.push_back(sub_ranks(mask, p.t));
        }
        s_count_ = binomial(N, p.s);
        t_count_ = binomial(N, p.t);
        for_each_combination(N, p.n, [&](std::uint64_t x) {
            nsets_.push_back(x);
            n_s_.push_back(sub_ranks(x, p.s));
            n_t_.push_back(sub_ranks(x, p.t));
            return true;
        });
    }

    template <class IsBlue>
    std::optional<std::uint64_t> first_good(IsBlue&& is_blue) const
    {
        std::vector<char> red_cover(s_count_, 0), blue_cover(t_count_, 0);
        for (std::size_t kr = 0; kr < k_s_.size(); ++kr) {
            if (is_blue(kr))
                for (auto r : k_t_[kr])
                    blue_cover[r] = 1;
            else
                for (auto r : k_s_[kr])
                    red_cover[r] = 1;
        }
        for (std::size_t i = 0; i < nsets_.size(); ++i) {
            const bool red_side =
                std::all_of(n_s_[i].begin(), n_s_[i].end(), [&](auto r) { return red_cover[r] != 0; });
            if (red_side ||
                std::all_of(n_t_[i].begin(), n_t_[i].end(), [&](auto r) { return blue_cover[r] != 0; }))
                return nsets_[i];
        }
        return std::nullopt;
    }

private:
    static std::vector<std::uint32_t> sub_ranks(std::uint64_t set, int size)
    {
        const auto members = mask_members(set);
        std::vector<std::uint32_t> out;
        for_each_combination(static_cast<int>(members.size()), size, [&](std::uint64_t pos) {
            std::uint64_t m = 0;
            for (int i : mask_members(pos))
                m |= std::uint64_t{1} << members[static_cast<std::size_t>(i)];
            out.push_back(static_cast<std::uint32_t>(colex_rank_mask(m)));
            return true;
        });
        return out;
    }

    RamseyParams p_;
    std::uint64_t s_count_ = 0, t_count_ = 0;
    std::vector<std::vector<std::uint32_t>> k_s_, k_t_, n_s_, n_t_;
    std::vector<std::uint64_t> nsets_;
};

void check_ramsey_params(const RamseyParams& p, int N, const char* who)
{
    if (p.s < 1 || p.t < 1 || p.s > p.k || p.t > p.k || p.k > p.n || p.n > N)
        throw std::invalid_argument(std::string(who) + ": need s, t <= k <= n <= N");
}

}  // namespace

std::optional<VertexSet> good_set_witness(const KSubsetColoring& chi, const RamseyParams& params)
{
    RamseyParams p = params;
    p.k = chi.k();
    const int N = chi.ground_size();
    check_ramsey_params(p, N, "good_set_witness");
    require_mask_path(N, "good_set_witness");
    const std::uint64_t work = binomial(N, p.n) * (binomial(p.n, p.s) + binomial(p.n, p.t)) +
                               chi.size() * (binomial(p.k, p.s) + binomial(p.k, p.t));
    if (work > 50'000'000)
        throw BudgetExceeded("good_set_witness: instance too large for exhaustive search");
    const GoodSetChecker checker(N, p);
    if (auto x = checker.first_good([&](std::size_t r) { return chi.is_blue(r); }))
        return VertexSet::from_mask(*x);
    return std::nullopt;
}

FOracleResult f_oracle(const RamseyParams& params, int n_max, unsigned threads)
{
    const RamseyParams& p = params;
    if (p.s < 1 || p.t < 1 || p.s > p.k || p.t > p.k || p.k > p.n)
        throw std::invalid_argument("f_oracle: need s, t <= k <= n");
    if (binomial(n_max, p.k) > f_oracle_max_subsets)
        throw BudgetExceeded("f_oracle: C(n_max, k) = " + std::to_string(binomial(n_max, p.k)) + " exceeds 20");

    FOracleResult result;
    if (p.n - 1 <= n_max && p.n - 1 >= 0)
        result.witness = KSubsetColoring(p.n - 1, p.k);

    for (int N = p.n; N <= n_max; ++N) {
        const GoodSetChecker checker(N, p);
        const auto ksets = binomial(N, p.k);
        const std::uint64_t total = std::uint64_t{1} << ksets;
        constexpr std::uint64_t chunk = 1 << 10;
        const std::uint64_t shards = (total + chunk - 1) / chunk;
        std::atomic<std::uint64_t> checked{0};
        auto hit = first_hit<std::uint64_t>(shards, threads, [&](std::size_t shard) -> std::optional<std::uint64_t> {
            const std::uint64_t lo = shard * chunk, hi = std::min(total, lo + chunk);
            for (std::uint64_t mask = lo; mask < hi; ++mask)
                if (!checker.first_good([mask](std::size_t r) { return ((mask >> r) & 1) != 0; })) {
                    checked.fetch_add(mask - lo + 1);
                    return mask;
                }
            checked.fetch_add(hi - lo);
            return std::nullopt;
        });
        result.colorings_checked += checked.load();
        if (!hit) {
            result.value = N;
            return result;
        }
        result.witness = KSubsetColoring::from_mask(N, p.k, *hit);
    }
    return result;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t pair_index(int N, int u, int v)
{
    return static_cast<std::size_t>(u) * (2 * static_cast<std::size_t>(N) - u - 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

/// Marks, for every `size`-subset, whether some k-superset has colour `blue`.
std::vector<char> cover_flags(const KSubsetColoring& chi, int size, bool blue)
{
    std::vector<char> cover(binomial(chi.ground_size(), size), 0);
    std::uint64_t rank = 0;
    std::vector<int> sub(static_cast<std::size_t>(size));
    // colex order of k-subsets matches rank order
    for (rank = 0; rank < chi.size(); ++rank) {
        if (chi.is_blue(rank) != blue)
            continue;
        const auto kset = colex_unrank(rank, chi.k());
        for_each_combination_indices(chi.k(), size, [&](std::span<const int> pos) {
            for (std::size_t i = 0; i < pos.size(); ++i)
                sub[i] = kset[static_cast<std::size_t>(pos[i])];
            cover[colex_rank(sub)] = 1;
            return true;
        });
    }
    return cover;
}

}  // namespace

std::vector<PairClass> classify_pairs(const KSubsetColoring& chi, int s, int t)
{
    const int N = chi.ground_size();
    if (s < 2 || t < 2 || chi.k() != s + t - 2)
        throw std::invalid_argument("classify_pairs: need s, t >= 2 and k = s + t - 2");
    if (N < chi.k())
        throw std::invalid_argument("classify_pairs: ground set smaller than k");
    const auto red_cover = cover_flags(chi, s, false);
    const auto blue_cover = cover_flags(chi, t, true);

    const std::size_t pairs = static_cast<std::size_t>(N) * (N - 1) / 2;
    std::vector<char> edge(pairs, 0), nonedge(pairs, 0);
    auto mark = [&](std::span<const int> set, std::vector<char>& flags) {
        for (std::size_t a = 0; a < set.size(); ++a)
            for (std::size_t b = a + 1; b < set.size(); ++b)
                flags[pair_index(N, set[a], set[b])] = 1;
    };
    for_each_combination_indices(N, s, [&](std::span<const int> S) {
        if (!red_cover[colex_rank(S)])
            mark(S, edge);
        return true;
    });
    for_each_combination_indices(N, t, [&](std::span<const int> T) {
        if (!blue_cover[colex_rank(T)])
            mark(T, nonedge);
        return true;
    });

    std::vector<PairClass> out(pairs, PairClass::free);
    for (std::size_t i = 0; i < pairs; ++i) {
        if (edge[i] && nonedge[i])
            throw std::logic_error("classify_pairs: pair forced to be both an edge and a non-edge");
        if (edge[i])
            out[i] = PairClass::forced_edge;
        else if (nonedge[i])
            out[i] = PairClass::forced_nonedge;
    }
    return out;
}

SimpleGraph coloring_to_graph(const KSubsetColoring& chi, int s, int t, TieBreak tie_break)
{
    const auto classes = classify_pairs(chi, s, t);
    const int N = chi.ground_size();
    SimpleGraph g(N);
    std::size_t i = 0;
    for (int u = 0; u < N; ++u)
        for (int v = u + 1; v < N; ++v, ++i)
            if (classes[i] == PairClass::forced_edge ||
                (classes[i] == PairClass::free && tie_break == TieBreak::edge))
                g.add_edge(u, v);
    return g;
}

KSubsetColoring graph_to_coloring(const SimpleGraph& g, int s, int t, DefaultColor fallback)
{
    if (s < 2 || t < 2)
        throw std::invalid_argument("graph_to_coloring: need s, t >= 2");
    const int k = s + t - 2;
    const int N = g.vertex_count();
    if (k > N)
        throw std::invalid_argument("graph_to_coloring: k = s + t - 2 exceeds the vertex count");
    KSubsetColoring chi(N, k);
    const SimpleGraph co = g.complement();
    const bool narrow = N <= SimpleGraph::max_mask_vertices;
    const auto rows = narrow ? g.rows64() : std::vector<std::uint64_t>{};
    const auto co_rows = narrow ? co.rows64() : std::vector<std::uint64_t>{};

    for (std::uint64_t rank = 0; rank < chi.size(); ++rank) {
        const auto kset = colex_unrank(rank, k);
        bool blue = false, red = false;
        if (narrow) {
            std::uint64_t m = 0;
            for (int v : kset)
                m |= std::uint64_t{1} << v;
            blue = detail::has_clique_mask(rows, m, s);
            red = detail::has_clique_mask(co_rows, m, t);
        } else {
            const VertexSet K(kset);
            blue = find_clique_within(g, K, s).has_value();
            red = find_clique_within(co, K, t).has_value();
        }
        if (blue && red)
            throw std::logic_error("graph_to_coloring: k-subset hosts both a K_s and an independent t-set");
        chi.set_blue(rank, blue || (!red && fallback == DefaultColor::blue));
    }
    return chi;
}

// ---------------------------------------------------------------------------

std::string format_ksubset_coloring(const KSubsetColoring& chi)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out = "ksc " + std::to_string(chi.ground_size()) + " " + std::to_string(chi.k()) + "\n";
    for (std::uint64_t base = 0; base < chi.size(); base += 4) {
        int nibble = 0;
        for (std::uint64_t j = 0; j < 4; ++j)
            if (base + j < chi.size() && chi.is_blue(base + j))
                nibble |= 8 >> j;
        out += digits[nibble];
    }
    out += '\n';
    return out;
}

KSubsetColoring parse_ksubset_coloring(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::optional<KSubsetColoring> chi;
    std::string hex;
    int hex_line = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream fields(line);
        if (!chi) {
            std::string tag, extra;
            long long N = -1, k = -1;
            if (!(fields >> tag >> N >> k) || tag != "ksc")
                throw ParseError(lineno, "expected header 'ksc <N> <k>'");
            if (fields >> extra)
                throw ParseError(lineno, "trailing data after header");
            if (N < 0 || N > 1 << 20 || k < 1 || k > 1 << 20)
                throw ParseError(lineno, "N or k out of range");
            try {
                chi.emplace(static_cast<int>(N), static_cast<int>(k));
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            continue;
        }
        if (hex_line)
            throw ParseError(lineno, "unexpected data after bitstring");
        fields >> hex;
        std::string extra;
        if (fields >> extra)
            throw ParseError(lineno, "whitespace inside bitstring");
        hex_line = lineno;
    }
    if (!chi)
        throw ParseError(0, "missing 'ksc <N> <k>' header");
    const std::uint64_t want = (chi->size() + 3) / 4;
    if (hex.size() != want)
        throw ParseError(hex_line, "expected " + std::to_string(want) + " hex digits, found " +
                                       std::to_string(hex.size()));
    for (std::size_t i = 0; i < hex.size(); ++i) {
        const char c = hex[i];
        int nibble = 0;
        if (c >= '0' && c <= '9')
            nibble = c - '0';
        else if (c >= 'a' && c <= 'f')
            nibble = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            nibble = c - 'A' + 10;
        else
            throw ParseError(hex_line, std::string("invalid hex digit '") + c + "'");
        for (std::uint64_t j = 0; j < 4; ++j) {
            const bool bit = (nibble & (8 >> j)) != 0;
            const std::uint64_t rank = i * 4 + j;
            if (rank < chi->size())
                chi->set_blue(rank, bit);
            else if (bit)
                throw ParseError(hex_line, "non-zero padding bit");
        }
    }
    return std::move(*chi);
}

}  // namespace ramsat
