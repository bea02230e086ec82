#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramsat {

/// Malformed text input. `line()` is 1-based; 0 means "whole input".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Sorted, duplicate-free list of vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> members);

    static VertexSet from_mask(std::uint64_t mask);
    static VertexSet range(int n);

    std::span<const int> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(int v) const;
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    int operator[](std::size_t i) const { return members_[i]; }

    /// Requires every member < 64.
    std::uint64_t mask() const;
    bool fits(int n) const { return members_.empty() || (members_.front() >= 0 && members_.back() < n); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<int> members_;
};

std::string to_string(const VertexSet& s);

/// Undirected simple graph with one fixed-width bit row per vertex.
class SimpleGraph {
public:
    static constexpr int max_vertices = 4096;
    /// Cap for paths that enumerate subsets as 64-bit masks.
    static constexpr int max_mask_vertices = 64;

    explicit SimpleGraph(int n = 0);

    static SimpleGraph complete(int n);
    static SimpleGraph cycle(int n);
    static SimpleGraph from_edges(int n, std::span<const std::pair<int, int>> edges);
    /// Edge i of the mask is the i-th pair (u, v), u < v, in lexicographic order.
    static SimpleGraph from_pair_mask(int n, std::uint64_t mask);

    int vertex_count() const noexcept { return n_; }
    int words() const noexcept { return words_; }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::int64_t edge_count() const;

    std::span<const std::uint64_t> row(int v) const
    {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }
    /// Single-word adjacency row; requires vertex_count() <= 64.
    std::uint64_t row64(int v) const;
    /// All single-word rows; requires vertex_count() <= 64.
    std::vector<std::uint64_t> rows64() const;

    SimpleGraph complement() const;
    SimpleGraph induced(const VertexSet& vertices) const;
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    void check_vertex(int v) const;
    void check_mask_path() const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

struct SearchOptions {
    /// Worker threads for root-level sharding. Results are the
    /// lexicographically smallest witness for any thread count.
    unsigned threads = 1;
};

/// Lexicographically smallest m-clique, or nullopt. Requires 1 <= m <= n.
std::optional<VertexSet> find_clique(const SimpleGraph& g, int m, SearchOptions options = {});
/// As find_clique, restricted to `candidates`; any m >= 0 accepted.
std::optional<VertexSet> find_clique_within(const SimpleGraph& g, const VertexSet& candidates, int m,
                                            SearchOptions options = {});
/// find_clique on the complement graph.
std::optional<VertexSet> find_independent_set(const SimpleGraph& g, int m, SearchOptions options = {});
std::optional<VertexSet> find_independent_set_within(const SimpleGraph& g, const VertexSet& candidates, int m,
                                                     SearchOptions options = {});

/// ceil(n^2 / (n + 2e)).
std::int64_t turan_bound(std::int64_t n, std::int64_t edges);

/// Greedy minimum-degree independent set; its size is at least
/// sum 1/(d(v)+1) >= turan_bound(n, e).
VertexSet turan_independent_set(const SimpleGraph& g);

enum class Homogeneous { clique, independent };

struct TaggedSet {
    Homogeneous kind;
    VertexSet members;
    friend bool operator==(const TaggedSet&, const TaggedSet&) = default;
};

/// A clique of size a, else an independent set of size b, inside `within`
/// (all vertices when omitted). nullopt when neither exists, which can only
/// happen when |within| < C(a+b, a).
std::optional<TaggedSet> ramsey_extract(const SimpleGraph& g, int a, int b,
                                        const std::optional<VertexSet>& within = std::nullopt);

struct HomogeneousCover {
    std::vector<VertexSet> cliques;
    std::vector<VertexSet> independent_sets;
    int rounds_completed = 0;
    bool stopped_early = false;
};

/// Repeats ramsey_extract on the remaining vertices, removing each extracted
/// set, for at most `rounds` rounds.
HomogeneousCover extract_homogeneous_cover(const SimpleGraph& g, int a, int b, int rounds);

/// `g <n>` header, then one `u v` line per edge with u < v.
std::string format_graph(const SimpleGraph& g);
SimpleGraph parse_graph(std::string_view text);

namespace detail {

/// Lexicographically smallest m-clique of the graph given by 64-bit rows,
/// restricted to `candidates`. Branch and bound with a greedy colouring bound.
bool find_clique_mask(std::span<const std::uint64_t> rows, std::uint64_t candidates, int m,
                      std::uint64_t& out);

inline bool has_clique_mask(std::span<const std::uint64_t> rows, std::uint64_t candidates, int m)
{
    std::uint64_t unused = 0;
    return find_clique_mask(rows, candidates, m, unused);
}

}  // namespace detail

}  // namespace ramsat
