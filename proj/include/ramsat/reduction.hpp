#pragma once

#include <ramsat/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsat {

/// Red/blue colouring of the k-subsets of [N], one bit per subset in colex
/// order (0 = red, 1 = blue).
class KSubsetColoring {
public:
    static constexpr std::uint64_t max_subsets = std::uint64_t{1} << 24;

    KSubsetColoring(int N, int k);
    /// Bit i of `mask` colours the subset of colex rank i; requires C(N, k) <= 64.
    static KSubsetColoring from_mask(int N, int k, std::uint64_t mask);

    int ground_size() const noexcept { return N_; }
    int k() const noexcept { return k_; }
    std::uint64_t size() const noexcept { return size_; }

    bool is_blue(std::uint64_t rank) const { return bits_.at(rank); }
    bool is_blue(std::span<const int> subset) const { return is_blue(colex_rank_of(subset)); }
    void set_blue(std::uint64_t rank, bool blue) { bits_.at(rank) = blue; }
    void fill(bool blue) { std::fill(bits_.begin(), bits_.end(), blue); }

    friend bool operator==(const KSubsetColoring&, const KSubsetColoring&) = default;

private:
    static std::uint64_t colex_rank_of(std::span<const int> subset);

    int N_;
    int k_;
    std::uint64_t size_;
    std::vector<bool> bits_;
};

/// Parameters of f_k(n, s, t) and g(n, s, t).
struct RamseyParams {
    int n = 0;
    int s = 2;
    int t = 2;
    int k = 0;
};

enum class TieBreak { nonedge, edge };
enum class DefaultColor { red, blue };

/// An n-set U with G[U] lacking K_s or lacking an independent t-set; the
/// first such set in lexicographic order. Requires vertex_count() <= 64.
std::optional<VertexSet> has_unbalanced_set(const SimpleGraph& g, int n, int s, int t);

struct GOracleResult {
    /// Smallest N <= n_max such that every N-vertex graph has an unbalanced n-set.
    std::optional<int> value;
    /// Graph on value - 1 vertices (or on n_max vertices when value is absent)
    /// in which every n-set holds both a K_s and an independent t-set.
    std::optional<SimpleGraph> witness;
    std::uint64_t graphs_checked = 0;
};

inline constexpr int g_oracle_max_vertices = 7;

/// Exhaustive g(n, s, t) over all labelled graphs, in ascending edge-mask
/// order. When s == t only masks whose last pair is a non-edge are examined,
/// since complementation preserves the property.
GOracleResult g_oracle(int n, int s, int t, int n_max, unsigned threads = 1);

/// First n-set (lexicographic) in which every s-subset lies in a red
/// k-subset of [N] or every t-subset lies in a blue k-subset of [N].
std::optional<VertexSet> good_set_witness(const KSubsetColoring& chi, const RamseyParams& params);

struct FOracleResult {
    std::optional<int> value;
    /// Colouring of [value - 1] (or [n_max]) with no good n-set.
    std::optional<KSubsetColoring> witness;
    std::uint64_t colorings_checked = 0;
};

inline constexpr std::uint64_t f_oracle_max_subsets = 20;

/// Exhaustive f_k(n, s, t); requires C(n_max, k) <= 20.
FOracleResult f_oracle(const RamseyParams& params, int n_max, unsigned threads = 1);

enum class PairClass { forced_edge, forced_nonedge, free };

/// For each pair {x, y} (lexicographic order), whether some s-superset has
/// only blue k-supersets (forced edge) or some t-superset has only red
/// k-supersets (forced non-edge). Requires chi.k() == s + t - 2 and N >= k.
/// Throws std::logic_error if a pair is forced both ways.
std::vector<PairClass> classify_pairs(const KSubsetColoring& chi, int s, int t);

SimpleGraph coloring_to_graph(const KSubsetColoring& chi, int s, int t, TieBreak tie_break = TieBreak::nonedge);

/// k = s + t - 2. Blue if G[K] has K_s, red if it has an independent t-set,
/// `fallback` otherwise. Throws std::logic_error if both hold.
KSubsetColoring graph_to_coloring(const SimpleGraph& g, int s, int t, DefaultColor fallback = DefaultColor::red);

/// `ksc <N> <k>` header, then C(N, k) bits in colex order as hex, four
/// ranks per digit with the lowest rank in the high bit, zero padded.
std::string format_ksubset_coloring(const KSubsetColoring& chi);
KSubsetColoring parse_ksubset_coloring(std::string_view text);

}  // namespace ramsat
