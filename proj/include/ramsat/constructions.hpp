#pragma once

#include <ramsat/geometry.hpp>
#include <ramsat/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsat {

/// r edge-disjoint colour classes on one vertex set. Colours are 1-based;
/// colour 0 means "uncoloured" in lookups.
class ColoredCompleteGraph {
public:
    static constexpr int max_colors = 64;

    ColoredCompleteGraph(int n, int r);
    /// Validates that the classes are pairwise edge-disjoint.
    ColoredCompleteGraph(int n, std::vector<SimpleGraph> classes);

    int vertex_count() const noexcept { return n_; }
    int color_count() const noexcept { return static_cast<int>(classes_.size()); }
    const SimpleGraph& color_class(int color) const { return classes_.at(static_cast<std::size_t>(color - 1)); }
    const std::vector<SimpleGraph>& classes() const noexcept { return classes_; }

    /// Colour of {u, v}, or 0 when uncoloured.
    int color(int u, int v) const;
    /// Assigns colour c to an uncoloured pair.
    void set_color(int u, int v, int c);
    bool is_complete() const;
    std::int64_t colored_pairs() const;

    friend bool operator==(const ColoredCompleteGraph&, const ColoredCompleteGraph&) = default;

private:
    int n_;
    std::vector<SimpleGraph> classes_;
};

enum class AffineStrategy { parallel_balanced, round_robin };

/// Complete r-colouring of K_{q^2}: lines of AG(2, q) are split into r
/// families and colour i gets every pair covered by a line of family i.
/// parallel_balanced sends parallel class j to colour (j mod r) + 1;
/// round_robin shuffles the lines with `seed` and deals them out cyclically.
ColoredCompleteGraph affine_coloring(int q, int r, AffineStrategy strategy, std::uint64_t seed = 0);

/// Which line family of AG(2, q) each colour received, in the same order as
/// affine_coloring assigns them.
std::vector<std::vector<int>> affine_families(int q, int r, AffineStrategy strategy, std::uint64_t seed = 0);

struct Fq3Coloring {
    /// Completed colouring of K_{q^3}.
    ColoredCompleteGraph coloring;
    /// Class i is the pair-union of the lines of family lambda = i - 1,
    /// before any completion.
    std::vector<SimpleGraph> family_classes;
    /// Pairs outside families 0..r-1.
    SimpleGraph leftover;
};

/// Colour i + 1 is induced by the F_q^3 line family with lambda = i, for
/// i < r; remaining pairs are dealt round-robin in lexicographic pair order.
Fq3Coloring fq3_coloring(int q, int r);

/// (s / (2 e t)) * log2(2 e t / s), clamped to [0, 1]. Requires 2 <= s <= t.
double lower_bound_p(int s, int t);

struct GnpParams {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// G(n, p): pairs visited in lexicographic order (u < v), each kept iff the
/// next uniform draw is below p.
SimpleGraph sample_gnp(const GnpParams& params);

struct BadSetCount {
    bool exact = true;
    /// Exact count, or the sampled estimate C(N, n) * hits / trials.
    double value = 0.0;
    std::uint64_t subsets = 0;  ///< C(N, n)
    std::uint64_t trials = 0;   ///< sets examined
    std::uint64_t hits = 0;     ///< bad sets among them
    double standard_error = 0.0;
};

struct BadSetMode {
    /// 0 selects exact enumeration.
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;

    static BadSetMode exhaustive(unsigned threads = 1) { return {0, 0, threads}; }
    static BadSetMode sampled(std::uint64_t trials, std::uint64_t seed) { return {trials, seed, 1}; }
};

inline constexpr std::uint64_t exact_bad_set_budget = 10'000'000;

/// Counts n-subsets U whose induced graph lacks K_s or lacks an independent t-set.
BadSetCount count_bad_sets(const SimpleGraph& g, int n, int s, int t, BadSetMode mode);

/// `cg <n> <r>` header, then `u v c` for each coloured pair in lexicographic order.
std::string format_colored_graph(const ColoredCompleteGraph& c);
ColoredCompleteGraph parse_colored_graph(std::string_view text);

}  // namespace ramsat
