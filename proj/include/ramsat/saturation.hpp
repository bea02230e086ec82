#pragma once

#include <ramsat/constructions.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ramsat {

// A pattern G is (r, K_k)-semisaturated when every extension by new
// vertices creates a new monochromatic K_k. It suffices to look at
// one-vertex extensions: any multi-vertex extension contains the extension
// by its first new vertex, and a monochromatic K_k through that vertex is
// still present (and still new) afterwards. A one-vertex extension is an
// assignment chi : V -> [r] of colours to the new edges, and it creates a
// monochromatic K_k of colour i exactly when G_i restricted to chi^{-1}(i)
// contains a K_{k-1}. So G is semisaturated iff no vertex colouring chi
// "survives", i.e. avoids a K_{k-1} in G_i[chi^{-1}(i)] for every i.

enum class Status { holds, fails, unknown };

std::string_view to_string(Status s);

/// Vertex colouring chi : V -> [r], colours 1-based.
struct VertexColoringWitness {
    std::vector<int> colors;
    friend bool operator==(const VertexColoringWitness&, const VertexColoringWitness&) = default;
};

/// Colour class i and a set U with no K_{k-1} in G_i[U].
struct ObservationWitness {
    int color = 0;
    VertexSet subset;
    friend bool operator==(const ObservationWitness&, const ObservationWitness&) = default;
};

/// A monochromatic clique of colour `color`.
struct CliqueWitness {
    int color = 0;
    VertexSet clique;
    friend bool operator==(const CliqueWitness&, const CliqueWitness&) = default;
};

using Witness = std::variant<std::monostate, VertexColoringWitness, ObservationWitness, CliqueWitness>;

struct Verdict {
    Status status = Status::unknown;
    Witness witness;
    /// Objects examined (colourings, extensions, or (class, set) pairs).
    std::uint64_t checked = 0;
    /// True when the verdict rests on random sampling rather than exhaustion.
    bool sampled = false;

    bool holds() const { return status == Status::holds; }
};

struct CheckOptions {
    /// Largest exhaustive enumeration accepted.
    std::uint64_t cap = 1'000'000'000;
    /// When the enumeration exceeds `cap`: 0 throws BudgetExceeded, otherwise
    /// this many seeded random samples are drawn. A sampled run can only
    /// return fails (with a genuine witness) or unknown.
    std::uint64_t sample_trials = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

/// True iff chi avoids a K_{k-1} inside G_i[chi^{-1}(i)] for every colour i,
/// i.e. the extension it describes creates no monochromatic K_k.
bool coloring_survives(const ColoredCompleteGraph& c, int k, const VertexColoringWitness& chi);

/// Decides semisaturation by a depth-first search over vertex colourings
/// that drops a branch as soon as some colour class already holds a K_{k-1}.
/// The failure witness is the lexicographically first surviving colouring.
Verdict is_semisaturated(const ColoredCompleteGraph& c, int k, CheckOptions options = {});

/// Literal check: every colouring of the n new edges of a one-vertex
/// extension is built and searched for a monochromatic K_k through the new
/// vertex. Independent oracle for is_semisaturated.
Verdict is_semisaturated_direct(const ColoredCompleteGraph& c, int k, CheckOptions options = {});

/// Sufficient condition for semisaturation: every class i <= r holds a
/// K_{k-1} inside every ceil(n/r)-subset.
Verdict check_observation(const ColoredCompleteGraph& c, int k, int r, CheckOptions options = {});

inline constexpr std::uint64_t observation_cap = 100'000'000;

/// Lexicographically first K_k in any class (classes in order).
std::optional<CliqueWitness> find_monochromatic_clique(const ColoredCompleteGraph& c, int k);
bool is_kkfree_pattern(const ColoredCompleteGraph& c, int k);

/// K_k-free classes and semisaturated.
Verdict is_saturated(const ColoredCompleteGraph& c, int k, CheckOptions options = {});

/// (r-1)k^2 - (3r-4)k + (2r-3).
std::int64_t ssat_lower_bound_formula(int r, int k);

/// max(ceil(sum_{i=2}^r i / 2), ceil(r^2 / 4)).
std::int64_t ssat_recursion_floor(int r, int k);

enum class SearchStatus { found, exhausted, budget };

std::string_view to_string(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<ColoredCompleteGraph> witness;
    std::uint64_t nodes = 0;
};

struct PatternSearchOptions {
    std::uint64_t node_budget = 50'000'000;
    unsigned threads = 1;
};

/// Searches the r-colourings of K_n for a semisaturated pattern. Pairs are
/// coloured in lexicographic order, colours are introduced in order of first
/// use (pair (0,1) always gets colour 1), and a partial pattern is cut off
/// when some vertex colouring survives even if every uncoloured pair is
/// allowed in every class.
SearchResult ssat_search(int r, int k, int n, PatternSearchOptions options = {});

}  // namespace ramsat
