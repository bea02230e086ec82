#pragma once

#include <ramsat/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsat {

bool is_prime(std::int64_t x);

/// Arithmetic modulo a prime q <= 2^20.
class PrimeField {
public:
    static constexpr std::int64_t max_order = std::int64_t{1} << 20;

    explicit PrimeField(std::int64_t q);

    int order() const noexcept { return q_; }
    int add(int a, int b) const { return (a + b) % q_; }
    int sub(int a, int b) const { return (a - b + q_) % q_; }
    int mul(int a, int b) const { return static_cast<int>(static_cast<std::int64_t>(a) * b % q_); }
    int neg(int a) const { return (q_ - a) % q_; }
    int inv(int a) const;

private:
    int q_;
};

/// Smallest prime in [lo, hi]; throws std::domain_error when there is none.
std::int64_t smallest_prime_in(std::int64_t lo, std::int64_t hi);

enum class IncidenceKind { affine_plane, fq3_family };

/// Points and lines over F_q. Points are indexed by their coordinates read
/// as a base-q number (most significant coordinate first); each line is a
/// sorted list of point indices.
class IncidenceStructure {
public:
    IncidenceStructure(IncidenceKind kind, int q, std::optional<int> lambda, int point_count,
                       std::vector<std::vector<int>> lines);

    IncidenceKind kind() const noexcept { return kind_; }
    int q() const noexcept { return q_; }
    std::optional<int> lambda() const noexcept { return lambda_; }
    int point_count() const noexcept { return point_count_; }
    std::size_t line_count() const noexcept { return lines_.size(); }
    const std::vector<int>& line(std::size_t i) const { return lines_.at(i); }
    const std::vector<std::vector<int>>& lines() const noexcept { return lines_; }
    const std::vector<int>& lines_through(int point) const { return point_to_lines_.at(static_cast<std::size_t>(point)); }

    friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b)
    {
        return a.kind_ == b.kind_ && a.q_ == b.q_ && a.lambda_ == b.lambda_ && a.point_count_ == b.point_count_ &&
               a.lines_ == b.lines_;
    }

private:
    IncidenceKind kind_;
    int q_;
    std::optional<int> lambda_;
    int point_count_;
    std::vector<std::vector<int>> lines_;
    std::vector<std::vector<int>> point_to_lines_;
};

/// AG(2, q). Point (x, y) has index x*q + y. Lines come in parallel-class
/// order: slopes m = 0..q-1 (y = m x + b, b ascending), then the verticals
/// x = c (c ascending).
IncidenceStructure build_affine_plane(int q);

/// Partition of an affine plane's lines into classes of mutually disjoint
/// lines, ordered by first line index.
std::vector<std::vector<int>> parallel_classes(const IncidenceStructure& plane);

/// The lines of F_q^3 with slope (1, lambda, mu), mu in F_q. Point (x, y, z)
/// has index (x*q + y)*q + z. Lines are ordered by mu, then by smallest point.
IncidenceStructure fq3_line_family(int q, int lambda);

struct IncidenceSum {
    std::int64_t sum = 0;
    /// |U||F|/q - 2 sqrt(q) sqrt(|U||F|)
    double bound = 0.0;
};

IncidenceSum incidence_sum(const IncidenceStructure& structure, std::span<const int> family, const VertexSet& u);

/// Result of an exhaustive invariant check; `failure` names the first
/// violated property.
struct InvariantReport {
    bool ok = true;
    std::string failure;
};

/// Checks the counts and pairwise-line properties for the structure's kind.
InvariantReport check_invariants(const IncidenceStructure& s);

/// Number of lines two families have in common (as point sets).
std::size_t common_lines(const IncidenceStructure& a, const IncidenceStructure& b);

/// `inc <kind> <q> [<lambda>]` header, then one line of point indices per line.
std::string format_incidence(const IncidenceStructure& s);
IncidenceStructure parse_incidence(std::string_view text);

std::string_view to_string(IncidenceKind kind);

}  // namespace ramsat
