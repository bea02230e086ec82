#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace ramsat {

/// Thrown when a requested enumeration would exceed a documented hard cap.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

/// C(n, k), saturating at UINT64_MAX. Zero when k < 0 or k > n.
std::uint64_t binomial(std::int64_t n, std::int64_t k);

/// Colex rank of a strictly increasing k-subset: sum of C(c_i, i + 1).
std::uint64_t colex_rank(std::span<const int> subset);

/// Inverse of colex_rank for subsets of size k.
std::vector<int> colex_unrank(std::uint64_t rank, int k);

/// Colex rank of the set bits of a 64-bit mask.
std::uint64_t colex_rank_mask(std::uint64_t mask);

inline int popcount(std::uint64_t x) { return std::popcount(x); }
inline int lowest_bit(std::uint64_t x) { return std::countr_zero(x); }

inline std::uint64_t low_bits(int n)
{
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::vector<int> mask_members(std::uint64_t mask);

/// Visits every k-subset of {first, ..., n - 1} in lexicographic order of the
/// sorted index tuple, as a 64-bit mask or-ed with `fixed`. The visitor returns
/// false to stop early; the function returns false iff stopped. Requires n <= 64.
template <class Visitor>
bool for_each_combination(int n, int k, Visitor&& visit, int first = 0, std::uint64_t fixed = 0)
{
    if (n > 64)
        throw std::invalid_argument("for_each_combination: n > 64");
    if (k < 0 || first + k > n)
        return true;
    if (k == 0)
        return visit(fixed) != false;

    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[i] = first + i;
    std::uint64_t mask = fixed;
    for (int v : idx)
        mask |= std::uint64_t{1} << v;

    for (;;) {
        if (!visit(mask))
            return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            return true;
        for (int j = i; j < k; ++j)
            mask &= ~(std::uint64_t{1} << idx[j]);
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
        for (int j = i; j < k; ++j)
            mask |= std::uint64_t{1} << idx[j];
    }
}

/// Visits every k-subset of [n] in lexicographic order as an index vector.
/// No size cap; used where n may exceed 64.
template <class Visitor>
bool for_each_combination_indices(int n, int k, Visitor&& visit)
{
    if (k < 0 || k > n)
        return true;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    for (;;) {
        if (!visit(std::span<const int>(idx)))
            return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i)
            --i;
        if (i < 0)
            return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace ramsat
