#include <ramsat/combinatorics.hpp>

namespace ramsat {

std::uint64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (acc > saturated)
            return saturated;
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t colex_rank(std::span<const int> subset)
{
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i > 0 && subset[i] <= subset[i - 1])
            throw std::invalid_argument("colex_rank: subset not strictly increasing");
        rank += binomial(subset[i], static_cast<std::int64_t>(i) + 1);
    }
    return rank;
}

std::vector<int> colex_unrank(std::uint64_t rank, int k)
{
    std::vector<int> out(static_cast<std::size_t>(k));
    for (int i = k; i >= 1; --i) {
        // largest c with C(c, i) <= rank
        std::int64_t c = i - 1;
        while (binomial(c + 1, i) <= rank)
            ++c;
        out[static_cast<std::size_t>(i - 1)] = static_cast<int>(c);
        rank -= binomial(c, i);
    }
    return out;
}

std::uint64_t colex_rank_mask(std::uint64_t mask)
{
    std::uint64_t rank = 0;
    std::int64_t i = 1;
    while (mask) {
        const int v = lowest_bit(mask);
        mask &= mask - 1;
        rank += binomial(v, i++);
    }
    return rank;
}

std::vector<int> mask_members(std::uint64_t mask)
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(mask)));
    while (mask) {
        out.push_back(lowest_bit(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace ramsat
