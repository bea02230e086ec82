#include <doctest.h>

#include "../support/oracles.hpp"

#include <ramsat/reduction.hpp>

using namespace ramsat;

namespace {

std::vector<int> as_vector(const VertexSet& s) { return {s.begin(), s.end()}; }

KSubsetColoring random_coloring(Rng& rng, int N, int k)
{
    KSubsetColoring chi(N, k);
    for (std::uint64_t i = 0; i < chi.size(); ++i)
        chi.set_blue(i, rng.below(2) == 1);
    return chi;
}

SimpleGraph graph_from_mask(int n, std::uint64_t mask) { return SimpleGraph::from_pair_mask(n, mask); }

}  // namespace

TEST_SUITE("ramsey-reduction")
{
    TEST_CASE("has_unbalanced_set examples")
    {
        CHECK(has_unbalanced_set(SimpleGraph::complete(5), 3, 2, 2).has_value());
        CHECK_FALSE(has_unbalanced_set(SimpleGraph::cycle(5), 5, 2, 2));
        SimpleGraph petersen(10);
        for (int i = 0; i < 5; ++i) {
            petersen.add_edge(i, (i + 1) % 5);
            petersen.add_edge(i, i + 5);
            petersen.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        CHECK(as_vector(*has_unbalanced_set(petersen, 4, 3, 3)) == std::vector<int>{0, 1, 2, 3});

        Rng rng(4);
        for (int trial = 0; trial < 200; ++trial) {
            const int N = 1 + static_cast<int>(rng.below(8));
            const auto g = oracle::random_graph(rng, N, rng.uniform01());
            const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(N)));
            const int s = 1 + static_cast<int>(rng.below(4));
            const int t = 1 + static_cast<int>(rng.below(4));
            std::optional<std::vector<int>> expected;
            for (auto& u : oracle::subsets_of(oracle::iota(N), n))
                if (oracle::unbalanced(g, u, s, t)) {
                    expected = u;
                    break;
                }
            const auto got = has_unbalanced_set(g, n, s, t);
            REQUIRE(got.has_value() == expected.has_value());
            if (got)
                CHECK(as_vector(*got) == *expected);
        }
    }

    TEST_CASE("g_oracle values against an unreduced enumeration")
    {
        const auto g222 = g_oracle(2, 2, 2, 5);
        CHECK(g222.value == 2);
        const auto g322 = g_oracle(3, 2, 2, 6);
        CHECK(g322.value == 6);
        REQUIRE(g322.witness);
        CHECK(g322.witness->vertex_count() == 5);
        CHECK_FALSE(oracle::any_unbalanced(*g322.witness, 3, 2, 2));
        // the witness is a 5-cycle: 2-regular and connected
        for (int v = 0; v < 5; ++v)
            CHECK(g322.witness->degree(v) == 2);
        CHECK(g322.witness->edge_count() == 5);
        CHECK_FALSE(find_clique(*g322.witness, 3));
        CHECK(g_oracle(3, 2, 3, 5).value == 3);

        for (int n = 2; n <= 4; ++n)
            for (int s = 2; s <= 3; ++s)
                for (int t = s; t <= 3; ++t) {
                    const int n_max = 5;
                    CAPTURE(n);
                    CAPTURE(s);
                    CAPTURE(t);
                    CHECK(g_oracle(n, s, t, n_max).value == oracle::g_value(n, s, t, n_max));
                }
        CHECK(g_oracle(3, 2, 2, 6, 3).value == 6);
        CHECK(g_oracle(3, 2, 2, 6, 3).witness == g322.witness);
    }

    TEST_CASE("g_oracle is monotone in n")
    {
        for (int s = 2; s <= 3; ++s)
            for (int t = s; t <= 3; ++t) {
                std::optional<int> prev;
                for (int n = 1; n <= 5; ++n) {
                    const auto v = g_oracle(n, s, t, 6).value;
                    if (prev && v)
                        CHECK(*v >= *prev);
                    if (prev && !v)
                        break;
                    prev = v;
                }
            }
    }

    TEST_CASE("good_set_witness against the definition")
    {
        KSubsetColoring blue(5, 3);
        blue.fill(true);
        CHECK(good_set_witness(blue, {4, 2, 3, 3}).has_value());
        const KSubsetColoring red(5, 3);
        CHECK(good_set_witness(red, {4, 2, 3, 3}).has_value());

        Rng rng(12);
        for (int trial = 0; trial < 300; ++trial) {
            const auto chi = random_coloring(rng, 5, 3);
            const auto got = good_set_witness(chi, {4, 2, 3, 3});
            const auto expected = oracle::first_good(chi, 4, 2, 3);
            REQUIRE(got.has_value() == expected.has_value());
            if (got)
                CHECK(as_vector(*got) == *expected);
        }
        for (int trial = 0; trial < 100; ++trial) {
            const int N = 4 + static_cast<int>(rng.below(3));
            const int k = 2 + static_cast<int>(rng.below(3));
            const auto chi = random_coloring(rng, N, k);
            const int s = 2, t = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k - 1)));
            const int n = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(N - k + 1)));
            CHECK(good_set_witness(chi, {n, s, t, k}).has_value() == oracle::first_good(chi, n, s, t).has_value());
        }
    }

    TEST_CASE("f_oracle values")
    {
        CHECK(f_oracle({3, 2, 2, 3}, 5).value == 3);
        CHECK(f_oracle({4, 2, 2, 3}, 6).value == 5);
        const auto f2 = f_oracle({3, 2, 2, 2}, 6);
        CHECK(f2.value == 6);
        CHECK(oracle::f_value(3, 2, 2, 3, 4) == 3);
        CHECK(oracle::f_value(4, 2, 2, 3, 5) == 5);
        REQUIRE(f2.witness);
        CHECK(f2.witness->ground_size() == 5);
        CHECK_FALSE(oracle::first_good(*f2.witness, 3, 2, 2));
    }

    TEST_CASE("f and g agree when k = s + t - 2")
    {
        for (auto [n, s, t] : {std::tuple{3, 2, 3}, std::tuple{4, 2, 3}, std::tuple{3, 2, 2}}) {
            const auto g = g_oracle(n, s, t, 6);
            const auto f = f_oracle({n, s, t, s + t - 2}, t == 3 ? 5 : 6);
            CHECK(g.value.has_value());
            CHECK(f.value == g.value);
        }
        CHECK(oracle::f_value(3, 2, 3, 3, 4) == oracle::g_value(3, 2, 3, 4));
    }

    TEST_CASE("coloring_to_graph")
    {
        KSubsetColoring one(3, 3);
        one.set_blue(0, true);
        CHECK(coloring_to_graph(one, 2, 3) == SimpleGraph::complete(3));

        Rng rng(21);
        for (int trial = 0; trial < 100; ++trial) {
            const auto chi = random_coloring(rng, 5, 3);
            const auto cls = classify_pairs(chi, 2, 3);
            REQUIRE(cls.size() == 10);
            const auto g_non = coloring_to_graph(chi, 2, 3, TieBreak::nonedge);
            const auto g_edge = coloring_to_graph(chi, 2, 3, TieBreak::edge);
            int idx = 0;
            for (int x = 0; x < 5; ++x)
                for (int y = x + 1; y < 5; ++y, ++idx) {
                    // direct evaluation: forced edge iff {x,y} has only blue 3-supersets
                    bool all_blue = true, any = false;
                    for (int z = 0; z < 5; ++z)
                        if (z != x && z != y) {
                            any = true;
                            std::vector<int> k3{x, y, z};
                            std::sort(k3.begin(), k3.end());
                            all_blue = all_blue && chi.is_blue(k3);
                        }
                    // forced non-edge iff some 3-superset (t = 3, so {x,y,z} itself) has only red 3-supersets
                    bool some_red = false;
                    for (int z = 0; z < 5; ++z)
                        if (z != x && z != y) {
                            std::vector<int> k3{x, y, z};
                            std::sort(k3.begin(), k3.end());
                            some_red = some_red || !chi.is_blue(k3);
                        }
                    CHECK(any);
                    const auto expected = all_blue ? PairClass::forced_edge
                                          : some_red ? PairClass::forced_nonedge
                                                     : PairClass::free;
                    CHECK(cls[static_cast<std::size_t>(idx)] == expected);
                    CHECK(g_non.has_edge(x, y) == (expected == PairClass::forced_edge));
                    CHECK(g_edge.has_edge(x, y) == (expected != PairClass::forced_nonedge));
                }
        }
    }

    TEST_CASE("the two forced conditions never meet for N <= 6, k = 3")
    {
        for (int N = 3; N <= 5; ++N) {
            const auto total = binomial(N, 3);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask)
                CHECK_NOTHROW(classify_pairs(KSubsetColoring::from_mask(N, 3, mask), 2, 3));
        }
        Rng rng(6);
        for (int trial = 0; trial < 2000; ++trial)
            CHECK_NOTHROW(classify_pairs(random_coloring(rng, 6, 3), 2, 3));
    }

    TEST_CASE("graph_to_coloring")
    {
        KSubsetColoring all_blue(5, 3);
        all_blue.fill(true);
        CHECK(graph_to_coloring(SimpleGraph::complete(5), 2, 3) == all_blue);
        CHECK(graph_to_coloring(SimpleGraph(5), 2, 3) == KSubsetColoring(5, 3));
        const auto c5 = graph_to_coloring(SimpleGraph::cycle(5), 2, 3);
        CHECK(c5.is_blue(std::vector<int>{0, 1, 2}));
        // C_5 has no independent triple, so every triple has an edge and is blue
        for (auto& k3 : oracle::subsets_of(oracle::iota(5), 3))
            CHECK(c5.is_blue(k3));

        for (auto [s, t] : {std::pair{2, 3}, std::pair{3, 3}}) {
            const int k = s + t - 2;
            for (int n = k; n <= 8; ++n)
                for (int trial = 0; trial < 30; ++trial) {
                    Rng rng(static_cast<std::uint64_t>(n * 100 + trial));
                    const auto g = oracle::random_graph(rng, n, rng.uniform01());
                    const auto chi = graph_to_coloring(g, s, t, DefaultColor::blue);
                    for (auto& K : oracle::subsets_of(oracle::iota(n), k)) {
                        const bool clique = oracle::has_clique(g, K, s);
                        const bool indep = oracle::has_independent(g, K, t);
                        CHECK_FALSE((clique && indep));
                        CHECK(chi.is_blue(K) == (clique || !indep));
                    }
                }
        }
    }

    TEST_CASE("round trip: unbalanced sets map to good sets")
    {
        for (int N = 3; N <= 6; ++N) {
            const int pairs = N * (N - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
                const auto g = graph_from_mask(N, mask);
                const auto chi = graph_to_coloring(g, 2, 3);
                for (int n = 3; n <= N; ++n)
                    if (has_unbalanced_set(g, n, 2, 3))
                        CHECK(good_set_witness(chi, {n, 2, 3, 3}).has_value());
            }
        }
    }

    TEST_CASE("ksc text format")
    {
        Rng rng(40);
        for (int trial = 0; trial < 30; ++trial) {
            const int N = 3 + static_cast<int>(rng.below(6));
            const int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(N)));
            const auto chi = random_coloring(rng, N, k);
            CHECK(parse_ksubset_coloring(format_ksubset_coloring(chi)) == chi);
        }
        KSubsetColoring first(4, 3);
        first.set_blue(0, true);
        CHECK(format_ksubset_coloring(first) == "ksc 4 3\n8\n");
        CHECK(parse_ksubset_coloring("ksc 5 3\n004\n").is_blue(9));
        CHECK_THROWS_AS(parse_ksubset_coloring("ksc 5 3\n001\n"), ParseError);  // padding bit set
        CHECK_THROWS_AS(parse_ksubset_coloring("ksc 4 3\n88\n"), ParseError);
        CHECK_THROWS_AS(parse_ksubset_coloring("ksc 4 3\nz\n"), ParseError);
    }
}
