#include <doctest.h>

#include "../support/oracles.hpp"

#include <ramsat/constructions.hpp>
#include <ramsat/geometry.hpp>

#include <cmath>

using namespace ramsat;

namespace {

std::vector<std::int64_t> class_sizes(const ColoredCompleteGraph& c)
{
    std::vector<std::int64_t> out;
    for (const auto& cls : c.classes())
        out.push_back(cls.edge_count());
    return out;
}

// Every pair inside a line of the family carries the family's colour.
bool lines_monochromatic(const ColoredCompleteGraph& c, const IncidenceStructure& s, const std::vector<int>& family,
                         int colour)
{
    for (int li : family) {
        const auto& line = s.line(static_cast<std::size_t>(li));
        for (std::size_t i = 0; i < line.size(); ++i)
            for (std::size_t j = i + 1; j < line.size(); ++j)
                if (c.color(line[i], line[j]) != colour)
                    return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("constructions")
{
    TEST_CASE("colored complete graph basics")
    {
        ColoredCompleteGraph c(4, 2);
        CHECK_FALSE(c.is_complete());
        c.set_color(0, 1, 1);
        CHECK(c.color(1, 0) == 1);
        CHECK(c.color(0, 2) == 0);
        CHECK_THROWS(c.set_color(0, 1, 2));
        CHECK_THROWS(c.set_color(0, 2, 3));
        std::vector<SimpleGraph> overlapping{SimpleGraph::complete(3), SimpleGraph::cycle(3)};
        CHECK_THROWS(ColoredCompleteGraph(3, overlapping));
    }

    TEST_CASE("affine colourings")
    {
        const auto rr = affine_coloring(2, 2, AffineStrategy::round_robin, 1);
        CHECK(rr.vertex_count() == 4);
        CHECK(rr.is_complete());
        CHECK(class_sizes(rr) == std::vector<std::int64_t>{3, 3});

        const auto pb3 = affine_coloring(3, 2, AffineStrategy::parallel_balanced);
        CHECK(pb3.is_complete());
        CHECK(class_sizes(pb3) == std::vector<std::int64_t>{18, 18});

        for (int q : {2, 3, 5, 7})
            for (int r = 1; r <= q + 1; ++r)
                for (auto strategy : {AffineStrategy::parallel_balanced, AffineStrategy::round_robin}) {
                    const auto c = affine_coloring(q, r, strategy, 99);
                    CHECK(c.is_complete());
                    CHECK(c.color_count() == r);
                    const auto plane = build_affine_plane(q);
                    const auto families = affine_families(q, r, strategy, 99);
                    REQUIRE(families.size() == static_cast<std::size_t>(r));
                    for (int i = 0; i < r; ++i)
                        CHECK(lines_monochromatic(c, plane, families[static_cast<std::size_t>(i)], i + 1));
                }
        CHECK(affine_coloring(5, 3, AffineStrategy::round_robin, 4) ==
              affine_coloring(5, 3, AffineStrategy::round_robin, 4));
        CHECK_THROWS(affine_coloring(3, 5, AffineStrategy::parallel_balanced));
    }

    TEST_CASE("F_q^3 colourings")
    {
        const auto q2 = fq3_coloring(2, 2);
        CHECK(q2.coloring.vertex_count() == 8);
        CHECK(q2.family_classes[0].edge_count() == 8);
        CHECK(q2.family_classes[1].edge_count() == 8);
        CHECK(q2.leftover.edge_count() == 12);
        CHECK(q2.coloring.is_complete());

        const auto q3 = fq3_coloring(3, 3);
        for (const auto& cls : q3.family_classes)
            CHECK(cls.edge_count() == 81);
        CHECK_NOTHROW(ColoredCompleteGraph(27, q3.family_classes));  // pairwise disjoint

        const auto q32 = fq3_coloring(3, 2);
        std::vector<SimpleGraph> parts = q32.family_classes;
        parts.push_back(q32.leftover);
        const ColoredCompleteGraph partition(27, parts);
        CHECK(partition.is_complete());
        CHECK(q32.family_classes[0].edge_count() + q32.family_classes[1].edge_count() + q32.leftover.edge_count() ==
              27 * 26 / 2);
        CHECK_THROWS(fq3_coloring(3, 4));
    }

    TEST_CASE("lower_bound_p matches the closed form")
    {
        const double e = std::exp(1.0);
        CHECK(std::abs(lower_bound_p(2, 2) - std::log2(2 * e) / (2 * e)) < 1e-12);
        CHECK(std::abs(lower_bound_p(2, 3) - std::log2(3 * e) / (3 * e)) < 1e-12);
        CHECK(std::abs(lower_bound_p(3, 4) - oracle::lower_bound_p(3, 4)) < 1e-12);
        for (int t = 2; t < 20; ++t)
            CHECK(lower_bound_p(t, t) == doctest::Approx(lower_bound_p(2, 2)).epsilon(1e-14));
        CHECK_THROWS(lower_bound_p(3, 2));
        CHECK_THROWS(lower_bound_p(1, 2));
    }

    TEST_CASE("G(n,p) sampling")
    {
        CHECK(sample_gnp({10, 0.0, 1}).edge_count() == 0);
        CHECK(sample_gnp({10, 1.0, 1}) == SimpleGraph::complete(10));
        CHECK(sample_gnp({20, 0.5, 7}) == sample_gnp({20, 0.5, 7}));
        CHECK(sample_gnp({20, 0.5, 7}) != sample_gnp({20, 0.5, 8}));
        double total = 0;
        for (std::uint64_t seed = 0; seed < 200; ++seed)
            total += static_cast<double>(sample_gnp({30, 0.3, seed}).edge_count());
        // mean 130.5, sd of the 200-sample mean about 0.7
        CHECK(std::abs(total / 200 - 435 * 0.3) < 4.0);
        CHECK_THROWS(sample_gnp({5, 1.5, 0}));
    }

    TEST_CASE("bad-set counts")
    {
        CHECK(count_bad_sets(SimpleGraph::complete(8), 4, 2, 2, BadSetMode::exhaustive()).value == 70);
        CHECK(count_bad_sets(SimpleGraph::cycle(5), 5, 2, 2, BadSetMode::exhaustive()).value == 0);

        Rng rng(8);
        for (int trial = 0; trial < 20; ++trial) {
            const auto g = oracle::random_graph(rng, 10, 0.5);
            std::uint64_t naive = 0;
            for (auto& u : oracle::subsets_of(oracle::iota(10), 5))
                naive += oracle::unbalanced(g, u, 3, 3) ? 1 : 0;
            const auto exact = count_bad_sets(g, 5, 3, 3, BadSetMode::exhaustive());
            CHECK(exact.exact);
            CHECK(exact.hits == naive);
            CHECK(count_bad_sets(g, 5, 3, 3, BadSetMode::exhaustive(3)).hits == naive);
        }

        int outside = 0;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto g = sample_gnp({12, lower_bound_p(3, 3), seed});
            const auto exact = count_bad_sets(g, 5, 3, 3, BadSetMode::exhaustive());
            const auto est = count_bad_sets(g, 5, 3, 3, BadSetMode::sampled(4000, seed + 1000));
            CHECK_FALSE(est.exact);
            CHECK(est.trials == 4000);
            if (est.standard_error > 0)
                outside += std::abs(est.value - exact.value) > 5 * est.standard_error ? 1 : 0;
            else
                outside += est.value == exact.value ? 0 : 1;
        }
        CHECK(outside == 0);
    }

    TEST_CASE("colored graph text format")
    {
        const auto c = affine_coloring(3, 2, AffineStrategy::round_robin, 5);
        CHECK(parse_colored_graph(format_colored_graph(c)) == c);
        const auto f = fq3_coloring(2, 2).coloring;
        CHECK(parse_colored_graph(format_colored_graph(f)) == f);

        auto line_of = [](const std::string& text) {
            try {
                parse_colored_graph(text);
            } catch (const ParseError& e) {
                return e.line();
            }
            return -1;
        };
        CHECK(line_of("cg 3 2\n0 1 3\n") == 2);
        CHECK(line_of("cg 3 2\n0 1 1\n0 2 1\n0 1 2\n") == 4);
        CHECK(line_of("cg 3 2\n1 0 1\n") == 2);
        CHECK(line_of("cg 3 2\n0 5 1\n") == 2);
        CHECK(line_of("cg 3\n") == 1);
        CHECK(line_of("\ncg 2 2\n0 1 2\n") == -1);
        try {
            parse_colored_graph("cg 3 2\n0 1 1\n0 1 2\n");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
        }
    }
}
