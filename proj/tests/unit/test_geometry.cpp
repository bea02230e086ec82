#include <doctest.h>

#include <ramsat/geometry.hpp>
#include <ramsat/rng.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

using namespace ramsat;

namespace {

// Number of lines through both points, counted straight from the line lists.
int lines_through_pair(const IncidenceStructure& s, int a, int b)
{
    int count = 0;
    for (const auto& line : s.lines())
        if (std::binary_search(line.begin(), line.end(), a) && std::binary_search(line.begin(), line.end(), b))
            ++count;
    return count;
}

bool naive_prime(std::int64_t x)
{
    if (x < 2)
        return false;
    for (std::int64_t d = 2; d < x; ++d)
        if (x % d == 0)
            return false;
    return true;
}

}  // namespace

TEST_SUITE("finite-geometry")
{
    TEST_CASE("primes and field arithmetic")
    {
        for (int x = -3; x < 400; ++x)
            CHECK(is_prime(x) == naive_prime(x));
        CHECK(smallest_prime_in(6, 12) == 7);
        CHECK(smallest_prime_in(9, 18) == 11);
        CHECK(smallest_prime_in(36, 72) == 37);
        CHECK_THROWS_AS(smallest_prime_in(24, 28), std::domain_error);
        // Bertrand: [kr, 2kr] always holds a prime
        for (int r = 2; r <= 100; ++r)
            for (int k = 2; k <= 100; ++k) {
                const auto p = smallest_prime_in(k * r, 2 * k * r);
                CHECK(naive_prime(p));
                CHECK(p >= k * r);
            }
        for (int q : {2, 3, 5, 7, 11, 101}) {
            const PrimeField f(q);
            for (int a = 1; a < q; ++a)
                CHECK(f.mul(a, f.inv(a)) == 1);
            for (int a = 0; a < q; ++a)
                CHECK(f.add(a, f.neg(a)) == 0);
        }
        CHECK_THROWS(PrimeField(4));
    }

    TEST_CASE("affine plane counts and pair coverage")
    {
        const auto p2 = build_affine_plane(2);
        CHECK(p2.point_count() == 4);
        CHECK(p2.line_count() == 6);
        const auto p3 = build_affine_plane(3);
        CHECK(p3.point_count() == 9);
        CHECK(p3.line_count() == 12);
        for (int v = 0; v < 9; ++v)
            CHECK(p3.lines_through(v).size() == 4);

        for (int q : {2, 3, 5, 7, 11}) {
            const auto plane = build_affine_plane(q);
            CHECK(plane.line_count() == static_cast<std::size_t>(q * q + q));
            for (const auto& line : plane.lines())
                CHECK(line.size() == static_cast<std::size_t>(q));
            if (q <= 7)
                for (int a = 0; a < q * q; ++a)
                    for (int b = a + 1; b < q * q; ++b)
                        CHECK(lines_through_pair(plane, a, b) == 1);
            CHECK(check_invariants(plane).ok);
        }
    }

    TEST_CASE("parallel classes partition the points")
    {
        for (int q : {2, 3, 5, 7}) {
            const auto plane = build_affine_plane(q);
            const auto classes = parallel_classes(plane);
            CHECK(classes.size() == static_cast<std::size_t>(q + 1));
            std::set<int> all_lines;
            for (const auto& cls : classes) {
                CHECK(cls.size() == static_cast<std::size_t>(q));
                std::vector<int> cover;
                for (int li : cls) {
                    all_lines.insert(li);
                    const auto& line = plane.line(static_cast<std::size_t>(li));
                    cover.insert(cover.end(), line.begin(), line.end());
                }
                std::sort(cover.begin(), cover.end());
                std::vector<int> expected(static_cast<std::size_t>(q * q));
                for (int i = 0; i < q * q; ++i)
                    expected[static_cast<std::size_t>(i)] = i;
                CHECK(cover == expected);
            }
            CHECK(all_lines.size() == plane.line_count());
        }
    }

    TEST_CASE("F_q^3 line families satisfy P1 to P3")
    {
        const auto f20 = fq3_line_family(2, 0);
        CHECK(f20.line_count() == 8);
        for (int v = 0; v < 8; ++v)
            CHECK(f20.lines_through(v).size() == 2);

        for (int q : {2, 3, 5}) {
            std::vector<IncidenceStructure> families;
            for (int lambda = 0; lambda < q; ++lambda)
                families.push_back(fq3_line_family(q, lambda));
            for (const auto& fam : families) {
                // P1
                CHECK(fam.line_count() == static_cast<std::size_t>(q * q * q));
                std::vector<int> per_point(static_cast<std::size_t>(q * q * q), 0);
                for (const auto& line : fam.lines()) {
                    CHECK(line.size() == static_cast<std::size_t>(q));
                    for (int v : line)
                        ++per_point[static_cast<std::size_t>(v)];
                }
                CHECK(std::all_of(per_point.begin(), per_point.end(), [q](int c) { return c == q; }));
                // P2: no pair of points on two lines
                std::set<std::pair<int, int>> pairs;
                bool repeated = false;
                for (const auto& line : fam.lines())
                    for (std::size_t i = 0; i < line.size(); ++i)
                        for (std::size_t j = i + 1; j < line.size(); ++j)
                            repeated = repeated || !pairs.insert({line[i], line[j]}).second;
                CHECK_FALSE(repeated);
                CHECK(check_invariants(fam).ok);
            }
            // P3
            for (int a = 0; a < q; ++a)
                for (int b = a + 1; b < q; ++b) {
                    std::set<std::vector<int>> la(families[static_cast<std::size_t>(a)].lines().begin(),
                                                  families[static_cast<std::size_t>(a)].lines().end());
                    int common = 0;
                    for (const auto& line : families[static_cast<std::size_t>(b)].lines())
                        common += la.count(line) ? 1 : 0;
                    CHECK(common == 0);
                    CHECK(common_lines(families[static_cast<std::size_t>(a)], families[static_cast<std::size_t>(b)]) == 0);
                }
        }
        CHECK(fq3_line_family(3, 1).line_count() == 27);
    }

    TEST_CASE("incidence sums")
    {
        for (int q : {2, 3, 5}) {
            const auto plane = build_affine_plane(q);
            std::vector<int> all(plane.line_count());
            for (std::size_t i = 0; i < all.size(); ++i)
                all[i] = static_cast<int>(i);
            const auto res = incidence_sum(plane, all, VertexSet::range(q * q));
            CHECK(res.sum == (q * q + q) * q);
        }
        const auto plane = build_affine_plane(5);
        const auto classes = parallel_classes(plane);
        const VertexSet line0(plane.line(static_cast<std::size_t>(classes[0][0])));
        const auto one = incidence_sum(plane, classes[0], line0);
        CHECK(one.sum == 5);
        CHECK(one.bound == doctest::Approx(5.0 * 5 / 5 - 2 * std::sqrt(5.0) * std::sqrt(25.0)));
        CHECK(one.bound < 0);

        // AG(2,7): 500 random 20-sets against half the lines
        const auto p7 = build_affine_plane(7);
        Rng rng(7);
        int violations = 0;
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<int> lines(p7.line_count());
            for (std::size_t i = 0; i < lines.size(); ++i)
                lines[i] = static_cast<int>(i);
            for (std::size_t i = lines.size() - 1; i > 0; --i)
                std::swap(lines[i], lines[rng.below(i + 1)]);
            lines.resize(lines.size() / 2);
            std::vector<int> pts(49);
            for (int i = 0; i < 49; ++i)
                pts[static_cast<std::size_t>(i)] = i;
            for (std::size_t i = pts.size() - 1; i > 0; --i)
                std::swap(pts[i], pts[rng.below(i + 1)]);
            pts.resize(20);
            const VertexSet u(pts);
            const auto res = incidence_sum(p7, lines, u);
            std::int64_t direct = 0;
            for (int li : lines)
                for (int v : p7.line(static_cast<std::size_t>(li)))
                    direct += u.contains(v) ? 1 : 0;
            CHECK(res.sum == direct);
            const double bound = 20.0 * static_cast<double>(lines.size()) / 7 -
                                 2 * std::sqrt(7.0) * std::sqrt(20.0 * static_cast<double>(lines.size()));
            CHECK(res.bound == doctest::Approx(bound));
            violations += static_cast<double>(res.sum) >= res.bound ? 0 : 1;
        }
        CHECK(violations == 0);
    }

    TEST_CASE("incidence text format")
    {
        for (const auto& s : {build_affine_plane(3), fq3_line_family(3, 2), build_affine_plane(2)})
            CHECK(parse_incidence(format_incidence(s)) == s);
        CHECK_THROWS_AS(parse_incidence("inc affine 4\n"), ParseError);
        CHECK_THROWS_AS(parse_incidence("nonsense"), ParseError);
    }

    TEST_CASE("bad parameters")
    {
        CHECK_THROWS(build_affine_plane(4));
        CHECK_THROWS(fq3_line_family(3, 3));
        CHECK_THROWS(fq3_line_family(6, 0));
    }
}
