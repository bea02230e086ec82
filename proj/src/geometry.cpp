#include <ramsat/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ramsat {

namespace {

constexpr std::int64_t max_points = std::int64_t{1} << 21;

}  // namespace

bool is_prime(std::int64_t x)
{
    if (x < 2)
        return false;
    for (std::int64_t d = 2; d * d <= x; ++d)
        if (x % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::int64_t q) : q_(static_cast<int>(q))
{
    if (q > max_order || !is_prime(q))
        throw std::invalid_argument("PrimeField: " + std::to_string(q) + " is not a prime <= 2^20");
}

int PrimeField::inv(int a) const
{
    if (a % q_ == 0)
        throw std::domain_error("PrimeField: zero has no inverse");
    // Fermat: a^(q-2)
    std::int64_t result = 1, base = a % q_;
    for (int e = q_ - 2; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base % q_;
        base = base * base % q_;
    }
    return static_cast<int>(result);
}

std::int64_t smallest_prime_in(std::int64_t lo, std::int64_t hi)
{
    if (lo < 1 || lo > hi || hi > PrimeField::max_order)
        throw std::invalid_argument("smallest_prime_in: need 1 <= lo <= hi <= 2^20");
    for (std::int64_t p = lo; p <= hi; ++p)
        if (is_prime(p))
            return p;
    throw std::domain_error("no prime in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// ---------------------------------------------------------------------------

IncidenceStructure::IncidenceStructure(IncidenceKind kind, int q, std::optional<int> lambda, int point_count,
                                       std::vector<std::vector<int>> lines)
    : kind_(kind), q_(q), lambda_(lambda), point_count_(point_count), lines_(std::move(lines))
{
    PrimeField field(q);
    if (kind == IncidenceKind::fq3_family && (!lambda || *lambda < 0 || *lambda >= q))
        throw std::invalid_argument("IncidenceStructure: fq3 family needs lambda in [0, q)");
    if (kind == IncidenceKind::affine_plane && lambda)
        throw std::invalid_argument("IncidenceStructure: affine plane takes no lambda");
    if (point_count < 0 || point_count > max_points)
        throw std::invalid_argument("IncidenceStructure: point count out of range");
    point_to_lines_.resize(static_cast<std::size_t>(point_count));
    for (std::size_t i = 0; i < lines_.size(); ++i) {
        const auto& l = lines_[i];
        for (std::size_t j = 0; j < l.size(); ++j) {
            if (l[j] < 0 || l[j] >= point_count)
                throw std::invalid_argument("IncidenceStructure: point index out of range in line " + std::to_string(i));
            if (j > 0 && l[j] <= l[j - 1])
                throw std::invalid_argument("IncidenceStructure: line " + std::to_string(i) + " not strictly sorted");
            point_to_lines_[static_cast<std::size_t>(l[j])].push_back(static_cast<int>(i));
        }
    }
}

std::string_view to_string(IncidenceKind kind)
{
    return kind == IncidenceKind::affine_plane ? "affine" : "fq3";
}

IncidenceStructure build_affine_plane(int q)
{
    PrimeField f(q);
    if (static_cast<std::int64_t>(q) * q > max_points)
        throw std::invalid_argument("build_affine_plane: q too large");
    auto point = [q](int x, int y) { return x * q + y; };
    std::vector<std::vector<int>> lines;
    lines.reserve(static_cast<std::size_t>(q) * (q + 1));
    for (int m = 0; m < q; ++m)
        for (int b = 0; b < q; ++b) {
            std::vector<int> l;
            l.reserve(static_cast<std::size_t>(q));
            for (int x = 0; x < q; ++x)
                l.push_back(point(x, f.add(f.mul(m, x), b)));
            std::sort(l.begin(), l.end());
            lines.push_back(std::move(l));
        }
    for (int c = 0; c < q; ++c) {
        std::vector<int> l;
        for (int y = 0; y < q; ++y)
            l.push_back(point(c, y));
        lines.push_back(std::move(l));
    }
    return IncidenceStructure(IncidenceKind::affine_plane, q, std::nullopt, q * q, std::move(lines));
}

std::vector<std::vector<int>> parallel_classes(const IncidenceStructure& plane)
{
    if (plane.kind() != IncidenceKind::affine_plane)
        throw std::invalid_argument("parallel_classes: structure is not an affine plane");
    const std::size_t count = plane.line_count();
    std::vector<int> class_of(count, -1);
    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < count; ++i) {
        if (class_of[i] >= 0)
            continue;
        const int id = static_cast<int>(classes.size());
        classes.push_back({static_cast<int>(i)});
        class_of[i] = id;
        std::vector<char> covered(static_cast<std::size_t>(plane.point_count()), 0);
        for (int p : plane.line(i))
            covered[static_cast<std::size_t>(p)] = 1;
        for (std::size_t j = i + 1; j < count; ++j) {
            if (class_of[j] >= 0)
                continue;
            const auto& l = plane.line(j);
            if (std::none_of(l.begin(), l.end(), [&](int p) { return covered[static_cast<std::size_t>(p)]; })) {
                for (int p : l)
                    covered[static_cast<std::size_t>(p)] = 1;
                class_of[j] = id;
                classes.back().push_back(static_cast<int>(j));
            }
        }
    }
    return classes;
}

IncidenceStructure fq3_line_family(int q, int lambda)
{
    PrimeField f(q);
    if (lambda < 0 || lambda >= q)
        throw std::invalid_argument("fq3_line_family: lambda must lie in [0, q)");
    const std::int64_t points = static_cast<std::int64_t>(q) * q * q;
    if (points > max_points)
        throw std::invalid_argument("fq3_line_family: q too large");
    auto index = [q](int x, int y, int z) { return (x * q + y) * q + z; };

    std::vector<std::vector<int>> lines;
    lines.reserve(static_cast<std::size_t>(points));
    for (int mu = 0; mu < q; ++mu) {
        std::set<std::vector<int>> seen;
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y)
                for (int z = 0; z < q; ++z) {
                    std::vector<int> l;
                    l.reserve(static_cast<std::size_t>(q));
                    for (int beta = 0; beta < q; ++beta)
                        l.push_back(index(f.add(x, beta), f.add(y, f.mul(beta, lambda)), f.add(z, f.mul(beta, mu))));
                    std::sort(l.begin(), l.end());
                    if (seen.insert(l).second)
                        lines.push_back(std::move(l));
                }
    }
    return IncidenceStructure(IncidenceKind::fq3_family, q, lambda, static_cast<int>(points), std::move(lines));
}

IncidenceSum incidence_sum(const IncidenceStructure& structure, std::span<const int> family, const VertexSet& u)
{
    if (!u.fits(structure.point_count()))
        throw std::out_of_range("incidence_sum: point out of range");
    IncidenceSum out;
    for (int li : family) {
        if (li < 0 || static_cast<std::size_t>(li) >= structure.line_count())
            throw std::out_of_range("incidence_sum: line index out of range");
        for (int p : structure.line(static_cast<std::size_t>(li)))
            out.sum += u.contains(p) ? 1 : 0;
    }
    const double us = static_cast<double>(u.size());
    const double fs = static_cast<double>(family.size());
    const double q = structure.q();
    out.bound = us * fs / q - 2.0 * std::sqrt(q) * std::sqrt(us * fs);
    return out;
}

InvariantReport check_invariants(const IncidenceStructure& s)
{
    const std::int64_t q = s.q();
    const bool affine = s.kind() == IncidenceKind::affine_plane;
    const std::int64_t want_points = affine ? q * q : q * q * q;
    const std::int64_t want_lines = affine ? q * q + q : q * q * q;
    const std::int64_t per_point = affine ? q + 1 : q;

    auto fail = [](std::string what) { return InvariantReport{false, std::move(what)}; };
    if (s.point_count() != want_points)
        return fail("point count " + std::to_string(s.point_count()) + " != " + std::to_string(want_points));
    if (static_cast<std::int64_t>(s.line_count()) != want_lines)
        return fail("line count " + std::to_string(s.line_count()) + " != " + std::to_string(want_lines));
    for (std::size_t i = 0; i < s.line_count(); ++i)
        if (static_cast<std::int64_t>(s.line(i).size()) != q)
            return fail("line " + std::to_string(i) + " does not have q points");
    for (int p = 0; p < s.point_count(); ++p)
        if (static_cast<std::int64_t>(s.lines_through(p).size()) != per_point)
            return fail("point " + std::to_string(p) + " lies on " + std::to_string(s.lines_through(p).size()) +
                        " lines");

    // pair multiplicities, upper triangle
    const std::size_t n = static_cast<std::size_t>(s.point_count());
    std::vector<std::uint8_t> seen(n * n, 0);
    for (const auto& l : s.lines())
        for (std::size_t a = 0; a < l.size(); ++a)
            for (std::size_t b = a + 1; b < l.size(); ++b) {
                auto& c = seen[static_cast<std::size_t>(l[a]) * n + static_cast<std::size_t>(l[b])];
                if (c >= 1)
                    return fail("points " + std::to_string(l[a]) + " and " + std::to_string(l[b]) +
                                " share more than one line");
                c = 1;
            }
    if (affine)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (!seen[a * n + b])
                    return fail("points " + std::to_string(a) + " and " + std::to_string(b) + " share no line");
    return {};
}

std::size_t common_lines(const IncidenceStructure& a, const IncidenceStructure& b)
{
    std::set<std::vector<int>> lines(a.lines().begin(), a.lines().end());
    return static_cast<std::size_t>(
        std::count_if(b.lines().begin(), b.lines().end(), [&](const auto& l) { return lines.count(l) > 0; }));
}

std::string format_incidence(const IncidenceStructure& s)
{
    std::ostringstream out;
    out << "inc " << to_string(s.kind()) << ' ' << s.q();
    if (s.lambda())
        out << ' ' << *s.lambda();
    out << '\n';
    for (const auto& l : s.lines()) {
        for (std::size_t i = 0; i < l.size(); ++i)
            out << (i ? " " : "") << l[i];
        out << '\n';
    }
    return out.str();
}

IncidenceStructure parse_incidence(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::optional<IncidenceKind> kind;
    int q = 0;
    std::optional<int> lambda;
    std::vector<std::vector<int>> lines;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::istringstream fields(line);
        if (!kind) {
            std::string tag, k;
            if (!(fields >> tag >> k >> q) || tag != "inc")
                throw ParseError(lineno, "expected header 'inc <kind> <q> [<lambda>]'");
            if (k == "affine")
                kind = IncidenceKind::affine_plane;
            else if (k == "fq3")
                kind = IncidenceKind::fq3_family;
            else
                throw ParseError(lineno, "unknown incidence kind '" + k + "'");
            int lam = 0;
            if (fields >> lam)
                lambda = lam;
            if (!is_prime(q) || q > PrimeField::max_order)
                throw ParseError(lineno, "q is not a prime <= 2^20");
            continue;
        }
        std::vector<int> pts;
        long long p = 0;
        while (fields >> p) {
            if (p < 0 || p > max_points)
                throw ParseError(lineno, "point index out of range");
            pts.push_back(static_cast<int>(p));
        }
        if (!fields.eof())
            throw ParseError(lineno, "non-numeric point index");
        lines.push_back(std::move(pts));
    }
    if (!kind)
        throw ParseError(0, "missing 'inc' header");
    const int points = *kind == IncidenceKind::affine_plane ? q * q : q * q * q;
    try {
        return IncidenceStructure(*kind, q, lambda, points, std::move(lines));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

}  // namespace ramsat
