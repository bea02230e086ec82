#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "cli.hpp"

#include <ramsat/certificate.hpp>
#include <ramsat/combinatorics.hpp>
#include <ramsat/constructions.hpp>
#include <ramsat/geometry.hpp>
#include <ramsat/reduction.hpp>
#include <ramsat/saturation.hpp>

#include <sstream>

namespace py = pybind11;
using namespace ramsat;

namespace {

std::vector<int> members(const VertexSet& s) { return {s.begin(), s.end()}; }

std::optional<std::vector<int>> members(const std::optional<VertexSet>& s)
{
    if (!s)
        return std::nullopt;
    return members(*s);
}

// Verdicts cross the boundary as plain dicts; the witness uses the same
// JSON layout as the CLI certificates.
py::dict verdict_dict(const Verdict& v)
{
    py::dict d;
    d["status"] = std::string(to_string(v.status));
    d["witness"] = witness_to_json(v.witness).dump();
    d["checked"] = v.checked;
    d["sampled"] = v.sampled;
    return d;
}

CheckOptions options(std::uint64_t cap, std::uint64_t sample_trials, std::uint64_t seed, unsigned threads)
{
    return CheckOptions{cap, sample_trials, seed, threads};
}

AffineStrategy strategy_from(const std::string& name)
{
    if (name == "parallel-balanced")
        return AffineStrategy::parallel_balanced;
    if (name == "round-robin")
        return AffineStrategy::round_robin;
    throw std::invalid_argument("strategy must be 'parallel-balanced' or 'round-robin'");
}

}  // namespace

PYBIND11_MODULE(_ramsat, m)
{
    m.doc() = "Finite checks for generalized Ramsey functions and semisaturated patterns";
    m.attr("__version__") = std::string(tool_version);

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<SimpleGraph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return SimpleGraph::from_edges(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_static("complete", &SimpleGraph::complete)
        .def_static("cycle", &SimpleGraph::cycle)
        .def_property_readonly("n", &SimpleGraph::vertex_count)
        .def("edge_count", &SimpleGraph::edge_count)
        .def("has_edge", &SimpleGraph::has_edge)
        .def("add_edge", &SimpleGraph::add_edge)
        .def("edges", &SimpleGraph::edges)
        .def("complement", &SimpleGraph::complement)
        .def("to_text", &format_graph)
        .def_static("from_text", &parse_graph)
        .def(py::self == py::self)
        .def("__repr__", [](const SimpleGraph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", edges=" + std::to_string(g.edge_count()) + ")";
        });

    py::class_<ColoredCompleteGraph>(m, "Pattern")
        .def(py::init<int, int>(), py::arg("n"), py::arg("r"))
        .def_property_readonly("n", &ColoredCompleteGraph::vertex_count)
        .def_property_readonly("r", &ColoredCompleteGraph::color_count)
        .def("color", &ColoredCompleteGraph::color)
        .def("set_color", &ColoredCompleteGraph::set_color)
        .def("color_class", &ColoredCompleteGraph::color_class, py::return_value_policy::copy)
        .def("is_complete", &ColoredCompleteGraph::is_complete)
        .def("to_text", &format_colored_graph)
        .def_static("from_text", &parse_colored_graph)
        .def(py::self == py::self);

    // graph-core
    m.def("find_clique", [](const SimpleGraph& g, int size, unsigned threads) {
        return members(find_clique(g, size, {threads}));
    }, py::arg("g"), py::arg("m"), py::arg("threads") = 1);
    m.def("find_independent_set", [](const SimpleGraph& g, int size, unsigned threads) {
        return members(find_independent_set(g, size, {threads}));
    }, py::arg("g"), py::arg("m"), py::arg("threads") = 1);
    m.def("turan_independent_set", [](const SimpleGraph& g) { return members(turan_independent_set(g)); });
    m.def("turan_bound", &turan_bound);

    // geometry
    m.def("smallest_prime_in", &smallest_prime_in);
    m.def("affine_plane_lines", [](int q) { return build_affine_plane(q).lines(); }, py::arg("q"));
    m.def("parallel_classes", [](int q) { return parallel_classes(build_affine_plane(q)); }, py::arg("q"));
    m.def("fq3_family_lines", [](int q, int lambda) { return fq3_line_family(q, lambda).lines(); },
          py::arg("q"), py::arg("lam"));
    m.def("incidence_sum", [](int q, const std::vector<int>& family, const std::vector<int>& points) {
        const auto res = incidence_sum(build_affine_plane(q), family, VertexSet(points));
        return std::make_pair(res.sum, res.bound);
    }, py::arg("q"), py::arg("family"), py::arg("points"));

    // constructions
    m.def("affine_coloring", [](int q, int r, const std::string& strategy, std::uint64_t seed) {
        return affine_coloring(q, r, strategy_from(strategy), seed);
    }, py::arg("q"), py::arg("r"), py::arg("strategy") = "parallel-balanced", py::arg("seed") = 0);
    m.def("fq3_coloring", [](int q, int r) { return fq3_coloring(q, r).coloring; }, py::arg("q"), py::arg("r"));
    m.def("lower_bound_p", &lower_bound_p, py::arg("s"), py::arg("t"));
    m.def("sample_gnp", [](int n, double p, std::uint64_t seed) { return sample_gnp({n, p, seed}); },
          py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("count_bad_sets", [](const SimpleGraph& g, int n, int s, int t, std::uint64_t trials, std::uint64_t seed) {
        const auto res = count_bad_sets(g, n, s, t, trials ? BadSetMode::sampled(trials, seed) : BadSetMode::exhaustive());
        py::dict d;
        d["exact"] = res.exact;
        d["value"] = res.value;
        d["hits"] = res.hits;
        d["trials"] = res.trials;
        d["subsets"] = res.subsets;
        d["standard_error"] = res.standard_error;
        return d;
    }, py::arg("g"), py::arg("n"), py::arg("s"), py::arg("t"), py::arg("trials") = 0, py::arg("seed") = 0);

    // reduction
    m.def("has_unbalanced_set", [](const SimpleGraph& g, int n, int s, int t) {
        return members(has_unbalanced_set(g, n, s, t));
    });
    m.def("g_oracle", [](int n, int s, int t, int n_max, unsigned threads) {
        return g_oracle(n, s, t, n_max, threads).value;
    }, py::arg("n"), py::arg("s"), py::arg("t"), py::arg("n_max"), py::arg("threads") = 1);
    m.def("f_oracle", [](int n, int s, int t, int k, int n_max, unsigned threads) {
        return f_oracle({n, s, t, k}, n_max, threads).value;
    }, py::arg("n"), py::arg("s"), py::arg("t"), py::arg("k"), py::arg("n_max"), py::arg("threads") = 1);

    // saturation
    m.def("is_semisaturated", [](const ColoredCompleteGraph& c, int k, std::uint64_t cap, std::uint64_t sample_trials,
                                 std::uint64_t seed, unsigned threads) {
        return verdict_dict(is_semisaturated(c, k, options(cap, sample_trials, seed, threads)));
    }, py::arg("pattern"), py::arg("k"), py::arg("cap") = 1'000'000'000, py::arg("sample_trials") = 0,
       py::arg("seed") = 0, py::arg("threads") = 1);
    m.def("is_semisaturated_direct", [](const ColoredCompleteGraph& c, int k) {
        return verdict_dict(is_semisaturated_direct(c, k));
    }, py::arg("pattern"), py::arg("k"));
    m.def("check_observation", [](const ColoredCompleteGraph& c, int k, int r, unsigned threads) {
        return verdict_dict(check_observation(c, k, r, options(1'000'000'000, 0, 0, threads)));
    }, py::arg("pattern"), py::arg("k"), py::arg("r"), py::arg("threads") = 1);
    m.def("is_kkfree_pattern", &is_kkfree_pattern, py::arg("pattern"), py::arg("k"));
    m.def("is_saturated", [](const ColoredCompleteGraph& c, int k) { return verdict_dict(is_saturated(c, k)); },
          py::arg("pattern"), py::arg("k"));
    m.def("ssat_lower_bound_formula", &ssat_lower_bound_formula);
    m.def("ssat_recursion_floor", &ssat_recursion_floor);
    m.def("ssat_search", [](int r, int k, int n, std::uint64_t budget, unsigned threads) {
        const auto res = ssat_search(r, k, n, {budget, threads});
        return std::make_tuple(std::string(to_string(res.status)), res.witness, res.nodes);
    }, py::arg("r"), py::arg("k"), py::arg("n"), py::arg("budget") = 50'000'000, py::arg("threads") = 1);

    // the CLI, in process
    m.def("run", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
