#include "cli.hpp"

#include <ramsat/certificate.hpp>
#include <ramsat/combinatorics.hpp>
#include <ramsat/constructions.hpp>
#include <ramsat/geometry.hpp>
#include <ramsat/reduction.hpp>
#include <ramsat/rng.hpp>
#include <ramsat/saturation.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace ramsat::cli {

namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw IoError("cannot write '" + path + "'");
}

std::vector<int> parse_int_list(const std::string& text, const char* flag)
{
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string(flag) + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

int exit_code(Status s)
{
    switch (s) {
    case Status::holds:
        return ExitCode::holds;
    case Status::fails:
        return ExitCode::fails;
    case Status::unknown:
        break;
    }
    return ExitCode::unknown;
}

/// Options shared by subcommands; each subcommand reads the ones it binds.
struct Flags {
    int q = 0, r = 0, k = 0, n = 0, s = 0, t = 0, lambda = 0, vertices = 0;
    int n_max = 6, n_min = 1;
    std::optional<int> single_n;
    double p = -1.0;
    std::optional<std::uint64_t> seed;
    std::string strategy = "parallel-balanced";
    std::string in, out, pure_out;
    std::string tie_break = "nonedge", fallback = "red", mode = "exact";
    std::string points, lines, classes;
    unsigned threads = 1;
    std::uint64_t cap = 1'000'000'000, sample_trials = 0, trials = 10'000, budget = 50'000'000;
};

CheckOptions check_options(const Flags& f)
{
    if (f.sample_trials > 0 && !f.seed)
        throw UsageError("--sample-trials requires --seed");
    return CheckOptions{f.cap, f.sample_trials, f.seed.value_or(0), f.threads};
}

ColoredCompleteGraph load_pattern(const Flags& f)
{
    return parse_colored_graph(read_file(f.in));
}

// --- command bodies -------------------------------------------------------

Certificate construct_affine(const Flags& f)
{
    AffineStrategy strategy;
    if (f.strategy == "parallel-balanced")
        strategy = AffineStrategy::parallel_balanced;
    else if (f.strategy == "round-robin")
        strategy = AffineStrategy::round_robin;
    else
        throw UsageError("--strategy must be parallel-balanced or round-robin");
    if (strategy == AffineStrategy::round_robin && !f.seed)
        throw UsageError("round-robin is randomized and requires --seed");
    const auto c = affine_coloring(f.q, f.r, strategy, f.seed.value_or(0));
    write_file(f.out, format_colored_graph(c));

    Certificate cert;
    cert.claim = "construct-affine";
    cert.params = {{"q", f.q}, {"r", f.r}, {"strategy", f.strategy}, {"out", f.out}};
    cert.seed = f.seed;
    json sizes = json::array();
    for (const auto& cls : c.classes())
        sizes.push_back(cls.edge_count());
    cert.value = {{"n", c.vertex_count()}, {"class_edges", sizes}, {"complete", c.is_complete()}};
    cert.verdict = c.is_complete() ? Status::holds : Status::fails;
    if (!c.is_complete())
        cert.witness = pattern_to_json(c);
    cert.checked = static_cast<std::uint64_t>(c.colored_pairs());
    return cert;
}

Certificate construct_fq3(const Flags& f)
{
    const auto built = fq3_coloring(f.q, f.r);
    write_file(f.out, format_colored_graph(built.coloring));
    if (!f.pure_out.empty())
        write_file(f.pure_out, format_colored_graph(ColoredCompleteGraph(built.coloring.vertex_count(),
                                                                         built.family_classes)));
    Certificate cert;
    cert.claim = "construct-fq3";
    cert.params = {{"q", f.q}, {"r", f.r}, {"out", f.out}};
    json family = json::array();
    for (const auto& cls : built.family_classes)
        family.push_back(cls.edge_count());
    cert.value = {{"n", built.coloring.vertex_count()},
                  {"family_edges", family},
                  {"leftover_edges", built.leftover.edge_count()}};
    cert.verdict = built.coloring.is_complete() ? Status::holds : Status::fails;
    if (cert.verdict == Status::fails)
        cert.witness = pattern_to_json(built.coloring);
    cert.checked = static_cast<std::uint64_t>(built.coloring.colored_pairs());
    return cert;
}

Certificate construct_gnp(const Flags& f)
{
    if (!f.seed)
        throw UsageError("construct gnp requires --seed");
    const auto g = sample_gnp({f.n, f.p, *f.seed});
    write_file(f.out, format_graph(g));
    Certificate cert;
    cert.claim = "construct-gnp";
    cert.params = {{"n", f.n}, {"p", f.p}, {"out", f.out}, {"generator", std::string(Rng::name)}};
    cert.seed = f.seed;
    cert.value = {{"edges", g.edge_count()}};
    cert.verdict = Status::holds;
    cert.checked = binomial(f.n, 2);
    return cert;
}

Certificate from_verdict(std::string claim, json params, const Verdict& v, const Flags& f)
{
    Certificate cert;
    cert.claim = std::move(claim);
    cert.params = std::move(params);
    cert.verdict = v.status;
    cert.witness = witness_to_json(v.witness);
    cert.checked = v.checked;
    cert.sampled = v.sampled;
    if (v.sampled)
        cert.seed = f.seed;
    if (v.status == Status::unknown)
        cert.budget = {{"cap", f.cap}, {"sample_trials", f.sample_trials}};
    return cert;
}

Certificate verify(const std::string& which, const Flags& f)
{
    const auto c = load_pattern(f);
    json params = {{"in", f.in}, {"k", f.k}, {"n", c.vertex_count()}, {"r", c.color_count()}};
    if (which == "ssat")
        return from_verdict("semisaturated", params, is_semisaturated(c, f.k, check_options(f)), f);
    if (which == "ssat-direct")
        return from_verdict("semisaturated-direct", params, is_semisaturated_direct(c, f.k, check_options(f)), f);
    if (which == "saturated")
        return from_verdict("saturated", params, is_saturated(c, f.k, check_options(f)), f);
    if (which == "observation") {
        params["r"] = f.r;
        params["classes"] = c.color_count();
        return from_verdict("observation", params, check_observation(c, f.k, f.r, check_options(f)), f);
    }
    // kkfree
    Certificate cert;
    cert.claim = "kk-free";
    cert.params = params;
    const auto clique = find_monochromatic_clique(c, f.k);
    cert.verdict = clique ? Status::fails : Status::holds;
    if (clique)
        cert.witness = witness_to_json(*clique);
    cert.checked = static_cast<std::uint64_t>(c.color_count());
    return cert;
}

Certificate oracle(const std::string& which, const Flags& f)
{
    Certificate cert;
    if (which == "g") {
        cert.claim = "g-oracle";
        cert.params = {{"n", f.n}, {"s", f.s}, {"t", f.t}, {"n_max", f.n_max}};
        const auto res = g_oracle(f.n, f.s, f.t, f.n_max, f.threads);
        cert.checked = res.graphs_checked;
        if (res.value) {
            cert.verdict = Status::holds;
            cert.value = *res.value;
            // every n-set of this graph on value-1 vertices is balanced
            if (res.witness)
                cert.witness = graph_to_json(*res.witness);
        } else {
            cert.verdict = Status::unknown;
            cert.budget = {{"n_max", f.n_max}};
            if (res.witness)
                cert.witness = graph_to_json(*res.witness);
        }
        return cert;
    }
    cert.claim = "f-oracle";
    cert.params = {{"n", f.n}, {"s", f.s}, {"t", f.t}, {"k", f.k}, {"n_max", f.n_max}};
    const auto res = f_oracle(RamseyParams{f.n, f.s, f.t, f.k}, f.n_max, f.threads);
    cert.checked = res.colorings_checked;
    if (res.witness)
        cert.witness = ksubset_coloring_to_json(*res.witness);
    if (res.value) {
        cert.verdict = Status::holds;
        cert.value = *res.value;
    } else {
        cert.verdict = Status::unknown;
        cert.budget = {{"n_max", f.n_max}};
    }
    return cert;
}

Certificate reduce(const std::string& which, const Flags& f)
{
    Certificate cert;
    cert.verdict = Status::holds;
    if (which == "chi-to-graph") {
        if (f.tie_break != "nonedge" && f.tie_break != "edge")
            throw UsageError("--tie-break must be nonedge or edge");
        const auto chi = parse_ksubset_coloring(read_file(f.in));
        const auto g = coloring_to_graph(chi, f.s, f.t, f.tie_break == "edge" ? TieBreak::edge : TieBreak::nonedge);
        write_file(f.out, format_graph(g));
        cert.claim = "chi-to-graph";
        cert.params = {{"in", f.in}, {"s", f.s}, {"t", f.t}, {"tie_break", f.tie_break}, {"out", f.out}};
        cert.value = {{"n", g.vertex_count()}, {"edges", g.edge_count()}};
        cert.checked = binomial(g.vertex_count(), 2);
        return cert;
    }
    if (f.fallback != "red" && f.fallback != "blue")
        throw UsageError("--default must be red or blue");
    const auto g = parse_graph(read_file(f.in));
    const auto chi = graph_to_coloring(g, f.s, f.t, f.fallback == "blue" ? DefaultColor::blue : DefaultColor::red);
    write_file(f.out, format_ksubset_coloring(chi));
    cert.claim = "graph-to-chi";
    cert.params = {{"in", f.in}, {"s", f.s}, {"t", f.t}, {"default", f.fallback}, {"out", f.out}};
    std::uint64_t blue = 0;
    for (std::uint64_t i = 0; i < chi.size(); ++i)
        blue += chi.is_blue(i) ? 1 : 0;
    cert.value = {{"N", chi.ground_size()}, {"k", chi.k()}, {"blue", blue}, {"red", chi.size() - blue}};
    cert.checked = chi.size();
    return cert;
}

Certificate search(const Flags& f)
{
    const int lo = f.single_n.value_or(f.n_min);
    const int hi = f.single_n.value_or(f.n_max);
    if (lo < 1 || hi < lo)
        throw UsageError("need 1 <= --n-min <= --n-max");
    Certificate cert;
    cert.claim = "ssat-search";
    cert.params = {{"r", f.r}, {"k", f.k}, {"n_min", lo}, {"n_max", hi}, {"budget", f.budget}};
    json runs = json::array();
    for (int n = lo; n <= hi; ++n) {
        const auto res = ssat_search(f.r, f.k, n, {f.budget, f.threads});
        cert.checked += res.nodes;
        runs.push_back({{"n", n}, {"status", std::string(to_string(res.status))}, {"nodes", res.nodes}});
        if (res.status == SearchStatus::found) {
            cert.verdict = Status::holds;
            cert.value = {{"n", n}, {"runs", runs}};
            cert.witness = pattern_to_json(*res.witness);
            if (!f.out.empty())
                write_file(f.out, format_colored_graph(*res.witness));
            return cert;
        }
        if (res.status == SearchStatus::budget) {
            cert.verdict = Status::unknown;
            cert.value = {{"n", nullptr}, {"runs", runs}};
            cert.budget = {{"nodes", f.budget}, {"n", n}};
            return cert;
        }
    }
    cert.verdict = Status::fails;
    cert.value = {{"n", nullptr}, {"runs", runs}};
    cert.witness = {{"type", "exhaustion"}, {"runs", runs}};
    return cert;
}

Certificate experiment_bad_sets(const Flags& f)
{
    if (!f.seed)
        throw UsageError("experiment bad-sets requires --seed");
    const double p = f.p >= 0.0 ? f.p : lower_bound_p(f.s, f.t);
    const auto g = sample_gnp({f.vertices, p, *f.seed});
    BadSetMode mode;
    if (f.mode == "exact")
        mode = BadSetMode::exhaustive(f.threads);
    else if (f.mode == "sampled")
        mode = BadSetMode::sampled(f.trials, *f.seed + 1);
    else
        throw UsageError("--mode must be exact or sampled");
    const auto res = count_bad_sets(g, f.n, f.s, f.t, mode);
    Certificate cert;
    cert.claim = "bad-sets";
    cert.params = {{"vertices", f.vertices}, {"p", p},   {"n", f.n}, {"s", f.s}, {"t", f.t},
                   {"mode", f.mode},         {"generator", std::string(Rng::name)}};
    if (f.mode == "sampled")
        cert.params["trials"] = f.trials;
    cert.seed = f.seed;
    cert.verdict = Status::holds;
    cert.checked = res.trials;
    cert.value = {{"exact", res.exact},        {"value", res.value}, {"hits", res.hits},
                  {"subsets", res.subsets},    {"standard_error", res.standard_error},
                  {"graph_edges", g.edge_count()}};
    return cert;
}

Certificate geom(const std::string& which, const Flags& f)
{
    Certificate cert;
    if (which == "plane" || which == "fq3-family") {
        const auto s = which == "plane" ? build_affine_plane(f.q) : fq3_line_family(f.q, f.lambda);
        if (!f.out.empty())
            write_file(f.out, format_incidence(s));
        const auto report = check_invariants(s);
        cert.claim = which == "plane" ? "affine-plane" : "fq3-family";
        cert.params = {{"q", f.q}};
        if (which != "plane")
            cert.params["lambda"] = f.lambda;
        cert.value = {{"points", s.point_count()}, {"lines", s.line_count()}};
        cert.verdict = report.ok ? Status::holds : Status::fails;
        if (!report.ok)
            cert.witness = {{"type", "invariant"}, {"failure", report.failure}};
        cert.checked = s.line_count();
        return cert;
    }
    // incidence
    const auto plane = build_affine_plane(f.q);
    std::vector<int> family = parse_int_list(f.lines, "--lines");
    if (!f.classes.empty()) {
        const auto classes = parallel_classes(plane);
        for (int ci : parse_int_list(f.classes, "--classes")) {
            if (ci < 0 || static_cast<std::size_t>(ci) >= classes.size())
                throw UsageError("--classes: index out of range");
            family.insert(family.end(), classes[static_cast<std::size_t>(ci)].begin(),
                          classes[static_cast<std::size_t>(ci)].end());
        }
    }
    const VertexSet u(parse_int_list(f.points, "--points"));
    const auto res = incidence_sum(plane, family, u);
    cert.claim = "incidence-bound";
    cert.params = {{"q", f.q}, {"points", f.points}, {"lines", f.lines}, {"classes", f.classes}};
    cert.value = {{"sum", res.sum}, {"bound", res.bound}};
    cert.verdict = static_cast<double>(res.sum) >= res.bound ? Status::holds : Status::fails;
    if (cert.verdict == Status::fails)
        cert.witness = {{"type", "incidence"}, {"sum", res.sum}, {"bound", res.bound}};
    cert.checked = family.size();
    return cert;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Finite verification of Ramsey-type and semisaturation claims", "ramsat"};
    app.require_subcommand(1);
    Flags f;
    std::function<Certificate()> action;

    auto threads = [&](CLI::App* sub) { sub->add_option("--threads", f.threads, "Worker threads")->check(CLI::Range(1u, 1024u)); };
    auto seed = [&](CLI::App* sub) { sub->add_option("--seed", f.seed, "64-bit seed"); };

    // construct
    auto* construct = app.add_subcommand("construct", "Build a colouring or random graph");
    construct->require_subcommand(1);
    {
        auto* a = construct->add_subcommand("affine", "Affine-plane r-colouring of K_{q^2}");
        a->add_option("--q", f.q)->required();
        a->add_option("--r", f.r)->required();
        a->add_option("--strategy", f.strategy)->check(CLI::IsMember({"parallel-balanced", "round-robin"}));
        a->add_option("--out", f.out)->required();
        seed(a);
        a->callback([&] { action = [&] { return construct_affine(f); }; });

        auto* b = construct->add_subcommand("fq3", "F_q^3 line-family colouring of K_{q^3}");
        b->add_option("--q", f.q)->required();
        b->add_option("--r", f.r)->required();
        b->add_option("--out", f.out)->required();
        b->add_option("--pure-out", f.pure_out, "Also write the uncompleted family classes");
        b->callback([&] { action = [&] { return construct_fq3(f); }; });

        auto* c = construct->add_subcommand("gnp", "Erdos-Renyi random graph");
        c->add_option("--n", f.n)->required();
        c->add_option("--p", f.p)->required()->check(CLI::Range(0.0, 1.0));
        c->add_option("--out", f.out)->required();
        seed(c);
        c->callback([&] { action = [&] { return construct_gnp(f); }; });
    }

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Check a .cg colour pattern");
    verify_cmd->require_subcommand(1);
    const std::pair<const char*, const char*> checks[] = {
        {"ssat", "Semisaturation via vertex colourings"},
        {"ssat-direct", "Semisaturation by colouring every new edge"},
        {"observation", "Every ceil(n/r)-set holds a K_{k-1} in classes 1..r"},
        {"kkfree", "No class contains a K_k"},
        {"saturated", "K_k-free classes and semisaturated"},
    };
    for (const auto& [name, about] : checks) {
        auto* sub = verify_cmd->add_subcommand(name, about);
        sub->add_option("--in", f.in)->required();
        sub->add_option("--k", f.k)->required();
        if (std::string(name) == "observation")
            sub->add_option("--r", f.r)->required();
        if (std::string(name) != "kkfree") {
            sub->add_option("--cap", f.cap, "Largest exhaustive enumeration");
            sub->add_option("--sample-trials", f.sample_trials, "Sample when over the cap");
            seed(sub);
            threads(sub);
        }
        const std::string which = name;
        sub->callback([&, which] { action = [&, which] { return verify(which, f); }; });
    }

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force f or g");
    oracle_cmd->require_subcommand(1);
    for (const char* name : {"f", "g"}) {
        auto* sub = oracle_cmd->add_subcommand(name, std::string(name) == "f" ? "Smallest N forcing a good n-set"
                                                                              : "Smallest N forcing an unbalanced n-set");
        sub->add_option("--n", f.n)->required();
        sub->add_option("--s", f.s)->required();
        sub->add_option("--t", f.t)->required();
        if (std::string(name) == "f")
            sub->add_option("--k", f.k)->required();
        sub->add_option("--n-max", f.n_max)->required();
        threads(sub);
        const std::string which = name;
        sub->callback([&, which] { action = [&, which] { return oracle(which, f); }; });
    }

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "Translate between k-subset colourings and graphs");
    reduce_cmd->require_subcommand(1);
    {
        auto* a = reduce_cmd->add_subcommand("chi-to-graph", "k-subset colouring to graph");
        a->add_option("--in", f.in)->required();
        a->add_option("--s", f.s)->required();
        a->add_option("--t", f.t)->required();
        a->add_option("--tie-break", f.tie_break)->check(CLI::IsMember({"nonedge", "edge"}));
        a->add_option("--out", f.out)->required();
        a->callback([&] { action = [&] { return reduce("chi-to-graph", f); }; });

        auto* b = reduce_cmd->add_subcommand("graph-to-chi", "Graph to k-subset colouring");
        b->add_option("--in", f.in)->required();
        b->add_option("--s", f.s)->required();
        b->add_option("--t", f.t)->required();
        b->add_option("--default", f.fallback)->check(CLI::IsMember({"red", "blue"}));
        b->add_option("--out", f.out)->required();
        b->callback([&] { action = [&] { return reduce("graph-to-chi", f); }; });
    }

    // search
    auto* search_cmd = app.add_subcommand("search", "Search for small patterns");
    search_cmd->require_subcommand(1);
    {
        auto* a = search_cmd->add_subcommand("ssat", "Smallest semisaturated pattern");
        a->add_option("--r", f.r)->required();
        a->add_option("--k", f.k)->required();
        a->add_option("--n", f.single_n, "Single vertex count");
        a->add_option("--n-min", f.n_min);
        a->add_option("--n-max", f.n_max);
        a->add_option("--budget", f.budget, "Node budget per vertex count");
        a->add_option("--out", f.out, "Write the witness pattern");
        threads(a);
        a->callback([&] { action = [&] { return search(f); }; });
    }

    // experiment
    auto* exp_cmd = app.add_subcommand("experiment", "Random-graph experiments");
    exp_cmd->require_subcommand(1);
    {
        auto* a = exp_cmd->add_subcommand("bad-sets", "Count n-sets lacking K_s or an independent t-set in G(N,p)");
        a->add_option("--vertices", f.vertices, "N")->required();
        a->add_option("--p", f.p, "Edge probability (default: the lower-bound p for s, t)");
        a->add_option("--n", f.n)->required();
        a->add_option("--s", f.s)->required();
        a->add_option("--t", f.t)->required();
        a->add_option("--mode", f.mode)->check(CLI::IsMember({"exact", "sampled"}));
        a->add_option("--trials", f.trials);
        seed(a);
        threads(a);
        a->callback([&] { action = [&] { return experiment_bad_sets(f); }; });
    }

    // geom
    auto* geom_cmd = app.add_subcommand("geom", "Finite geometry");
    geom_cmd->require_subcommand(1);
    {
        auto* a = geom_cmd->add_subcommand("plane", "AG(2,q)");
        a->add_option("--q", f.q)->required();
        a->add_option("--out", f.out);
        a->callback([&] { action = [&] { return geom("plane", f); }; });

        auto* b = geom_cmd->add_subcommand("fq3-family", "Line family of F_q^3 for one lambda");
        b->add_option("--q", f.q)->required();
        b->add_option("--lambda", f.lambda)->required();
        b->add_option("--out", f.out);
        b->callback([&] { action = [&] { return geom("fq3-family", f); }; });

        auto* c = geom_cmd->add_subcommand("incidence", "Point-line incidence sum against its lower bound");
        c->add_option("--q", f.q)->required();
        c->add_option("--points", f.points, "Comma-separated point indices")->required();
        c->add_option("--lines", f.lines, "Comma-separated line indices");
        c->add_option("--classes", f.classes, "Comma-separated parallel-class indices");
        c->callback([&] { action = [&] { return geom("incidence", f); }; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ExitCode::holds;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitCode::holds;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage;
    }
    if (!action) {
        err << "error: no command\n";
        return ExitCode::usage;
    }

    const auto start = std::chrono::steady_clock::now();
    Certificate cert;
    try {
        cert = action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::io_error;
    } catch (const ParseError& e) {
        err << "error: " << f.in << ": " << e.what() << '\n';
        return ExitCode::io_error;
    } catch (const BudgetExceeded& e) {
        cert = Certificate{};
        cert.claim = "budget-exceeded";
        cert.params = {{"command", args}};
        cert.verdict = Status::unknown;
        cert.budget = {{"reason", e.what()}};
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return ExitCode::usage;
    }
    cert.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    out << cert.dump() << '\n';
    return exit_code(cert.verdict);
}

}  // namespace ramsat::cli
