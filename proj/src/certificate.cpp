#include <ramsat/certificate.hpp>

namespace ramsat {

using nlohmann::json;

namespace {

json members(const VertexSet& s)
{
    return json(std::vector<int>(s.begin(), s.end()));
}

Status parse_status(const std::string& s)
{
    if (s == "holds")
        return Status::holds;
    if (s == "fails")
        return Status::fails;
    if (s == "unknown")
        return Status::unknown;
    throw std::invalid_argument("certificate: unknown verdict '" + s + "'");
}

}  // namespace

json witness_to_json(const Witness& w)
{
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>)
                return nullptr;
            else if constexpr (std::is_same_v<T, VertexColoringWitness>)
                return {{"type", "vertex-coloring"}, {"colors", x.colors}};
            else if constexpr (std::is_same_v<T, ObservationWitness>)
                return {{"type", "subset"}, {"color", x.color}, {"subset", members(x.subset)}};
            else
                return {{"type", "monochromatic-clique"}, {"color", x.color}, {"clique", members(x.clique)}};
        },
        w);
}

json graph_to_json(const SimpleGraph& g)
{
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return {{"type", "graph"}, {"n", g.vertex_count()}, {"edges", edges}};
}

json pattern_to_json(const ColoredCompleteGraph& c)
{
    return {{"type", "colored-graph"}, {"cg", format_colored_graph(c)}};
}

json ksubset_coloring_to_json(const KSubsetColoring& chi)
{
    return {{"type", "ksubset-coloring"}, {"ksc", format_ksubset_coloring(chi)}};
}

json Certificate::to_json() const
{
    if (claim.empty())
        throw std::logic_error("certificate: empty claim");
    if (verdict == Status::fails && witness.is_null())
        throw std::logic_error("certificate: 'fails' verdict without a witness");
    if (verdict == Status::unknown && budget.is_null())
        throw std::logic_error("certificate: 'unknown' verdict without a recorded budget");
    json j = {
        {"claim", claim},
        {"params", params},
        {"verdict", std::string(to_string(verdict))},
        {"value", value},
        {"witness", witness},
        {"checked", checked},
        {"seed", seed ? json(*seed) : json(nullptr)},
        {"budget", budget},
        {"sampled", sampled},
        {"tool_version", std::string(tool_version)},
        {"wall_time_ms", wall_time_ms},
    };
    return j;
}

std::string Certificate::dump() const
{
    return to_json().dump();
}

std::string Certificate::body() const
{
    auto j = to_json();
    j.erase("wall_time_ms");
    return j.dump();
}

Certificate Certificate::from_json(const json& j)
{
    Certificate c;
    c.claim = j.at("claim").get<std::string>();
    c.params = j.at("params");
    c.verdict = parse_status(j.at("verdict").get<std::string>());
    c.value = j.value("value", json());
    c.witness = j.value("witness", json());
    c.checked = j.at("checked").get<std::uint64_t>();
    if (!j.at("seed").is_null())
        c.seed = j.at("seed").get<std::uint64_t>();
    c.budget = j.value("budget", json());
    c.sampled = j.value("sampled", false);
    c.wall_time_ms = j.value("wall_time_ms", std::int64_t{0});
    c.to_json();  // re-validate
    return c;
}

}  // namespace ramsat
