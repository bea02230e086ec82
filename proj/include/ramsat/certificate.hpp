#pragma once

#include <ramsat/constructions.hpp>
#include <ramsat/reduction.hpp>
#include <ramsat/saturation.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace ramsat {

inline constexpr std::string_view tool_version = "0.1.0";

/// Verdict record emitted by every CLI command. Serialised as key-sorted
/// compact JSON so that two runs can be compared byte for byte.
struct Certificate {
    std::string claim;
    nlohmann::json params = nlohmann::json::object();
    Status verdict = Status::unknown;
    nlohmann::json value;    ///< null when the claim has no scalar result
    nlohmann::json witness;  ///< required when verdict is fails
    std::uint64_t checked = 0;
    std::optional<std::uint64_t> seed;
    nlohmann::json budget;   ///< required when verdict is unknown
    bool sampled = false;
    std::int64_t wall_time_ms = 0;

    /// Throws std::logic_error when the invariants on witness/budget fail.
    nlohmann::json to_json() const;
    /// Canonical text of the full record.
    std::string dump() const;
    /// Canonical text without wall_time_ms; identical across reruns.
    std::string body() const;

    static Certificate from_json(const nlohmann::json& j);
};

nlohmann::json witness_to_json(const Witness& w);
nlohmann::json graph_to_json(const SimpleGraph& g);
nlohmann::json pattern_to_json(const ColoredCompleteGraph& c);
nlohmann::json ksubset_coloring_to_json(const KSubsetColoring& chi);

}  // namespace ramsat
