#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "relspin/em_coupling.hpp"
#include "relspin/poincare_rep.hpp"

namespace relspin::cli {

/// Raised on malformed scenario input; the message names the field.
struct ScenarioError : std::runtime_error {
    explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

struct TransformSpec {
    enum class Kind { Boost, Rotation } kind = Kind::Boost;
    std::array<double, 3> axis{0.0, 0.0, 1.0};
    double value = 0.0;  // rapidity or angle

    LorentzMatrix build() const;
    std::string label() const;
};

struct StateSpec {
    std::string name;
    std::size_t momentum_index = 0;
    char spin_axis = 'x';
};

struct Scenario {
    std::string name = "unnamed";
    SpinValue spin{1};
    double mass = 1.0;
    std::vector<std::array<double, 3>> momenta;
    std::vector<TransformSpec> transforms;
    std::vector<StateSpec> states;
    std::optional<EMField> field;
    std::uint64_t seed = 1;
    std::map<std::string, double> tolerances;

    double tolerance(const std::string& key, double fallback) const;
    MomentumSpinState build_state(const StateSpec& spec) const;
};

/// Parse and validate scenario JSON; throws ScenarioError naming the field.
Scenario parse_scenario(const std::string& json_text);

/// The scenario bundled into the binary (same content as
/// scenarios/default.json), so `verify` runs with zero arguments.
extern const char* const kDefaultScenarioJson;

}  // namespace relspin::cli
