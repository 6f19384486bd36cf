#include "scenario.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "relspin/report_io.hpp"

namespace relspin::cli {

using nlohmann::json;

const char* const kDefaultScenarioJson = R"json({
  "schema_version": 1,
  "name": "default",
  "spin_twice": 1,
  "mass": 1.0,
  "momenta": [
    [0.0, 0.0, 0.0],
    [1.0, 0.0, 0.0],
    [0.0, 0.0, 1.1752011936438014],
    [0.3, -0.4, 0.5]
  ],
  "boosts": [
    {"type": "boost", "axis": [0.0, 1.0, 0.0], "rapidity": 1.0},
    {"type": "boost", "axis": [0.0, 0.0, 1.0], "rapidity": 0.5},
    {"type": "rotation", "axis": [0.0, 0.0, 1.0], "angle": 0.7},
    {"type": "rotation", "axis": [1.0, 0.0, 0.0], "angle": 1.2}
  ],
  "states": [
    {"name": "rest_spin_x", "momentum_index": 0, "spin_axis": "x"},
    {"name": "moving_z_spin_z", "momentum_index": 2, "spin_axis": "z"}
  ],
  "field": {"E": [0.3, 0.0, 0.2], "B": [0.1, 0.2, 0.7], "alpha": 1.0},
  "seed": 20240817,
  "tolerances": {}
}
)json";

LorentzMatrix TransformSpec::build() const {
    return kind == Kind::Boost ? LorentzMatrix::boost(axis, value)
                               : LorentzMatrix::rotation(axis, value);
}

std::string TransformSpec::label() const {
    std::string out = kind == Kind::Boost ? "boost" : "rotation";
    out += "(" + format_double(axis[0]) + "," + format_double(axis[1]) + "," +
           format_double(axis[2]) + ";" + format_double(value) + ")";
    return out;
}

double Scenario::tolerance(const std::string& key, double fallback) const {
    const auto it = tolerances.find(key);
    return it == tolerances.end() ? fallback : it->second;
}

MomentumSpinState Scenario::build_state(const StateSpec& spec) const {
    const OnShellMomentum p(mass, momenta[spec.momentum_index]);
    const SpinMatrices s = angular_momentum_matrices(spin);
    std::array<double, 3> axis{0.0, 0.0, 0.0};
    axis[static_cast<std::size_t>(spec.spin_axis - 'x')] = 1.0;

    // Highest-weight eigenvector of n.S, phase fixed by the largest entry.
    Eigen::SelfAdjointEigenSolver<CMatrix> es(s.along(axis));
    CVector amp = es.eigenvectors().col(spin.dimension() - 1);
    Eigen::Index imax = 0;
    amp.cwiseAbs().maxCoeff(&imax);
    amp *= std::polar(1.0, -std::arg(amp(imax)));
    return MomentumSpinState::single(spin, p, amp);
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw ScenarioError("scenario." + field + ": " + message);
}

double number_at(const json& j, const std::string& field) {
    if (!j.is_number()) fail(field, "expected a number");
    return j.get<double>();
}

std::array<double, 3> vec3_at(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 3) fail(field, "expected an array of three numbers");
    return {number_at(j[0], field), number_at(j[1], field), number_at(j[2], field)};
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ScenarioError(std::string("scenario: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ScenarioError("scenario: top level must be an object");

    Scenario s;
    if (j.contains("schema_version") && j["schema_version"].get<int>() != 1)
        fail("schema_version", "unsupported version");
    if (j.contains("name")) s.name = j["name"].get<std::string>();

    if (!j.contains("spin_twice")) fail("spin_twice", "missing");
    if (!j["spin_twice"].is_number_integer() || j["spin_twice"].get<int>() < 0)
        fail("spin_twice", "expected a non-negative integer");
    s.spin = SpinValue{j["spin_twice"].get<int>()};

    if (!j.contains("mass")) fail("mass", "missing");
    s.mass = number_at(j["mass"], "mass");
    if (!(s.mass > 0.0)) fail("mass", "must be positive");

    if (!j.contains("momenta") || !j["momenta"].is_array() || j["momenta"].empty())
        fail("momenta", "expected a non-empty array");
    for (std::size_t i = 0; i < j["momenta"].size(); ++i)
        s.momenta.push_back(vec3_at(j["momenta"][i], "momenta[" + std::to_string(i) + "]"));

    if (j.contains("boosts")) {
        if (!j["boosts"].is_array()) fail("boosts", "expected an array");
        for (std::size_t i = 0; i < j["boosts"].size(); ++i) {
            const json& b = j["boosts"][i];
            const std::string field = "boosts[" + std::to_string(i) + "]";
            if (!b.is_object() || !b.contains("type")) fail(field, "expected {type, axis, ...}");
            TransformSpec t;
            const std::string type = b["type"].get<std::string>();
            if (type == "boost") {
                t.kind = TransformSpec::Kind::Boost;
                if (!b.contains("rapidity")) fail(field, "boost needs a rapidity");
                t.value = number_at(b["rapidity"], field + ".rapidity");
            } else if (type == "rotation") {
                t.kind = TransformSpec::Kind::Rotation;
                if (!b.contains("angle")) fail(field, "rotation needs an angle");
                t.value = number_at(b["angle"], field + ".angle");
            } else {
                fail(field + ".type", "expected \"boost\" or \"rotation\"");
            }
            if (!b.contains("axis")) fail(field, "missing axis");
            t.axis = vec3_at(b["axis"], field + ".axis");
            if (t.axis[0] == 0.0 && t.axis[1] == 0.0 && t.axis[2] == 0.0)
                fail(field + ".axis", "must be nonzero");
            s.transforms.push_back(t);
        }
    }

    if (j.contains("states")) {
        if (!j["states"].is_array()) fail("states", "expected an array");
        for (std::size_t i = 0; i < j["states"].size(); ++i) {
            const json& st = j["states"][i];
            const std::string field = "states[" + std::to_string(i) + "]";
            StateSpec spec;
            spec.name = st.contains("name") ? st["name"].get<std::string>()
                                            : "state" + std::to_string(i);
            if (!st.contains("momentum_index")) fail(field, "missing momentum_index");
            const long long idx = st["momentum_index"].get<long long>();
            if (idx < 0 || static_cast<std::size_t>(idx) >= s.momenta.size())
                fail(field + ".momentum_index", "out of range");
            spec.momentum_index = static_cast<std::size_t>(idx);
            const std::string ax =
                st.contains("spin_axis") ? st["spin_axis"].get<std::string>() : "z";
            if (ax != "x" && ax != "y" && ax != "z") fail(field + ".spin_axis", "expected x, y or z");
            spec.spin_axis = ax[0];
            s.states.push_back(spec);
        }
    }
    if (s.states.empty()) s.states.push_back({"default", 0, 'z'});

    if (j.contains("field")) {
        const json& f = j["field"];
        if (!f.is_object() || !f.contains("E") || !f.contains("B"))
            fail("field", "expected {E, B, alpha}");
        EMField em;
        em.electric = vec3_at(f["E"], "field.E");
        em.magnetic = vec3_at(f["B"], "field.B");
        em.alpha = f.contains("alpha") ? number_at(f["alpha"], "field.alpha") : 1.0;
        for (double x : em.electric)
            if (!std::isfinite(x)) fail("field.E", "components must be finite");
        for (double x : em.magnetic)
            if (!std::isfinite(x)) fail("field.B", "components must be finite");
        s.field = em;
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer()) fail("seed", "expected an integer");
        s.seed = j["seed"].get<std::uint64_t>();
    }

    if (j.contains("tolerances")) {
        if (!j["tolerances"].is_object()) fail("tolerances", "expected an object");
        for (const auto& [key, val] : j["tolerances"].items())
            s.tolerances[key] = number_at(val, "tolerances." + key);
    }
    return s;
}

}  // namespace relspin::cli
