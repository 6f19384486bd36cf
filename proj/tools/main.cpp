#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relspin/intrinsicality.hpp"
#include "relspin/report_io.hpp"
#include "scenario.hpp"
#include "verify_suite.hpp"

using namespace relspin;
using namespace relspin::cli;

namespace {

struct CommonOptions {
    std::string scenario_path;
    std::string out_path;
    std::string format = "json";
    std::vector<std::string> tolerance_overrides;
    bool has_seed = false;
    std::uint64_t seed = 0;
    bool break_epsilon = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--scenario", opt.scenario_path,
                    "Scenario JSON file (bundled default if omitted)");
    cmd->add_option("--out", opt.out_path, "Output file (stdout if omitted)");
    cmd->add_option("--format", opt.format, "Output format: json, csv or md")
        ->check(CLI::IsMember({"json", "csv", "md"}));
    cmd->add_option("--tol", opt.tolerance_overrides, "Tolerance override NAME=VALUE (repeatable)");
    cmd->add_option("--seed", opt.seed, "Seed override")->each([&opt](const std::string&) {
        opt.has_seed = true;
    });
}

Scenario load_scenario(const CommonOptions& opt) {
    std::string text;
    if (opt.scenario_path.empty()) {
        text = kDefaultScenarioJson;
    } else {
        std::ifstream in(opt.scenario_path, std::ios::binary);
        if (!in) throw ScenarioError("scenario: cannot open file " + opt.scenario_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    Scenario sc = parse_scenario(text);
    if (opt.has_seed) sc.seed = opt.seed;
    for (const std::string& ov : opt.tolerance_overrides) {
        const auto eq = ov.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ScenarioError("scenario: --tol expects NAME=VALUE, got \"" + ov + "\"");
        try {
            sc.tolerances[ov.substr(0, eq)] = std::stod(ov.substr(eq + 1));
        } catch (const std::exception&) {
            throw ScenarioError("scenario: --tol value is not a number in \"" + ov + "\"");
        }
    }
    return sc;
}

void emit(const CommonOptions& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw ScenarioError("scenario: cannot write " + opt.out_path);
    out << payload;
}

void write_scenario_echo(JsonWriter& w, const Scenario& sc, bool break_epsilon) {
    w.key("scenario");
    w.begin_object();
    w.key("name");
    w.value(sc.name);
    w.key("spin_twice");
    w.value(static_cast<long long>(sc.spin.twice_s));
    w.key("mass");
    w.value(sc.mass);
    w.key("seed");
    w.value(static_cast<long long>(sc.seed));
    w.key("break_epsilon_convention");
    w.value(break_epsilon);
    w.end_object();
}

int cmd_verify(const CommonOptions& opt) {
    const Scenario sc = load_scenario(opt);
    const double orientation = opt.break_epsilon ? -1.0 : 1.0;
    const std::vector<CheckReport> checks = run_verify_suite(sc, orientation);
    bool all_passed = true;
    for (const auto& c : checks) all_passed = all_passed && c.passed;

    std::string payload;
    if (opt.format == "json") {
        JsonWriter w;
        w.begin_object();
        w.key("schema_version");
        w.value(1LL);
        w.key("command");
        w.value("verify");
        write_scenario_echo(w, sc, opt.break_epsilon);
        w.key("checks");
        w.begin_array();
        for (const auto& c : checks) write_report(w, c);
        w.end_array();
        w.key("all_passed");
        w.value(all_passed);
        w.end_object();
        payload = w.str() + "\n";
    } else if (opt.format == "csv") {
        std::string s = "check,tolerance,max_residual,passed\r\n";
        for (const auto& c : checks) {
            s += csv_escape(c.check) + "," + format_double(c.tolerance) + "," +
                 format_double(c.max_residual) + "," + (c.passed ? "true" : "false") + "\r\n";
        }
        payload = s;
    } else {
        std::string s = "| check | tolerance | max residual | passed |\n|---|---|---|---|\n";
        for (const auto& c : checks) {
            s += "| " + c.check + " | " + format_double(c.tolerance) + " | " +
                 format_double(c.max_residual) + " | " + (c.passed ? "yes" : "no") + " |\n";
        }
        payload = s;
    }
    emit(opt, payload);
    return all_passed ? 0 : 1;
}

struct CompareRow {
    std::string state;
    std::string candidate;
    std::string transform;
    Complex lhs;
    Complex rhs;
    double gap;
};

int cmd_compare(const CommonOptions& opt) {
    const Scenario sc = load_scenario(opt);
    if (sc.transforms.empty())
        throw ScenarioError("scenario.boosts: compare needs at least one transformation");

    // Candidates: the three fixed Wigner components against scalar
    // contractions of the intrinsic tensor on each coefficient slot.
    std::vector<std::pair<std::string, ObserverFamily>> candidates;
    const char* axis_names[3] = {"wigner_Sx", "wigner_Sy", "wigner_Sz"};
    for (int i = 0; i < 3; ++i)
        candidates.emplace_back(axis_names[i], wigner_component_family(sc.spin, i));
    const char* slot_names[6] = {"intrinsic_c01", "intrinsic_c02", "intrinsic_c03",
                                 "intrinsic_c12", "intrinsic_c13", "intrinsic_c23"};
    for (int slot = 0; slot < 6; ++slot) {
        AntisymTensor c;
        c.comp[static_cast<std::size_t>(slot)] = 1.0;
        candidates.emplace_back(slot_names[slot], intrinsic_contraction_family(sc.spin, c));
    }

    std::vector<std::pair<std::string, LorentzMatrix>> transforms;
    transforms.emplace_back("identity", LorentzMatrix::identity());
    for (const auto& t : sc.transforms) transforms.emplace_back(t.label(), t.build());

    const ObserverFrame lab = ObserverFrame::lab();
    std::vector<CompareRow> rows;
    for (const auto& state_spec : sc.states) {
        const MomentumSpinState psi = sc.build_state(state_spec);
        for (const auto& [cname, family] : candidates) {
            const Complex lhs = expectation(psi, family(lab));
            for (const auto& [tname, lambda] : transforms) {
                const Complex rhs =
                    expectation(boost_state(lambda, psi), family(lab.transformed(lambda)));
                rows.push_back({state_spec.name, cname, tname, lhs, rhs, std::abs(lhs - rhs)});
            }
        }
    }

    std::string payload;
    if (opt.format == "csv") {
        std::string s = "state,candidate,transform,lhs,rhs,gap\r\n";
        for (const auto& r : rows) {
            s += csv_escape(r.state) + "," + csv_escape(r.candidate) + "," +
                 csv_escape(r.transform) + "," + format_double(r.lhs.real()) + "," +
                 format_double(r.rhs.real()) + "," + format_double(r.gap) + "\r\n";
        }
        payload = s;
    } else if (opt.format == "md") {
        std::string s =
            "| state | candidate | transform | lhs | rhs | gap |\n|---|---|---|---|---|---|\n";
        for (const auto& r : rows) {
            s += "| " + r.state + " | " + r.candidate + " | " + r.transform + " | " +
                 format_double(r.lhs.real()) + " | " + format_double(r.rhs.real()) + " | " +
                 format_double(r.gap) + " |\n";
        }
        payload = s;
    } else {
        JsonWriter w;
        w.begin_object();
        w.key("schema_version");
        w.value(1LL);
        w.key("command");
        w.value("compare");
        write_scenario_echo(w, sc, false);
        w.key("rows");
        w.begin_array();
        for (const auto& r : rows) {
            w.begin_object();
            w.key("state");
            w.value(r.state);
            w.key("candidate");
            w.value(r.candidate);
            w.key("transform");
            w.value(r.transform);
            w.key("lhs");
            w.value(r.lhs.real());
            w.key("rhs");
            w.value(r.rhs.real());
            w.key("gap");
            w.value(r.gap);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        payload = w.str() + "\n";
    }
    emit(opt, payload);
    return 0;
}

int cmd_em(const CommonOptions& opt) {
    const Scenario sc = load_scenario(opt);
    if (!sc.field.has_value()) throw ScenarioError("scenario.field: required by the em command");
    if (opt.format != "json") throw ScenarioError("scenario: the em command only emits json");
    const EMField& field = *sc.field;
    const double orientation = opt.break_epsilon ? -1.0 : 1.0;

    JsonWriter w;
    w.begin_object();
    w.key("schema_version");
    w.value(1LL);
    w.key("command");
    w.value("em");
    write_scenario_echo(w, sc, opt.break_epsilon);
    w.key("field");
    w.begin_object();
    w.key("E");
    w.begin_array();
    for (double x : field.electric) w.value(x);
    w.end_array();
    w.key("B");
    w.begin_array();
    for (double x : field.magnetic) w.value(x);
    w.end_array();
    w.key("alpha");
    w.value(field.alpha);
    w.end_object();

    w.key("spectra");
    w.begin_array();
    double three_form_dev = 0.0;
    for (const auto& q : sc.momenta) {
        const OnShellMomentum p(sc.mass, q);
        const SectorOperator h = interaction_hamiltonian(sc.spin, p, field, orientation);
        const auto eigs = spectrum(h);
        three_form_dev = std::max(
            three_form_dev,
            std::max(max_abs(h.matrix - rest_frame_b_form(sc.spin, p, field, orientation).matrix),
                     max_abs(h.matrix - lab_frame_form(sc.spin, p, field).matrix)));
        w.begin_object();
        w.key("momentum");
        w.begin_array();
        for (double x : q) w.value(x);
        w.end_array();
        w.key("eigenvalues");
        w.begin_array();
        for (double e : eigs) w.value(e);
        w.end_array();
        w.end_object();
    }
    w.end_array();

    std::vector<std::array<double, 3>> nr_momenta;
    for (double scale : {1e-3, 3e-3, 1e-2, 3e-2}) nr_momenta.push_back({scale * sc.mass, 0.0, 0.0});
    const CheckReport nr =
        nr_limit_check(sc.spin, field, sc.mass, nr_momenta, sc.tolerance("nr_exponent_band", 0.2));
    w.key("nr_limit");
    write_report(w, nr);
    w.key("three_form_max_deviation");
    w.value(three_form_dev);
    w.end_object();
    emit(opt, w.str() + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for relativistic spin observables"};
    app.require_subcommand(1);

    CommonOptions verify_opt, compare_opt, em_opt;
    CLI::App* verify = app.add_subcommand("verify", "Run the full identity suite");
    add_common(verify, verify_opt);
    verify->add_flag("--break-epsilon-convention", verify_opt.break_epsilon,
                     "Debug: flip the field-tensor orientation; the lab-form match must fail");
    CLI::App* compare = app.add_subcommand("compare", "Tabulate observer pairs per candidate");
    add_common(compare, compare_opt);
    CLI::App* em = app.add_subcommand("em", "Spectra and the non-relativistic limit");
    add_common(em, em_opt);
    em->add_flag("--break-epsilon-convention", em_opt.break_epsilon,
                 "Debug: flip the field-tensor orientation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_opt);
        if (compare->parsed()) return cmd_compare(compare_opt);
        if (em->parsed()) return cmd_em(em_opt);
    } catch (const ScenarioError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
