#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// Paths injected by the build so the binary and bundled scenario can be
// driven end to end.
#ifndef RELSPIN_CLI_PATH
#define RELSPIN_CLI_PATH "relspin"
#endif
#ifndef RELSPIN_SOURCE_DIR
#define RELSPIN_SOURCE_DIR "."
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string out_path = std::string(std::tmpnam(nullptr)) + ".out";
    const std::string cmd = std::string(RELSPIN_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    r.output = buf.str();
    std::remove(out_path.c_str());
    return r;
}

std::string write_temp(const std::string& content) {
    const std::string path = std::string(std::tmpnam(nullptr)) + ".json";
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("verify with the bundled scenario passes and emits valid json") {
    const RunResult r = run("verify");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["command"] == "verify");
    CHECK(doc["all_passed"] == true);
    CHECK(doc["checks"].is_array());
    CHECK(doc["checks"].size() >= 20);
    for (const auto& c : doc["checks"]) {
        CHECK(c.contains("check"));
        CHECK(c.contains("tolerance"));
        CHECK(c.contains("max_residual"));
        CHECK(c.contains("passed"));
        CHECK(c.contains("samples"));
        CHECK(c.contains("metadata"));
        const bool invariant = c["passed"].get<bool>() ==
                               (c["max_residual"].get<double>() <= c["tolerance"].get<double>());
        CHECK(invariant);
    }
}

TEST_CASE("verify output is byte identical across runs") {
    const RunResult a = run("verify");
    const RunResult b = run("verify");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    // The bundled scenario file reproduces the embedded default.
    const RunResult c = run("verify --scenario " RELSPIN_SOURCE_DIR "/scenarios/default.json");
    CHECK(c.exit_code == 0);
    CHECK(c.output == a.output);
}

TEST_CASE("verify rejects malformed scenarios with exit 2") {
    {
        const std::string path =
            write_temp(R"({"spin_twice": 1, "mass": -1.0, "momenta": [[0,0,0]]})");
        const RunResult r = run("verify --scenario " + path);
        CHECK(r.exit_code == 2);
        CHECK(r.output.find("scenario.mass") != std::string::npos);
        std::remove(path.c_str());
    }
    {
        const std::string path = write_temp(R"({"mass": 1.0, "momenta": [[0,0,0]]})");
        const RunResult r = run("verify --scenario " + path);
        CHECK(r.exit_code == 2);
        CHECK(r.output.find("scenario.spin_twice") != std::string::npos);
        std::remove(path.c_str());
    }
    {
        const RunResult r = run("verify --scenario /nonexistent/path.json");
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("breaking the tensor orientation fails the lab-form audit") {
    const RunResult r = run("verify --break-epsilon-convention --format csv");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("em_three_form_equivalence") != std::string::npos);
    // The equivalence line itself must be the failure.
    std::istringstream lines(r.output);
    std::string line;
    bool equivalence_failed = false;
    while (std::getline(lines, line))
        if (line.find("em_three_form_equivalence") != std::string::npos)
            equivalence_failed = line.find("false") != std::string::npos;
    CHECK(equivalence_failed);
}

TEST_CASE("compare emits the identity row and the pinned witness rows") {
    const RunResult r = run("compare --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.output);
    std::string line;
    std::getline(lines, line);
    CHECK(line.find("state,candidate,transform,lhs,rhs,gap") == 0);

    bool identity_ok = true;
    double witness_gap = -1.0;
    double rest_boost_gap = -1.0;
    double max_intrinsic_gap = 0.0;
    while (std::getline(lines, line)) {
        const auto tail = line.find_last_of(',');
        const double gap = std::stod(line.substr(tail + 1));
        if (line.find(",identity,") != std::string::npos && gap != 0.0) identity_ok = false;
        if (line.find("moving_z_spin_z,wigner_Sz,\"boost(0,1,0;1)\"") != std::string::npos)
            witness_gap = gap;
        if (line.find("rest_spin_x,wigner_Sz,\"boost(0,1,0;1)\"") != std::string::npos)
            rest_boost_gap = gap;
        if (line.find("intrinsic_c") != std::string::npos)
            max_intrinsic_gap = std::max(max_intrinsic_gap, gap);
    }
    CHECK(identity_ok);
    // Transverse boost on the moving sector: the frozen little-group gap.
    CHECK(witness_gap == doctest::Approx(0.04361550439899575).epsilon(1e-9));
    // Pure boost on a rest sector: trivial little group, no gap at all.
    CHECK(rest_boost_gap == 0.0);
    // Scalar contractions of the tensor agree for every observer pair.
    CHECK(max_intrinsic_gap <= 1e-9);
}

TEST_CASE("em reports spectra and the scaling fit") {
    const RunResult r = run("em");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["command"] == "em");
    CHECK(doc["spectra"].is_array());
    CHECK(doc["spectra"].size() == 4);
    CHECK(doc["three_form_max_deviation"].get<double>() <= 1e-10);
    CHECK(doc["nr_limit"]["passed"] == true);

    // Rest sector, B = (0,0,1), alpha = 1, spin 1/2: spectrum {-1/2, +1/2}.
    const std::string path = write_temp(R"({
      "spin_twice": 1, "mass": 1.0, "momenta": [[0,0,0]],
      "field": {"E": [0,0,0], "B": [0,0,1], "alpha": 1.0}
    })");
    const RunResult pinned = run("em --scenario " + path);
    CHECK(pinned.exit_code == 0);
    const auto doc2 = nlohmann::json::parse(pinned.output);
    const auto eigs = doc2["spectra"][0]["eigenvalues"];
    CHECK(eigs[0].get<double>() == doctest::Approx(-0.5));
    CHECK(eigs[1].get<double>() == doctest::Approx(0.5));
    std::remove(path.c_str());

    // Electric-only field at rest couples to nothing: all zeros.
    const std::string epath = write_temp(R"({
      "spin_twice": 1, "mass": 1.0, "momenta": [[0,0,0]],
      "field": {"E": [1,0,0], "B": [0,0,0], "alpha": 1.0}
    })");
    const RunResult ezero = run("em --scenario " + epath);
    const auto doc3 = nlohmann::json::parse(ezero.output);
    for (const auto& e : doc3["spectra"][0]["eigenvalues"])
        CHECK(std::abs(e.get<double>()) <= 1e-12);
    std::remove(epath.c_str());
}

TEST_CASE("tolerance overrides flow into the report") {
    const RunResult r = run("verify --tol classical=1e-3 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("classical_translation_constant,0.001") != std::string::npos);

    const RunResult bad = run("verify --tol classical");
    CHECK(bad.exit_code == 2);
}
