#include <doctest.h>

#include <cstdlib>

#include "rigidity/batch.hpp"
#include "rigidity/enumerate.hpp"

using namespace rigidity;

TEST_CASE("oracle sweep is clean and the kernel matches the serial reference") {
    OracleSweep serial = oracle_agreement_sweep(5, false);
    OracleSweep parallel = oracle_agreement_sweep(5, true);
    CHECK(serial.graphs_checked == 31); // 1+1+2+6+21
    CHECK(serial.mismatches.empty());
    CHECK(parallel.graphs_checked == serial.graphs_checked);
    CHECK(parallel.mismatches == serial.mismatches);
}

TEST_CASE("candidate filters") {
    auto cylinder5 = theorem_candidates(TheoremCheck::Cylinder, 5);
    for (const Graph& g : cylinder5) CHECK(g.edge_count() == 2 * g.vertex_count() - 2);
    auto spheres5 = theorem_candidates(TheoremCheck::Spheres, 5);
    for (const Graph& g : spheres5) CHECK(g.edge_count() == 2 * g.vertex_count() - 3);
    // The cone shadow keeps everything.
    CHECK(theorem_candidates(TheoremCheck::Cone, 5).size() == connected_graphs_up_to(5).size());
}

TEST_CASE("cylinder sweep at small scale: parallel equals serial, zero disagreements") {
    auto graphs = theorem_candidates(TheoremCheck::Cylinder, 5);
    VerificationSummary serial = run_theorem_check(TheoremCheck::Cylinder, graphs, 7, false);
    VerificationSummary parallel = run_theorem_check(TheoremCheck::Cylinder, graphs, 7, true);
    CHECK(serial.graphs_checked == static_cast<int>(graphs.size()));
    CHECK(serial.disagreements.empty());
    CHECK(parallel.agreements == serial.agreements);
    CHECK(summary_to_json_text(parallel) == summary_to_json_text(serial));
    CHECK(serial.agreements + static_cast<int>(serial.disagreements.size()) ==
          serial.graphs_checked);
}

TEST_CASE("cone and trees sweeps at small scale") {
    for (TheoremCheck check : {TheoremCheck::Cone, TheoremCheck::Trees}) {
        auto graphs = theorem_candidates(check, 5);
        VerificationSummary s = run_theorem_check(check, graphs, 3, true);
        CHECK(s.disagreements.empty());
    }
}

TEST_CASE("planes and spheres sweeps at small scale") {
    for (TheoremCheck check : {TheoremCheck::Planes, TheoremCheck::Spheres}) {
        auto graphs = theorem_candidates(check, 5);
        VerificationSummary s = run_theorem_check(check, graphs, 11, true);
        CHECK(s.disagreements.empty());
    }
}

TEST_CASE("thread cap honors the environment variable") {
    setenv("SURFACE_RIGIDITY_THREADS", "1", 1);
    CHECK(effective_threads() == 1);
    unsetenv("SURFACE_RIGIDITY_THREADS");
    CHECK(effective_threads() >= 1);
}

TEST_CASE("summary JSON is schema versioned") {
    VerificationSummary s;
    s.theorem = "cylinder";
    s.graphs_checked = 1;
    s.agreements = 0;
    s.disagreements.push_back({"C~", "true", "false"});
    const std::string text = summary_to_json_text(s);
    CHECK(text.find("\"schema\":\"surface-rigidity/1\"") != std::string::npos);
    CHECK(text.find("[[\"C~\",\"true\",\"false\"]]") != std::string::npos);
}
