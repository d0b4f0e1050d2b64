#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "rigidity/analysis.hpp"
#include "rigidity/cli.hpp"

using namespace rigidity;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path = std::string("cli_test_tmp_") + std::to_string(counter++) + ".txt";
        std::ofstream out(path, std::ios::binary);
        out << contents;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

template <typename Opt, typename Fn>
RunResult run(Fn fn, const Opt& opt) {
    std::ostringstream out, err;
    const int code = fn(opt, out, err);
    return {code, out.str(), err.str()};
}

std::string k4_graph6() { return to_graph6(complete_graph(4)); }

std::string k4_cylinder_framework_json() {
    Rng rng(4);
    SurfaceFamily m(SurfaceKind::ConcentricCylinders, {Rat(1)});
    Framework f = sample_framework(complete_graph(4), m, {0, 0, 0, 0}, rng);
    return framework_to_json_text(f);
}

std::string flexible_framework_json() {
    Rng rng(4);
    SurfaceFamily m(SurfaceKind::ConcentricCylinders, {Rat(1)});
    Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    Framework f = sample_framework(g, m, {0, 0, 0, 0}, rng);
    return framework_to_json_text(f);
}

} // namespace

TEST_CASE("check command exit codes") {
    TempFile k4(k4_graph6() + "\n");
    cli::CheckOptions opt;
    opt.input_path = k4.path;

    opt.type = "type2";
    RunResult r = run(cli::cmd_check, opt);
    CHECK(r.code == 0);
    CHECK(r.out.find("\"holds\":true") != std::string::npos);
    CHECK(r.out.find("\"schema\":\"surface-rigidity/1\"") != std::string::npos);

    opt.type = "laman";
    r = run(cli::cmd_check, opt);
    CHECK(r.code == 1);
    CHECK(r.out.find("\"holds\":false") != std::string::npos);

    TempFile garbage("not a graph at all {{{");
    opt.input_path = garbage.path;
    r = run(cli::cmd_check, opt);
    CHECK(r.code == 2);
    CHECK(!r.err.empty());

    opt.input_path = "no_such_file_anywhere.g6";
    r = run(cli::cmd_check, opt);
    CHECK(r.code == 2);
}

TEST_CASE("check accepts JSON graphs and laman-plus-one reports an edge") {
    TempFile json(R"({"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
    cli::CheckOptions opt;
    opt.input_path = json.path;
    opt.type = "laman-plus-one";
    RunResult r = run(cli::cmd_check, opt);
    CHECK(r.code == 0);
    CHECK(r.out.find("removable_edge") != std::string::npos);
}

TEST_CASE("derive command") {
    TempFile k4(k4_graph6());
    cli::DeriveOptions opt;
    opt.input_path = k4.path;

    opt.klass = "laman";
    CHECK(run(cli::cmd_derive, opt).code == 1); // class mismatch

    opt.klass = "type2";
    RunResult r = run(cli::cmd_derive, opt);
    CHECK(r.code == 0);
    CHECK(r.out.find("\"base\":\"K4\"") != std::string::npos);
}

TEST_CASE("rank command on a sampled surface and an explicit framework") {
    TempFile k4(k4_graph6());
    cli::RankOptions opt;
    opt.input_path = k4.path;
    opt.surface = "cylinders";
    opt.params = "1";
    opt.trials = 3;
    opt.seed = 99;
    RunResult r = run(cli::cmd_rank, opt);
    CHECK(r.code == 0);
    CHECK(r.out.find("\"rank\":10") != std::string::npos);
    CHECK(r.out.find("\"isostatic\":true") != std::string::npos);

    // Deterministic given the seed.
    RunResult again = run(cli::cmd_rank, opt);
    CHECK(again.out == r.out);

    TempFile fw(k4_cylinder_framework_json());
    cli::RankOptions explicit_opt;
    explicit_opt.framework_path = fw.path;
    explicit_opt.matrix_out = "cli_test_matrix.csv";
    r = run(cli::cmd_rank, explicit_opt);
    CHECK(r.code == 0);
    CHECK(r.out.find("\"rank\":10") != std::string::npos);
    std::ifstream csv("cli_test_matrix.csv");
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header.rfind("row,x0,y0,z0", 0) == 0);
    csv.close();
    std::remove("cli_test_matrix.csv");

    cli::RankOptions bad;
    bad.input_path = k4.path;
    bad.surface = "torus";
    CHECK(run(cli::cmd_rank, bad).code == 2);
}

TEST_CASE("verify command clean run and determinism") {
    cli::VerifyOptions opt;
    opt.theorem = "cone";
    opt.max_n = 5;
    RunResult r = run(cli::cmd_verify, opt);
    CHECK(r.code == 0);
    CHECK(r.out.find("\"disagreements\":[]") != std::string::npos);

    opt.serial = true;
    RunResult serial = run(cli::cmd_verify, opt);
    CHECK(serial.out == r.out);

    cli::VerifyOptions bad;
    bad.theorem = "moebius";
    CHECK(run(cli::cmd_verify, bad).code == 2);
}

TEST_CASE("verify accepts an external graph6 stream") {
    TempFile graphs(to_graph6(complete_graph(4)) + "\n" + to_graph6(complete_graph(3)) + "\n");
    cli::VerifyOptions opt;
    opt.theorem = "cylinder";
    opt.graphs_path = graphs.path;
    opt.seed = 5;
    RunResult r = run(cli::cmd_verify, opt);
    CHECK(r.code == 0);
    // K3 fails the count filter; only K4 is checked.
    CHECK(r.out.find("\"graphs_checked\":1") != std::string::npos);
}

TEST_CASE("flex command: flexible framework traces, rigid one exits 1") {
    TempFile flexible(flexible_framework_json());
    cli::FlexOptions opt;
    opt.framework_path = flexible.path;
    opt.steps = 5;
    RunResult r = run(cli::cmd_flex, opt);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("step,vertex,x,y,z\n", 0) == 0);

    TempFile rigid(k4_cylinder_framework_json());
    opt.framework_path = rigid.path;
    r = run(cli::cmd_flex, opt);
    CHECK(r.code == 1);
    CHECK(r.err.find("error:") != std::string::npos);
}
