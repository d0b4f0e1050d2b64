#include <iostream>

#include <CLI11.hpp>

#include "rigidity/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Rigidity of bar-joint frameworks on parallel planes, concentric spheres "
                 "and concentric cylinders"};
    app.require_subcommand(1);

    rigidity::cli::CheckOptions check;
    auto* check_cmd = app.add_subcommand("check", "Combinatorial sparsity checks");
    check_cmd->add_option("--type", check.type, "laman|type2|laman-plus-one|tight36|point-line")
        ->required();
    check_cmd->add_option("--in", check.input_path, "graph file (graph6 or JSON)")->required();
    check_cmd->add_option("--line-vertex", check.line_vertex,
                          "line vertex for point-line (default: detected apex)");

    rigidity::cli::DeriveOptions derive;
    auto* derive_cmd = app.add_subcommand("derive", "Henneberg/extension derivations");
    derive_cmd->add_option("--class", derive.klass, "laman|laman-plus-one|type2")->required();
    derive_cmd->add_option("--in", derive.input_path, "graph file")->required();

    rigidity::cli::RankOptions rank;
    auto* rank_cmd = app.add_subcommand("rank", "Rigidity matrix analysis");
    rank_cmd->add_option("--framework", rank.framework_path, "framework JSON with explicit points");
    rank_cmd->add_option("--in", rank.input_path, "graph file (sampled points)");
    rank_cmd->add_option("--surface", rank.surface, "planes|spheres|cylinders");
    rank_cmd->add_option("--params", rank.params, "sheet parameters, e.g. 1,3/2");
    rank_cmd->add_option("--assignment", rank.assignment, "vertex sheet indices, e.g. 0,0,1");
    rank_cmd->add_option("--trials", rank.trials, "independent samples (default 3)");
    rank_cmd->add_option("--seed", rank.seed, "sampling seed");
    rank_cmd->add_option("--matrix-out", rank.matrix_out, "CSV export of the exact matrix");

    rigidity::cli::VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Theorem verification sweeps");
    verify_cmd->add_option("--theorem", verify.theorem, "planes|spheres|cylinder|cone|trees")
        ->required();
    verify_cmd->add_option("--max-n", verify.max_n, "max vertex count (default 7)");
    verify_cmd->add_option("--seed", verify.seed, "sampling seed");
    verify_cmd->add_option("--graphs", verify.graphs_path, "external graph6 stream");
    verify_cmd->add_flag("--serial", verify.serial, "run the serial reference path");

    rigidity::cli::FlexOptions flex;
    auto* flex_cmd = app.add_subcommand("flex", "Trace a continuous flex");
    flex_cmd->add_option("--framework", flex.framework_path, "framework JSON")->required();
    flex_cmd->add_option("--steps", flex.steps, "number of steps (default 200)");
    flex_cmd->add_option("--step-size", flex.step_size, "predictor step (default 0.01)");
    flex_cmd->add_option("--seed", flex.seed, "direction seed (sign picks orientation)");
    flex_cmd->add_option("--out", flex.out_path, "output file (default stdout)");
    flex_cmd->add_flag("--json", flex.json, "JSON output instead of CSV");

    CLI11_PARSE(app, argc, argv);

    if (check_cmd->parsed()) return rigidity::cli::cmd_check(check, std::cout, std::cerr);
    if (derive_cmd->parsed()) return rigidity::cli::cmd_derive(derive, std::cout, std::cerr);
    if (rank_cmd->parsed()) return rigidity::cli::cmd_rank(rank, std::cout, std::cerr);
    if (verify_cmd->parsed()) return rigidity::cli::cmd_verify(verify, std::cout, std::cerr);
    if (flex_cmd->parsed()) return rigidity::cli::cmd_flex(flex, std::cout, std::cerr);
    return 2;
}
