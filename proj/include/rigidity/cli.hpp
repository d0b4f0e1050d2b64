#ifndef RIGIDITY_CLI_HPP
#define RIGIDITY_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "rigidity/graph.hpp"

namespace rigidity::cli {

// Exit codes shared by all subcommands:
//   0 success / property holds, 1 property false (or class mismatch, or no
//   nontrivial flex), 2 input error, 3 verification disagreement.

struct CheckOptions {
    std::string type;       // laman | type2 | laman-plus-one | tight36 | point-line
    std::string input_path; // graph6 or JSON, auto-detected
    int line_vertex = -1;   // point-line only; -1 = detect a cone apex
};

struct DeriveOptions {
    std::string klass; // laman | laman-plus-one | type2
    std::string input_path;
};

struct RankOptions {
    std::string framework_path; // explicit framework JSON, or:
    std::string input_path;     // graph plus surface description
    std::string surface;        // planes | spheres | cylinders
    std::string params;         // comma-separated rationals
    std::string assignment;     // comma-separated sheet indices, empty = all 0
    int trials = 3;
    std::uint64_t seed = 0;
    std::string matrix_out; // optional CSV export of the exact matrix
};

struct VerifyOptions {
    std::string theorem; // planes | spheres | cylinder | cone | trees
    int max_n = 7;
    std::uint64_t seed = 0;
    std::string graphs_path; // optional external graph6 stream
    bool serial = false;     // reference path; default runs the parallel kernel
};

struct FlexOptions {
    std::string framework_path;
    int steps = 200;
    double step_size = 0.01;
    std::int64_t seed = 1;
    std::string out_path; // empty = stdout
    bool json = false;    // CSV by default
};

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);
int cmd_derive(const DeriveOptions& opt, std::ostream& out, std::ostream& err);
int cmd_rank(const RankOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_flex(const FlexOptions& opt, std::ostream& out, std::ostream& err);

// graph6 or {"n":..,"edges":..} JSON, decided by the first byte.
Graph load_graph_text(const std::string& text);

} // namespace rigidity::cli

#endif
