#include "rigidity/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rigidity/analysis.hpp"
#include "rigidity/batch.hpp"
#include "rigidity/enumerate.hpp"
#include "rigidity/flexes.hpp"
#include "rigidity/moves.hpp"
#include "rigidity/sparsity.hpp"

namespace rigidity::cli {

namespace {

constexpr const char* kSchema = "surface-rigidity/1";

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Err::InvalidInput, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string first_line(const std::string& text) {
    const auto pos = text.find('\n');
    return pos == std::string::npos ? text : text.substr(0, pos);
}

nlohmann::json subgraph_to_json(const SubgraphRef& h) {
    nlohmann::json j;
    j["vertices"] = h.vertices;
    auto edges = nlohmann::json::array();
    for (const auto& [a, b] : h.edges) edges.push_back({a, b});
    j["edges"] = edges;
    return j;
}

std::vector<Rat> parse_rational_list(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

void write_output(const FlexOptions& opt, const std::string& payload, std::ostream& out) {
    if (opt.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) fail(Err::InvalidInput, "cannot write file: " + opt.out_path);
    file << payload;
}

} // namespace

Graph load_graph_text(const std::string& text) {
    size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) fail(Err::InvalidInput, "empty graph input");
    if (text[start] == '{') return graph_from_json_text(text);
    return parse_graph6(first_line(text.substr(start)));
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const Graph g = load_graph_text(read_file(opt.input_path));
        nlohmann::json j;
        j["schema"] = kSchema;
        j["type"] = opt.type;
        j["graph6"] = to_graph6(g);
        bool holds;
        if (opt.type == "laman" || opt.type == "type2") {
            const int k = opt.type == "laman" ? 3 : 2;
            const SparsityVerdict v = check_type(g, k);
            holds = v.maximal && (k == 2 || g.is_connected());
            j["independent"] = v.independent;
            j["maximal"] = v.maximal;
            if (v.witness) j["witness"] = subgraph_to_json(*v.witness);
        } else if (opt.type == "laman-plus-one") {
            const auto e = is_laman_plus_one(g);
            holds = e.has_value();
            if (e) j["removable_edge"] = {e->first, e->second};
        } else if (opt.type == "tight36") {
            holds = check_tight_3_6(g);
        } else if (opt.type == "point-line") {
            int line = opt.line_vertex;
            if (line < 0) {
                for (int v = 0; v < g.vertex_count() && line < 0; ++v)
                    if (g.degree(v) == g.vertex_count() - 1) line = v;
                if (line < 0) fail(Err::NotConeGraph, "no vertex adjacent to all others");
            }
            j["line_vertex"] = line;
            holds = check_point_line(g, line);
        } else {
            fail(Err::InvalidInput, "unknown check type: " + opt.type);
        }
        j["holds"] = holds;
        out << j.dump() << "\n";
        return holds ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_derive(const DeriveOptions& opt, std::ostream& out, std::ostream& err) {
    Graph g(1, {});
    try {
        g = load_graph_text(read_file(opt.input_path));
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        DerivationSequence seq;
        if (opt.klass == "laman") seq = derive_laman(g);
        else if (opt.klass == "laman-plus-one") seq = derive_laman_plus_one(g);
        else if (opt.klass == "type2") seq = derive_type2(g);
        else {
            err << "error: unknown derivation class: " << opt.klass << "\n";
            return 2;
        }
        // Replay check before anything is printed.
        if (!are_isomorphic(replay(seq), g)) {
            err << "error: derivation replay is not isomorphic to the input\n";
            return 1;
        }
        nlohmann::json j;
        j["schema"] = kSchema;
        j["class"] = opt.klass;
        j["graph6"] = to_graph6(g);
        j["derivation"] = nlohmann::json::parse(derivation_to_json_text(seq));
        out << j.dump() << "\n";
        return 0;
    } catch (const Error& e) {
        const bool mismatch = e.code() == Err::NotLaman || e.code() == Err::NotLamanPlusOne ||
                              e.code() == Err::NotType2Maximal;
        err << "error: " << e.what() << "\n";
        return mismatch ? 1 : 2;
    }
}

int cmd_rank(const RankOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        nlohmann::json j;
        j["schema"] = kSchema;
        RigidityReport report;
        if (!opt.framework_path.empty()) {
            Framework f = framework_from_json_text(read_file(opt.framework_path));
            report = analyze(f);
            j["graph6"] = to_graph6(f.graph);
            if (!opt.matrix_out.empty()) {
                RelativeRigidityMatrix rel = relative_rigidity_matrix(f);
                std::ofstream file(opt.matrix_out, std::ios::binary);
                if (!file) fail(Err::InvalidInput, "cannot write file: " + opt.matrix_out);
                file << matrix_to_csv(rel.matrix, rel.row_labels(), rel.col_labels());
            }
        } else {
            const Graph g = load_graph_text(read_file(opt.input_path));
            SurfaceKind kind;
            if (opt.surface == "planes") kind = SurfaceKind::ParallelPlanes;
            else if (opt.surface == "spheres") kind = SurfaceKind::ConcentricSpheres;
            else if (opt.surface == "cylinders") kind = SurfaceKind::ConcentricCylinders;
            else fail(Err::InvalidInput, "unknown surface: " + opt.surface);
            SurfaceFamily m(kind, opt.params.empty() ? std::vector<Rat>{Rat(1)}
                                                     : parse_rational_list(opt.params));
            SheetAssignment pi = opt.assignment.empty() ? SheetAssignment(g.vertex_count(), 0)
                                                        : [&] {
                                                              SheetAssignment a;
                                                              for (int s : parse_int_list(opt.assignment))
                                                                  a.push_back(s);
                                                              return a;
                                                          }();
            report = generic_analyze(g, m, pi, opt.trials, opt.seed);
            j["graph6"] = to_graph6(g);
            j["surface"] = nlohmann::json::parse(surface_to_json_text(m));
        }
        auto rj = nlohmann::json::parse(report_to_json_text(report));
        j.update(rj);
        out << j.dump() << "\n";
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        const TheoremCheck check = theorem_from_name(opt.theorem);
        std::vector<Graph> graphs;
        if (!opt.graphs_path.empty()) {
            std::istringstream in(read_file(opt.graphs_path));
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                graphs.push_back(parse_graph6(line));
            }
            graphs = filter_candidates(check, std::move(graphs));
        } else {
            graphs = theorem_candidates(check, opt.max_n);
        }
        const VerificationSummary summary =
            run_theorem_check(check, graphs, opt.seed, !opt.serial);
        out << summary_to_json_text(summary) << "\n";
        return summary.disagreements.empty() ? 0 : 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_flex(const FlexOptions& opt, std::ostream& out, std::ostream& err) {
    try {
        Framework f = framework_from_json_text(read_file(opt.framework_path));
        const FlexPath path = trace_flex(f, opt.steps, opt.step_size, opt.seed);
        const std::string payload = opt.json
                                        ? flexpath_to_json_text(path, f.graph.vertex_count())
                                        : flexpath_to_csv(path, f.graph.vertex_count());
        write_output(opt, payload, out);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == Err::NoNontrivialFlex ? 1 : 2;
    }
}

} // namespace rigidity::cli
