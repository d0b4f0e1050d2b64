#ifndef RIGIDITY_BATCH_HPP
#define RIGIDITY_BATCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

// Desk-scale verification sweeps: enumerate small graphs and compare a
// combinatorial verdict with an independently computed numerical (or
// constructive) one. The per-graph work is embarrassingly parallel; sweeps
// run through an OpenMP kernel with a serial reference path kept for testing
// and benchmarking. Results are independent of the schedule: per-graph
// randomness is derived from the graph's index, and outputs are merged in
// index order.

enum class TheoremCheck { Planes, Spheres, Cylinder, Cone, Trees };

TheoremCheck theorem_from_name(const std::string& name);
std::string theorem_name(TheoremCheck check);

// Enumerated connected graphs restricted to the theorem's global count
// (|E| = 2|V|-3 for planes/spheres, 2|V|-2 for cylinder/trees, everything
// for the cone shadow).
std::vector<Graph> theorem_candidates(TheoremCheck check, int max_n);

// Same count filter applied to an externally supplied graph list.
std::vector<Graph> filter_candidates(TheoremCheck check, std::vector<Graph> graphs);

struct Disagreement {
    std::string graph6;
    std::string combinatorial;
    std::string numerical;
};

struct VerificationSummary {
    std::string theorem;
    int graphs_checked = 0;
    int agreements = 0;
    std::vector<Disagreement> disagreements; // graph6-lexicographic order
};

VerificationSummary run_theorem_check(TheoremCheck check, const std::vector<Graph>& graphs,
                                      std::uint64_t seed, bool parallel);

struct OracleSweep {
    int graphs_checked = 0;
    std::vector<std::string> mismatches;
};

// Pebble game against the exhaustive subgraph oracle, k = 2 and 3.
OracleSweep oracle_agreement_sweep(const std::vector<Graph>& graphs, bool parallel);

// Same, over all connected graphs with up to max_n vertices.
OracleSweep oracle_agreement_sweep(int max_n, bool parallel);

// Worker cap: SURFACE_RIGIDITY_THREADS when set, else the OpenMP default
// (1 without OpenMP).
int effective_threads();

std::string summary_to_json_text(const VerificationSummary& summary);

} // namespace rigidity

#endif
