#pragma once

#include "twodist/coloring.hpp"
#include "twodist/generator.hpp"
#include "twodist/planar_graph.hpp"
#include "twodist/reductions.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twodist {

/// Everything observed while colouring one graph and auditing each graph the
/// recursion visits.
struct TrialResult {
    std::uint64_t seed = 0;
    int order = 0;
    int size = 0;
    int delta = 0;
    int budget = 0;
    bool colored = false;
    bool valid = false;
    int colors_used = 0;
    Coloring coloring;
    std::string error;

    int graphs_visited = 0;
    int steps = 0;
    std::map<std::string, long long> fire_counts;
    std::vector<ProofGapReport> gaps;
    /// Audit totals over visited graphs, keyed by "p/q".
    std::map<std::string, long long> audit_totals;
    int conservation_failures = 0;
    int triangle_face_failures = 0;

    int improper = 0;
    int non_shrinking = 0;
    int bound_exceeded = 0;   // measured forbidden count above the claimed bound
    int palette_exceeded = 0; // measured forbidden count >= budget
    int max_forbidden_slack = 0;
    std::vector<std::string> soundness_notes;
};

struct TrialOptions {
    bool audit_graphs = true;
};

TrialResult run_trial(const PlanarGraph& g, const TrialOptions& opts = {});

struct HuntOptions {
    int trials = 100;
    int n = 60;
    int min_delta = 6;
    std::uint64_t seed = 1;
    std::optional<int> max_delta;
    std::optional<int> min_degree;
    std::optional<int> deletions;
    int threads = 1;
};

struct HuntReport {
    int trials = 0;
    std::vector<std::uint64_t> seeds;
    std::map<std::string, long long> fire_counts;
    long long gap_count = 0;
    std::map<std::string, long long> audit_totals;
    int coloring_failures = 0;
    int soundness_failures = 0;
    std::vector<std::string> failures;
};

/// Trial i uses seed + i. Results are merged in trial order regardless of threads.
HuntReport hunt(const HuntOptions& opts);

}  // namespace twodist
