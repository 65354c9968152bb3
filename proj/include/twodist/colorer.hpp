#pragma once

#include "twodist/coloring.hpp"
#include "twodist/error.hpp"
#include "twodist/planar_graph.hpp"
#include "twodist/reductions.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace twodist {

struct ColorOptions {
    /// Palette size; 3Δ+2 when unset.
    std::optional<int> budget;
    /// Graphs of at most this order are coloured directly.
    int base_threshold = 10;
    long long oracle_budget = 1'000'000;
};

/// One reduction step of the recursion, in the ids of the graph it was found in.
struct StepRecord {
    int depth = 0;
    int order = 0;
    int size = 0;
    int max_degree = 0;
    std::string tag;
    Vertex center = 0;
    int d2_bound = 0;
    bool proper = true;
    bool shrinks = true;
    /// Distinct colours seen within distance 2 of each pending vertex when it was coloured.
    std::vector<int> forbidden;
};

struct ColorTrace {
    std::vector<StepRecord> steps;
    std::vector<ProofGapReport> gaps;
    /// Called on every graph the recursion visits (including base cases).
    std::function<void(const PlanarGraph&, int depth)> on_graph;
};

/// Thrown when the catalogue finds nothing on a graph with Δ >= 6.
class ProofGapError : public Error {
public:
    explicit ProofGapError(ProofGapReport report);
    const ProofGapReport& report() const noexcept { return report_; }

private:
    ProofGapReport report_;
};

/// Total 2-distance colouring of g. Throws Error{BudgetExhausted} (ProofGapError
/// for a catalogue gap) or Error{NoSafeColor}.
Coloring color(const PlanarGraph& g, const ColorOptions& opts = {}, ColorTrace* trace = nullptr);

/// Colours each pending vertex, in order, with the smallest colour unused within
/// distance 2 in g. Returns the forbidden-colour count seen by each.
std::vector<int> extend(Coloring& c, const PlanarGraph& g, const std::vector<Vertex>& pending);

/// Colours indexed by ids of g; c1 covers G1, c2 covers G2, both contain v.
/// Permutes c2 so that it agrees with c1 at v and keeps the neighbours of v apart.
/// Throws Error{PermutationInfeasible}.
Coloring merge_at_cut(const Coloring& c1, const Coloring& c2, Vertex v, const PlanarGraph& g);

}  // namespace twodist
