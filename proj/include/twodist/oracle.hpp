#pragma once

#include "twodist/coloring.hpp"
#include "twodist/planar_graph.hpp"

#include <optional>

namespace twodist {

struct OracleResult {
    /// Best colour count found (exact when `exact`).
    int chi2 = 0;
    int lower_bound = 0;
    Coloring witness;
    long long nodes_explored = 0;
    /// False when the node budget stopped the search before the bounds met.
    bool exact = false;
};

constexpr long long kDefaultNodeBudget = 10'000'000;

/// Chromatic number of a plain graph by DSATUR branch and bound.
OracleResult chromatic_number(const SimpleGraph& h, long long node_budget = kDefaultNodeBudget);
/// χ₂(g) = χ(square(g)).
OracleResult chi2_exact(const PlanarGraph& g, long long node_budget = kDefaultNodeBudget);

/// Sequential greedy on the square in id order; uses at most max d2(v) + 1 colours.
Coloring greedy_square(const PlanarGraph& g);

/// A 2-distance colouring with at most k colours, or nullopt if none exists or
/// the budget ran out (`*exhausted` tells which).
std::optional<Coloring> color_within(const PlanarGraph& g, int k, long long node_budget = kDefaultNodeBudget,
                                     bool* exhausted = nullptr);

}  // namespace twodist
