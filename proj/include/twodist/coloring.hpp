#pragma once

#include "twodist/planar_graph.hpp"

#include <vector>

namespace twodist {

/// Partial assignment vertex -> colour in 1..budget; 0 means uncoloured.
struct Coloring {
    std::vector<int> color;
    int budget = 0;

    Coloring() = default;
    Coloring(int n, int k) : color(n, 0), budget(k) {}

    int order() const { return static_cast<int>(color.size()); }
    bool colored(Vertex v) const { return color[v] != 0; }
    bool complete() const;
    /// Number of distinct colours in use.
    int colors_used() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct Violation {
    Vertex u = 0;
    Vertex v = 0;
    int dist = 0;
    int color = 0;
};

struct ColorReport {
    bool valid = false;
    bool complete = false;
    std::vector<Violation> violations;
    std::vector<Vertex> out_of_range;
    std::vector<Vertex> uncolored;
    int colors_used = 0;
    int budget = 0;
};

/// Exhaustive check over all pairs at distance 1 or 2 (found by BFS, not via the
/// square helpers). `valid` means no clash and no colour outside 1..budget;
/// uncoloured vertices are reported separately.
ColorReport verify_coloring(const PlanarGraph& g, const Coloring& c);

}  // namespace twodist
