#pragma once

#include "twodist/planar_graph.hpp"

#include <array>
#include <utility>
#include <vector>

namespace twodist::gallery {

struct Point2 {
    double x = 0;
    double y = 0;
};

struct Point3 {
    double x = 0;
    double y = 0;
    double z = 0;
};

/// Embeds a straight-line plane drawing: each rotation lists neighbours by
/// increasing angle (counterclockwise). Edges use 0-based indices into pts.
PlanarGraph from_drawing(const std::vector<Point2>& pts, const std::vector<std::pair<int, int>>& edges);

/// Embeds the skeleton of a convex polytope centred at the origin; rotations are
/// counterclockwise as seen from outside.
PlanarGraph from_polytope(const std::vector<Point3>& pts, const std::vector<std::pair<int, int>>& edges);

PlanarGraph single_vertex();
PlanarGraph path(int n);
PlanarGraph cycle(int n);
/// K_{1,k}; the centre is vertex 0.
PlanarGraph star(int k);
/// Hub 0 and rim 1..k.
PlanarGraph wheel(int k);
PlanarGraph tetrahedron();
PlanarGraph octahedron();
PlanarGraph cube();
PlanarGraph icosahedron();
/// Two triangles sharing vertex 0.
PlanarGraph bowtie();

}  // namespace twodist::gallery
