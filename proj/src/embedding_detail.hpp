#pragma once

#include "twodist/planar_graph.hpp"

#include <vector>

namespace twodist::detail {

/// Face tracing over a raw (possibly not yet validated) rotation system.
/// Requires symmetric, simple rotations; vertices with empty rotation carry no darts.
struct Tracing {
    std::vector<int> offset;     // first dart of each vertex; size n + 1
    std::vector<Vertex> head;    // dart -> head vertex
    std::vector<int> twin;       // dart -> reverse dart
    std::vector<int> next;       // dart -> next dart on the same face
    std::vector<int> dart_face;  // dart -> face id
    std::vector<Face> faces;
};

Tracing trace_rotation(const std::vector<std::vector<Vertex>>& rot);

/// Number of connected components among vertices with `alive[v]`.
int count_components(const std::vector<std::vector<Vertex>>& rot, const std::vector<bool>& alive);

}  // namespace twodist::detail
