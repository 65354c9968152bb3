#pragma once

#include "twodist/planar_graph.hpp"

#include <cstdint>
#include <optional>

namespace twodist {

struct GenOptions {
    int n = 20;
    int min_delta = 6;
    std::uint64_t seed = 1;
    /// Thin out high-degree vertices until Δ <= max_delta.
    std::optional<int> max_delta;
    /// Edge flips before the other phases, lifting vertices towards this degree.
    std::optional<int> min_degree;
    /// Random edge deletions after the triangulation; m/5 when unset.
    std::optional<int> deletions;
    int retries = 64;
};

/// Random embedded planar graph: stacked triangulation by face insertion, then
/// random deletions that keep the graph connected and Δ >= min_delta.
/// Deterministic per options. Throws Error{GenerationFailed}.
PlanarGraph gen_planar(const GenOptions& opts);
PlanarGraph gen_planar(int n, int min_delta, std::uint64_t seed);

}  // namespace twodist
