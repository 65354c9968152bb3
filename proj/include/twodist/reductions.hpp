#pragma once

#include "twodist/classify.hpp"
#include "twodist/planar_graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace twodist {

enum class Lemma {
    L2_1,
    L2_2,
    L2_3_1,
    L2_3_2,
    L2_3_3,
    L2_4,
    L2_5_1,
    L2_5_2,
    L2_6_1,
    L2_6_2,
    L2_6_3,
    L2_6_4,
    L2_6_5,
    L2_7_1,
    L2_7_2,
    L2_8_1,
    L2_8_2,
    L2_8_3,
    L2_9_1,
    L2_9_2,
    L2_9_3,
    L2_10_1,
    L2_10_2,
    L2_10_3,
    L2_10_4,
    L2_11,
};

/// Matchers in the order find_reduction tries them.
const std::vector<Lemma>& lemma_priority();
/// "L2.3.1" etc.
std::string_view lemma_name(Lemma l);

struct Reduction {
    Lemma lemma = Lemma::L2_1;
    /// lemma_name, except L2.11 which is "L2.11.case1" or "L2.11.case2".
    std::string tag;
    /// Layout sub-case where the argument splits ("adjacent", "non-adjacent", ...), else empty.
    std::string case_id;
    Vertex center = 0;
    /// Neighbours of the centre in label order v1, v2, ...
    std::vector<Vertex> labels;
    /// Vertices recoloured during extension, in order.
    std::vector<Vertex> pending;
    std::vector<Vertex> delete_vertices;
    std::vector<Edge> delete_edges;
    std::vector<Edge> add_edges;
    /// Claimed bound on the number of vertices within distance 2 of each pending vertex.
    int d2_bound = 0;
    /// The Δ the bound was computed for.
    int delta = 0;
    /// Set for L2.1 only: split at this cut vertex instead of a surgery.
    std::optional<Vertex> split_vertex;

    bool is_split() const { return split_vertex.has_value(); }
};

struct ProofGapReport {
    PlanarGraph graph;
    int delta = 0;
    std::string reason;
    /// One line per low-degree vertex: its signature and neighbour degrees.
    std::vector<std::string> notes;
};

using ReductionOutcome = std::variant<std::monostate, Reduction, ProofGapReport>;

/// Runs one matcher. `delta` is the Δ of the graph class (at least Δ(g)); it
/// defaults to Δ(g).
std::optional<Reduction> match(Lemma lemma, const PlanarGraph& g, std::optional<int> delta = std::nullopt);
std::optional<Reduction> match(Lemma lemma, const Classifier& cls);

/// First matcher hit in priority order. A ProofGapReport is returned when nothing
/// fires and delta >= 6; monostate when nothing fires below that.
ReductionOutcome find_reduction(const PlanarGraph& g, std::optional<int> delta = std::nullopt);

/// Performs the surgery of a non-split reduction, capped at Δ(g).
SurgeryResult apply_reduction(const PlanarGraph& g, const Reduction& r);

/// Distance-2 preservation among surviving non-pending vertices and Δ(H) <= Δ(G).
bool check_properness(const PlanarGraph& g, const Reduction& r, const SurgeryResult& h);

/// Distance-2 preservation for a vertex map (new id -> old id), ignoring `skip`.
bool preserves_distance2(const PlanarGraph& g, const SurgeryResult& h, const std::vector<Vertex>& skip = {});

std::string describe(const Reduction& r);

}  // namespace twodist
