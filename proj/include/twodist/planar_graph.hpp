#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace twodist {

/// Vertices are dense 0-based indices internally; files and traces print them 1-based.
using Vertex = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge normalized() const { return u <= v ? *this : Edge{v, u}; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A face boundary: the closed walk traced through the rotation system. For
/// 2-connected graphs this is a cycle; otherwise vertices may repeat.
struct Face {
    std::vector<Vertex> boundary;

    int degree() const { return static_cast<int>(boundary.size()); }
};

/// Connected simple graph with a combinatorial embedding.
///
/// rotation(v) lists the neighbours of v in counterclockwise order. A dart is a
/// directed edge v -> rotation(v)[i]; the face walk continues from dart u -> v with
/// v -> successor of u in rotation(v). The corner of v between rotation(v)[i] and
/// rotation(v)[i+1] therefore belongs to the face of dart v -> rotation(v)[i+1].
///
/// Instances are immutable. Construction validates symmetry, simplicity,
/// connectivity and the Euler count n - m + f = 2.
class PlanarGraph {
public:
    /// The empty graph (no vertices, no faces).
    PlanarGraph() = default;

    /// Throws Error{EmbeddingInvalid} or Error{NotConnected}.
    static PlanarGraph from_rotations(std::vector<std::vector<Vertex>> rotation);

    int order() const { return static_cast<int>(rot_.size()); }
    int size() const { return m_; }
    int max_degree() const { return max_deg_; }
    int min_degree() const { return min_deg_; }
    int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
    bool contains(Vertex v) const { return v >= 0 && v < order(); }

    std::span<const Vertex> rotation(Vertex v) const { return rot_[v]; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rot_; }
    /// Neighbours of v in ascending id order.
    std::span<const Vertex> sorted_neighbors(Vertex v) const { return sorted_[v]; }

    bool adjacent(Vertex u, Vertex v) const;
    /// Position of u in rotation(v), or -1.
    int index_of(Vertex v, Vertex u) const;

    const std::vector<Face>& faces() const { return faces_; }
    int dart_id(Vertex v, int i) const { return offset_[v] + i; }
    int face_of_dart(Vertex v, int i) const { return dart_face_[offset_[v] + i]; }
    /// Face containing the corner of v between rotation(v)[i] and rotation(v)[i+1].
    int corner_face(Vertex v, int i) const;
    int corner_degree(Vertex v, int i) const { return faces_[corner_face(v, i)].degree(); }
    /// Degrees of the two faces on either side of edge uv (which must exist).
    std::pair<int, int> edge_face_degrees(Vertex u, Vertex v) const;

    friend bool operator==(const PlanarGraph& a, const PlanarGraph& b) { return a.rot_ == b.rot_; }

private:
    std::vector<std::vector<Vertex>> rot_;
    std::vector<std::vector<Vertex>> sorted_;
    std::vector<int> offset_;
    std::vector<int> dart_face_;
    std::vector<Face> faces_;
    int m_ = 0;
    int max_deg_ = 0;
    int min_deg_ = 0;
};

/// All faces of g in tracing order (ids are indices into the result).
const std::vector<Face>& trace_faces(const PlanarGraph& g);

struct DistanceProfile {
    Vertex center = 0;
    std::vector<Vertex> n2;  // ascending; vertices at distance 1 or 2
    int d2 = 0;
};

/// Throws Error{UnknownVertex}.
DistanceProfile distance_profile(const PlanarGraph& g, Vertex v);

/// BFS distances from source, -1 for unreachable.
std::vector<int> bfs_distances(const PlanarGraph& g, Vertex source);

/// Plain simple graph without an embedding (used for squares and the oracle).
struct SimpleGraph {
    std::vector<std::vector<Vertex>> adj;  // each list ascending

    int order() const { return static_cast<int>(adj.size()); }
    int degree(Vertex v) const { return static_cast<int>(adj[v].size()); }
    bool adjacent(Vertex u, Vertex v) const;
    std::size_t edge_count() const;
};

/// u ~ v in the square iff 1 <= dist(u, v) <= 2.
SimpleGraph square(const PlanarGraph& g);
SimpleGraph underlying(const PlanarGraph& g);

/// Compact adjacency bit matrix, rows indexed by vertex.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n);

    int order() const { return n_; }
    bool test(int i, int j) const { return (bits_[row(i) + (j >> 6)] >> (j & 63)) & 1U; }
    void set(int i, int j) { bits_[row(i) + (j >> 6)] |= std::uint64_t{1} << (j & 63); }
    void reset(int i, int j) { bits_[row(i) + (j >> 6)] &= ~(std::uint64_t{1} << (j & 63)); }
    void or_row(int dst, int src);
    int words() const { return words_; }
    const std::uint64_t* row_data(int i) const { return bits_.data() + row(i); }

private:
    std::size_t row(int i) const { return static_cast<std::size_t>(i) * words_; }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Distance-at-most-2 relation as a bit matrix (diagonal clear).
BitMatrix square_matrix(const PlanarGraph& g);

/// Vertex and edge surgery. Edges are given in ids of the input graph.
struct SurgeryPlan {
    std::vector<Vertex> delete_vertices;
    std::vector<Edge> delete_edges;
    std::vector<Edge> add_edges;
    /// Reject results whose maximum degree exceeds this cap.
    std::optional<int> max_degree;
};

struct SurgeryResult {
    PlanarGraph graph;
    std::vector<Vertex> old_id;  // new id -> id in the input graph
    std::vector<Vertex> new_id;  // input id -> new id, or -1 if deleted
    int skipped_additions = 0;   // requested edges that already existed
};

/// Deletes the requested items, then inserts each added edge into a face shared by
/// its endpoints, preferring the face opened up by the deletions. Surviving
/// vertices are renumbered densely in their original order.
///
/// Throws Error{UnknownVertex | UnknownEdge | SurgeryNotPlanar |
/// SurgeryDisconnects | DegreeBudgetExceeded}.
SurgeryResult surgery(const PlanarGraph& g, const SurgeryPlan& plan);

/// Restriction of g to a vertex subset, keeping the induced rotation order.
SurgeryResult induced(const PlanarGraph& g, std::span<const Vertex> keep);

bool is_connected(const PlanarGraph& g);
bool is_cut_vertex(const PlanarGraph& g, Vertex v);
/// All cut vertices, ascending.
std::vector<Vertex> cut_vertices(const PlanarGraph& g);

struct CutSplit {
    Vertex cut = 0;
    SurgeryResult first;   // C1 + {cut}, C1 the component of g - cut with the smallest id
    SurgeryResult second;  // everything else + {cut}
};

/// Throws Error{NotACutVertex}.
CutSplit split_at(const PlanarGraph& g, Vertex v);

}  // namespace twodist
