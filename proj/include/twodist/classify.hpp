#pragma once

#include "twodist/planar_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twodist {

/// Incidence profile of a vertex. Counts are corner incidences, so a vertex that
/// meets one face twice (possible only at a cut vertex) counts it twice.
struct VertexClass {
    Vertex v = 0;
    int k = 0;
    int t3 = 0;
    int t4 = 0;
    int t5p = 0;
    bool special = true;
    bool bad4 = false;
    bool bad5 = false;

    bool is(int deg, int three) const { return k == deg && t3 == three; }
    bool is(int deg, int three, int four) const { return k == deg && t3 == three && t4 == four; }
    /// "(k,t3,t4)" or "(k,t3)" style label, e.g. "(4,2,1)".
    std::string signature() const;
};

/// True iff no edge of G[N(v)] lies on two 3-faces.
bool is_special(const PlanarGraph& g, Vertex v);

/// `delta` is the maximum degree used for the R2 income (defaults to Δ(g)).
VertexClass classify_vertex(const PlanarGraph& g, Vertex v, std::optional<int> delta = std::nullopt);
bool is_bad4(const PlanarGraph& g, Vertex v, std::optional<int> delta = std::nullopt);
bool is_bad5(const PlanarGraph& g, Vertex v, std::optional<int> delta = std::nullopt);
std::vector<VertexClass> neighbor_profile(const PlanarGraph& g, Vertex v, std::optional<int> delta = std::nullopt);

/// Cached classification of every vertex of one graph. `special` is computed on
/// first request.
class Classifier {
public:
    explicit Classifier(const PlanarGraph& g, std::optional<int> delta = std::nullopt);

    const PlanarGraph& graph() const { return *g_; }
    int delta() const { return delta_; }
    int degree(Vertex v) const { return g_->degree(v); }
    int t3(Vertex v) const { return cls_[v].t3; }
    int t4(Vertex v) const { return cls_[v].t4; }
    int t5p(Vertex v) const { return cls_[v].t5p; }
    bool is(Vertex v, int deg, int three) const { return cls_[v].is(deg, three); }
    bool is(Vertex v, int deg, int three, int four) const { return cls_[v].is(deg, three, four); }
    bool special(Vertex v) const;
    bool bad4(Vertex v) const { return cls_[v].bad4; }
    bool bad5(Vertex v) const { return cls_[v].bad5; }
    VertexClass at(Vertex v) const;

private:
    const PlanarGraph* g_;
    int delta_;
    std::vector<VertexClass> cls_;
    mutable std::vector<signed char> special_;  // -1 unknown
};

}  // namespace twodist
