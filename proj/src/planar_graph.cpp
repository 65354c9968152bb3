#include "twodist/planar_graph.hpp"

#include "embedding_detail.hpp"
#include "twodist/error.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace twodist {

namespace detail {

Tracing trace_rotation(const std::vector<std::vector<Vertex>>& rot)
{
    const int n = static_cast<int>(rot.size());
    Tracing t;
    t.offset.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
        t.offset[v + 1] = t.offset[v] + static_cast<int>(rot[v].size());
    const int darts = t.offset[n];
    t.head.resize(darts);
    t.twin.assign(darts, -1);
    t.next.assign(darts, -1);

    // incoming[offset[u] + k] = k-th dart ending at u (each vertex has exactly deg(u) of them)
    std::vector<int> incoming(darts);
    std::vector<int> fill(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < static_cast<int>(rot[v].size()); ++i) {
            const Vertex u = rot[v][i];
            const int d = t.offset[v] + i;
            t.head[d] = u;
            incoming[t.offset[u] + fill[u]++] = d;
        }
    }

    std::vector<int> pos(n, -1);
    std::vector<Vertex> tail(darts);
    for (int v = 0; v < n; ++v)
        for (int d = t.offset[v]; d < t.offset[v + 1]; ++d)
            tail[d] = v;
    for (int u = 0; u < n; ++u) {
        const int deg = static_cast<int>(rot[u].size());
        for (int j = 0; j < deg; ++j)
            pos[rot[u][j]] = j;
        for (int k = 0; k < deg; ++k) {
            const int d = incoming[t.offset[u] + k];
            const int j = pos[tail[d]];
            t.twin[d] = t.offset[u] + j;
            t.next[d] = t.offset[u] + (j + 1) % deg;
        }
        for (int j = 0; j < deg; ++j)
            pos[rot[u][j]] = -1;
    }

    t.dart_face.assign(darts, -1);
    for (int start = 0; start < darts; ++start) {
        if (t.dart_face[start] != -1)
            continue;
        const int id = static_cast<int>(t.faces.size());
        Face face;
        int d = start;
        do {
            t.dart_face[d] = id;
            face.boundary.push_back(tail[d]);
            d = t.next[d];
        } while (d != start);
        t.faces.push_back(std::move(face));
    }
    return t;
}

int count_components(const std::vector<std::vector<Vertex>>& rot, const std::vector<bool>& alive)
{
    const int n = static_cast<int>(rot.size());
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack;
    int components = 0;
    for (int s = 0; s < n; ++s) {
        if (!alive[s] || seen[s])
            continue;
        ++components;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : rot[v]) {
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
    }
    return components;
}

}  // namespace detail

PlanarGraph PlanarGraph::from_rotations(std::vector<std::vector<Vertex>> rotation)
{
    PlanarGraph g;
    const int n = static_cast<int>(rotation.size());
    g.sorted_.resize(n);
    long long degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        auto& s = g.sorted_[v];
        s = rotation[v];
        std::sort(s.begin(), s.end());
        for (Vertex u : s) {
            if (u < 0 || u >= n)
                throw Error(Errc::EmbeddingInvalid, "vertex " + std::to_string(v + 1) + " lists unknown neighbour " +
                                                        std::to_string(u + 1));
            if (u == v)
                throw Error(Errc::EmbeddingInvalid, "self-loop at vertex " + std::to_string(v + 1));
        }
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error(Errc::EmbeddingInvalid, "repeated neighbour in rotation of vertex " + std::to_string(v + 1));
        degree_sum += static_cast<long long>(s.size());
    }
    for (int v = 0; v < n; ++v) {
        for (Vertex u : g.sorted_[v]) {
            if (!std::binary_search(g.sorted_[u].begin(), g.sorted_[u].end(), v))
                throw Error(Errc::EmbeddingInvalid, "asymmetric rotation: " + std::to_string(v + 1) + " lists " +
                                                        std::to_string(u + 1) + " but not conversely");
        }
    }
    g.rot_ = std::move(rotation);
    g.m_ = static_cast<int>(degree_sum / 2);
    if (n == 0)
        return g;

    if (detail::count_components(g.rot_, std::vector<bool>(n, true)) != 1)
        throw Error(Errc::NotConnected, "graph has more than one component");

    auto t = detail::trace_rotation(g.rot_);
    g.offset_ = std::move(t.offset);
    g.dart_face_ = std::move(t.dart_face);
    g.faces_ = std::move(t.faces);
    if (n == 1)
        g.faces_.push_back(Face{});  // the single face of an isolated vertex

    const int f = static_cast<int>(g.faces_.size());
    if (n - g.m_ + f != 2)
        throw Error(Errc::EmbeddingInvalid, "Euler check failed: n - m + f = " + std::to_string(n) + " - " +
                                                std::to_string(g.m_) + " + " + std::to_string(f) + " != 2");

    g.max_deg_ = 0;
    g.min_deg_ = n > 0 ? g.degree(0) : 0;
    for (int v = 0; v < n; ++v) {
        g.max_deg_ = std::max(g.max_deg_, g.degree(v));
        g.min_deg_ = std::min(g.min_deg_, g.degree(v));
    }
    return g;
}

bool PlanarGraph::adjacent(Vertex u, Vertex v) const
{
    const auto& s = sorted_[u];
    return std::binary_search(s.begin(), s.end(), v);
}

int PlanarGraph::index_of(Vertex v, Vertex u) const
{
    const auto& r = rot_[v];
    auto it = std::find(r.begin(), r.end(), u);
    return it == r.end() ? -1 : static_cast<int>(it - r.begin());
}

int PlanarGraph::corner_face(Vertex v, int i) const
{
    const int k = degree(v);
    return dart_face_[offset_[v] + (i + 1) % k];
}

std::pair<int, int> PlanarGraph::edge_face_degrees(Vertex u, Vertex v) const
{
    const int i = index_of(u, v);
    const int j = index_of(v, u);
    return {faces_[face_of_dart(u, i)].degree(), faces_[face_of_dart(v, j)].degree()};
}

const std::vector<Face>& trace_faces(const PlanarGraph& g)
{
    return g.faces();
}

std::vector<int> bfs_distances(const PlanarGraph& g, Vertex source)
{
    if (!g.contains(source))
        throw Error(Errc::UnknownVertex, "vertex " + std::to_string(source + 1));
    std::vector<int> dist(g.order(), -1);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : g.rotation(v)) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

DistanceProfile distance_profile(const PlanarGraph& g, Vertex v)
{
    if (!g.contains(v))
        throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v + 1));
    DistanceProfile p;
    p.center = v;
    for (Vertex u : g.rotation(v)) {
        p.n2.push_back(u);
        for (Vertex w : g.rotation(u))
            if (w != v)
                p.n2.push_back(w);
    }
    std::sort(p.n2.begin(), p.n2.end());
    p.n2.erase(std::unique(p.n2.begin(), p.n2.end()), p.n2.end());
    p.d2 = static_cast<int>(p.n2.size());
    return p;
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const
{
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::size_t SimpleGraph::edge_count() const
{
    std::size_t total = 0;
    for (const auto& a : adj)
        total += a.size();
    return total / 2;
}

BitMatrix::BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

void BitMatrix::or_row(int dst, int src)
{
    std::uint64_t* d = bits_.data() + row(dst);
    const std::uint64_t* s = bits_.data() + row(src);
    for (int w = 0; w < words_; ++w)
        d[w] |= s[w];
}

BitMatrix square_matrix(const PlanarGraph& g)
{
    const int n = g.order();
    BitMatrix adj(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.rotation(v))
            adj.set(v, u);
    BitMatrix sq(n);
    for (Vertex v = 0; v < n; ++v) {
        std::uint64_t* dst = const_cast<std::uint64_t*>(sq.row_data(v));
        const std::uint64_t* own = adj.row_data(v);
        for (int w = 0; w < sq.words(); ++w)
            dst[w] = own[w];
        for (Vertex u : g.rotation(v)) {
            const std::uint64_t* nb = adj.row_data(u);
            for (int w = 0; w < sq.words(); ++w)
                dst[w] |= nb[w];
        }
        sq.reset(v, v);
    }
    return sq;
}

SimpleGraph square(const PlanarGraph& g)
{
    const BitMatrix sq = square_matrix(g);
    SimpleGraph s;
    s.adj.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        const std::uint64_t* row = sq.row_data(v);
        for (int w = 0; w < sq.words(); ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                s.adj[v].push_back(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }
    return s;
}

SimpleGraph underlying(const PlanarGraph& g)
{
    SimpleGraph s;
    s.adj.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        s.adj[v].assign(g.sorted_neighbors(v).begin(), g.sorted_neighbors(v).end());
    return s;
}

}  // namespace twodist
