#include "twodist/gallery.hpp"

#include "twodist/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace twodist::gallery {

namespace {

std::vector<std::vector<int>> adjacency(int n, const std::vector<std::pair<int, int>>& edges)
{
    std::vector<std::vector<int>> adj(n);
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw Error(Errc::UnknownVertex, "edge endpoint out of range");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

}  // namespace

PlanarGraph from_drawing(const std::vector<Point2>& pts, const std::vector<std::pair<int, int>>& edges)
{
    auto adj = adjacency(static_cast<int>(pts.size()), edges);
    for (std::size_t v = 0; v < adj.size(); ++v) {
        auto angle = [&](int u) { return std::atan2(pts[u].y - pts[v].y, pts[u].x - pts[v].x); };
        std::sort(adj[v].begin(), adj[v].end(), [&](int a, int b) { return angle(a) < angle(b); });
    }
    return PlanarGraph::from_rotations(std::move(adj));
}

PlanarGraph from_polytope(const std::vector<Point3>& pts, const std::vector<std::pair<int, int>>& edges)
{
    auto adj = adjacency(static_cast<int>(pts.size()), edges);
    for (std::size_t v = 0; v < adj.size(); ++v) {
        const Point3 n = pts[v];
        // tangent frame (e1, e2) with e1 x e2 pointing along the outward normal n
        Point3 helper = std::abs(n.x) < 0.9 * std::sqrt(n.x * n.x + n.y * n.y + n.z * n.z) ? Point3{1, 0, 0}
                                                                                           : Point3{0, 1, 0};
        auto cross = [](Point3 a, Point3 b) {
            return Point3{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
        };
        auto dot = [](Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; };
        const Point3 e1 = cross(helper, n);
        const Point3 e2 = cross(n, e1);
        auto angle = [&](int u) {
            const Point3 d{pts[u].x - n.x, pts[u].y - n.y, pts[u].z - n.z};
            return std::atan2(dot(d, e2), dot(d, e1));
        };
        std::sort(adj[v].begin(), adj[v].end(), [&](int a, int b) { return angle(a) < angle(b); });
    }
    return PlanarGraph::from_rotations(std::move(adj));
}

PlanarGraph single_vertex()
{
    return PlanarGraph::from_rotations({{}});
}

PlanarGraph path(int n)
{
    std::vector<std::vector<Vertex>> rot(n);
    for (int i = 0; i + 1 < n; ++i) {
        rot[i].push_back(i + 1);
        rot[i + 1].push_back(i);
    }
    return PlanarGraph::from_rotations(std::move(rot));
}

PlanarGraph cycle(int n)
{
    std::vector<std::vector<Vertex>> rot(n);
    for (int i = 0; i < n; ++i)
        rot[i] = {(i + 1) % n, (i + n - 1) % n};
    return PlanarGraph::from_rotations(std::move(rot));
}

PlanarGraph star(int k)
{
    std::vector<std::vector<Vertex>> rot(k + 1);
    for (int i = 1; i <= k; ++i) {
        rot[0].push_back(i);
        rot[i].push_back(0);
    }
    return PlanarGraph::from_rotations(std::move(rot));
}

PlanarGraph wheel(int k)
{
    std::vector<Point2> pts{{0, 0}};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        const double a = 2 * std::numbers::pi * i / k;
        pts.push_back({std::cos(a), std::sin(a)});
        edges.emplace_back(0, i + 1);
        edges.emplace_back(i + 1, (i + 1) % k + 1);
    }
    return from_drawing(pts, edges);
}

PlanarGraph tetrahedron()
{
    return from_drawing({{0, 0}, {0, 2}, {-2, -1}, {2, -1}}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
}

PlanarGraph octahedron()
{
    std::vector<Point3> pts{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            if (b != (a ^ 1))
                edges.emplace_back(a, b);
    return from_polytope(pts, edges);
}

PlanarGraph cube()
{
    std::vector<Point3> pts;
    for (int i = 0; i < 8; ++i)
        pts.push_back({i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 8; ++a)
        for (int bit : {1, 2, 4})
            if (!(a & bit))
                edges.emplace_back(a, a | bit);
    return from_polytope(pts, edges);
}

PlanarGraph icosahedron()
{
    const double phi = (1 + std::sqrt(5.0)) / 2;
    std::vector<Point3> pts;
    for (double s : {-1.0, 1.0})
        for (double t : {-1.0, 1.0}) {
            pts.push_back({0, s, t * phi});
            pts.push_back({s, t * phi, 0});
            pts.push_back({t * phi, 0, s});
        }
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 12; ++a)
        for (int b = a + 1; b < 12; ++b) {
            const double dx = pts[a].x - pts[b].x, dy = pts[a].y - pts[b].y, dz = pts[a].z - pts[b].z;
            if (std::abs(dx * dx + dy * dy + dz * dz - 4.0) < 1e-9)
                edges.emplace_back(a, b);
        }
    return from_polytope(pts, edges);
}

PlanarGraph bowtie()
{
    return from_drawing({{0, 0}, {-2, 1}, {-2, -1}, {2, -1}, {2, 1}}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

}  // namespace twodist::gallery
