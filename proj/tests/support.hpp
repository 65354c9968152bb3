#pragma once

#include "twodist/coloring.hpp"
#include "twodist/gallery.hpp"
#include "twodist/planar_graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace twodist::check {

// All-pairs distances by Floyd-Warshall; deliberately unrelated to the BFS code.
inline std::vector<std::vector<int>> floyd(const PlanarGraph& g)
{
    const int n = g.order();
    const int inf = n + 1;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (Vertex v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (Vertex u : g.rotation(v))
            d[v][u] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j])
                    d[i][j] = d[i][k] + d[k][j];
    return d;
}

// Exhaustive 2-distance chromatic number: tries k = 1, 2, ... with plain
// backtracking in id order. Only for tiny graphs.
inline int brute_chi2(const PlanarGraph& g)
{
    const int n = g.order();
    if (n == 0)
        return 0;
    const auto d = floyd(g);
    std::vector<int> col(n, 0);
    for (int k = 1;; ++k) {
        std::function<bool(int)> go = [&](int v) {
            if (v == n)
                return true;
            for (int c = 1; c <= k; ++c) {
                bool ok = true;
                for (int u = 0; u < v && ok; ++u)
                    if (d[u][v] <= 2 && col[u] == c)
                        ok = false;
                if (!ok)
                    continue;
                col[v] = c;
                if (go(v + 1))
                    return true;
            }
            col[v] = 0;
            return false;
        };
        if (go(0))
            return k;
    }
}

inline bool brute_valid(const PlanarGraph& g, const Coloring& c)
{
    const auto d = floyd(g);
    for (int u = 0; u < g.order(); ++u) {
        if (c.color[u] < 1)
            return false;
        for (int v = u + 1; v < g.order(); ++v)
            if (d[u][v] <= 2 && c.color[u] == c.color[v])
                return false;
    }
    return true;
}

inline gallery::Point2 polar(double r, double deg)
{
    const double a = deg * M_PI / 180.0;
    return {r * std::cos(a), r * std::sin(a)};
}

// Hub 0 with rim v1..v6 (ids 1..6) at 0°, 60°, ..., 300°; no edge v6v1. v2 and
// v4 are (5,5), v6 is (5,4), the hub is (6,5). With `heavy` a vertex of the
// outer layer gets degree 7.
inline PlanarGraph six_five_gadget(bool heavy)
{
    std::vector<gallery::Point2> p{{0, 0}};
    for (int i = 0; i < 6; ++i)
        p.push_back(polar(2, 60.0 * i));
    // a=7 b=8 c=9 d=10 e=11 f=12 g=13
    for (double deg : {40.0, 80.0, 160.0, 200.0, 270.0, 300.0, 330.0})
        p.push_back(polar(4, deg));
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 6; ++i)
        e.push_back({0, i});
    for (int i = 1; i <= 5; ++i)
        e.push_back({i, i + 1});
    e.insert(e.end(), {{2, 7}, {2, 8}, {1, 7}, {7, 8}, {8, 3}});
    e.insert(e.end(), {{4, 9}, {4, 10}, {3, 9}, {9, 10}, {10, 5}});
    e.insert(e.end(), {{6, 11}, {6, 12}, {6, 13}, {5, 11}, {11, 12}, {12, 13}});
    if (heavy) {
        for (int j = 0; j < 5; ++j) {
            p.push_back(polar(6, 315.0 + 7.0 * j));
            e.push_back({13, static_cast<int>(p.size()) - 1});
        }
    }
    return gallery::from_drawing(p, e);
}

// Triangular lattice points within hex distance `radius` of the origin; the
// origin is vertex 0 and its six neighbours are 1..6 counterclockwise from 0°.
inline PlanarGraph lattice_patch(int radius, std::vector<int> drop = {})
{
    struct Pt {
        int a, b;
    };
    std::vector<Pt> pts{{0, 0}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    auto hex = [](int a, int b) { return (std::abs(a) + std::abs(b) + std::abs(a + b)) / 2; };
    for (int a = -radius; a <= radius; ++a)
        for (int b = -radius; b <= radius; ++b)
            if (hex(a, b) <= radius && hex(a, b) >= 2)
                pts.push_back({a, b});
    std::vector<gallery::Point2> p;
    std::vector<int> keep_id(pts.size(), -1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (std::find(drop.begin(), drop.end(), static_cast<int>(i)) != drop.end())
            continue;
        keep_id[i] = static_cast<int>(p.size());
        p.push_back({pts[i].a + 0.5 * pts[i].b, pts[i].b * std::sqrt(3.0) / 2});
    }
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (keep_id[i] < 0 || keep_id[j] < 0)
                continue;
            const int da = pts[j].a - pts[i].a, db = pts[j].b - pts[i].b;
            if (hex(da, db) == 1)
                e.push_back({keep_id[i], keep_id[j]});
        }
    return gallery::from_drawing(p, e);
}

// Adds `count` pendant vertices close to vertex v, fanned out around direction `deg`.
// The direction must point into a face whose degree does not matter.
inline void add_leaves(std::vector<gallery::Point2>& p, std::vector<std::pair<int, int>>& e, int v, int count,
                       double deg)
{
    for (int j = 0; j < count; ++j) {
        const gallery::Point2 off = polar(0.3, deg + 8.0 * (j - (count - 1) / 2.0));
        p.push_back({p[v].x + off.x, p[v].y + off.y});
        e.push_back({v, static_cast<int>(p.size()) - 1});
    }
}

}  // namespace twodist::check
