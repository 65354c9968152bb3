#include "twodist/coloring.hpp"

#include "twodist/error.hpp"

#include <algorithm>
#include <set>

namespace twodist {

bool Coloring::complete() const
{
    return std::none_of(color.begin(), color.end(), [](int c) { return c == 0; });
}

int Coloring::colors_used() const
{
    std::set<int> used;
    for (int c : color)
        if (c != 0)
            used.insert(c);
    return static_cast<int>(used.size());
}

ColorReport verify_coloring(const PlanarGraph& g, const Coloring& c)
{
    if (c.order() != g.order())
        throw Error(Errc::UnknownVertex, "colouring has " + std::to_string(c.order()) + " entries for a graph of order " +
                                             std::to_string(g.order()));
    ColorReport rep;
    rep.budget = c.budget;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (c.color[v] == 0)
            rep.uncolored.push_back(v);
        else if (c.color[v] < 0 || (c.budget > 0 && c.color[v] > c.budget))
            rep.out_of_range.push_back(v);
    }
    std::vector<int> dist(g.order(), -1);
    std::vector<Vertex> touched;
    for (Vertex s = 0; s < g.order(); ++s) {
        dist[s] = 0;
        touched = {s};
        for (std::size_t i = 0; i < touched.size(); ++i) {
            const Vertex x = touched[i];
            if (dist[x] == 2)
                continue;
            for (Vertex y : g.rotation(x)) {
                if (dist[y] == -1) {
                    dist[y] = dist[x] + 1;
                    touched.push_back(y);
                }
            }
        }
        for (Vertex t : touched) {
            if (t > s && c.color[s] != 0 && c.color[s] == c.color[t])
                rep.violations.push_back(Violation{s, t, dist[t], c.color[s]});
        }
        for (Vertex t : touched)
            dist[t] = -1;
    }
    rep.colors_used = c.colors_used();
    rep.complete = rep.uncolored.empty();
    rep.valid = rep.violations.empty() && rep.out_of_range.empty();
    return rep;
}

}  // namespace twodist
