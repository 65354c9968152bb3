#include "twodist/classify.hpp"

#include "twodist/error.hpp"
#include "twodist/rational.hpp"

namespace twodist {

namespace {

void check_vertex(const PlanarGraph& g, Vertex v)
{
    if (!g.contains(v))
        throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v + 1));
}

// charge after R1 and R2 only
Rational charge_after_r1_r2(const VertexClass& c, int delta)
{
    Rational q(c.k - 4);
    q -= Rational(c.t3, 3);
    if (c.k == 3)
        q += Rational(c.t5p, 3);
    else if (c.k <= delta - 1)
        q += Rational(c.t5p, 5);
    return q;
}

VertexClass counts(const PlanarGraph& g, Vertex v, int delta)
{
    VertexClass c;
    c.v = v;
    c.k = g.degree(v);
    for (int i = 0; i < c.k; ++i) {
        const int d = g.corner_degree(v, i);
        if (d == 3)
            ++c.t3;
        else if (d == 4)
            ++c.t4;
        else
            ++c.t5p;
    }
    if (c.k == 4 || c.k == 5) {
        const bool negative = charge_after_r1_r2(c, delta).is_negative();
        c.bad4 = c.k == 4 && negative;
        c.bad5 = c.k == 5 && negative;
    }
    return c;
}

}  // namespace

std::string VertexClass::signature() const
{
    return "(" + std::to_string(k) + "," + std::to_string(t3) + "," + std::to_string(t4) + ")";
}

bool is_special(const PlanarGraph& g, Vertex v)
{
    check_vertex(g, v);
    auto nb = g.sorted_neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            if (!g.adjacent(nb[i], nb[j]))
                continue;
            auto [a, b] = g.edge_face_degrees(nb[i], nb[j]);
            if (a == 3 && b == 3)
                return false;
        }
    }
    return true;
}

VertexClass classify_vertex(const PlanarGraph& g, Vertex v, std::optional<int> delta)
{
    check_vertex(g, v);
    VertexClass c = counts(g, v, delta.value_or(g.max_degree()));
    c.special = is_special(g, v);
    return c;
}

bool is_bad4(const PlanarGraph& g, Vertex v, std::optional<int> delta)
{
    check_vertex(g, v);
    return counts(g, v, delta.value_or(g.max_degree())).bad4;
}

bool is_bad5(const PlanarGraph& g, Vertex v, std::optional<int> delta)
{
    check_vertex(g, v);
    return counts(g, v, delta.value_or(g.max_degree())).bad5;
}

std::vector<VertexClass> neighbor_profile(const PlanarGraph& g, Vertex v, std::optional<int> delta)
{
    check_vertex(g, v);
    std::vector<VertexClass> out;
    for (Vertex u : g.rotation(v))
        out.push_back(classify_vertex(g, u, delta));
    return out;
}

Classifier::Classifier(const PlanarGraph& g, std::optional<int> delta)
    : g_(&g), delta_(delta.value_or(g.max_degree())), special_(g.order(), -1)
{
    cls_.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        cls_.push_back(counts(g, v, delta_));
}

bool Classifier::special(Vertex v) const
{
    if (special_[v] < 0)
        special_[v] = is_special(*g_, v) ? 1 : 0;
    return special_[v] == 1;
}

VertexClass Classifier::at(Vertex v) const
{
    VertexClass c = cls_[v];
    c.special = special(v);
    return c;
}

}  // namespace twodist
