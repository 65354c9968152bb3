#include "embedding_detail.hpp"
#include "twodist/error.hpp"
#include "twodist/planar_graph.hpp"

#include <algorithm>
#include <string>

namespace twodist {

namespace {

std::string vname(Vertex v)
{
    return std::to_string(v + 1);
}

struct Workspace {
    std::vector<std::vector<Vertex>> rot;
    std::vector<bool> alive;
    std::vector<Vertex> hint;  // insert new edges right after this neighbour, -1 if none

    void remove_neighbor(Vertex x, Vertex y)
    {
        auto& r = rot[x];
        auto it = std::find(r.begin(), r.end(), y);
        const int k = static_cast<int>(r.size());
        const int i = static_cast<int>(it - r.begin());
        const Vertex pred = r[(i + k - 1) % k];
        r.erase(it);
        if (r.empty())
            hint[x] = -1;
        else if (hint[x] == -1 || hint[x] == y)
            hint[x] = pred;
    }

    // label[v] = component id of alive vertex v
    std::vector<int> components() const
    {
        const int n = static_cast<int>(rot.size());
        std::vector<int> label(n, -1);
        int next = 0;
        std::vector<Vertex> stack;
        for (int s = 0; s < n; ++s) {
            if (!alive[s] || label[s] != -1)
                continue;
            label[s] = next;
            stack.push_back(s);
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex u : rot[v])
                    if (label[u] == -1) {
                        label[u] = next;
                        stack.push_back(u);
                    }
            }
            ++next;
        }
        return label;
    }

    Vertex default_pred(Vertex x) const
    {
        if (rot[x].empty())
            return -1;
        return hint[x] != -1 ? hint[x] : rot[x].back();
    }

    void insert_after(Vertex x, Vertex pred, Vertex y)
    {
        auto& r = rot[x];
        if (pred == -1) {
            r.push_back(y);
            return;
        }
        auto it = std::find(r.begin(), r.end(), pred);
        r.insert(it + 1, y);
    }

    void add_edge(Vertex a, Vertex b)
    {
        if (rot[a].empty() || rot[b].empty()) {
            const Vertex pa = default_pred(a);
            const Vertex pb = default_pred(b);
            insert_after(a, pa, b);
            insert_after(b, pb, a);
            return;
        }
        const auto label = components();
        if (label[a] != label[b]) {
            const Vertex pa = default_pred(a);
            const Vertex pb = default_pred(b);
            insert_after(a, pa, b);
            insert_after(b, pb, a);
            return;
        }

        const auto t = detail::trace_rotation(rot);
        // corners of x on face f: dart x -> rot[x][j] lies on f, corner sits after rot[x][j-1]
        auto corners = [&](Vertex x, int f) {
            std::vector<Vertex> preds;
            const int k = static_cast<int>(rot[x].size());
            for (int j = 0; j < k; ++j)
                if (t.dart_face[t.offset[x] + j] == f)
                    preds.push_back(rot[x][(j + k - 1) % k]);
            return preds;
        };
        auto faces_of = [&](Vertex x) {
            std::vector<int> fs;
            for (int d = t.offset[x]; d < t.offset[x + 1]; ++d)
                fs.push_back(t.dart_face[d]);
            std::sort(fs.begin(), fs.end());
            fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
            return fs;
        };
        const auto fa = faces_of(a);
        const auto fb = faces_of(b);
        std::vector<int> shared;
        std::set_intersection(fa.begin(), fa.end(), fb.begin(), fb.end(), std::back_inserter(shared));
        if (shared.empty())
            throw Error(Errc::SurgeryNotPlanar,
                        "no face contains both " + vname(a) + " and " + vname(b));

        auto has_hint = [&](Vertex x, int f) {
            if (hint[x] == -1)
                return false;
            const auto p = corners(x, f);
            return std::find(p.begin(), p.end(), hint[x]) != p.end();
        };
        int chosen = shared.front();
        int best = -1;
        for (int f : shared) {
            const int score = static_cast<int>(has_hint(a, f)) + static_cast<int>(has_hint(b, f));
            if (score > best) {
                best = score;
                chosen = f;
            }
        }
        auto pick = [&](Vertex x) {
            const auto p = corners(x, chosen);
            if (has_hint(x, chosen))
                return hint[x];
            return p.front();
        };
        const Vertex pa = pick(a);
        const Vertex pb = pick(b);
        insert_after(a, pa, b);
        insert_after(b, pb, a);
    }
};

}  // namespace

SurgeryResult surgery(const PlanarGraph& g, const SurgeryPlan& plan)
{
    const int n = g.order();
    for (Vertex v : plan.delete_vertices)
        if (!g.contains(v))
            throw Error(Errc::UnknownVertex, "cannot delete unknown vertex " + vname(v));
    for (const Edge& e : plan.delete_edges) {
        if (!g.contains(e.u) || !g.contains(e.v))
            throw Error(Errc::UnknownVertex, "edge endpoint out of range");
        if (!g.adjacent(e.u, e.v))
            throw Error(Errc::UnknownEdge, "no edge " + vname(e.u) + "-" + vname(e.v));
    }

    Workspace w;
    w.rot = g.rotations();
    w.alive.assign(n, true);
    w.hint.assign(n, -1);

    for (const Edge& e : plan.delete_edges) {
        if (std::find(w.rot[e.u].begin(), w.rot[e.u].end(), e.v) == w.rot[e.u].end())
            continue;  // listed twice
        w.remove_neighbor(e.u, e.v);
        w.remove_neighbor(e.v, e.u);
    }
    for (Vertex v : plan.delete_vertices) {
        if (!w.alive[v])
            continue;
        w.alive[v] = false;
        for (Vertex u : w.rot[v])
            w.remove_neighbor(u, v);
        w.rot[v].clear();
        w.hint[v] = -1;
    }

    int skipped = 0;
    for (const Edge& e : plan.add_edges) {
        if (!g.contains(e.u) || !g.contains(e.v) || !w.alive[e.u] || !w.alive[e.v])
            throw Error(Errc::UnknownVertex, "added edge " + vname(e.u) + "-" + vname(e.v) + " touches a missing vertex");
        if (e.u == e.v)
            throw Error(Errc::SurgeryNotPlanar, "added edge is a loop at " + vname(e.u));
        const auto& ru = w.rot[e.u];
        if (std::find(ru.begin(), ru.end(), e.v) != ru.end()) {
            ++skipped;
            continue;
        }
        w.add_edge(e.u, e.v);
    }

    SurgeryResult res;
    res.new_id.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        if (w.alive[v]) {
            res.new_id[v] = static_cast<Vertex>(res.old_id.size());
            res.old_id.push_back(v);
        }
    }
    std::vector<std::vector<Vertex>> rot(res.old_id.size());
    for (std::size_t i = 0; i < res.old_id.size(); ++i) {
        const auto& r = w.rot[res.old_id[i]];
        rot[i].reserve(r.size());
        for (Vertex u : r)
            rot[i].push_back(res.new_id[u]);
    }
    try {
        res.graph = PlanarGraph::from_rotations(std::move(rot));
    } catch (const Error& err) {
        if (err.code() == Errc::NotConnected)
            throw Error(Errc::SurgeryDisconnects, std::string("surgery result is disconnected"));
        throw Error(Errc::SurgeryNotPlanar, std::string("surgery result is not a plane embedding: ") + err.what());
    }
    if (plan.max_degree && res.graph.max_degree() > *plan.max_degree)
        throw Error(Errc::DegreeBudgetExceeded, "surgery raises the maximum degree to " +
                                                    std::to_string(res.graph.max_degree()) + " (cap " +
                                                    std::to_string(*plan.max_degree) + ")");
    res.skipped_additions = skipped;
    return res;
}

SurgeryResult induced(const PlanarGraph& g, std::span<const Vertex> keep)
{
    std::vector<bool> kept(g.order(), false);
    for (Vertex v : keep) {
        if (!g.contains(v))
            throw Error(Errc::UnknownVertex, "vertex " + vname(v));
        kept[v] = true;
    }
    SurgeryPlan plan;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!kept[v])
            plan.delete_vertices.push_back(v);
    return surgery(g, plan);
}

bool is_connected(const PlanarGraph& g)
{
    return g.order() == 0 || detail::count_components(g.rotations(), std::vector<bool>(g.order(), true)) == 1;
}

bool is_cut_vertex(const PlanarGraph& g, Vertex v)
{
    if (!g.contains(v))
        throw Error(Errc::UnknownVertex, "vertex " + vname(v));
    if (g.order() <= 2)
        return false;
    std::vector<bool> alive(g.order(), true);
    alive[v] = false;
    auto rot = g.rotations();
    rot[v].clear();
    for (auto& r : rot)
        r.erase(std::remove(r.begin(), r.end(), v), r.end());
    return detail::count_components(rot, alive) > 1;
}

std::vector<Vertex> cut_vertices(const PlanarGraph& g)
{
    const int n = g.order();
    std::vector<Vertex> result;
    if (n <= 2)
        return result;
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), iter(n, 0);
    std::vector<bool> is_cut(n, false);
    int timer = 0;
    int root_children = 0;
    std::vector<Vertex> stack{0};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        auto nb = g.rotation(v);
        if (iter[v] < static_cast<int>(nb.size())) {
            const Vertex u = nb[iter[v]++];
            if (disc[u] == -1) {
                parent[u] = v;
                disc[u] = low[u] = timer++;
                if (v == 0)
                    ++root_children;
                stack.push_back(u);
            } else if (u != parent[v]) {
                low[v] = std::min(low[v], disc[u]);
            }
            continue;
        }
        stack.pop_back();
        const Vertex p = parent[v];
        if (p != -1) {
            low[p] = std::min(low[p], low[v]);
            if (p != 0 && low[v] >= disc[p])
                is_cut[p] = true;
        }
    }
    is_cut[0] = root_children > 1;
    for (Vertex v = 0; v < n; ++v)
        if (is_cut[v])
            result.push_back(v);
    return result;
}

CutSplit split_at(const PlanarGraph& g, Vertex v)
{
    if (!is_cut_vertex(g, v))
        throw Error(Errc::NotACutVertex, "vertex " + vname(v) + " is not a cut vertex");
    const Vertex start = v == 0 ? 1 : 0;
    std::vector<bool> in_first(g.order(), false);
    in_first[start] = true;
    std::vector<Vertex> stack{start};
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex u : g.rotation(x))
            if (u != v && !in_first[u]) {
                in_first[u] = true;
                stack.push_back(u);
            }
    }
    std::vector<Vertex> first, second;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (x == v) {
            first.push_back(x);
            second.push_back(x);
        } else {
            (in_first[x] ? first : second).push_back(x);
        }
    }
    return CutSplit{v, induced(g, first), induced(g, second)};
}

}  // namespace twodist
