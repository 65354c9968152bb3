#include "twodist/generator.hpp"

#include "twodist/error.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace twodist {

namespace {

using Rot = std::vector<std::vector<Vertex>>;

void insert_after(std::vector<Vertex>& r, Vertex pred, Vertex x)
{
    r.insert(std::find(r.begin(), r.end(), pred) + 1, x);
}

Rot stacked_triangulation(int n, std::mt19937_64& rng)
{
    Rot rot(n);
    rot[0] = {1, 2};
    rot[1] = {2, 0};
    rot[2] = {0, 1};
    // faces as dart-order triples
    std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 2, 1}};
    for (Vertex w = 3; w < n; ++w) {
        std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
        const std::size_t fi = pick(rng);
        const auto [a, b, c] = faces[fi];
        insert_after(rot[a], c, w);
        insert_after(rot[b], a, w);
        insert_after(rot[c], b, w);
        rot[w] = {b, a, c};
        faces[fi] = {a, b, w};
        faces.push_back({b, c, w});
        faces.push_back({c, a, w});
    }
    return rot;
}

bool connected_without(const Rot& rot, Vertex a, Vertex b)
{
    // is b reachable from a avoiding the edge ab?
    std::vector<bool> seen(rot.size(), false);
    std::vector<Vertex> stack{a};
    seen[a] = true;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : rot[x]) {
            if ((x == a && y == b) || (x == b && y == a) || seen[y])
                continue;
            if (y == b)
                return true;
            seen[y] = true;
            stack.push_back(y);
        }
    }
    return false;
}

void erase_edge(Rot& rot, Vertex a, Vertex b)
{
    rot[a].erase(std::find(rot[a].begin(), rot[a].end(), b));
    rot[b].erase(std::find(rot[b].begin(), rot[b].end(), a));
}

int max_degree(const Rot& rot)
{
    std::size_t d = 0;
    for (const auto& r : rot)
        d = std::max(d, r.size());
    return static_cast<int>(d);
}

int count_at_least(const Rot& rot, int d)
{
    return static_cast<int>(std::count_if(rot.begin(), rot.end(), [&](const auto& r) { return static_cast<int>(r.size()) >= d; }));
}

// Edge flips inside the triangulation that lift low-degree vertices without
// pushing any vertex past `cap`.
void raise_min_degree(Rot& rot, int target, int cap, std::mt19937_64& rng)
{
    const int n = static_cast<int>(rot.size());
    auto deg = [&](Vertex x) { return static_cast<int>(rot[x].size()); };
    auto succ = [&](Vertex x, Vertex y) {
        const auto& r = rot[x];
        auto it = std::find(r.begin(), r.end(), y) + 1;
        return it == r.end() ? r.front() : *it;
    };
    auto adjacent = [&](Vertex x, Vertex y) { return std::find(rot[x].begin(), rot[x].end(), y) != rot[x].end(); };
    std::uniform_int_distribution<int> pick_vertex(0, n - 1);
    const int rounds = 200 * n;
    for (int it = 0; it < rounds; ++it) {
        const Vertex c = pick_vertex(rng);
        if (deg(c) >= target)
            continue;
        // c sees the edge ab across face a->b->c; d is the apex on the other side
        std::uniform_int_distribution<std::size_t> pick_nb(0, rot[c].size() - 1);
        const Vertex a = rot[c][pick_nb(rng)];
        const Vertex b = succ(a, c);
        if (succ(b, a) != c)
            continue;
        const Vertex d = succ(a, b);
        if (d == c || adjacent(c, d) || deg(a) <= target || deg(b) <= target || deg(d) + 1 > cap)
            continue;
        erase_edge(rot, a, b);
        insert_after(rot[c], b, d);
        insert_after(rot[d], a, c);
    }
}

bool cap_degrees(Rot& rot, int cap, int min_delta, std::mt19937_64& rng)
{
    const int n = static_cast<int>(rot.size());
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> nbrs = rot[v];
        std::shuffle(nbrs.begin(), nbrs.end(), rng);
        // prefer removing edges towards other high-degree vertices
        std::stable_sort(nbrs.begin(), nbrs.end(), [&](Vertex a, Vertex b) { return rot[a].size() > rot[b].size(); });
        for (Vertex u : nbrs) {
            if (static_cast<int>(rot[v].size()) <= cap)
                break;
            if (rot[u].size() <= 1 || !connected_without(rot, v, u))
                continue;
            erase_edge(rot, v, u);
        }
        if (static_cast<int>(rot[v].size()) > cap)
            return false;
    }
    return max_degree(rot) >= min_delta;
}

void random_deletions(Rot& rot, int count, int min_delta, std::mt19937_64& rng)
{
    const int n = static_cast<int>(rot.size());
    std::uniform_int_distribution<int> pick_vertex(0, n - 1);
    int done = 0;
    for (int attempt = 0; attempt < 20 * count + 20 && done < count; ++attempt) {
        const Vertex a = pick_vertex(rng);
        if (rot[a].empty())
            continue;
        std::uniform_int_distribution<std::size_t> pick_nb(0, rot[a].size() - 1);
        const Vertex b = rot[a][pick_nb(rng)];
        const int top = max_degree(rot);
        const bool a_top = static_cast<int>(rot[a].size()) == top;
        const bool b_top = static_cast<int>(rot[b].size()) == top;
        if (top <= min_delta && (a_top || b_top) && count_at_least(rot, top) <= static_cast<int>(a_top) + static_cast<int>(b_top))
            continue;
        if (!connected_without(rot, a, b))
            continue;
        erase_edge(rot, a, b);
        ++done;
    }
}

}  // namespace

PlanarGraph gen_planar(const GenOptions& opts)
{
    if (opts.n < 4)
        throw Error(Errc::GenerationFailed, "need at least 4 vertices");
    if (opts.max_delta && *opts.max_delta < opts.min_delta)
        throw Error(Errc::GenerationFailed, "max_delta below min_delta");
    for (int attempt = 0; attempt <= opts.retries; ++attempt) {
        std::mt19937_64 rng(opts.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(attempt));
        Rot rot = stacked_triangulation(opts.n, rng);
        if (opts.min_degree)
            raise_min_degree(rot, *opts.min_degree, opts.max_delta.value_or(opts.n), rng);
        if (opts.max_delta && !cap_degrees(rot, *opts.max_delta, opts.min_delta, rng))
            continue;
        long long m = 0;
        for (const auto& r : rot)
            m += static_cast<long long>(r.size());
        m /= 2;
        random_deletions(rot, opts.deletions.value_or(static_cast<int>(m / 5)), opts.min_delta, rng);
        const int d = max_degree(rot);
        if (d < opts.min_delta || (opts.max_delta && d > *opts.max_delta))
            continue;
        return PlanarGraph::from_rotations(std::move(rot));
    }
    throw Error(Errc::GenerationFailed, "could not reach max degree " + std::to_string(opts.min_delta) + " with " +
                                            std::to_string(opts.n) + " vertices");
}

PlanarGraph gen_planar(int n, int min_delta, std::uint64_t seed)
{
    GenOptions o;
    o.n = n;
    o.min_delta = min_delta;
    o.seed = seed;
    return gen_planar(o);
}

}  // namespace twodist
