#include "twodist/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace twodist {

namespace {

struct BudgetHit {};

class Dsatur {
public:
    Dsatur(const SimpleGraph& h, long long budget) : h_(h), budget_(budget) {}

    // Tries to colour with at most k colours.
    std::optional<std::vector<int>> solve(int k)
    {
        const int n = h_.order();
        k_ = k;
        color_.assign(n, 0);
        count_.assign(static_cast<std::size_t>(n) * (k + 1), 0);
        sat_.assign(n, 0);
        if (n == 0)
            return color_;
        if (search(0, 0))
            return color_;
        return std::nullopt;
    }

    long long nodes() const { return nodes_; }

private:
    int& cnt(Vertex v, int c) { return count_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

    void assign(Vertex v, int c)
    {
        color_[v] = c;
        for (Vertex u : h_.adj[v])
            if (cnt(u, c)++ == 0)
                ++sat_[u];
    }

    void unassign(Vertex v, int c)
    {
        color_[v] = 0;
        for (Vertex u : h_.adj[v])
            if (--cnt(u, c) == 0)
                --sat_[u];
    }

    Vertex pick() const
    {
        Vertex best = -1;
        for (Vertex v = 0; v < h_.order(); ++v) {
            if (color_[v] != 0)
                continue;
            if (best == -1 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && h_.degree(v) > h_.degree(best)))
                best = v;
        }
        return best;
    }

    bool search(int colored, int max_used)
    {
        if (++nodes_ > budget_)
            throw BudgetHit{};
        if (colored == h_.order())
            return true;
        const Vertex v = pick();
        const int limit = std::min(k_, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (cnt(v, c) != 0)
                continue;
            assign(v, c);
            if (search(colored + 1, std::max(max_used, c)))
                return true;
            unassign(v, c);
        }
        return false;
    }

    const SimpleGraph& h_;
    long long budget_;
    long long nodes_ = 0;
    int k_ = 0;
    std::vector<int> color_;
    std::vector<int> count_;
    std::vector<int> sat_;
};

std::vector<int> dsatur_greedy(const SimpleGraph& h)
{
    const int n = h.order();
    std::vector<int> color(n, 0);
    std::vector<std::vector<bool>> seen(n);
    std::vector<int> sat(n, 0);
    for (int step = 0; step < n; ++step) {
        Vertex v = -1;
        for (Vertex u = 0; u < n; ++u) {
            if (color[u] != 0)
                continue;
            if (v == -1 || sat[u] > sat[v] || (sat[u] == sat[v] && h.degree(u) > h.degree(v)))
                v = u;
        }
        int c = 1;
        while (c < static_cast<int>(seen[v].size()) && seen[v][c])
            ++c;
        color[v] = c;
        for (Vertex u : h.adj[v]) {
            if (static_cast<int>(seen[u].size()) <= c)
                seen[u].resize(c + 1, false);
            if (!seen[u][c]) {
                seen[u][c] = true;
                ++sat[u];
            }
        }
    }
    return color;
}

int greedy_clique(const SimpleGraph& h)
{
    int best = h.order() > 0 ? 1 : 0;
    for (Vertex s = 0; s < h.order(); ++s) {
        std::vector<Vertex> clique{s};
        std::vector<Vertex> cand(h.adj[s].begin(), h.adj[s].end());
        std::sort(cand.begin(), cand.end(), [&](Vertex a, Vertex b) {
            return h.degree(a) != h.degree(b) ? h.degree(a) > h.degree(b) : a < b;
        });
        for (Vertex c : cand) {
            if (std::all_of(clique.begin(), clique.end(), [&](Vertex x) { return h.adjacent(x, c); }))
                clique.push_back(c);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

Coloring to_coloring(const std::vector<int>& colors, int budget)
{
    Coloring c(static_cast<int>(colors.size()), budget);
    c.color = colors;
    return c;
}

}  // namespace

OracleResult chromatic_number(const SimpleGraph& h, long long node_budget)
{
    OracleResult res;
    const auto greedy = dsatur_greedy(h);
    int hi = greedy.empty() ? 0 : *std::max_element(greedy.begin(), greedy.end());
    int lo = greedy_clique(h);
    std::vector<int> best = greedy;
    long long used = 0;
    bool aborted = false;
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        Dsatur d(h, node_budget - used);
        try {
            auto sol = d.solve(mid);
            used += d.nodes();
            if (sol) {
                best = *sol;
                hi = *std::max_element(best.begin(), best.end());
            } else {
                lo = mid + 1;
            }
        } catch (const BudgetHit&) {
            used = node_budget;
            aborted = true;
            break;
        }
    }
    res.chi2 = hi;
    res.lower_bound = aborted ? lo : hi;
    res.witness = to_coloring(best, hi);
    res.nodes_explored = used;
    res.exact = !aborted;
    return res;
}

OracleResult chi2_exact(const PlanarGraph& g, long long node_budget)
{
    return chromatic_number(square(g), node_budget);
}

Coloring greedy_square(const PlanarGraph& g)
{
    const SimpleGraph sq = square(g);
    Coloring c(g.order(), 0);
    std::vector<char> used;
    for (Vertex v = 0; v < g.order(); ++v) {
        used.assign(sq.degree(v) + 2, 0);
        for (Vertex u : sq.adj[v])
            if (c.color[u] != 0 && c.color[u] < static_cast<int>(used.size()))
                used[c.color[u]] = 1;
        int col = 1;
        while (used[col])
            ++col;
        c.color[v] = col;
        c.budget = std::max(c.budget, col);
    }
    return c;
}

std::optional<Coloring> color_within(const PlanarGraph& g, int k, long long node_budget, bool* exhausted)
{
    if (exhausted)
        *exhausted = false;
    const SimpleGraph sq = square(g);
    Dsatur d(sq, node_budget);
    try {
        auto sol = d.solve(k);
        if (!sol)
            return std::nullopt;
        return to_coloring(*sol, k);
    } catch (const BudgetHit&) {
        if (exhausted)
            *exhausted = true;
        return std::nullopt;
    }
}

}  // namespace twodist
