#include "twodist/colorer.hpp"

#include "twodist/oracle.hpp"

#include <algorithm>
#include <set>

namespace twodist {

ProofGapError::ProofGapError(ProofGapReport report)
    : Error(Errc::BudgetExhausted, "no reduction applies to a graph with " + std::to_string(report.graph.order()) +
                                       " vertices and delta " + std::to_string(report.delta)),
      report_(std::move(report))
{
}

std::vector<int> extend(Coloring& c, const PlanarGraph& g, const std::vector<Vertex>& pending)
{
    std::vector<int> forbidden;
    for (Vertex p : pending) {
        const auto prof = distance_profile(g, p);
        std::set<int> seen;
        for (Vertex u : prof.n2)
            if (c.color[u] != 0)
                seen.insert(c.color[u]);
        const int count = static_cast<int>(seen.size());
        forbidden.push_back(count);
        int col = 1;
        while (seen.count(col))
            ++col;
        if (col > c.budget)
            throw Error(Errc::NoSafeColor, "vertex " + std::to_string(p + 1) + " sees " + std::to_string(count) +
                                               " colours within distance 2; palette has " +
                                               std::to_string(c.budget));
        c.color[p] = col;
    }
    return forbidden;
}

Coloring merge_at_cut(const Coloring& c1, const Coloring& c2, Vertex v, const PlanarGraph& g)
{
    const int k = std::max(c1.budget, c2.budget);
    if (c1.color[v] == 0 || c2.color[v] == 0)
        throw Error(Errc::PermutationInfeasible, "cut vertex is uncoloured in one part");
    std::vector<bool> taken(k + 1, false);  // images already fixed or forbidden
    std::vector<int> image(k + 1, 0);
    std::vector<bool> used_image(k + 1, false);
    image[c2.color[v]] = c1.color[v];
    used_image[c1.color[v]] = true;
    taken[c1.color[v]] = true;
    std::vector<int> side2;
    for (Vertex u : g.rotation(v)) {
        if (c1.color[u] != 0)
            taken[c1.color[u]] = true;
        else if (c2.color[u] != 0)
            side2.push_back(c2.color[u]);
    }
    std::sort(side2.begin(), side2.end());
    for (int a : side2) {
        if (image[a] != 0)
            throw Error(Errc::PermutationInfeasible, "neighbours of the cut vertex share a colour in the second part");
        int b = 1;
        while (b <= k && (taken[b] || used_image[b]))
            ++b;
        if (b > k)
            throw Error(Errc::PermutationInfeasible, "not enough colours to separate the neighbours of vertex " +
                                                         std::to_string(v + 1));
        image[a] = b;
        used_image[b] = true;
    }
    int next = 1;
    for (int a = 1; a <= k; ++a) {
        if (image[a] != 0)
            continue;
        while (used_image[next])
            ++next;
        image[a] = next;
        used_image[next] = true;
    }
    Coloring out(g.order(), k);
    for (Vertex u = 0; u < g.order(); ++u) {
        if (c1.color[u] != 0)
            out.color[u] = c1.color[u];
        else if (c2.color[u] != 0)
            out.color[u] = image[c2.color[u]];
    }
    return out;
}

namespace {

class Engine {
public:
    Engine(int budget, int delta, const ColorOptions& opts, ColorTrace* trace)
        : k_(budget), delta_(delta), opts_(opts), trace_(trace)
    {
    }

    Coloring run(const PlanarGraph& g, int depth)
    {
        if (trace_ && trace_->on_graph)
            trace_->on_graph(g, depth);
        if (g.order() <= opts_.base_threshold)
            return direct(g);

        auto outcome = find_reduction(g, delta_);
        if (auto* gap = std::get_if<ProofGapReport>(&outcome)) {
            if (trace_)
                trace_->gaps.push_back(*gap);
            throw ProofGapError(std::move(*gap));
        }
        if (std::holds_alternative<std::monostate>(outcome))
            return direct(g);

        const Reduction& r = std::get<Reduction>(outcome);
        StepRecord step;
        step.depth = depth;
        step.order = g.order();
        step.size = g.size();
        step.max_degree = g.max_degree();
        step.tag = r.tag;
        step.center = r.center;
        step.d2_bound = r.d2_bound;

        if (r.is_split()) {
            const CutSplit parts = split_at(g, *r.split_vertex);
            step.proper = preserves_distance2(g, parts.first) && preserves_distance2(g, parts.second) &&
                          parts.first.graph.max_degree() <= g.max_degree() &&
                          parts.second.graph.max_degree() <= g.max_degree();
            const int weight = g.order() + g.size();
            step.shrinks = parts.first.graph.order() + parts.first.graph.size() < weight &&
                           parts.second.graph.order() + parts.second.graph.size() < weight;
            record(step);
            const Coloring c1 = lift(g, parts.first, run(parts.first.graph, depth + 1));
            const Coloring c2 = lift(g, parts.second, run(parts.second.graph, depth + 1));
            return merge_at_cut(c1, c2, *r.split_vertex, g);
        }

        const SurgeryResult h = apply_reduction(g, r);
        step.proper = check_properness(g, r, h);
        step.shrinks = h.graph.order() + h.graph.size() < g.order() + g.size();
        const std::size_t slot = record(step);
        Coloring c = lift(g, h, run(h.graph, depth + 1));
        for (Vertex p : r.pending)
            c.color[p] = 0;
        auto forbidden = extend(c, g, r.pending);
        if (trace_)
            trace_->steps[slot].forbidden = std::move(forbidden);
        return c;
    }

private:
    std::size_t record(const StepRecord& s)
    {
        if (!trace_)
            return 0;
        trace_->steps.push_back(s);
        return trace_->steps.size() - 1;
    }

    Coloring lift(const PlanarGraph& g, const SurgeryResult& h, const Coloring& ch) const
    {
        Coloring c(g.order(), k_);
        for (std::size_t i = 0; i < h.old_id.size(); ++i)
            c.color[h.old_id[i]] = ch.color[i];
        return c;
    }

    Coloring direct(const PlanarGraph& g) const
    {
        Coloring c = greedy_square(g);
        if (c.budget <= k_) {
            c.budget = k_;
            return c;
        }
        bool exhausted = false;
        if (auto exact = color_within(g, k_, opts_.oracle_budget, &exhausted)) {
            exact->budget = k_;
            return *exact;
        }
        throw Error(Errc::BudgetExhausted, exhausted ? "oracle node budget exhausted"
                                                     : "no 2-distance colouring with " + std::to_string(k_) +
                                                           " colours exists");
    }

    int k_;
    int delta_;
    const ColorOptions& opts_;
    ColorTrace* trace_;
};

}  // namespace

Coloring color(const PlanarGraph& g, const ColorOptions& opts, ColorTrace* trace)
{
    const int delta = g.max_degree();
    const int k = opts.budget.value_or(3 * delta + 2);
    Engine engine(k, delta, opts, trace);
    return engine.run(g, 0);
}

}  // namespace twodist
