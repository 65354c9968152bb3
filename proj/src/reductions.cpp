#include "twodist/reductions.hpp"

#include "twodist/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace twodist {

namespace {

constexpr int kAny = 0;
constexpr int kNotTriangle = -3;
constexpr int kBig = 5;  // a 5+-face

struct Labeling {
    std::vector<Vertex> lab;
    std::vector<int> corner;  // corner[j]: degree of the face between lab[j] and lab[j+1]
};

std::vector<Labeling> labelings(const PlanarGraph& g, Vertex v)
{
    std::vector<Labeling> out;
    const int k = g.degree(v);
    if (k == 0)
        return out;
    auto rot = g.rotation(v);
    const int s0 = static_cast<int>(std::min_element(rot.begin(), rot.end()) - rot.begin());
    for (int dir : {1, -1}) {
        for (int t = 0; t < k; ++t) {
            const int s = (s0 + t) % k;
            Labeling l;
            for (int j = 0; j < k; ++j) {
                l.lab.push_back(rot[((s + dir * j) % k + k) % k]);
                const int c = dir > 0 ? (s + j) % k : ((s - j - 1) % k + k) % k;
                l.corner.push_back(g.corner_degree(v, c));
            }
            out.push_back(std::move(l));
        }
    }
    return out;
}

bool fits(const Labeling& l, std::initializer_list<int> pattern)
{
    int j = 0;
    for (int want : pattern) {
        const int got = l.corner[j++];
        if (want == kAny)
            continue;
        if (want == kNotTriangle) {
            if (got == 3)
                return false;
        } else if (want == kBig) {
            if (got < 5)
                return false;
        } else if (got != want) {
            return false;
        }
    }
    return true;
}

// Would the surgery keep every degree at most Δ(g)?
bool within_budget(const PlanarGraph& g, const std::vector<Vertex>& del_v, const std::vector<Edge>& del_e,
                   const std::vector<Edge>& add)
{
    std::map<Vertex, int> change;
    std::vector<bool> gone(g.order(), false);
    for (Vertex v : del_v) {
        gone[v] = true;
        for (Vertex u : g.rotation(v))
            --change[u];
    }
    for (const Edge& e : del_e) {
        --change[e.u];
        --change[e.v];
    }
    std::vector<Edge> seen;
    for (const Edge& e : add) {
        const Edge n = e.normalized();
        if (g.adjacent(n.u, n.v) || std::find(seen.begin(), seen.end(), n) != seen.end())
            continue;
        seen.push_back(n);
        ++change[n.u];
        ++change[n.v];
    }
    for (auto [u, d] : change)
        if (!gone[u] && g.degree(u) + d > g.max_degree())
            return false;
    return true;
}

// k + Σ (cap_i - 1) - 2 t3 - t4 - extra, caps defaulting to Δ
int d2_bound(int delta, int k, const std::vector<int>& caps, int t3, int t4, int extra)
{
    int b = k;
    for (int i = 0; i < k; ++i) {
        const int cap = i < static_cast<int>(caps.size()) ? std::min(caps[i], delta) : delta;
        b += cap - 1;
    }
    return b - 2 * t3 - t4 - extra;
}

std::vector<int> sorted_neighbor_degrees(const PlanarGraph& g, Vertex v)
{
    std::vector<int> d;
    for (Vertex u : g.rotation(v))
        d.push_back(g.degree(u));
    std::sort(d.begin(), d.end());
    return d;
}

bool has_neighbor_degree(const PlanarGraph& g, Vertex v, int deg)
{
    for (Vertex u : g.rotation(v))
        if (g.degree(u) == deg)
            return true;
    return false;
}

int count_66_neighbors(const Classifier& c, Vertex v)
{
    int n = 0;
    for (Vertex u : c.graph().rotation(v))
        if (c.is(u, 6, 6))
            ++n;
    return n;
}

class Matcher {
public:
    explicit Matcher(const Classifier& c) : c_(c), g_(c.graph()), delta_(c.delta()) {}

    std::optional<Reduction> run(Lemma l) const
    {
        switch (l) {
        case Lemma::L2_1:
            return cut_vertex();
        case Lemma::L2_2:
            return low_degree();
        default:
            break;
        }
        for (Vertex v = 0; v < g_.order(); ++v)
            if (auto r = at(l, v))
                return r;
        return std::nullopt;
    }

private:
    Reduction base(Lemma l, Vertex v, std::vector<Vertex> labels) const
    {
        Reduction r;
        r.lemma = l;
        r.tag = std::string(lemma_name(l));
        r.center = v;
        r.labels = std::move(labels);
        r.pending = {v};
        r.delete_vertices = {v};
        r.delta = delta_;
        return r;
    }

    // Delete v and add the listed label pairs; nullopt if the degree budget would break.
    std::optional<Reduction> remove(Lemma l, Vertex v, const Labeling& lab,
                                    std::initializer_list<std::pair<int, int>> pairs, const std::vector<int>& caps,
                                    int extra, std::string case_id = {}) const
    {
        Reduction r = base(l, v, lab.lab);
        for (auto [a, b] : pairs)
            r.add_edges.push_back(Edge{lab.lab[a], lab.lab[b]});
        if (!within_budget(g_, r.delete_vertices, {}, r.add_edges))
            return std::nullopt;
        r.case_id = std::move(case_id);
        r.d2_bound = d2_bound(delta_, g_.degree(v), caps, c_.t3(v), c_.t4(v), extra);
        return r;
    }

    // Tries each labeling matching `pattern`.
    template <class Fn>
    std::optional<Reduction> first_labeling(Vertex v, std::initializer_list<int> pattern, Fn&& fn) const
    {
        for (const Labeling& l : labelings(g_, v)) {
            if (!fits(l, pattern))
                continue;
            if (auto r = fn(l))
                return r;
        }
        return std::nullopt;
    }

    std::optional<Reduction> cut_vertex() const
    {
        if (g_.order() <= 2)
            return std::nullopt;
        auto cuts = cut_vertices(g_);
        if (cuts.empty())
            return std::nullopt;
        const Vertex v = cuts.front();
        Reduction r;
        r.lemma = Lemma::L2_1;
        r.tag = "L2.1";
        r.center = v;
        r.labels.assign(g_.rotation(v).begin(), g_.rotation(v).end());
        r.delta = delta_;
        r.split_vertex = v;
        return r;
    }

    std::optional<Reduction> low_degree() const
    {
        if (g_.order() == 0 || g_.min_degree() > 2)
            return std::nullopt;
        Vertex v = 0;
        while (g_.degree(v) != g_.min_degree())
            ++v;
        const int k = g_.degree(v);
        Reduction r = base(Lemma::L2_2, v, std::vector<Vertex>(g_.rotation(v).begin(), g_.rotation(v).end()));
        if (k == 2)
            r.add_edges.push_back(Edge{r.labels[0], r.labels[1]});
        r.d2_bound = k * delta_;
        return r;
    }

    std::optional<Reduction> at(Lemma l, Vertex v) const
    {
        const int k = g_.degree(v);
        const Classifier& c = c_;
        switch (l) {
        case Lemma::L2_3_1:
            if (k != 3)
                return std::nullopt;
            return first_labeling(v, {kAny, kAny, kAny}, [&](const Labeling& lab) -> std::optional<Reduction> {
                if (g_.degree(lab.lab[1]) > delta_ - 1)
                    return std::nullopt;
                return remove(l, v, lab, {{0, 1}, {1, 2}}, {delta_ - 1}, 0);
            });
        case Lemma::L2_3_2:
            if (k != 3 || c.t3(v) < 1)
                return std::nullopt;
            return first_labeling(v, {3, kAny, kAny},
                                  [&](const Labeling& lab) { return remove(l, v, lab, {{0, 2}}, {}, 0); });
        case Lemma::L2_3_3:
            if (k != 3 || c.t4(v) < 2)
                return std::nullopt;
            return first_labeling(v, {4, 4, kAny},
                                  [&](const Labeling& lab) { return remove(l, v, lab, {{0, 2}}, {}, 0); });
        case Lemma::L2_4:
            if (!c.is(v, 4, 4))
                return std::nullopt;
            if (sorted_neighbor_degrees(g_, v).front() > 9)
                return std::nullopt;
            return first_labeling(v, {3, 3, 3, 3},
                                  [&](const Labeling& lab) { return remove(l, v, lab, {}, {9}, 0); });
        case Lemma::L2_5_1:
            if (!c.is(v, 4, 3) || sorted_neighbor_degrees(g_, v).front() > 7)
                return std::nullopt;
            return first_labeling(v, {3, 3, 3, kAny},
                                  [&](const Labeling& lab) { return remove(l, v, lab, {{0, 3}}, {7}, 0); });
        case Lemma::L2_5_2:
            if (!c.is(v, 4, 3, 1) || sorted_neighbor_degrees(g_, v).front() > 8)
                return std::nullopt;
            return first_labeling(v, {3, 3, 3, 4},
                                  [&](const Labeling& lab) { return remove(l, v, lab, {}, {8}, 0); });
        case Lemma::L2_6_1:
        case Lemma::L2_6_2:
        case Lemma::L2_6_3:
        case Lemma::L2_6_4:
        case Lemma::L2_6_5:
            return four_two(l, v);
        case Lemma::L2_7_1:
            if (!c.is(v, 4, 1, 3) || sorted_neighbor_degrees(g_, v).front() > 6)
                return std::nullopt;
            return first_labeling(v, {3, 4, 4, 4}, [&](const Labeling& lab) {
                return remove(l, v, lab, {{1, 2}, {0, 3}}, {6}, 0);
            });
        case Lemma::L2_7_2:
            return four_one_two(v);
        case Lemma::L2_8_1:
        case Lemma::L2_8_2:
        case Lemma::L2_8_3:
            return five_five(l, v);
        case Lemma::L2_9_1:
        case Lemma::L2_9_2:
        case Lemma::L2_9_3:
        case Lemma::L2_10_1:
        case Lemma::L2_10_2:
        case Lemma::L2_10_3:
        case Lemma::L2_10_4:
            return five_four(l, v);
        case Lemma::L2_11:
            return six_five(v);
        default:
            return std::nullopt;
        }
    }

    std::optional<Reduction> four_two(Lemma l, Vertex v) const
    {
        if (!c_.is(v, 4, 2))
            return std::nullopt;
        std::vector<int> caps;
        int extra = 0;
        const auto degs = sorted_neighbor_degrees(g_, v);
        switch (l) {
        case Lemma::L2_6_1:
            if (degs.front() > 5)
                return std::nullopt;
            caps = {5};
            break;
        case Lemma::L2_6_2:
            if (!has_neighbor_degree(g_, v, 6) || c_.special(v))
                return std::nullopt;
            caps = {6};
            extra = 1;
            break;
        case Lemma::L2_6_3:
            if (c_.t4(v) != 2 || degs.front() > 7)
                return std::nullopt;
            caps = {7};
            break;
        case Lemma::L2_6_4:
            if (c_.t4(v) != 1 || degs.front() > 6)
                return std::nullopt;
            caps = {6};
            break;
        case Lemma::L2_6_5:
            if (c_.t4(v) != 1 || !has_neighbor_degree(g_, v, 7) || c_.special(v))
                return std::nullopt;
            caps = {7};
            extra = 1;
            break;
        default:
            return std::nullopt;
        }
        if (auto r = first_labeling(v, {3, 3, kAny, kAny}, [&](const Labeling& lab) {
                return remove(l, v, lab, {{1, 3}}, caps, extra, "adjacent");
            }))
            return r;
        return first_labeling(v, {3, kNotTriangle, 3, kNotTriangle}, [&](const Labeling& lab) {
            return remove(l, v, lab, {{0, 3}, {1, 2}}, caps, extra, "non-adjacent");
        });
    }

    std::optional<Reduction> four_one_two(Vertex v) const
    {
        const Lemma l = Lemma::L2_7_2;
        if (!c_.is(v, 4, 1, 2) || sorted_neighbor_degrees(g_, v).front() > 5)
            return std::nullopt;
        if (auto r = first_labeling(v, {3, 4, 4, kBig}, [&](const Labeling& lab) {
                return remove(l, v, lab, {{1, 2}, {0, 3}}, {5}, 0, "adjacent");
            }))
            return r;
        return first_labeling(v, {3, 4, kBig, 4}, [&](const Labeling& lab) -> std::optional<Reduction> {
            if (g_.degree(lab.lab[0]) <= 5)
                return remove(l, v, lab, {{0, 2}, {0, 3}}, {5}, 0, "non-adjacent");
            if (g_.degree(lab.lab[3]) <= 5)
                return remove(l, v, lab, {{0, 3}, {2, 3}}, {5}, 0, "non-adjacent");
            return std::nullopt;
        });
    }

    std::optional<Reduction> five_five(Lemma l, Vertex v) const
    {
        if (!c_.is(v, 5, 5))
            return std::nullopt;
        const auto d = sorted_neighbor_degrees(g_, v);
        std::vector<int> caps;
        int extra = 0;
        switch (l) {
        case Lemma::L2_8_1:
            if (d[0] > 5 || d[1] > 6)
                return std::nullopt;
            caps = {5, 6};
            break;
        case Lemma::L2_8_2:
            if (!has_neighbor_degree(g_, v, 5) || !has_neighbor_degree(g_, v, 7) || c_.special(v))
                return std::nullopt;
            caps = {5, 7};
            extra = 1;
            break;
        case Lemma::L2_8_3:
            if (std::count(d.begin(), d.end(), 6) < 2 || c_.special(v))
                return std::nullopt;
            caps = {6, 6};
            extra = 1;
            break;
        default:
            return std::nullopt;
        }
        return first_labeling(v, {3, 3, 3, 3, 3},
                              [&](const Labeling& lab) { return remove(l, v, lab, {}, caps, extra); });
    }

    std::optional<Reduction> five_four(Lemma l, Vertex v) const
    {
        const bool one = c_.is(v, 5, 4, 1);
        const bool zero = c_.is(v, 5, 4, 0);
        const auto d = sorted_neighbor_degrees(g_, v);
        const int small = static_cast<int>(std::count_if(d.begin(), d.end(), [](int x) { return x <= 5; }));
        std::vector<int> caps;
        int extra = 0;
        switch (l) {
        case Lemma::L2_9_1:
            if (!one || small < 2)
                return std::nullopt;
            caps = {5, 5};
            break;
        case Lemma::L2_9_2:
            if (!one || small < 1 || !has_neighbor_degree(g_, v, 6) || c_.special(v))
                return std::nullopt;
            caps = {6, 5};
            extra = 1;
            break;
        case Lemma::L2_9_3:
            if (!one || count_66_neighbors(c_, v) < 2)
                return std::nullopt;
            caps = {6, 6};
            extra = 3;
            break;
        case Lemma::L2_10_1:
            if (!zero || small < 2 || d[2] > 6)
                return std::nullopt;
            caps = {5, 5, 6};
            break;
        case Lemma::L2_10_2:
            if (!zero || small < 2 || !has_neighbor_degree(g_, v, 7) || c_.special(v))
                return std::nullopt;
            caps = {5, 5, 7};
            extra = 1;
            break;
        case Lemma::L2_10_3:
            if (!zero || count_66_neighbors(c_, v) < 3)
                return std::nullopt;
            caps = {6, 6, 6};
            extra = 4;
            break;
        case Lemma::L2_10_4:
            if (!zero || small < 1 || count_66_neighbors(c_, v) < 2)
                return std::nullopt;
            caps = {5, 6, 6};
            extra = 3;
            break;
        default:
            return std::nullopt;
        }
        return first_labeling(v, {3, 3, 3, 3, one ? 4 : kBig},
                              [&](const Labeling& lab) { return remove(l, v, lab, {{0, 4}}, caps, extra); });
    }

    std::optional<Reduction> six_five(Vertex v) const
    {
        const Lemma l = Lemma::L2_11;
        if (!c_.is(v, 6, 5))
            return std::nullopt;
        return first_labeling(v, {3, 3, 3, 3, 3, kNotTriangle}, [&](const Labeling& lab) -> std::optional<Reduction> {
            const Vertex v2 = lab.lab[1], v4 = lab.lab[3], v6 = lab.lab[5];
            if (!c_.is(v2, 5, 5) || !c_.is(v4, 5, 5) || !c_.is(v6, 5, 4))
                return std::nullopt;
            if (delta_ <= 6) {
                Reduction r = base(l, v, lab.lab);
                r.tag = "L2.11.case1";
                r.case_id = "case1";
                r.delete_vertices.clear();
                r.delete_edges = {Edge{v, v4}};
                r.pending = {v, v4};
                const int bound_v = d2_bound(delta_, 6, {5, 5, 5}, c_.t3(v), c_.t4(v), 5);
                const int bound_v4 = d2_bound(delta_, 5, {6}, c_.t3(v4), c_.t4(v4), 2);
                r.d2_bound = std::max(bound_v, bound_v4);
                return r;
            }
            auto r = remove(l, v, lab, {{0, 3}, {1, 3}, {3, 5}}, {5, 5, 5}, 5, "case2");
            if (r)
                r->tag = "L2.11.case2";
            return r;
        });
    }

    const Classifier& c_;
    const PlanarGraph& g_;
    int delta_;
};

std::string vertex_note(const Classifier& c, Vertex v)
{
    std::ostringstream os;
    const auto cls = c.at(v);
    os << "v" << v + 1 << " " << cls.signature() << (cls.special ? " special" : "") << " neighbours";
    for (Vertex u : c.graph().rotation(v))
        os << " " << u + 1 << ":" << c.at(u).signature();
    return os.str();
}

}  // namespace

const std::vector<Lemma>& lemma_priority()
{
    static const std::vector<Lemma> order = {
        Lemma::L2_1,    Lemma::L2_2,    Lemma::L2_3_1,  Lemma::L2_3_2,  Lemma::L2_3_3,  Lemma::L2_4,
        Lemma::L2_5_1,  Lemma::L2_5_2,  Lemma::L2_6_1,  Lemma::L2_6_2,  Lemma::L2_6_3,  Lemma::L2_6_4,
        Lemma::L2_6_5,  Lemma::L2_7_1,  Lemma::L2_7_2,  Lemma::L2_8_1,  Lemma::L2_8_2,  Lemma::L2_8_3,
        Lemma::L2_9_1,  Lemma::L2_9_2,  Lemma::L2_9_3,  Lemma::L2_10_1, Lemma::L2_10_2, Lemma::L2_10_3,
        Lemma::L2_10_4, Lemma::L2_11,
    };
    return order;
}

std::string_view lemma_name(Lemma l)
{
    switch (l) {
    case Lemma::L2_1: return "L2.1";
    case Lemma::L2_2: return "L2.2";
    case Lemma::L2_3_1: return "L2.3.1";
    case Lemma::L2_3_2: return "L2.3.2";
    case Lemma::L2_3_3: return "L2.3.3";
    case Lemma::L2_4: return "L2.4";
    case Lemma::L2_5_1: return "L2.5.1";
    case Lemma::L2_5_2: return "L2.5.2";
    case Lemma::L2_6_1: return "L2.6.1";
    case Lemma::L2_6_2: return "L2.6.2";
    case Lemma::L2_6_3: return "L2.6.3";
    case Lemma::L2_6_4: return "L2.6.4";
    case Lemma::L2_6_5: return "L2.6.5";
    case Lemma::L2_7_1: return "L2.7.1";
    case Lemma::L2_7_2: return "L2.7.2";
    case Lemma::L2_8_1: return "L2.8.1";
    case Lemma::L2_8_2: return "L2.8.2";
    case Lemma::L2_8_3: return "L2.8.3";
    case Lemma::L2_9_1: return "L2.9.1";
    case Lemma::L2_9_2: return "L2.9.2";
    case Lemma::L2_9_3: return "L2.9.3";
    case Lemma::L2_10_1: return "L2.10.1";
    case Lemma::L2_10_2: return "L2.10.2";
    case Lemma::L2_10_3: return "L2.10.3";
    case Lemma::L2_10_4: return "L2.10.4";
    case Lemma::L2_11: return "L2.11";
    }
    return "?";
}

std::optional<Reduction> match(Lemma lemma, const PlanarGraph& g, std::optional<int> delta)
{
    Classifier cls(g, delta);
    return match(lemma, cls);
}

std::optional<Reduction> match(Lemma lemma, const Classifier& cls)
{
    return Matcher(cls).run(lemma);
}

ReductionOutcome find_reduction(const PlanarGraph& g, std::optional<int> delta)
{
    Classifier cls(g, delta);
    Matcher m(cls);
    for (Lemma l : lemma_priority())
        if (auto r = m.run(l))
            return *r;
    if (cls.delta() < 6)
        return std::monostate{};
    ProofGapReport gap;
    gap.graph = g;
    gap.delta = cls.delta();
    gap.reason = "no configuration of the catalogue occurs";
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) <= 5)
            gap.notes.push_back(vertex_note(cls, v));
    return gap;
}

SurgeryResult apply_reduction(const PlanarGraph& g, const Reduction& r)
{
    if (r.is_split())
        throw Error(Errc::SurgeryNotPlanar, "split reductions are applied with split_at");
    SurgeryPlan plan;
    plan.delete_vertices = r.delete_vertices;
    plan.delete_edges = r.delete_edges;
    plan.add_edges = r.add_edges;
    plan.max_degree = g.max_degree();
    return surgery(g, plan);
}

bool preserves_distance2(const PlanarGraph& g, const SurgeryResult& h, const std::vector<Vertex>& skip)
{
    std::vector<bool> skipped(g.order(), false);
    for (Vertex v : skip)
        skipped[v] = true;
    const BitMatrix sg = square_matrix(g);
    const BitMatrix sh = square_matrix(h.graph);
    for (Vertex u = 0; u < g.order(); ++u) {
        const Vertex nu = h.new_id[u];
        if (nu < 0 || skipped[u])
            continue;
        const std::uint64_t* row = sg.row_data(u);
        for (int w = 0; w < sg.words(); ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                const Vertex x = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (x <= u || skipped[x])
                    continue;
                const Vertex nx = h.new_id[x];
                if (nx >= 0 && !sh.test(nu, nx))
                    return false;
            }
        }
    }
    return true;
}

bool check_properness(const PlanarGraph& g, const Reduction& r, const SurgeryResult& h)
{
    if (h.graph.max_degree() > g.max_degree())
        return false;
    return preserves_distance2(g, h, r.pending);
}

std::string describe(const Reduction& r)
{
    std::ostringstream os;
    os << r.tag;
    if (!r.case_id.empty())
        os << " [" << r.case_id << "]";
    os << " at v" << r.center + 1;
    if (r.is_split()) {
        os << ": split at cut vertex";
        return os.str();
    }
    os << " labels(";
    for (std::size_t i = 0; i < r.labels.size(); ++i)
        os << (i ? " " : "") << r.labels[i] + 1;
    os << ")";
    if (!r.delete_vertices.empty()) {
        os << " delete";
        for (Vertex v : r.delete_vertices)
            os << " " << v + 1;
    }
    for (const Edge& e : r.delete_edges)
        os << " cut " << e.u + 1 << "-" << e.v + 1;
    for (const Edge& e : r.add_edges)
        os << " add " << e.u + 1 << "-" << e.v + 1;
    os << " bound " << r.d2_bound << " (delta " << r.delta << ")";
    return os.str();
}

}  // namespace twodist
