#include "support.hpp"

#include "twodist/colorer.hpp"
#include "twodist/discharge.hpp"
#include "twodist/gallery.hpp"
#include "twodist/generator.hpp"
#include "twodist/graph_io.hpp"
#include "twodist/hunt.hpp"
#include "twodist/oracle.hpp"
#include "twodist/reductions.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace twodist;
namespace gal = twodist::gallery;

namespace {

constexpr int kGenerated = 1000;
constexpr double kAuditSeconds = 60.0;
constexpr double kColorSeconds = 300.0;
constexpr double kOracleSeconds = 10.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Named {
    std::string name;
    PlanarGraph graph;
    std::string text; // file contents, empty for generated graphs
};

GenOptions options_for(int i)
{
    GenOptions o;
    o.n = 20 + (i * 7919) % 181;
    o.min_delta = 6;
    o.seed = 1000 + static_cast<std::uint64_t>(i);
    switch (i % 4) {
    case 0:
        o.max_delta = 6;
        break;
    case 1:
        o.max_delta = 7 + (i / 4) % 4;
        break;
    case 2:
        o.min_degree = 5;
        o.max_delta = 6 + (i / 4) % 4;
        o.deletions = (i / 4) % 6;
        break;
    default:
        break;
    }
    return o;
}

std::vector<Named> generated()
{
    std::vector<Named> out;
    for (int i = 0; i < kGenerated; ++i)
        out.push_back({"gen#" + std::to_string(i), gen_planar(options_for(i)), {}});
    return out;
}

std::vector<Named> hand_corpus()
{
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(TWODIST_CORPUS_DIR))
        if (entry.path().extension() == ".graph")
            paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    std::vector<Named> out;
    for (const auto& p : paths) {
        std::string text = read_file(p.string());
        out.push_back({p.filename().string(), parse_graph(text), text});
    }
    return out;
}

std::string strip_comments(const std::string& text)
{
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#')
            out += line + "\n";
    return out;
}

struct Verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

void report(int id, const char* title, const Verdict& v, const std::string& summary)
{
    std::printf("%s criterion %d: %s (%s)%s%s\n", v.pass ? "PASS" : "FAIL", id, title, summary.c_str(),
                v.pass ? "" : " first failure: ", v.pass ? "" : v.detail.c_str());
    std::fflush(stdout);
}

Rational& slot(std::vector<Rational>& vc, std::vector<Rational>& fc, const Element& e)
{
    return e.kind == Element::Kind::Vertex ? vc[e.id] : fc[e.id];
}

bool same_ledger(const ChargeLedger& a, const ChargeLedger& b)
{
    if (a.vertex_charge != b.vertex_charge || a.face_charge != b.face_charge || a.transfers.size() != b.transfers.size())
        return false;
    for (std::size_t i = 0; i < a.transfers.size(); ++i) {
        const Transfer& x = a.transfers[i];
        const Transfer& y = b.transfers[i];
        if (x.rule != y.rule || !(x.from == y.from) || !(x.to == y.to) || x.amount != y.amount)
            return false;
    }
    return true;
}

std::string outcome_key(const ReductionOutcome& r)
{
    if (const auto* red = std::get_if<Reduction>(&r))
        return describe(*red);
    if (const auto* gap = std::get_if<ProofGapReport>(&r))
        return "gap " + gap->reason;
    return "none";
}

}  // namespace

int main()
{
    const std::vector<Named> gen = generated();
    const std::vector<Named> hand = hand_corpus();
    std::vector<const Named*> all;
    for (const Named& g : gen)
        all.push_back(&g);
    for (const Named& g : hand)
        all.push_back(&g);
    bool ok = true;

    // 1 and 2: charge identity and rule conservation
    {
        Verdict euler, conserve;
        long long triangles = 0, transfers = 0;
        const auto t0 = Clock::now();
        for (const Named* ng : all) {
            const PlanarGraph& g = ng->graph;
            const AuditReport a = audit(g);
            if (a.total != Rational(-8) || a.initial.total() != Rational(-8) || a.final.total() != Rational(-8))
                euler.fail(ng->name + " total " + a.total.str());

            std::vector<Rational> vc = a.initial.vertex_charge, fc = a.initial.face_charge;
            std::map<int, Rational> out, in;
            for (const Transfer& t : a.rule_log()) {
                if (t.amount <= Rational(0))
                    conserve.fail(ng->name + " non-positive transfer under " + std::string(rule_name(t.rule)));
                slot(vc, fc, t.from) -= t.amount;
                slot(vc, fc, t.to) += t.amount;
                out[static_cast<int>(t.rule)] += t.amount;
                in[static_cast<int>(t.rule)] += t.amount;
                ++transfers;
            }
            if (vc != a.final.vertex_charge || fc != a.final.face_charge)
                conserve.fail(ng->name + " replayed transfers disagree with the final ledger");
            if (out != in)
                conserve.fail(ng->name + " per-rule imbalance");
            Rational moved;
            for (std::size_t v = 0; v < vc.size(); ++v)
                moved += a.final.vertex_charge[v] - a.initial.vertex_charge[v];
            for (std::size_t f = 0; f < fc.size(); ++f)
                moved += a.final.face_charge[f] - a.initial.face_charge[f];
            if (moved != Rational(0))
                conserve.fail(ng->name + " net charge moved " + moved.str());
            for (std::size_t f = 0; f < g.faces().size(); ++f) {
                if (g.faces()[f].degree() != 3)
                    continue;
                ++triangles;
                if (a.final.face_charge[f] != Rational(0))
                    conserve.fail(ng->name + " 3-face " + std::to_string(f) + " ends at " + a.final.face_charge[f].str());
            }
        }
        const double secs = seconds_since(t0);
        if (secs > kAuditSeconds)
            euler.fail("took " + std::to_string(secs) + " s");
        report(1, "audit total is exactly -8", euler,
               std::to_string(all.size()) + " graphs, " + std::to_string(secs) + " s, limit 60 s");
        report(2, "rules conserve charge, 3-faces end at 0", conserve,
               std::to_string(transfers) + " transfers, " + std::to_string(triangles) + " triangles");
        ok = ok && euler.pass && conserve.pass;
    }

    // 3: colouring within 3Δ+2
    {
        Verdict v;
        int passed = 0;
        int worst_slack = 1 << 30;
        const auto t0 = Clock::now();
        for (const Named& ng : gen) {
            const PlanarGraph& g = ng.graph;
            if (g.max_degree() < 6) {
                v.fail(ng.name + " has Δ " + std::to_string(g.max_degree()));
                continue;
            }
            try {
                const Coloring c = color(g);
                const ColorReport r = verify_coloring(g, c);
                const int limit = 3 * g.max_degree() + 2;
                if (!r.valid || !r.complete || r.colors_used > limit || !check::brute_valid(g, c))
                    v.fail(ng.name + " colouring rejected or uses " + std::to_string(r.colors_used));
                else
                    ++passed;
                worst_slack = std::min(worst_slack, limit - r.colors_used);
            } catch (const std::exception& e) {
                v.fail(ng.name + " " + e.what());
            }
        }
        const double secs = seconds_since(t0);
        if (secs > kColorSeconds)
            v.fail("took " + std::to_string(secs) + " s");
        report(3, "colour() stays within 3Δ+2", v,
               std::to_string(passed) + "/" + std::to_string(gen.size()) + " verified, min slack " +
                   std::to_string(worst_slack) + ", " + std::to_string(secs) + " s, limit 300 s");
        ok = ok && v.pass;
    }

    // 4 and 5: every visited graph reduces, every reduction is sound
    {
        Verdict gaps, sound;
        long long visited = 0, steps = 0, gap_count = 0;
        std::map<std::string, long long> fires;
        for (const Named* ng : all) {
            TrialOptions to;
            to.audit_graphs = false;
            const TrialResult r = run_trial(ng->graph, to);
            visited += r.graphs_visited;
            steps += r.steps;
            for (const auto& [tag, n] : r.fire_counts)
                fires[tag] += n;
            gap_count += static_cast<long long>(r.gaps.size());
            if (!r.gaps.empty())
                gaps.fail(ng->name + " " + r.gaps.front().reason);
            if (!r.colored && ng->graph.max_degree() >= 6)
                gaps.fail(ng->name + " " + r.error);
            if (r.improper || r.non_shrinking || r.bound_exceeded || r.palette_exceeded)
                sound.fail(ng->name + " " + (r.soundness_notes.empty() ? std::string("violation") : r.soundness_notes.front()));
        }
        report(4, "find_reduction never reports a gap at Δ >= 6", gaps,
               std::to_string(visited) + " graphs visited, " + std::to_string(gap_count) + " gaps");
        std::string tags;
        for (const auto& [tag, n] : fires)
            tags += (tags.empty() ? "" : " ") + tag + "=" + std::to_string(n);
        report(5, "reductions are proper, shrinking and within bound", sound,
               std::to_string(steps) + " steps; " + tags);
        ok = ok && gaps.pass && sound.pass;
    }

    // 6: oracle cross-checks
    {
        Verdict v;
        const auto t0 = Clock::now();
        const std::vector<std::pair<std::string, PlanarGraph>> fixed{
            {"C5", gal::cycle(5)}, {"K4", gal::tetrahedron()}, {"K1,6", gal::star(6)}, {"W6", gal::wheel(6)}};
        const int expected[] = {5, 4, 7, 7};
        for (std::size_t i = 0; i < fixed.size(); ++i) {
            const OracleResult r = chi2_exact(fixed[i].second);
            const int brute = check::brute_chi2(fixed[i].second);
            if (!r.exact || r.chi2 != expected[i] || brute != expected[i])
                v.fail(fixed[i].first + " oracle " + std::to_string(r.chi2) + " brute " + std::to_string(brute));
        }
        int complete = 0;
        std::vector<PlanarGraph> pool;
        for (const Named& ng : hand)
            pool.push_back(ng.graph);
        for (const auto& [name, g] : fixed)
            pool.push_back(g);
        for (std::size_t i = 0; i < 20; ++i)
            pool.push_back(gen[i].graph);
        for (const PlanarGraph& g : pool) {
            const OracleResult r = chi2_exact(g);
            if (!r.exact)
                continue;
            ++complete;
            if (color(g).colors_used() < r.chi2)
                v.fail("colourer beat the oracle on a graph of order " + std::to_string(g.order()));
        }
        const double secs = seconds_since(t0);
        if (secs > kOracleSeconds)
            v.fail("took " + std::to_string(secs) + " s");
        report(6, "oracle values and colourer >= χ2", v,
               std::to_string(complete) + " oracle-complete instances, " + std::to_string(secs) + " s, limit 10 s");
        ok = ok && v.pass;
    }

    // 7: octahedron golden audit
    {
        // Hand computation, Δ = 4 graph audited with class Δ 6 so the (4,4,0) rule applies:
        //   initial: vertices 4-4 = 0, faces 3-4 = -1
        //   R1: 8 triangles take 1/3 from each corner, vertex pays 4·1/3, faces reach 0
        //   R4: each (4,4,0) vertex gets 1/3 from each of 4 neighbours and gives 1/3 to each, net 0
        //   final: vertices -4/3, faces 0, total 6·(-4/3) = -8
        Verdict v;
        const PlanarGraph g = gal::octahedron();
        const AuditReport a = audit(g, 6);
        for (Vertex u = 0; u < g.order(); ++u)
            if (a.final.vertex_charge[u] != Rational(-4, 3))
                v.fail("vertex " + std::to_string(u + 1) + " ends at " + a.final.vertex_charge[u].str());
        for (const Rational& f : a.final.face_charge)
            if (f != Rational(0))
                v.fail("face ends at " + f.str());
        if (a.total != Rational(-8))
            v.fail("total " + a.total.str());
        const ReductionOutcome r = find_reduction(g, 6);
        const auto* red = std::get_if<Reduction>(&r);
        if (!red || lemma_name(red->lemma) != "L2.4" || a.reduction_tag != "L2.4")
            v.fail("L2.4 did not fire");
        report(7, "octahedron golden audit", v, "vertices -4/3, faces 0, total -8, " + a.reduction_tag);
        ok = ok && v.pass;
    }

    // 8: round trip and determinism
    {
        Verdict v;
        int round_trips = 0;
        for (const Named* ng : all) {
            const std::string text = write_graph(ng->graph);
            if (!(parse_graph(text) == ng->graph) || write_graph(parse_graph(text)) != text)
                v.fail(ng->name + " parse/write mismatch");
            if (!ng->text.empty() && strip_comments(ng->text) != text)
                v.fail(ng->name + " file is not canonical");
            ++round_trips;
        }
        for (int i = 0; i < kGenerated; i += 25) {
            const GenOptions o = options_for(i);
            const PlanarGraph a = gen_planar(o);
            const PlanarGraph b = gen_planar(o);
            if (!(a == b) || !(a == gen[i].graph)) {
                v.fail("gen#" + std::to_string(i) + " graph differs");
                continue;
            }
            if (outcome_key(find_reduction(a)) != outcome_key(find_reduction(b)))
                v.fail("gen#" + std::to_string(i) + " reduction differs");
            if (!(color(a) == color(b)))
                v.fail("gen#" + std::to_string(i) + " colouring differs");
            const AuditReport x = audit(a), y = audit(b);
            if (!same_ledger(x.initial, y.initial) || !same_ledger(x.final, y.final) || x.reduction_tag != y.reduction_tag)
                v.fail("gen#" + std::to_string(i) + " audit differs");
        }
        report(8, "round trip and determinism", v, std::to_string(round_trips) + " round trips, 40 seeds replayed");
        ok = ok && v.pass;
    }

    return ok ? 0 : 1;
}
