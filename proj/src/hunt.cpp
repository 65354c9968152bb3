#include "twodist/hunt.hpp"

#include "twodist/colorer.hpp"
#include "twodist/discharge.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace twodist {

namespace {

// Replaying the transfer log on the initial charges must reproduce the final ledger.
bool rules_conserve(const ChargeLedger& initial, const ChargeLedger& final)
{
    std::vector<Rational> vc = initial.vertex_charge, fc = initial.face_charge;
    auto slot = [&](const Element& e) -> Rational& { return e.kind == Element::Kind::Vertex ? vc[e.id] : fc[e.id]; };
    for (const Transfer& t : final.transfers) {
        slot(t.from) -= t.amount;
        slot(t.to) += t.amount;
    }
    return vc == final.vertex_charge && fc == final.face_charge;
}

}  // namespace

TrialResult run_trial(const PlanarGraph& g, const TrialOptions& opts)
{
    TrialResult res;
    res.order = g.order();
    res.size = g.size();
    res.delta = g.max_degree();
    res.budget = 3 * res.delta + 2;

    ColorTrace trace;
    trace.on_graph = [&](const PlanarGraph& h, int) {
        ++res.graphs_visited;
        if (!opts.audit_graphs)
            return;
        const AuditReport a = audit(h, res.delta);
        ++res.audit_totals[a.total.str()];
        if (a.total != Rational(-8) || !rules_conserve(a.initial, a.final))
            ++res.conservation_failures;
        for (int f = 0; f < static_cast<int>(h.faces().size()); ++f)
            if (h.faces()[f].degree() == 3 && !a.final.face_charge[f].is_zero())
                ++res.triangle_face_failures;
        if (res.delta >= 6 && a.reduction_tag.empty()) {
            auto outcome = find_reduction(h, res.delta);
            if (auto* gap = std::get_if<ProofGapReport>(&outcome))
                res.gaps.push_back(std::move(*gap));
        }
    };

    try {
        res.coloring = color(g, {}, &trace);
        res.colored = true;
        const ColorReport rep = verify_coloring(g, res.coloring);
        res.valid = rep.valid && rep.complete;
        res.colors_used = rep.colors_used;
    } catch (const Error& e) {
        res.error = std::string(errc_name(e.code())) + ": " + e.what();
    }
    // a gap met during colouring is already recorded by the audit hook; add it if auditing was off
    if (!opts.audit_graphs)
        for (auto& gap : trace.gaps)
            res.gaps.push_back(gap);

    res.steps = static_cast<int>(trace.steps.size());
    for (const StepRecord& s : trace.steps) {
        ++res.fire_counts[s.tag];
        if (!s.proper) {
            ++res.improper;
            res.soundness_notes.push_back(s.tag + " not proper at depth " + std::to_string(s.depth));
        }
        if (!s.shrinks) {
            ++res.non_shrinking;
            res.soundness_notes.push_back(s.tag + " does not shrink at depth " + std::to_string(s.depth));
        }
        for (int f : s.forbidden) {
            if (f > s.d2_bound) {
                ++res.bound_exceeded;
                res.soundness_notes.push_back(s.tag + " saw " + std::to_string(f) + " forbidden colours, bound " +
                                              std::to_string(s.d2_bound));
            }
            if (f >= res.budget) {
                ++res.palette_exceeded;
                res.soundness_notes.push_back(s.tag + " saw " + std::to_string(f) + " forbidden colours, palette " +
                                              std::to_string(res.budget));
            }
            res.max_forbidden_slack = std::max(res.max_forbidden_slack, f - s.d2_bound);
        }
    }
    return res;
}

HuntReport hunt(const HuntOptions& opts)
{
    std::vector<TrialResult> results(opts.trials);
    std::vector<std::string> gen_errors(opts.trials);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < opts.trials; i = next++) {
            GenOptions go;
            go.n = opts.n;
            go.min_delta = opts.min_delta;
            go.seed = opts.seed + static_cast<std::uint64_t>(i);
            go.max_delta = opts.max_delta;
            go.min_degree = opts.min_degree;
            go.deletions = opts.deletions;
            try {
                results[i] = run_trial(gen_planar(go));
            } catch (const Error& e) {
                gen_errors[i] = e.what();
            }
            results[i].seed = go.seed;
        }
    };
    const int threads = std::max(1, opts.threads);
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    HuntReport rep;
    rep.trials = opts.trials;
    for (int i = 0; i < opts.trials; ++i) {
        const TrialResult& r = results[i];
        rep.seeds.push_back(r.seed);
        if (!gen_errors[i].empty()) {
            rep.failures.push_back("seed " + std::to_string(r.seed) + ": " + gen_errors[i]);
            ++rep.coloring_failures;
            continue;
        }
        for (const auto& [tag, c] : r.fire_counts)
            rep.fire_counts[tag] += c;
        for (const auto& [tot, c] : r.audit_totals)
            rep.audit_totals[tot] += c;
        rep.gap_count += static_cast<long long>(r.gaps.size());
        if (!r.valid) {
            ++rep.coloring_failures;
            rep.failures.push_back("seed " + std::to_string(r.seed) + ": " + (r.error.empty() ? "invalid colouring" : r.error));
        }
        if (r.improper || r.non_shrinking || r.bound_exceeded || r.palette_exceeded)
            ++rep.soundness_failures;
    }
    return rep;
}

}  // namespace twodist
