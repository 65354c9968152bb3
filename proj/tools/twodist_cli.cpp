#include "twodist/colorer.hpp"
#include "twodist/discharge.hpp"
#include "twodist/generator.hpp"
#include "twodist/graph_io.hpp"
#include "twodist/hunt.hpp"
#include "twodist/oracle.hpp"
#include "twodist/reductions.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace twodist;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInputError = 2;

void emit(const std::string& out, const std::string& text)
{
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
}

std::string face_label(const PlanarGraph& g, int f)
{
    return face_key(g.faces()[f]);
}

int cmd_gen(int n, int min_delta, std::uint64_t seed, std::optional<int> max_delta, std::optional<int> min_degree,
            const std::string& out)
{
    GenOptions o;
    o.min_degree = min_degree;
    o.n = n;
    o.min_delta = min_delta;
    o.seed = seed;
    o.max_delta = max_delta;
    const PlanarGraph g = gen_planar(o);
    emit(out, write_graph(g, "gen n=" + std::to_string(n) + " min-delta=" + std::to_string(min_delta) +
                                 " seed=" + std::to_string(seed)));
    return kOk;
}

int cmd_color(const std::string& file, std::optional<int> k, const std::string& out)
{
    const PlanarGraph g = parse_graph(read_file(file));
    ColorOptions opts;
    opts.budget = k;
    const Coloring c = color(g, opts);
    const ColorReport rep = verify_coloring(g, c);
    emit(out, write_coloring(c));
    std::cerr << "colours used " << rep.colors_used << " of " << c.budget << "\n";
    return rep.valid && rep.complete ? kOk : kInvalid;
}

int cmd_verify(const std::string& file, const std::string& colfile, std::optional<int> k)
{
    const PlanarGraph g = parse_graph(read_file(file));
    const Coloring c = parse_coloring(read_file(colfile), g.order(), k.value_or(3 * g.max_degree() + 2));
    const ColorReport rep = verify_coloring(g, c);
    for (const Violation& v : rep.violations)
        std::cout << "conflict " << v.u + 1 << " " << v.v + 1 << " distance " << v.dist << " colour " << v.color << "\n";
    for (Vertex v : rep.out_of_range)
        std::cout << "out-of-range " << v + 1 << " colour " << c.color[v] << "\n";
    for (Vertex v : rep.uncolored)
        std::cout << "uncoloured " << v + 1 << "\n";
    const bool ok = rep.valid && rep.complete;
    std::cout << (ok ? "valid" : "invalid") << " colours " << rep.colors_used << " budget " << rep.budget << "\n";
    return ok ? kOk : kInvalid;
}

int cmd_audit(const std::string& file, bool trace)
{
    const PlanarGraph g = parse_graph(read_file(file));
    const AuditReport a = audit(g);
    std::cout << "kind\tid\tinitial\tfinal\n";
    for (Vertex v = 0; v < g.order(); ++v)
        std::cout << "vertex\t" << v + 1 << "\t" << a.initial.vertex_charge[v] << "\t" << a.final.vertex_charge[v] << "\n";
    for (int f = 0; f < static_cast<int>(g.faces().size()); ++f)
        std::cout << "face\t" << face_label(g, f) << "\t" << a.initial.face_charge[f] << "\t" << a.final.face_charge[f] << "\n";
    auto name = [&](const Element& e) {
        return e.kind == Element::Kind::Vertex ? "v" + std::to_string(e.id + 1) : "f" + face_label(g, e.id);
    };
    if (trace) {
        std::cout << "# transfers\n";
        for (const Transfer& t : a.rule_log())
            std::cout << rule_name(t.rule) << "\t" << name(t.from) << "\t" << name(t.to) << "\t" << t.amount << "\n";
    }
    std::cout << "# total " << a.total << "\n";
    for (const NegativeElement& ne : a.negative_elements)
        std::cout << "# negative " << name(ne.element) << " " << ne.classification << " " << ne.final_charge << "\n";
    std::cout << "# reduction " << (a.reduction_tag.empty() ? "none" : a.reduction_tag) << "\n";
    if (a.contradiction)
        std::cout << "# contradiction: negative elements and no reduction\n";
    return a.total == Rational(-8) && !a.contradiction ? kOk : kInvalid;
}

int cmd_oracle(const std::string& file, long long budget)
{
    const PlanarGraph g = parse_graph(read_file(file));
    const OracleResult r = chi2_exact(g, budget);
    std::cout << "chi2 " << r.chi2 << (r.exact ? " exact" : " upper-bound") << "\n";
    std::cout << "lower-bound " << r.lower_bound << "\n";
    std::cout << "nodes " << r.nodes_explored << "\n";
    std::cout << "witness\n" << write_coloring(r.witness);
    return kOk;
}

int cmd_reduce(const std::string& file, int steps, bool trace)
{
    PlanarGraph g = parse_graph(read_file(file));
    const int delta = g.max_degree();
    std::cout << "start n=" << g.order() << " m=" << g.size() << " delta=" << delta << "\n";
    bool all_proper = true;
    for (int i = 0; steps < 0 || i < steps; ++i) {
        const ReductionOutcome out = find_reduction(g, delta);
        if (std::holds_alternative<std::monostate>(out)) {
            std::cout << "no reduction applies (delta " << delta << " < 6)\n";
            break;
        }
        if (const auto* gap = std::get_if<ProofGapReport>(&out)) {
            std::cout << "gap: " << gap->reason << "\n";
            for (const auto& note : gap->notes)
                std::cout << "  " << note << "\n";
            return kInvalid;
        }
        const Reduction& r = std::get<Reduction>(out);
        std::cout << "step " << i + 1 << ": " << describe(r) << "\n";
        if (r.is_split()) {
            const CutSplit parts = split_at(g, *r.split_vertex);
            std::cout << "  split into " << parts.first.graph.order() << " + " << parts.second.graph.order()
                      << " vertices; continuing on the larger part\n";
            g = parts.first.graph.order() >= parts.second.graph.order() ? parts.first.graph : parts.second.graph;
            continue;
        }
        const SurgeryResult h = apply_reduction(g, r);
        const bool proper = check_properness(g, r, h);
        all_proper = all_proper && proper;
        std::cout << "  bound " << r.d2_bound << " proper " << (proper ? "yes" : "no") << " -> n=" << h.graph.order()
                  << " m=" << h.graph.size() << "\n";
        if (trace)
            std::cout << write_graph(h.graph);
        g = h.graph;
        if (g.order() <= 1)
            break;
    }
    return all_proper ? kOk : kInvalid;
}

int cmd_hunt(const HuntOptions& opts)
{
    const HuntReport rep = hunt(opts);
    std::cout << "trials " << rep.trials << "\n";
    std::cout << "gaps " << rep.gap_count << "\n";
    std::cout << "colouring-failures " << rep.coloring_failures << "\n";
    std::cout << "soundness-failures " << rep.soundness_failures << "\n";
    std::cout << "# fire counts\n";
    for (const auto& [tag, c] : rep.fire_counts)
        std::cout << tag << "\t" << c << "\n";
    std::cout << "# audit totals\n";
    for (const auto& [tot, c] : rep.audit_totals)
        std::cout << tot << "\t" << c << "\n";
    for (const auto& f : rep.failures)
        std::cout << "failure " << f << "\n";
    return rep.gap_count == 0 && rep.coloring_failures == 0 && rep.soundness_failures == 0 ? kOk : kInvalid;
}

bool is_input_error(Errc c)
{
    return c == Errc::ParseError || c == Errc::EmbeddingInvalid || c == Errc::NotConnected ||
           c == Errc::UnknownVertex || c == Errc::GenerationFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"2-distance colouring of planar graphs"};
    app.require_subcommand(1);

    int gen_n = 20, gen_min = 6;
    std::uint64_t gen_seed = 1;
    std::optional<int> gen_max, gen_mindeg;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "generate a random embedded planar graph");
    gen->add_option("--n", gen_n, "number of vertices");
    gen->add_option("--min-delta", gen_min, "minimum maximum degree");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--max-delta", gen_max, "cap on the maximum degree");
    gen->add_option("--min-degree", gen_mindeg, "edge flips towards this minimum degree");
    gen->add_option("-o", gen_out, "output file");

    std::string file, colfile, out;
    std::optional<int> k;
    auto* col = app.add_subcommand("color", "2-distance colour a graph");
    col->add_option("FILE", file)->required();
    col->add_option("-k", k, "palette size (default 3*delta+2)");
    col->add_option("-o", out, "output colouring file");

    auto* ver = app.add_subcommand("verify", "check a 2-distance colouring");
    ver->add_option("FILE", file)->required();
    ver->add_option("COLFILE", colfile)->required();
    ver->add_option("-k", k, "palette size (default 3*delta+2)");

    bool trace = false;
    auto* aud = app.add_subcommand("audit", "run the discharging rules");
    aud->add_option("FILE", file)->required();
    aud->add_flag("--trace", trace, "log every transfer");

    long long budget = kDefaultNodeBudget;
    auto* ora = app.add_subcommand("oracle", "exact 2-distance chromatic number");
    ora->add_option("FILE", file)->required();
    ora->add_option("--budget", budget, "search node budget");

    int steps = -1;
    auto* red = app.add_subcommand("reduce", "apply reductions step by step");
    red->add_option("FILE", file)->required();
    red->add_option("--steps", steps, "stop after this many steps");
    red->add_flag("--trace", trace, "print each reduced graph");

    HuntOptions hopts;
    auto* hun = app.add_subcommand("hunt", "search random graphs for gaps");
    hun->add_option("--trials", hopts.trials);
    hun->add_option("--n", hopts.n);
    hun->add_option("--seed", hopts.seed);
    hun->add_option("--min-delta", hopts.min_delta);
    hun->add_option("--max-delta", hopts.max_delta);
    hun->add_option("--min-degree", hopts.min_degree, "edge flips towards this minimum degree");
    hun->add_option("--deletions", hopts.deletions, "random edge deletions per graph");
    hun->add_option("--threads", hopts.threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*gen)
            return cmd_gen(gen_n, gen_min, gen_seed, gen_max, gen_mindeg, gen_out);
        if (*col)
            return cmd_color(file, k, out);
        if (*ver)
            return cmd_verify(file, colfile, k);
        if (*aud)
            return cmd_audit(file, trace);
        if (*ora)
            return cmd_oracle(file, budget);
        if (*red)
            return cmd_reduce(file, steps, trace);
        if (*hun)
            return cmd_hunt(hopts);
    } catch (const ParseError& e) {
        std::cerr << "error: line " << e.line() << ", column " << e.column() << ": " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
        return is_input_error(e.code()) ? kInputError : kInvalid;
    }
    return kOk;
}
