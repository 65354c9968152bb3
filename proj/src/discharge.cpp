#include "twodist/discharge.hpp"

#include "twodist/reductions.hpp"

#include <algorithm>

namespace twodist {

namespace {

void move(ChargeLedger& l, Rule rule, Element from, Element to, const Rational& amount)
{
    auto at = [&](const Element& e) -> Rational& {
        return e.kind == Element::Kind::Vertex ? l.vertex_charge[e.id] : l.face_charge[e.id];
    };
    at(from) -= amount;
    at(to) += amount;
    l.transfers.push_back(Transfer{rule, from, to, amount});
}

Element vtx(Vertex v)
{
    return Element{Element::Kind::Vertex, v};
}

Element fce(int f)
{
    return Element{Element::Kind::Face, f};
}

// Income rule for 4- and 5-vertices; nullopt when the vertex receives nothing.
std::optional<std::pair<Rule, Rational>> income_rule(const VertexClass& c)
{
    if (c.k == 4) {
        switch (c.t3) {
        case 4:
            return std::pair{Rule::R4, Rational(1, 3)};
        case 3:
            if (c.t4 == 1)
                return std::pair{Rule::R5, Rational(1, 4)};
            return std::pair{Rule::R6, Rational(1, 5)};
        case 2:
            if (c.t4 == 2)
                return std::pair{Rule::R7, Rational(1, 6)};
            if (c.t4 == 1)
                return std::pair{Rule::R8, Rational(7, 60)};
            return std::pair{Rule::R9, Rational(1, 15)};
        case 1:
            if (c.t4 == 3)
                return std::pair{Rule::R10, Rational(1, 12)};
            if (c.t4 == 2)
                return std::pair{Rule::R11, Rational(1, 30)};
            return std::nullopt;
        default:
            return std::nullopt;
        }
    }
    if (c.k == 5) {
        if (c.t3 == 5)
            return std::pair{Rule::R12, Rational(1, 6)};
        if (c.t3 == 4 && c.t4 == 1)
            return std::pair{Rule::R13, Rational(1, 12)};
        if (c.t3 == 4 && c.t4 == 0)
            return std::pair{Rule::R14, Rational(2, 45)};
    }
    return std::nullopt;
}

}  // namespace

std::string_view rule_name(Rule r)
{
    static const char* names[] = {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10", "R11", "R12", "R13", "R14"};
    return names[static_cast<int>(r) - 1];
}

Rational ChargeLedger::total() const
{
    Rational t;
    for (const auto& q : vertex_charge)
        t += q;
    for (const auto& q : face_charge)
        t += q;
    return t;
}

const Rational& ChargeLedger::charge(const Element& e) const
{
    return e.kind == Element::Kind::Vertex ? vertex_charge.at(e.id) : face_charge.at(e.id);
}

std::string face_key(const Face& f)
{
    const auto& b = f.boundary;
    const std::size_t n = b.size();
    std::size_t best = 0;
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const Vertex x = b[(s + i) % n], y = b[(best + i) % n];
            if (x != y) {
                if (x < y)
                    best = s;
                break;
            }
        }
    }
    std::string key;
    for (std::size_t i = 0; i < n; ++i) {
        if (i)
            key += '-';
        key += std::to_string(b[(best + i) % n] + 1);
    }
    return key;
}

ChargeLedger initial_charges(const PlanarGraph& g)
{
    ChargeLedger l;
    for (Vertex v = 0; v < g.order(); ++v)
        l.vertex_charge.emplace_back(g.degree(v) - 4);
    for (const Face& f : g.faces())
        l.face_charge.emplace_back(f.degree() - 4);
    return l;
}

ChargeLedger apply_rules(const PlanarGraph& g, const ChargeLedger& initial, std::optional<int> delta)
{
    const int d = delta.value_or(g.max_degree());
    const Classifier cls(g, d);
    ChargeLedger l = initial;
    l.transfers.clear();
    const auto& faces = g.faces();

    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        if (faces[f].degree() == 3)
            for (Vertex u : faces[f].boundary)
                move(l, Rule::R1, vtx(u), fce(f), Rational(1, 3));

    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        if (faces[f].degree() < 5)
            continue;
        for (Vertex u : faces[f].boundary) {
            if (g.degree(u) == 3)
                move(l, Rule::R2, fce(f), vtx(u), Rational(1, 3));
            else if (g.degree(u) <= d - 1)
                move(l, Rule::R2, fce(f), vtx(u), Rational(1, 5));
        }
    }

    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 3)
            for (Vertex u : g.rotation(v))
                move(l, Rule::R3, vtx(u), vtx(v), Rational(1, 9));

    for (Vertex v = 0; v < g.order(); ++v) {
        const VertexClass c = cls.at(v);
        const auto rule = income_rule(c);
        if (!rule)
            continue;
        for (Vertex u : g.rotation(v)) {
            if (c.k == 5 && (g.degree(u) < 6 || cls.is(u, 6, 6)))
                continue;
            move(l, rule->first, vtx(u), vtx(v), rule->second);
        }
    }
    return l;
}

AuditReport audit(const PlanarGraph& g, std::optional<int> delta)
{
    const int d = delta.value_or(g.max_degree());
    AuditReport rep;
    rep.initial = initial_charges(g);
    rep.final = apply_rules(g, rep.initial, d);
    rep.total = rep.final.total();
    const Classifier cls(g, d);
    for (Vertex v = 0; v < g.order(); ++v)
        if (rep.final.vertex_charge[v].is_negative())
            rep.negative_elements.push_back(
                NegativeElement{vtx(v), rep.final.vertex_charge[v], "vertex " + cls.at(v).signature()});
    for (int f = 0; f < static_cast<int>(g.faces().size()); ++f)
        if (rep.final.face_charge[f].is_negative())
            rep.negative_elements.push_back(NegativeElement{fce(f), rep.final.face_charge[f],
                                                            "face " + std::to_string(g.faces()[f].degree())});
    const auto outcome = find_reduction(g, d);
    if (const auto* r = std::get_if<Reduction>(&outcome))
        rep.reduction_tag = r->tag;
    if (d >= 6) {
        rep.contradiction = !rep.negative_elements.empty() && rep.reduction_tag.empty();
        rep.all_nonnegative_flag = rep.negative_elements.empty();
    }
    return rep;
}

}  // namespace twodist
