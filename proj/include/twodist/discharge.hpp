#pragma once

#include "twodist/classify.hpp"
#include "twodist/planar_graph.hpp"
#include "twodist/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twodist {

enum class Rule { R1 = 1, R2, R3, R4, R5, R6, R7, R8, R9, R10, R11, R12, R13, R14 };

std::string_view rule_name(Rule r);

/// A charge-carrying element: a vertex or a face (by face id of the graph).
struct Element {
    enum class Kind { Vertex, Face } kind = Kind::Vertex;
    int id = 0;

    friend bool operator==(const Element&, const Element&) = default;
};

struct Transfer {
    Rule rule = Rule::R1;
    Element from;
    Element to;
    Rational amount;
};

struct ChargeLedger {
    std::vector<Rational> vertex_charge;
    std::vector<Rational> face_charge;
    std::vector<Transfer> transfers;

    Rational total() const;
    const Rational& charge(const Element& e) const;
};

/// Lexicographically least rotation of the 1-based boundary, joined with '-'.
std::string face_key(const Face& f);

/// d(v) - 4 on vertices and d(f) - 4 on faces.
ChargeLedger initial_charges(const PlanarGraph& g);

/// Applies R1-R14 against the classification of the initial graph. `delta`
/// defaults to Δ(g).
ChargeLedger apply_rules(const PlanarGraph& g, const ChargeLedger& initial, std::optional<int> delta = std::nullopt);

struct NegativeElement {
    Element element;
    Rational final_charge;
    /// e.g. "vertex (4,2,1)" or "face 5".
    std::string classification;
};

struct AuditReport {
    Rational total;
    ChargeLedger initial;
    ChargeLedger final;
    std::vector<NegativeElement> negative_elements;
    /// Tag of find_reduction's hit on the same graph, empty if none.
    std::string reduction_tag;
    /// Δ >= 6, some element negative and no reduction fires.
    bool contradiction = false;
    /// Δ >= 6 and no element negative (impossible since the total is -8).
    bool all_nonnegative_flag = false;

    const std::vector<Transfer>& rule_log() const { return final.transfers; }
};

AuditReport audit(const PlanarGraph& g, std::optional<int> delta = std::nullopt);

}  // namespace twodist
