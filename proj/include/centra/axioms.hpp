#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "centra/graph.hpp"
#include "centra/measures.hpp"

namespace centra {

/// The six Palak-Nguyen postulates, with P1 split into its three parts.
enum class AxiomId { P1a, P1b, P1c, P2, P3, P4, P5, P6 };

inline constexpr std::array<AxiomId, 8> kAllAxioms = {
    AxiomId::P1a, AxiomId::P1b, AxiomId::P1c, AxiomId::P2,
    AxiomId::P3,  AxiomId::P4,  AxiomId::P5,  AxiomId::P6,
};

std::string_view axiom_name(AxiomId id);
AxiomId parse_axiom(std::string_view name);

/// Search bounds for axiom checking. Boundary families (P1a/P1b/P1c/P2) run
/// on single graphs up to max_n; P4/P5/P6 enumerate every connected labeled
/// graph up to max_n (documented counterexamples on disconnected graphs
/// enter through the merge in compliance_table); P3 enumerates all labeled
/// graphs up to min(max_n, 5) with `permutations` seeded relabelings per
/// graph.
struct AxiomScope {
    NodeId max_n = 6;
    int permutations = 20;
    std::uint64_t seed = 42;
};

inline constexpr double kAxiomTolerance = 1e-9;

struct Witness {
    Graph graph;
    std::optional<NodeId> saturated_node;  // present for P5/P6 witnesses
    double value_before = 0.0;
    double value_after = 0.0;  // equals value_before for single-graph axioms
};

/// "Satisfied" always means satisfied-in-scope: enumeration cannot prove
/// universal claims, so `scope` records exactly what was searched.
struct AxiomVerdict {
    MeasureId measure{};
    AxiomId axiom{};
    bool violated = false;
    std::optional<Witness> witness;
    std::string scope;
};

AxiomVerdict check_axiom(MeasureId measure, AxiomId axiom, const AxiomScope& scope = {});

/// One explicit counterexample documented for a (measure, axiom) pair:
/// either a concrete witness graph (optionally with the saturation node the
/// source fixes) or an analytic family that enumeration cannot reach.
struct Counterexample {
    MeasureId measure{};
    AxiomId axiom{};
    Graph graph;
    std::optional<NodeId> saturated_node;
    bool analytic = false;
    std::string note;
};

const std::vector<Counterexample>& documented_counterexamples();

struct CounterexampleResult {
    Counterexample entry;
    bool confirmed = false;          // the violation reproduced
    std::optional<NodeId> chosen_node;
    double value_before = 0.0;
    double value_after = 0.0;
    std::string detail;
};

/// Re-evaluates every documented counterexample and reports whether each
/// violation reproduces. Failures come back as discrepancy results, never
/// exceptions.
std::vector<CounterexampleResult> verify_documented_counterexamples();

/// Full compliance matrix: rows follow kAllMeasures, columns are P1
/// (conjunction of P1a-P1c), P2..P6.
struct ComplianceTable {
    static constexpr std::size_t kColumns = 6;
    std::array<std::array<AxiomVerdict, kColumns>, 11> cells;
    std::array<int, 11> satisfied_counts{};

    bool satisfied(MeasureId measure, std::size_t column) const {
        return !cells[measure_index(measure)][column].violated;
    }
};

/// Runs the full grid: boundary families to n = 7, exhaustive enumeration to
/// scope.max_n for P4-P6 (P3 to min(max_n, 5)), then merges the documented
/// counterexamples so violations whose smallest witness exceeds the
/// enumeration bound are still reported.
ComplianceTable compliance_table(const AxiomScope& scope = {});

}  // namespace centra
