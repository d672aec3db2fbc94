#include "centra/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "centra/centrality.hpp"
#include "centra/generate.hpp"

namespace centra {

std::string_view axiom_name(AxiomId id) {
    switch (id) {
        case AxiomId::P1a: return "P1a";
        case AxiomId::P1b: return "P1b";
        case AxiomId::P1c: return "P1c";
        case AxiomId::P2: return "P2";
        case AxiomId::P3: return "P3";
        case AxiomId::P4: return "P4";
        case AxiomId::P5: return "P5";
        case AxiomId::P6: return "P6";
    }
    throw std::invalid_argument("unknown axiom id");
}

AxiomId parse_axiom(std::string_view name) {
    for (AxiomId id : kAllAxioms)
        if (axiom_name(id) == name) return id;
    throw std::invalid_argument("unknown axiom '" + std::string(name) + "'");
}

namespace {

constexpr NodeId kBoundaryN = 7;  // P1/P2 families in compliance_table

Graph empty_graph(NodeId n) { return Graph(n, {}); }

double eval_value(const Graph& g, MeasureId id) { return evaluate(g, id).value; }

std::vector<NodeId> random_permutation(std::mt19937_64& rng, NodeId n) {
    std::vector<NodeId> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), NodeId{0});
    for (NodeId i = n - 1; i > 0; --i) {
        const NodeId j = static_cast<NodeId>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    }
    return p;
}

std::vector<NodeId> saturated_nodes_of(const Graph& g) {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) == g.node_count() - 1) out.push_back(v);
    return out;
}

struct GridCell {
    bool violated = false;
    std::optional<Witness> witness;
};

/// Boundary-family axioms evaluated on single graphs per n.
GridCell check_boundary_family(MeasureId measure, AxiomId axiom, NodeId bound) {
    GridCell cell;
    auto expect = [&](const Graph& g, double target) {
        if (cell.violated) return;
        const double value = eval_value(g, measure);
        if (std::fabs(value - target) > kAxiomTolerance) {
            cell.violated = true;
            cell.witness = Witness{g, std::nullopt, value, value};
        }
    };
    switch (axiom) {
        case AxiomId::P1a:
            expect(empty_graph(1), 0.0);
            break;
        case AxiomId::P1b:
            for (NodeId n = 3; n <= bound && !cell.violated; ++n)
                expect(generate(Topology::Complete, n), 0.0);
            break;
        case AxiomId::P1c:
            for (NodeId n = 1; n <= bound && !cell.violated; ++n)
                expect(empty_graph(n), 0.0);
            break;
        case AxiomId::P2:
            for (NodeId n = 3; n <= bound && !cell.violated; ++n)
                expect(generate(Topology::Star, n), 1.0);
            break;
        default:
            throw std::invalid_argument("not a boundary-family axiom");
    }
    return cell;
}

/// Shared enumeration pass for P3-P6. Evaluates each enumerated graph (and
/// each saturation variant) once for all requested measures, recording the
/// first violation per (measure, axiom) in enumeration order
/// (n asc, edge-bitmask asc, node / permutation index asc).
///
/// P4/P5/P6 run over connected graphs; documented counterexamples on
/// disconnected graphs arrive through the merge step instead. P3 keeps the
/// full labeled family.
struct EnumerationResult {
    // indexed [measure_index][axiom] for P3..P6 only
    std::array<std::array<GridCell, 4>, 11> cells;

    GridCell& at(MeasureId m, AxiomId a) {
        return cells[measure_index(m)][static_cast<std::size_t>(a) - static_cast<std::size_t>(AxiomId::P3)];
    }
};

EnumerationResult enumerate_axioms(std::span<const MeasureId> measures, const AxiomScope& scope,
                                   bool want_p3, bool want_p4, bool want_p5, bool want_p6) {
    EnumerationResult result;
    std::mt19937_64 rng(scope.seed);
    const NodeId p3_max = std::min<NodeId>(scope.max_n, 5);

    auto evaluate_requested = [&](const Graph& g) {
        std::vector<double> values(measures.size());
        const auto results = evaluate_all(g, measures);
        for (std::size_t i = 0; i < results.size(); ++i) values[i] = results[i].value;
        return values;
    };

    for (NodeId n = 1; n <= scope.max_n; ++n) {
        const bool p3_here = want_p3 && n <= p3_max;
        enumerate_graphs(n, false, [&](const Graph& g) {
            const auto saturated = saturated_nodes_of(g);
            const bool connected = is_connected(g);
            const bool none_saturated = saturated.empty() && connected;
            const bool mixed = !saturated.empty() &&
                               static_cast<NodeId>(saturated.size()) < g.node_count();

            const bool need_values = p3_here || (want_p4 && none_saturated) ||
                                     (want_p5 && mixed) || (want_p6 && none_saturated);
            if (!need_values) return;
            const auto values = evaluate_requested(g);

            if (want_p4 && none_saturated) {
                for (std::size_t i = 0; i < measures.size(); ++i) {
                    auto& cell = result.at(measures[i], AxiomId::P4);
                    if (!cell.violated && values[i] >= 1.0 - kAxiomTolerance) {
                        cell.violated = true;
                        cell.witness = Witness{g, std::nullopt, values[i], values[i]};
                    }
                }
            }

            if (p3_here) {
                for (int t = 0; t < scope.permutations; ++t) {
                    const auto p = random_permutation(rng, n);
                    const Graph h = permute(g, p);
                    const auto relabeled = evaluate_requested(h);
                    for (std::size_t i = 0; i < measures.size(); ++i) {
                        auto& cell = result.at(measures[i], AxiomId::P3);
                        if (!cell.violated &&
                            std::fabs(values[i] - relabeled[i]) > kAxiomTolerance) {
                            cell.violated = true;
                            cell.witness = Witness{h, std::nullopt, values[i], relabeled[i]};
                        }
                    }
                }
            }

            if ((want_p5 && mixed) || (want_p6 && none_saturated)) {
                for (NodeId v = 0; v < g.node_count(); ++v) {
                    if (g.degree(v) == g.node_count() - 1) continue;
                    const Graph after = saturate(g, v);
                    const auto after_values = evaluate_requested(after);
                    for (std::size_t i = 0; i < measures.size(); ++i) {
                        if (want_p5 && mixed) {
                            auto& cell = result.at(measures[i], AxiomId::P5);
                            if (!cell.violated &&
                                after_values[i] > values[i] + kAxiomTolerance) {
                                cell.violated = true;
                                cell.witness = Witness{g, v, values[i], after_values[i]};
                            }
                        }
                        if (want_p6 && none_saturated) {
                            auto& cell = result.at(measures[i], AxiomId::P6);
                            if (!cell.violated &&
                                after_values[i] < values[i] - kAxiomTolerance) {
                                cell.violated = true;
                                cell.witness = Witness{g, v, values[i], after_values[i]};
                            }
                        }
                    }
                }
            }
        });
    }
    return result;
}

std::string boundary_scope(AxiomId axiom, NodeId bound) {
    switch (axiom) {
        case AxiomId::P1a: return "single-node graph";
        case AxiomId::P1b: return "complete graphs n=3.." + std::to_string(bound);
        case AxiomId::P1c: return "empty graphs n=1.." + std::to_string(bound);
        case AxiomId::P2: return "star graphs n=3.." + std::to_string(bound);
        default: return {};
    }
}

std::string enumeration_scope(AxiomId axiom, const AxiomScope& scope) {
    if (axiom == AxiomId::P3)
        return "exhaustive labeled graphs n<=" +
               std::to_string(std::min<NodeId>(scope.max_n, 5)) + ", " +
               std::to_string(scope.permutations) + " seeded permutations per graph (seed " +
               std::to_string(scope.seed) + ")";
    return "exhaustive connected labeled graphs n<=" + std::to_string(scope.max_n);
}

Graph one_edge_graph(NodeId n) { return Graph(n, {{0, 1}}); }

/// ECD on the one-edge + isolated-nodes family in closed form.
double ecd_pendant_family_value(NodeId n) {
    return std::sqrt(static_cast<double>(n - 2) / static_cast<double>(n - 1));
}

std::optional<NodeId> find_violating_node(const Graph& g, MeasureId measure, AxiomId axiom,
                                          double before, double& after_out) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) == g.node_count() - 1) continue;
        const double after = eval_value(saturate(g, v), measure);
        const bool hit = axiom == AxiomId::P5 ? after > before + kAxiomTolerance
                                              : after < before - kAxiomTolerance;
        if (hit) {
            after_out = after;
            return v;
        }
    }
    return std::nullopt;
}

/// First n=5 graph (bitmask order) realizing degree multiset {3,3,3,3,4}
/// that violates P5 for NGC; only the degree sequence is documented, not an
/// edge list.
Counterexample ngc_p5_entry() {
    Counterexample entry{MeasureId::Ngc, AxiomId::P5, Graph(), std::nullopt, false,
                         "first n=5 realization of degree sequence {3,3,3,3,4} violating P5"};
    bool found = false;
    enumerate_graphs(5, false, [&](const Graph& g) {
        if (found) return;
        auto degrees = degree_sequence(g);
        std::sort(degrees.begin(), degrees.end());
        if (degrees != std::vector<NodeId>{3, 3, 3, 3, 4}) return;
        const double before = eval_value(g, MeasureId::Ngc);
        double after = 0.0;
        if (auto v = find_violating_node(g, MeasureId::Ngc, AxiomId::P5, before, after)) {
            entry.graph = g;
            entry.saturated_node = *v;
            found = true;
        }
    });
    if (!found) {
        // fall back to the plain realization; verification will flag it
        entry.graph = Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});
    }
    return entry;
}

std::vector<Counterexample> build_counterexamples() {
    auto g = [](NodeId n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); };
    std::vector<Counterexample> list;

    list.push_back({MeasureId::Abh, AxiomId::P4, g(4, {{0, 1}, {0, 2}}), std::nullopt, false,
                    "two edges sharing a node on four nodes score 1 with no saturated node"});
    list.push_back({MeasureId::Abh, AxiomId::P5,
                    g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {2, 3}, {3, 4}}), std::nullopt, false, ""});
    list.push_back({MeasureId::Abh, AxiomId::P6, g(5, {{0, 1}, {0, 2}}), std::nullopt, false,
                    "two edges sharing a node on five nodes"});
    list.push_back({MeasureId::Ecd, AxiomId::P4, one_edge_graph(6), std::nullopt, true,
                    "one-edge + isolated-node family: ECD = sqrt((n-2)/(n-1)) rises to 1, so the "
                    "supremum over saturation-free graphs is 1 at no finite n"});
    list.push_back({MeasureId::Ngc, AxiomId::P4, one_edge_graph(5), std::nullopt, false,
                    "one-edge graph with isolated nodes scores exactly 1"});
    list.push_back({MeasureId::Ecd, AxiomId::P5,
                    g(5, {{0, 3}, {0, 4}, {0, 2}, {1, 3}, {1, 2}, {1, 4}, {2, 3}, {3, 4}}),
                    std::nullopt, false, ""});
    list.push_back({MeasureId::Ecd, AxiomId::P6, g(5, {{0, 1}, {1, 2}, {2, 3}}), std::nullopt,
                    false, ""});
    list.push_back({MeasureId::Nbc, AxiomId::P6,
                    g(6, {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2}}), NodeId{3}, false,
                    "saturating node 3 drops NBC from 0.82 to 0.36"});
    list.push_back({MeasureId::Ncc, AxiomId::P6, g(5, {{0, 1}, {0, 2}, {0, 3}}), std::nullopt,
                    false, ""});
    list.push_back({MeasureId::Ndc, AxiomId::P6,
                    g(6, {{0, 1}, {0, 3}, {0, 4}, {0, 5}, {1, 2}}), NodeId{3}, false,
                    "saturating node 3 drops NDC from 0.7 to 0.6"});
    list.push_back({MeasureId::Nde, AxiomId::P5,
                    g(5, {{0, 3}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}), std::nullopt, false,
                    ""});
    list.push_back({MeasureId::Nde, AxiomId::P6, one_edge_graph(5), std::nullopt, false,
                    "five-node one-edge graph"});
    list.push_back({MeasureId::Ndv, AxiomId::P5,
                    g(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}}), std::nullopt,
                    false, "seven-node star plus one extra edge"});
    list.push_back({MeasureId::Ndv, AxiomId::P6, g(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}}),
                    std::nullopt, false, ""});
    list.push_back(ngc_p5_entry());
    list.push_back({MeasureId::Ngc, AxiomId::P6, one_edge_graph(5), std::nullopt, false,
                    "five-node one-edge graph"});
    list.push_back({MeasureId::Nht, AxiomId::P5,
                    g(5, {{0, 1}, {0, 3}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}),
                    std::nullopt, false, ""});
    list.push_back({MeasureId::Nht, AxiomId::P6, one_edge_graph(5), std::nullopt, false,
                    "five-node one-edge graph"});
    return list;
}

CounterexampleResult verify_one(const Counterexample& entry) {
    CounterexampleResult result{entry};
    if (entry.analytic) {
        // check the closed form against the implementation and its monotone
        // approach to 1 on growing exemplars
        bool ok = true;
        double previous = -1.0;
        for (NodeId n : {NodeId{6}, NodeId{60}, NodeId{600}}) {
            const double value = eval_value(one_edge_graph(n), entry.measure);
            ok = ok && std::fabs(value - ecd_pendant_family_value(n)) <= 1e-9 && value > previous;
            previous = value;
            if (n == 6) result.value_before = value;
            result.value_after = value;
        }
        result.confirmed = ok && previous > 0.999;
        result.detail = "closed-form family check at n=6,60,600";
        return result;
    }

    const double before = eval_value(entry.graph, entry.measure);
    result.value_before = before;
    switch (entry.axiom) {
        case AxiomId::P4: {
            result.value_after = before;
            result.confirmed =
                saturated_nodes_of(entry.graph).empty() && before >= 1.0 - kAxiomTolerance;
            break;
        }
        case AxiomId::P5:
        case AxiomId::P6: {
            if (entry.saturated_node) {
                const double after = eval_value(saturate(entry.graph, *entry.saturated_node),
                                                entry.measure);
                result.value_after = after;
                result.chosen_node = entry.saturated_node;
                result.confirmed = entry.axiom == AxiomId::P5
                                       ? after > before + kAxiomTolerance
                                       : after < before - kAxiomTolerance;
            } else {
                double after = 0.0;
                if (auto v = find_violating_node(entry.graph, entry.measure, entry.axiom, before,
                                                 after)) {
                    result.chosen_node = *v;
                    result.value_after = after;
                    result.confirmed = true;
                }
            }
            break;
        }
        default:
            result.detail = "unsupported axiom for counterexample verification";
    }
    if (!result.confirmed && result.detail.empty())
        result.detail = "documented violation did not reproduce";
    return result;
}

std::size_t table_column(AxiomId axiom) {
    switch (axiom) {
        case AxiomId::P1a:
        case AxiomId::P1b:
        case AxiomId::P1c: return 0;
        case AxiomId::P2: return 1;
        case AxiomId::P3: return 2;
        case AxiomId::P4: return 3;
        case AxiomId::P5: return 4;
        case AxiomId::P6: return 5;
    }
    throw std::invalid_argument("unknown axiom id");
}

}  // namespace

AxiomVerdict check_axiom(MeasureId measure, AxiomId axiom, const AxiomScope& scope) {
    if (scope.max_n < 3 || scope.max_n > 7)
        throw std::invalid_argument("axiom scope requires 3 <= max_n <= 7");

    AxiomVerdict verdict;
    verdict.measure = measure;
    verdict.axiom = axiom;

    switch (axiom) {
        case AxiomId::P1a:
        case AxiomId::P1b:
        case AxiomId::P1c:
        case AxiomId::P2: {
            const GridCell cell = check_boundary_family(measure, axiom, scope.max_n);
            verdict.violated = cell.violated;
            verdict.witness = cell.witness;
            verdict.scope = boundary_scope(axiom, scope.max_n);
            return verdict;
        }
        case AxiomId::P3:
        case AxiomId::P4:
        case AxiomId::P5:
        case AxiomId::P6: {
            const MeasureId only[] = {measure};
            EnumerationResult result =
                enumerate_axioms(only, scope, axiom == AxiomId::P3, axiom == AxiomId::P4,
                                 axiom == AxiomId::P5, axiom == AxiomId::P6);
            const GridCell& cell = result.at(measure, axiom);
            verdict.violated = cell.violated;
            verdict.witness = cell.witness;
            verdict.scope = enumeration_scope(axiom, scope);
            return verdict;
        }
    }
    throw std::invalid_argument("unknown axiom id");
}

const std::vector<Counterexample>& documented_counterexamples() {
    static const std::vector<Counterexample> list = build_counterexamples();
    return list;
}

std::vector<CounterexampleResult> verify_documented_counterexamples() {
    std::vector<CounterexampleResult> results;
    for (const auto& entry : documented_counterexamples()) results.push_back(verify_one(entry));
    return results;
}

ComplianceTable compliance_table(const AxiomScope& scope) {
    if (scope.max_n < 3 || scope.max_n > 7)
        throw std::invalid_argument("axiom scope requires 3 <= max_n <= 7");

    ComplianceTable table;

    // boundary families, fixed bound so small-n violations beyond the
    // enumeration scope (NDV needs the 7-node star) are reached
    for (MeasureId measure : kAllMeasures) {
        const std::size_t row = measure_index(measure);

        AxiomVerdict p1{measure, AxiomId::P1a, false, std::nullopt, {}};
        for (AxiomId part : {AxiomId::P1a, AxiomId::P1b, AxiomId::P1c}) {
            const GridCell cell = check_boundary_family(measure, part, kBoundaryN);
            if (cell.violated && !p1.violated) {
                p1.axiom = part;
                p1.violated = true;
                p1.witness = cell.witness;
            }
        }
        p1.scope = "single-node, complete and empty graphs n<=" + std::to_string(kBoundaryN);
        if (p1.violated) p1.scope += " (violated: " + std::string(axiom_name(p1.axiom)) + ")";
        table.cells[row][0] = std::move(p1);

        const GridCell p2 = check_boundary_family(measure, AxiomId::P2, kBoundaryN);
        table.cells[row][1] = AxiomVerdict{measure, AxiomId::P2, p2.violated, p2.witness,
                                           boundary_scope(AxiomId::P2, kBoundaryN)};
    }

    // one fused enumeration pass covers P3-P6 for all measures
    EnumerationResult enumerated = enumerate_axioms(kAllMeasures, scope, true, true, true, true);
    for (MeasureId measure : kAllMeasures) {
        const std::size_t row = measure_index(measure);
        for (AxiomId axiom : {AxiomId::P3, AxiomId::P4, AxiomId::P5, AxiomId::P6}) {
            const GridCell& cell = enumerated.at(measure, axiom);
            table.cells[row][table_column(axiom)] =
                AxiomVerdict{measure, axiom, cell.violated, cell.witness,
                             enumeration_scope(axiom, scope)};
        }
    }

    // merge the documented counterexamples (covers witnesses outside the
    // enumeration bound and the analytic ECD-P4 family)
    for (const auto& result : verify_documented_counterexamples()) {
        if (!result.confirmed) continue;
        AxiomVerdict& cell =
            table.cells[measure_index(result.entry.measure)][table_column(result.entry.axiom)];
        if (cell.violated) continue;
        cell.violated = true;
        cell.witness = Witness{result.entry.graph, result.chosen_node, result.value_before,
                               result.value_after};
        cell.scope += result.entry.analytic ? "; analytic family (see counterexample report)"
                                            : "; documented counterexample";
    }

    for (std::size_t row = 0; row < table.cells.size(); ++row) {
        int satisfied = 0;
        for (const auto& cell : table.cells[row])
            if (!cell.violated) ++satisfied;
        table.satisfied_counts[row] = satisfied;
    }
    return table;
}

}  // namespace centra
