#include "centra/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace centra {

namespace {

using nlohmann::json;

std::string edges_field(const Graph& g) {
    std::string out;
    for (const auto& e : g.edges()) {
        if (!out.empty()) out += ';';
        out += std::to_string(e.u) + "-" + std::to_string(e.v);
    }
    return out;
}

json witness_json_object(const Witness& w) {
    json j;
    j["n"] = w.graph.node_count();
    json edges = json::array();
    for (const auto& e : w.graph.edges()) edges.push_back({e.u, e.v});
    j["edges"] = edges;
    if (w.saturated_node) j["saturated_node"] = *w.saturated_node;
    j["value_before"] = w.value_before;
    j["value_after"] = w.value_after;
    return j;
}

constexpr const char* kAxiomColumns[] = {"P1", "P2", "P3", "P4", "P5", "P6"};

}  // namespace

std::string format_csv_value(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

std::string sweep_csv(const std::vector<SweepSeries>& series) {
    std::string out = "measure,topology,n,value\n";
    for (const auto& s : series)
        for (const auto& p : s.points)
            out += std::string(measure_name(s.measure)) + "," +
                   std::string(topology_name(s.topology)) + "," + std::to_string(p.n) + "," +
                   format_csv_value(p.value) + "\n";
    return out;
}

std::string sweep_json(const std::vector<SweepSeries>& series) {
    json rows = json::array();
    for (const auto& s : series)
        for (const auto& p : s.points)
            rows.push_back({{"measure", measure_name(s.measure)},
                            {"topology", topology_name(s.topology)},
                            {"n", p.n},
                            {"value", p.value}});
    return json{{"sweep", rows}}.dump(2) + "\n";
}

std::string compliance_csv(const ComplianceTable& table) {
    std::string out = "measure,P1,P2,P3,P4,P5,P6,satisfied\n";
    for (MeasureId measure : kAllMeasures) {
        const std::size_t row = measure_index(measure);
        out += measure_name(measure);
        for (const auto& cell : table.cells[row]) out += cell.violated ? ",0" : ",1";
        out += "," + std::to_string(table.satisfied_counts[row]) + "\n";
    }
    return out;
}

std::string compliance_json(const ComplianceTable& table) {
    json rows = json::array();
    for (MeasureId measure : kAllMeasures) {
        const std::size_t row = measure_index(measure);
        json r{{"measure", measure_name(measure)},
               {"satisfied", table.satisfied_counts[row]}};
        for (std::size_t col = 0; col < ComplianceTable::kColumns; ++col)
            r[kAxiomColumns[col]] = !table.cells[row][col].violated;
        rows.push_back(std::move(r));
    }
    return json{{"axioms", rows}}.dump(2) + "\n";
}

std::string witness_csv(const ComplianceTable& table) {
    std::string out = "measure,axiom,status,scope,witness_edges\n";
    for (MeasureId measure : kAllMeasures) {
        const std::size_t row = measure_index(measure);
        for (std::size_t col = 0; col < ComplianceTable::kColumns; ++col) {
            const AxiomVerdict& cell = table.cells[row][col];
            out += std::string(measure_name(measure)) + "," + kAxiomColumns[col] + "," +
                   (cell.violated ? "violated" : "satisfied-in-scope") + ",\"" + cell.scope +
                   "\",";
            if (cell.witness) out += edges_field(cell.witness->graph);
            out += "\n";
        }
    }
    return out;
}

std::string witness_json(const ComplianceTable& table) {
    json rows = json::array();
    for (MeasureId measure : kAllMeasures) {
        const std::size_t row = measure_index(measure);
        for (std::size_t col = 0; col < ComplianceTable::kColumns; ++col) {
            const AxiomVerdict& cell = table.cells[row][col];
            json r{{"measure", measure_name(measure)},
                   {"axiom", kAxiomColumns[col]},
                   {"status", cell.violated ? "violated" : "satisfied-in-scope"},
                   {"scope", cell.scope}};
            if (cell.witness) r["witness"] = witness_json_object(*cell.witness);
            rows.push_back(std::move(r));
        }
    }
    return json{{"verdicts", rows}}.dump(2) + "\n";
}

std::string counterexample_csv(const std::vector<CounterexampleResult>& results) {
    std::string out = "measure,axiom,confirmed,value_before,value_after,node,witness_edges\n";
    for (const auto& r : results) {
        out += std::string(measure_name(r.entry.measure)) + "," +
               std::string(axiom_name(r.entry.axiom)) + "," + (r.confirmed ? "1" : "0") + "," +
               format_csv_value(r.value_before) + "," + format_csv_value(r.value_after) + ",";
        if (r.chosen_node) out += std::to_string(*r.chosen_node);
        out += "," + edges_field(r.entry.graph) + "\n";
    }
    return out;
}

std::string counterexample_json(const std::vector<CounterexampleResult>& results) {
    json rows = json::array();
    for (const auto& r : results) {
        json entry{{"measure", measure_name(r.entry.measure)},
                   {"axiom", axiom_name(r.entry.axiom)},
                   {"confirmed", r.confirmed},
                   {"analytic", r.entry.analytic},
                   {"value_before", r.value_before},
                   {"value_after", r.value_after},
                   {"note", r.entry.note},
                   {"detail", r.detail}};
        json edges = json::array();
        for (const auto& e : r.entry.graph.edges()) edges.push_back({e.u, e.v});
        entry["n"] = r.entry.graph.node_count();
        entry["edges"] = edges;
        if (r.chosen_node) entry["node"] = *r.chosen_node;
        rows.push_back(std::move(entry));
    }
    return json{{"counterexamples", rows}}.dump(2) + "\n";
}

std::string behavior_csv(const NumericalTable& table, const ClassifierParams& params) {
    std::string out = "# classifier: trend_start_n=" + std::to_string(params.trend_start_n) +
                      " shrink_factor=" + format_csv_value(params.shrink_factor) +
                      " gap_floor_exempt=" + format_csv_value(params.gap_floor_exempt) +
                      " boundary_tol=" + format_csv_value(params.boundary_tol) + "\n";
    out += "measure";
    for (Topology t : kAllTopologies) out += "," + std::string(topology_name(t));
    out += ",passed\n";
    for (MeasureId measure : kAllMeasures) {
        const std::size_t row = measure_index(measure);
        out += measure_name(measure);
        for (const auto& cell : table.cells[row]) out += cell.passed ? ",1" : ",0";
        out += "," + std::to_string(table.pass_counts[row]) + "\n";
    }
    return out;
}

std::string behavior_json(const NumericalTable& table, const ClassifierParams& params) {
    json rows = json::array();
    for (MeasureId measure : kAllMeasures) {
        const std::size_t row = measure_index(measure);
        json r{{"measure", measure_name(measure)}, {"passed", table.pass_counts[row]}};
        for (Topology t : kAllTopologies) {
            const auto& cell = table.cells[row][static_cast<std::size_t>(t)];
            r[std::string(topology_name(t))] = {{"passed", cell.passed},
                                                {"limit", cell.limit},
                                                {"first_gap", cell.first_gap},
                                                {"last_gap", cell.last_gap}};
        }
        rows.push_back(std::move(r));
    }
    json params_json{{"trend_start_n", params.trend_start_n},
                     {"shrink_factor", params.shrink_factor},
                     {"gap_floor_exempt", params.gap_floor_exempt},
                     {"boundary_tol", params.boundary_tol}};
    return json{{"classifier", params_json}, {"behavior", rows}}.dump(2) + "\n";
}

std::string score_csv(const std::vector<ScoreRow>& rows) {
    std::string out = "measure,S_A,S_N,w_A,w_N,total\n";
    for (const auto& r : rows)
        out += std::string(measure_name(r.measure)) + "," + std::to_string(r.axiomatic_score) +
               "," + std::to_string(r.numerical_score) + "," + format_csv_value(r.w_axiomatic) +
               "," + format_csv_value(r.w_numerical) + "," + format_csv_value(r.total) + "\n";
    return out;
}

std::string score_json(const std::vector<ScoreRow>& rows) {
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({{"measure", measure_name(r.measure)},
                       {"S_A", r.axiomatic_score},
                       {"S_N", r.numerical_score},
                       {"w_A", r.w_axiomatic},
                       {"w_N", r.w_numerical},
                       {"total", r.total}});
    return json{{"scores", out}}.dump(2) + "\n";
}

}  // namespace centra
