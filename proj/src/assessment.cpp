#include "centra/assessment.hpp"

#include <algorithm>
#include <cmath>

namespace centra {

std::vector<NodeId> default_sweep_sizes() {
    std::vector<NodeId> sizes;
    for (NodeId n = 5; n <= 100; n += 5) sizes.push_back(n);
    return sizes;
}

std::vector<SweepSeries> sweep(std::span<const MeasureId> measures,
                               std::span<const Topology> topologies,
                               std::span<const NodeId> n_values, std::uint64_t seed) {
    for (std::size_t i = 1; i < n_values.size(); ++i)
        if (n_values[i] <= n_values[i - 1])
            throw std::invalid_argument("sweep sizes must be strictly increasing");

    std::vector<SweepSeries> all;
    all.reserve(measures.size() * topologies.size());
    for (MeasureId measure : measures) {
        for (Topology topology : topologies) {
            SweepSeries series{measure, topology, {}};
            series.points.reserve(n_values.size());
            for (NodeId n : n_values) {
                const Graph g = generate(topology, n, seed);
                series.points.push_back({n, evaluate(g, measure).value});
            }
            all.push_back(std::move(series));
        }
    }
    return all;
}

namespace {

double topology_limit(Topology t) {
    switch (t) {
        case Topology::Star:
        case Topology::StarPerturbed: return 1.0;
        default: return 0.0;
    }
}

bool is_perturbed(Topology t) {
    return t == Topology::StarPerturbed || t == Topology::RingPerturbed ||
           t == Topology::CompletePerturbed;
}

}  // namespace

BehaviorVerdict classify_behavior(const SweepSeries& series, const ClassifierParams& params) {
    if (series.points.size() < 5 || series.points.front().n > 10 || series.points.back().n < 100)
        throw std::invalid_argument(
            "behavior classification needs >= 5 points spanning n <= 10 to n >= 100");

    BehaviorVerdict verdict;
    verdict.measure = series.measure;
    verdict.topology = series.topology;
    verdict.limit = topology_limit(series.topology);
    verdict.exact_boundary_rule = !is_perturbed(series.topology);

    if (verdict.exact_boundary_rule) {
        verdict.passed = std::all_of(series.points.begin(), series.points.end(), [&](const SweepPoint& p) {
            return std::fabs(p.value - verdict.limit) <= params.boundary_tol;
        });
        verdict.first_gap = std::fabs(series.points.front().value - verdict.limit);
        verdict.last_gap = std::fabs(series.points.back().value - verdict.limit);
        return verdict;
    }

    // converging-limit rule on the trailing points (n >= trend_start_n)
    std::vector<double> gaps;
    for (const auto& p : series.points)
        if (p.n >= params.trend_start_n) gaps.push_back(std::fabs(p.value - verdict.limit));
    verdict.first_gap = gaps.front();
    verdict.last_gap = gaps.back();

    if (verdict.last_gap < params.gap_floor_exempt) {
        verdict.passed = true;  // already at the limit
        return verdict;
    }
    bool non_increasing = true;
    for (std::size_t i = 1; i < gaps.size(); ++i)
        non_increasing = non_increasing && gaps[i] <= gaps[i - 1] + 1e-12;
    const bool halved = verdict.last_gap <= params.shrink_factor * verdict.first_gap;
    const bool flat = verdict.first_gap - verdict.last_gap <= params.flat_tol;
    verdict.passed = non_increasing && halved && !flat;
    return verdict;
}

NumericalTable numerical_table(const std::vector<BehaviorVerdict>& verdicts) {
    if (verdicts.size() != 66)
        throw std::invalid_argument("numerical table needs all 66 verdicts");
    NumericalTable table;
    std::array<std::array<bool, 6>, 11> seen{};
    for (const auto& v : verdicts) {
        const std::size_t row = measure_index(v.measure);
        const std::size_t col = static_cast<std::size_t>(v.topology);
        if (seen[row][col]) throw std::invalid_argument("duplicate verdict in numerical table");
        seen[row][col] = true;
        table.cells[row][col] = v;
    }
    for (std::size_t row = 0; row < table.cells.size(); ++row) {
        int passed = 0;
        for (const auto& cell : table.cells[row])
            if (cell.passed) ++passed;
        table.pass_counts[row] = passed;
    }
    return table;
}

NumericalTable run_numerical_assessment(std::span<const NodeId> n_values, std::uint64_t seed,
                                        const ClassifierParams& params) {
    const auto series = sweep(kAllMeasures, kAllTopologies, n_values, seed);
    std::vector<BehaviorVerdict> verdicts;
    verdicts.reserve(series.size());
    for (const auto& s : series) verdicts.push_back(classify_behavior(s, params));
    return numerical_table(verdicts);
}

double total_score(int s_axiomatic, int s_numerical, double w_axiomatic, double w_numerical) {
    if (w_axiomatic < 0.0 || w_numerical < 0.0 ||
        std::fabs(w_axiomatic + w_numerical - 1.0) > 1e-12)
        throw std::invalid_argument("weights must be nonnegative and sum to 1");
    if (s_axiomatic < 0 || s_axiomatic > 6 || s_numerical < 0 || s_numerical > 6)
        throw std::invalid_argument("scores must lie in 0..6");
    return w_axiomatic * s_axiomatic + w_numerical * s_numerical;
}

std::vector<ScoreRow> score_table(const ComplianceTable& axioms, const NumericalTable& numerical,
                                  double w_axiomatic, double w_numerical) {
    std::vector<ScoreRow> rows;
    rows.reserve(kAllMeasures.size());
    for (MeasureId measure : kAllMeasures) {
        const std::size_t row = measure_index(measure);
        ScoreRow score{measure, axioms.satisfied_counts[row], numerical.pass_counts[row],
                       w_axiomatic, w_numerical, 0.0};
        score.total = total_score(score.axiomatic_score, score.numerical_score, w_axiomatic,
                                  w_numerical);
        rows.push_back(score);
    }
    return rows;
}

}  // namespace centra
