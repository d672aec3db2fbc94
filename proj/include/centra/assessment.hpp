#pragma once

#include <vector>

#include "centra/axioms.hpp"
#include "centra/generate.hpp"
#include "centra/measures.hpp"

namespace centra {

struct SweepPoint {
    NodeId n = 0;
    double value = 0.0;
};

struct SweepSeries {
    MeasureId measure{};
    Topology topology{};
    std::vector<SweepPoint> points;  // n strictly increasing
};

/// Default sweep grid: n = 5, 10, ..., 100.
std::vector<NodeId> default_sweep_sizes();

/// Evaluates every (measure, topology, n) combination; series come back in
/// (measure, topology) request order.
std::vector<SweepSeries> sweep(std::span<const MeasureId> measures,
                               std::span<const Topology> topologies,
                               std::span<const NodeId> n_values, std::uint64_t seed = 42);

/// Pinned formalization of the expected-behavior judgment.
///
/// Unperturbed topologies use the exact-boundary rule: every sampled value
/// equals the boundary (star 1, ring/complete 0) within boundary_tol.
/// Perturbed topologies use the converging-limit rule toward star 1 /
/// ring 0 / complete 0: with gap(n) = |value - limit|, a series passes when
/// it is already at the limit (gap(n_max) < gap_floor_exempt) or when the
/// gap is non-increasing from trend_start_n on, has at least halved
/// (gap(n_max) <= shrink_factor * gap at the first sampled n >=
/// trend_start_n), and is not flat.
struct ClassifierParams {
    NodeId trend_start_n = 10;
    double shrink_factor = 0.5;
    double gap_floor_exempt = 1e-3;
    double boundary_tol = 1e-9;
    double flat_tol = 1e-9;
};

struct BehaviorVerdict {
    MeasureId measure{};
    Topology topology{};
    bool passed = false;
    bool exact_boundary_rule = false;  // which rule applied
    double limit = 0.0;
    double first_gap = 0.0;  // at the trend reference n
    double last_gap = 0.0;   // at n_max
};

BehaviorVerdict classify_behavior(const SweepSeries& series, const ClassifierParams& params = {});

/// Full behavior pass matrix; rows follow kAllMeasures, columns follow
/// kAllTopologies.
struct NumericalTable {
    std::array<std::array<BehaviorVerdict, 6>, 11> cells;
    std::array<int, 11> pass_counts{};
};

/// Requires the full 66-verdict grid.
NumericalTable numerical_table(const std::vector<BehaviorVerdict>& verdicts);

/// Convenience: sweep all measures over all topologies and classify.
NumericalTable run_numerical_assessment(std::span<const NodeId> n_values, std::uint64_t seed = 42,
                                        const ClassifierParams& params = {});

/// w_axiomatic * s_axiomatic + w_numerical * s_numerical; weights must be
/// nonnegative and sum to 1, scores must lie in 0..6.
double total_score(int s_axiomatic, int s_numerical, double w_axiomatic, double w_numerical);

struct ScoreRow {
    MeasureId measure{};
    int axiomatic_score = 0;
    int numerical_score = 0;
    double w_axiomatic = 0.5;
    double w_numerical = 0.5;
    double total = 0.0;
};

std::vector<ScoreRow> score_table(const ComplianceTable& axioms, const NumericalTable& numerical,
                                  double w_axiomatic, double w_numerical);

}  // namespace centra
