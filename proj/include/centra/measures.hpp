#pragma once

#include <array>
#include <span>
#include <string_view>

#include "centra/graph.hpp"

namespace centra {

/// The 11 normalized centralization measures.
enum class MeasureId {
    Abh,  // assortativity-based hubness
    Ecd,  // eigenvector centrality dispersion
    Nbc,  // normalized betweenness centralization
    Ncc,  // normalized closeness centralization
    Ndc,  // normalized degree centralization
    Nde,  // normalized degree entropy
    Ndv,  // normalized degree variance
    Ngc,  // normalized Gini coefficient
    Nhd,  // normalized hub dominance
    Nht,  // normalized hub formation tendency
    Nnc,  // normalized natural connectivity
};

inline constexpr std::array<MeasureId, 11> kAllMeasures = {
    MeasureId::Abh, MeasureId::Ecd, MeasureId::Nbc, MeasureId::Ncc,
    MeasureId::Ndc, MeasureId::Nde, MeasureId::Ndv, MeasureId::Ngc,
    MeasureId::Nhd, MeasureId::Nht, MeasureId::Nnc,
};

std::string_view measure_name(MeasureId id);
MeasureId parse_measure(std::string_view name);
std::size_t measure_index(MeasureId id);

/// One evaluated measure. `degenerate` flags the small-n / zero-m
/// conventions that define the value as 0 without running the formula.
struct MeasureResult {
    MeasureId measure;
    double value = 0.0;
    bool degenerate = false;
};

/// Every measure is total on all graphs and returns a value in [0, 1].
/// Values are checked against a 1e-9 excursion tolerance and then clamped;
/// excursions beyond that raise an internal error.
MeasureResult abh(const Graph& g);
MeasureResult ecd(const Graph& g);
MeasureResult nbc(const Graph& g);
MeasureResult ncc(const Graph& g);
MeasureResult ndc(const Graph& g);
MeasureResult nde(const Graph& g);
MeasureResult ndv(const Graph& g);
MeasureResult ngc(const Graph& g);
MeasureResult nhd(const Graph& g);
MeasureResult nht(const Graph& g);
MeasureResult nnc(const Graph& g);

MeasureResult evaluate(const Graph& g, MeasureId id);

/// Evaluates the requested measures in request order, sharing the expensive
/// intermediates (centrality vectors, spectrum) across them. Identical to
/// calling each measure individually.
std::vector<MeasureResult> evaluate_all(const Graph& g, std::span<const MeasureId> measures = kAllMeasures);

/// Closed-form pieces of the NDV normalizer, scaled by n^2 (both are
/// integers): star term (n-1)(n-2)^2 and two-hub term (2n^3-6n)-(4n-6)^2.
std::int64_t ndv_star_term(NodeId n);
std::int64_t ndv_two_hub_term(NodeId n);

}  // namespace centra
