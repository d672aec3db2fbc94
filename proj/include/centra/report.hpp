#pragma once

#include <string>

#include "centra/assessment.hpp"
#include "centra/axioms.hpp"

namespace centra {

/// CSV cells use 6 significant digits; JSON carries full round-trip
/// precision. Both formats hold the same run's values.
std::string format_csv_value(double value);

std::string sweep_csv(const std::vector<SweepSeries>& series);
std::string sweep_json(const std::vector<SweepSeries>& series);

std::string compliance_csv(const ComplianceTable& table);
std::string compliance_json(const ComplianceTable& table);

/// Per-cell verdict log: measure,axiom,status,scope,witness_edges.
std::string witness_csv(const ComplianceTable& table);
std::string witness_json(const ComplianceTable& table);

std::string counterexample_csv(const std::vector<CounterexampleResult>& results);
std::string counterexample_json(const std::vector<CounterexampleResult>& results);

std::string behavior_csv(const NumericalTable& table, const ClassifierParams& params);
std::string behavior_json(const NumericalTable& table, const ClassifierParams& params);

std::string score_csv(const std::vector<ScoreRow>& rows);
std::string score_json(const std::vector<ScoreRow>& rows);

}  // namespace centra
