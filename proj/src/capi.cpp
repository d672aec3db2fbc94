#include "centralization.h"

#include <cstring>
#include <string>

#include "centra/assessment.hpp"
#include "centra/axioms.hpp"
#include "centra/edge_list.hpp"
#include "centra/generate.hpp"
#include "centra/measures.hpp"
#include "centra/report.hpp"

struct centra_graph {
    centra::Graph graph;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

centra_status fail(centra_status status, const std::string& message) {
    set_error(message);
    return status;
}

/// Runs fn, translating exceptions into status codes.
template <typename Fn>
centra_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const centra::ParseError& e) {
        return fail(CENTRA_ERR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(CENTRA_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::logic_error& e) {
        return fail(CENTRA_ERR_INTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(CENTRA_ERR_IO, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::optional<centra::NodeId> optional_n(int64_t explicit_n) {
    if (explicit_n < 0) return std::nullopt;
    return explicit_n;
}

centra_status require(bool condition, const char* message) {
    return condition ? CENTRA_OK : fail(CENTRA_ERR_INVALID_ARGUMENT, message);
}

std::vector<centra::MeasureId> parse_measure_list(const char* csv) {
    std::vector<centra::MeasureId> measures;
    if (csv == nullptr || std::string_view(csv).empty() || std::string_view(csv) == "all") {
        measures.assign(centra::kAllMeasures.begin(), centra::kAllMeasures.end());
        return measures;
    }
    std::string_view rest(csv);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view token = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        measures.push_back(centra::parse_measure(token));
    }
    return measures;
}

std::vector<centra::Topology> parse_topology_list(const char* csv) {
    std::vector<centra::Topology> topologies;
    if (csv == nullptr || std::string_view(csv).empty() || std::string_view(csv) == "all") {
        topologies.assign(std::begin(centra::kAllTopologies), std::end(centra::kAllTopologies));
        return topologies;
    }
    std::string_view rest(csv);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view token = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        topologies.push_back(centra::parse_topology(token));
    }
    return topologies;
}

std::vector<centra::NodeId> size_range(int64_t start, int64_t stop, int64_t step) {
    if (step <= 0) throw std::invalid_argument("size step must be positive");
    if (stop < start) throw std::invalid_argument("size range is empty");
    std::vector<centra::NodeId> sizes;
    for (int64_t n = start; n <= stop; n += step) sizes.push_back(n);
    return sizes;
}

bool want_json(const char* format) {
    const std::string_view f = format == nullptr ? "csv" : format;
    if (f == "json") return true;
    if (f == "csv" || f.empty()) return false;
    throw std::invalid_argument("format must be 'csv' or 'json'");
}

}  // namespace

extern "C" {

const char* centra_status_name(centra_status status) {
    switch (status) {
        case CENTRA_OK: return "ok";
        case CENTRA_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case CENTRA_ERR_PARSE: return "parse-error";
        case CENTRA_ERR_IO: return "io-error";
        case CENTRA_ERR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* centra_last_error(void) { return g_last_error.c_str(); }

const char* centra_version(void) { return "1.0.0"; }

centra_status centra_graph_from_edge_list_text(const char* text, int64_t explicit_n,
                                               centra_graph** out) {
    if (auto s = require(text && out, "text and out must be non-null"); s != CENTRA_OK) return s;
    return guarded([&] {
        *out = new centra_graph{centra::from_edge_list(text, optional_n(explicit_n))};
        return CENTRA_OK;
    });
}

centra_status centra_graph_from_edge_list_file(const char* path, int64_t explicit_n,
                                               centra_graph** out) {
    if (auto s = require(path && out, "path and out must be non-null"); s != CENTRA_OK) return s;
    return guarded([&] {
        *out = new centra_graph{centra::from_edge_list_file(path, optional_n(explicit_n))};
        return CENTRA_OK;
    });
}

centra_status centra_graph_generate(const char* topology, int64_t n, uint64_t seed,
                                    centra_graph** out) {
    if (auto s = require(topology && out, "topology and out must be non-null"); s != CENTRA_OK)
        return s;
    return guarded([&] {
        *out = new centra_graph{centra::generate(centra::parse_topology(topology), n, seed)};
        return CENTRA_OK;
    });
}

centra_status centra_graph_saturate(const centra_graph* g, int64_t node, centra_graph** out) {
    if (auto s = require(g && out, "graph and out must be non-null"); s != CENTRA_OK) return s;
    return guarded([&] {
        *out = new centra_graph{centra::saturate(g->graph, node)};
        return CENTRA_OK;
    });
}

centra_status centra_graph_largest_component(const centra_graph* g, centra_graph** out) {
    if (auto s = require(g && out, "graph and out must be non-null"); s != CENTRA_OK) return s;
    return guarded([&] {
        *out = new centra_graph{centra::largest_component(g->graph)};
        return CENTRA_OK;
    });
}

void centra_graph_free(centra_graph* g) { delete g; }

int64_t centra_graph_node_count(const centra_graph* g) { return g ? g->graph.node_count() : -1; }

int64_t centra_graph_edge_count(const centra_graph* g) { return g ? g->graph.edge_count() : -1; }

int centra_graph_is_connected(const centra_graph* g) {
    return g != nullptr && centra::is_connected(g->graph) ? 1 : 0;
}

centra_status centra_graph_edges(const centra_graph* g, int64_t* u_out, int64_t* v_out,
                                 int64_t capacity, int64_t* written) {
    if (auto s = require(g && u_out && v_out && written, "all out pointers must be non-null");
        s != CENTRA_OK)
        return s;
    const auto edges = g->graph.edges();
    const int64_t count = std::min<int64_t>(capacity, static_cast<int64_t>(edges.size()));
    for (int64_t i = 0; i < count; ++i) {
        u_out[i] = edges[static_cast<std::size_t>(i)].u;
        v_out[i] = edges[static_cast<std::size_t>(i)].v;
    }
    *written = count;
    return CENTRA_OK;
}

centra_status centra_graph_to_edge_list_text(const centra_graph* g, char** out_text) {
    if (auto s = require(g && out_text, "graph and out must be non-null"); s != CENTRA_OK)
        return s;
    return guarded([&] {
        *out_text = copy_string(centra::to_edge_list(g->graph));
        return CENTRA_OK;
    });
}

centra_status centra_graph_to_edge_list_file(const centra_graph* g, const char* path) {
    if (auto s = require(g && path, "graph and path must be non-null"); s != CENTRA_OK) return s;
    return guarded([&] {
        centra::write_edge_list_file(g->graph, path);
        return CENTRA_OK;
    });
}

int centra_measure_count(void) { return static_cast<int>(centra::kAllMeasures.size()); }

const char* centra_measure_name(int index) {
    if (index < 0 || index >= centra_measure_count()) return nullptr;
    return centra::measure_name(centra::kAllMeasures[static_cast<std::size_t>(index)]).data();
}

centra_status centra_measure_id(const char* name, int* out_index) {
    if (auto s = require(name && out_index, "name and out must be non-null"); s != CENTRA_OK)
        return s;
    return guarded([&] {
        *out_index = static_cast<int>(centra::measure_index(centra::parse_measure(name)));
        return CENTRA_OK;
    });
}

centra_status centra_evaluate(const centra_graph* g, int measure, double* value,
                              int* degenerate) {
    if (auto s = require(g && value, "graph and value must be non-null"); s != CENTRA_OK)
        return s;
    if (auto s = require(measure >= 0 && measure < centra_measure_count(),
                         "measure index out of range");
        s != CENTRA_OK)
        return s;
    return guarded([&] {
        const centra::MeasureResult result =
            centra::evaluate(g->graph, centra::kAllMeasures[static_cast<std::size_t>(measure)]);
        *value = result.value;
        if (degenerate) *degenerate = result.degenerate ? 1 : 0;
        return CENTRA_OK;
    });
}

centra_status centra_sweep_report(const char* measures_csv, const char* topologies_csv,
                                  int64_t n_start, int64_t n_stop, int64_t n_step, uint64_t seed,
                                  const char* format, char** out) {
    if (auto s = require(out != nullptr, "out must be non-null"); s != CENTRA_OK) return s;
    return guarded([&] {
        const auto measures = parse_measure_list(measures_csv);
        const auto topologies = parse_topology_list(topologies_csv);
        const auto sizes = size_range(n_start, n_stop, n_step);
        const auto series = centra::sweep(measures, topologies, sizes, seed);
        *out = copy_string(want_json(format) ? centra::sweep_json(series)
                                             : centra::sweep_csv(series));
        return CENTRA_OK;
    });
}

centra_status centra_axioms_report(int64_t max_enum_n, int64_t permutations, uint64_t seed,
                                   const char* format, char** out_table, char** out_witnesses,
                                   char** out_counterexamples) {
    return guarded([&] {
        const bool json = want_json(format);
        const centra::AxiomScope scope{max_enum_n, static_cast<int>(permutations), seed};
        const centra::ComplianceTable table = centra::compliance_table(scope);
        if (out_table)
            *out_table = copy_string(json ? centra::compliance_json(table)
                                          : centra::compliance_csv(table));
        if (out_witnesses)
            *out_witnesses =
                copy_string(json ? centra::witness_json(table) : centra::witness_csv(table));
        if (out_counterexamples) {
            const auto results = centra::verify_documented_counterexamples();
            *out_counterexamples = copy_string(json ? centra::counterexample_json(results)
                                                    : centra::counterexample_csv(results));
        }
        return CENTRA_OK;
    });
}

centra_status centra_behavior_report(int64_t n_start, int64_t n_stop, int64_t n_step,
                                     uint64_t seed, const char* format, char** out) {
    if (auto s = require(out != nullptr, "out must be non-null"); s != CENTRA_OK) return s;
    return guarded([&] {
        const auto sizes = size_range(n_start, n_stop, n_step);
        const centra::ClassifierParams params;
        const centra::NumericalTable table =
            centra::run_numerical_assessment(sizes, seed, params);
        *out = copy_string(want_json(format) ? centra::behavior_json(table, params)
                                             : centra::behavior_csv(table, params));
        return CENTRA_OK;
    });
}

centra_status centra_score_report(double w_axiomatic, double w_numerical, int64_t max_enum_n,
                                  int64_t permutations, int64_t n_start, int64_t n_stop,
                                  int64_t n_step, uint64_t seed, const char* format, char** out) {
    if (auto s = require(out != nullptr, "out must be non-null"); s != CENTRA_OK) return s;
    return guarded([&] {
        const bool json = want_json(format);
        const centra::AxiomScope scope{max_enum_n, static_cast<int>(permutations), seed};
        const centra::ComplianceTable axioms = centra::compliance_table(scope);
        const auto sizes = size_range(n_start, n_stop, n_step);
        const centra::NumericalTable numerical = centra::run_numerical_assessment(sizes, seed);
        const auto rows = centra::score_table(axioms, numerical, w_axiomatic, w_numerical);
        *out = copy_string(json ? centra::score_json(rows) : centra::score_csv(rows));
        return CENTRA_OK;
    });
}

void centra_string_free(char* s) { delete[] s; }

}  // extern "C"
