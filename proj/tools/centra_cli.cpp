// centra: command-line front end for the centralization analytics library.
// Talks to the core exclusively through the C API in centralization.h.

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "centralization.h"

namespace {

using nlohmann::json;

struct CliError {
    int code;
    std::string message;
};

void check(centra_status status) {
    if (status != CENTRA_OK)
        throw CliError{static_cast<int>(status), std::string(centra_status_name(status)) + ": " +
                                                     centra_last_error()};
}

/// Owns a centra_graph handle.
struct GraphHandle {
    centra_graph* ptr = nullptr;
    GraphHandle() = default;
    explicit GraphHandle(centra_graph* p) : ptr(p) {}
    GraphHandle(const GraphHandle&) = delete;
    GraphHandle& operator=(const GraphHandle&) = delete;
    GraphHandle(GraphHandle&& other) noexcept : ptr(other.ptr) { other.ptr = nullptr; }
    GraphHandle& operator=(GraphHandle&& other) noexcept {
        std::swap(ptr, other.ptr);
        return *this;
    }
    ~GraphHandle() { centra_graph_free(ptr); }
};

/// Owns a string returned by the C API.
struct ApiString {
    char* ptr = nullptr;
    ~ApiString() { centra_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

std::string timestamp_utc() {
    char buffer[32];
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

std::string format_value(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6g", value);
    return buffer;
}

void write_output(const std::string& content, const std::string& path) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{1, "cannot open '" + path + "' for writing"};
    out << content;
    if (!out) throw CliError{1, "failed writing '" + path + "'"};
}

/// Prepends the run timestamp: comment line for CSV, "generated" key for JSON.
std::string stamp(const std::string& artifact, bool is_json, bool no_timestamp) {
    if (no_timestamp) return artifact;
    if (!is_json) return "# generated: " + timestamp_utc() + "\n" + artifact;
    json j = json::parse(artifact);
    j["generated"] = timestamp_utc();
    return j.dump(2) + "\n";
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const auto comma = csv.find(',', pos);
        out.push_back(csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

struct SizeRange {
    int64_t start = 5;
    int64_t stop = 100;
    int64_t step = 5;
};

SizeRange parse_range(const std::string& text) {
    SizeRange range;
    if (std::sscanf(text.c_str(), "%ld:%ld:%ld", &range.start, &range.stop, &range.step) != 3)
        throw CliError{1, "range must be start:stop:step, got '" + text + "'"};
    if (range.start < 3) throw CliError{1, "range start must be >= 3"};
    return range;
}

uint64_t default_seed() {
    if (const char* env = std::getenv("CENTRA_SEED")) return std::strtoull(env, nullptr, 10);
    return 42;
}

GraphHandle load_graph(const std::string& path, int64_t explicit_n) {
    centra_graph* g = nullptr;
    check(centra_graph_from_edge_list_file(path.c_str(), explicit_n, &g));
    return GraphHandle(g);
}

int run_measure(const std::string& input, int64_t explicit_n, const std::string& measures_csv,
                bool lcc_flag, const std::string& format, const std::string& out_path,
                bool no_timestamp) {
    const bool is_json = format == "json";
    std::vector<int> measure_ids;
    std::vector<std::string> names;
    if (measures_csv.empty() || measures_csv == "all") {
        for (int i = 0; i < centra_measure_count(); ++i) {
            measure_ids.push_back(i);
            names.emplace_back(centra_measure_name(i));
        }
    } else {
        for (const auto& name : split_csv(measures_csv)) {
            int id = -1;
            check(centra_measure_id(name.c_str(), &id));
            measure_ids.push_back(id);
            names.push_back(name);
        }
    }

    GraphHandle graph = load_graph(input, explicit_n);
    bool lcc_applied = false;
    const bool wants_path_measures =
        std::find(names.begin(), names.end(), "NBC") != names.end() ||
        std::find(names.begin(), names.end(), "NCC") != names.end();
    if (lcc_flag || (wants_path_measures && !centra_graph_is_connected(graph.ptr))) {
        if (!lcc_flag)
            std::cerr << "warning: input graph is disconnected; evaluating the largest connected "
                         "component (lcc_applied=1)\n";
        centra_graph* reduced = nullptr;
        check(centra_graph_largest_component(graph.ptr, &reduced));
        graph = GraphHandle(reduced);
        lcc_applied = true;
    }

    const int64_t n = centra_graph_node_count(graph.ptr);
    const int64_t m = centra_graph_edge_count(graph.ptr);

    struct Row {
        std::string name;
        double value;
        int degenerate;
    };
    std::vector<Row> rows;
    for (std::size_t i = 0; i < measure_ids.size(); ++i) {
        double value = 0.0;
        int degenerate = 0;
        check(centra_evaluate(graph.ptr, measure_ids[i], &value, &degenerate));
        rows.push_back({names[i], value, degenerate});
    }

    std::string artifact;
    if (is_json) {
        json results = json::array();
        for (const auto& row : rows)
            results.push_back({{"measure", row.name},
                               {"value", row.value},
                               {"degenerate", row.degenerate != 0}});
        json j{{"command", "measure"}, {"input", input},       {"n", n},
               {"m", m},               {"lcc_applied", lcc_applied}, {"results", results}};
        artifact = j.dump(2) + "\n";
    } else {
        artifact = "measure,value,n,m,degenerate,lcc_applied\n";
        for (const auto& row : rows)
            artifact += row.name + "," + format_value(row.value) + "," + std::to_string(n) + "," +
                        std::to_string(m) + "," + std::to_string(row.degenerate) + "," +
                        (lcc_applied ? "1" : "0") + "\n";
    }
    write_output(stamp(artifact, is_json, no_timestamp), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"centra: normalized network-centralization measures, their axiomatic and "
                 "numerical assessment, and canonical graph generators"};
    app.require_subcommand(1);

    std::string input, out_path, out_dir, measures = "all", topologies = "all";
    std::string format = "csv", range_text = "5:100:5", topology = "star";
    std::string table1_out, table2_out;
    int64_t explicit_n = -1, gen_n = 10, max_n = 6, perms = 20;
    uint64_t seed = default_seed();
    double w_axiomatic = 0.5, w_numerical = 0.5;
    bool lcc_flag = false, no_timestamp = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path, "output file (stdout when omitted)");
        cmd->add_flag("--no-timestamp", no_timestamp, "omit the generated-at timestamp");
        cmd->add_option("--seed", seed, "deterministic seed (env CENTRA_SEED overrides 42)");
    };

    CLI::App* measure = app.add_subcommand("measure", "evaluate measures on an edge list");
    measure->add_option("--input", input, "edge-list file")->required();
    measure->add_option("--explicit-n", explicit_n, "declared node count (isolated top ids)");
    measure->add_option("--measures", measures, "comma-separated measures or 'all'");
    measure->add_flag("--lcc", lcc_flag, "evaluate the largest connected component");
    add_common(measure);

    CLI::App* sweep = app.add_subcommand("sweep", "canonical-topology sweep values");
    sweep->add_option("--measures", measures, "comma-separated measures or 'all'");
    sweep->add_option("--topologies", topologies, "comma-separated topologies or 'all'");
    sweep->add_option("--n-range", range_text, "start:stop:step node counts");
    add_common(sweep);

    CLI::App* axioms = app.add_subcommand("axioms", "postulate compliance matrix and witnesses");
    axioms->add_option("--max-n", max_n, "enumeration bound for P4-P6 (3..7)");
    axioms->add_option("--perms", perms, "seeded permutations per graph for P3");
    axioms->add_option("--out-dir", out_dir,
                       "write axioms/witnesses/counterexamples files here (table only on "
                       "stdout when omitted)");
    add_common(axioms);

    CLI::App* score = app.add_subcommand("score", "combined axiomatic + numerical score table");
    score->add_option("--wa", w_axiomatic, "axiomatic weight");
    score->add_option("--wn", w_numerical, "numerical weight");
    score->add_option("--max-n", max_n, "enumeration bound for P4-P6 (3..7)");
    score->add_option("--perms", perms, "seeded permutations per graph for P3");
    score->add_option("--n-range", range_text, "sweep start:stop:step");
    score->add_option("--table1-out", table1_out, "also write the compliance matrix here");
    score->add_option("--table2-out", table2_out, "also write the behavior matrix here");
    add_common(score);

    CLI::App* generate = app.add_subcommand("generate", "write a canonical topology edge list");
    generate->add_option("--topology", topology,
                         "star|ring|complete|star-perturbed|ring-perturbed|complete-perturbed");
    generate->add_option("--n", gen_n, "node count")->required();
    add_common(generate);

    CLI::App* lcc = app.add_subcommand("lcc", "extract the largest connected component");
    lcc->add_option("--input", input, "edge-list file")->required();
    lcc->add_option("--explicit-n", explicit_n, "declared node count");
    add_common(lcc);

    CLI11_PARSE(app, argc, argv);

    try {
        const bool is_json = format == "json";
        if (app.got_subcommand(measure))
            return run_measure(input, explicit_n, measures, lcc_flag, format, out_path,
                               no_timestamp);

        if (app.got_subcommand(sweep)) {
            const SizeRange range = parse_range(range_text);
            ApiString artifact;
            check(centra_sweep_report(measures.c_str(), topologies.c_str(), range.start,
                                      range.stop, range.step, seed, format.c_str(),
                                      &artifact.ptr));
            write_output(stamp(artifact.str(), is_json, no_timestamp), out_path);
            return 0;
        }

        if (app.got_subcommand(axioms)) {
            ApiString table, witnesses, counterexamples;
            check(centra_axioms_report(max_n, perms, seed, format.c_str(), &table.ptr,
                                       &witnesses.ptr, &counterexamples.ptr));
            const std::string ext = is_json ? ".json" : ".csv";
            if (!out_dir.empty()) {
                write_output(stamp(table.str(), is_json, no_timestamp), out_dir + "/axioms" + ext);
                write_output(stamp(witnesses.str(), is_json, no_timestamp),
                             out_dir + "/witnesses" + ext);
                write_output(stamp(counterexamples.str(), is_json, no_timestamp),
                             out_dir + "/counterexamples" + ext);
            } else {
                write_output(stamp(table.str(), is_json, no_timestamp), out_path);
            }
            return 0;
        }

        if (app.got_subcommand(score)) {
            const SizeRange range = parse_range(range_text);
            ApiString artifact;
            check(centra_score_report(w_axiomatic, w_numerical, max_n, perms, range.start,
                                      range.stop, range.step, seed, format.c_str(),
                                      &artifact.ptr));
            write_output(stamp(artifact.str(), is_json, no_timestamp), out_path);
            if (!table1_out.empty()) {
                ApiString table;
                check(centra_axioms_report(max_n, perms, seed, format.c_str(), &table.ptr,
                                           nullptr, nullptr));
                write_output(stamp(table.str(), is_json, no_timestamp), table1_out);
            }
            if (!table2_out.empty()) {
                ApiString table;
                check(centra_behavior_report(range.start, range.stop, range.step, seed,
                                             format.c_str(), &table.ptr));
                write_output(stamp(table.str(), is_json, no_timestamp), table2_out);
            }
            return 0;
        }

        if (app.got_subcommand(generate)) {
            centra_graph* g = nullptr;
            check(centra_graph_generate(topology.c_str(), gen_n, seed, &g));
            GraphHandle graph(g);
            if (out_path.empty()) {
                ApiString text;
                check(centra_graph_to_edge_list_text(graph.ptr, &text.ptr));
                std::cout << text.str();
            } else {
                check(centra_graph_to_edge_list_file(graph.ptr, out_path.c_str()));
            }
            return 0;
        }

        if (app.got_subcommand(lcc)) {
            GraphHandle graph = load_graph(input, explicit_n);
            centra_graph* reduced = nullptr;
            check(centra_graph_largest_component(graph.ptr, &reduced));
            GraphHandle component(reduced);
            if (out_path.empty()) {
                ApiString text;
                check(centra_graph_to_edge_list_text(component.ptr, &text.ptr));
                std::cout << text.str();
            } else {
                check(centra_graph_to_edge_list_file(component.ptr, out_path.c_str()));
            }
            return 0;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code == 0 ? 1 : e.code;
    }
    return 1;
}
