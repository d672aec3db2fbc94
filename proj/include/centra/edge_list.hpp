#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "centra/graph.hpp"

namespace centra {

/// Parse failure with the 1-based line number of the offending input line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses line-oriented "u v" text. '#' starts a comment line, blank lines
/// are ignored, ids are 0-based integers. Without explicit_n the node count
/// is 1 + max id (0 for no edges). Repeated edges collapse; self-loops,
/// malformed tokens and ids >= explicit_n are rejected with line numbers.
Graph from_edge_list(std::string_view text, std::optional<NodeId> explicit_n = std::nullopt);

Graph from_edge_list_file(const std::string& path, std::optional<NodeId> explicit_n = std::nullopt);

/// One "u v" line per edge in sorted order. Inverse of from_edge_list up to
/// edge order (isolated top-index nodes need explicit_n on re-parse).
std::string to_edge_list(const Graph& g);

void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace centra
