#include "centra/edge_list.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace centra {

namespace {

bool parse_node_id(std::string_view token, NodeId& out) {
    if (token.empty()) return false;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && out >= 0;
}

}  // namespace

Graph from_edge_list(std::string_view text, std::optional<NodeId> explicit_n) {
    if (explicit_n && *explicit_n < 0)
        throw std::invalid_argument("explicit node count must be nonnegative");

    std::vector<Edge> edges;
    NodeId max_id = -1;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i == line.size() || line[i] == '#') continue;

        std::string_view tokens[3];
        std::size_t count = 0;
        while (i < line.size()) {
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (count < 3) tokens[count] = line.substr(i, j - i);
            ++count;
            i = j;
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        }
        if (count != 2)
            throw ParseError(line_no, "expected two node ids, got " + std::to_string(count) + " tokens");

        NodeId u, v;
        if (!parse_node_id(tokens[0], u))
            throw ParseError(line_no, "malformed node id '" + std::string(tokens[0]) + "'");
        if (!parse_node_id(tokens[1], v))
            throw ParseError(line_no, "malformed node id '" + std::string(tokens[1]) + "'");
        if (u == v) throw ParseError(line_no, "self-loop at node " + std::to_string(u));
        if (explicit_n && (u >= *explicit_n || v >= *explicit_n))
            throw ParseError(line_no, "node id " + std::to_string(std::max(u, v)) +
                                          " exceeds declared node count " + std::to_string(*explicit_n));
        edges.push_back({std::min(u, v), std::max(u, v)});
        max_id = std::max({max_id, u, v});
    }

    const NodeId n = explicit_n ? *explicit_n : max_id + 1;
    return Graph(n, std::move(edges));
}

Graph from_edge_list_file(const std::string& path, std::optional<NodeId> explicit_n) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_edge_list(buffer.str(), explicit_n);
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (const auto& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << to_edge_list(g);
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace centra
