#include "symctrl/graph_io.hpp"

#include "symctrl/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace symctrl {
namespace {

// Upper bound on vertex indices accepted from text, to keep a typo from
// allocating gigabytes.
constexpr std::size_t kMaxVertices = 10'000'000;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t parse_index(std::string_view token, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    if (value >= kMaxVertices)
        throw IndexOutOfRange("line " + std::to_string(line) + ": index " + std::string(token) +
                              " exceeds the supported vertex range");
    return value;
}

Rational parse_weight(std::string_view token, std::size_t line) {
    auto value = parse_rational(token);
    if (!value) throw ParseError(line, "malformed exact value '" + std::string(token) + "'");
    return *value;
}

IngestResult build(std::size_t n, std::map<Edge, Rational> weighted, bool has_weights) {
    std::vector<Edge> edges;
    edges.reserve(weighted.size());
    for (const auto& [e, w] : weighted) edges.push_back(e);
    IngestResult result{GraphSpec(n, std::move(edges)), std::nullopt};
    if (has_weights) result.weights = WeightAssignment(std::move(weighted));
    return result;
}

std::optional<std::size_t> nodes_directive(std::string_view comment) {
    // "# Nodes: 12" (SNAP style); anything after the count is ignored.
    auto body = trim(comment.substr(1));
    auto lowered = lower(body.substr(0, std::min<std::size_t>(body.size(), 6)));
    if (lowered != "nodes:") return std::nullopt;
    auto rest = split_whitespace(body.substr(6));
    if (rest.empty()) return std::nullopt;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(rest[0].data(), rest[0].data() + rest[0].size(), value);
    if (ec != std::errc() || ptr != rest[0].data() + rest[0].size()) return std::nullopt;
    return value;
}

IngestResult ingest_edge_list(std::string_view text) {
    std::map<Edge, Rational> weighted;
    std::optional<std::size_t> declared_n;
    std::size_t max_index_plus_one = 0;
    bool has_weights = false;

    auto lines = split_lines(text);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const std::size_t line_no = k + 1;
        auto line = trim(lines[k]);
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (auto n = nodes_directive(line)) {
                if (declared_n) throw ParseError(line_no, "vertex count declared twice");
                if (*n > kMaxVertices) throw IndexOutOfRange("declared vertex count too large");
                declared_n = *n;
            }
            continue;
        }
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));

        auto tokens = split_whitespace(line);
        if (tokens.size() < 2 || tokens.size() > 3)
            throw ParseError(line_no, "expected 'i j [w]'");
        std::size_t i = parse_index(tokens[0], line_no);
        std::size_t j = parse_index(tokens[1], line_no);
        if (i == j) throw SelfLoop(i);
        Rational w(1);
        if (tokens.size() == 3) {
            w = parse_weight(tokens[2], line_no);
            has_weights = true;
        }
        if (!weighted.emplace(Edge(i, j), w).second)
            throw DuplicateEdge("line " + std::to_string(line_no) + ": duplicate edge {" +
                                std::to_string(std::min(i, j)) + ", " +
                                std::to_string(std::max(i, j)) + "}");
        max_index_plus_one = std::max(max_index_plus_one, std::max(i, j) + 1);
    }

    std::size_t n = max_index_plus_one;
    if (declared_n) {
        if (max_index_plus_one > *declared_n)
            throw IndexOutOfRange("edge endpoint " + std::to_string(max_index_plus_one - 1) +
                                  " exceeds declared vertex count " + std::to_string(*declared_n));
        n = *declared_n;
    }
    return build(n, std::move(weighted), has_weights);
}

IngestResult ingest_adjacency_csv(std::string_view text) {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> line_numbers;
    auto lines = split_lines(text);
    for (std::size_t k = 0; k < lines.size(); ++k) {
        auto line = trim(lines[k]);
        if (line.empty() || line.front() == '#') continue;
        std::vector<Rational> row;
        std::size_t start = 0;
        while (true) {
            auto comma = line.find(',', start);
            auto cell = trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - start));
            if (cell.empty()) throw ParseError(k + 1, "empty cell");
            row.push_back(parse_weight(cell, k + 1));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
        line_numbers.push_back(k + 1);
    }

    const std::size_t n = rows.size();
    for (std::size_t r = 0; r < n; ++r)
        if (rows[r].size() != n)
            throw ParseError(line_numbers[r], "expected " + std::to_string(n) + " columns, got " +
                                                  std::to_string(rows[r].size()));

    std::map<Edge, Rational> weighted;
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i][i] != 0) throw SelfLoop(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rows[i][j] != rows[j][i]) throw AsymmetricMatrix(i, j);
            if (rows[i][j] != 0) weighted.emplace(Edge(i, j), rows[i][j]);
        }
    }
    return build(n, std::move(weighted), true);
}

IngestResult ingest_matrix_market(std::string_view text) {
    auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, "empty Matrix Market input");

    auto header = split_whitespace(lines[0]);
    if (header.size() != 5 || lower(header[0]) != "%%matrixmarket" || lower(header[1]) != "matrix")
        throw ParseError(1, "expected '%%MatrixMarket matrix coordinate <field> <symmetry>'");
    if (lower(header[2]) != "coordinate") throw ParseError(1, "only coordinate storage is supported");
    const std::string field = lower(header[3]);
    const std::string symmetry = lower(header[4]);
    const bool pattern = field == "pattern";
    if (field != "real" && field != "integer" && !pattern)
        throw ParseError(1, "unsupported field '" + std::string(header[3]) + "'");
    if (symmetry != "symmetric" && symmetry != "general")
        throw ParseError(1, "unsupported symmetry '" + std::string(header[4]) + "'");

    std::size_t k = 1;
    auto next_content_line = [&]() -> std::optional<std::size_t> {
        while (k < lines.size()) {
            auto line = trim(lines[k]);
            if (!line.empty() && line.front() != '%') return k++;
            ++k;
        }
        return std::nullopt;
    };

    auto size_line = next_content_line();
    if (!size_line) throw ParseError(lines.size(), "missing size line");
    auto dims = split_whitespace(lines[*size_line]);
    if (dims.size() != 3) throw ParseError(*size_line + 1, "expected 'rows cols entries'");
    const std::size_t rows = parse_index(dims[0], *size_line + 1);
    const std::size_t cols = parse_index(dims[1], *size_line + 1);
    const std::size_t nnz = parse_index(dims[2], *size_line + 1);
    if (rows != cols) throw ParseError(*size_line + 1, "adjacency matrix must be square");

    std::map<std::pair<std::size_t, std::size_t>, Rational> entries;
    for (std::size_t e = 0; e < nnz; ++e) {
        auto idx = next_content_line();
        if (!idx) throw ParseError(lines.size(), "expected " + std::to_string(nnz) + " entries, got " +
                                                     std::to_string(e));
        const std::size_t line_no = *idx + 1;
        auto tokens = split_whitespace(lines[*idx]);
        if (tokens.size() != (pattern ? 2u : 3u))
            throw ParseError(line_no, pattern ? "expected 'i j'" : "expected 'i j value'");
        std::size_t i = parse_index(tokens[0], line_no);
        std::size_t j = parse_index(tokens[1], line_no);
        if (i == 0 || j == 0 || i > rows || j > rows)
            throw IndexOutOfRange("line " + std::to_string(line_no) + ": index outside 1.." +
                                  std::to_string(rows));
        --i;
        --j;
        Rational value = pattern ? Rational(1) : parse_weight(tokens[2], line_no);
        if (i == j) {
            if (value != 0) throw SelfLoop(i);
            continue;
        }
        auto key = symmetry == "symmetric" ? std::make_pair(std::max(i, j), std::min(i, j))
                                           : std::make_pair(i, j);
        if (!entries.emplace(key, value).second) throw ParseError(line_no, "duplicate entry");
    }
    if (next_content_line()) throw ParseError(k, "more entries than declared");

    std::map<Edge, Rational> weighted;
    for (const auto& [key, value] : entries) {
        auto [i, j] = key;
        if (symmetry == "general") {
            auto mirror = entries.find({j, i});
            Rational other = mirror == entries.end() ? Rational(0) : mirror->second;
            if (other != value) throw AsymmetricMatrix(std::min(i, j), std::max(i, j));
        }
        if (value != 0) weighted.emplace(Edge(i, j), value);
    }
    return build(rows, std::move(weighted), !pattern);
}

}  // namespace

std::optional<GraphFormat> parse_format_name(std::string_view name) {
    if (name == "edge-list" || name == "edgelist") return GraphFormat::EdgeList;
    if (name == "adjacency-csv" || name == "csv") return GraphFormat::AdjacencyCsv;
    if (name == "matrix-market" || name == "mtx") return GraphFormat::MatrixMarket;
    return std::nullopt;
}

std::string_view format_name(GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return "edge-list";
        case GraphFormat::AdjacencyCsv: return "adjacency-csv";
        case GraphFormat::MatrixMarket: return "matrix-market";
    }
    return "edge-list";
}

GraphFormat detect_format(std::string_view path, std::string_view content) {
    auto ends_with = [&](std::string_view suffix) {
        return path.size() >= suffix.size() &&
               lower(path.substr(path.size() - suffix.size())) == suffix;
    };
    if (ends_with(".mtx") || ends_with(".mm")) return GraphFormat::MatrixMarket;
    if (ends_with(".csv")) return GraphFormat::AdjacencyCsv;
    if (content.substr(0, 14) == "%%MatrixMarket") return GraphFormat::MatrixMarket;
    return GraphFormat::EdgeList;
}

IngestResult ingest(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return ingest_edge_list(text);
        case GraphFormat::AdjacencyCsv: return ingest_adjacency_csv(text);
        case GraphFormat::MatrixMarket: return ingest_matrix_market(text);
    }
    throw InvalidParameter("unknown graph format");
}

std::string emit(const GraphSpec& graph, const WeightAssignment* weights, GraphFormat format) {
    std::ostringstream out;
    auto weight_of = [&](const Edge& e) {
        if (!weights) return std::string("1");
        const Rational* w = weights->find(e);
        return w ? format_rational(*w) : std::string("1");
    };

    switch (format) {
        case GraphFormat::EdgeList:
            out << "# Nodes: " << graph.vertex_count() << " Edges: " << graph.edge_count() << '\n';
            for (const Edge& e : graph.edges()) {
                out << e.u << ' ' << e.v;
                if (weights) out << ' ' << weight_of(e);
                out << '\n';
            }
            break;
        case GraphFormat::AdjacencyCsv: {
            const std::size_t n = graph.vertex_count();
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (j) out << ',';
                    out << (graph.has_edge(i, j) ? weight_of(Edge(i, j)) : std::string("0"));
                }
                out << '\n';
            }
            break;
        }
        case GraphFormat::MatrixMarket:
            out << "%%MatrixMarket matrix coordinate " << (weights ? "real" : "pattern")
                << " symmetric\n";
            out << graph.vertex_count() << ' ' << graph.vertex_count() << ' ' << graph.edge_count()
                << '\n';
            for (const Edge& e : graph.edges()) {
                out << e.v + 1 << ' ' << e.u + 1;
                if (weights) out << ' ' << weight_of(e);
                out << '\n';
            }
            break;
    }
    return out.str();
}

}  // namespace symctrl
