#include "ioc/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace ioc {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

int sextet(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) {
        parse_fail("graph6: unexpected end of input at byte " + std::to_string(pos));
    }
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < kOffset || c > kOffset + 63) {
        parse_fail("graph6: invalid character at byte " + std::to_string(pos));
    }
    return c - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    text = trim(text);
    std::size_t base = 0;
    if (text.starts_with(kHeader)) base = kHeader.size();

    std::size_t pos = base;
    std::uint64_t n = 0;
    const int first = sextet(text, pos);
    if (first < 63) {
        n = static_cast<std::uint64_t>(first);
        pos += 1;
    } else if (sextet(text, pos + 1) < 63) {
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + i));
        pos += 4;
    } else {
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, pos + i));
        pos += 8;
    }
    if (n > 100000) parse_fail("graph6: order " + std::to_string(n) + " exceeds supported size");

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != bytes) {
        parse_fail("graph6: expected " + std::to_string(bytes) + " adjacency bytes after byte " +
                   std::to_string(pos) + ", found " + std::to_string(text.size() - pos));
    }

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int chunk = sextet(text, pos + static_cast<std::size_t>(k / 6));
            if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
        }
    }
    // Padding bits must be zero.
    if (k % 6 != 0) {
        const int chunk = sextet(text, pos + static_cast<std::size_t>(k / 6));
        if ((chunk & ((1 << (6 - k % 6)) - 1)) != 0) {
            parse_fail("graph6: nonzero padding in byte " + std::to_string(pos + k / 6));
        }
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

std::string to_graph6(const Graph& g) {
    const std::uint64_t n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
        }
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6) {
            out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
        }
    }
    int chunk = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        const VertexSet& nb = g.neighborhood(j);
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (nb.contains(i) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kOffset));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kOffset));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    std::size_t n = 0;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        Vertex ends[2] = {0, 0};
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (int i = 0; i < 2; ++i) {
            while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
            const auto [next, ec] = std::from_chars(p, end, ends[i]);
            if (ec != std::errc{} || next == p) {
                parse_fail("edge list: line " + std::to_string(line_no) +
                           ": expected two non-negative vertex indices");
            }
            p = next;
        }
        while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
        if (p != end) {
            parse_fail("edge list: line " + std::to_string(line_no) + ": trailing characters");
        }
        if (ends[0] == ends[1]) {
            parse_fail("edge list: line " + std::to_string(line_no) + ": self-loop at vertex " +
                       std::to_string(ends[0]));
        }
        if (std::max(ends[0], ends[1]) >= 100000) {
            parse_fail("edge list: line " + std::to_string(line_no) + ": vertex index too large");
        }
        n = std::max<std::size_t>(n, std::max(ends[0], ends[1]) + std::size_t{1});
        edges.push_back({ends[0], ends[1]});
    }
    return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u);
        out += ' ';
        out += std::to_string(e.v);
        out += '\n';
    }
    return out;
}

GraphFormat detect_format(std::string_view text) {
    std::string_view body = trim(text);
    if (body.starts_with(kHeader)) return GraphFormat::Graph6;
    if (body.empty()) return GraphFormat::EdgeList;
    for (char c : body) {
        const int u = static_cast<unsigned char>(c);
        if (u < kOffset || u > 126) return GraphFormat::EdgeList;
    }
    return GraphFormat::Graph6;
}

Graph parse_graph(std::string_view text) {
    return detect_format(text) == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_fail("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

}  // namespace ioc
