#pragma once

/// \file graph_io.hpp
/// \brief Text formats for terminal graphs: edge list, graph6 with a
/// terminal sidecar line, and DOT.
///
/// Edge list (emitted form):
///   n=<n> s=<s> t=<t>
///   u v            one line per edge, u < v, ascending
/// The parser also accepts ';' as a line separator, a bare vertex count as
/// header, a "terminals a b" line and '#' comments.

#include "error.hpp"
#include "graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spcrit {

enum class GraphFormat { EdgeList, Graph6, Dot };

struct ParsedGraph {
    Graph graph;
    std::optional<std::pair<int, int>> terminals;

    TerminalGraph with_terminals() const
    {
        if (!terminals)
            throw InvalidArgument("graph has no terminals");
        return TerminalGraph(graph, terminals->first, terminals->second);
    }
};

namespace detail {

struct Token {
    std::string_view text;
    int line;
    int column;
};

// Logical lines: split at '\n' and ';', drop '#' comments, tokenize on blanks.
inline std::vector<std::vector<Token>> logical_lines(std::string_view text)
{
    std::vector<std::vector<Token>> out;
    std::vector<Token> cur;
    int line = 1;
    int col = 1;
    bool comment = false;
    std::size_t start = std::string_view::npos;
    int start_col = 0;
    const auto flush_token = [&](std::size_t end) {
        if (start != std::string_view::npos) {
            cur.push_back({text.substr(start, end - start), line, start_col});
            start = std::string_view::npos;
        }
    };
    const auto flush_line = [&] {
        if (!cur.empty())
            out.push_back(std::move(cur));
        cur.clear();
    };
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const char c = i < text.size() ? text[i] : '\n';
        if (c == '\n') {
            flush_token(i);
            flush_line();
            comment = false;
            ++line;
            col = 1;
            continue;
        }
        if (!comment) {
            if (c == '#') {
                flush_token(i);
                comment = true;
            } else if (c == ';') {
                flush_token(i);
                flush_line();
            } else if (c == ' ' || c == '\t' || c == '\r') {
                flush_token(i);
            } else if (start == std::string_view::npos) {
                start = i;
                start_col = col;
            }
        }
        ++col;
    }
    return out;
}

inline int to_int(const Token& tok, std::string_view digits)
{
    int v = 0;
    const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc{} || p != digits.data() + digits.size() || v < 0)
        throw ParseError("expected a non-negative integer, got '" + std::string(tok.text) + "'", tok.line,
                         tok.column);
    return v;
}

inline int to_int(const Token& tok) { return to_int(tok, tok.text); }

inline Graph build_checked(int n, const std::vector<Edge>& edges, const std::vector<Token>& where)
{
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [u, v] = edges[i];
        if (u >= n || v >= n)
            throw ParseError("vertex id out of range for n=" + std::to_string(n), where[i].line, where[i].column);
        if (u == v)
            throw ParseError("loop at vertex " + std::to_string(u), where[i].line, where[i].column);
    }
    try {
        return Graph(n, edges);
    } catch (const MultiEdge& e) {
        throw ParseError(e.what(), where.empty() ? 1 : where.back().line, 1);
    }
}

inline void check_terminals(const ParsedGraph& g, int line, int column)
{
    if (!g.terminals)
        return;
    const auto [s, t] = *g.terminals;
    const int n = g.graph.vertex_count();
    if (s == t || s >= n || t >= n)
        throw ParseError("invalid terminals " + std::to_string(s) + " " + std::to_string(t), line, column);
}

} // namespace detail

// ---------------------------------------------------------------------------
// edge list

inline std::string emit_edge_list(const Graph& g, std::optional<std::pair<int, int>> terminals)
{
    std::ostringstream os;
    os << "n=" << g.vertex_count();
    if (terminals)
        os << " s=" << terminals->first << " t=" << terminals->second;
    os << '\n';
    for (const auto& [u, v] : g.edges())
        os << u << ' ' << v << '\n';
    return os.str();
}

inline std::string emit_edge_list(const TerminalGraph& tg) { return emit_edge_list(tg.graph, std::pair{tg.s, tg.t}); }

inline ParsedGraph parse_edge_list(std::string_view text)
{
    const auto lines = detail::logical_lines(text);
    if (lines.empty())
        throw ParseError("empty input", 1, 1);

    int n = -1;
    std::optional<int> s, t;
    const auto& head = lines.front();
    if (head.size() == 1 && head[0].text.find('=') == std::string_view::npos) {
        n = detail::to_int(head[0]);
    } else {
        for (const auto& tok : head) {
            const auto eq = tok.text.find('=');
            if (eq == std::string_view::npos)
                throw ParseError("expected key=value in header, got '" + std::string(tok.text) + "'", tok.line,
                                 tok.column);
            const auto name = tok.text.substr(0, eq);
            const int value = detail::to_int(tok, tok.text.substr(eq + 1));
            if (name == "n")
                n = value;
            else if (name == "s")
                s = value;
            else if (name == "t")
                t = value;
            else
                throw ParseError("unknown header key '" + std::string(name) + "'", tok.line, tok.column);
        }
        if (n < 0)
            throw ParseError("header lacks n=", head[0].line, head[0].column);
        if (s.has_value() != t.has_value())
            throw ParseError("header must give both s= and t=", head[0].line, head[0].column);
    }

    std::vector<Edge> edges;
    std::vector<detail::Token> where;
    std::optional<detail::Token> term_at;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l[0].text == "terminals" || l[0].text == "t") {
            if (l.size() != 3)
                throw ParseError("terminals line needs two vertex ids", l[0].line, l[0].column);
            if (s)
                throw ParseError("terminals given twice", l[0].line, l[0].column);
            s = detail::to_int(l[1]);
            t = detail::to_int(l[2]);
            term_at = l[0];
            continue;
        }
        if (l.size() != 2)
            throw ParseError("expected 'u v'", l[0].line, l[0].column);
        edges.emplace_back(detail::to_int(l[0]), detail::to_int(l[1]));
        where.push_back(l[0]);
    }
    ParsedGraph out{detail::build_checked(n, edges, where), std::nullopt};
    if (s)
        out.terminals = std::pair{*s, *t};
    const auto& at = term_at ? *term_at : head[0];
    detail::check_terminals(out, at.line, at.column);
    return out;
}

// ---------------------------------------------------------------------------
// graph6

inline std::string emit_graph6(const Graph& g)
{
    const auto n = static_cast<std::uint64_t>(g.vertex_count());
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < g.vertex_count(); ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

/// graph6 line followed by the sidecar "t <s> <t>".
inline std::string emit_graph6(const TerminalGraph& tg)
{
    return emit_graph6(tg.graph) + "\nt " + std::to_string(tg.s) + " " + std::to_string(tg.t) + "\n";
}

inline Graph decode_graph6(std::string_view code, int line = 1)
{
    std::size_t pos = 0;
    const auto take = [&](int count) {
        std::uint64_t v = 0;
        for (int i = 0; i < count; ++i) {
            if (pos >= code.size())
                throw ParseError("truncated graph6 size field", line, static_cast<int>(pos) + 1);
            const int c = static_cast<unsigned char>(code[pos]);
            if (c < 63 || c > 126)
                throw ParseError("invalid graph6 character", line, static_cast<int>(pos) + 1);
            v = (v << 6) | static_cast<std::uint64_t>(c - 63);
            ++pos;
        }
        return v;
    };
    std::uint64_t n = 0;
    if (code.starts_with("~~")) {
        pos = 2;
        n = take(6);
    } else if (code.starts_with("~")) {
        pos = 1;
        n = take(3);
    } else {
        n = take(1);
    }
    if (n > 1u << 20)
        throw ParseError("graph6 vertex count too large", line, 1);
    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t need = (bits + 5) / 6;
    if (code.size() - pos != need)
        throw ParseError("graph6 body has " + std::to_string(code.size() - pos) + " bytes, expected " +
                             std::to_string(need),
                         line, static_cast<int>(pos) + 1);
    std::vector<Edge> edges;
    std::uint64_t index = 0;
    for (int j = 1; j < static_cast<int>(n); ++j)
        for (int i = 0; i < j; ++i, ++index) {
            const std::size_t at = pos + index / 6;
            const int c = static_cast<unsigned char>(code[at]);
            if (c < 63 || c > 126)
                throw ParseError("invalid graph6 character", line, static_cast<int>(at) + 1);
            if (((c - 63) >> (5 - index % 6)) & 1)
                edges.emplace_back(i, j);
        }
    for (std::size_t at = pos + index / 6 + (index % 6 ? 1 : 0); at < code.size(); ++at)
        if (code[at] < 63 || code[at] > 126)
            throw ParseError("invalid graph6 character", line, static_cast<int>(at) + 1);
    return Graph(static_cast<int>(n), edges);
}

inline ParsedGraph parse_graph6(std::string_view text)
{
    const auto lines = detail::logical_lines(text);
    std::size_t i = 0;
    if (i < lines.size() && lines[i][0].text == ">>graph6<<")
        ++i;
    if (i >= lines.size())
        throw ParseError("empty input", 1, 1);
    if (lines[i].size() != 1)
        throw ParseError("graph6 line must be a single token", lines[i][1].line, lines[i][1].column);
    ParsedGraph out{decode_graph6(lines[i][0].text, lines[i][0].line), std::nullopt};
    ++i;
    if (i < lines.size()) {
        const auto& l = lines[i];
        if (l.size() != 3 || l[0].text != "t")
            throw ParseError("expected sidecar 't <s> <t>'", l[0].line, l[0].column);
        out.terminals = std::pair{detail::to_int(l[1]), detail::to_int(l[2])};
        detail::check_terminals(out, l[0].line, l[0].column);
        ++i;
    }
    if (i < lines.size())
        throw ParseError("trailing input after graph6 record", lines[i][0].line, lines[i][0].column);
    return out;
}

// ---------------------------------------------------------------------------
// DOT

inline std::string emit_dot(const Graph& g, std::optional<std::pair<int, int>> terminals,
                            std::string_view name = "G")
{
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v;
        if (terminals && (v == terminals->first || v == terminals->second))
            os << " [shape=doublecircle, label=\"" << v << (v == terminals->first ? " s" : " t") << "\"]";
        os << ";\n";
    }
    for (const auto& [u, v] : g.edges())
        os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string emit_dot(const TerminalGraph& tg, std::string_view name = "G")
{
    return emit_dot(tg.graph, std::pair{tg.s, tg.t}, name);
}

/// Reads the subset of DOT that emit_dot writes: integer node ids, node
/// statements with attribute lists, and "a -- b" edges. Double-circled
/// nodes are terminals; a label ending in " s" or " t" fixes their order.
inline ParsedGraph parse_dot(std::string_view text)
{
    const auto open = text.find('{');
    const auto close = text.rfind('}');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw ParseError("expected 'graph NAME { ... }'", 1, 1);
    const auto line_of = [&](std::size_t off) {
        return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(off), '\n'));
    };
    const auto col_of = [&](std::size_t off) {
        const auto nl = text.rfind('\n', off == 0 ? 0 : off - 1);
        return static_cast<int>(nl == std::string_view::npos || off == 0 ? off + 1 : off - nl);
    };
    {
        std::istringstream head{std::string(text.substr(0, open))};
        std::string kw;
        head >> kw;
        if (kw == "strict")
            head >> kw;
        if (kw != "graph")
            throw ParseError("only undirected 'graph' is supported", 1, 1);
    }

    int n = 0;
    std::vector<Edge> edges;
    std::vector<detail::Token> where;
    std::optional<int> s, t;
    std::vector<int> circled;

    std::size_t i = open + 1;
    const auto skip_ws = [&] {
        while (i < close && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ';' || text[i] == ','))
            ++i;
    };
    const auto read_id = [&]() -> std::pair<int, detail::Token> {
        const std::size_t b = i;
        while (i < close && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        const detail::Token tok{text.substr(b, i - b), line_of(b), col_of(b)};
        if (i == b)
            throw ParseError("expected a numeric node id", tok.line, tok.column);
        return {detail::to_int(tok), tok};
    };
    while (true) {
        skip_ws();
        if (i >= close)
            break;
        const auto [a, tok] = read_id();
        n = std::max(n, a + 1);
        skip_ws();
        if (text.substr(i, 2) == "--") {
            i += 2;
            skip_ws();
            const auto [b, _] = read_id();
            n = std::max(n, b + 1);
            edges.emplace_back(a, b);
            where.push_back(tok);
        } else if (i < close && text[i] == '[') {
            const auto end = text.find(']', i);
            if (end == std::string_view::npos || end > close)
                throw ParseError("unterminated attribute list", line_of(i), col_of(i));
            const auto attrs = text.substr(i + 1, end - i - 1);
            if (attrs.find("doublecircle") != std::string_view::npos) {
                circled.push_back(a);
                if (attrs.find(" s\"") != std::string_view::npos)
                    s = a;
                if (attrs.find(" t\"") != std::string_view::npos)
                    t = a;
            }
            i = end + 1;
        }
    }
    ParsedGraph out{detail::build_checked(n, edges, where), std::nullopt};
    if (s && t)
        out.terminals = std::pair{*s, *t};
    else if (circled.size() == 2)
        out.terminals = std::pair{circled[0], circled[1]};
    else if (!circled.empty())
        throw ParseError("expected exactly two double-circled terminals", line_of(open), col_of(open));
    detail::check_terminals(out, line_of(open), col_of(open));
    return out;
}

// ---------------------------------------------------------------------------

inline GraphFormat detect_format(std::string_view text)
{
    const auto lines = detail::logical_lines(text);
    if (lines.empty())
        throw ParseError("empty input", 1, 1);
    const auto first = lines.front().front().text;
    if (first == "graph" || first == "strict" || first.starts_with("graph{"))
        return GraphFormat::Dot;
    if (first == ">>graph6<<")
        return GraphFormat::Graph6;
    if (lines.front().size() == 1 &&
        std::all_of(first.begin(), first.end(), [](char c) { return c >= 63 && c <= 126; }))
        return GraphFormat::Graph6;
    return GraphFormat::EdgeList;
}

inline ParsedGraph parse_graph(std::string_view text, std::optional<GraphFormat> format = std::nullopt)
{
    switch (format.value_or(detect_format(text))) {
    case GraphFormat::Graph6:
        return parse_graph6(text);
    case GraphFormat::Dot:
        return parse_dot(text);
    case GraphFormat::EdgeList:
        break;
    }
    return parse_edge_list(text);
}

} // namespace spcrit
