#pragma once

/// \file sp_expr.hpp
/// \brief Series-parallel expression trees over single edges.
///
/// An SpExpr denotes a 2-terminal graph (G, s, t). Serial children are
/// ordered from s to t; parallel children are unordered. Nodes are always
/// flattened, so a Serial node never has a Serial child and a Parallel node
/// never has a Parallel child. Because that decomposition is unique for a
/// given 2-terminal graph, keys built from it are complete isomorphism
/// invariants.

#include "error.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spcrit {

enum class NodeKind : std::uint8_t { Leaf, Serial, Parallel };

class SpExpr {
public:
    /// A single edge s--t.
    static SpExpr leaf()
    {
        static const SpExpr edge{std::make_shared<const Node>(Node{NodeKind::Leaf, {}, 1, 0})};
        return edge;
    }

    /// Flattened serial composition of \p parts (in s -> t order).
    static SpExpr serial(std::span<const SpExpr> parts)
    {
        if (parts.size() < 2)
            throw InvalidArgument("serial node needs at least two children");
        Node node{NodeKind::Serial, {}, 0, 0};
        for (const auto& p : parts) {
            if (p.kind() == NodeKind::Serial)
                node.children.insert(node.children.end(), p.children().begin(), p.children().end());
            else
                node.children.push_back(p);
        }
        for (const auto& c : node.children) {
            node.edges += c.edge_count();
            node.internal += c.internal_vertex_count();
        }
        node.internal += static_cast<int>(node.children.size()) - 1;
        return SpExpr(std::make_shared<const Node>(std::move(node)));
    }

    /// Flattened parallel composition. Throws MultiEdge if two single edges
    /// would end up joining s and t.
    static SpExpr parallel(std::span<const SpExpr> parts)
    {
        if (parts.size() < 2)
            throw InvalidArgument("parallel node needs at least two children");
        Node node{NodeKind::Parallel, {}, 0, 0};
        for (const auto& p : parts) {
            if (p.kind() == NodeKind::Parallel)
                node.children.insert(node.children.end(), p.children().begin(), p.children().end());
            else
                node.children.push_back(p);
        }
        int direct = 0;
        for (const auto& c : node.children) {
            direct += c.is_leaf() ? 1 : 0;
            node.edges += c.edge_count();
            node.internal += c.internal_vertex_count();
        }
        if (direct > 1)
            throw MultiEdge();
        return SpExpr(std::make_shared<const Node>(std::move(node)));
    }

    NodeKind kind() const noexcept { return node_->kind; }
    bool is_leaf() const noexcept { return node_->kind == NodeKind::Leaf; }
    std::span<const SpExpr> children() const noexcept { return node_->children; }

    int edge_count() const noexcept { return node_->edges; }
    int internal_vertex_count() const noexcept { return node_->internal; }
    int vertex_count() const noexcept { return node_->internal + 2; }

    /// Identity of the shared node (two handles to the same subtree compare equal).
    const void* id() const noexcept { return node_.get(); }

private:
    struct Node {
        NodeKind kind;
        std::vector<SpExpr> children;
        int edges;
        int internal;
    };

    explicit SpExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// G1 + G2: t of \p a is identified with s of \p b.
inline SpExpr serial_sum(const SpExpr& a, const SpExpr& b)
{
    const SpExpr parts[] = {a, b};
    return SpExpr::serial(parts);
}

/// G1 || G2: the s terminals and the t terminals are identified.
inline SpExpr parallel_sum(const SpExpr& a, const SpExpr& b)
{
    const SpExpr parts[] = {a, b};
    return SpExpr::parallel(parts);
}

/// The same graph with s and t exchanged.
inline SpExpr reversed(const SpExpr& e)
{
    if (e.is_leaf())
        return e;
    std::vector<SpExpr> kids;
    kids.reserve(e.children().size());
    for (const auto& c : e.children())
        kids.push_back(reversed(c));
    if (e.kind() == NodeKind::Serial) {
        std::reverse(kids.begin(), kids.end());
        return SpExpr::serial(kids);
    }
    return SpExpr::parallel(kids);
}

/// Isomorphism class of a 2-terminal graph with (s, t) unordered.
struct CanonKey {
    std::string bytes;

    friend bool operator==(const CanonKey&, const CanonKey&) = default;
    friend auto operator<=>(const CanonKey&, const CanonKey&) = default;
};

namespace detail {

// Keys of e read from s to t and from t to s.
inline std::pair<std::string, std::string> oriented_keys(const SpExpr& e)
{
    if (e.is_leaf())
        return {"E", "E"};
    std::vector<std::string> fwd;
    std::vector<std::string> bwd;
    for (const auto& c : e.children()) {
        auto [f, b] = oriented_keys(c);
        fwd.push_back(std::move(f));
        bwd.push_back(std::move(b));
    }
    const char tag = e.kind() == NodeKind::Serial ? 'S' : 'P';
    if (e.kind() == NodeKind::Serial) {
        std::reverse(bwd.begin(), bwd.end());
    } else {
        std::sort(fwd.begin(), fwd.end());
        std::sort(bwd.begin(), bwd.end());
    }
    auto join = [tag](const std::vector<std::string>& parts) {
        std::string out(1, tag);
        out += '(';
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i)
                out += ',';
            out += parts[i];
        }
        out += ')';
        return out;
    };
    return {join(fwd), join(bwd)};
}

} // namespace detail

/// Key of (G, s, t) with s and t kept apart; equal iff an isomorphism maps s to s and t to t.
inline std::string directed_key(const SpExpr& e) { return detail::oriented_keys(e).first; }

inline CanonKey canonical_key(const SpExpr& e)
{
    auto [f, b] = detail::oriented_keys(e);
    return CanonKey{std::min(f, b)};
}

/// True when \p e is the orientation whose directed key is the canonical one.
inline bool is_canonical_orientation(const SpExpr& e)
{
    auto [f, b] = detail::oriented_keys(e);
    return f <= b;
}

/// Human-readable form, e.g. "P(E,S(E,E))". Parses back with parse_expr.
inline std::string to_string(const SpExpr& e)
{
    if (e.is_leaf())
        return "E";
    std::string out(1, e.kind() == NodeKind::Serial ? 'S' : 'P');
    out += '(';
    bool first = true;
    for (const auto& c : e.children()) {
        if (!first)
            out += ',';
        out += to_string(c);
        first = false;
    }
    out += ')';
    return out;
}

namespace detail {

inline SpExpr parse_expr_at(std::string_view text, std::size_t& pos)
{
    if (pos >= text.size())
        throw ParseError("unexpected end of expression", 1, pos + 1);
    const char c = text[pos];
    if (c == 'E') {
        ++pos;
        return SpExpr::leaf();
    }
    if (c != 'S' && c != 'P')
        throw ParseError(std::string("unexpected character '") + c + "'", 1, pos + 1);
    ++pos;
    if (pos >= text.size() || text[pos] != '(')
        throw ParseError("expected '('", 1, pos + 1);
    ++pos;
    std::vector<SpExpr> kids;
    for (;;) {
        kids.push_back(parse_expr_at(text, pos));
        if (pos >= text.size())
            throw ParseError("unterminated node", 1, pos + 1);
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] == ')') {
            ++pos;
            break;
        }
        throw ParseError(std::string("unexpected character '") + text[pos] + "'", 1, pos + 1);
    }
    if (kids.size() < 2)
        throw ParseError("node needs at least two children", 1, pos);
    return c == 'S' ? SpExpr::serial(kids) : SpExpr::parallel(kids);
}

} // namespace detail

inline SpExpr parse_expr(std::string_view text)
{
    std::size_t pos = 0;
    SpExpr e = detail::parse_expr_at(text, pos);
    if (pos != text.size())
        throw ParseError("trailing characters after expression", 1, pos + 1);
    return e;
}

/// Path with \p edges edges between its two ends.
inline SpExpr path_expr(int edges)
{
    if (edges < 1)
        throw InvalidArgument("path needs at least one edge");
    if (edges == 1)
        return SpExpr::leaf();
    std::vector<SpExpr> parts(static_cast<std::size_t>(edges), SpExpr::leaf());
    return SpExpr::serial(parts);
}

} // namespace spcrit

template <>
struct std::hash<spcrit::CanonKey> {
    std::size_t operator()(const spcrit::CanonKey& k) const noexcept { return std::hash<std::string>{}(k.bytes); }
};
