#pragma once

#include <homcost/errors.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homcost {

using Arc = std::pair<int, int>;
using Edge = std::pair<int, int>;

/// Loop-free simple digraph on vertices 0..n-1. Out- and in-lists are kept
/// sorted, so arc iteration order is deterministic.
class Digraph {
public:
    Digraph() = default;

    explicit Digraph(int n) :
        _out(check_order(n)),
        _in(n)
    {
    }

    Digraph(int n, const std::vector<Arc> & arcs) :
        Digraph(n)
    {
        for (auto [u, v] : arcs) {
            check_arc(u, v);
            _out[u].push_back(v);
            _in[v].push_back(u);
        }
        for (auto & l : _out) std::sort(l.begin(), l.end());
        for (auto & l : _in) std::sort(l.begin(), l.end());
        for (int u = 0; u < n; ++u)
            if (std::adjacent_find(_out[u].begin(), _out[u].end()) != _out[u].end())
                throw std::invalid_argument("duplicate arc from vertex " + std::to_string(u));
        _arc_count = arcs.size();
    }

    Digraph(int n, std::initializer_list<Arc> arcs) :
        Digraph(n, std::vector<Arc>(arcs))
    {
    }

    auto size() const -> int { return static_cast<int>(_out.size()); }
    auto arc_count() const -> std::size_t { return _arc_count; }

    auto out(int u) const -> const std::vector<int> & { return _out.at(u); }
    auto in(int u) const -> const std::vector<int> & { return _in.at(u); }
    auto out_degree(int u) const -> int { return static_cast<int>(_out.at(u).size()); }
    auto in_degree(int u) const -> int { return static_cast<int>(_in.at(u).size()); }

    auto has_arc(int u, int v) const -> bool
    {
        if (u < 0 || v < 0 || u >= size() || v >= size())
            return false;
        return std::binary_search(_out[u].begin(), _out[u].end(), v);
    }

    void add_arc(int u, int v)
    {
        check_arc(u, v);
        if (has_arc(u, v))
            throw std::invalid_argument("duplicate arc " + std::to_string(u) + " " + std::to_string(v));
        _out[u].insert(std::upper_bound(_out[u].begin(), _out[u].end(), v), v);
        _in[v].insert(std::upper_bound(_in[v].begin(), _in[v].end(), u), u);
        ++_arc_count;
    }

    /// All arcs in lexicographic order.
    auto arcs() const -> std::vector<Arc>
    {
        std::vector<Arc> result;
        result.reserve(_arc_count);
        for (int u = 0; u < size(); ++u)
            for (int v : _out[u])
                result.emplace_back(u, v);
        return result;
    }

    friend auto operator==(const Digraph & a, const Digraph & b) -> bool { return a._out == b._out; }

private:
    static auto check_order(int n) -> int
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        return n;
    }

    void check_arc(int u, int v) const
    {
        if (u < 0 || v < 0 || u >= size() || v >= size())
            throw std::invalid_argument("arc endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
    }

    std::vector<std::vector<int>> _out;
    std::vector<std::vector<int>> _in;
    std::size_t _arc_count = 0;
};

/// Simple undirected graph. `edges()` preserves insertion order and the
/// endpoint order each edge was given in; adjacency lists are sorted.
class UGraph {
public:
    UGraph() = default;

    explicit UGraph(int n)
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        _adj.resize(n);
    }

    UGraph(int n, std::vector<Edge> edges) :
        UGraph(n)
    {
        for (auto [u, v] : edges) {
            check_edge(u, v);
            _adj[u].push_back(v);
            _adj[v].push_back(u);
        }
        for (int u = 0; u < n; ++u) {
            std::sort(_adj[u].begin(), _adj[u].end());
            if (std::adjacent_find(_adj[u].begin(), _adj[u].end()) != _adj[u].end())
                throw std::invalid_argument("duplicate edge at vertex " + std::to_string(u));
        }
        _edges = std::move(edges);
    }

    UGraph(int n, std::initializer_list<Edge> edges) :
        UGraph(n, std::vector<Edge>(edges))
    {
    }

    auto size() const -> int { return static_cast<int>(_adj.size()); }
    auto edge_count() const -> std::size_t { return _edges.size(); }
    auto edges() const -> const std::vector<Edge> & { return _edges; }
    auto neighbours(int u) const -> const std::vector<int> & { return _adj.at(u); }

    auto has_edge(int u, int v) const -> bool
    {
        if (u < 0 || v < 0 || u >= size() || v >= size())
            return false;
        return std::binary_search(_adj[u].begin(), _adj[u].end(), v);
    }

    void add_edge(int u, int v)
    {
        check_edge(u, v);
        if (has_edge(u, v))
            throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        _adj[u].insert(std::upper_bound(_adj[u].begin(), _adj[u].end(), v), v);
        _adj[v].insert(std::upper_bound(_adj[v].begin(), _adj[v].end(), u), u);
        _edges.emplace_back(u, v);
    }

private:
    void check_edge(int u, int v) const
    {
        if (u < 0 || v < 0 || u >= size() || v >= size())
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
    }

    std::vector<std::vector<int>> _adj;
    std::vector<Edge> _edges;
};

namespace detail {

    /// Splits a line into whitespace-separated decimal integers.
    inline auto parse_int_line(std::string_view line, std::size_t line_no) -> std::vector<long long>
    {
        std::vector<long long> values;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
                ++pos;
            if (pos == line.size())
                break;
            std::size_t end = pos;
            while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r')
                ++end;
            long long value = 0;
            auto token = line.substr(pos, end - pos);
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size())
                throw ParseError(line_no, "not an integer: '" + std::string(token) + "'");
            values.push_back(value);
            pos = end;
        }
        return values;
    }

    inline auto is_blank_or_comment(std::string_view line) -> bool
    {
        auto first = line.find_first_not_of(" \t\r");
        return first == std::string_view::npos || line[first] == '#';
    }

    /// Shared reader for the ".dg" and ".ug" formats: header "n m", then m pairs.
    template <typename AddPair_>
    auto parse_pair_file(std::istream & in, AddPair_ && add_pair) -> std::pair<int, std::size_t>
    {
        std::string line;
        std::size_t line_no = 0;
        bool have_header = false;
        long long n = 0, m = 0, seen = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (is_blank_or_comment(line))
                continue;
            auto values = parse_int_line(line, line_no);
            if (! have_header) {
                if (values.size() != 2)
                    throw ParseError(line_no, "header must be 'n m'");
                n = values[0];
                m = values[1];
                if (n < 0 || m < 0 || n > 100'000'000)
                    throw ParseError(line_no, "invalid header counts");
                have_header = true;
                continue;
            }
            if (values.size() != 2)
                throw ParseError(line_no, "expected two vertices");
            if (seen == m)
                throw ParseError(line_no, "more than " + std::to_string(m) + " arcs");
            auto u = values[0], v = values[1];
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError(line_no, "endpoint out of range");
            if (u == v)
                throw ParseError(line_no, "loop at vertex " + std::to_string(u));
            add_pair(static_cast<int>(u), static_cast<int>(v), line_no);
            ++seen;
        }
        if (! have_header)
            throw ParseError(0, "missing 'n m' header");
        if (seen != m)
            throw ParseError(0, "expected " + std::to_string(m) + " arcs, found " + std::to_string(seen));
        return {static_cast<int>(n), static_cast<std::size_t>(m)};
    }
}

inline auto parse_digraph(std::istream & in) -> Digraph
{
    std::vector<std::pair<Arc, std::size_t>> arcs;
    auto [n, m] = detail::parse_pair_file(in, [&](int u, int v, std::size_t line_no) {
        arcs.push_back({{u, v}, line_no});
    });
    Digraph result(n);
    for (auto & [arc, line_no] : arcs) {
        if (result.has_arc(arc.first, arc.second))
            throw ParseError(line_no, "duplicate arc " + std::to_string(arc.first) + " " + std::to_string(arc.second));
        result.add_arc(arc.first, arc.second);
    }
    return result;
}

inline auto parse_digraph(std::string_view text) -> Digraph
{
    std::istringstream in{std::string(text)};
    return parse_digraph(in);
}

inline auto parse_ugraph(std::istream & in) -> UGraph
{
    std::vector<std::pair<Edge, std::size_t>> edges;
    auto [n, m] = detail::parse_pair_file(in, [&](int u, int v, std::size_t line_no) {
        edges.push_back({{u, v}, line_no});
    });
    UGraph result(n);
    for (auto & [edge, line_no] : edges) {
        if (result.has_edge(edge.first, edge.second))
            throw ParseError(line_no, "duplicate edge " + std::to_string(edge.first) + " " + std::to_string(edge.second));
        result.add_edge(edge.first, edge.second);
    }
    return result;
}

inline auto parse_ugraph(std::string_view text) -> UGraph
{
    std::istringstream in{std::string(text)};
    return parse_ugraph(in);
}

inline void write_digraph(std::ostream & out, const Digraph & g)
{
    out << g.size() << ' ' << g.arc_count() << '\n';
    for (auto [u, v] : g.arcs())
        out << u << ' ' << v << '\n';
}

inline void write_ugraph(std::ostream & out, const UGraph & g)
{
    out << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

inline auto dual(const Digraph & g) -> Digraph
{
    std::vector<Arc> arcs;
    arcs.reserve(g.arc_count());
    for (auto [u, v] : g.arcs())
        arcs.emplace_back(v, u);
    return Digraph(g.size(), arcs);
}

/// Image of `g` under the vertex bijection `perm` (old label -> new label).
inline auto relabel(const Digraph & g, const std::vector<int> & perm) -> Digraph
{
    if (static_cast<int>(perm.size()) != g.size())
        throw std::invalid_argument("relabel: permutation size mismatch");
    std::vector<Arc> arcs;
    arcs.reserve(g.arc_count());
    for (auto [u, v] : g.arcs())
        arcs.emplace_back(perm[u], perm[v]);
    return Digraph(g.size(), arcs);
}

/// Repeatedly deletes in-degree-zero vertices; returns them in deletion order.
/// The order covers every vertex exactly when `g` is acyclic.
inline auto peel_sources(const Digraph & g) -> std::vector<int>
{
    std::vector<int> indeg(g.size());
    std::vector<int> order;
    for (int v = 0; v < g.size(); ++v) {
        indeg[v] = g.in_degree(v);
        if (indeg[v] == 0)
            order.push_back(v);
    }
    for (std::size_t head = 0; head < order.size(); ++head)
        for (int w : g.out(order[head]))
            if (--indeg[w] == 0)
                order.push_back(w);
    return order;
}

inline auto is_acyclic(const Digraph & g) -> bool
{
    return static_cast<int>(peel_sources(g).size()) == g.size();
}

enum class ClosureLoops {
    drop,   ///< self-reachability on cycles is silently omitted
    reject  ///< throw CyclicClosureError if any vertex reaches itself
};

/// Arc (u, v) for every u != v such that v is reachable from u by a path of
/// at least one arc. Uses one graph search per source.
inline auto transitive_closure(const Digraph & g, ClosureLoops loops = ClosureLoops::drop) -> Digraph
{
    const int n = g.size();
    std::vector<Arc> arcs;
    std::vector<int> stack;
    std::vector<char> seen(n);
    for (int s = 0; s < n; ++s) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(g.out(s).begin(), g.out(s).end());
        for (int v : stack)
            seen[v] = 1;
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.out(v))
                if (! seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (seen[s] && loops == ClosureLoops::reject)
            throw CyclicClosureError(s);
        for (int v = 0; v < n; ++v)
            if (v != s && seen[v])
                arcs.emplace_back(s, v);
    }
    return Digraph(n, arcs);
}

inline auto is_transitive(const Digraph & g) -> bool
{
    for (int u = 0; u < g.size(); ++u)
        for (int v : g.out(u))
            for (int w : g.out(v))
                if (w != u && ! g.has_arc(u, w))
                    return false;
    return true;
}

struct StrongComponents {
    std::vector<int> component_of;
    /// Components in a topological order of the condensation (sources first);
    /// each component's vertices are sorted.
    std::vector<std::vector<int>> components;
};

/// Tarjan's algorithm, iterative.
inline auto strong_components(const Digraph & g) -> StrongComponents
{
    const int n = g.size();
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<char> on_stack(n, 0);
    std::vector<std::vector<int>> reversed_components;
    int next_index = 0;

    struct Frame {
        int v;
        std::size_t next_child;
    };
    std::vector<Frame> call_stack;

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1)
            continue;
        call_stack.push_back({root, 0});
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (! call_stack.empty()) {
            auto & frame = call_stack.back();
            int v = frame.v;
            if (frame.next_child < g.out(v).size()) {
                int w = g.out(v)[frame.next_child++];
                if (index[w] == -1) {
                    index[w] = low[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call_stack.push_back({w, 0});
                }
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<int> component;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    component.push_back(w);
                } while (w != v);
                std::sort(component.begin(), component.end());
                reversed_components.push_back(std::move(component));
            }
            call_stack.pop_back();
            if (! call_stack.empty())
                low[call_stack.back().v] = std::min(low[call_stack.back().v], low[v]);
        }
    }

    StrongComponents result;
    result.component_of.assign(n, -1);
    result.components.assign(reversed_components.rbegin(), reversed_components.rend());
    for (std::size_t c = 0; c < result.components.size(); ++c)
        for (int v : result.components[c])
            result.component_of[v] = static_cast<int>(c);
    return result;
}

/// Components of the underlying undirected graph, ordered by smallest vertex,
/// each sorted.
inline auto weak_components(const Digraph & g) -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> result;
    std::vector<char> seen(g.size(), 0);
    for (int root = 0; root < g.size(); ++root) {
        if (seen[root])
            continue;
        std::vector<int> component{root};
        seen[root] = 1;
        for (std::size_t head = 0; head < component.size(); ++head) {
            int v = component[head];
            for (const auto * neighbours : {&g.out(v), &g.in(v)})
                for (int w : *neighbours)
                    if (! seen[w]) {
                        seen[w] = 1;
                        component.push_back(w);
                    }
        }
        std::sort(component.begin(), component.end());
        result.push_back(std::move(component));
    }
    return result;
}

inline auto is_semicomplete(const Digraph & g) -> bool
{
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (! g.has_arc(u, v) && ! g.has_arc(v, u))
                return false;
    return true;
}

inline auto read_digraph_file(const std::string & path) -> Digraph
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open " + path);
    return parse_digraph(in);
}

inline auto read_ugraph_file(const std::string & path) -> UGraph
{
    std::ifstream in(path);
    if (! in)
        throw std::runtime_error("cannot open " + path);
    return parse_ugraph(in);
}

}
