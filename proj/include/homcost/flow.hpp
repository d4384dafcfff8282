#pragma once

#include <homcost/costs.hpp>

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

namespace homcost {

/// Dinic's max-flow on an explicit residual network. Arcs are scanned in
/// insertion order, so results are reproducible.
class MaxFlow {
public:
    static constexpr Cost infinite = Cost{1} << 50;

    explicit MaxFlow(int nodes) :
        _adj(nodes)
    {
    }

    auto node_count() const -> int { return static_cast<int>(_adj.size()); }

    /// Returns the arc id; `id ^ 1` is its residual twin.
    auto add_arc(int from, int to, Cost capacity) -> int
    {
        int id = static_cast<int>(_arcs.size());
        _arcs.push_back({to, capacity});
        _adj[from].push_back(id);
        _arcs.push_back({from, 0});
        _adj[to].push_back(id + 1);
        return id;
    }

    auto residual(int id) const -> Cost { return _arcs[id].residual; }
    void set_residual(int id, Cost value) { _arcs[id].residual = value; }
    auto head(int id) const -> int { return _arcs[id].to; }

    auto max_flow(int source, int sink) -> Cost
    {
        Cost total = 0;
        while (build_levels(source, sink)) {
            _next.assign(_adj.size(), 0);
            while (Cost pushed = augment(source, sink, infinite))
                total += pushed;
        }
        return total;
    }

    /// Nodes reachable from `from` along arcs with positive residual capacity.
    auto reachable_from(int from) const -> std::vector<char>
    {
        std::vector<char> seen(_adj.size(), 0);
        std::vector<int> stack{from};
        seen[from] = 1;
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int id : _adj[v])
                if (_arcs[id].residual > 0 && ! seen[_arcs[id].to]) {
                    seen[_arcs[id].to] = 1;
                    stack.push_back(_arcs[id].to);
                }
        }
        return seen;
    }

private:
    struct ResidualArc {
        int to;
        Cost residual;
    };

    auto build_levels(int source, int sink) -> bool
    {
        _level.assign(_adj.size(), -1);
        std::queue<int> queue;
        _level[source] = 0;
        queue.push(source);
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int id : _adj[v])
                if (_arcs[id].residual > 0 && _level[_arcs[id].to] < 0) {
                    _level[_arcs[id].to] = _level[v] + 1;
                    queue.push(_arcs[id].to);
                }
        }
        return _level[sink] >= 0;
    }

    // iterative blocking-flow step would be faster, but depths here are small
    auto augment(int v, int sink, Cost limit) -> Cost
    {
        if (v == sink)
            return limit;
        for (auto & i = _next[v]; i < _adj[v].size(); ++i) {
            int id = _adj[v][i];
            auto & arc = _arcs[id];
            if (arc.residual <= 0 || _level[arc.to] != _level[v] + 1)
                continue;
            if (Cost pushed = augment(arc.to, sink, std::min(limit, arc.residual))) {
                arc.residual -= pushed;
                _arcs[id ^ 1].residual += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> _adj;
    std::vector<ResidualArc> _arcs;
    std::vector<int> _level;
    std::vector<std::size_t> _next;
};

/// s-t flow with per-arc lower bounds. `minimise()` first finds a feasible
/// flow through the usual demand/supply reduction (one max-flow), then pushes
/// as much flow as possible back from t to s (a second max-flow).
class LowerBoundedFlow {
public:
    LowerBoundedFlow(int nodes, int source, int sink) :
        _network(nodes + 2),
        _excess(nodes + 2, 0),
        _source(source),
        _sink(sink)
    {
    }

    void add_arc(int from, int to, Cost lower, Cost capacity)
    {
        if (lower < 0 || capacity < lower)
            throw std::invalid_argument("arc bounds must satisfy 0 <= lower <= capacity");
        _network.add_arc(from, to, capacity - lower);
        _excess[to] += lower;
        _excess[from] -= lower;
    }

    /// Minimum flow value, or nullopt if no flow meets the lower bounds.
    auto minimise() -> std::optional<Cost>
    {
        const int super_source = _network.node_count() - 2, super_sink = _network.node_count() - 1;
        int back_arc = _network.add_arc(_sink, _source, MaxFlow::infinite);
        std::vector<int> demand_arcs;
        Cost required = 0;
        for (int v = 0; v < super_source; ++v) {
            if (_excess[v] > 0) {
                demand_arcs.push_back(_network.add_arc(super_source, v, _excess[v]));
                required += _excess[v];
            }
            else if (_excess[v] < 0)
                demand_arcs.push_back(_network.add_arc(v, super_sink, -_excess[v]));
        }
        if (_network.max_flow(super_source, super_sink) != required)
            return std::nullopt;

        // value of the feasible flow is what circulates through t -> s
        Cost value = _network.residual(back_arc ^ 1);
        _network.set_residual(back_arc, 0);
        _network.set_residual(back_arc ^ 1, 0);
        for (int id : demand_arcs) {
            _network.set_residual(id, 0);
            _network.set_residual(id ^ 1, 0);
        }
        value -= _network.max_flow(_sink, _source);
        _minimised = true;
        return value;
    }

    /// After `minimise()`: nodes reachable from the sink in the residual
    /// network, i.e. the sink side of a minimum cut.
    auto sink_side() const -> std::vector<char>
    {
        if (! _minimised)
            throw std::logic_error("sink_side() before minimise()");
        return _network.reachable_from(_sink);
    }

private:
    MaxFlow _network;
    std::vector<Cost> _excess;
    int _source, _sink;
    bool _minimised = false;
};

}
