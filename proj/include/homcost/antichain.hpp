#pragma once

#include <homcost/digraph.hpp>
#include <homcost/flow.hpp>
#include <homcost/product.hpp>

#include <stdexcept>
#include <vector>

namespace homcost {

/// A strict partial order (transitive, irreflexive, antisymmetric) with
/// positive element weights.
struct WeightedPoset {
    Digraph order;
    std::vector<Cost> weight;
};

/// The transitive orientation G' of a product built from a transitive DAG and
/// the canonical acyclic tournament.
using OrientedProduct = WeightedPoset;

struct Antichain {
    std::vector<int> members;
    Cost weight = 0;
};

inline auto is_strict_order(const Digraph & g) -> bool
{
    for (int u = 0; u < g.size(); ++u)
        for (int v : g.out(u))
            if (g.has_arc(v, u))
                return false;
    return is_transitive(g);
}

/// Orients the product of `closed_source` (transitively closed, acyclic) and
/// the acyclic tournament 0 < 1 < ... < p-1: x_i -> y_j whenever xy is an arc
/// and j <= i, and x_i -> x_j whenever j < i.
inline auto orient_product(const HomProduct & product, const Digraph & closed_source) -> OrientedProduct
{
    if (closed_source.size() != product.source_size)
        throw std::invalid_argument("orient_product: source size does not match the product");
    if (! is_acyclic(closed_source))
        throw std::invalid_argument("orient_product: source digraph has a cycle");
    if (! is_transitive(closed_source))
        throw std::invalid_argument("orient_product: source digraph is not transitively closed");

    const int n = product.source_size, p = product.target_size;
    std::vector<Arc> arcs;
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < i; ++j)
                arcs.emplace_back(product.encode(x, i), product.encode(x, j));
    for (auto [x, y] : closed_source.arcs())
        for (int i = 0; i < p; ++i)
            for (int j = 0; j <= i; ++j)
                arcs.emplace_back(product.encode(x, i), product.encode(y, j));

    OrientedProduct result{Digraph(n * p, arcs), product.weight};

    // the orientation must cover the product's edges exactly once each
    if (result.order.arc_count() != product.graph.edge_count())
        throw std::invalid_argument("orient_product: product was not built over the canonical acyclic tournament");
    for (auto [a, b] : result.order.arcs())
        if (! product.graph.has_edge(a, b))
            throw std::invalid_argument("orient_product: product was not built over the canonical acyclic tournament");
    return result;
}

/// Maximum-weight antichain by weighted Dilworth duality. Each element v is
/// split into v_in -> v_out with lower bound weight(v); order relations and
/// source/sink attachments are uncapacitated. The minimum feasible s-t flow
/// equals the heaviest antichain, which is read off the minimum cut: elements
/// whose split arc crosses from the source side to the sink side.
inline auto max_weight_antichain(const WeightedPoset & poset) -> Antichain
{
    const int n = poset.order.size();
    if (static_cast<int>(poset.weight.size()) != n)
        throw std::invalid_argument("max_weight_antichain: weight vector size mismatch");
    for (Cost w : poset.weight)
        if (w < 1)
            throw std::invalid_argument("max_weight_antichain: weights must be positive");
    if (! is_strict_order(poset.order))
        throw std::invalid_argument("max_weight_antichain: order is not a strict partial order");
    if (n == 0)
        return {};

    const int source = 2 * n, sink = 2 * n + 1;
    auto in = [](int v) { return 2 * v; };
    auto out = [](int v) { return 2 * v + 1; };

    LowerBoundedFlow flow(2 * n + 2, source, sink);
    for (int v = 0; v < n; ++v) {
        flow.add_arc(source, in(v), 0, MaxFlow::infinite);
        flow.add_arc(in(v), out(v), poset.weight[v], MaxFlow::infinite);
        flow.add_arc(out(v), sink, 0, MaxFlow::infinite);
    }
    for (auto [u, v] : poset.order.arcs())
        flow.add_arc(out(u), in(v), 0, MaxFlow::infinite);

    auto value = flow.minimise();
    if (! value)
        throw std::logic_error("max_weight_antichain: chain-cover network infeasible");

    auto sink_side = flow.sink_side();
    Antichain result;
    for (int v = 0; v < n; ++v)
        if (! sink_side[in(v)] && sink_side[out(v)]) {
            result.members.push_back(v);
            result.weight += poset.weight[v];
        }
    if (result.weight != *value)
        throw std::logic_error("max_weight_antichain: cut weight differs from minimum flow");
    return result;
}

}
