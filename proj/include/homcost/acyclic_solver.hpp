#pragma once

#include <homcost/antichain.hpp>
#include <homcost/costs.hpp>
#include <homcost/digraph.hpp>
#include <homcost/product.hpp>
#include <homcost/transforms.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace homcost {

/// The acyclic tournament on `levels` vertices with arcs i -> j for i < j.
inline auto acyclic_tournament(int levels) -> Digraph
{
    std::vector<Arc> arcs;
    for (int i = 0; i < levels; ++i)
        for (int j = i + 1; j < levels; ++j)
            arcs.emplace_back(i, j);
    return Digraph(levels, arcs);
}

/// Maximum-cost homomorphism to the acyclic tournament on `levels` vertices.
/// Pipeline: acyclicity check, transitive closure, product, transitive
/// orientation, maximum-weight antichain, read off the homomorphism.
inline auto solve_max_acyclic(const Digraph & source, int levels, const CostMatrix & c) -> std::optional<Homomorphism>
{
    if (levels < 1)
        throw std::invalid_argument("acyclic target needs at least one vertex");
    check_dimensions(c, source.size(), levels);
    if (! is_acyclic(source))
        return std::nullopt;

    const auto target = acyclic_tournament(levels);
    const auto closed = transitive_closure(source, ClosureLoops::reject);
    const auto product = homomorphic_product(closed, target, c);
    const auto antichain = max_weight_antichain(orient_product(product, closed));

    // lifted weights make the heaviest antichain also a largest one
    if (static_cast<int>(antichain.members.size()) != source.size())
        return std::nullopt;
    return indset_to_hom(antichain.members, source, target, c);
}

inline auto solve_min_acyclic(const Digraph & source, int levels, const CostMatrix & c) -> std::optional<Homomorphism>
{
    check_dimensions(c, source.size(), levels);
    auto h = solve_max_acyclic(source, levels, max_min_transform(c));
    if (h)
        h->cost = mapping_cost(c, h->image);
    return h;
}

inline auto solve_list_acyclic(const Digraph & source, int levels, const ListAssignment & lists)
    -> std::optional<Homomorphism>
{
    lists.check(source.size(), levels);
    if (lists.has_empty_list())
        return std::nullopt;
    auto h = solve_min_acyclic(source, levels, lists_to_costs(lists, levels));
    if (! h || h->cost != source.size())
        return std::nullopt;
    return h;
}

/// The unique topological order of an acyclic tournament, or nullopt when `h`
/// is not one. `order[k]` is the vertex at level k.
inline auto acyclic_tournament_order(const Digraph & h) -> std::optional<std::vector<int>>
{
    const int p = h.size();
    if (h.arc_count() != static_cast<std::size_t>(p) * (p - 1) / 2 || ! is_semicomplete(h))
        return std::nullopt;
    std::vector<int> order = peel_sources(h);
    if (static_cast<int>(order.size()) != p)
        return std::nullopt;
    return order;
}

}
