#pragma once

#include <homcost/costs.hpp>
#include <homcost/digraph.hpp>
#include <homcost/transforms.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace homcost {

/// The directed cycle 0 -> 1 -> ... -> k-1 -> 0.
inline auto directed_cycle(int k) -> Digraph
{
    if (k < 2)
        throw std::invalid_argument("directed cycle needs k >= 2");
    std::vector<Arc> arcs;
    for (int i = 0; i < k; ++i)
        arcs.emplace_back(i, (i + 1) % k);
    return Digraph(k, arcs);
}

/// Colors the weak component of `anchor` by breadth-first propagation:
/// out-neighbours get color + 1 and in-neighbours color - 1, modulo k.
/// Returns one entry per vertex of `source` (-1 outside the component), or
/// nullopt when some vertex would receive two different colors.
inline auto propagate_cycle_coloring(const Digraph & source, int k, int anchor, int anchor_color)
    -> std::optional<std::vector<int>>
{
    if (k < 2)
        throw std::invalid_argument("cycle length must be at least 2");
    if (anchor < 0 || anchor >= source.size())
        throw std::invalid_argument("anchor vertex out of range");
    if (anchor_color < 0 || anchor_color >= k)
        throw std::invalid_argument("anchor color out of range");

    std::vector<int> color(source.size(), -1);
    std::vector<int> queue{anchor};
    color[anchor] = anchor_color;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        auto visit = [&](int w, int wanted) {
            if (color[w] == -1) {
                color[w] = wanted;
                queue.push_back(w);
                return true;
            }
            return color[w] == wanted;
        };
        for (int w : source.out(v))
            if (! visit(w, (color[v] + 1) % k))
                return std::nullopt;
        for (int w : source.in(v))
            if (! visit(w, (color[v] + k - 1) % k))
                return std::nullopt;
    }
    return color;
}

/// Minimum-cost homomorphism to the directed k-cycle. Each weak component has
/// either no coloring or exactly k, all rotations of one another; the
/// cheapest rotation is kept per component (ties go to the smaller anchor
/// color, anchored at the component's lowest vertex).
inline auto solve_min_cycle(const Digraph & source, int k, const CostMatrix & c) -> std::optional<Homomorphism>
{
    if (k < 2)
        throw std::invalid_argument("cycle length must be at least 2");
    check_dimensions(c, source.size(), k);

    Homomorphism result{std::vector<int>(source.size(), -1), 0};
    for (const auto & component : weak_components(source)) {
        auto base = propagate_cycle_coloring(source, k, component.front(), 0);
        if (! base)
            return std::nullopt;
        int best_shift = 0;
        Cost best_cost = 0;
        for (int shift = 0; shift < k; ++shift) {
            Cost cost = 0;
            for (int u : component)
                cost += c(u, ((*base)[u] + shift) % k);
            if (shift == 0 || cost < best_cost) {
                best_shift = shift;
                best_cost = cost;
            }
        }
        for (int u : component)
            result.image[u] = ((*base)[u] + best_shift) % k;
        result.cost += best_cost;
    }
    return result;
}

inline auto solve_max_cycle(const Digraph & source, int k, const CostMatrix & c) -> std::optional<Homomorphism>
{
    check_dimensions(c, source.size(), k);
    auto h = solve_min_cycle(source, k, max_min_transform(c));
    if (h)
        h->cost = mapping_cost(c, h->image);
    return h;
}

}
