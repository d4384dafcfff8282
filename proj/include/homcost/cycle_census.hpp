#pragma once

#include <homcost/digraph.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace homcost {

struct CycleCensus {
    int two_cycles = 0;
    int three_cycles = 0;
    int max_scc_size = 0;
    bool at_most_one_cycle = true;
    /// Present iff the digraph has exactly one directed cycle. A 3-cycle
    /// starts at its smallest vertex and follows the arcs; a 2-cycle is sorted.
    std::optional<std::vector<int>> unique_cycle_vertices;

    friend auto operator==(const CycleCensus &, const CycleCensus &) -> bool = default;
};

/// Cycle structure of a semicomplete digraph. A semicomplete digraph has at
/// most one cycle iff every strong component has at most three vertices, no
/// 3-vertex component carries a 2-cycle, and there is at most one 2- or
/// 3-cycle in total.
inline auto cycle_census(const Digraph & h) -> CycleCensus
{
    if (! is_semicomplete(h))
        throw std::invalid_argument("cycle census needs a semicomplete digraph");

    const int n = h.size();
    CycleCensus census;
    std::vector<int> last_two, last_three;

    for (int u = 0; u < n; ++u)
        for (int v : h.out(u))
            if (u < v && h.has_arc(v, u)) {
                ++census.two_cycles;
                last_two = {u, v};
            }

    // each directed triangle counted once, from its smallest vertex
    for (int u = 0; u < n; ++u)
        for (int v : h.out(u))
            if (v > u)
                for (int w : h.out(v))
                    if (w > u && w != v && h.has_arc(w, u)) {
                        ++census.three_cycles;
                        last_three = {u, v, w};
                    }

    auto scc = strong_components(h);
    bool three_with_two = false;
    for (const auto & component : scc.components) {
        census.max_scc_size = std::max(census.max_scc_size, static_cast<int>(component.size()));
        if (component.size() == 3)
            for (int a : component)
                for (int b : component)
                    if (a < b && h.has_arc(a, b) && h.has_arc(b, a))
                        three_with_two = true;
    }

    census.at_most_one_cycle = census.max_scc_size <= 3 && ! three_with_two
        && census.two_cycles + census.three_cycles <= 1;
    if (census.at_most_one_cycle && census.two_cycles == 1)
        census.unique_cycle_vertices = last_two;
    else if (census.at_most_one_cycle && census.three_cycles == 1)
        census.unique_cycle_vertices = last_three;
    return census;
}

}
